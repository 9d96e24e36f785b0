#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ordinary/errors.hpp"

namespace ordinary {

/// Exact rational. GMP keeps every value reduced with a positive denominator.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" (optional leading '-'). Rejects q = 0 and anything else.
inline Scalar parse_scalar(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-') n = -n;
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Scalar& q) { return q.get_str(10); }

inline int sign(const Scalar& q) { return sgn(q); }

/// Least common multiple of denominators, then divide by the gcd of numerators.
/// Result is a primitive integer vector on the same ray (positive scaling).
inline std::vector<Integer> primitive_integer_vector(const std::vector<Scalar>& v) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& q : v) {
        Integer z = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    if (g > 1)
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

} // namespace ordinary
