#pragma once

#include "ordinary/errors.hpp"
#include "ordinary/scalar.hpp"
#include "ordinary/plane.hpp"
#include "ordinary/space.hpp"
#include "ordinary/arrangement2d.hpp"
#include "ordinary/hyperplanes.hpp"
#include "ordinary/pseudolines.hpp"
#include "ordinary/oracle.hpp"
#include "ordinary/generators.hpp"
#include "ordinary/io.hpp"
#include "ordinary/svg.hpp"
