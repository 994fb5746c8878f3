#pragma once

// Everything except the JSON document, SVG and command-line layers.

#include "ricochet/binary_form.hpp"
#include "ricochet/conic.hpp"
#include "ricochet/degree.hpp"
#include "ricochet/error.hpp"
#include "ricochet/linear_algebra.hpp"
#include "ricochet/mpoly.hpp"
#include "ricochet/pascal.hpp"
#include "ricochet/poly.hpp"
#include "ricochet/projective_line.hpp"
#include "ricochet/quad_ext.hpp"
#include "ricochet/ratfunc.hpp"
#include "ricochet/rational.hpp"
#include "ricochet/rico_algebra.hpp"
#include "ricochet/scalar.hpp"
