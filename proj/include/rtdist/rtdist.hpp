#pragma once

#include "rtdist/chord.hpp"
#include "rtdist/distance.hpp"
#include "rtdist/ecdf.hpp"
#include "rtdist/geometry.hpp"
#include "rtdist/kernels.hpp"
#include "rtdist/piecewise.hpp"
#include "rtdist/quadrature.hpp"
#include "rtdist/random.hpp"
#include "rtdist/rectangle.hpp"
#include "rtdist/selfcheck.hpp"
#include "rtdist/table.hpp"
#include "rtdist/verify.hpp"
