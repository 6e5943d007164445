#pragma once

#include "pvx/errors.hpp"
#include "pvx/numeric.hpp"
#include "pvx/padic.hpp"
#include "pvx/poly.hpp"
#include "pvx/quiver.hpp"
#include "pvx/coeff_engine.hpp"
#include "pvx/congruence.hpp"
#include "pvx/vertex.hpp"
#include "pvx/continuation.hpp"
#include "pvx/points.hpp"
#include "pvx/parallel.hpp"
#include "pvx/report.hpp"
#include "pvx/selftest.hpp"
