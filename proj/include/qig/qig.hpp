// Umbrella header.

#pragma once

#include "qig/common.hpp"
#include "qig/families.hpp"
#include "qig/geodesics.hpp"
#include "qig/grover.hpp"
#include "qig/hermitian.hpp"
#include "qig/metrics.hpp"
#include "qig/paths.hpp"
#include "qig/quadrature.hpp"
