#pragma once

// Umbrella header for the library (the CLI lives in fibrect/cli.hpp).

#include "fibrect/cutoff.hpp"
#include "fibrect/decimal.hpp"
#include "fibrect/errors.hpp"
#include "fibrect/exact_arith.hpp"
#include "fibrect/fibonacci.hpp"
#include "fibrect/quadratic.hpp"
#include "fibrect/rational.hpp"
#include "fibrect/render.hpp"
#include "fibrect/tiling.hpp"
