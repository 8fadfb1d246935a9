#pragma once

#include "hermite_zeros/asymptotic.hpp"
#include "hermite_zeros/comparison.hpp"
#include "hermite_zeros/errors.hpp"
#include "hermite_zeros/format.hpp"
#include "hermite_zeros/hermite_oracle.hpp"
#include "hermite_zeros/quadrature.hpp"
#include "hermite_zeros/segment_solver.hpp"
