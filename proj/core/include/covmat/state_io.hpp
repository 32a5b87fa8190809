#pragma once

#include <string>

#include "covmat/linalg.hpp"

namespace covmat {

// State files are JSON objects
//   {"dims": [d1, d2, ...], "matrix": [[[re, im], ...], ...]}
// with the matrix given row by row. Loading validates every DensityMatrix
// invariant; a violation raises InvalidState naming the invariant and its
// residual.

DensityMatrix state_from_json(const std::string& text);
std::string state_to_json(const DensityMatrix& rho);

DensityMatrix load_state_file(const std::string& path);
void save_state_file(const std::string& path, const DensityMatrix& rho);

}  // namespace covmat
