#pragma once

#include <vector>

#include "hartogs/polynomial.hpp"

namespace hartogs {

/// Rising factorial (x+1)_j = (x+1)(x+2)...(x+j), with (x+1)_0 = 1.
/// Scaled by 1/n! it has roots exactly at -1,...,-n, which is the
/// convention the structural-polynomial expansion relies on.
Polynomial pochhammer_basis(unsigned j);

/// Coefficients (c_0,...,c_d) with g = sum c_j (x+1)_j, d = deg g.
/// Unique by triangularity (deg (x+1)_j = j, monic); solved by
/// back-substitution from the top degree. g = 0 yields {}.
std::vector<Rational> to_pochhammer(const Polynomial& g);

/// Reconstructs sum c_j (x+1)_j.
Polynomial from_pochhammer(const std::vector<Rational>& c);

} // namespace hartogs
