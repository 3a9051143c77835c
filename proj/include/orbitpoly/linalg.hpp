#pragma once

#include <optional>
#include <vector>

#include "orbitpoly/field.hpp"

namespace orbitpoly {

/// Dense matrix over a field, row-major.
using Matrix = std::vector<std::vector<Elem>>;

/// Basis of {v : M v = 0}. M has `cols` columns (rows may be empty).
std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix M, std::size_t cols);

/// Some solution of M v = rhs, or nullopt.
std::optional<std::vector<Elem>> solve_linear(const Field& F, Matrix M, std::vector<Elem> rhs, std::size_t cols);

/// Row rank.
std::size_t rank(const Field& F, Matrix M, std::size_t cols);

}  // namespace orbitpoly
