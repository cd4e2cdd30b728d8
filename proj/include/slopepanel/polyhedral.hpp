#pragma once

#include "slopepanel/rational.hpp"

#include <cstdint>
#include <vector>

namespace slopepanel {

using IntVector = std::vector<std::int64_t>;

std::int64_t dot(const IntVector& x, const IntVector& y);

/// Basis of the kernel of `rows` (each of length `cols`), from exact row
/// reduction.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

std::size_t matrix_rank(const std::vector<IntVector>& rows, std::size_t cols);

/// Scales a rational vector to the primitive integer vector on its ray.
IntVector primitive_integer_vector(const std::vector<Rational>& v);

bool satisfies(const std::vector<IntVector>& facets, const IntVector& x);

struct ConeRays {
    bool pointed = false;
    std::vector<IntVector> rays;  // primitive, sorted, no duplicates
};

/// Extreme rays of {x : <f, x> >= 0 for all facets f} in Z^dim. Only
/// meaningful when the cone is pointed (facets of full rank).
ConeRays cone_rays(const std::vector<IntVector>& facets, std::size_t dim);

/// Lattice points x of the cone with 0 < <functional, x> <= bound, in
/// lexicographic order. Throws UnboundedSlice when the functional fails to
/// be positive on some ray of the cone or the cone contains a line.
std::vector<IntVector> lattice_points_in_slice(const std::vector<IntVector>& facets, const IntVector& functional,
                                               std::int64_t bound);

}  // namespace slopepanel
