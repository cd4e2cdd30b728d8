#include "slopepanel/polyhedral.hpp"

#include "slopepanel/errors.hpp"

#include <algorithm>
#include <numeric>

namespace slopepanel {

std::int64_t dot(const IntVector& x, const IntVector& y) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) s += x[i] * y[i];
    return s;
}

namespace {

// Reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rational lead = m[row][c];
        for (auto& x : m[row]) x /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rational(const std::vector<IntVector>& rows) {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    auto m = rows;
    const auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t matrix_rank(const std::vector<IntVector>& rows, std::size_t cols) {
    auto m = to_rational(rows);
    return row_reduce(m, cols).size();
}

IntVector primitive_integer_vector(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
    std::vector<Integer> scaled;
    Integer g = 0;
    for (const auto& x : v) {
        Integer s = Integer(boost::multiprecision::numerator(x)) * (l / Integer(boost::multiprecision::denominator(x)));
        g = boost::multiprecision::gcd(g, s);
        scaled.push_back(s);
    }
    IntVector out;
    for (auto& s : scaled) {
        if (g != 0) s /= g;
        out.push_back(s.convert_to<std::int64_t>());
    }
    return out;
}

bool satisfies(const std::vector<IntVector>& facets, const IntVector& x) {
    return std::all_of(facets.begin(), facets.end(), [&](const IntVector& f) { return dot(f, x) >= 0; });
}

ConeRays cone_rays(const std::vector<IntVector>& facets, std::size_t dim) {
    ConeRays out;
    out.pointed = matrix_rank(facets, dim) == dim;
    if (!out.pointed) return out;

    // Every extreme ray is cut out by dim-1 linearly independent facets.
    const std::size_t k = dim - 1;
    std::vector<bool> mask(facets.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (mask[i]) rows.push_back(facets[i]);
        }
        const auto kernel = nullspace(to_rational(rows), dim);
        if (kernel.size() != 1) continue;
        auto v = primitive_integer_vector(kernel.front());
        for (int sign : {1, -1}) {
            IntVector s = v;
            for (auto& x : s) x *= sign;
            if (satisfies(facets, s)) out.rays.push_back(s);
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));

    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

std::vector<IntVector> lattice_points_in_slice(const std::vector<IntVector>& facets, const IntVector& functional,
                                               std::int64_t bound) {
    const std::size_t dim = functional.size();
    const auto cone = cone_rays(facets, dim);
    if (!cone.pointed) throw Error(ErrorKind::UnboundedSlice, "cone contains a line");
    for (const auto& r : cone.rays) {
        if (dot(functional, r) <= 0) {
            throw Error(ErrorKind::UnboundedSlice, "degree functional is not positive on every ray");
        }
    }
    std::vector<IntVector> out;
    if (bound <= 0) return out;

    // The slice is the convex hull of the origin and bound/deg(r) * r.
    IntVector lo(dim, 0), hi(dim, 0);
    for (const auto& r : cone.rays) {
        const std::int64_t deg = dot(functional, r);
        for (std::size_t i = 0; i < dim; ++i) {
            const Rational v = Rational(r[i] * bound, deg);
            Integer fl = boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
            if (v < 0 && fl * boost::multiprecision::denominator(v) != boost::multiprecision::numerator(v)) fl -= 1;
            const auto f = fl.convert_to<std::int64_t>();
            lo[i] = std::min(lo[i], f);
            hi[i] = std::max(hi[i], is_integer(v) ? f : f + 1);
        }
    }

    IntVector x = lo;
    while (true) {
        const std::int64_t deg = dot(functional, x);
        if (deg > 0 && deg <= bound && satisfies(facets, x)) out.push_back(x);
        std::size_t i = dim;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            if (i == 0) return out;
        }
        if (dim == 0) return out;
    }
}

}  // namespace slopepanel
