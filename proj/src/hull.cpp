#include <algorithm>
#include <stdexcept>

#include "bellpoly/polyhedra.hpp"
#include "double_description.hpp"

namespace bellpoly {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_prime(const Integer& v) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), kPrime);
    return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1U) r = mul_mod(r, a);
        a = mul_mod(a, a);
        e >>= 1U;
    }
    return r;
}

// Rank of the selected integer rows over GF(2^61 - 1), stopping at `target`.
// A modular rank is a lower bound on the rational rank.
std::size_t modular_rank(const std::vector<IntegerVector>& rows, const std::vector<std::size_t>& selected,
                         std::size_t target) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    for (auto r : selected) {
        std::vector<std::uint64_t> w(cols);
        for (std::size_t c = 0; c < cols; ++c) w[c] = mod_prime(rows[r][c]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = w[pivots[b]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                w[c] = (w[c] + kPrime - mul_mod(f, basis[b][c])) % kPrime;
            }
        }
        const auto it = std::find_if(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
        if (it == w.end()) continue;
        const std::size_t p = static_cast<std::size_t>(it - w.begin());
        const std::uint64_t inv = pow_mod(w[p], kPrime - 2);
        for (auto& x : w) x = mul_mod(x, inv);
        basis.push_back(std::move(w));
        pivots.push_back(p);
        if (basis.size() >= target) break;
    }
    return basis.size();
}

std::size_t rational_rank(const std::vector<IntegerVector>& rows, const std::vector<std::size_t>& selected) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<RationalVector> basis;
    std::vector<std::size_t> pivots;
    for (auto r : selected) {
        RationalVector w = to_rational(rows[r]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (w[pivots[b]] == 0) continue;
            const Rational f = w[pivots[b]];
            for (std::size_t c = 0; c < cols; ++c) w[c] -= f * basis[b][c];
        }
        const auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
        if (it == w.end()) continue;
        const std::size_t p = static_cast<std::size_t>(it - w.begin());
        const Rational inv = 1 / w[p];
        for (auto& x : w) x *= inv;
        basis.push_back(std::move(w));
        pivots.push_back(p);
    }
    return basis.size();
}

std::vector<RationalVector> sorted_unique(std::vector<RationalVector> points) {
    std::sort(points.begin(), points.end(), coords_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<RationalVector> first_occurrences(const std::vector<RationalVector>& points) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return coords_less(points[a], points[b]); });
    std::vector<bool> keep(points.size(), false);
    for (std::size_t k = 0; k < order.size(); ++k) {
        keep[order[k]] = k == 0 || points[order[k]] != points[order[k - 1]];
    }
    std::vector<RationalVector> out;
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (keep[k]) out.push_back(points[k]);
    }
    return out;
}

}  // namespace

VRep VRep::from_points(const std::vector<ReducedPoint>& points) {
    VRep v;
    if (!points.empty()) v.dimension = points.front().coords.size();
    v.points.reserve(points.size());
    for (const auto& p : points) v.points.push_back(p.coords);
    v.validate();
    return v;
}

void VRep::validate() const {
    for (const auto& p : points) {
        if (p.size() != dimension) {
            throw std::invalid_argument("point of length " + std::to_string(p.size()) + " in a " +
                                        std::to_string(dimension) + "-dimensional point set");
        }
    }
}

AffineHull affine_hull(const VRep& v) {
    v.validate();
    if (v.points.empty()) throw std::invalid_argument("affine hull of an empty point set");
    const std::size_t d = v.dimension;
    const RationalVector& origin = v.points.front();
    // Fully reduced echelon rows of the difference vectors.
    std::vector<RationalVector> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t k = 1; k < v.points.size() && rows.size() < d; ++k) {
        RationalVector w(d);
        for (std::size_t c = 0; c < d; ++c) w[c] = v.points[k][c] - origin[c];
        for (std::size_t b = 0; b < rows.size(); ++b) {
            if (w[pivots[b]] == 0) continue;
            const Rational f = w[pivots[b]];
            for (std::size_t c = 0; c < d; ++c) w[c] -= f * rows[b][c];
        }
        const auto it = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
        if (it == w.end()) continue;
        const std::size_t p = static_cast<std::size_t>(it - w.begin());
        const Rational inv = 1 / w[p];
        for (auto& x : w) x *= inv;
        for (std::size_t b = 0; b < rows.size(); ++b) {
            if (rows[b][p] == 0) continue;
            const Rational f = rows[b][p];
            for (std::size_t c = 0; c < d; ++c) rows[b][c] -= f * w[c];
        }
        rows.push_back(std::move(w));
        pivots.push_back(p);
    }

    AffineHull hull;
    hull.dimension = rows.size();
    std::vector<std::size_t> order(rows.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
    std::vector<bool> is_free(d, false);
    for (auto k : order) {
        hull.free_coords.push_back(pivots[k]);
        is_free[pivots[k]] = true;
    }
    for (std::size_t c = 0; c < d; ++c) {
        if (is_free[c]) continue;
        hull.dependent_coords.push_back(c);
        // x_c - sum_f R_f[c] x_f = origin_c - sum_f R_f[c] origin_f
        RationalVector coeffs(d);
        coeffs[c] = 1;
        Rational rhs = origin[c];
        for (std::size_t b = 0; b < rows.size(); ++b) {
            const Rational& f = rows[b][c];
            if (f == 0) continue;
            coeffs[pivots[b]] -= f;
            rhs -= f * origin[pivots[b]];
        }
        coeffs.push_back(rhs);
        IntegerVector ints = clear_denominators(coeffs);
        Integer r = ints.back();
        ints.pop_back();
        hull.equations.push_back(LinearEquation::make(std::move(ints), std::move(r)));
    }
    return hull;
}

std::size_t affine_dimension(const VRep& v) { return affine_hull(v).dimension; }

LinearInequality reduce_modulo(const LinearInequality& q, const std::vector<LinearEquation>& equations) {
    IntegerVector coeffs = q.coeffs;
    Integer bound = q.bound;
    for (const auto& e : equations) {
        if (e.coeffs.size() != coeffs.size()) throw std::invalid_argument("equation dimension mismatch");
        std::size_t pivot = e.coeffs.size();
        while (pivot > 0 && e.coeffs[pivot - 1] == 0) --pivot;
        if (pivot == 0) continue;
        --pivot;
        if (coeffs[pivot] == 0) continue;
        // q <- |e_p| q - sign(e_p) q_p e, which zeroes coordinate p and keeps the direction of q.
        const Integer scale = abs(e.coeffs[pivot]);
        const Integer factor = sgn(e.coeffs[pivot]) * coeffs[pivot];
        for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] = scale * coeffs[c] - factor * e.coeffs[c];
        bound = scale * bound - factor * e.rhs;
    }
    return LinearInequality::make(std::move(coeffs), std::move(bound));
}

HRep facets_from_vertices(const VRep& v, const HullOptions& options) {
    v.validate();
    if (v.points.empty()) throw std::invalid_argument("hull of an empty point set");
    const std::vector<RationalVector> points = options.keep_order ? first_occurrences(v.points) : sorted_unique(v.points);
    const AffineHull hull = affine_hull(VRep{v.dimension, sorted_unique(points)});

    HRep out;
    out.dimension = v.dimension;
    out.equations = hull.equations;
    const std::size_t r = hull.dimension;
    if (r == 0) return out;

    // Homogenized rows (-L v_free, L): y = (a, b) with a . v_free <= b.
    std::vector<IntegerVector> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        RationalVector row;
        row.reserve(r + 1);
        for (auto c : hull.free_coords) row.push_back(-p[c]);
        row.emplace_back(1);
        rows.push_back(clear_denominators(row));
    }

    const auto rays = detail::extreme_rays(rows, options.progress);
    out.inequalities.reserve(rays.size());
    for (const auto& ray : rays) {
        std::vector<std::size_t> tight;
        ray.zeros.for_each([&](std::size_t k) { tight.push_back(k); });
        // A facet of an r-dimensional polytope is tight on r affinely
        // independent points: homogenized tight rows of rank r.
        if (modular_rank(rows, tight, r) < r && rational_rank(rows, tight) < r) {
            throw std::logic_error("double description produced a non-facet ray");
        }
        IntegerVector coeffs(v.dimension, 0);
        for (std::size_t k = 0; k < r; ++k) coeffs[hull.free_coords[k]] = ray.direction[k];
        out.inequalities.push_back(LinearInequality::make(std::move(coeffs), ray.direction[r]));
    }
    std::sort(out.inequalities.begin(), out.inequalities.end());
    return out;
}

bool satisfies(const HRep& h, const RationalVector& x) {
    for (const auto& e : h.equations) {
        if (dot(e.coeffs, x) != e.rhs) return false;
    }
    for (const auto& q : h.inequalities) {
        if (!evaluate_inequality(q, x).satisfied) return false;
    }
    return true;
}

}  // namespace bellpoly
