#include <algorithm>
#include <stdexcept>

#include "bellpoly/polyhedra.hpp"

namespace bellpoly {

namespace {

// Phase-one revised simplex for  [v_k; 1] . lambda = [x; 1], lambda >= 0,
// with one artificial per row. Entering columns follow Dantzig's rule and
// fall back to Bland's rule after a run of degenerate pivots, which keeps
// the method finite; artificials are never re-entered.
class PhaseOne {
public:
    PhaseOne(const RationalVector& x, const VRep& v) : rows_(v.dimension + 1), n_(v.points.size()) {
        rhs_.resize(rows_);
        flip_.assign(rows_, 1);
        for (std::size_t r = 0; r < v.dimension; ++r) rhs_[r] = x[r];
        rhs_[v.dimension] = 1;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (sgn(rhs_[r]) < 0) {
                flip_[r] = -1;
                rhs_[r] = -rhs_[r];
            }
        }
        // Columns scaled to integers by a positive factor per column; the
        // factor does not change signs of reduced costs or the ratio test
        // up to rescaling of the entering variable, which is undone in
        // weights().
        columns_.resize(n_);
        scale_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            RationalVector col(rows_);
            for (std::size_t r = 0; r < v.dimension; ++r) col[r] = v.points[j][r];
            col[v.dimension] = 1;
            Integer l = 1;
            for (const auto& c : col) l = lcm(l, Integer(c.get_den()));
            scale_[j] = l;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (col[r] == 0) continue;
                Integer e = col[r].get_num() * (l / col[r].get_den());
                if (flip_[r] < 0) e = -e;
                columns_[j].push_back({r, std::move(e)});
            }
        }
        inverse_.assign(rows_, RationalVector(rows_));
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            inverse_[r][r] = 1;
            basis_[r] = n_ + r;
        }
        values_ = rhs_;
    }

    void solve() {
        RationalVector dual(rows_);
        RationalVector direction(rows_);
        std::size_t degenerate = 0;
        while (true) {
            compute_dual(dual);
            const std::size_t entering = choose_entering(dual, degenerate >= kDegenerateLimit);
            if (entering == n_) return;
            for (std::size_t r = 0; r < rows_; ++r) {
                Rational s = 0;
                for (const auto& [c, a] : columns_[entering]) {
                    if (inverse_[r][c] != 0) s += inverse_[r][c] * a;
                }
                direction[r] = s;
            }
            const std::size_t leaving = choose_leaving(direction);
            if (leaving == rows_) throw std::logic_error("phase-one simplex is unbounded");
            if (values_[leaving] == 0)
                ++degenerate;
            else
                degenerate = 0;
            pivot(leaving, entering, direction);
        }
    }

    [[nodiscard]] Rational objective() const {
        Rational sum = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] >= n_) sum += values_[r];
        }
        return sum;
    }

    [[nodiscard]] std::vector<std::pair<std::size_t, Rational>> weights() const {
        std::vector<std::pair<std::size_t, Rational>> out;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < n_ && sgn(values_[r]) > 0) {
                Rational w = values_[r] * Rational(scale_[basis_[r]]);
                out.emplace_back(basis_[r], std::move(w));
            }
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    // Farkas vector in the original (unflipped) row signs.
    [[nodiscard]] RationalVector farkas() const {
        RationalVector dual(rows_);
        compute_dual(dual);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (flip_[r] < 0) dual[r] = -dual[r];
        }
        return dual;
    }

private:
    static constexpr std::size_t kDegenerateLimit = 50;

    struct Entry {
        std::size_t row;
        Integer value;
    };

    void compute_dual(RationalVector& dual) const {
        for (std::size_t c = 0; c < rows_; ++c) {
            Rational s = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (basis_[r] >= n_ && inverse_[r][c] != 0) s += inverse_[r][c];
            }
            dual[c] = s;
        }
    }

    // Reduced costs use the dual scaled to integers. Dantzig picks the
    // largest, Bland the lowest index with a positive value.
    [[nodiscard]] std::size_t choose_entering(const RationalVector& dual, bool bland) const {
        Integer l = 1;
        for (const auto& d : dual) l = lcm(l, Integer(d.get_den()));
        std::vector<Integer> scaled(rows_);
        for (std::size_t r = 0; r < rows_; ++r) scaled[r] = dual[r].get_num() * (l / dual[r].get_den());
        std::size_t best = n_;
        Integer best_value = 0;
        Integer s;
        for (std::size_t j = 0; j < n_; ++j) {
            s = 0;
            for (const auto& [r, a] : columns_[j]) {
                if (scaled[r] != 0) s += scaled[r] * a;
            }
            if (sgn(s) <= 0) continue;
            if (bland) return j;
            if (best == n_ || s > best_value) {
                best = j;
                best_value = s;
            }
        }
        return best;
    }

    [[nodiscard]] std::size_t choose_leaving(const RationalVector& direction) const {
        std::size_t best = rows_;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (sgn(direction[r]) <= 0) continue;
            Rational ratio = values_[r] / direction[r];
            if (best == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[best])) {
                best = r;
                best_ratio = std::move(ratio);
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t entering, const RationalVector& direction) {
        const Rational inv = 1 / direction[row];
        for (auto& x : inverse_[row]) x *= inv;
        values_[row] *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || direction[r] == 0) continue;
            const Rational f = direction[r];
            for (std::size_t c = 0; c < rows_; ++c) {
                if (inverse_[row][c] != 0) inverse_[r][c] -= f * inverse_[row][c];
            }
            values_[r] -= f * values_[row];
        }
        basis_[row] = entering;
    }

    std::size_t rows_;
    std::size_t n_;
    RationalVector rhs_;
    std::vector<int> flip_;
    std::vector<std::vector<Entry>> columns_;
    std::vector<Integer> scale_;
    std::vector<RationalVector> inverse_;
    std::vector<std::size_t> basis_;
    RationalVector values_;
};

}  // namespace

MembershipResult membership(const RationalVector& x, const VRep& v) {
    v.validate();
    if (v.points.empty()) throw std::invalid_argument("membership in an empty point set");
    if (x.size() != v.dimension) {
        throw std::invalid_argument("dimension mismatch: point has " + std::to_string(x.size()) +
                                    " coordinates, polytope lives in " + std::to_string(v.dimension));
    }
    PhaseOne lp(x, v);
    lp.solve();
    if (lp.objective() == 0) {
        return Inside{lp.weights()};
    }
    // y . [v_k; 1] <= 0 for all k and y . [x; 1] > 0, so a = y[0..d) and
    // bound -y[d] separate x from the points.
    const RationalVector y = lp.farkas();
    RationalVector a(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(v.dimension));
    const Rational bound = -y[v.dimension];
    Outside out{LinearInequality::from_rational(a, bound)};
    if (!verify_certificate(x, v, out)) throw std::logic_error("membership produced an invalid separator");
    return out;
}

bool verify_certificate(const RationalVector& x, const VRep& v, const MembershipResult& r) {
    if (const auto* inside = std::get_if<Inside>(&r)) {
        RationalVector sum(v.dimension);
        Rational total = 0;
        for (const auto& [k, w] : inside->weights) {
            if (k >= v.points.size() || sgn(w) <= 0) return false;
            total += w;
            for (std::size_t c = 0; c < v.dimension; ++c) sum[c] += w * v.points[k][c];
        }
        return total == 1 && sum == x;
    }
    const auto& sep = std::get<Outside>(r).separator;
    for (const auto& p : v.points) {
        if (!evaluate_inequality(sep, p).satisfied) return false;
    }
    return !evaluate_inequality(sep, x).satisfied;
}

ContainmentResult contains_polytope(const VRep& inner, const VRep& outer) {
    if (inner.dimension != outer.dimension) throw std::invalid_argument("containment needs equal dimensions");
    ContainmentResult out;
    out.contained = true;
    out.witnesses.reserve(inner.points.size());
    for (const auto& p : inner.points) {
        out.witnesses.push_back(membership(p, outer));
        if (!is_inside(out.witnesses.back())) out.contained = false;
    }
    return out;
}

}  // namespace bellpoly
