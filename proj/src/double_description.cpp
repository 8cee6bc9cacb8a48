#include "double_description.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "parallel.hpp"

namespace bellpoly::detail {

namespace {

// First linearly independent rows, in order, up to `cols` of them.
std::vector<std::size_t> independent_rows(const std::vector<IntegerVector>& rows, std::size_t cols) {
    std::vector<RationalVector> basis;
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < rows.size() && chosen.size() < cols; ++r) {
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
        chosen.push_back(r);
    }
    return chosen;
}

// Columns of the inverse of the square matrix formed by `selected` rows.
std::vector<IntegerVector> inverse_columns(const std::vector<IntegerVector>& rows,
                                           const std::vector<std::size_t>& selected) {
    const std::size_t n = selected.size();
    std::vector<RationalVector> a(n, RationalVector(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = rows[selected[r]][c];
        a[r][n + r] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<IntegerVector> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        RationalVector column(n);
        for (std::size_t r = 0; r < n; ++r) column[r] = a[r][n + k];
        IntegerVector ints = clear_denominators(column);
        const Integer g = gcd_of(ints);
        for (auto& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        out[k] = std::move(ints);
    }
    return out;
}

// Arithmetic modulo the Mersenne primes 2^31 - 1 and 2^61 - 1.
struct Mersenne31 {
    static constexpr std::uint64_t p = (std::uint64_t{1} << 31) - 1;
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a * b;
        z = (z & p) + (z >> 31);
        z = (z & p) + (z >> 31);
        return z >= p ? z - p : z;
    }
};

struct Mersenne61 {
    static constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
        const std::uint64_t r = static_cast<std::uint64_t>(z & p) + static_cast<std::uint64_t>(z >> 61);
        return r >= p ? r - p : r;
    }
};

template <typename F>
std::uint64_t inverse_mod(std::uint64_t a) {
    std::uint64_t r = 1;
    for (std::uint64_t e = F::p - 2; e != 0; e >>= 1, a = F::mul(a, a)) {
        if (e & 1U) r = F::mul(r, a);
    }
    return r;
}

// Upper bound (log2) on |minor| over square submatrices of size <= n.
double log2_minor_bound(const std::vector<IntegerVector>& rows, std::size_t n) {
    if (rows.empty() || n == 0) return 0;
    const std::size_t d = rows[0].size();
    // Columns of one sign with entries in {0, 1} in absolute value: up to
    // column negation a 0/1 matrix, whose n x n minors are at most
    // (n + 1)^((n + 1) / 2) / 2^n.
    bool zero_one = true;
    for (std::size_t c = 0; c < d && zero_one; ++c) {
        int sign = 0;
        for (const auto& r : rows) {
            const int s = sgn(r[c]);
            if (s == 0) continue;
            if (abs(r[c]) != 1 || (sign != 0 && s != sign)) {
                zero_one = false;
                break;
            }
            sign = s;
        }
    }
    if (zero_one) {
        const double m = static_cast<double>(n);
        return (m + 1) / 2 * std::log2(m + 1) - m;
    }
    // Hadamard: product of the n largest row norms.
    std::vector<double> norms;
    for (const auto& r : rows) {
        double sum = 0;
        for (const auto& x : r) {
            const double v = x.get_d();
            sum += v * v;
        }
        norms.push_back(std::log2(std::max(sum, 1.0)) / 2);
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    double total = 0;
    for (std::size_t k = 0; k < std::min(n, norms.size()); ++k) total += norms[k];
    return total;
}

class TightRank {
public:
    virtual ~TightRank() = default;
    [[nodiscard]] virtual std::unique_ptr<TightRank> clone() const = 0;
    // True iff the `size` rows in `subset` have rank >= target. Exact when the
    // modulus exceeds every relevant minor; otherwise a `true` is still exact.
    virtual bool reaches(const Bitset& subset, std::size_t size, std::size_t target) = 0;
    // Precomputes for one extreme ray; reaches() then needs subsets of `zeros`
    // until the next focus() or unfocus(). `cache` is filled on first use and
    // must be cleared when `zeros` changes.
    virtual void focus(const Bitset& zeros, std::vector<std::uint64_t>& cache) = 0;
    virtual void unfocus() = 0;
};

template <typename F>
class ModularTightRank final : public TightRank {
public:
    explicit ModularTightRank(const std::vector<IntegerVector>& rows) : d_(rows.empty() ? 0 : rows[0].size()) {
        residues_.reserve(rows.size() * d_);
        const Integer modulus(static_cast<unsigned long>(F::p));
        for (const auto& r : rows) {
            for (const auto& x : r) {
                Integer v = x % modulus;
                if (v < 0) v += modulus;
                residues_.push_back(v.get_ui());
            }
        }
    }

    [[nodiscard]] std::unique_ptr<TightRank> clone() const override {
        return std::make_unique<ModularTightRank>(*this);
    }

    // The tight rows of an extreme ray span a space of dimension d - 1. With
    // a basis B chosen among them and every tight row written in
    // B-coordinates, rows of B are unit vectors and only the remaining rows,
    // restricted to the uncovered coordinates, need elimination.
    void focus(const Bitset& zeros, std::vector<std::uint64_t>& cache) override {
        unfocus();
        if (d_ < 2) return;
        const std::size_t k = d_ - 1;
        if (unit_.empty()) unit_.assign(residues_.size() / d_, -1);
        if (coords_.empty()) coords_.assign(unit_.size() * k, 0);
        if (!cache.empty()) {
            restore(zeros, cache);
            return;
        }
        cache.push_back(kFailed);
        basis_.clear();
        pivots_.clear();
        std::vector<std::size_t> chosen;
        zeros.for_each_until([&](std::size_t r) {
            if (!reduce(r)) return true;
            chosen.push_back(r);
            return pivots_.size() < k;
        });
        if (pivots_.size() != k) return;

        // inverse_ = (B restricted to the pivot columns)^-1
        std::vector<std::uint64_t> a(k * 2 * k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) a[i * 2 * k + j] = residues_[chosen[i] * d_ + pivots_[j]];
            a[i * 2 * k + k + i] = 1;
        }
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (piv < k && a[piv * 2 * k + col] == 0) ++piv;
            if (piv == k) return;
            if (piv != col) {
                for (std::size_t c = 0; c < 2 * k; ++c) std::swap(a[piv * 2 * k + c], a[col * 2 * k + c]);
            }
            const std::uint64_t inv = inverse_mod<F>(a[col * 2 * k + col]);
            for (std::size_t c = 0; c < 2 * k; ++c) a[col * 2 * k + c] = F::mul(a[col * 2 * k + c], inv);
            for (std::size_t r = 0; r < k; ++r) {
                const std::uint64_t f = a[r * 2 * k + col];
                if (r == col || f == 0) continue;
                const std::uint64_t g = F::p - f;
                for (std::size_t c = 0; c < 2 * k; ++c) {
                    if (a[col * 2 * k + c] == 0) continue;
                    const std::uint64_t v = a[r * 2 * k + c] + F::mul(g, a[col * 2 * k + c]);
                    a[r * 2 * k + c] = v >= F::p ? v - F::p : v;
                }
            }
        }
        for (std::size_t i = 0; i < k; ++i) unit_[chosen[i]] = static_cast<int>(i);
        zeros.for_each([&](std::size_t r) {
            focused_rows_.push_back(r);
            if (unit_[r] >= 0) return;
            // coordinates = (row restricted to the pivot columns) * inverse
            std::uint64_t* out = &coords_[r * k];
            std::fill(out, out + k, 0);
            for (std::size_t j = 0; j < k; ++j) {
                const std::uint64_t x = residues_[r * d_ + pivots_[j]];
                if (x == 0) continue;
                const std::uint64_t* inv_row = &a[j * 2 * k + k];
                for (std::size_t c = 0; c < k; ++c) {
                    const std::uint64_t v = out[c] + F::mul(x, inv_row[c]);
                    out[c] = v >= F::p ? v - F::p : v;
                }
            }
        });
        focused_ = true;
        cache.clear();
        for (auto r : focused_rows_) {
            if (unit_[r] >= 0) {
                cache.push_back(static_cast<std::uint64_t>(unit_[r]));
            } else {
                cache.push_back(k);
                cache.insert(cache.end(), coords_.begin() + static_cast<std::ptrdiff_t>(r * k),
                             coords_.begin() + static_cast<std::ptrdiff_t>((r + 1) * k));
            }
        }
        cache.shrink_to_fit();
    }

    void unfocus() override {
        for (auto r : focused_rows_) unit_[r] = -1;
        focused_rows_.clear();
        focused_ = false;
    }

    bool reaches(const Bitset& subset, std::size_t size, std::size_t target) override {
        if (target == 0) return true;
        if (focused_) return reaches_focused(subset, size, target);
        basis_.clear();
        pivots_.clear();
        bool done = false;
        std::size_t left = size;
        subset.for_each_until([&](std::size_t r) {
            --left;
            if (!reduce(r)) return pivots_.size() + left >= target;
            done = pivots_.size() >= target;
            return !done;
        });
        return done;
    }

private:
    static constexpr std::uint64_t kFailed = ~std::uint64_t{0};

    // Per row of `zeros`: its basis slot, or k followed by its coordinates.
    void restore(const Bitset& zeros, const std::vector<std::uint64_t>& cache) {
        if (cache.front() == kFailed) return;
        const std::size_t k = d_ - 1;
        const std::uint64_t* c = cache.data();
        zeros.for_each([&](std::size_t r) {
            focused_rows_.push_back(r);
            const std::uint64_t slot = *c++;
            if (slot < k) {
                unit_[r] = static_cast<int>(slot);
            } else {
                std::copy(c, c + k, &coords_[r * k]);
                c += k;
            }
        });
        focused_ = true;
    }

    // Fraction-free: w <- b_p w - w_p b for every basis row b with pivot p.
    void eliminate(std::uint64_t* w, std::size_t width) const {
        for (std::size_t b = 0; b < pivots_.size(); ++b) {
            const std::uint64_t x = w[pivots_[b]];
            if (x == 0) continue;
            const std::uint64_t* row = &basis_[b * width];
            const std::uint64_t scale = row[pivots_[b]];
            const std::uint64_t g = F::p - x;
            for (std::size_t c = 0; c < width; ++c) {
                const std::uint64_t v = F::mul(scale, w[c]) + F::mul(g, row[c]);
                w[c] = v >= F::p ? v - F::p : v;
            }
        }
    }

    // Reduces row r against basis_; appends it when independent.
    bool reduce(std::size_t r) {
        work_.assign(residues_.begin() + static_cast<std::ptrdiff_t>(r * d_),
                     residues_.begin() + static_cast<std::ptrdiff_t>((r + 1) * d_));
        eliminate(work_.data(), d_);
        std::size_t p = 0;
        while (p < d_ && work_[p] == 0) ++p;
        if (p == d_) return false;
        basis_.insert(basis_.end(), work_.begin(), work_.end());
        pivots_.push_back(p);
        return true;
    }

    bool reaches_focused(const Bitset& subset, std::size_t size, std::size_t target) {
        const std::size_t k = d_ - 1;
        covered_.assign(k, 0);
        std::size_t units = 0;
        subset.for_each([&](std::size_t r) {
            if (unit_[r] >= 0) {
                covered_[static_cast<std::size_t>(unit_[r])] = 1;
                ++units;
            }
        });
        if (units >= target) return true;
        const std::size_t need = target - units;
        std::size_t left = size - units;
        if (left < need) return false;
        free_.clear();
        for (std::size_t c = 0; c < k; ++c) {
            if (!covered_[c]) free_.push_back(c);
        }
        const std::size_t f = free_.size();
        basis_.clear();
        pivots_.clear();
        bool done = false;
        subset.for_each_until([&](std::size_t r) {
            if (unit_[r] >= 0) return true;
            --left;
            work_.resize(f);
            const std::uint64_t* src = &coords_[r * k];
            for (std::size_t c = 0; c < f; ++c) work_[c] = src[free_[c]];
            eliminate(work_.data(), f);
            std::size_t p = 0;
            while (p < f && work_[p] == 0) ++p;
            if (p == f) return pivots_.size() + left >= need;
            basis_.insert(basis_.end(), work_.begin(), work_.end());
            pivots_.push_back(p);
            done = pivots_.size() >= need;
            return !done;
        });
        return done;
    }

    std::size_t d_;
    std::vector<std::uint64_t> residues_;
    std::vector<std::uint64_t> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<std::uint64_t> work_;
    bool focused_ = false;
    std::vector<int> unit_;                    // basis slot of a focused row, -1 otherwise
    std::vector<std::uint64_t> coords_;        // B-coordinates of focused rows, d - 1 per row
    std::vector<std::size_t> focused_rows_;
    std::vector<char> covered_;
    std::vector<std::size_t> free_;
};

template <typename Arith>
class Engine {
public:
    using Int = typename Arith::Int;
    using Wide = typename Arith::Wide;

    Engine(const std::vector<IntegerVector>& rows,
           const std::function<void(std::size_t, std::size_t, std::size_t)>& progress)
        : rows_(rows), progress_(progress), m_(rows.size()), d_(rows.empty() ? 0 : rows[0].size()) {
        flat_.reserve(m_ * d_);
        for (const auto& r : rows_)
            for (const auto& x : r) flat_.push_back(Arith::from(x));
        // Two distinct extreme rays share a tight set of rank at most d - 2,
        // so only minors up to that size matter. Below the modulus a minor
        // vanishes mod p only if it vanishes.
        const double bound = log2_minor_bound(rows_, d_ >= 2 ? d_ - 2 : 0);
        std::unique_ptr<TightRank> rank;
        if (bound < 30.9) {
            rank = std::make_unique<ModularTightRank<Mersenne31>>(rows_);
            rank_exact_ = true;
        } else {
            rank = std::make_unique<ModularTightRank<Mersenne61>>(rows_);
            rank_exact_ = bound < 60.9;
        }
        workers_ = worker_count();
        for (std::size_t w = 1; w < workers_; ++w) ranks_.push_back(rank->clone());
        ranks_.insert(ranks_.begin(), std::move(rank));
    }

    std::vector<ExtremeRay> run() {
        const std::vector<std::size_t> initial = independent_rows(rows_, d_);
        if (initial.size() != d_) throw std::invalid_argument("cone is not pointed (rank-deficient rows)");
        const std::vector<IntegerVector> columns = inverse_columns(rows_, initial);
        for (std::size_t k = 0; k < d_; ++k) {
            Ray ray;
            ray.y.reserve(d_);
            for (const auto& x : columns[k]) ray.y.push_back(Arith::from(x));
            ray.zeros = Bitset(m_);
            for (std::size_t r = 0; r < d_; ++r) {
                if (r != k) ray.zeros.set(initial[r]);
            }
            ray.zero_count = d_ - 1;
            rays_.push_back(std::move(ray));
        }
        std::vector<bool> done(m_, false);
        for (auto r : initial) done[r] = true;
        std::size_t processed = d_;
        for (std::size_t r = 0; r < m_; ++r) {
            if (done[r]) continue;
            add_row(r);
            ++processed;
            if (progress_) progress_(processed, m_, rays_.size());
        }
        std::vector<ExtremeRay> out;
        out.reserve(rays_.size());
        for (auto& ray : rays_) {
            ExtremeRay e;
            e.direction.reserve(d_);
            for (const auto& x : ray.y) e.direction.push_back(Arith::to_integer(x));
            e.zeros = std::move(ray.zeros);
            out.push_back(std::move(e));
        }
        return out;
    }

private:
    struct Ray {
        std::vector<Int> y;
        Bitset zeros;
        std::size_t zero_count = 0;
        std::vector<std::uint64_t> focus;  // TightRank::focus cache
    };

    void add_row(std::size_t row) {
        const Int* h = &flat_[row * d_];
        std::vector<Wide> value(rays_.size());
        std::vector<std::size_t> pos;
        std::vector<std::size_t> neg;
        std::vector<std::size_t> zero;
        for (std::size_t k = 0; k < rays_.size(); ++k) {
            value[k] = Arith::dot(h, rays_[k].y.data(), d_);
            const int s = Arith::sign(value[k]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(k);
        }
        for (auto k : zero) {
            rays_[k].zeros.set(row);
            ++rays_[k].zero_count;
            rays_[k].focus = {};
        }
        if (neg.empty()) return;

        // Candidate pairs are split by positive ray into contiguous chunks;
        // concatenating the chunks in order keeps the result independent of
        // the number of workers.
        const std::size_t needed = d_ >= 2 ? d_ - 2 : 0;
        const std::size_t work = pos.size() * neg.size();
        const std::size_t chunks = work < 200'000 ? 1 : std::min(pos.size(), workers_ * 8);
        std::vector<std::vector<Ray>> created(chunks);
        parallel_chunks(chunks, workers_, [&](std::size_t worker, std::size_t chunk) {
            TightRank& rank = *ranks_[worker];
            std::vector<Wide> scratch;
            Bitset common(m_);
            const std::size_t begin = pos.size() * chunk / chunks;
            const std::size_t end = pos.size() * (chunk + 1) / chunks;
            for (std::size_t k = begin; k < end; ++k) {
                const std::size_t p = pos[k];
                Ray& rp = rays_[p];
                if (rp.zero_count < needed) continue;
                bool focused = false;
                for (auto n : neg) {
                    const Ray& rn = rays_[n];
                    const std::size_t shared = rp.zeros.count_and(rn.zeros);
                    if (shared < needed) continue;
                    if (!focused) {
                        rank.focus(rp.zeros, rp.focus);
                        focused = true;
                    }
                    common.assign_and(rp.zeros, rn.zeros);
                    if (!rank.reaches(common, shared, needed) && (rank_exact_ || !adjacent(common, p, n))) continue;
                    Ray ray;
                    ray.y.resize(d_);
                    Arith::combine(value[p], rn.y.data(), value[n], rp.y.data(), ray.y.data(), d_, scratch);
                    ray.zeros = common;
                    ray.zeros.set(row);
                    ray.zero_count = ray.zeros.count();
                    created[chunk].push_back(std::move(ray));
                }
            }
        });

        std::vector<Ray> next;
        std::size_t total = pos.size() + zero.size();
        for (const auto& c : created) total += c.size();
        next.reserve(total);
        // Keep a stable, input-determined order: surviving rays first, then new ones.
        std::vector<bool> keep(rays_.size(), true);
        for (auto n : neg) keep[n] = false;
        for (std::size_t k = 0; k < rays_.size(); ++k) {
            if (keep[k]) next.push_back(std::move(rays_[k]));
        }
        for (auto& chunk : created)
            for (auto& ray : chunk) next.push_back(std::move(ray));
        rays_ = std::move(next);
    }

    // Combinatorial adjacency: no third ray is tight on every row that is
    // tight on both p and n.
    bool adjacent(const Bitset& common, std::size_t p, std::size_t n) const {
        const std::size_t common_count = common.count();
        for (std::size_t k = 0; k < rays_.size(); ++k) {
            if (k == p || k == n) continue;
            const Ray& w = rays_[k];
            if (w.zero_count < common_count) continue;
            if (common.subset_of(w.zeros)) return false;
        }
        return true;
    }

    const std::vector<IntegerVector>& rows_;
    const std::function<void(std::size_t, std::size_t, std::size_t)>& progress_;
    std::size_t m_;
    std::size_t d_;
    std::vector<Int> flat_;
    std::vector<std::unique_ptr<TightRank>> ranks_;  // one per worker
    bool rank_exact_ = false;
    std::size_t workers_ = 1;
    std::vector<Ray> rays_;
};

}  // namespace

std::vector<ExtremeRay> extreme_rays(const std::vector<IntegerVector>& rows,
                                     const std::function<void(std::size_t, std::size_t, std::size_t)>& progress) {
    try {
        return Engine<Int64Arithmetic>(rows, progress).run();
    } catch (const ArithmeticOverflow&) {
        return Engine<GmpArithmetic>(rows, progress).run();
    }
}

}  // namespace bellpoly::detail
