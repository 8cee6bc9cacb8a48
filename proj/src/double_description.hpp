#pragma once

// Incremental double description for pointed cones {y : H y >= 0}.
// Internal to the polyhedra module.

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bellpoly/rational.hpp"

namespace bellpoly::detail {

struct ArithmeticOverflow : std::overflow_error {
    ArithmeticOverflow() : std::overflow_error("int64 double description overflowed") {}
};

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t k) { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
    [[nodiscard]] bool test(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1U; }

    [[nodiscard]] std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    // popcount(*this & other)
    [[nodiscard]] std::size_t count_and(const Bitset& other) const {
        std::size_t n = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) n += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
        return n;
    }

    // *this = a & b, for equally sized sets.
    void assign_and(const Bitset& a, const Bitset& b) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = a.words_[k] & b.words_[k];
    }

    [[nodiscard]] Bitset operator&(const Bitset& other) const {
        Bitset out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= other.words_[k];
        return out;
    }

    [[nodiscard]] bool subset_of(const Bitset& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & ~other.words_[k]) != 0) return false;
        }
        return true;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    // Stops as soon as fn returns false.
    template <typename Fn>
    void for_each_until(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                if (!fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)))) return;
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// int64 storage, 128-bit intermediates, overflow reported by exception.
struct Int64Arithmetic {
    using Int = std::int64_t;
    using Wide = __int128;

    static Int from(const Integer& v) {
        if (!v.fits_slong_p()) throw ArithmeticOverflow();
        return v.get_si();
    }
    static Integer to_integer(Int v) { return Integer(static_cast<long>(v)); }

    static Wide dot(const Int* h, const Int* y, std::size_t n) {
        Wide sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (h[k] == 0) continue;
            Wide term;
            if (__builtin_mul_overflow(static_cast<Wide>(h[k]), static_cast<Wide>(y[k]), &term) ||
                __builtin_add_overflow(sum, term, &sum)) {
                throw ArithmeticOverflow();
            }
        }
        return sum;
    }

    static int sign(const Wide& v) { return (v > 0) - (v < 0); }

    static Wide gcd(Wide a, Wide b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    // out = sp * yn - sn * yp, divided by its gcd.
    static void combine(const Wide& sp, const Int* yn, const Wide& sn, const Int* yp, Int* out, std::size_t n,
                        std::vector<Wide>& scratch) {
        scratch.resize(n);
        Wide g = 0;
        for (std::size_t k = 0; k < n; ++k) {
            Wide a;
            Wide b;
            if (__builtin_mul_overflow(sp, static_cast<Wide>(yn[k]), &a) ||
                __builtin_mul_overflow(sn, static_cast<Wide>(yp[k]), &b) || __builtin_sub_overflow(a, b, &scratch[k])) {
                throw ArithmeticOverflow();
            }
            g = gcd(g, scratch[k]);
        }
        for (std::size_t k = 0; k < n; ++k) {
            Wide v = g > 1 ? scratch[k] / g : scratch[k];
            if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow();
            out[k] = static_cast<Int>(v);
        }
    }
};

struct GmpArithmetic {
    using Int = Integer;
    using Wide = Integer;

    static Int from(const Integer& v) { return v; }
    static Integer to_integer(const Int& v) { return v; }

    static Wide dot(const Int* h, const Int* y, std::size_t n) {
        Wide sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (h[k] != 0) sum += h[k] * y[k];
        }
        return sum;
    }

    static int sign(const Wide& v) { return sgn(v); }

    static void combine(const Wide& sp, const Int* yn, const Wide& sn, const Int* yp, Int* out, std::size_t n,
                        std::vector<Wide>& /*scratch*/) {
        Integer g = 0;
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = sp * yn[k] - sn * yp[k];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[k].get_mpz_t());
        }
        if (g > 1) {
            for (std::size_t k = 0; k < n; ++k) mpz_divexact(out[k].get_mpz_t(), out[k].get_mpz_t(), g.get_mpz_t());
        }
    }
};

struct ExtremeRay {
    IntegerVector direction;
    Bitset zeros;  // indices of rows tight on this ray
};

// Extreme rays of {y : rows[k] . y >= 0}. `rows` must have full column rank
// (a pointed cone). Rows are inserted in the given order after an initial
// simplex built from the first linearly independent ones.
std::vector<ExtremeRay> extreme_rays(const std::vector<IntegerVector>& rows,
                                     const std::function<void(std::size_t, std::size_t, std::size_t)>& progress);

}  // namespace bellpoly::detail
