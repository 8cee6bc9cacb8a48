#pragma once

#include <random>
#include <utility>
#include <vector>

#include "bellpoly/correlation.hpp"
#include "bellpoly/polyhedra.hpp"
#include "bellpoly/strategies.hpp"

namespace bellpoly::testing {

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline CorrelationTable deterministic(const Scenario& sc, const std::vector<int>& alpha, const std::vector<int>& beta) {
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i)
        for (int j = 0; j < sc.mb; ++j) t.at(alpha[i], beta[j], i, j) = 1;
    return t;
}

// p(ab|ij) = [a = a_of_j[j]] [b = b_of_i[i]] on (ma, mb) = (b_of_i.size(), a_of_j.size()).
inline CorrelationTable aj_bi_table(const std::vector<int>& a_of_j, const std::vector<int>& b_of_i) {
    const Scenario sc{static_cast<int>(b_of_i.size()), static_cast<int>(a_of_j.size()), 2, 2};
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i)
        for (int j = 0; j < sc.mb; ++j) t.at(a_of_j[j], b_of_i[i], i, j) = 1;
    return t;
}

inline CorrelationTable pr_box() {
    CorrelationTable t(Scenario{2, 2, 2, 2});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if ((a ^ b) == (i & j)) t.at(a, b, i, j) = q(1, 2);
    return t;
}

inline CorrelationTable mix_tables(const Scenario& sc, const std::vector<std::pair<Rational, CorrelationTable>>& parts) {
    RationalVector e(sc.entry_count(), Rational(0));
    for (const auto& [w, t] : parts)
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += w * t.entries()[k];
    return CorrelationTable(sc, e);
}

// Printed chart layout: q_A row, p(00|.0), p(00|.1), p(10|.0), p(10|.1).
inline const std::vector<std::vector<int>> kInequalityCharts = {
    {-1, 0, 0, 0, -1, 1, 0, 1, 0, -1, 0, 1, -1, 0, 0},
    {0, 0, 0, -1, -1, 1, -1, 1, 0, -1, 0, 1, -1, 0, 0},
    {-1, -1, 0, 0, 1, -1, 0, 1, 1, -1, 0, 1, -1, 0, -1},
    {0, 0, 0, -1, -1, 1, -1, 1, 0, -1, -1, 1, -1, 1, 0},
    {-1, 0, 0, 1, -1, -1, 1, -1, 1, 0, -1, 1, 0, -1, -1},
    {-3, 0, 0, 2, -2, 0, 2, 1, -1, -1, -1, 1, -1, 0, -2},
    {-3, 0, 0, 2, -2, 0, 2, 1, -1, -1, -2, 1, -1, 1, -2},
    {-3, 0, 0, 2, -2, 1, 2, 1, -2, -1, -2, 1, -1, 1, -2},
};

inline LinearInequality from_chart(const std::vector<int>& c, int bound) {
    IntegerVector v;
    for (int x : c) v.emplace_back(x);
    return LinearInequality::make(v, Integer(bound));
}

inline CorrelationTable random_table(const Scenario& sc, std::mt19937_64& rng) {
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i) {
        for (int j = 0; j < sc.mb; ++j) {
            std::vector<long> w(static_cast<std::size_t>(sc.ka * sc.kb));
            long sum = 0;
            for (auto& x : w) sum += (x = static_cast<long>(rng() % 6));
            if (sum == 0) sum = w[0] = 1;
            for (int a = 0; a < sc.ka; ++a)
                for (int b = 0; b < sc.kb; ++b) t.at(a, b, i, j) = q(w[static_cast<std::size_t>(a * sc.kb + b)], sum);
        }
    }
    return t;
}

// Binary-output table whose Alice marginal does not depend on j.
inline CorrelationTable random_fixed_admissible(const Scenario& sc, std::mt19937_64& rng) {
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i) {
        const Rational qa = q(static_cast<long>(rng() % 9), 8);
        for (int j = 0; j < sc.mb; ++j) {
            const Rational p00 = qa * q(static_cast<long>(rng() % 5), 4);
            const Rational p10 = (1 - qa) * q(static_cast<long>(rng() % 5), 4);
            t.at(0, 0, i, j) = p00;
            t.at(0, 1, i, j) = qa - p00;
            t.at(1, 0, i, j) = p10;
            t.at(1, 1, i, j) = 1 - qa - p10;
        }
    }
    return t;
}

inline RationalVector random_convex_point(const VRep& v, std::mt19937_64& rng) {
    RationalVector x(v.dimension, Rational(0));
    long total = 0;
    for (int c = 0; c < 3; ++c) {
        const long w = static_cast<long>(rng() % 5) + 1;
        const auto& p = v.points[rng() % v.points.size()];
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += w * p[k];
        total += w;
    }
    for (auto& c : x) c /= total;
    return x;
}

}  // namespace bellpoly::testing
