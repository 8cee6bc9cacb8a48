#include "bellpoly/correlation.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellpoly {

void Scenario::validate() const {
    if (ma < 1 || mb < 1 || ka < 1 || kb < 1) {
        throw std::invalid_argument("scenario counts must all be >= 1");
    }
}

CorrelationTable::CorrelationTable(Scenario scenario)
    : scenario_(scenario), entries_((scenario.validate(), scenario.entry_count())) {}

CorrelationTable::CorrelationTable(Scenario scenario, RationalVector entries)
    : scenario_(scenario), entries_(std::move(entries)) {
    scenario_.validate();
    if (entries_.size() != scenario_.entry_count()) {
        throw std::invalid_argument("entry count does not match scenario");
    }
}

CorrelationTable CorrelationTable::uniform(Scenario scenario) {
    CorrelationTable t(scenario);
    const Rational cell(1, scenario.ka * scenario.kb);
    std::fill(t.entries_.begin(), t.entries_.end(), cell);
    return t;
}

const Rational& CorrelationTable::checked(int a, int b, int i, int j) const {
    if (a < 0 || a >= scenario_.ka || b < 0 || b >= scenario_.kb || i < 0 || i >= scenario_.ma || j < 0 ||
        j >= scenario_.mb) {
        throw std::out_of_range("table index out of range");
    }
    return at(a, b, i, j);
}

CorrelationTable swap_parties(const CorrelationTable& t) {
    const Scenario& sc = t.scenario();
    CorrelationTable out(sc.swapped());
    for (int i = 0; i < sc.ma; ++i)
        for (int j = 0; j < sc.mb; ++j)
            for (int a = 0; a < sc.ka; ++a)
                for (int b = 0; b < sc.kb; ++b) out.at(b, a, j, i) = t.at(a, b, i, j);
    return out;
}

ValidationReport validate_table(const CorrelationTable& t) {
    ValidationReport report;
    const Scenario& sc = t.scenario();
    for (int i = 0; i < sc.ma; ++i) {
        for (int j = 0; j < sc.mb; ++j) {
            Rational sum = 0;
            for (int a = 0; a < sc.ka; ++a) {
                for (int b = 0; b < sc.kb; ++b) {
                    const Rational& p = t.at(a, b, i, j);
                    if (sgn(p) < 0) {
                        report.violations.push_back("negative entry (" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(i) + "," +
                                                    std::to_string(j) + ")");
                    }
                    sum += p;
                }
            }
            if (sum != 1) {
                report.violations.push_back("slice (" + std::to_string(i) + "," + std::to_string(j) + ") sums to " +
                                            to_string(sum));
            }
        }
    }
    return report;
}

Marginal marginals(const CorrelationTable& t, Party side, int other_input) {
    const Scenario& sc = t.scenario();
    const int other_inputs = side == Party::alice ? sc.mb : sc.ma;
    if (other_input < 0 || other_input >= other_inputs) {
        throw std::out_of_range("other-party input out of range");
    }
    Marginal m;
    m.side = side;
    if (side == Party::alice) {
        m.outputs = sc.ka;
        m.inputs = sc.ma;
        m.values.assign(static_cast<std::size_t>(sc.ka) * sc.ma, Rational(0));
        for (int i = 0; i < sc.ma; ++i)
            for (int a = 0; a < sc.ka; ++a)
                for (int b = 0; b < sc.kb; ++b) m.values[i * sc.ka + a] += t.at(a, b, i, other_input);
    } else {
        m.outputs = sc.kb;
        m.inputs = sc.mb;
        m.values.assign(static_cast<std::size_t>(sc.kb) * sc.mb, Rational(0));
        for (int j = 0; j < sc.mb; ++j)
            for (int b = 0; b < sc.kb; ++b)
                for (int a = 0; a < sc.ka; ++a) m.values[j * sc.kb + b] += t.at(a, b, other_input, j);
    }
    return m;
}

NoSignalingFlags check_no_signaling(const CorrelationTable& t) {
    const Scenario& sc = t.scenario();
    NoSignalingFlags flags{true, true};
    const Marginal alice0 = marginals(t, Party::alice, 0);
    for (int j = 1; j < sc.mb && flags.alice_marginal_well_defined; ++j) {
        flags.alice_marginal_well_defined = marginals(t, Party::alice, j) == alice0;
    }
    const Marginal bob0 = marginals(t, Party::bob, 0);
    for (int i = 1; i < sc.ma && flags.bob_marginal_well_defined; ++i) {
        flags.bob_marginal_well_defined = marginals(t, Party::bob, i) == bob0;
    }
    return flags;
}

std::string to_string(Space space) { return space == Space::fixed ? "fixed" : "bidir"; }

Space parse_space(const std::string& text) {
    if (text == "fixed") return Space::fixed;
    if (text == "bidir") return Space::bidir;
    throw std::invalid_argument("unknown space '" + text + "'");
}

std::size_t reduced_dimension(Space space, int ma, int mb) {
    const auto a = static_cast<std::size_t>(ma);
    const auto b = static_cast<std::size_t>(mb);
    return space == Space::fixed ? a * (2 * b + 1) : 3 * a * b;
}

bool coords_less(const RationalVector& lhs, const RationalVector& rhs) {
    return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

namespace {

void require_binary(const Scenario& sc) {
    if (!sc.binary_outputs()) {
        throw std::invalid_argument("reduced coordinates require two outputs per party");
    }
}

void require_unit_interval(const CorrelationTable& t) {
    for (const auto& p : t.entries()) {
        if (sgn(p) < 0 || p > 1) {
            throw std::domain_error("lifted entry " + to_string(p) + " outside [0,1]");
        }
    }
}

}  // namespace

RationalVector project_linear(Space space, const CorrelationTable& t) {
    const Scenario& sc = t.scenario();
    require_binary(sc);
    const int ma = sc.ma;
    const int mb = sc.mb;
    RationalVector x(reduced_dimension(space, ma, mb));
    if (space == Space::fixed) {
        const std::size_t block = static_cast<std::size_t>(ma) * mb;
        for (int i = 0; i < ma; ++i) x[i] = t.at(0, 0, i, 0) + t.at(0, 1, i, 0);
        for (int j = 0; j < mb; ++j) {
            for (int i = 0; i < ma; ++i) {
                x[ma + j * ma + i] = t.at(0, 0, i, j);
                x[ma + block + j * ma + i] = t.at(1, 0, i, j);
            }
        }
    } else {
        const std::size_t block = static_cast<std::size_t>(ma) * mb;
        for (int j = 0; j < mb; ++j) {
            for (int i = 0; i < ma; ++i) {
                x[j * ma + i] = t.at(0, 0, i, j);
                x[block + j * ma + i] = t.at(1, 0, i, j);
                x[2 * block + j * ma + i] = t.at(0, 1, i, j);
            }
        }
    }
    return x;
}

CorrelationTable lift_affine(Space space, const Scenario& scenario, const RationalVector& coords) {
    require_binary(scenario);
    const int ma = scenario.ma;
    const int mb = scenario.mb;
    if (coords.size() != reduced_dimension(space, ma, mb)) {
        throw std::invalid_argument("reduced point has wrong length for its scenario");
    }
    CorrelationTable t(scenario);
    const std::size_t block = static_cast<std::size_t>(ma) * mb;
    for (int j = 0; j < mb; ++j) {
        for (int i = 0; i < ma; ++i) {
            if (space == Space::fixed) {
                const Rational& qa = coords[i];
                const Rational& p00 = coords[ma + j * ma + i];
                const Rational& p10 = coords[ma + block + j * ma + i];
                t.at(0, 0, i, j) = p00;
                t.at(1, 0, i, j) = p10;
                t.at(0, 1, i, j) = qa - p00;
                t.at(1, 1, i, j) = 1 - qa - p10;
            } else {
                const Rational& p00 = coords[j * ma + i];
                const Rational& p10 = coords[block + j * ma + i];
                const Rational& p01 = coords[2 * block + j * ma + i];
                t.at(0, 0, i, j) = p00;
                t.at(1, 0, i, j) = p10;
                t.at(0, 1, i, j) = p01;
                t.at(1, 1, i, j) = 1 - p00 - p10 - p01;
            }
        }
    }
    return t;
}

ReducedPoint project_fixed(const CorrelationTable& t) {
    require_binary(t.scenario());
    if (!check_no_signaling(t).alice_marginal_well_defined) {
        throw std::domain_error("Alice's marginal depends on Bob's input; no fixed-chart image");
    }
    return {Space::fixed, t.scenario(), project_linear(Space::fixed, t)};
}

CorrelationTable lift_fixed(const ReducedPoint& point) {
    if (point.space != Space::fixed) {
        throw std::invalid_argument("lift_fixed needs a fixed-chart point");
    }
    CorrelationTable t = lift_affine(Space::fixed, point.scenario, point.coords);
    require_unit_interval(t);
    return t;
}

ReducedPoint project_bidir(const CorrelationTable& t) {
    require_binary(t.scenario());
    return {Space::bidir, t.scenario(), project_linear(Space::bidir, t)};
}

CorrelationTable lift_bidir(const ReducedPoint& point) {
    if (point.space != Space::bidir) {
        throw std::invalid_argument("lift_bidir needs a bidir-chart point");
    }
    CorrelationTable t = lift_affine(Space::bidir, point.scenario, point.coords);
    require_unit_interval(t);
    return t;
}

ReducedPoint project(Space space, const CorrelationTable& t) {
    return space == Space::fixed ? project_fixed(t) : project_bidir(t);
}

CorrelationTable lift(const ReducedPoint& point) {
    return point.space == Space::fixed ? lift_fixed(point) : lift_bidir(point);
}

LinearInequality LinearInequality::make(IntegerVector coeffs, Integer bound) {
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; })) {
        throw std::invalid_argument("inequality needs a nonzero coefficient");
    }
    Integer g = gcd_of(coeffs);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), bound.get_mpz_t());
    if (g != 1) {
        for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(bound.get_mpz_t(), bound.get_mpz_t(), g.get_mpz_t());
    }
    return {std::move(coeffs), std::move(bound)};
}

LinearInequality LinearInequality::from_rational(const RationalVector& coeffs, const Rational& bound) {
    RationalVector all = coeffs;
    all.push_back(bound);
    IntegerVector ints = clear_denominators(all);
    Integer b = ints.back();
    ints.pop_back();
    return make(std::move(ints), std::move(b));
}

bool operator<(const LinearInequality& lhs, const LinearInequality& rhs) {
    const auto n = std::min(lhs.coeffs.size(), rhs.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) {
        const int c = cmp(lhs.coeffs[k], rhs.coeffs[k]);
        if (c != 0) return c < 0;
    }
    if (lhs.coeffs.size() != rhs.coeffs.size()) return lhs.coeffs.size() < rhs.coeffs.size();
    return lhs.bound < rhs.bound;
}

LinearEquation LinearEquation::make(IntegerVector coeffs, Integer rhs) {
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; })) {
        throw std::invalid_argument("equation needs a nonzero coefficient");
    }
    Integer g = gcd_of(coeffs);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rhs.get_mpz_t());
    const auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c != 0; });
    if (sgn(*first) < 0) g = -g;
    for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
    return {std::move(coeffs), std::move(rhs)};
}

Rational dot(const IntegerVector& coeffs, const RationalVector& x) {
    if (coeffs.size() != x.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(coeffs.size()) + " vs " +
                                    std::to_string(x.size()));
    }
    Rational sum = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (coeffs[k] != 0) sum += coeffs[k] * x[k];
    }
    return sum;
}

InequalityValue evaluate_inequality(const LinearInequality& q, const RationalVector& x) {
    InequalityValue out;
    out.value = dot(q.coeffs, x);
    out.satisfied = out.value <= q.bound;
    out.tight = out.value == q.bound;
    return out;
}

InequalityValue evaluate_inequality(const LinearInequality& q, const ReducedPoint& x) {
    return evaluate_inequality(q, x.coords);
}

}  // namespace bellpoly
