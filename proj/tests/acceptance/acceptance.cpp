// Acceptance checks, one PASS/FAIL line per criterion.
//   bellpoly_acceptance            all criteria
//   bellpoly_acceptance 3 7        selected criteria

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bellpoly/bounds.hpp"
#include "bellpoly/correlation.hpp"
#include "bellpoly/polyhedra.hpp"
#include "bellpoly/strategies.hpp"
#include "bellpoly/symmetry.hpp"

using namespace bellpoly;

namespace {

// Wall-clock budgets in seconds. Exact arithmetic everywhere else: no
// numeric tolerance is used by any check.
constexpr double kFixedBudget = 300.0;
constexpr double kBidirBudget = 3600.0;
constexpr double kTheoremBudget = 300.0;

constexpr int kRoundTrips = 1000;
constexpr int kSymmetryPairs = 50;
constexpr int kHullPoints = 200;
constexpr int kSimulationTables = 100;

const Scenario k3222{3, 2, 2, 2};

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Stopwatch {
public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(1);
    o << std::fixed << s << "s";
    return o.str();
}

// Charts in the printed layout: the q_A row, p(00|i0), p(00|i1),
// p(10|i0), p(10|i1), each row over i = 0, 1, 2. Row-major order is
// exactly the fixed chart coordinate order.
const std::vector<std::vector<int>> kReferenceCharts = {
    {-1, 0, 0, 0, -1, 1, 0, 1, 0, -1, 0, 1, -1, 0, 0},
    {0, 0, 0, -1, -1, 1, -1, 1, 0, -1, 0, 1, -1, 0, 0},
    {-1, -1, 0, 0, 1, -1, 0, 1, 1, -1, 0, 1, -1, 0, -1},
    {0, 0, 0, -1, -1, 1, -1, 1, 0, -1, -1, 1, -1, 1, 0},
    {-1, 0, 0, 1, -1, -1, 1, -1, 1, 0, -1, 1, 0, -1, -1},
    {-3, 0, 0, 2, -2, 0, 2, 1, -1, -1, -1, 1, -1, 0, -2},
    {-3, 0, 0, 2, -2, 0, 2, 1, -1, -1, -2, 1, -1, 1, -2},
    {-3, 0, 0, 2, -2, 1, 2, 1, -2, -1, -2, 1, -1, 1, -2},
};

LinearInequality from_ints(const std::vector<int>& c, int bound) {
    IntegerVector v;
    for (int x : c) v.emplace_back(x);
    return LinearInequality::make(v, Integer(bound));
}

// Built from the definitions, not from positivity_family.
std::vector<LinearInequality> fixed_trivial_family(int ma, int mb) {
    const std::size_t n = static_cast<std::size_t>(ma) * (2 * mb + 1);
    std::vector<LinearInequality> out;
    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            const std::size_t q = i;
            const std::size_t p00 = ma + j * ma + i;
            const std::size_t p10 = ma + ma * mb + j * ma + i;
            std::vector<int> c(n, 0);
            c[p00] = -1;
            out.push_back(from_ints(c, 0));
            c.assign(n, 0);
            c[p10] = -1;
            out.push_back(from_ints(c, 0));
            c.assign(n, 0);
            c[p00] = 1;
            c[q] = -1;
            out.push_back(from_ints(c, 0));
            c.assign(n, 0);
            c[q] = 1;
            c[p10] = 1;
            out.push_back(from_ints(c, 1));
        }
    }
    return out;
}

VRep fixed_ab_vrep() { return VRep::from_points(enumerate_fixed_cc_vertices(k3222, Direction::alice_to_bob, 1)); }
VRep bidir_vrep() { return VRep::from_points(enumerate_bidir_cc_vertices(k3222, 1)); }

Outcome criterion_fixed() {
    Stopwatch watch;
    const VRep v = fixed_ab_vrep();
    const HRep h = facets_from_vertices(v);
    const InequalityAction action(k3222, Space::fixed);
    const auto classes = partition_into_classes(h.inequalities, action, h.equations);
    std::vector<LinearInequality> nontrivial;
    for (const auto& c : classes)
        if (!c.trivial) nontrivial.push_back(c.representative);

    std::set<std::size_t> hit;
    bool bijective = true;
    for (const auto& chart : kReferenceCharts) {
        const auto o = action.orbit(from_ints(chart, 1), h.equations);
        const LinearInequality canon = o.images[o.min_element];
        const auto it = std::find(nontrivial.begin(), nontrivial.end(), canon);
        if (it == nontrivial.end() || !hit.insert(static_cast<std::size_t>(it - nontrivial.begin())).second)
            bijective = false;
    }
    const double t = watch.seconds();
    Outcome r;
    r.pass = nontrivial.size() == 8 && bijective && hit.size() == 8 && t < kFixedBudget;
    r.detail = "facets=" + std::to_string(h.inequalities.size()) + " nontrivial=" + std::to_string(nontrivial.size()) +
               " matched=" + std::to_string(hit.size()) + "/8 time=" + fmt_seconds(t);
    return r;
}

Outcome criterion_trivial_audit() {
    const VRep v = fixed_ab_vrep();
    const HRep h = facets_from_vertices(v);
    const InequalityAction action(k3222, Space::fixed);
    const auto classes = partition_into_classes(h.inequalities, action, h.equations);
    const auto family = fixed_trivial_family(3, 2);
    std::size_t trivial = 0;
    std::size_t loose = 0;
    for (const auto& c : classes) {
        if (!c.trivial) continue;
        ++trivial;
        for (std::size_t m : c.members)
            if (std::find(family.begin(), family.end(), h.inequalities[m]) == family.end()) ++loose;
    }
    Outcome r;
    r.pass = trivial >= 1 && loose == 0 && classes.size() - trivial == 8;
    r.detail = "trivial classes=" + std::to_string(trivial) + " outside family=" + std::to_string(loose) +
               " total classes=" + std::to_string(classes.size());
    return r;
}

Outcome criterion_bidir() {
    Stopwatch watch;
    const VRep v = bidir_vrep();
    HullOptions options;
    options.keep_order = true;
    std::size_t last = 0;
    options.progress = [&](std::size_t done, std::size_t total, std::size_t rays) {
        if (done - last >= 50 || done == total) {
            last = done;
            std::cerr << "  bidir hull " << done << "/" << total << " rays=" << rays << " "
                      << fmt_seconds(watch.seconds()) << "\n";
        }
    };
    const HRep h = facets_from_vertices(v, options);
    const InequalityAction action(k3222, Space::bidir);
    const auto classes = partition_into_classes(h.inequalities, action, h.equations);
    std::size_t trivial = 0;
    for (const auto& c : classes) trivial += c.trivial ? 1 : 0;
    const double t = watch.seconds();
    Outcome r;
    r.pass = classes.size() == 143 && t < kBidirBudget;
    r.detail = "vertices=" + std::to_string(v.points.size()) + " facets=" + std::to_string(h.inequalities.size()) +
               " classes=" + std::to_string(classes.size()) + " nontrivial=" + std::to_string(classes.size() - trivial) +
               " trivial=" + std::to_string(trivial) + " time=" + fmt_seconds(t);
    return r;
}

Outcome criterion_dimensions() {
    const std::size_t fixed = affine_dimension(fixed_ab_vrep());
    const std::size_t bidir = affine_dimension(bidir_vrep());
    return {fixed == 15 && bidir == 18, "fixed=" + std::to_string(fixed) + " bidir=" + std::to_string(bidir)};
}

Outcome criterion_chsh() {
    const Scenario sc{2, 2, 2, 2};
    const VRep v = VRep::from_points(project_all(Space::bidir, enumerate_lsr_vertices(sc)));
    const HRep h = facets_from_vertices(v);
    const auto classes = partition_into_classes(h.inequalities, sc, Space::bidir, h.equations);
    std::size_t nontrivial = 0;
    for (const auto& c : classes) nontrivial += c.trivial ? 0 : 1;
    return {nontrivial == 1 && affine_dimension(v) == 8,
            "dim=" + std::to_string(affine_dimension(v)) + " facets=" + std::to_string(h.inequalities.size()) +
                " nontrivial=" + std::to_string(nontrivial)};
}

Outcome criterion_containment() {
    const VRep outer = bidir_vrep();
    bool all = true;
    std::string detail;
    for (Direction d : {Direction::alice_to_bob, Direction::bob_to_alice}) {
        const VRep inner =
            VRep::from_points(project_all(Space::bidir, enumerate_fixed_cc_tables(k3222, d, 1)));
        const ContainmentResult c = contains_polytope(inner, outer);
        std::size_t verified = 0;
        for (std::size_t k = 0; k < c.witnesses.size(); ++k)
            if (is_inside(c.witnesses[k]) && verify_certificate(inner.points[k], outer, c.witnesses[k])) ++verified;
        const bool ok = c.contained && c.witnesses.size() == inner.points.size() && verified == inner.points.size();
        all = all && ok;
        detail += std::string(d == Direction::alice_to_bob ? "a>b " : " b>a ") + std::to_string(verified) + "/" +
                  std::to_string(inner.points.size());
    }
    return {all, detail};
}

Outcome criterion_theorem() {
    Stopwatch watch;
    const Scenario s33{3, 3, 2, 2};
    const CorrelationTable hat = hat_distribution(3, 3);
    std::size_t strategies = 0;
    std::size_t consistent = 0;
    for (int s = 0; s <= 1; ++s) {
        for (const auto& st : enumerate_bidir_strategies(s33, 1, s)) {
            ++strategies;
            if (strategy_consistent_with_hat(st, hat)) ++consistent;
        }
    }
    const VRep v33 = VRep::from_points(enumerate_bidir_cc_vertices(s33, 1));
    const RationalVector x33 = project_bidir(hat).coords;
    const MembershipResult m33 = membership(x33, v33);
    const bool outside = !is_inside(m33) && verify_certificate(x33, v33, m33);

    const Scenario s22{2, 2, 2, 2};
    const VRep v22 = VRep::from_points(enumerate_bidir_cc_vertices(s22, 1));
    const RationalVector x22 = project_bidir(hat_distribution(2, 2)).coords;
    const MembershipResult m22 = membership(x22, v22);
    const bool inside = is_inside(m22) && verify_certificate(x22, v22, m22);

    const LowerBoundReport rep = lower_bound_report(3, 3, 1);
    const double t = watch.seconds();
    Outcome r;
    r.pass = strategies > 0 && consistent == 0 && outside && inside && rep.exhaustive_refuted && rep.lp_outside &&
             rep.certificates_hold && rep.agree() && t < kTheoremBudget;
    r.detail = "strategies=" + std::to_string(strategies) + " consistent=" + std::to_string(consistent) +
               " lp(3,3)=" + (outside ? "outside" : "not-outside") + " lp(2,2)=" + (inside ? "inside" : "not-inside") +
               " time=" + fmt_seconds(t);
    return r;
}

Rational fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational random_weight(std::mt19937_64& rng) { return fraction(static_cast<long>(rng() % 9 + 1), 1); }

CorrelationTable mix(const Scenario& sc, const std::vector<std::pair<Rational, CorrelationTable>>& parts) {
    Rational total = 0;
    for (const auto& [w, t] : parts) total += w;
    RationalVector e(sc.entry_count(), Rational(0));
    for (const auto& [w, t] : parts)
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += w / total * t.entries()[k];
    return CorrelationTable(sc, e);
}

Outcome criterion_simulation() {
    std::mt19937_64 rng(20260101);
    std::size_t exact = 0;
    std::size_t total = 0;
    for (int m : {2, 3}) {
        const Scenario sc{m, m, 2, 2};
        const auto lsr = enumerate_lsr_vertices(sc);
        const auto group = symmetry_group(sc);
        const CorrelationTable hat = hat_distribution(m, m);
        for (int n = 0; n < kSimulationTables / 2; ++n) {
            std::vector<std::pair<Rational, CorrelationTable>> parts;
            const int k = static_cast<int>(rng() % 3) + 1;
            for (int c = 0; c < k; ++c) parts.emplace_back(random_weight(rng), lsr[rng() % lsr.size()]);
            const int h = static_cast<int>(rng() % 3) + 1;
            for (int c = 0; c < h; ++c)
                parts.emplace_back(random_weight(rng), act_on_table(group[rng() % group.size()], hat));
            const CorrelationTable t = mix(sc, parts);
            ++total;
            const StrategyEnsemble e = bacon_toner_ensemble(t);
            bool ok = ensemble_to_table(e) == t;
            for (const auto& [w, s] : e.entries) {
                const auto* f = std::get_if<FixedCcStrategy>(&s);
                ok = ok && w > 0 && f != nullptr && f->bit_cost() == ceil_log2(m);
            }
            if (ok) ++exact;
        }
    }
    return {exact == total && total == static_cast<std::size_t>(kSimulationTables),
            "exact=" + std::to_string(exact) + "/" + std::to_string(total)};
}

Outcome criterion_ajbi() {
    const VRep v = bidir_vrep();
    std::size_t outside = 0;
    std::size_t tables = 0;
    for (int a0 = 0; a0 < 2; ++a0) {
        for (int a1 = 0; a1 < 2; ++a1) {
            if (a0 == a1) continue;
            for (int code = 0; code < 8; ++code) {
                const int b[3] = {code & 1, (code >> 1) & 1, (code >> 2) & 1};
                if (b[0] == b[1] && b[1] == b[2]) continue;
                const int a[2] = {a0, a1};
                CorrelationTable t(k3222);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 2; ++j) t.at(a[j], b[i], i, j) = 1;
                ++tables;
                const RationalVector x = project_bidir(t).coords;
                const MembershipResult m = membership(x, v);
                if (!is_inside(m) && verify_certificate(x, v, m)) ++outside;
            }
        }
    }
    return {tables == 12 && outside == 12, "outside=" + std::to_string(outside) + "/" + std::to_string(tables)};
}

// Restricted growth strings of length n with exactly k distinct values.
long brute_stirling(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    long count = 0;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            count += used == k ? 1 : 0;
            return;
        }
        for (int v = 0; v <= used && v < k; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(used, v + 1));
        }
    };
    rec(0, 0);
    return count;
}

Rational random_unit(std::mt19937_64& rng, long denom = 12) {
    return fraction(static_cast<long>(rng() % (denom + 1)), denom);
}

// Random table with q_A(0|i) independent of j.
CorrelationTable random_fixed_admissible(const Scenario& sc, std::mt19937_64& rng) {
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i) {
        const Rational q = random_unit(rng);
        for (int j = 0; j < sc.mb; ++j) {
            const Rational p00 = q * random_unit(rng);
            const Rational p10 = (1 - q) * random_unit(rng);
            t.at(0, 0, i, j) = p00;
            t.at(0, 1, i, j) = q - p00;
            t.at(1, 0, i, j) = p10;
            t.at(1, 1, i, j) = 1 - q - p10;
        }
    }
    return t;
}

CorrelationTable random_valid(const Scenario& sc, std::mt19937_64& rng) {
    CorrelationTable t(sc);
    for (int i = 0; i < sc.ma; ++i) {
        for (int j = 0; j < sc.mb; ++j) {
            Rational w[4];
            Rational sum = 0;
            for (auto& x : w) {
                x = static_cast<long>(rng() % 7);
                sum += x;
            }
            if (sum == 0) {
                w[0] = 1;
                sum = 1;
            }
            t.at(0, 0, i, j) = w[0] / sum;
            t.at(0, 1, i, j) = w[1] / sum;
            t.at(1, 0, i, j) = w[2] / sum;
            t.at(1, 1, i, j) = w[3] / sum;
        }
    }
    return t;
}

bool hull_membership_agree(const VRep& v, int count, std::mt19937_64& rng, std::size_t& inside) {
    const HRep h = facets_from_vertices(v);
    for (int n = 0; n < count; ++n) {
        RationalVector x(v.dimension, Rational(0));
        if (n % 2 == 0) {
            Rational total = 0;
            for (int c = 0; c < 4; ++c) {
                const Rational w = random_weight(rng);
                const auto& p = v.points[rng() % v.points.size()];
                for (std::size_t k = 0; k < x.size(); ++k) x[k] += w * p[k];
                total += w;
            }
            for (auto& c : x) c /= total;
            // Push half of these off the polytope along a random coordinate.
            if (n % 4 == 0) x[rng() % x.size()] += fraction(static_cast<long>(rng() % 5) - 2, 7);
        } else {
            for (auto& c : x) c = fraction(static_cast<long>(rng() % 15) - 2, 10);
        }
        const MembershipResult m = membership(x, v);
        if (!verify_certificate(x, v, m)) return false;
        if (satisfies(h, x) != is_inside(m)) return false;
        inside += is_inside(m) ? 1 : 0;
    }
    return true;
}

Outcome criterion_properties() {
    std::mt19937_64 rng(424242);
    bool stirling = true;
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            const Integer s = stirling_second_kind(n, k);
            if (s != Integer(brute_stirling(n, k))) stirling = false;
            if (n >= 1 && k >= 1 && s != k * stirling_second_kind(n - 1, k) + stirling_second_kind(n - 1, k - 1))
                stirling = false;
            if (n >= 1 && k >= 1 && enumerate_groupings(n, k).size() !=
                                        static_cast<std::size_t>(brute_stirling(n, k)) +
                                            (k > 1 ? enumerate_groupings(n, k - 1).size() : 0))
                stirling = false;
        }
    }

    bool roundtrip = true;
    for (int n = 0; n < kRoundTrips; ++n) {
        const Scenario sc{static_cast<int>(rng() % 3) + 1, static_cast<int>(rng() % 3) + 1, 2, 2};
        const CorrelationTable f = random_fixed_admissible(sc, rng);
        if (lift_fixed(project_fixed(f)) != f) roundtrip = false;
        const CorrelationTable b = random_valid(sc, rng);
        if (lift_bidir(project_bidir(b)) != b) roundtrip = false;
    }

    bool group = true;
    for (Space space : {Space::fixed, Space::bidir}) {
        const InequalityAction action(k3222, space);
        const auto& g = action.group();
        const std::size_t dim = reduced_dimension(space, 3, 2);
        for (int n = 0; n < kSymmetryPairs; ++n) {
            IntegerVector c(dim);
            for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
            c[rng() % dim] = 1;
            const LinearInequality q = LinearInequality::make(c, Integer(static_cast<long>(rng() % 5)));
            const auto& a = g[rng() % g.size()];
            const auto& b = g[rng() % g.size()];
            const auto& d = g[rng() % g.size()];
            if (!(compose(compose(a, b), d) == compose(a, compose(b, d)))) group = false;
            if (!(compose(a, inverse(a)) == identity_symmetry(k3222))) group = false;
            const LinearInequality qa = act_on_inequality(a, q, space, k3222);
            if (canonical_inequality(qa, k3222, space) != canonical_inequality(q, k3222, space)) group = false;
            if (act_on_inequality(compose(a, b), q, space, k3222) !=
                act_on_inequality(a, act_on_inequality(b, q, space, k3222), space, k3222))
                group = false;
            // Slack is preserved up to the positive factor from normalization.
            const auto slack = [&](const LinearInequality& ineq, const CorrelationTable& t) -> Rational {
                return Rational(ineq.bound) - evaluate_inequality(ineq, project(space, t)).value;
            };
            const auto draw = [&] {
                return space == Space::fixed ? random_fixed_admissible(k3222, rng) : random_valid(k3222, rng);
            };
            const CorrelationTable t1 = draw();
            const CorrelationTable t2 = draw();
            const Rational s1 = slack(q, t1), s2 = slack(q, t2);
            const Rational r1 = slack(qa, act_on_table(a, t1)), r2 = slack(qa, act_on_table(a, t2));
            if (sgn(s1) != sgn(r1) || sgn(s2) != sgn(r2) || s1 * r2 != s2 * r1) group = false;
        }
    }

    bool hull = true;
    std::size_t inside = 0;
    const Scenario chsh{2, 2, 2, 2};
    hull = hull && hull_membership_agree(VRep::from_points(project_all(Space::bidir, enumerate_lsr_vertices(chsh))),
                                         kHullPoints, rng, inside);
    hull = hull && hull_membership_agree(VRep::from_points(enumerate_fixed_cc_vertices(chsh, Direction::alice_to_bob, 1)),
                                         kHullPoints, rng, inside);
    hull = hull && hull_membership_agree(fixed_ab_vrep(), kHullPoints, rng, inside);

    Outcome r;
    r.pass = stirling && roundtrip && group && hull;
    r.detail = std::string("stirling=") + (stirling ? "ok" : "bad") + " roundtrip=" + (roundtrip ? "ok" : "bad") +
               " symmetry=" + (group ? "ok" : "bad") + " hull=" + (hull ? "ok" : "bad") +
               " inside=" + std::to_string(inside) + "/" + std::to_string(3 * kHullPoints);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<int, std::function<Outcome()>> criteria = {
        {1, criterion_fixed},       {2, criterion_trivial_audit}, {3, criterion_bidir},
        {4, criterion_dimensions},  {5, criterion_chsh},          {6, criterion_containment},
        {7, criterion_theorem},     {8, criterion_simulation},    {9, criterion_ajbi},
        {10, criterion_properties},
    };
    std::vector<int> selected;
    for (int k = 1; k < argc; ++k) {
        const int n = std::atoi(argv[k]);
        if (criteria.count(n) == 0) {
            std::cerr << "unknown criterion " << argv[k] << "\n";
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (const auto& [n, fn] : criteria) selected.push_back(n);

    int failed = 0;
    for (int n : selected) {
        Outcome r;
        try {
            r = criteria.at(n)();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += r.pass ? 0 : 1;
        std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
