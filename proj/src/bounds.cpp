#include "bellpoly/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bellpoly/polyhedra.hpp"

namespace bellpoly {

namespace {

const Rational kHalf(1, 2);

bool support_contained(const CorrelationTable& inner, const CorrelationTable& outer) {
    for (std::size_t k = 0; k < inner.entries().size(); ++k) {
        if (inner.entries()[k] != 0 && outer.entries()[k] == 0) return false;
    }
    return true;
}

Integer power(int base, std::size_t exponent) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exponent);
    return out;
}

// Number of strategies enumerate_bidir_strategies yields for one split.
Integer strategy_count(const Scenario& sc, int r_bits, int s_bits) {
    const int cap_k = s_bits >= 30 ? sc.ma : std::min(1 << s_bits, sc.ma);
    const int cap_s = r_bits - s_bits >= 30 ? sc.mb : std::min(1 << (r_bits - s_bits), sc.mb);
    Integer kappa_side = 0;
    for (int k = 1; k <= cap_k; ++k)
        kappa_side += stirling_second_kind(sc.ma, k) * power(sc.kb, static_cast<std::size_t>(sc.mb) * k);
    Integer sigma_side = 0;
    for (int l = 1; l <= cap_s; ++l)
        sigma_side += stirling_second_kind(sc.mb, l) * power(sc.ka, static_cast<std::size_t>(sc.ma) * l);
    return kappa_side * sigma_side;
}

}  // namespace

CorrelationTable hat_distribution(int ma, int mb) {
    if (mb < 1 || ma < mb) throw std::invalid_argument("witness needs ma >= mb >= 1");
    CorrelationTable t(Scenario{ma, mb, 2, 2});
    for (int i = 0; i < ma; ++i) {
        for (int j = 0; j < mb; ++j) {
            if (i >= mb) {
                t.at(0, 0, i, j) = kHalf;
                t.at(0, 1, i, j) = kHalf;
            } else if (i != 0 && i == j) {
                t.at(0, 1, i, j) = kHalf;
                t.at(1, 0, i, j) = kHalf;
            } else {
                t.at(0, 0, i, j) = kHalf;
                t.at(1, 1, i, j) = kHalf;
            }
        }
    }
    return t;
}

int ceil_log2(int n) {
    if (n < 1) throw std::invalid_argument("ceil_log2 needs n >= 1");
    int bits = 0;
    while ((1LL << bits) < n) ++bits;
    return bits;
}

CertificateTriple certificate_triple(const std::vector<int>& kappa, const std::vector<int>& sigma, int mb,
                                     int r_bits, int s_bits) {
    if (s_bits < 0 || s_bits > r_bits) throw std::invalid_argument("need 0 <= s <= r");
    if (r_bits >= 30 || (1 << r_bits) >= mb) throw std::invalid_argument("certificate needs 2^r < mb");
    if (kappa.size() < static_cast<std::size_t>(mb) || sigma.size() != static_cast<std::size_t>(mb)) {
        throw std::invalid_argument("kappa must cover mb inputs and sigma exactly mb");
    }
    const int to_bob = 1 << s_bits;
    const int to_alice = 1 << (r_bits - s_bits);
    for (int t = 0; t < mb; ++t) {
        if (kappa[t] < 0 || kappa[t] >= to_bob || sigma[t] < 0 || sigma[t] >= to_alice) {
            throw std::invalid_argument("message outside its alphabet");
        }
    }

    std::map<int, std::vector<int>> fibers;
    for (int t = 0; t < mb; ++t) fibers[kappa[t]].push_back(t);
    const std::vector<int>* fiber = nullptr;
    for (const auto& [msg, members] : fibers) {
        if (fiber == nullptr || members.size() > fiber->size()) fiber = &members;
    }

    CertificateTriple out;
    if (r_bits == s_bits) {
        out.t0 = (*fiber)[0];
        out.t2 = (*fiber)[1];
        out.t1 = out.t0;
        for (int t = 0; t < mb; ++t) {
            if (t != out.t0 && t != out.t2) {
                out.t1 = t;
                break;
            }
        }
    } else {
        bool found = false;
        for (std::size_t x = 0; x < fiber->size() && !found; ++x) {
            for (std::size_t y = x + 1; y < fiber->size() && !found; ++y) {
                if (sigma[(*fiber)[x]] == sigma[(*fiber)[y]]) {
                    out.t1 = (*fiber)[x];
                    out.t2 = (*fiber)[y];
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("no sigma collision in the largest fiber");
        const auto it = std::find_if(fiber->begin(), fiber->end(), [&](int t) { return t != out.t1 && t != out.t2; });
        if (it == fiber->end()) throw std::logic_error("largest fiber has fewer than three inputs");
        out.t0 = *it;
    }

    // t1 may coincide with t0 only when both are 0, where the witness is
    // correlated as well.
    const bool ok = kappa[out.t0] == kappa[out.t2] && sigma[out.t1] == sigma[out.t2] && out.t2 != 0 &&
                    out.t0 != out.t2 && out.t1 != out.t2 && (out.t0 != out.t1 || out.t0 == 0);
    if (!ok) throw std::logic_error("certificate triple violates its defining relations");
    return out;
}

std::vector<ZeroConstraint> zero_constraints(const CertificateTriple& t) {
    return {
        {0, 1, t.t0, t.t1}, {1, 0, t.t0, t.t1}, {0, 1, t.t0, t.t2}, {1, 0, t.t0, t.t2},
        {0, 1, t.t2, t.t1}, {1, 0, t.t2, t.t1}, {0, 0, t.t2, t.t2}, {1, 1, t.t2, t.t2},
    };
}

std::optional<ZeroConstraint> violated_zero_constraint(const CorrelationTable& deterministic,
                                                       const CertificateTriple& triple) {
    for (const auto& z : zero_constraints(triple)) {
        if (deterministic.checked(z.a, z.b, z.i, z.j) != 0) return z;
    }
    return std::nullopt;
}

bool strategy_consistent_with_hat(const BidirCcStrategy& s, const CorrelationTable& hat) {
    return support_contained(strategy_to_table(hat.scenario(), s), hat);
}

StrategyEnsemble bacon_toner_ensemble(const CorrelationTable& t) {
    const ValidationReport report = validate_table(t);
    if (!report.ok()) throw std::domain_error("invalid table: " + report.violations.front());
    const NoSignalingFlags flags = check_no_signaling(t);
    if (!flags.alice_marginal_well_defined || !flags.bob_marginal_well_defined) {
        throw std::domain_error("table is signaling");
    }
    const Scenario& sc = t.scenario();
    if (sc.ma < sc.mb) {
        StrategyEnsemble swapped = bacon_toner_ensemble(swap_parties(t));
        StrategyEnsemble out{sc, {}};
        for (auto& [w, s] : swapped.entries) {
            auto f = std::get<FixedCcStrategy>(s);
            f.direction = Direction::alice_to_bob;
            out.entries.emplace_back(w, Strategy(std::move(f)));
        }
        return out;
    }

    const Marginal qb = marginals(t, Party::bob, 0);
    StrategyEnsemble out{sc, {}};
    FixedCcStrategy s;
    s.direction = Direction::bob_to_alice;
    s.messages = sc.mb;
    s.kappa.resize(sc.mb);
    for (int j = 0; j < sc.mb; ++j) s.kappa[j] = j;
    s.sender_output.assign(sc.mb, 0);
    s.receiver_output.assign(sc.ma, std::vector<int>(sc.mb, 0));

    // Bob's outputs b_j with weight prod_j q_B(b_j|j), then Alice's a_ij
    // with weight p(a_ij b_j|ij) / q_B(b_j|j).
    const std::size_t cells = static_cast<std::size_t>(sc.ma) * sc.mb;
    auto alice = [&](auto& self, std::size_t cell, const Rational& weight) -> void {
        if (cell == cells) {
            out.entries.emplace_back(weight, Strategy(s));
            return;
        }
        const int i = static_cast<int>(cell / sc.mb);
        const int j = static_cast<int>(cell % sc.mb);
        const int b = s.sender_output[j];
        for (int a = 0; a < sc.ka; ++a) {
            const Rational& p = t.at(a, b, i, j);
            if (p == 0) continue;
            s.receiver_output[i][j] = a;
            self(self, cell + 1, weight * p / qb.at(b, j));
        }
    };
    auto bob = [&](auto& self, int j, const Rational& weight) -> void {
        if (j == sc.mb) {
            alice(alice, 0, weight);
            return;
        }
        for (int b = 0; b < sc.kb; ++b) {
            const Rational& q = qb.at(b, j);
            if (q == 0) continue;
            s.sender_output[j] = b;
            self(self, j + 1, weight * q);
        }
    };
    bob(bob, 0, Rational(1));
    return out;
}

LowerBoundReport lower_bound_report(int ma, int mb, int r_bits, const LowerBoundOptions& options) {
    if (r_bits < 0) throw std::invalid_argument("bit budget must be >= 0");
    LowerBoundReport report;
    report.roles_swapped = ma < mb;
    if (report.roles_swapped) std::swap(ma, mb);
    report.scenario = Scenario{ma, mb, 2, 2};
    report.r_bits = r_bits;
    const Scenario& sc = report.scenario;
    const CorrelationTable hat = hat_distribution(ma, mb);

    Integer total = 0;
    for (int s = 0; s <= r_bits; ++s) total += strategy_count(sc, r_bits, s);
    const bool certificates_apply = r_bits < 30 && (1 << r_bits) < mb;
    report.certificates_hold = certificates_apply;
    if (total <= Integer(static_cast<unsigned long>(options.max_strategies))) {
        report.exhaustive_ran = true;
        bool consistent_found = false;
        for (int s = 0; s <= r_bits; ++s) {
            for (const auto& strategy : enumerate_bidir_strategies(sc, r_bits, s)) {
                ++report.strategies_checked;
                const CorrelationTable table = strategy_to_table(sc, strategy);
                if (support_contained(table, hat)) consistent_found = true;
                if (!certificates_apply) continue;
                const CertificateTriple triple = certificate_triple(strategy.kappa, strategy.sigma, mb, r_bits, s);
                const auto violated = violated_zero_constraint(table, triple);
                if (!violated) {
                    report.certificates_hold = false;
                } else if (report.examples.size() < options.max_examples) {
                    report.examples.push_back({strategy, triple, *violated});
                }
            }
        }
        report.exhaustive_refuted = !consistent_found;
    } else {
        report.certificates_hold = false;
    }

    const VRep vertices = VRep::from_points(enumerate_bidir_cc_vertices(sc, r_bits));
    const MembershipResult m = membership(project_bidir(hat).coords, vertices);
    report.lp_outside = !is_inside(m);
    if (report.lp_outside) report.separator = std::get<Outside>(m).separator;
    return report;
}

}  // namespace bellpoly
