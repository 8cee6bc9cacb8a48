#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bellpoly/correlation.hpp"
#include "bellpoly/strategies.hpp"

namespace bellpoly {

// No-signaling witness on binary outputs (requires ma >= mb >= 1):
//   i = 0:            perfectly correlated for every j,
//   1 <= i <= mb - 1: correlated when i != j, anti-correlated when i == j,
//   i >= mb:          Alice outputs 0, Bob uniform.
CorrelationTable hat_distribution(int ma, int mb);

// Inputs below mb with kappa[t0] == kappa[t2] (as Alice inputs) and
// sigma[t1] == sigma[t2] (as Bob inputs), t0 != t2, t1 != t2 and t2 >= 1.
// t0 and t1 differ whenever mb >= 3; for mb = 2 and r = 0 the only choice
// is (0, 0, 1).
struct CertificateTriple {
    int t0 = 0;
    int t1 = 0;
    int t2 = 0;
    friend bool operator==(const CertificateTriple&, const CertificateTriple&) = default;
};

// Requires 2^r_bits < mb and 0 <= s_bits <= r_bits; kappa must take values
// below 2^s_bits and sigma below 2^(r_bits - s_bits). Throws
// std::invalid_argument otherwise. The triple is taken from the largest
// kappa-fiber among Alice inputs 0..mb-1 (smallest message on ties).
CertificateTriple certificate_triple(const std::vector<int>& kappa, const std::vector<int>& sigma, int mb,
                                     int r_bits, int s_bits);

// An entry p(ab|ij) that a strategy consistent with the witness must leave at zero.
struct ZeroConstraint {
    int a = 0;
    int b = 0;
    int i = 0;
    int j = 0;
    friend bool operator==(const ZeroConstraint&, const ZeroConstraint&) = default;
};

// The eight zero entries of the witness on inputs {t0, t2} x {t1, t2}.
std::vector<ZeroConstraint> zero_constraints(const CertificateTriple& triple);

// First zero constraint on which the deterministic table puts mass.
std::optional<ZeroConstraint> violated_zero_constraint(const CorrelationTable& deterministic,
                                                       const CertificateTriple& triple);

// support(strategy table) is contained in support(hat).
bool strategy_consistent_with_hat(const BidirCcStrategy& s, const CorrelationTable& hat);

int ceil_log2(int n);

// Exact finite form of the one-way simulation protocol: the receiver
// learns the other party's input. For ma >= mb Bob sends j (bob_to_alice
// strategies with mb messages); otherwise the roles are swapped and Alice
// sends i. Throws std::domain_error for a signaling or invalid table.
StrategyEnsemble bacon_toner_ensemble(const CorrelationTable& t);

struct CertificateExample {
    BidirCcStrategy strategy;
    CertificateTriple triple;
    ZeroConstraint violated;
};

struct LowerBoundOptions {
    // Exhaustive refutation is skipped above this many strategies.
    std::size_t max_strategies = 5'000'000;
    std::size_t max_examples = 10;
};

struct LowerBoundReport {
    Scenario scenario;        // as analysed (parties swapped when ma < mb)
    bool roles_swapped = false;
    int r_bits = 0;
    bool exhaustive_ran = false;
    bool exhaustive_refuted = false;
    std::size_t strategies_checked = 0;
    // Every strategy violates one of the zero constraints of its own
    // certificate triple (only checked when 2^r < mb).
    bool certificates_hold = false;
    bool lp_outside = false;
    std::optional<LinearInequality> separator;
    std::vector<CertificateExample> examples;
    [[nodiscard]] bool agree() const { return !exhaustive_ran || exhaustive_refuted == lp_outside; }
};

LowerBoundReport lower_bound_report(int ma, int mb, int r_bits, const LowerBoundOptions& options = {});

}  // namespace bellpoly
