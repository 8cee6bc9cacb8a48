#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "bellpoly/correlation.hpp"

namespace bellpoly {

// Local deterministic responses: Alice outputs alpha[i], Bob outputs beta[j].
struct LsrStrategy {
    std::vector<int> alpha;
    std::vector<int> beta;
    friend bool operator==(const LsrStrategy&, const LsrStrategy&) = default;
};

enum class Direction { alice_to_bob, bob_to_alice };

// One-way communication. The sender maps its input to a message in
// [0, messages) and outputs sender_output[input]; the receiver outputs
// receiver_output[receiver_input][message].
struct FixedCcStrategy {
    Direction direction = Direction::alice_to_bob;
    int messages = 1;
    std::vector<int> kappa;
    std::vector<int> sender_output;
    std::vector<std::vector<int>> receiver_output;

    // ceil(log2(messages)).
    [[nodiscard]] int bit_cost() const;
    friend bool operator==(const FixedCcStrategy&, const FixedCcStrategy&) = default;
};

// Two-way communication with Alice spending s_bits of the r_bits budget.
// kappa[i] in [0, 2^s) goes to Bob; sigma[j] in [0, 2^(r-s)) goes to Alice.
// Alice outputs alice_output[i][sigma[j]], Bob outputs bob_output[j][kappa[i]].
struct BidirCcStrategy {
    int s_bits = 0;
    int r_bits = 0;
    std::vector<int> kappa;
    std::vector<int> sigma;
    std::vector<std::vector<int>> alice_output;
    std::vector<std::vector<int>> bob_output;
    friend bool operator==(const BidirCcStrategy&, const BidirCcStrategy&) = default;
};

using Strategy = std::variant<LsrStrategy, FixedCcStrategy, BidirCcStrategy>;

// Throws std::invalid_argument when the strategy does not fit the scenario.
void validate_strategy(const Scenario& sc, const Strategy& s);

CorrelationTable strategy_to_table(const Scenario& sc, const Strategy& s);

struct StrategyEnsemble {
    Scenario scenario;
    std::vector<std::pair<Rational, Strategy>> entries;
};

// Throws std::invalid_argument unless the weights are positive and sum to 1.
CorrelationTable ensemble_to_table(const StrategyEnsemble& e);

// Set partition of {0..m-1}; blocks ordered by their smallest element.
struct Grouping {
    std::vector<std::vector<int>> blocks;

    // label[x] = index of the block containing x.
    [[nodiscard]] std::vector<int> labels() const;
    friend bool operator==(const Grouping&, const Grouping&) = default;
};

Integer stirling_second_kind(int n, int k);

// All partitions of {0..m-1} into 1..min(max_blocks, m) blocks, ordered by
// block count and then by restricted-growth string.
std::vector<Grouping> enumerate_groupings(int m, int max_blocks);

// Every deterministic LSR table, alpha varying slowest.
std::vector<CorrelationTable> enumerate_lsr_vertices(const Scenario& sc);

// Deterministic tables of the one-way model in the original scenario,
// sorted by their bidir coordinates and deduplicated.
std::vector<CorrelationTable> enumerate_fixed_cc_tables(const Scenario& sc, Direction direction, int r_bits);

// Vertices in the fixed chart. For bob_to_alice the chart is that of the
// party-swapped scenario (the receiver's marginal is the well-defined one),
// so the returned points carry sc.swapped().
std::vector<ReducedPoint> enumerate_fixed_cc_vertices(const Scenario& sc, Direction direction, int r_bits);

// The vertices of the one-way A->B model come first, then the rest; each
// block is sorted.
std::vector<ReducedPoint> enumerate_bidir_cc_vertices(const Scenario& sc, int r_bits);

// Deterministic bidir strategies for one split s of an r-bit budget, with
// message alphabets capped at min(2^bits, #inputs).
std::vector<BidirCcStrategy> enumerate_bidir_strategies(const Scenario& sc, int r_bits, int s_bits);

// Sorted, deduplicated projection of tables into a chart.
std::vector<ReducedPoint> project_all(Space space, const std::vector<CorrelationTable>& tables);

}  // namespace bellpoly
