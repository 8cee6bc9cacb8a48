#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bellpoly/rational.hpp"

namespace bellpoly {

enum class Party { alice, bob };

// Input/output counts of a bipartite box: Alice has `ma` inputs and `ka`
// outputs, Bob has `mb` inputs and `kb` outputs.
struct Scenario {
    int ma = 2;
    int mb = 2;
    int ka = 2;
    int kb = 2;

    // Throws std::invalid_argument unless every count is >= 1.
    void validate() const;
    [[nodiscard]] bool binary_outputs() const { return ka == 2 && kb == 2; }
    [[nodiscard]] Scenario swapped() const { return {mb, ma, kb, ka}; }
    [[nodiscard]] std::size_t entry_count() const {
        return static_cast<std::size_t>(ma) * mb * ka * kb;
    }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Conditional distribution p(ab|ij). Entries are not required to be a
// valid distribution; use validate_table to check.
class CorrelationTable {
public:
    CorrelationTable() = default;
    explicit CorrelationTable(Scenario scenario);
    CorrelationTable(Scenario scenario, RationalVector entries);

    static CorrelationTable uniform(Scenario scenario);

    [[nodiscard]] const Scenario& scenario() const { return scenario_; }
    [[nodiscard]] const RationalVector& entries() const { return entries_; }

    [[nodiscard]] std::size_t index(int a, int b, int i, int j) const {
        return ((static_cast<std::size_t>(i) * scenario_.mb + j) * scenario_.ka + a) * scenario_.kb + b;
    }
    [[nodiscard]] const Rational& at(int a, int b, int i, int j) const { return entries_[index(a, b, i, j)]; }
    Rational& at(int a, int b, int i, int j) { return entries_[index(a, b, i, j)]; }

    Rational& entry(std::size_t k) { return entries_[k]; }

    // Bounds-checked access; throws std::out_of_range.
    [[nodiscard]] const Rational& checked(int a, int b, int i, int j) const;

    friend bool operator==(const CorrelationTable&, const CorrelationTable&) = default;

private:
    Scenario scenario_;
    RationalVector entries_;
};

// Exchanges the roles of Alice and Bob: result(b a | j i) = t(a b | i j).
CorrelationTable swap_parties(const CorrelationTable& t);

struct ValidationReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

ValidationReport validate_table(const CorrelationTable& t);

// q(out | own input), summed over the other party's outputs at a fixed input
// of the other party.
struct Marginal {
    Party side = Party::alice;
    int outputs = 0;
    int inputs = 0;
    RationalVector values;  // indexed [own_input * outputs + output]

    [[nodiscard]] const Rational& at(int output, int own_input) const {
        return values[static_cast<std::size_t>(own_input) * outputs + output];
    }
    friend bool operator==(const Marginal&, const Marginal&) = default;
};

// Throws std::out_of_range if other_input is not an input of the other party.
Marginal marginals(const CorrelationTable& t, Party side, int other_input);

struct NoSignalingFlags {
    bool alice_marginal_well_defined = false;
    bool bob_marginal_well_defined = false;
};

NoSignalingFlags check_no_signaling(const CorrelationTable& t);

// Reduced coordinate charts for binary outputs.
//
// fixed: q_A(0|i) at i; p(00|ij) at ma + j*ma + i; p(10|ij) at ma + ma*mb + j*ma + i.
// bidir: p(00|ij) at j*ma + i; p(10|ij) at ma*mb + j*ma + i; p(01|ij) at 2*ma*mb + j*ma + i.
enum class Space { fixed, bidir };

std::string to_string(Space space);
Space parse_space(const std::string& text);

std::size_t reduced_dimension(Space space, int ma, int mb);

struct ReducedPoint {
    Space space = Space::bidir;
    Scenario scenario;
    RationalVector coords;

    friend bool operator==(const ReducedPoint&, const ReducedPoint&) = default;
};

// Canonical total order: lexicographic on coordinates.
bool coords_less(const RationalVector& lhs, const RationalVector& rhs);

// Throws std::invalid_argument for non-binary scenarios and std::domain_error
// when Alice's marginal depends on Bob's input.
ReducedPoint project_fixed(const CorrelationTable& t);
// Throws std::domain_error when a reconstructed entry leaves [0, 1].
CorrelationTable lift_fixed(const ReducedPoint& point);

ReducedPoint project_bidir(const CorrelationTable& t);
CorrelationTable lift_bidir(const ReducedPoint& point);

ReducedPoint project(Space space, const CorrelationTable& t);
CorrelationTable lift(const ReducedPoint& point);

// Affine extensions of lift/project to all of coordinate space, without
// admissibility checks. project_linear reads q_A(0|i) from the j = 0 column.
CorrelationTable lift_affine(Space space, const Scenario& scenario, const RationalVector& coords);
RationalVector project_linear(Space space, const CorrelationTable& t);

// coeffs . x <= bound, integer coefficients, stored divided by the gcd of
// all coefficients and the bound. The sign is part of the meaning and is
// never flipped.
struct LinearInequality {
    IntegerVector coeffs;
    Integer bound;

    // Normalizes; throws std::invalid_argument when every coefficient is 0.
    static LinearInequality make(IntegerVector coeffs, Integer bound);
    // Scales a rational inequality to integers, then normalizes.
    static LinearInequality from_rational(const RationalVector& coeffs, const Rational& bound);

    [[nodiscard]] std::size_t dimension() const { return coeffs.size(); }

    friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

// Lexicographic on (coeffs, bound).
bool operator<(const LinearInequality& lhs, const LinearInequality& rhs);

// coeffs . x = rhs, divided by the gcd and signed so the first nonzero
// entry of (coeffs, rhs) is positive.
struct LinearEquation {
    IntegerVector coeffs;
    Integer rhs;

    static LinearEquation make(IntegerVector coeffs, Integer rhs);

    friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
};

struct InequalityValue {
    Rational value;
    bool satisfied = false;
    bool tight = false;
};

// Throws std::invalid_argument on dimension mismatch.
InequalityValue evaluate_inequality(const LinearInequality& q, const RationalVector& x);
InequalityValue evaluate_inequality(const LinearInequality& q, const ReducedPoint& x);

Rational dot(const IntegerVector& coeffs, const RationalVector& x);

}  // namespace bellpoly
