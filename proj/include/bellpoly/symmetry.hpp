#pragma once

#include <cstddef>
#include <vector>

#include "bellpoly/correlation.hpp"
#include "bellpoly/polyhedra.hpp"

namespace bellpoly {

// Local relabeling: input permutations for each party plus an output
// permutation conditioned on each input. Acting on a table,
//   p'(ab|ij) = p(alice_outputs[i'](a) bob_outputs[j'](b) | i' j'),
// with i' = alice_inputs[i] and j' = bob_inputs[j].
struct LocalSymmetry {
    std::vector<int> alice_inputs;
    std::vector<int> bob_inputs;
    std::vector<std::vector<int>> alice_outputs;  // indexed by Alice input
    std::vector<std::vector<int>> bob_outputs;    // indexed by Bob input

    friend bool operator==(const LocalSymmetry&, const LocalSymmetry&) = default;
};

LocalSymmetry identity_symmetry(const Scenario& sc);

// act(compose(g, h), t) == act(g, act(h, t))
LocalSymmetry compose(const LocalSymmetry& g, const LocalSymmetry& h);
LocalSymmetry inverse(const LocalSymmetry& g);

// All ma! * mb! * (ka!)^ma * (kb!)^mb elements in a fixed order.
std::vector<LocalSymmetry> symmetry_group(const Scenario& sc);

CorrelationTable act_on_table(const LocalSymmetry& g, const CorrelationTable& t);

// Induced action on inequalities over a reduced chart:
//   evaluate(q, project(t)) == evaluate(act(g, q), project(act(g, t))).
// The result is normalized; pass the affine-hull equations of a lower
// dimensional polytope to reduce modulo them as well.
LinearInequality act_on_inequality(const LocalSymmetry& g, const LinearInequality& q, Space space,
                                   const Scenario& sc, const std::vector<LinearEquation>& equations = {});

// Precomputed integer affine maps for every group element of one chart.
class InequalityAction {
public:
    InequalityAction(const Scenario& sc, Space space);

    [[nodiscard]] const Scenario& scenario() const { return scenario_; }
    [[nodiscard]] Space space() const { return space_; }
    [[nodiscard]] const std::vector<LocalSymmetry>& group() const { return group_; }

    [[nodiscard]] LinearInequality apply(std::size_t element, const LinearInequality& q,
                                         const std::vector<LinearEquation>& equations = {}) const;
    [[nodiscard]] LinearInequality apply(const LocalSymmetry& g, const LinearInequality& q,
                                         const std::vector<LinearEquation>& equations = {}) const;

    // project(g^-1 . lift(x)) for group element `element`.
    [[nodiscard]] RationalVector map_point(std::size_t element, const RationalVector& x) const;
    // Every group element maps the point set onto itself.
    [[nodiscard]] bool stabilizes(const std::vector<RationalVector>& points) const;

    struct Orbit {
        std::vector<LinearInequality> images;  // images[k] = apply(k, q)
        std::size_t min_element = 0;           // index of the lexicographically smallest image
    };
    [[nodiscard]] Orbit orbit(const LinearInequality& q, const std::vector<LinearEquation>& equations = {}) const;

    // x -> project(g^-1 . lift(x)) as x -> sum_k x_k columns[k] + offset.
    struct AffineMap {
        std::vector<IntegerVector> columns;
        IntegerVector offset;
    };
    static AffineMap chart_map(const LocalSymmetry& g, const Scenario& sc, Space space);

private:

    Scenario scenario_;
    Space space_;
    std::vector<LocalSymmetry> group_;
    std::vector<AffineMap> maps_;
};

// Lexicographically smallest element of the orbit.
LinearInequality canonical_inequality(const LinearInequality& q, const Scenario& sc, Space space,
                                      const std::vector<LinearEquation>& equations = {});

// p(ab|ij) >= 0 written in the chart, reduced modulo `equations`.
std::vector<LinearInequality> positivity_family(const Scenario& sc, Space space,
                                                const std::vector<LinearEquation>& equations = {});

struct InequalityClass {
    LinearInequality representative;
    std::vector<std::size_t> members;        // indices into the partitioned list
    std::vector<LocalSymmetry> witnesses;    // act(witnesses[k], list[members[k]]) == representative
    std::size_t orbit_size = 0;
    bool trivial = false;
};

// Classes sorted by representative.
std::vector<InequalityClass> partition_into_classes(const std::vector<LinearInequality>& inequalities,
                                                    const Scenario& sc, Space space,
                                                    const std::vector<LinearEquation>& equations = {});
std::vector<InequalityClass> partition_into_classes(const std::vector<LinearInequality>& inequalities,
                                                    const InequalityAction& action,
                                                    const std::vector<LinearEquation>& equations = {});

// Facets of conv(v) for a point set invariant under the action, found one
// orbit at a time: starting from a facet among the positivity family, the
// ridges of every new orbit representative are rotated to neighbouring
// facets. Ridges of a face with more than 100 points and a nontrivial
// stabilizer are found the same way, one level down, under the stabilizer;
// other faces go to facets_from_vertices. Same output as
// facets_from_vertices. The progress callback receives (orbits processed,
// orbits found, points on the current facet) for the top level.
// When non-null, `representatives` receives one canonical inequality per
// orbit, sorted.
HRep facets_up_to_symmetry(const VRep& v, const InequalityAction& action, const HullOptions& options = {},
                           std::vector<LinearInequality>* representatives = nullptr);

}  // namespace bellpoly
