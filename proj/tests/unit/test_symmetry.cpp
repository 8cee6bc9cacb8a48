#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bellpoly/bounds.hpp"
#include "bellpoly/polyhedra.hpp"
#include "bellpoly/strategies.hpp"
#include "bellpoly/symmetry.hpp"
#include "helpers.hpp"

using namespace bellpoly;
using namespace bellpoly::testing;

namespace {

std::set<RationalVector> tight_set(const LinearInequality& ineq, const std::vector<RationalVector>& points) {
    std::set<RationalVector> out;
    for (const auto& p : points)
        if (evaluate_inequality(ineq, p).tight) out.insert(p);
    return out;
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("group sizes") {
    CHECK(symmetry_group(Scenario{3, 2, 2, 2}).size() == 384);
    CHECK(symmetry_group(Scenario{2, 2, 2, 2}).size() == 64);
    CHECK(symmetry_group(Scenario{1, 1, 2, 2}).size() == 4);
    const auto g = symmetry_group(Scenario{2, 2, 2, 2});
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) CHECK_FALSE(g[a] == g[b]);
}

TEST_CASE("action on tables") {
    const Scenario sc{3, 3, 2, 2};
    const CorrelationTable hat = hat_distribution(3, 3);
    CHECK(act_on_table(identity_symmetry(sc), hat) == hat);

    LocalSymmetry flip = identity_symmetry(sc);
    for (auto& p : flip.alice_outputs) p = {1, 0};
    for (auto& p : flip.bob_outputs) p = {1, 0};
    CHECK(act_on_table(flip, deterministic(sc, {0, 0, 0}, {0, 0, 0})) == deterministic(sc, {1, 1, 1}, {1, 1, 1}));

    // Swapping Alice's inputs 1 and 2 moves the anti-correlated slice (1,1) to (2,1).
    LocalSymmetry swap12 = identity_symmetry(sc);
    swap12.alice_inputs = {0, 2, 1};
    const CorrelationTable moved = act_on_table(swap12, hat);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) CHECK(moved.at(a, b, i, j) == hat.at(a, b, i == 0 ? 0 : 3 - i, j));
    CHECK(moved.at(0, 1, 2, 1) == q(1, 2));
    CHECK(moved.at(0, 1, 1, 1) == 0);

    std::mt19937_64 rng(3);
    const auto group = symmetry_group(sc);
    for (int n = 0; n < 30; ++n) {
        const auto& g = group[rng() % group.size()];
        const auto& h = group[rng() % group.size()];
        const CorrelationTable t = random_table(sc, rng);
        CHECK(act_on_table(compose(g, h), t) == act_on_table(g, act_on_table(h, t)));
        CHECK(act_on_table(inverse(g), act_on_table(g, t)) == t);
        CHECK(validate_table(act_on_table(g, t)).ok());
        const auto flags = check_no_signaling(act_on_table(g, hat));
        CHECK(flags.alice_marginal_well_defined);
        CHECK(flags.bob_marginal_well_defined);
    }
}

TEST_CASE("action on inequalities") {
    const Scenario sc{3, 2, 2, 2};
    const InequalityAction action(sc, Space::fixed);
    const LinearInequality first = from_chart(kInequalityCharts[0], 1);
    CHECK(act_on_inequality(identity_symmetry(sc), first, Space::fixed, sc) == first);

    const auto points = project_all(Space::fixed, enumerate_fixed_cc_tables(sc, Direction::alice_to_bob, 1));
    std::vector<RationalVector> coords;
    for (const auto& p : points) coords.push_back(p.coords);
    const auto base = tight_set(first, coords);
    CHECK(base.size() >= 15);

    std::mt19937_64 rng(5);
    for (int n = 0; n < 20; ++n) {
        const LocalSymmetry& g = action.group()[rng() % action.group().size()];
        // Tight points of the image are the images of the tight points.
        std::set<RationalVector> moved;
        for (const auto& p : points)
            if (base.count(p.coords)) moved.insert(project_fixed(act_on_table(g, lift_fixed(p))).coords);
        CHECK(tight_set(act_on_inequality(g, first, Space::fixed, sc), coords) == moved);
    }

    LocalSymmetry swap = identity_symmetry(sc);
    swap.bob_inputs = {1, 0};
    CHECK(act_on_inequality(swap, act_on_inequality(swap, first, Space::fixed, sc), Space::fixed, sc) == first);

    const auto o = action.orbit(first);
    std::set<LinearInequality> distinct(o.images.begin(), o.images.end());
    CHECK(384 % distinct.size() == 0);
}

TEST_CASE("canonical forms") {
    const Scenario sc{3, 2, 2, 2};
    const std::size_t dim = reduced_dimension(Space::bidir, 3, 2);
    IntegerVector a(dim), b(dim);
    a[0 * 3 + 0] = -1;  // p(00|00) >= 0
    b[1 * 3 + 2] = -1;  // p(00|21) >= 0
    CHECK(canonical_inequality(LinearInequality::make(a, 0), sc, Space::bidir) ==
          canonical_inequality(LinearInequality::make(b, 0), sc, Space::bidir));

    std::mt19937_64 rng(9);
    const auto group = symmetry_group(sc);
    for (int n = 0; n < 50; ++n) {
        IntegerVector c(dim);
        for (auto& x : c) x = static_cast<long>(rng() % 5) - 2;
        c[rng() % dim] = 3;
        const LinearInequality ineq = LinearInequality::make(c, Integer(static_cast<long>(rng() % 4)));
        const auto& g = group[rng() % group.size()];
        CHECK(canonical_inequality(act_on_inequality(g, ineq, Space::bidir, sc), sc, Space::bidir) ==
              canonical_inequality(ineq, sc, Space::bidir));
    }
}

TEST_CASE("positivity family") {
    const Scenario sc{3, 2, 2, 2};
    const auto fixed = positivity_family(sc, Space::fixed);
    CHECK(std::set<LinearInequality>(fixed.begin(), fixed.end()).size() == 24);
    const CorrelationTable u = CorrelationTable::uniform(sc);
    for (const auto& p : fixed) CHECK(evaluate_inequality(p, project_fixed(u)).satisfied);
    const auto bidir = positivity_family(sc, Space::bidir);
    CHECK(bidir.size() == 24);
}

TEST_CASE("class partition") {
    const Scenario sc{2, 2, 2, 2};
    const VRep v = VRep::from_points(project_all(Space::bidir, enumerate_lsr_vertices(sc)));
    const HRep h = facets_from_vertices(v);
    const auto classes = partition_into_classes(h.inequalities, sc, Space::bidir, h.equations);
    REQUIRE(classes.size() == 2);
    std::size_t members = 0;
    for (const auto& c : classes) {
        members += c.members.size();
        for (std::size_t k = 0; k < c.members.size(); ++k)
            CHECK(act_on_inequality(c.witnesses[k], h.inequalities[c.members[k]], Space::bidir, sc, h.equations) ==
                  c.representative);
    }
    CHECK(members == 24);
    CHECK(std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.trivial; }) == 1);

    const LinearInequality first = from_chart(kInequalityCharts[0], 1);
    const auto twice = partition_into_classes({first, first}, Scenario{3, 2, 2, 2}, Space::fixed);
    REQUIRE(twice.size() == 1);
    CHECK(twice[0].members.size() == 2);
}

}  // TEST_SUITE
