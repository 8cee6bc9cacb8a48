#include <doctest.h>

#include <stdexcept>

#include "bellpoly/bounds.hpp"
#include "bellpoly/correlation.hpp"
#include "helpers.hpp"

using namespace bellpoly;
using namespace bellpoly::testing;

TEST_SUITE("correlation") {

TEST_CASE("rational text") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(clear_denominators({q(1, 2), q(1, 3)}) == IntegerVector{3, 2});
    CHECK(gcd_of({Integer(-4), Integer(6)}) == 2);
    CHECK(gcd_of({Integer(0)}) == 0);
}

TEST_CASE("scenario validation") {
    CHECK_THROWS_AS((Scenario{0, 2, 2, 2}.validate()), std::invalid_argument);
    CHECK_NOTHROW((Scenario{1, 1, 1, 1}.validate()));
    CHECK(Scenario{3, 2, 2, 2}.swapped() == Scenario{2, 3, 2, 2});
    CHECK(Scenario{3, 2, 2, 2}.entry_count() == 24);
}

TEST_CASE("table validation") {
    const Scenario sc{2, 2, 2, 2};
    CHECK(validate_table(CorrelationTable::uniform(sc)).ok());

    CorrelationTable neg = CorrelationTable::uniform(sc);
    neg.at(1, 0, 1, 1) = q(-1, 4);
    neg.at(0, 0, 1, 1) = q(3, 4);
    const auto r = validate_table(neg);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0] == "negative entry (1,0,1,1)");

    CorrelationTable short_slice = CorrelationTable::uniform(sc);
    short_slice.at(0, 0, 0, 1) = 0;
    const auto s = validate_table(short_slice);
    REQUIRE(s.violations.size() == 1);
    CHECK(s.violations[0] == "slice (0,1) sums to 3/4");
    CHECK_THROWS_AS((void)short_slice.checked(0, 0, 2, 0), std::out_of_range);
}

TEST_CASE("marginals") {
    const Scenario sc{2, 2, 2, 2};
    const Marginal u = marginals(CorrelationTable::uniform(sc), Party::alice, 0);
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 2; ++a) CHECK(u.at(a, i) == q(1, 2));

    const Marginal d = marginals(deterministic(sc, {0, 0}, {0, 0}), Party::alice, 1);
    CHECK(d.at(0, 0) == 1);
    CHECK(d.at(0, 1) == 1);

    const CorrelationTable hat = hat_distribution(3, 3);
    for (int j = 0; j < 3; ++j) {
        const Marginal m = marginals(hat, Party::alice, j);
        for (int i = 0; i < 3; ++i) {
            CHECK(m.at(0, i) == q(1, 2));
            CHECK(m.at(1, i) == q(1, 2));
        }
    }
    CHECK_THROWS_AS(marginals(hat, Party::bob, 3), std::out_of_range);
}

TEST_CASE("no-signaling flags") {
    const auto hat = check_no_signaling(hat_distribution(3, 3));
    CHECK(hat.alice_marginal_well_defined);
    CHECK(hat.bob_marginal_well_defined);

    const auto sig = check_no_signaling(aj_bi_table({0, 1}, {0, 1, 1}));
    CHECK_FALSE(sig.alice_marginal_well_defined);
    CHECK_FALSE(sig.bob_marginal_well_defined);

    const Scenario sc{3, 2, 2, 2};
    const auto mixed = check_no_signaling(
        mix_tables(sc, {{q(1, 3), deterministic(sc, {0, 1, 0}, {1, 1})}, {q(2, 3), deterministic(sc, {1, 1, 0}, {0, 1})}}));
    CHECK(mixed.alice_marginal_well_defined);
    CHECK(mixed.bob_marginal_well_defined);
}

TEST_CASE("fixed chart") {
    const Scenario sc{3, 2, 2, 2};
    const ReducedPoint p = project_fixed(deterministic(sc, {0, 0, 0}, {0, 0}));
    CHECK(p.coords.size() == 15);
    for (int k = 0; k < 3; ++k) CHECK(p.coords[k] == 1);
    for (int k = 3; k < 9; ++k) CHECK(p.coords[k] == 1);
    for (int k = 9; k < 15; ++k) CHECK(p.coords[k] == 0);

    const CorrelationTable u = CorrelationTable::uniform(sc);
    CHECK(lift_fixed(project_fixed(u)) == u);
    CHECK_THROWS_AS(project_fixed(aj_bi_table({0, 1}, {0, 1, 1})), std::domain_error);
    CHECK(reduced_dimension(Space::fixed, 3, 2) == 15);
}

TEST_CASE("bidir chart") {
    const Scenario sc{3, 2, 2, 2};
    const ReducedPoint u = project_bidir(CorrelationTable::uniform(sc));
    CHECK(u.coords.size() == 18);
    for (const auto& c : u.coords) CHECK(c == q(1, 4));

    const ReducedPoint d = project_bidir(deterministic(sc, {1, 1, 1}, {1, 1}));
    for (const auto& c : d.coords) CHECK(c == 0);

    const CorrelationTable z = lift_bidir(ReducedPoint{Space::bidir, sc, RationalVector(18, Rational(0))});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) CHECK(z.at(1, 1, i, j) == 1);

    // Chart positions, read independently from the layout.
    CorrelationTable t = CorrelationTable::uniform(sc);
    t.at(0, 0, 2, 1) = q(1, 8);
    t.at(1, 1, 2, 1) = q(3, 8);
    CHECK(project_bidir(t).coords[1 * 3 + 2] == q(1, 8));
    CHECK(reduced_dimension(Space::bidir, 3, 2) == 18);

    const CorrelationTable sw = swap_parties(hat_distribution(3, 2));
    CHECK(swap_parties(sw) == hat_distribution(3, 2));
    CHECK(sw.at(1, 0, 1, 1) == hat_distribution(3, 2).at(0, 1, 1, 1));
}

TEST_CASE("inequality normalization and evaluation") {
    const LinearInequality a = LinearInequality::make({Integer(2), Integer(-4)}, Integer(6));
    CHECK(a.coeffs == IntegerVector{1, -2});
    CHECK(a.bound == 3);
    const LinearInequality neg = LinearInequality::make({Integer(-2), Integer(0)}, Integer(0));
    CHECK(neg.coeffs == IntegerVector{-1, 0});
    CHECK_THROWS_AS(LinearInequality::make({Integer(0), Integer(0)}, Integer(1)), std::invalid_argument);
    CHECK(LinearInequality::from_rational({q(1, 2), q(1, 3)}, q(1, 6)) == LinearInequality::make({3, 2}, 1));

    const LinearEquation e = LinearEquation::make({Integer(0), Integer(-2)}, Integer(4));
    CHECK(e.coeffs == IntegerVector{0, 1});
    CHECK(e.rhs == -2);

    // The illustrative chart: -q(0|0) - 2p(00|10) + 3p(00|20) + 4p(00|11) + 5p(10|20) - 6p(10|01) <= 7.
    const LinearInequality demo =
        from_chart({-1, 0, 0, 0, -2, 3, 0, 4, 0, 0, 0, 5, -6, 0, 0}, 7);
    RationalVector x(15, Rational(0));
    x[0] = 1;   // q_A(0|0)
    x[4] = 1;   // p(00|10)
    x[5] = 1;   // p(00|20)
    x[7] = 1;   // p(00|11)
    x[11] = 1;  // p(10|20)
    x[12] = 1;  // p(10|01)
    CHECK(evaluate_inequality(demo, x).value == -1 - 2 + 3 + 4 + 5 - 6);
    CHECK(evaluate_inequality(demo, RationalVector(15, Rational(0))).value == 0);

    const LinearInequality first = from_chart(kInequalityCharts[0], 1);
    const auto v = evaluate_inequality(first, project_fixed(deterministic(Scenario{3, 2, 2, 2}, {0, 0, 0}, {0, 0})));
    CHECK(v.value == 0);
    CHECK(v.satisfied);
    CHECK_FALSE(v.tight);
    CHECK_THROWS_AS(evaluate_inequality(first, RationalVector(3)), std::invalid_argument);
}

}  // TEST_SUITE
