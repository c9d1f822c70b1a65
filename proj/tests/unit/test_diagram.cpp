#include <doctest.h>

#include "ncspectrum/ktheory.hpp"
#include "../support/generators.hpp"

using namespace ncs;

namespace {

AbHom times(long k) {
    IntegerMatrix m(1, 1);
    m(0, 0) = k;
    return AbHom(PresentedAbGroup::free(1), PresentedAbGroup::free(1), m);
}

AbDiagram arrow(long k) {
    AbDiagram d;
    d.add_node("a", PresentedAbGroup::free(1));
    d.add_node("b", PresentedAbGroup::free(1));
    d.add_edge("u", 0, 1, times(k));
    return d;
}

AbDiagramMorphism scaled(const AbDiagram& d, long k) {
    auto m = identity_morphism(d);
    for (auto& c : m.components) {
        IntegerMatrix images(c.domain().ngens(), c.domain().ngens());
        for (std::size_t i = 0; i < images.rows(); ++i) images(i, i) = k;
        c = AbHom(c.domain(), c.domain(), images);
    }
    return m;
}

}  // namespace

TEST_SUITE("diagram-category") {
    TEST_CASE("identity morphisms are natural") {
        gen::Rng rng(1);
        for (int t = 0; t < 20; ++t) {
            auto d = gen::random_ab_diagram(rng);
            CHECK(check_naturality(identity_morphism(d.diagram), d.diagram, d.diagram));
        }
    }

    TEST_CASE("zero components are natural") {
        auto d = arrow(2);
        auto m = identity_morphism(d);
        for (auto& c : m.components) c = AbHom::zero(c.domain(), c.codomain());
        CHECK(check_naturality(m, d, arrow(3)));
    }

    TEST_CASE("x2 against x3 with identity components is not natural") {
        CHECK_FALSE(check_naturality(identity_morphism(arrow(2)), arrow(2), arrow(3)));
        // With components (2, 3) both legs are multiplication by 6.
        auto m = identity_morphism(arrow(2));
        m.components = {times(2), times(3)};
        CHECK(check_naturality(m, arrow(2), arrow(3)));
    }

    TEST_CASE("malformed shape maps are rejected") {
        auto m = identity_morphism(arrow(2));
        m.edge_map[0] = {};  // a and b differ, so the empty path does not connect them
        CHECK_THROWS_AS(check_naturality(m, arrow(2), arrow(2)), std::invalid_argument);
        auto short_map = identity_morphism(arrow(2));
        short_map.node_map.pop_back();
        CHECK_THROWS_AS(check_naturality(short_map, arrow(2), arrow(2)), std::invalid_argument);
        auto contra = arrow(2);
        contra.variance = Variance::contravariant;
        CHECK_THROWS_AS(check_naturality(identity_morphism(arrow(2)), arrow(2), contra), std::invalid_argument);
    }

    TEST_CASE("validate names the offending edge") {
        auto d = arrow(2);
        d.edge_data[0] = AbHom::identity(PresentedAbGroup::free(2));
        CHECK_THROWS_WITH_AS(d.validate(), doctest::Contains("edge u"), std::invalid_argument);
    }

    TEST_CASE("composition with identities and associativity") {
        gen::Rng rng(2);
        for (int t = 0; t < 20; ++t) {
            auto d = gen::random_ab_diagram(rng).diagram;
            auto f = scaled(d, 2), g = scaled(d, -1), h = scaled(d, 3);
            auto id = identity_morphism(d);
            auto same = [](const AbDiagramMorphism& a, const AbDiagramMorphism& b) { return morphisms_equal<AbCategory>(a, b); };
            CHECK(same(compose_morphisms(id, f, Variance::covariant), f));
            CHECK(same(compose_morphisms(f, id, Variance::covariant), f));
            CHECK(same(compose_morphisms(h, compose_morphisms(g, f, Variance::covariant), Variance::covariant),
                       compose_morphisms(compose_morphisms(h, g, Variance::covariant), f, Variance::covariant)));
        }
    }

    TEST_CASE("collapsing onto a point diagram composes components") {
        AbDiagram two;
        two.add_node("x", PresentedAbGroup::free(1));
        two.add_node("y", PresentedAbGroup::free(1));
        AbDiagram pt;
        pt.add_node("p", PresentedAbGroup::free(1));
        AbDiagramMorphism collapse{{0, 0}, {}, {times(2), times(3)}};
        AbDiagramMorphism onto{{0}, {}, {times(5)}};
        CHECK(check_naturality(collapse, two, pt));
        auto c = compose_morphisms(onto, collapse, Variance::covariant);
        CHECK(c.node_map == std::vector<std::size_t>{0, 0});
        CHECK(c.components[0].equals(times(10)));
        CHECK(c.components[1].equals(times(15)));
    }

    TEST_CASE("edges map to paths and are evaluated along them") {
        AbDiagram chain;
        chain.add_node("a", PresentedAbGroup::free(1));
        chain.add_node("m", PresentedAbGroup::free(1));
        chain.add_node("b", PresentedAbGroup::free(1));
        chain.add_edge("u1", 0, 1, times(2));
        chain.add_edge("u2", 1, 2, times(3));
        CHECK(chain.evaluate(0, {0, 1}).equals(times(6)));
        CHECK(chain.evaluate(1, {}).equals(times(1)));
        AbDiagramMorphism into{{0, 2}, {{0, 1}}, {times(1), times(1)}};
        CHECK(check_naturality(into, arrow(6), chain));
        CHECK_FALSE(check_naturality(into, arrow(5), chain));
    }

    TEST_CASE("postcomposing with the spectrum and K") {
        MultiMatrixAlgebra m2({2});
        ShapedDiagram<SubalgebraCategory> one;
        one.add_node("D", CommSubalgebra::diagonal(m2));
        auto spaces = postcompose(SpectrumFunctor{}, one);
        CHECK(spaces.variance == Variance::contravariant);
        CHECK(spaces.node_data.size() == 1);
        CHECK(spaces.node_data[0].size() == 2);

        SpaceDiagram two;
        two.variance = Variance::contravariant;
        two.add_node("X", FiniteSpace::with_points(1));
        two.add_node("Y", FiniteSpace::with_points(2));
        SpaceMap collapse{FiniteSpace::with_points(2), FiniteSpace::with_points(1), {0, 0}};
        two.add_edge("i", 0, 1, collapse);
        two.validate();
        auto groups = postcompose(KFunctor{}, two);
        CHECK(groups.variance == Variance::covariant);
        groups.validate();
        CHECK(groups.edge_data[0].equals(K_of_map(collapse)));
    }

    TEST_CASE("postcompose commutes with composition of morphisms") {
        // X has 2 points, Y has 4, and the edge carries q : Y -> X. Components
        // (swap, sigma) are natural exactly when swap o q = q o sigma.
        auto x = FiniteSpace::with_points(2), y = FiniteSpace::with_points(4);
        SpaceDiagram d;
        d.variance = Variance::contravariant;
        d.add_node("X", x);
        d.add_node("Y", y);
        d.add_edge("i", 0, 1, SpaceMap{y, x, {0, 0, 1, 1}});
        SpaceMap swap{x, x, {1, 0}};
        auto m1 = identity_morphism(d), m2 = identity_morphism(d), bad = identity_morphism(d);
        m1.components = {swap, SpaceMap{y, y, {2, 3, 0, 1}}};
        m2.components = {swap, SpaceMap{y, y, {3, 2, 1, 0}}};
        bad.components = {swap, SpaceMap::identity(y)};
        CHECK(check_naturality(m1, d, d));
        CHECK(check_naturality(m2, d, d));
        CHECK_FALSE(check_naturality(bad, d, d));
        auto composite = compose_morphisms(m2, m1, Variance::contravariant);
        CHECK(check_naturality(composite, d, d));
        // K is contravariant: K(m2 o m1) = K(m1) o K(m2).
        auto kd = postcompose(KFunctor{}, d);
        auto lhs = postcompose(KFunctor{}, composite);
        auto rhs = compose_morphisms(postcompose(KFunctor{}, m1), postcompose(KFunctor{}, m2), Variance::covariant);
        CHECK(check_naturality(lhs, kd, kd));
        CHECK(morphisms_equal<AbCategory>(lhs, rhs));
    }
}
