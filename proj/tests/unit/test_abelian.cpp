#include <doctest.h>

#include "ncspectrum/abelian.hpp"
#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace ncs;

namespace {

IntegerMatrix mat(const std::vector<Word>& rows, std::size_t cols) { return IntegerMatrix::from_rows(rows, cols); }
Word w(std::initializer_list<long> xs) {
    Word out;
    for (long x : xs) out.push_back(x);
    return out;
}

AbHom hom(const PresentedAbGroup& g, const PresentedAbGroup& h, const std::vector<Word>& rows) {
    return AbHom(g, h, mat(rows, h.ngens()));
}

const auto Z = PresentedAbGroup::free(1);

AbDiagram pushout() {
    AbDiagram d;
    d.add_node("a", Z);
    d.add_node("b", Z);
    d.add_node("c", Z);
    d.add_edge("u", 0, 1, hom(Z, Z, {w({2})}));
    d.add_edge("v", 0, 2, hom(Z, Z, {w({2})}));
    return d;
}

}  // namespace

TEST_SUITE("presented-abelian-groups") {
    TEST_CASE("snf small cases") {
        CHECK(snf(IntegerMatrix::identity(2)).D == IntegerMatrix::identity(2));
        CHECK(snf(mat({w({0})}, 1)).D == mat({w({0})}, 1));
        auto r = snf(mat({w({2, 4}), w({6, 8})}, 2));
        CHECK(r.D == mat({w({2, 0}), w({0, 4})}, 2));
        CHECK(oracle::product(oracle::product(r.U, mat({w({2, 4}), w({6, 8})}, 2)), r.V) == r.D);
    }

    TEST_CASE("snf matches determinantal divisors and certifies itself") {
        gen::Rng rng(123);
        for (int t = 0; t < 60; ++t) {
            const std::size_t rows = gen::uniform(rng, 1, 5), cols = gen::uniform(rng, 1, 5);
            IntegerMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen::uniform_signed(rng, -6, 6);
            auto r = snf(m, {true, true, true});
            CHECK(oracle::product(oracle::product(r.U, m), r.V) == r.D);
            CHECK(abs(oracle::det(r.U)) == 1);
            CHECK(abs(oracle::det(r.V)) == 1);
            REQUIRE(r.V_inverse.has_value());
            CHECK(oracle::product(r.V, *r.V_inverse) == IntegerMatrix::identity(cols));
            auto expected = oracle::determinantal_diagonal(oracle::rows_of(m), cols);
            auto euclid = oracle::euclid_diagonal(oracle::rows_of(m), cols);
            for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
                CHECK(r.D(k, k) == expected[k]);
                CHECK(euclid[k] == expected[k]);
            }
        }
    }

    TEST_CASE("snf pivoting is deterministic") {
        auto m = mat({w({4, 6, 10}), w({6, 9, 15}), w({2, 3, 5})}, 3);
        auto a = snf(m), b = snf(m);
        CHECK(a.U == b.U);
        CHECK(a.V == b.V);
        CHECK(a.rank == 1);
    }

    TEST_CASE("determinant") {
        CHECK(determinant(mat({w({2, 4}), w({6, 8})}, 2)) == -8);
        CHECK(determinant(IntegerMatrix::identity(4)) == 1);
        CHECK(determinant(mat({w({1, 2}), w({2, 4})}, 2)) == 0);
    }

    TEST_CASE("invariant factors") {
        CHECK(PresentedAbGroup::free(2).invariant_factors() == InvariantFactors{2, {}});
        CHECK(PresentedAbGroup::cyclic(2).invariant_factors() == InvariantFactors{0, {2}});
        CHECK(PresentedAbGroup(2, mat({w({1, -1})}, 2)).invariant_factors() == InvariantFactors{1, {}});
        PresentedAbGroup z6(2, mat({w({2, 0}), w({0, 3})}, 2));
        CHECK(z6.invariant_factors() == InvariantFactors{0, {6}});
        CHECK(z6.to_string() == "Z/6");
        CHECK(PresentedAbGroup(1, mat({w({1})}, 1)).to_string() == "0");
        CHECK(group_string({2, {2, 4}}) == "Z^2 ⊕ Z/2 ⊕ Z/4");
        CHECK(group_string({1, {3}}) == "Z ⊕ Z/3");
    }

    TEST_CASE("element equality") {
        auto z2 = PresentedAbGroup::cyclic(2);
        CHECK(z2.element_eq(w({1}), w({1})));
        CHECK(z2.element_eq(w({3}), w({1})));
        CHECK_FALSE(z2.element_eq(w({2}), w({1})));
        PresentedAbGroup g(2, mat({w({1, -2})}, 2));
        CHECK_FALSE(g.element_eq(w({1, 0}), w({0, 1})));
        CHECK(g.element_eq(w({1, 0}), w({0, 2})));
        CHECK_THROWS_AS(g.element_eq(w({1}), w({0, 1})), std::invalid_argument);
    }

    TEST_CASE("element equality is an equivalence invariant under redundant relations") {
        gen::Rng rng(8);
        for (int t = 0; t < 30; ++t) {
            auto node = gen::random_node_group(rng);
            const auto& g = node.group;
            auto rows = std::vector<Word>{};
            for (std::size_t r = 0; r < g.relations().rows(); ++r) rows.push_back(g.relations().row(r));
            Word extra(g.ngens());
            for (const auto& r : rows)
                for (std::size_t k = 0; k < extra.size(); ++k) extra[k] += 3 * r[k];
            rows.push_back(extra);
            PresentedAbGroup padded(g.ngens(), IntegerMatrix::from_rows(rows, g.ngens()));
            std::vector<Word> xs;
            for (int k = 0; k < 4; ++k) {
                Word x(g.ngens());
                for (auto& v : x) v = gen::uniform_signed(rng, -7, 7);
                xs.push_back(x);
            }
            for (const auto& x : xs) {
                CHECK(g.element_eq(x, x));
                for (const auto& y : xs) {
                    CHECK(g.element_eq(x, y) == g.element_eq(y, x));
                    CHECK(g.element_eq(x, y) == padded.element_eq(x, y));
                    Word diff(x.size());
                    for (std::size_t k = 0; k < x.size(); ++k) diff[k] = x[k] - y[k];
                    CHECK(g.element_eq(x, y) == gen::zero_in(node.orders, diff));
                    for (const auto& z : xs)
                        if (g.element_eq(x, y) && g.element_eq(y, z)) CHECK(g.element_eq(x, z));
                }
            }
        }
    }

    TEST_CASE("canonical coordinates round trip") {
        PresentedAbGroup g(3, mat({w({2, 4, 0}), w({0, 6, 0})}, 3));
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b) {
                Word x = w({a, b, a - b});
                CHECK(g.element_eq(g.from_canonical(g.canonical(x)), x));
            }
    }

    TEST_CASE("homs are certified") {
        auto z2 = PresentedAbGroup::cyclic(2), z4 = PresentedAbGroup::cyclic(4);
        CHECK_NOTHROW(hom(z2, z4, {w({2})}));
        CHECK_THROWS_AS(hom(z2, z4, {w({1})}), std::domain_error);
        CHECK_THROWS_AS(hom(Z, z4, {w({1, 2})}), std::invalid_argument);
        CHECK(compose(hom(Z, Z, {w({3})}), hom(Z, Z, {w({2})})).equals(hom(Z, Z, {w({6})})));
    }

    TEST_CASE("kernels") {
        auto [k1, i1] = kernel(AbHom::identity(Z));
        CHECK(k1.invariant_factors() == InvariantFactors{0, {}});
        auto fold = hom(PresentedAbGroup::free(2), Z, {w({1}), w({1})});
        auto [k2, i2] = kernel(fold);
        CHECK(k2.invariant_factors() == InvariantFactors{1, {}});
        auto gen_image = i2.apply(k2.from_canonical(w({1})));
        CHECK((PresentedAbGroup::free(2).element_eq(gen_image, w({1, -1})) ||
               PresentedAbGroup::free(2).element_eq(gen_image, w({-1, 1}))));
        auto reduce = hom(Z, PresentedAbGroup::cyclic(2), {w({1})});
        auto [k3, i3] = kernel(reduce);
        CHECK(k3.invariant_factors() == InvariantFactors{1, {}});
        auto image = i3.apply(k3.from_canonical(w({1})));
        CHECK(abs(image[0]) == 2);
        auto pre = preimage(i3, w({4}));
        REQUIRE(pre.has_value());
        CHECK(Z.element_eq(i3.apply(*pre), w({4})));
        CHECK_FALSE(preimage(i3, w({3})).has_value());
    }

    TEST_CASE("colimits of small diagrams") {
        AbDiagram single;
        single.add_node("a", Z);
        CHECK(colimit(single).group.to_string() == "Z");

        AbDiagram doubling;
        doubling.add_node("a", Z);
        doubling.add_node("b", Z);
        doubling.add_edge("u", 0, 1, hom(Z, Z, {w({2})}));
        CHECK(colimit(doubling).group.to_string() == "Z");

        auto c = colimit(pushout());
        CHECK(c.group.to_string() == "Z ⊕ Z/2");
        CHECK(oracle::invariant_factors(c.group.relations(), c.group.ngens()) == c.group.invariant_factors());
        // 2b = 2c but b != c.
        auto b = c.injections[1].apply(w({1})), cc = c.injections[2].apply(w({1}));
        CHECK_FALSE(c.group.element_eq(b, cc));
        Word twice_b(b.size()), twice_c(b.size());
        for (std::size_t k = 0; k < b.size(); ++k) {
            twice_b[k] = 2 * b[k];
            twice_c[k] = 2 * cc[k];
        }
        CHECK(c.group.element_eq(twice_b, twice_c));
    }

    TEST_CASE("colimit of a random diagram agrees with the Euclidean oracle") {
        gen::Rng rng(99);
        for (int t = 0; t < 40; ++t) {
            auto d = gen::random_ab_diagram(rng);
            auto c = colimit(d.diagram);
            CHECK(oracle::invariant_factors(c.group.relations(), c.group.ngens()) == c.group.invariant_factors());
        }
    }

    TEST_CASE("colimit rejects contravariant diagrams") {
        auto d = pushout();
        d.variance = Variance::contravariant;
        CHECK_THROWS(colimit(d));
    }

    TEST_CASE("induced maps") {
        auto d = pushout();
        auto c = colimit(d);
        CHECK(colimit_induced(identity_morphism(d), d, c, d, c).equals(AbHom::identity(c.group)));

        AbDiagram two;
        two.add_node("x", Z);
        two.add_node("y", Z);
        AbDiagram one;
        one.add_node("p", Z);
        AbDiagramMorphism fold{{0, 0}, {}, {AbHom::identity(Z), AbHom::identity(Z)}};
        auto c2 = colimit(two), c1 = colimit(one);
        auto f = colimit_induced(fold, two, c2, one, c1);
        CHECK(f.equals(hom(PresentedAbGroup::free(2), Z, {w({1}), w({1})})));

        AbDiagramMorphism unnatural = identity_morphism(d);
        unnatural.components[1] = hom(Z, Z, {w({3})});
        CHECK_THROWS_AS(colimit_induced(unnatural, d, c, d, c), std::domain_error);
    }

    TEST_CASE("factoring cocones out of the pushout") {
        auto d = pushout();
        auto c = colimit(d);
        auto z2 = PresentedAbGroup::cyclic(2);
        // Legs into Z/2: a -> 0, b -> 1, c -> 1 commute (2*1 = 0 = 2*1).
        std::vector<AbHom> legs{hom(Z, z2, {w({0})}), hom(Z, z2, {w({1})}), hom(Z, z2, {w({1})})};
        auto h = colimit_factor(d, c, legs);
        for (std::size_t a = 0; a < 3; ++a) CHECK(compose(h, c.injections[a]).equals(legs[a]));
        // a -> 1 breaks the edge squares.
        legs[0] = hom(Z, z2, {w({1})});
        CHECK_THROWS_AS(colimit_factor(d, c, legs), std::domain_error);
    }
}
