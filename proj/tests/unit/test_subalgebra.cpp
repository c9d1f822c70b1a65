#include <doctest.h>

#include "ncspectrum/subalgebra.hpp"
#include "../support/generators.hpp"

using namespace ncs;

namespace {

AlgebraElement proj(const MultiMatrixAlgebra& a, std::vector<std::size_t> coords) {
    return AlgebraElement::coordinate_projection(a, coords);
}

}  // namespace

TEST_SUITE("commutative-subalgebras-spectrum") {
    TEST_CASE("span of no generators is the scalars") {
        MultiMatrixAlgebra m2({2});
        auto u = span_subalgebra(m2, {});
        REQUIRE(u.size() == 1);
        CHECK(u.atom(0) == AlgebraElement::identity(m2));
        CHECK(u == CommSubalgebra::scalars(m2));
    }

    TEST_CASE("span of one projection is CP + C(1-P)") {
        MultiMatrixAlgebra m2({2});
        auto u = span_subalgebra(m2, {proj(m2, {0})});
        REQUIRE(u.size() == 2);
        CHECK(u.atom(0) == proj(m2, {0}));
        CHECK(u.atom(1) == proj(m2, {1}));
        CHECK(u == CommSubalgebra::diagonal(m2));
    }

    TEST_CASE("span drops empty sign patterns") {
        MultiMatrixAlgebra m3({3});
        auto u = span_subalgebra(m3, {proj(m3, {0, 1}), proj(m3, {0})});
        CHECK(u == CommSubalgebra::diagonal(m3));
        CHECK(u.contains_projection(proj(m3, {0, 1})));
        CHECK(u.decompose(proj(m3, {0, 1})) == std::vector<std::size_t>{0, 1});
    }

    TEST_CASE("span rejects non-projections and non-commuting generators") {
        MultiMatrixAlgebra m2({2});
        auto rotated = conjugate(InnerAutomorphism(pythagorean_unitary(m2, 0)), proj(m2, {0}));
        CHECK_THROWS_AS(span_subalgebra(m2, {proj(m2, {0}), rotated}), std::invalid_argument);
        CHECK_THROWS_AS(span_subalgebra(m2, {AlgebraElement::diagonal(m2, {2, 0})}), std::invalid_argument);
    }

    TEST_CASE("subalgebras validate their atoms") {
        MultiMatrixAlgebra m2({2});
        CHECK_THROWS_AS(CommSubalgebra(m2, {proj(m2, {0})}), std::invalid_argument);  // does not sum to 1
        CHECK_THROWS_AS(CommSubalgebra(m2, {proj(m2, {0}), proj(m2, {0, 1})}), std::invalid_argument);
        CHECK_THROWS_AS(CommSubalgebra(m2, {AlgebraElement::identity(m2), AlgebraElement::zero(m2)}),
                        std::invalid_argument);
        // Atom order does not matter.
        CHECK(CommSubalgebra(m2, {proj(m2, {1}), proj(m2, {0})}) == CommSubalgebra::diagonal(m2));
    }

    TEST_CASE("spectra count atoms") {
        CHECK(spectrum(CommSubalgebra::scalars(MultiMatrixAlgebra({3}))).size() == 1);
        CHECK(spectrum(CommSubalgebra::diagonal(MultiMatrixAlgebra({3}))).size() == 3);
        MultiMatrixAlgebra a({2, 3});
        CHECK(spectrum(span_subalgebra(a, {proj(a, {0})})).size() == 2);
        CHECK(spectrum(CommSubalgebra::diagonal(a)) == spectrum(CommSubalgebra::diagonal(a)));
    }

    TEST_CASE("spectrum of inclusions") {
        MultiMatrixAlgebra m2({2});
        auto scalars = CommSubalgebra::scalars(m2), diag = CommSubalgebra::diagonal(m2);
        auto q = spectrum_of_inclusion(scalars, diag);
        CHECK(q.assignment == std::vector<std::size_t>{0, 0});
        CHECK(q.is_surjective());
        CHECK(spectrum_of_inclusion(diag, diag) == SpaceMap::identity(spectrum(diag)));
        CHECK_THROWS_AS(spectrum_of_inclusion(diag, scalars), std::invalid_argument);

        MultiMatrixAlgebra m3({3});
        auto u = span_subalgebra(m3, {proj(m3, {0, 1})});
        auto d3 = CommSubalgebra::diagonal(m3);
        auto r = spectrum_of_inclusion(u, d3);
        // Atoms of u: diag(1,1,0) then diag(0,0,1).
        REQUIRE(u.atom(0) == proj(m3, {0, 1}));
        CHECK(r.assignment == std::vector<std::size_t>{0, 0, 1});
    }

    TEST_CASE("rotations") {
        MultiMatrixAlgebra m2({2});
        auto diag = CommSubalgebra::diagonal(m2);
        auto [same, id] = rotate_subalgebra(InnerAutomorphism::identity(m2), diag);
        CHECK(same == diag);
        CHECK(id == SpaceMap::identity(spectrum(diag)));

        auto [swapped, transposition] = rotate_subalgebra(InnerAutomorphism(transposition_unitary(m2, 0, 0, 1)), diag);
        CHECK(swapped == diag);
        CHECK(transposition.assignment == std::vector<std::size_t>{1, 0});

        auto [turned, pairing] = rotate_subalgebra(InnerAutomorphism(pythagorean_unitary(m2, 0)), diag);
        CHECK_FALSE(turned == diag);
        CHECK(pairing.is_bijective());
        for (std::size_t k = 0; k < turned.size(); ++k) {
            CHECK(turned.atom(k).rank_vector() == RankVector{1});
            CHECK(turned.atom(k) == conjugate(InnerAutomorphism(pythagorean_unitary(m2, 0)), diag.atom(pairing.assignment[k])));
        }
    }

    TEST_CASE("subalgebra homs and their spectra") {
        MultiMatrixAlgebra m2({2});
        auto diag = CommSubalgebra::diagonal(m2);
        auto scalars = CommSubalgebra::scalars(m2);
        auto incl = inclusion_hom(scalars, diag);
        CHECK(spectrum_of_hom(incl) == spectrum_of_inclusion(scalars, diag));
        InnerAutomorphism swap(transposition_unitary(m2, 0, 0, 1));
        auto rot = conjugation_hom(swap, diag, diag);
        CHECK(rot.point_map == std::vector<std::size_t>{1, 0});
        CHECK(compose(rot, rot) == SubalgebraHom::identity(diag));
        CHECK(compose(rot, incl) == incl);
        CHECK_THROWS_AS(conjugation_hom(InnerAutomorphism(pythagorean_unitary(m2, 0)), diag, diag), std::invalid_argument);
    }

    TEST_CASE("image subalgebras along a hom") {
        MultiMatrixAlgebra a({1, 1});
        auto phi = StarHom::unital_from_multiplicity(a, {{1, 1}, {0, 1}});
        auto diag = CommSubalgebra::diagonal(a);
        auto image = image_subalgebra(phi, diag);
        CHECK(image.size() == 2);
        auto r = restrict_hom(phi, diag);
        CHECK(r.target == image);
        CHECK(spectrum_of_hom(r).is_surjective());
    }

    TEST_CASE("random rotated chains: partition of unity, preimage sums, functoriality") {
        gen::Rng rng(41);
        for (int t = 0; t < 25; ++t) {
            auto a = gen::random_algebra(rng);
            auto parts = gen::random_partition_chain(rng, a.coordinate_count(), 3);
            InnerAutomorphism alpha(gen::random_unitary(rng, a));
            std::vector<CommSubalgebra> chain;
            for (const auto& p : parts) {
                std::vector<AlgebraElement> atoms;
                for (const auto& cell : p) atoms.push_back(conjugate(alpha, proj(a, cell)));
                chain.emplace_back(a, atoms);
            }
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(chain[i].is_subalgebra_of(chain[i + 1]));
            auto total = AlgebraElement::zero(a);
            for (const auto& p : chain[2].atoms()) total = total + p;
            CHECK(total == AlgebraElement::identity(a));
            auto uv = spectrum_of_inclusion(chain[0], chain[1]);
            auto vw = spectrum_of_inclusion(chain[1], chain[2]);
            CHECK(compose(uv, vw) == spectrum_of_inclusion(chain[0], chain[2]));
            for (std::size_t p = 0; p < chain[0].size(); ++p) {
                auto s = AlgebraElement::zero(a);
                for (std::size_t x = 0; x < chain[1].size(); ++x)
                    if (uv.assignment[x] == p) s = s + chain[1].atom(x);
                CHECK(s == chain[0].atom(p));
            }
        }
    }
}
