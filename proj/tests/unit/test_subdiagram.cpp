#include <doctest.h>

#include "ncspectrum/subdiagram.hpp"

using namespace ncs;

namespace {

std::size_t count(const SubalgebraDiagram& d, EdgeKind k) {
    std::size_t n = 0;
    for (auto x : d.kinds) n += x == k;
    return n;
}

}  // namespace

TEST_SUITE("ktheory") {
    TEST_CASE("C samples to one node") {
        auto d = build_subdiagram(MultiMatrixAlgebra({1}));
        CHECK(d.node_count() == 1);
        CHECK(d.edge_count() == 0);
    }

    TEST_CASE("M2 with transpositions only: scalars, diagonal, inclusion and swap") {
        SubdiagramSpec spec;
        spec.pythagorean = false;
        MultiMatrixAlgebra m2({2});
        auto d = build_subdiagram(m2, spec);
        CHECK(d.node_count() == 2);
        CHECK(d.node(0) == CommSubalgebra::scalars(m2));
        CHECK(d.node(1) == CommSubalgebra::diagonal(m2));
        CHECK(count(d, EdgeKind::inclusion) == 1);
        CHECK(count(d, EdgeKind::rotation) == 1);
        d.diagram.validate();
    }

    TEST_CASE("M2 default sample adds the rotated diagonal") {
        MultiMatrixAlgebra m2({2});
        auto d = build_subdiagram(m2);
        CHECK(d.node_count() == 3);
        auto rotated = rotate_subalgebra(InnerAutomorphism(pythagorean_unitary(m2, 0)), CommSubalgebra::diagonal(m2)).first;
        CHECK(d.find(rotated).has_value());
        // Both maximal nodes sit above the scalars.
        CHECK(count(d, EdgeKind::inclusion) == 2);
    }

    TEST_CASE("C^2 samples to scalars below the whole algebra") {
        MultiMatrixAlgebra c2({1, 1});
        auto d = build_subdiagram(c2);
        CHECK(d.node_count() == 2);
        CHECK(d.edge_count() == 1);
        CHECK(d.kinds[0] == EdgeKind::inclusion);
        CHECK(d.find(CommSubalgebra::diagonal(c2)).has_value());
    }

    TEST_CASE("sampling is deterministic and validates") {
        MultiMatrixAlgebra a({1, 2});
        auto x = build_subdiagram(a), y = build_subdiagram(a);
        CHECK(x.diagram.shape == y.diagram.shape);
        CHECK(x.diagram.node_data == y.diagram.node_data);
        x.diagram.validate();
    }

    TEST_CASE("extra rotations are validated") {
        MultiMatrixAlgebra m2({2});
        SubdiagramSpec spec;
        spec.rotations.push_back(AlgebraElement::coordinate_projection(m2, {0}));
        CHECK_THROWS_AS(build_subdiagram(m2, spec), std::invalid_argument);
        SubdiagramSpec foreign;
        foreign.rotations.push_back(AlgebraElement::identity(MultiMatrixAlgebra({3})));
        CHECK_THROWS_AS(build_subdiagram(m2, foreign), std::invalid_argument);
    }

    TEST_CASE("more rotation rounds only add nodes") {
        MultiMatrixAlgebra a({3});
        SubdiagramSpec two;
        two.rotation_depth = 2;
        auto small = build_subdiagram(a), big = build_subdiagram(a, two);
        CHECK(big.node_count() >= small.node_count());
        for (std::size_t k = 0; k < small.node_count(); ++k) CHECK(big.find(small.node(k)).has_value());
    }

    TEST_CASE("a subdiagram spec describes itself") {
        CHECK(SubdiagramSpec{}.describe() == "depth=1 rotation_depth=1 transpositions=on pythagorean=on extra_rotations=0");
    }

    TEST_CASE("image extension is a natural diagram morphism") {
        auto phi = StarHom::unital_from_multiplicity(MultiMatrixAlgebra({1, 2}), {{1, 1}, {0, 1}});
        auto da = build_subdiagram(phi.domain());
        auto db = build_subdiagram(phi.codomain());
        auto ext = extend_by_image(phi, da, db);
        CHECK(ext.codomain.node_count() >= db.node_count());
        ext.codomain.diagram.validate();
        CHECK(check_naturality(ext.morphism, da.diagram, ext.codomain.diagram));
    }
}
