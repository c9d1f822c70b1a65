#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncspectrum/subalgebra.hpp"

namespace ncs {

/// Recipe for a finite sample of the category of unital commutative
/// subalgebras of a multi-matrix algebra and their inclusions and rotations.
///
/// Base nodes are the subalgebras generated by at most `depth` diagonal
/// coordinate projections, together with the full diagonal. Each round of
/// rotation (`rotation_depth` rounds) conjugates the nodes produced by the
/// previous round by every rotation generator and adds the images that are
/// new. Inclusion edges connect each node to the nodes covering it.
struct SubdiagramSpec {
    std::size_t depth = 1;
    std::size_t rotation_depth = 1;
    /// Permutation unitaries swapping two coordinates inside a block.
    bool transpositions = true;
    /// The 3-4-5 rotation on the first two coordinates of each block of size >= 2.
    bool pythagorean = true;
    /// Additional unitaries of the algebra this subdiagram spec is applied to.
    std::vector<AlgebraElement> rotations;

    /// The same recipe for A (x) M_m: extra rotations become u (x) 1_m.
    SubdiagramSpec stabilized(std::size_t m) const;
    /// The same recipe for A (+) C: extra rotations become u (+) 1.
    SubdiagramSpec unitalized() const;
    std::string describe() const;
};

/// Every unitary used to rotate nodes, in a fixed order: transpositions
/// block by block, then Pythagorean rotations, then the extra rotations.
/// Throws std::invalid_argument if an extra rotation is not a unitary of `a`.
std::vector<AlgebraElement> rotation_generators(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec);

enum class EdgeKind { inclusion, rotation };

/// Covariant diagram of commutative subalgebras; edge k carries either an
/// inclusion or the restriction of an inner automorphism whose unitary is
/// kept alongside.
struct SubalgebraDiagram {
    MultiMatrixAlgebra algebra;
    ShapedDiagram<SubalgebraCategory> diagram;
    std::vector<EdgeKind> kinds;
    std::vector<std::optional<AlgebraElement>> unitaries;

    std::size_t node_count() const { return diagram.shape.node_count(); }
    std::size_t edge_count() const { return diagram.shape.edge_count(); }
    const CommSubalgebra& node(std::size_t k) const { return diagram.node_data.at(k); }

    std::optional<std::size_t> find(const CommSubalgebra& u) const;
    /// An edge s -> t carrying exactly h, if present.
    std::optional<std::size_t> find_edge(std::size_t s, std::size_t t, const SubalgebraHom& h) const;

    std::size_t add_node(CommSubalgebra u);
    std::size_t add_inclusion(std::size_t s, std::size_t t);
    /// Edge s -> t carrying h = Ad(u) restricted to U_s; `tag` prefixes the edge id.
    std::size_t add_rotation(const AlgebraElement& u, std::size_t s, std::size_t t, SubalgebraHom h,
                             const std::string& tag);
};

SubalgebraDiagram build_subdiagram(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec = {});

/// The diagram of B sampled by `codomain`, enlarged by the images phi(U) of
/// the nodes of `domain` (with their inclusions into and out of the existing
/// nodes) and the images of its edges, together with the shape map and
/// components phi|_U : U -> phi(U) of the induced diagram morphism.
struct ImageExtension {
    SubalgebraDiagram codomain;
    DiagramMorphism<SubalgebraCategory> morphism;
};

/// Requires phi unital with domain and codomain matching the two diagrams.
ImageExtension extend_by_image(const StarHom& phi, const SubalgebraDiagram& domain, const SubalgebraDiagram& codomain);

}  // namespace ncs
