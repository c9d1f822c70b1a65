#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncspectrum/abelian.hpp"
#include "ncspectrum/subdiagram.hpp"

namespace ncs {

/// K of a finite discrete space: free on its points.
/// Throws std::invalid_argument for the empty space.
PresentedAbGroup K_of_space(const FiniteSpace& x);

/// Pullback of trivial bundles along q: K(target) -> K(source),
/// e_p |-> sum of e_x over q(x) = p.
AbHom K_of_map(const SpaceMap& q);

/// K as a contravariant functor from spaces to abelian groups.
struct KFunctor {
    using From = SpaceCategory;
    using To = AbCategory;
    static constexpr bool contravariant = true;
    PresentedAbGroup object(const FiniteSpace& x) const { return K_of_space(x); }
    AbHom morphism(const SpaceMap& q) const { return K_of_map(q); }
};

/// K composed with the spectrum: a covariant diagram of free abelian groups
/// with one generator per atom of each node.
AbDiagram k_diagram(const SubalgebraDiagram& d);

/// A K_0 group together with the classes of the rank-one projections of each
/// block. Other projection classes follow by additivity.
struct K0Group {
    PresentedAbGroup group;
    std::vector<Word> block_classes;

    /// sum_i ranks[i] * block_classes[i].
    Word class_of(const RankVector& ranks) const;
};

/// K_0 via rank vectors: Z^k, block i's rank-one class is e_i.
K0Group k0_standard(const MultiMatrixAlgebra& a);

/// The multiplicity matrix acting on rank vectors.
AbHom k0_standard_hom(const StarHom& phi);

/// The colimit of K o spectrum over a sampled subalgebra diagram.
struct DiagramK0 {
    SubalgebraDiagram subdiagram;
    AbDiagram kdiagram;
    Colimit colimit;

    const PresentedAbGroup& group() const { return colimit.group; }
    /// Colimit class of atom k of node u.
    Word atom_class(std::size_t u, std::size_t k) const;
    /// Colimit class of a projection lying in some node: preferably a node
    /// with p as an atom, otherwise any node where p is a sum of atoms.
    std::optional<Word> class_of(const AlgebraElement& p) const;
    /// Block classes taken from the diagonal rank-one projection at the top
    /// left corner of each block; throws std::domain_error if one is missing
    /// from every node.
    K0Group k0() const;
};

DiagramK0 k_tilde_f(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec = {});
DiagramK0 k_tilde_f(SubalgebraDiagram d);

/// The canonical injection of node u's K-group into the colimit inverted by
/// the cocone of inclusions into u. True iff both composites are identities;
/// requires u to contain every node.
bool terminal_injection_is_iso(const DiagramK0& k, std::size_t u);

/// The comparison map eta: K_0(A) -> colimit for A (x) M_m, and the explicit
/// inverse sending the class of an atom P to the rank vector of P.
struct EtaReport {
    DiagramK0 target;
    std::optional<AbHom> forward;
    std::optional<AbHom> inverse;
    bool passed = false;
    std::string witness;  // first failing generator, empty on success
};

EtaReport eta(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec = {}, std::size_t m = 2);
/// eta into an already computed colimit for A (x) M_m.
EtaReport eta(const MultiMatrixAlgebra& a, DiagramK0 target, std::size_t m);

struct NaturalityReport {
    bool passed = false;
    bool eta_domain_ok = false;
    bool eta_codomain_ok = false;
    std::string witness;
    Word left;   // eta_B(K_0(phi)(e_i)) at the failing generator
    Word right;  // K(phi)(eta_A(e_i)) at the failing generator
};

/// Checks eta_B o K_0(phi) = K~(phi (x) id) o eta_A on every generator of
/// K_0(A). The diagram of B is the one sampled by `codomain_spec`, enlarged
/// by the image of the diagram of A. Requires phi unital.
NaturalityReport verify_naturality_square(const StarHom& phi, std::size_t m = 2, const SubdiagramSpec& domain_spec = {},
                                          const SubdiagramSpec& codomain_spec = {});

/// Kernel of K~(pi) for the unitalization pi: (A (x) M_m)+ -> C.
struct NonunitalK0 {
    K0Group k0;
    PresentedAbGroup unitalized;
    AbHom inclusion;  // kernel -> colimit of the unitalization
};

NonunitalK0 k_tilde_f_nonunital(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec = {}, std::size_t m = 2);

/// A random unital hom from an algebra with at most `max_blocks` blocks into
/// one whose block sizes sum to at most `max_size`.
StarHom random_unital_hom(std::mt19937_64& rng, std::size_t max_size = 6, std::size_t max_blocks = 3);

}  // namespace ncs
