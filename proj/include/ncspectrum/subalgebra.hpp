#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncspectrum/algebra.hpp"
#include "ncspectrum/diagram.hpp"

namespace ncs {

struct SpaceMap;

/// Unital commutative subalgebra, held as its atomic projections (a partition
/// of unity) in canonical sorted order. Two subalgebras are equal iff their
/// atom lists are.
class CommSubalgebra {
public:
    CommSubalgebra() = default;
    /// Validates that the atoms are nonzero, pairwise orthogonal projections
    /// summing to 1, then sorts them. Throws std::invalid_argument.
    CommSubalgebra(MultiMatrixAlgebra parent, std::vector<AlgebraElement> atoms);

    static CommSubalgebra scalars(const MultiMatrixAlgebra& a);
    /// Span of all diagonal matrix units.
    static CommSubalgebra diagonal(const MultiMatrixAlgebra& a);

    const MultiMatrixAlgebra& parent() const { return parent_; }
    const std::vector<AlgebraElement>& atoms() const { return atoms_ ? *atoms_ : no_atoms(); }
    const AlgebraElement& atom(std::size_t k) const { return atoms().at(k); }
    std::size_t size() const { return atoms().size(); }

    /// Indices of the atoms summing to p, if p is a projection of this
    /// subalgebra.
    std::optional<std::vector<std::size_t>> decompose(const AlgebraElement& p) const;
    bool contains_projection(const AlgebraElement& p) const { return decompose(p).has_value(); }
    /// Every atom of *this is a sum of atoms of other.
    bool is_subalgebra_of(const CommSubalgebra& other) const;

    friend bool operator==(const CommSubalgebra& a, const CommSubalgebra& b) {
        return a.parent_ == b.parent_ && (a.atoms_ == b.atoms_ || a.atoms() == b.atoms());
    }
    friend std::strong_ordering operator<=>(const CommSubalgebra& a, const CommSubalgebra& b);

private:
    /// Atoms already known to form a partition of unity, e.g. images of one
    /// under a unital *-homomorphism; only sorted.
    struct Trusted {};
    CommSubalgebra(Trusted, MultiMatrixAlgebra parent, std::vector<AlgebraElement> atoms);
    friend std::pair<CommSubalgebra, SpaceMap> rotate_subalgebra(const InnerAutomorphism&, const CommSubalgebra&);
    friend CommSubalgebra image_subalgebra(const StarHom&, const CommSubalgebra&);

    static const std::vector<AlgebraElement>& no_atoms();

    MultiMatrixAlgebra parent_;
    // Shared and immutable: subalgebras are copied into every hom and diagram.
    std::shared_ptr<const std::vector<AlgebraElement>> atoms_;
};

/// Minimal nonzero products of the generators and their complements.
/// Throws std::invalid_argument for non-projections or non-commuting pairs.
CommSubalgebra span_subalgebra(const MultiMatrixAlgebra& a, const std::vector<AlgebraElement>& gens);

/// Finite discrete space; point k is labelled "p<k>".
struct FiniteSpace {
    std::vector<std::string> points;

    static FiniteSpace with_points(std::size_t n);
    std::size_t size() const { return points.size(); }
    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;
};

struct SpaceMap {
    FiniteSpace source;
    FiniteSpace target;
    std::vector<std::size_t> assignment;  // source point -> target point

    static SpaceMap identity(const FiniteSpace& x);
    bool is_surjective() const;
    bool is_bijective() const;
    friend bool operator==(const SpaceMap&, const SpaceMap&) = default;
};

/// g after f.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

FiniteSpace spectrum(const CommSubalgebra& u);

/// Gel'fand dual of U in V: the point of an atom Q of V goes to the point of
/// the atom P of U with QP = Q. Throws std::invalid_argument unless U is in V.
SpaceMap spectrum_of_inclusion(const CommSubalgebra& u, const CommSubalgebra& v);

/// The subalgebra uUu* and the bijection Sigma(uUu*) -> Sigma(U) pairing
/// atoms uPu* and P.
std::pair<CommSubalgebra, SpaceMap> rotate_subalgebra(const InnerAutomorphism& alpha, const CommSubalgebra& u);

/// Unital *-homomorphism between commutative subalgebras, stored through its
/// Gel'fand dual: point_map sends each atom of the target to the source atom
/// whose image dominates it.
struct SubalgebraHom {
    CommSubalgebra source;
    CommSubalgebra target;
    std::vector<std::size_t> point_map;

    static SubalgebraHom identity(const CommSubalgebra& u);
    friend bool operator==(const SubalgebraHom&, const SubalgebraHom&) = default;
};

SubalgebraHom compose(const SubalgebraHom& g, const SubalgebraHom& f);

/// Restriction of Ad(u) to U, landing in V; requires uUu* to lie in V.
SubalgebraHom conjugation_hom(const InnerAutomorphism& alpha, const CommSubalgebra& u, const CommSubalgebra& v);
SubalgebraHom inclusion_hom(const CommSubalgebra& u, const CommSubalgebra& v);

/// phi(U) as a subalgebra of the codomain; atoms killed by phi drop out.
/// Requires phi unital.
CommSubalgebra image_subalgebra(const StarHom& phi, const CommSubalgebra& u);
/// phi restricted to U -> phi(U).
SubalgebraHom restrict_hom(const StarHom& phi, const CommSubalgebra& u);

/// Gel'fand spectrum of a hom: Sigma(target) -> Sigma(source).
SpaceMap spectrum_of_hom(const SubalgebraHom& h);

struct SubalgebraCategory {
    using Object = CommSubalgebra;
    using Morphism = SubalgebraHom;
    static Morphism compose(const Morphism& g, const Morphism& f) { return ncs::compose(g, f); }
    static Morphism identity(const Object& o) { return SubalgebraHom::identity(o); }
    static bool equal(const Morphism& a, const Morphism& b) { return a == b; }
    static const Object& source(const Morphism& m) { return m.source; }
    static const Object& target(const Morphism& m) { return m.target; }
    static bool same_object(const Object& a, const Object& b) { return a == b; }
};

struct SpaceCategory {
    using Object = FiniteSpace;
    using Morphism = SpaceMap;
    static Morphism compose(const Morphism& g, const Morphism& f) { return ncs::compose(g, f); }
    static Morphism identity(const Object& o) { return SpaceMap::identity(o); }
    static bool equal(const Morphism& a, const Morphism& b) { return a == b; }
    static const Object& source(const Morphism& m) { return m.source; }
    static const Object& target(const Morphism& m) { return m.target; }
    static bool same_object(const Object& a, const Object& b) { return a == b; }
};

/// Gel'fand spectrum as a contravariant functor.
struct SpectrumFunctor {
    using From = SubalgebraCategory;
    using To = SpaceCategory;
    static constexpr bool contravariant = true;
    FiniteSpace object(const CommSubalgebra& u) const { return spectrum(u); }
    SpaceMap morphism(const SubalgebraHom& h) const { return spectrum_of_hom(h); }
};

using SpaceDiagram = ShapedDiagram<SpaceCategory>;

}  // namespace ncs
