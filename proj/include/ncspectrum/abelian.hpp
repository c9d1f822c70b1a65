#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncspectrum/diagram.hpp"
#include "ncspectrum/scalar.hpp"

namespace ncs {

using Word = std::vector<Integer>;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<Word>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Word row(std::size_t r) const;
    void append_row(const Word& w);

    bool is_diagonal() const;
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant via fraction-free (Bareiss) elimination. Square only.
Integer determinant(const IntegerMatrix& m);

/// Row vector times matrix.
Word mul(const Word& x, const IntegerMatrix& m);

struct SNFResult {
    IntegerMatrix U;  // rows x rows, unimodular
    IntegerMatrix D;  // rows x cols, diagonal, d_i | d_{i+1}, d_i >= 0
    IntegerMatrix V;  // cols x cols, unimodular
    std::optional<IntegerMatrix> V_inverse;
    std::size_t rank = 0;
};

struct SNFOptions {
    bool track_left = true;
    bool track_right = true;
    bool track_right_inverse = false;
};

/// Smith normal form U M V = D. Pivot: smallest nonzero absolute value,
/// ties broken in row-major order.
SNFResult snf(const IntegerMatrix& m, SNFOptions options = {});

/// Some z with z * m = x, if one exists.
std::optional<Word> solve_left(const IntegerMatrix& m, const Word& x);

/// Basis of the integer left kernel {z : z * m = 0}, one vector per row.
IntegerMatrix left_kernel(const IntegerMatrix& m);

struct InvariantFactors {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // each > 1, in divisibility order
    friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// Canonical name "Z^r ⊕ Z/d1 ⊕ ..."; the trivial group prints as "0".
std::string group_string(const InvariantFactors& f);

/// Finitely presented abelian group Z^ngens / (row lattice of relations).
///
/// The Smith normal form of the relations is computed once at construction
/// and gives canonical coordinates: torsion coordinates (reduced modulo their
/// divisor) followed by free coordinates.
class PresentedAbGroup {
public:
    PresentedAbGroup() : PresentedAbGroup(0, IntegerMatrix(0, 0)) {}
    PresentedAbGroup(std::size_t ngens, IntegerMatrix relations);

    static PresentedAbGroup free(std::size_t rank) { return {rank, IntegerMatrix(0, rank)}; }
    static PresentedAbGroup cyclic(const Integer& order);

    std::size_t ngens() const { return ngens_; }
    const IntegerMatrix& relations() const { return relations_; }

    InvariantFactors invariant_factors() const;
    std::string to_string() const { return group_string(invariant_factors()); }

    /// Divisors of the canonical coordinates: d > 1 for torsion, 0 for free.
    const std::vector<Integer>& coordinate_orders() const { return normal_->orders; }
    Word canonical(const Word& x) const;
    /// A word whose canonical coordinates are the given ones.
    Word from_canonical(const Word& coords) const;

    Word generator(std::size_t k) const;
    Word zero() const { return Word(ngens_); }
    bool is_zero(const Word& x) const;
    /// x - y lies in the relation lattice. Throws on length mismatch.
    bool element_eq(const Word& x, const Word& y) const;

    /// Same presentation (not merely isomorphic).
    friend bool operator==(const PresentedAbGroup& a, const PresentedAbGroup& b) {
        return a.ngens_ == b.ngens_ && a.relations_ == b.relations_;
    }

private:
    struct Normal {
        std::vector<std::size_t> kept;  // SNF columns with divisor != 1
        std::vector<Integer> orders;
        IntegerMatrix to_canonical;    // ngens x kept
        IntegerMatrix from_canonical;  // kept x ngens
    };
    std::size_t ngens_;
    IntegerMatrix relations_;
    std::shared_ptr<const Normal> normal_;
};

/// Homomorphism given on generators: row k of `images` is the image of
/// generator k as a codomain word.
class AbHom {
public:
    AbHom() = default;
    /// Certifies that every domain relation maps to zero; throws
    /// std::domain_error otherwise and std::invalid_argument on shape errors.
    AbHom(PresentedAbGroup domain, PresentedAbGroup codomain, IntegerMatrix images);

    static AbHom identity(const PresentedAbGroup& g);
    static AbHom zero(const PresentedAbGroup& g, const PresentedAbGroup& h);

    const PresentedAbGroup& domain() const { return domain_; }
    const PresentedAbGroup& codomain() const { return codomain_; }
    const IntegerMatrix& images() const { return images_; }

    Word apply(const Word& x) const;
    /// Agree on every generator, compared in the codomain.
    bool equals(const AbHom& other) const;

private:
    PresentedAbGroup domain_;
    PresentedAbGroup codomain_;
    IntegerMatrix images_;
};

/// g after f.
AbHom compose(const AbHom& g, const AbHom& f);

/// {x : h(x) = 0} with its inclusion into the domain.
std::pair<PresentedAbGroup, AbHom> kernel(const AbHom& h);

/// Express x (an element of h's image) as h(z). Used to read off elements
/// of a kernel through its inclusion.
std::optional<Word> preimage(const AbHom& h, const Word& x);

struct AbCategory {
    using Object = PresentedAbGroup;
    using Morphism = AbHom;
    static Morphism compose(const Morphism& g, const Morphism& f) { return ncs::compose(g, f); }
    static Morphism identity(const Object& o) { return AbHom::identity(o); }
    static bool equal(const Morphism& a, const Morphism& b) { return a.equals(b); }
    static const Object& source(const Morphism& m) { return m.domain(); }
    static const Object& target(const Morphism& m) { return m.codomain(); }
    static bool same_object(const Object& a, const Object& b) { return a == b; }
};

using AbDiagram = ShapedDiagram<AbCategory>;
using AbDiagramMorphism = DiagramMorphism<AbCategory>;

struct Colimit {
    PresentedAbGroup group;
    std::vector<AbHom> injections;  // kappa_a : D(a) -> colim D
    std::vector<std::size_t> offsets;  // first colimit generator of each node
};

/// Direct sum of the node groups modulo (g)_a ~ (D(u) g)_b for every
/// generating edge u : a -> b. Requires a covariant diagram.
Colimit colimit(const AbDiagram& d);

/// The map of colimits induced by (f, eta): [(g)_a] -> [(eta_a g)_{f a}].
/// Throws std::domain_error if (f, eta) is not natural.
AbHom colimit_induced(const AbDiagramMorphism& m, const AbDiagram& d1, const Colimit& c1, const AbDiagram& d2,
                      const Colimit& c2, bool check = true);

/// Unique map out of the colimit factoring a cocone (one hom per node into a
/// common target). Throws std::domain_error if the legs do not commute with
/// the edges.
AbHom colimit_factor(const AbDiagram& d, const Colimit& c, const std::vector<AbHom>& cocone);

}  // namespace ncs
