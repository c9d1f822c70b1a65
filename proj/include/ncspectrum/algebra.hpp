#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncspectrum/matrix.hpp"

namespace ncs {

/// Finite-dimensional C*-algebra M_{n1} (+) ... (+) M_{nk}.
class MultiMatrixAlgebra {
public:
    MultiMatrixAlgebra() = default;
    /// Throws std::invalid_argument unless k >= 1 and every n_i >= 1.
    explicit MultiMatrixAlgebra(std::vector<std::size_t> blocks);

    const std::vector<std::size_t>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    std::size_t block_size(std::size_t b) const { return blocks_.at(b); }
    /// Sum of block sizes, i.e. the number of diagonal coordinates.
    std::size_t coordinate_count() const;
    /// Complex vector-space dimension, sum of n_i^2.
    std::size_t dimension() const;
    bool is_commutative() const;

    friend bool operator==(const MultiMatrixAlgebra&, const MultiMatrixAlgebra&) = default;
    std::string to_string() const;

private:
    std::vector<std::size_t> blocks_;
};

using RankVector = std::vector<std::size_t>;

class AlgebraElement {
public:
    AlgebraElement() = default;
    /// Throws std::invalid_argument when the parts do not match the block sizes.
    AlgebraElement(MultiMatrixAlgebra parent, std::vector<ExactMatrix> parts);

    static AlgebraElement zero(const MultiMatrixAlgebra& a);
    static AlgebraElement identity(const MultiMatrixAlgebra& a);
    /// Diagonal element whose coordinate values are listed block after block.
    static AlgebraElement diagonal(const MultiMatrixAlgebra& a, const std::vector<GaussianRational>& coords);
    /// Diagonal 0/1 projection onto the given global coordinates.
    static AlgebraElement coordinate_projection(const MultiMatrixAlgebra& a, const std::vector<std::size_t>& coords);
    /// Diagonal projection with ranks[b] leading ones in block b.
    static AlgebraElement standard_projection(const MultiMatrixAlgebra& a, const RankVector& ranks);

    const MultiMatrixAlgebra& parent() const { return parent_; }
    const std::vector<ExactMatrix>& parts() const { return parts_; }
    const ExactMatrix& part(std::size_t b) const { return parts_.at(b); }

    bool is_zero() const;
    bool is_projection() const;
    bool is_unitary() const;
    /// True if the part in block b is nonzero.
    bool touches_block(std::size_t b) const { return !parts_.at(b).is_zero(); }
    RankVector rank_vector() const;
    AlgebraElement adjoint() const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
    /// Blockwise matrix order (see ExactMatrix); parents must agree.
    friend std::strong_ordering operator<=>(const AlgebraElement& a, const AlgebraElement& b);

    std::string to_string() const;

private:
    MultiMatrixAlgebra parent_;
    std::vector<ExactMatrix> parts_;
};

/// One copy of a domain block placed inside a codomain block.
struct Slot {
    std::size_t domain_block = 0;
    std::size_t copy = 0;
    friend bool operator==(const Slot&, const Slot&) = default;
};

using IntMatrix = std::vector<std::vector<std::size_t>>;

/// *-homomorphism between multi-matrix algebras, given by its Bratteli
/// multiplicity matrix and an explicit block-diagonal placement of copies.
class StarHom {
public:
    StarHom() = default;
    /// Validates dimensions; with no assignment the canonical one is used
    /// (domain block ascending, then copy index). Throws std::invalid_argument.
    StarHom(MultiMatrixAlgebra domain, MultiMatrixAlgebra codomain, IntMatrix multiplicity, bool unital,
            std::optional<std::vector<std::vector<Slot>>> assignment = std::nullopt);

    /// Unital hom whose codomain blocks are forced by the multiplicities.
    static StarHom unital_from_multiplicity(const MultiMatrixAlgebra& domain, const IntMatrix& multiplicity);
    static StarHom identity(const MultiMatrixAlgebra& a);

    const MultiMatrixAlgebra& domain() const { return domain_; }
    const MultiMatrixAlgebra& codomain() const { return codomain_; }
    const IntMatrix& multiplicity() const { return multiplicity_; }
    bool unital() const { return unital_; }
    const std::vector<std::vector<Slot>>& assignment() const { return assignment_; }

    friend bool operator==(const StarHom&, const StarHom&) = default;

private:
    MultiMatrixAlgebra domain_;
    MultiMatrixAlgebra codomain_;
    IntMatrix multiplicity_;
    bool unital_ = true;
    std::vector<std::vector<Slot>> assignment_;
};

/// Place copies of a's blocks along the codomain diagonals; zero padding
/// fills unused space. Throws std::invalid_argument on parent mismatch.
AlgebraElement apply_hom(const StarHom& phi, const AlgebraElement& a);

/// psi after phi. Multiplicities multiply; slots are nested so that
/// apply_hom(compose(psi, phi), a) == apply_hom(psi, apply_hom(phi, a)).
StarHom compose(const StarHom& psi, const StarHom& phi);

class InnerAutomorphism {
public:
    /// Throws std::invalid_argument unless u is unitary in every block.
    explicit InnerAutomorphism(AlgebraElement u);
    static InnerAutomorphism identity(const MultiMatrixAlgebra& a) { return InnerAutomorphism(AlgebraElement::identity(a)); }

    const AlgebraElement& unitary() const { return u_; }
    const MultiMatrixAlgebra& parent() const { return u_.parent(); }
    bool is_identity() const { return u_ == AlgebraElement::identity(u_.parent()); }

private:
    AlgebraElement u_;
    AlgebraElement u_star_;
    friend AlgebraElement conjugate(const InnerAutomorphism&, const AlgebraElement&);
};

/// u a u*. Throws std::invalid_argument on parent mismatch.
AlgebraElement conjugate(const InnerAutomorphism& alpha, const AlgebraElement& a);

/// Matrix-tower stand-in for A (x) K: blocks n_i * m.
MultiMatrixAlgebra stabilize(const MultiMatrixAlgebra& a, std::size_t m);
/// phi (x) id_m: the same multiplicities and placement on the enlarged blocks.
StarHom stabilize(const StarHom& phi, std::size_t m);
/// a (x) 1_m, block by block.
AlgebraElement stabilize(const AlgebraElement& a, std::size_t m);
/// a (x) e_11, the corner embedding of A into A (x) M_m.
AlgebraElement corner_embed(const AlgebraElement& a, std::size_t m);

/// A+ = A (+) C together with pi: A+ -> C onto the adjoined block.
std::pair<MultiMatrixAlgebra, StarHom> unitalize(const MultiMatrixAlgebra& a);

/// Inclusion of A as the leading blocks of A+ (non-unital).
StarHom unitalization_inclusion(const MultiMatrixAlgebra& a);

/// Permutation unitary swapping coordinates i and j of block b.
AlgebraElement transposition_unitary(const MultiMatrixAlgebra& a, std::size_t block, std::size_t i, std::size_t j);
/// The 3-4-5 rotation [[3/5, 4/5], [-4/5, 3/5]] on the first two coordinates
/// of block b, identity elsewhere. Requires n_b >= 2.
AlgebraElement pythagorean_unitary(const MultiMatrixAlgebra& a, std::size_t block);

}  // namespace ncs
