#include "ncspectrum/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace ncs {

MultiMatrixAlgebra::MultiMatrixAlgebra(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("an algebra needs at least one block");
    for (auto n : blocks_)
        if (n == 0) throw std::invalid_argument("block sizes must be positive");
}

std::size_t MultiMatrixAlgebra::coordinate_count() const {
    std::size_t s = 0;
    for (auto n : blocks_) s += n;
    return s;
}

std::size_t MultiMatrixAlgebra::dimension() const {
    std::size_t s = 0;
    for (auto n : blocks_) s += n * n;
    return s;
}

bool MultiMatrixAlgebra::is_commutative() const {
    for (auto n : blocks_)
        if (n != 1) return false;
    return true;
}

std::string MultiMatrixAlgebra::to_string() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks_.size(); ++b) os << (b ? " + " : "") << 'M' << blocks_[b];
    return os.str();
}

AlgebraElement::AlgebraElement(MultiMatrixAlgebra parent, std::vector<ExactMatrix> parts)
    : parent_(std::move(parent)), parts_(std::move(parts)) {
    if (parts_.size() != parent_.block_count())
        throw std::invalid_argument("element has " + std::to_string(parts_.size()) + " parts, algebra has " +
                                    std::to_string(parent_.block_count()) + " blocks");
    for (std::size_t b = 0; b < parts_.size(); ++b) {
        auto n = parent_.block_size(b);
        if (parts_[b].rows() != n || parts_[b].cols() != n)
            throw std::invalid_argument("part " + std::to_string(b) + " is not " + std::to_string(n) + "x" +
                                        std::to_string(n));
    }
}

AlgebraElement AlgebraElement::zero(const MultiMatrixAlgebra& a) {
    std::vector<ExactMatrix> parts;
    for (auto n : a.blocks()) parts.push_back(ExactMatrix::zero(n, n));
    return {a, std::move(parts)};
}

AlgebraElement AlgebraElement::identity(const MultiMatrixAlgebra& a) {
    std::vector<ExactMatrix> parts;
    for (auto n : a.blocks()) parts.push_back(ExactMatrix::identity(n));
    return {a, std::move(parts)};
}

AlgebraElement AlgebraElement::diagonal(const MultiMatrixAlgebra& a, const std::vector<GaussianRational>& coords) {
    if (coords.size() != a.coordinate_count()) throw std::invalid_argument("wrong number of diagonal coordinates");
    std::vector<ExactMatrix> parts;
    std::size_t offset = 0;
    for (auto n : a.blocks()) {
        std::vector<GaussianRational> d(coords.begin() + offset, coords.begin() + offset + n);
        parts.push_back(ExactMatrix::diagonal(d));
        offset += n;
    }
    return {a, std::move(parts)};
}

AlgebraElement AlgebraElement::coordinate_projection(const MultiMatrixAlgebra& a, const std::vector<std::size_t>& coords) {
    std::vector<GaussianRational> d(a.coordinate_count());
    for (auto c : coords) d.at(c) = 1;
    return diagonal(a, d);
}

AlgebraElement AlgebraElement::standard_projection(const MultiMatrixAlgebra& a, const RankVector& ranks) {
    if (ranks.size() != a.block_count()) throw std::invalid_argument("rank vector length mismatch");
    std::vector<GaussianRational> d;
    for (std::size_t b = 0; b < ranks.size(); ++b) {
        if (ranks[b] > a.block_size(b)) throw std::invalid_argument("rank exceeds block size");
        for (std::size_t k = 0; k < a.block_size(b); ++k) d.emplace_back(k < ranks[b] ? 1 : 0);
    }
    return diagonal(a, d);
}

bool AlgebraElement::is_zero() const {
    for (const auto& p : parts_)
        if (!p.is_zero()) return false;
    return true;
}

bool AlgebraElement::is_projection() const {
    for (const auto& p : parts_)
        if (!classify(p).projection) return false;
    return true;
}

bool AlgebraElement::is_unitary() const {
    for (const auto& p : parts_)
        if (!classify(p).unitary) return false;
    return true;
}

RankVector AlgebraElement::rank_vector() const {
    RankVector r;
    for (const auto& p : parts_) r.push_back(rank(p));
    return r;
}

AlgebraElement AlgebraElement::adjoint() const {
    std::vector<ExactMatrix> parts;
    for (const auto& p : parts_) parts.push_back(p.adjoint());
    return {parent_, std::move(parts)};
}

namespace {

void require_same_parent(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.parent() != b.parent())
        throw std::invalid_argument("elements of different algebras: " + a.parent().to_string() + " vs " +
                                    b.parent().to_string());
}

template <class Op>
AlgebraElement blockwise(const AlgebraElement& a, const AlgebraElement& b, Op op) {
    require_same_parent(a, b);
    std::vector<ExactMatrix> parts;
    for (std::size_t k = 0; k < a.parts().size(); ++k) parts.push_back(op(a.part(k), b.part(k)));
    return {a.parent(), std::move(parts)};
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return blockwise(a, b, [](const ExactMatrix& x, const ExactMatrix& y) { return x + y; });
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return blockwise(a, b, [](const ExactMatrix& x, const ExactMatrix& y) { return x - y; });
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return blockwise(a, b, [](const ExactMatrix& x, const ExactMatrix& y) { return x * y; });
}

std::strong_ordering operator<=>(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_parent(a, b);
    for (std::size_t k = 0; k < a.parts_.size(); ++k)
        if (auto c = a.parts_[k] <=> b.parts_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string AlgebraElement::to_string() const {
    std::string out;
    for (std::size_t b = 0; b < parts_.size(); ++b) out += (b ? " (+) " : "") + parts_[b].to_string();
    return out;
}

namespace {

std::vector<std::vector<Slot>> canonical_assignment(const IntMatrix& mult, std::size_t domain_blocks) {
    std::vector<std::vector<Slot>> out(mult.size());
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t j = 0; j < domain_blocks; ++j)
            for (std::size_t c = 0; c < mult[i][j]; ++c) out[i].push_back({j, c});
    return out;
}

}  // namespace

StarHom::StarHom(MultiMatrixAlgebra domain, MultiMatrixAlgebra codomain, IntMatrix multiplicity, bool unital,
                 std::optional<std::vector<std::vector<Slot>>> assignment)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      multiplicity_(std::move(multiplicity)),
      unital_(unital) {
    if (multiplicity_.size() != codomain_.block_count())
        throw std::invalid_argument("multiplicity matrix needs one row per codomain block");
    for (std::size_t i = 0; i < multiplicity_.size(); ++i) {
        if (multiplicity_[i].size() != domain_.block_count())
            throw std::invalid_argument("multiplicity matrix needs one column per domain block");
        std::size_t used = 0;
        for (std::size_t j = 0; j < multiplicity_[i].size(); ++j) used += multiplicity_[i][j] * domain_.block_size(j);
        if (used > codomain_.block_size(i))
            throw std::invalid_argument("codomain block " + std::to_string(i) + " overfilled: " + std::to_string(used) +
                                        " > " + std::to_string(codomain_.block_size(i)));
        if (unital_ && used != codomain_.block_size(i))
            throw std::invalid_argument("unital hom must fill codomain block " + std::to_string(i));
    }
    if (!assignment) {
        assignment_ = canonical_assignment(multiplicity_, domain_.block_count());
        return;
    }
    assignment_ = std::move(*assignment);
    if (assignment_.size() != codomain_.block_count())
        throw std::invalid_argument("assignment needs one slot list per codomain block");
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        std::vector<std::vector<bool>> seen(domain_.block_count());
        for (std::size_t j = 0; j < domain_.block_count(); ++j) seen[j].assign(multiplicity_[i][j], false);
        for (const auto& s : assignment_[i]) {
            if (s.domain_block >= domain_.block_count() || s.copy >= multiplicity_[i][s.domain_block] ||
                seen[s.domain_block][s.copy])
                throw std::invalid_argument("assignment for codomain block " + std::to_string(i) +
                                            " does not match the multiplicities");
            seen[s.domain_block][s.copy] = true;
        }
        for (const auto& row : seen)
            for (bool b : row)
                if (!b) throw std::invalid_argument("assignment misses a copy in codomain block " + std::to_string(i));
    }
}

StarHom StarHom::unital_from_multiplicity(const MultiMatrixAlgebra& domain, const IntMatrix& multiplicity) {
    std::vector<std::size_t> blocks;
    for (const auto& row : multiplicity) {
        if (row.size() != domain.block_count())
            throw std::invalid_argument("multiplicity matrix needs one column per domain block");
        std::size_t n = 0;
        for (std::size_t j = 0; j < row.size(); ++j) n += row[j] * domain.block_size(j);
        blocks.push_back(n);
    }
    return {domain, MultiMatrixAlgebra(blocks), multiplicity, true};
}

StarHom StarHom::identity(const MultiMatrixAlgebra& a) {
    IntMatrix m(a.block_count(), std::vector<std::size_t>(a.block_count(), 0));
    for (std::size_t k = 0; k < a.block_count(); ++k) m[k][k] = 1;
    return {a, a, m, true};
}

AlgebraElement apply_hom(const StarHom& phi, const AlgebraElement& a) {
    if (a.parent() != phi.domain())
        throw std::invalid_argument("hom domain " + phi.domain().to_string() + " does not contain element of " +
                                    a.parent().to_string());
    std::vector<ExactMatrix> parts;
    for (std::size_t i = 0; i < phi.codomain().block_count(); ++i) {
        MatrixBuilder out(phi.codomain().block_size(i), phi.codomain().block_size(i));
        std::size_t offset = 0;
        for (const auto& slot : phi.assignment()[i]) {
            const auto& src = a.part(slot.domain_block);
            for (std::size_t r = 0; r < src.rows(); ++r)
                for (std::size_t c = 0; c < src.cols(); ++c)
                    if (!src(r, c).is_zero()) out.at(offset + r, offset + c) = src(r, c);
            offset += src.rows();
        }
        parts.push_back(std::move(out).build());
    }
    return {phi.codomain(), std::move(parts)};
}

StarHom compose(const StarHom& psi, const StarHom& phi) {
    if (psi.domain() != phi.codomain()) throw std::invalid_argument("homs do not chain");
    const auto& a = phi.domain();
    IntMatrix mult(psi.codomain().block_count(), std::vector<std::size_t>(a.block_count(), 0));
    std::vector<std::vector<Slot>> slots(psi.codomain().block_count());
    for (std::size_t i = 0; i < psi.codomain().block_count(); ++i) {
        std::vector<std::size_t> counter(a.block_count(), 0);
        for (const auto& outer : psi.assignment()[i])
            for (const auto& inner : phi.assignment()[outer.domain_block]) {
                slots[i].push_back({inner.domain_block, counter[inner.domain_block]++});
                ++mult[i][inner.domain_block];
            }
    }
    return {a, psi.codomain(), mult, psi.unital() && phi.unital(), slots};
}

InnerAutomorphism::InnerAutomorphism(AlgebraElement u) : u_(std::move(u)) {
    if (!u_.is_unitary()) throw std::invalid_argument("inner automorphism needs a unitary: " + u_.to_string());
    u_star_ = u_.adjoint();
}

AlgebraElement conjugate(const InnerAutomorphism& alpha, const AlgebraElement& a) {
    if (alpha.parent() != a.parent()) throw std::invalid_argument("automorphism and element live in different algebras");
    return alpha.u_ * a * alpha.u_star_;
}

MultiMatrixAlgebra stabilize(const MultiMatrixAlgebra& a, std::size_t m) {
    if (m == 0) throw std::invalid_argument("stabilization level must be at least 1");
    std::vector<std::size_t> blocks;
    for (auto n : a.blocks()) blocks.push_back(n * m);
    return MultiMatrixAlgebra(blocks);
}

StarHom stabilize(const StarHom& phi, std::size_t m) {
    return {stabilize(phi.domain(), m), stabilize(phi.codomain(), m), phi.multiplicity(), phi.unital(),
            phi.assignment()};
}

AlgebraElement stabilize(const AlgebraElement& a, std::size_t m) {
    std::vector<ExactMatrix> parts;
    for (const auto& p : a.parts()) parts.push_back(kron(p, ExactMatrix::identity(m)));
    return {stabilize(a.parent(), m), std::move(parts)};
}

AlgebraElement corner_embed(const AlgebraElement& a, std::size_t m) {
    MatrixBuilder e(m, m);
    e.at(0, 0) = 1;
    ExactMatrix e11 = std::move(e).build();
    std::vector<ExactMatrix> parts;
    for (const auto& p : a.parts()) parts.push_back(kron(p, e11));
    return {stabilize(a.parent(), m), std::move(parts)};
}

std::pair<MultiMatrixAlgebra, StarHom> unitalize(const MultiMatrixAlgebra& a) {
    auto blocks = a.blocks();
    blocks.push_back(1);
    MultiMatrixAlgebra plus(blocks);
    IntMatrix mult{std::vector<std::size_t>(blocks.size(), 0)};
    mult[0].back() = 1;
    return {plus, StarHom(plus, MultiMatrixAlgebra({1}), mult, true)};
}

StarHom unitalization_inclusion(const MultiMatrixAlgebra& a) {
    auto [plus, pi] = unitalize(a);
    IntMatrix mult(plus.block_count(), std::vector<std::size_t>(a.block_count(), 0));
    for (std::size_t k = 0; k < a.block_count(); ++k) mult[k][k] = 1;
    return {a, plus, mult, false};
}

AlgebraElement transposition_unitary(const MultiMatrixAlgebra& a, std::size_t block, std::size_t i, std::size_t j) {
    auto n = a.block_size(block);
    if (i >= n || j >= n) throw std::invalid_argument("transposition index out of range");
    auto u = AlgebraElement::identity(a);
    auto parts = u.parts();
    MatrixBuilder p(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t t = k == i ? j : k == j ? i : k;
        p.at(k, t) = 1;
    }
    parts[block] = std::move(p).build();
    return {a, std::move(parts)};
}

AlgebraElement pythagorean_unitary(const MultiMatrixAlgebra& a, std::size_t block) {
    auto n = a.block_size(block);
    if (n < 2) throw std::invalid_argument("a rotation needs a block of size at least 2");
    auto parts = AlgebraElement::identity(a).parts();
    MatrixBuilder r(std::move(parts[block]));
    r.at(0, 0) = Rational(3, 5);
    r.at(0, 1) = Rational(4, 5);
    r.at(1, 0) = Rational(-4, 5);
    r.at(1, 1) = Rational(3, 5);
    parts[block] = std::move(r).build();
    return {a, std::move(parts)};
}

}  // namespace ncs
