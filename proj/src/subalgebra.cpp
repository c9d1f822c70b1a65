#include "ncspectrum/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncs {

CommSubalgebra::CommSubalgebra(MultiMatrixAlgebra parent, std::vector<AlgebraElement> atoms)
    : parent_(std::move(parent)) {
    if (atoms.empty()) throw std::invalid_argument("a unital subalgebra has at least one atom");
    auto sum = AlgebraElement::zero(parent_);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto& p = atoms[i];
        if (p.parent() != parent_) throw std::invalid_argument("atom belongs to another algebra");
        if (p.is_zero()) throw std::invalid_argument("atoms must be nonzero");
        if (!p.is_projection()) throw std::invalid_argument("atom is not a projection: " + p.to_string());
        for (std::size_t j = 0; j < i; ++j)
            if (!(p * atoms[j]).is_zero()) throw std::invalid_argument("atoms are not orthogonal");
        sum = sum + p;
    }
    if (sum != AlgebraElement::identity(parent_)) throw std::invalid_argument("atoms do not sum to the identity");
    std::sort(atoms.begin(), atoms.end());
    atoms_ = std::make_shared<const std::vector<AlgebraElement>>(std::move(atoms));
}

CommSubalgebra::CommSubalgebra(Trusted, MultiMatrixAlgebra parent, std::vector<AlgebraElement> atoms)
    : parent_(std::move(parent)) {
    std::sort(atoms.begin(), atoms.end());
    atoms_ = std::make_shared<const std::vector<AlgebraElement>>(std::move(atoms));
}

const std::vector<AlgebraElement>& CommSubalgebra::no_atoms() {
    static const std::vector<AlgebraElement> none;
    return none;
}

CommSubalgebra CommSubalgebra::scalars(const MultiMatrixAlgebra& a) { return {a, {AlgebraElement::identity(a)}}; }

CommSubalgebra CommSubalgebra::diagonal(const MultiMatrixAlgebra& a) {
    std::vector<AlgebraElement> atoms;
    for (std::size_t c = 0; c < a.coordinate_count(); ++c) atoms.push_back(AlgebraElement::coordinate_projection(a, {c}));
    return {a, std::move(atoms)};
}

std::optional<std::vector<std::size_t>> CommSubalgebra::decompose(const AlgebraElement& p) const {
    if (p.parent() != parent_) return std::nullopt;
    std::vector<std::size_t> idx;
    auto sum = AlgebraElement::zero(parent_);
    const auto& atoms = this->atoms();
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        auto q = atoms[k] * p;
        if (q.is_zero()) continue;
        if (q != atoms[k]) return std::nullopt;
        idx.push_back(k);
        sum = sum + atoms[k];
    }
    if (sum != p) return std::nullopt;
    return idx;
}

bool CommSubalgebra::is_subalgebra_of(const CommSubalgebra& other) const {
    if (parent_ != other.parent_) return false;
    for (const auto& p : atoms())
        if (!other.contains_projection(p)) return false;
    return true;
}

std::strong_ordering operator<=>(const CommSubalgebra& a, const CommSubalgebra& b) {
    if (auto c = a.parent_.blocks() <=> b.parent_.blocks(); c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (auto c = a.atom(k) <=> b.atom(k); c != 0) return c;
    return std::strong_ordering::equal;
}

CommSubalgebra span_subalgebra(const MultiMatrixAlgebra& a, const std::vector<AlgebraElement>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].parent() != a) throw std::invalid_argument("generator belongs to another algebra");
        if (!gens[i].is_projection()) throw std::invalid_argument("generator " + std::to_string(i) + " is not a projection");
        for (std::size_t j = 0; j < i; ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i])
                throw std::invalid_argument("generators " + std::to_string(j) + " and " + std::to_string(i) +
                                            " do not commute");
    }
    const auto one = AlgebraElement::identity(a);
    std::vector<AlgebraElement> atoms{one};
    for (const auto& g : gens) {
        std::vector<AlgebraElement> next;
        auto co = one - g;
        for (const auto& p : atoms) {
            auto in = p * g;
            auto out = p * co;
            if (!in.is_zero()) next.push_back(std::move(in));
            if (!out.is_zero()) next.push_back(std::move(out));
        }
        atoms = std::move(next);
    }
    return {a, std::move(atoms)};
}

FiniteSpace FiniteSpace::with_points(std::size_t n) {
    FiniteSpace x;
    for (std::size_t k = 0; k < n; ++k) x.points.push_back("p" + std::to_string(k));
    return x;
}

SpaceMap SpaceMap::identity(const FiniteSpace& x) {
    SpaceMap m{x, x, {}};
    for (std::size_t k = 0; k < x.size(); ++k) m.assignment.push_back(k);
    return m;
}

bool SpaceMap::is_surjective() const {
    std::vector<bool> hit(target.size(), false);
    for (auto t : assignment) hit.at(t) = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool SpaceMap::is_bijective() const { return source.size() == target.size() && is_surjective(); }

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    if (f.target != g.source) throw std::invalid_argument("space maps do not chain");
    SpaceMap out{f.source, g.target, {}};
    for (auto t : f.assignment) out.assignment.push_back(g.assignment.at(t));
    return out;
}

FiniteSpace spectrum(const CommSubalgebra& u) { return FiniteSpace::with_points(u.size()); }

namespace {

/// For each atom of `target`, the index of the image atom it lies under.
std::vector<std::size_t> dominating_atoms(const std::vector<AlgebraElement>& images, const CommSubalgebra& target) {
    std::vector<std::size_t> out;
    std::vector<AlgebraElement> covered(images.size(), AlgebraElement::zero(target.parent()));
    for (const auto& q : target.atoms()) {
        std::optional<std::size_t> owner;
        for (std::size_t k = 0; k < images.size() && !owner; ++k)
            if (images[k] == q) owner = k;
        for (std::size_t k = 0; k < images.size() && !owner; ++k) {
            if (images[k].is_zero()) continue;
            auto prod = q * images[k];
            if (prod == q) {
                owner = k;
                break;
            }
            if (!prod.is_zero()) throw std::invalid_argument("image atom is not a sum of target atoms");
        }
        if (!owner) throw std::invalid_argument("target atom lies under no image atom");
        covered[*owner] = covered[*owner] + q;
        out.push_back(*owner);
    }
    for (std::size_t k = 0; k < images.size(); ++k)
        if (covered[k] != images[k]) throw std::invalid_argument("image atom is not a sum of target atoms");
    return out;
}

}  // namespace

SpaceMap spectrum_of_inclusion(const CommSubalgebra& u, const CommSubalgebra& v) {
    if (u.parent() != v.parent()) throw std::invalid_argument("subalgebras of different algebras");
    return spectrum_of_hom(inclusion_hom(u, v));
}

std::pair<CommSubalgebra, SpaceMap> rotate_subalgebra(const InnerAutomorphism& alpha, const CommSubalgebra& u) {
    if (alpha.parent() != u.parent()) throw std::invalid_argument("automorphism and subalgebra live in different algebras");
    std::vector<AlgebraElement> rotated;
    for (const auto& p : u.atoms()) rotated.push_back(conjugate(alpha, p));
    CommSubalgebra v(CommSubalgebra::Trusted{}, u.parent(), std::move(rotated));
    auto h = conjugation_hom(alpha, u, v);
    return {v, spectrum_of_hom(h)};
}

SubalgebraHom SubalgebraHom::identity(const CommSubalgebra& u) {
    SubalgebraHom h{u, u, {}};
    for (std::size_t k = 0; k < u.size(); ++k) h.point_map.push_back(k);
    return h;
}

SubalgebraHom compose(const SubalgebraHom& g, const SubalgebraHom& f) {
    if (f.target != g.source) throw std::invalid_argument("subalgebra homs do not chain");
    SubalgebraHom out{f.source, g.target, {}};
    for (auto p : g.point_map) out.point_map.push_back(f.point_map.at(p));
    return out;
}

SubalgebraHom conjugation_hom(const InnerAutomorphism& alpha, const CommSubalgebra& u, const CommSubalgebra& v) {
    if (alpha.parent() != u.parent() || u.parent() != v.parent())
        throw std::invalid_argument("conjugation across different algebras");
    std::vector<AlgebraElement> images;
    for (const auto& p : u.atoms()) images.push_back(conjugate(alpha, p));
    return {u, v, dominating_atoms(images, v)};
}

SubalgebraHom inclusion_hom(const CommSubalgebra& u, const CommSubalgebra& v) {
    if (u.parent() != v.parent()) throw std::invalid_argument("inclusion across different algebras");
    try {
        return {u, v, dominating_atoms(u.atoms(), v)};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("subalgebra is not contained in the target subalgebra");
    }
}

CommSubalgebra image_subalgebra(const StarHom& phi, const CommSubalgebra& u) {
    if (!phi.unital()) throw std::invalid_argument("image subalgebras need a unital hom");
    std::vector<AlgebraElement> atoms;
    for (const auto& p : u.atoms()) {
        auto q = apply_hom(phi, p);
        if (!q.is_zero()) atoms.push_back(std::move(q));
    }
    return {CommSubalgebra::Trusted{}, phi.codomain(), std::move(atoms)};
}

SubalgebraHom restrict_hom(const StarHom& phi, const CommSubalgebra& u) {
    auto target = image_subalgebra(phi, u);
    std::vector<AlgebraElement> images;
    for (const auto& p : u.atoms()) images.push_back(apply_hom(phi, p));
    return {u, target, dominating_atoms(images, target)};
}

SpaceMap spectrum_of_hom(const SubalgebraHom& h) { return {spectrum(h.target), spectrum(h.source), h.point_map}; }

}  // namespace ncs
