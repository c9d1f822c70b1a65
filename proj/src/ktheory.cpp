#include "ncspectrum/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncs {

PresentedAbGroup K_of_space(const FiniteSpace& x) {
    if (x.size() == 0) throw std::invalid_argument("K of the empty space is not used: spectra are nonempty");
    return PresentedAbGroup::free(x.size());
}

AbHom K_of_map(const SpaceMap& q) {
    IntegerMatrix images(q.target.size(), q.source.size());
    for (std::size_t x = 0; x < q.assignment.size(); ++x) images(q.assignment[x], x) += 1;
    return {K_of_space(q.target), K_of_space(q.source), std::move(images)};
}

AbDiagram k_diagram(const SubalgebraDiagram& d) {
    return postcompose(KFunctor{}, postcompose(SpectrumFunctor{}, d.diagram));
}

Word K0Group::class_of(const RankVector& ranks) const {
    if (ranks.size() != block_classes.size()) throw std::invalid_argument("rank vector has the wrong length");
    Word out = group.zero();
    for (std::size_t b = 0; b < ranks.size(); ++b)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += Integer(static_cast<unsigned long>(ranks[b])) * block_classes[b][j];
    return out;
}

K0Group k0_standard(const MultiMatrixAlgebra& a) {
    K0Group out{PresentedAbGroup::free(a.block_count()), {}};
    for (std::size_t b = 0; b < a.block_count(); ++b) out.block_classes.push_back(out.group.generator(b));
    return out;
}

AbHom k0_standard_hom(const StarHom& phi) {
    const auto& mult = phi.multiplicity();
    IntegerMatrix images(phi.domain().block_count(), phi.codomain().block_count());
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (std::size_t j = 0; j < mult[i].size(); ++j) images(j, i) = static_cast<unsigned long>(mult[i][j]);
    return {PresentedAbGroup::free(phi.domain().block_count()), PresentedAbGroup::free(phi.codomain().block_count()),
            std::move(images)};
}

Word DiagramK0::atom_class(std::size_t u, std::size_t k) const {
    return colimit.injections.at(u).apply(kdiagram.node_data.at(u).generator(k));
}

std::optional<Word> DiagramK0::class_of(const AlgebraElement& p) const {
    if (p.parent() != subdiagram.algebra) throw std::invalid_argument("projection belongs to another algebra");
    if (p.is_zero()) return group().zero();
    for (std::size_t u = 0; u < subdiagram.node_count(); ++u) {
        const auto& atoms = subdiagram.node(u).atoms();
        for (std::size_t k = 0; k < atoms.size(); ++k)
            if (atoms[k] == p) return atom_class(u, k);
    }
    for (std::size_t u = 0; u < subdiagram.node_count(); ++u)
        if (auto parts = subdiagram.node(u).decompose(p)) {
            Word out = group().zero();
            for (auto k : *parts) {
                auto c = atom_class(u, k);
                for (std::size_t j = 0; j < out.size(); ++j) out[j] += c[j];
            }
            return out;
        }
    return std::nullopt;
}

namespace {

/// Diagonal rank-one projection at the top left corner of block b.
AlgebraElement corner_projection(const MultiMatrixAlgebra& a, std::size_t b) {
    std::size_t first = 0;
    for (std::size_t k = 0; k < b; ++k) first += a.block_size(k);
    return AlgebraElement::coordinate_projection(a, {first});
}

}  // namespace

K0Group DiagramK0::k0() const {
    K0Group out{group(), {}};
    for (std::size_t b = 0; b < subdiagram.algebra.block_count(); ++b) {
        auto c = class_of(corner_projection(subdiagram.algebra, b));
        if (!c) throw std::domain_error("no node contains the rank-one projection of block " + std::to_string(b));
        out.block_classes.push_back(std::move(*c));
    }
    return out;
}

DiagramK0 k_tilde_f(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec) { return k_tilde_f(build_subdiagram(a, spec)); }

DiagramK0 k_tilde_f(SubalgebraDiagram d) {
    auto kd = k_diagram(d);
    auto c = colimit(kd);
    return {std::move(d), std::move(kd), std::move(c)};
}

bool terminal_injection_is_iso(const DiagramK0& k, std::size_t u) {
    const auto& top = k.subdiagram.node(u);
    std::vector<AbHom> legs;
    for (std::size_t a = 0; a < k.subdiagram.node_count(); ++a) {
        if (!k.subdiagram.node(a).is_subalgebra_of(top)) return false;
        legs.push_back(K_of_map(spectrum_of_inclusion(k.subdiagram.node(a), top)));
    }
    auto back = colimit_factor(k.kdiagram, k.colimit, legs);
    const auto& in = k.colimit.injections[u];
    return compose(back, in).equals(AbHom::identity(in.domain())) &&
           compose(in, back).equals(AbHom::identity(k.group()));
}

EtaReport eta(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec, std::size_t m) {
    return eta(a, k_tilde_f(stabilize(a, m), spec.stabilized(m)), m);
}

EtaReport eta(const MultiMatrixAlgebra& a, DiagramK0 target, std::size_t m) {
    if (target.subdiagram.algebra != stabilize(a, m))
        throw std::invalid_argument("colimit was not computed for " + a.to_string() + " at level " + std::to_string(m));
    EtaReport r{std::move(target), std::nullopt, std::nullopt, false, {}};
    const auto& am = r.target.subdiagram.algebra;
    const auto& colim = r.target.group();
    const auto standard = k0_standard(a);
    const std::size_t k = a.block_count();

    IntegerMatrix forward(k, colim.ngens());
    for (std::size_t b = 0; b < k; ++b) {
        auto c = r.target.class_of(corner_projection(am, b));
        if (!c) {
            r.witness = "block " + std::to_string(b) + ": no node contains its rank-one corner projection";
            return r;
        }
        for (std::size_t j = 0; j < colim.ngens(); ++j) forward(b, j) = (*c)[j];
    }
    r.forward = AbHom(standard.group, colim, std::move(forward));

    IntegerMatrix inverse(colim.ngens(), k);
    const auto& sub = r.target.subdiagram;
    for (std::size_t u = 0; u < sub.node_count(); ++u)
        for (std::size_t t = 0; t < sub.node(u).size(); ++t) {
            auto ranks = sub.node(u).atom(t).rank_vector();
            for (std::size_t b = 0; b < k; ++b) inverse(r.target.colimit.offsets[u] + t, b) = static_cast<unsigned long>(ranks[b]);
        }
    try {
        r.inverse = AbHom(colim, standard.group, std::move(inverse));
    } catch (const std::domain_error& e) {
        r.witness = std::string("rank vectors do not respect the colimit relations: ") + e.what();
        return r;
    }

    for (std::size_t b = 0; b < k; ++b) {
        auto e = standard.group.generator(b);
        if (!standard.group.element_eq(r.inverse->apply(r.forward->apply(e)), e)) {
            r.witness = "block " + std::to_string(b) + ": inverse does not return its rank-one class";
            return r;
        }
    }
    for (std::size_t u = 0; u < sub.node_count(); ++u)
        for (std::size_t t = 0; t < sub.node(u).size(); ++t) {
            auto g = colim.generator(r.target.colimit.offsets[u] + t);
            if (!colim.element_eq(r.forward->apply(r.inverse->apply(g)), g)) {
                r.witness = "node " + sub.diagram.shape.nodes()[u] + " atom " + std::to_string(t) +
                            ": class is not determined by its rank vector (sample too coarse)";
                return r;
            }
        }
    r.passed = true;
    return r;
}

NaturalityReport verify_naturality_square(const StarHom& phi, std::size_t m, const SubdiagramSpec& domain_spec,
                                          const SubdiagramSpec& codomain_spec) {
    if (!phi.unital()) throw std::invalid_argument("the naturality square needs a unital hom");
    NaturalityReport r;
    const auto phim = stabilize(phi, m);
    auto sub_a = build_subdiagram(phim.domain(), domain_spec.stabilized(m));
    auto sub_b = build_subdiagram(phim.codomain(), codomain_spec.stabilized(m));
    auto ext = extend_by_image(phim, sub_a, sub_b);

    auto eta_a = eta(phi.domain(), k_tilde_f(std::move(sub_a)), m);
    auto eta_b = eta(phi.codomain(), k_tilde_f(std::move(ext.codomain)), m);
    r.eta_domain_ok = eta_a.passed;
    r.eta_codomain_ok = eta_b.passed;
    if (!eta_a.forward || !eta_b.forward) {
        r.witness = "eta undefined: " + (eta_a.forward ? eta_b.witness : eta_a.witness);
        return r;
    }

    auto kmorphism = postcompose(KFunctor{}, postcompose(SpectrumFunctor{}, ext.morphism));
    AbHom induced;
    try {
        induced = colimit_induced(kmorphism, eta_a.target.kdiagram, eta_a.target.colimit, eta_b.target.kdiagram,
                                  eta_b.target.colimit);
    } catch (const std::domain_error& e) {
        r.witness = std::string("induced diagram morphism is not natural: ") + e.what();
        return r;
    }
    const auto k0phi = k0_standard_hom(phi);
    const auto& target = eta_b.target.group();
    for (std::size_t i = 0; i < phi.domain().block_count(); ++i) {
        auto e = k0phi.domain().generator(i);
        auto left = eta_b.forward->apply(k0phi.apply(e));
        auto right = induced.apply(eta_a.forward->apply(e));
        if (!target.element_eq(left, right)) {
            r.witness = "generator e" + std::to_string(i) + " of K0(" + phi.domain().to_string() + ")";
            r.left = std::move(left);
            r.right = std::move(right);
            return r;
        }
    }
    r.passed = true;
    if (!r.eta_domain_ok || !r.eta_codomain_ok)
        r.witness = "square commutes but eta is not invertible: " + (r.eta_domain_ok ? eta_b.witness : eta_a.witness);
    return r;
}

NonunitalK0 k_tilde_f_nonunital(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec, std::size_t m) {
    const auto am = stabilize(a, m);
    const auto [plus, pi] = unitalize(am);
    auto sub_plus = build_subdiagram(plus, spec.stabilized(m).unitalized());
    auto sub_c = build_subdiagram(pi.codomain(), SubdiagramSpec{});
    auto ext = extend_by_image(pi, sub_plus, sub_c);
    auto k_plus = k_tilde_f(std::move(sub_plus));
    auto k_c = k_tilde_f(std::move(ext.codomain));
    auto kmorphism = postcompose(KFunctor{}, postcompose(SpectrumFunctor{}, ext.morphism));
    auto induced = colimit_induced(kmorphism, k_plus.kdiagram, k_plus.colimit, k_c.kdiagram, k_c.colimit);
    auto [group, inclusion] = kernel(induced);

    NonunitalK0 out{{group, {}}, k_plus.group(), inclusion};
    for (std::size_t b = 0; b < a.block_count(); ++b) {
        auto c = k_plus.class_of(corner_projection(plus, b));
        if (!c) throw std::domain_error("no node contains the rank-one projection of block " + std::to_string(b));
        auto z = preimage(inclusion, *c);
        if (!z) throw std::domain_error("class of block " + std::to_string(b) + " does not lie in the kernel");
        out.k0.block_classes.push_back(std::move(*z));
    }
    return out;
}

StarHom random_unital_hom(std::mt19937_64& rng, std::size_t max_size, std::size_t max_blocks) {
    auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    while (true) {
        std::vector<std::size_t> dom(pick(1, max_blocks));
        std::size_t dom_size = 0;
        for (auto& n : dom) dom_size += n = pick(1, 3);
        if (dom_size > max_size) continue;
        IntMatrix mult(pick(1, max_blocks), std::vector<std::size_t>(dom.size()));
        std::size_t cod_size = 0;
        bool ok = true;
        for (auto& row : mult) {
            std::size_t n = 0;
            for (std::size_t j = 0; j < dom.size(); ++j) n += (row[j] = pick(0, 2)) * dom[j];
            ok = ok && n > 0;
            cod_size += n;
        }
        if (!ok || cod_size > max_size) continue;
        MultiMatrixAlgebra domain(dom);
        auto canonical = StarHom::unital_from_multiplicity(domain, mult);
        auto slots = canonical.assignment();
        for (auto& s : slots) std::shuffle(s.begin(), s.end(), rng);
        return {domain, canonical.codomain(), mult, true, slots};
    }
}

}  // namespace ncs
