#include "ncspectrum/subdiagram.hpp"

#include <functional>
#include <stdexcept>

namespace ncs {

SubdiagramSpec SubdiagramSpec::stabilized(std::size_t m) const {
    SubdiagramSpec out = *this;
    out.rotations.clear();
    for (const auto& u : rotations) out.rotations.push_back(stabilize(u, m));
    return out;
}

SubdiagramSpec SubdiagramSpec::unitalized() const {
    SubdiagramSpec out = *this;
    out.rotations.clear();
    for (const auto& u : rotations) {
        auto parts = u.parts();
        parts.push_back(ExactMatrix::identity(1));
        out.rotations.emplace_back(unitalize(u.parent()).first, std::move(parts));
    }
    return out;
}

std::string SubdiagramSpec::describe() const {
    return "depth=" + std::to_string(depth) + " rotation_depth=" + std::to_string(rotation_depth) +
           " transpositions=" + (transpositions ? "on" : "off") + " pythagorean=" + (pythagorean ? "on" : "off") +
           " extra_rotations=" + std::to_string(rotations.size());
}

std::vector<AlgebraElement> rotation_generators(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec) {
    std::vector<AlgebraElement> out;
    if (spec.transpositions)
        for (std::size_t b = 0; b < a.block_count(); ++b)
            for (std::size_t i = 0; i < a.block_size(b); ++i)
                for (std::size_t j = i + 1; j < a.block_size(b); ++j) out.push_back(transposition_unitary(a, b, i, j));
    if (spec.pythagorean)
        for (std::size_t b = 0; b < a.block_count(); ++b)
            if (a.block_size(b) >= 2) out.push_back(pythagorean_unitary(a, b));
    for (std::size_t k = 0; k < spec.rotations.size(); ++k) {
        const auto& u = spec.rotations[k];
        if (u.parent() != a)
            throw std::invalid_argument("rotation " + std::to_string(k) + " belongs to " + u.parent().to_string() +
                                        ", not " + a.to_string());
        if (!u.is_unitary()) throw std::invalid_argument("rotation " + std::to_string(k) + " is not unitary");
        out.push_back(u);
    }
    return out;
}

std::optional<std::size_t> SubalgebraDiagram::find(const CommSubalgebra& u) const {
    for (std::size_t k = 0; k < node_count(); ++k)
        if (diagram.node_data[k] == u) return k;
    return std::nullopt;
}

std::optional<std::size_t> SubalgebraDiagram::find_edge(std::size_t s, std::size_t t, const SubalgebraHom& h) const {
    for (std::size_t e = 0; e < edge_count(); ++e) {
        const auto& edge = diagram.shape.edges()[e];
        if (edge.source == s && edge.target == t && diagram.edge_data[e] == h) return e;
    }
    return std::nullopt;
}

std::size_t SubalgebraDiagram::add_node(CommSubalgebra u) {
    if (u.parent() != algebra) throw std::invalid_argument("subalgebra belongs to another algebra");
    return diagram.add_node("U" + std::to_string(node_count()), std::move(u));
}

namespace {

std::string edge_id(const SubalgebraDiagram& d, const std::string& tag, std::size_t s, std::size_t t) {
    const auto& nodes = d.diagram.shape.nodes();
    std::string id = tag + ":" + nodes.at(s) + "," + nodes.at(t);
    for (const auto& e : d.diagram.shape.edges())
        if (e.id == id) return id + "/" + std::to_string(d.edge_count());
    return id;
}

}  // namespace

std::size_t SubalgebraDiagram::add_inclusion(std::size_t s, std::size_t t) {
    auto h = inclusion_hom(node(s), node(t));
    auto id = edge_id(*this, "inc", s, t);
    kinds.push_back(EdgeKind::inclusion);
    unitaries.push_back(std::nullopt);
    return diagram.add_edge(std::move(id), s, t, std::move(h));
}

std::size_t SubalgebraDiagram::add_rotation(const AlgebraElement& u, std::size_t s, std::size_t t, SubalgebraHom h,
                                            const std::string& tag) {
    if (h.source != node(s) || h.target != node(t)) throw std::invalid_argument("rotation does not match its endpoints");
    auto id = edge_id(*this, tag, s, t);
    kinds.push_back(EdgeKind::rotation);
    unitaries.push_back(u);
    return diagram.add_edge(std::move(id), s, t, std::move(h));
}

namespace {

std::size_t find_or_add(SubalgebraDiagram& d, CommSubalgebra u) {
    if (auto k = d.find(u)) return *k;
    return d.add_node(std::move(u));
}

/// Inclusion edges between every pair (i, j) with i != j, U_i inside U_j and
/// at least one of i, j at index >= from. With `covering_only`, an edge is
/// skipped when some other node sits strictly between its ends.
void add_inclusions(SubalgebraDiagram& d, std::size_t from, bool covering_only) {
    const std::size_t n = d.node_count();
    std::vector<std::vector<char>> inside(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (i >= from || j >= from || covering_only) && d.node(i).size() < d.node(j).size())
                inside[i][j] = d.node(i).is_subalgebra_of(d.node(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!inside[i][j] || (i < from && j < from)) continue;
            bool covers = true;
            if (covering_only)
                for (std::size_t k = 0; k < n && covers; ++k) covers = !(inside[i][k] && inside[k][j]);
            if (covers) d.add_inclusion(i, j);
        }
}

}  // namespace

SubalgebraDiagram build_subdiagram(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec) {
    SubalgebraDiagram out;
    out.algebra = a;
    const auto gens = rotation_generators(a, spec);
    std::vector<InnerAutomorphism> autos;
    for (const auto& u : gens) autos.emplace_back(u);

    const std::size_t n = a.coordinate_count();
    const std::size_t depth = std::min(spec.depth, n);
    std::vector<std::size_t> base;
    auto note = [&](CommSubalgebra u) {
        auto before = out.node_count();
        auto k = find_or_add(out, std::move(u));
        if (k == before) base.push_back(k);
    };
    note(CommSubalgebra::scalars(a));
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> subsets = [&](std::size_t start, std::size_t size) {
        if (chosen.size() == size) {
            std::vector<AlgebraElement> gens_of_node;
            for (auto c : chosen) gens_of_node.push_back(AlgebraElement::coordinate_projection(a, {c}));
            note(span_subalgebra(a, gens_of_node));
            return;
        }
        for (std::size_t c = start; c < n; ++c) {
            chosen.push_back(c);
            subsets(c + 1, size);
            chosen.pop_back();
        }
    };
    for (std::size_t size = 1; size <= depth; ++size) subsets(0, size);
    note(CommSubalgebra::diagonal(a));

    struct Pending {
        std::size_t source, target, generator;
        SubalgebraHom hom;
    };
    std::vector<Pending> pending;
    std::vector<std::size_t> frontier = base;
    for (std::size_t round = 0; round < spec.rotation_depth && !frontier.empty(); ++round) {
        std::vector<std::size_t> next;
        for (auto s : frontier)
            for (std::size_t g = 0; g < autos.size(); ++g) {
                auto [rotated, back] = rotate_subalgebra(autos[g], out.node(s));
                auto before = out.node_count();
                auto t = find_or_add(out, rotated);
                if (t == before) next.push_back(t);
                pending.push_back({s, t, g, SubalgebraHom{out.node(s), std::move(rotated), std::move(back.assignment)}});
            }
        frontier = std::move(next);
    }

    add_inclusions(out, 0, true);
    for (auto& p : pending) {
        if (p.source == p.target && p.hom == SubalgebraHom::identity(out.node(p.source))) continue;
        if (out.find_edge(p.source, p.target, p.hom)) continue;
        out.add_rotation(gens[p.generator], p.source, p.target, std::move(p.hom), "rot" + std::to_string(p.generator));
    }
    return out;
}

ImageExtension extend_by_image(const StarHom& phi, const SubalgebraDiagram& domain, const SubalgebraDiagram& codomain) {
    if (!phi.unital()) throw std::invalid_argument("image diagrams need a unital hom");
    if (phi.domain() != domain.algebra || phi.codomain() != codomain.algebra)
        throw std::invalid_argument("hom does not connect the two diagrams");
    ImageExtension ext{codomain, {}};
    auto& out = ext.codomain;
    auto& m = ext.morphism;
    const std::size_t original = out.node_count();
    for (std::size_t k = 0; k < domain.node_count(); ++k) {
        auto h = restrict_hom(phi, domain.node(k));
        m.node_map.push_back(find_or_add(out, h.target));
        m.components.push_back(std::move(h));
    }
    add_inclusions(out, original, false);

    for (std::size_t e = 0; e < domain.edge_count(); ++e) {
        const auto& edge = domain.diagram.shape.edges()[e];
        auto x = m.node_map[edge.source];
        auto y = m.node_map[edge.target];
        SubalgebraHom h;
        std::optional<AlgebraElement> w;
        if (domain.kinds[e] == EdgeKind::inclusion) {
            h = inclusion_hom(out.node(x), out.node(y));
        } else {
            w = apply_hom(phi, *domain.unitaries[e]);
            h = conjugation_hom(InnerAutomorphism(*w), out.node(x), out.node(y));
        }
        if (x == y && h == SubalgebraHom::identity(out.node(x))) {
            m.edge_map.push_back({});
        } else if (auto found = out.find_edge(x, y, h)) {
            m.edge_map.push_back({*found});
        } else if (w) {
            m.edge_map.push_back({out.add_rotation(*w, x, y, std::move(h), "img")});
        } else {
            m.edge_map.push_back({out.add_inclusion(x, y)});
        }
    }
    return ext;
}

}  // namespace ncs
