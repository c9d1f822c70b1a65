#include "ncspectrum/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncs {

TotalIdeal::TotalIdeal(MultiMatrixAlgebra p, std::vector<std::size_t> b) : parent(std::move(p)), blocks(std::move(b)) {
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k] >= parent.block_count())
            throw std::invalid_argument("block " + std::to_string(blocks[k]) + " is out of range");
        if (k > 0 && blocks[k] == blocks[k - 1]) throw std::invalid_argument("block listed twice in an ideal");
    }
}

bool TotalIdeal::contains(std::size_t b) const { return std::binary_search(blocks.begin(), blocks.end(), b); }

std::string TotalIdeal::to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < blocks.size(); ++k) out += (k ? "," : "") + std::to_string(blocks[k]);
    return out + "}";
}

std::vector<TotalIdeal> all_total_ideals(const MultiMatrixAlgebra& a) {
    const std::size_t k = a.block_count();
    if (k > 12) throw std::invalid_argument("too many blocks to enumerate ideals");
    std::vector<TotalIdeal> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> blocks;
        for (std::size_t b = 0; b < k; ++b)
            if (mask >> b & 1) blocks.push_back(b);
        out.emplace_back(a, std::move(blocks));
    }
    return out;
}

MeetSemilattice total_ideal_lattice(const MultiMatrixAlgebra& a) {
    std::vector<std::string> names;
    for (std::size_t b = 0; b < a.block_count(); ++b) names.push_back("M" + std::to_string(a.block_size(b)) + "#" + std::to_string(b));
    return MeetSemilattice::powerset(names);
}

namespace {

void require_small(const CommSubalgebra& u) {
    if (u.size() > 64) throw std::invalid_argument("subalgebra has more than 64 atoms");
}

std::string describe_set(AtomSet s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t k = 0; k < 64; ++k)
        if (s >> k & 1) {
            out += (first ? "" : ",") + std::to_string(k);
            first = false;
        }
    return out + "}";
}

std::string describe_choice(const PartialIdeal& p) {
    std::string out;
    for (std::size_t u = 0; u < p.choice.size(); ++u)
        out += (u ? " " : "") + p.subdiagram->diagram.shape.nodes()[u] + ":" + describe_set(p.choice[u]);
    return out;
}

}  // namespace

AtomSet restrict_total(const TotalIdeal& i, const CommSubalgebra& u) {
    if (i.parent != u.parent()) throw std::invalid_argument("ideal and subalgebra live in different algebras");
    require_small(u);
    AtomSet out = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        bool inside = true;
        for (std::size_t b = 0; b < i.parent.block_count() && inside; ++b)
            inside = i.contains(b) || !u.atom(k).touches_block(b);
        if (inside) out |= AtomSet{1} << k;
    }
    return out;
}

PartialIdeal partial_from_total(const TotalIdeal& i, std::shared_ptr<const SubalgebraDiagram> d) {
    PartialIdeal p{std::move(d), {}};
    for (std::size_t u = 0; u < p.subdiagram->node_count(); ++u) p.choice.push_back(restrict_total(i, p.subdiagram->node(u)));
    return p;
}

AtomSet restrict_along(const SubalgebraHom& inclusion, AtomSet chosen_in_target) {
    AtomSet out = 0;
    AtomSet missing = 0;
    for (std::size_t q = 0; q < inclusion.point_map.size(); ++q) {
        auto bit = AtomSet{1} << inclusion.point_map[q];
        out |= bit;
        if (!(chosen_in_target >> q & 1)) missing |= bit;
    }
    return out & ~missing;
}

AtomSet rotate_along(const SubalgebraHom& rotation, AtomSet chosen_in_source) {
    AtomSet out = 0;
    for (std::size_t q = 0; q < rotation.point_map.size(); ++q)
        if (chosen_in_source >> rotation.point_map[q] & 1) out |= AtomSet{1} << q;
    return out;
}

std::optional<std::size_t> first_incompatible_edge(const PartialIdeal& p) {
    const auto& d = *p.subdiagram;
    if (p.choice.size() != d.node_count()) throw std::invalid_argument("partial ideal needs one choice per node");
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        if (d.kinds[e] != EdgeKind::inclusion) continue;
        const auto& edge = d.diagram.shape.edges()[e];
        if (restrict_along(d.diagram.edge_data[e], p.choice[edge.target]) != p.choice[edge.source]) return e;
    }
    return std::nullopt;
}

std::optional<std::size_t> first_unfixed_edge(const PartialIdeal& p) {
    const auto& d = *p.subdiagram;
    if (p.choice.size() != d.node_count()) throw std::invalid_argument("partial ideal needs one choice per node");
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        if (d.kinds[e] != EdgeKind::rotation) continue;
        const auto& edge = d.diagram.shape.edges()[e];
        if (rotate_along(d.diagram.edge_data[e], p.choice[edge.source]) != p.choice[edge.target]) return e;
    }
    return std::nullopt;
}

Reconstruction reconstruct_total(const PartialIdeal& p) {
    const auto& d = *p.subdiagram;
    if (p.choice.size() != d.node_count()) throw std::invalid_argument("partial ideal needs one choice per node");
    std::vector<std::size_t> blocks;
    for (std::size_t b = 0; b < d.algebra.block_count(); ++b) {
        bool touched = false;
        for (std::size_t u = 0; u < d.node_count() && !touched; ++u)
            for (std::size_t k = 0; k < d.node(u).size() && !touched; ++k)
                touched = (p.choice[u] >> k & 1) && d.node(u).atom(k).touches_block(b);
        if (touched) blocks.push_back(b);
    }
    Reconstruction r{TotalIdeal(d.algebra, blocks), false, std::nullopt};
    for (std::size_t u = 0; u < d.node_count(); ++u)
        if (restrict_total(r.candidate, d.node(u)) != p.choice[u]) {
            r.violating_node = u;
            return r;
        }
    r.ok = true;
    return r;
}

std::vector<PartialIdeal> compatible_partial_ideals(std::shared_ptr<const SubalgebraDiagram> d) {
    // Ideals of each node as a powerset lattice, restricted along inclusions.
    LatticeDiagram ideals;
    ideals.variance = Variance::contravariant;
    for (std::size_t u = 0; u < d->node_count(); ++u) {
        require_small(d->node(u));
        ideals.add_node(d->diagram.shape.nodes()[u], MeetSemilattice::powerset(spectrum(d->node(u)).points));
    }
    for (std::size_t e = 0; e < d->edge_count(); ++e) {
        if (d->kinds[e] != EdgeKind::inclusion) continue;
        const auto& edge = d->diagram.shape.edges()[e];
        LatticeHom h{ideals.node_data[edge.target], ideals.node_data[edge.source], {}};
        for (std::size_t s = 0; s < h.source.size(); ++s) h.map.push_back(restrict_along(d->diagram.edge_data[e], s));
        ideals.add_edge(edge.id, edge.source, edge.target, std::move(h));
    }
    std::vector<PartialIdeal> out;
    for (auto& family : compatible_families(ideals)) {
        PartialIdeal p{d, {}};
        for (auto x : family) p.choice.push_back(x);
        out.push_back(std::move(p));
    }
    return out;
}

MeetSemilattice closed_set_lattice(const FiniteSpace& x) { return MeetSemilattice::powerset(x.points); }

LatticeHom closed_set_map(const SpaceMap& q) {
    LatticeHom h{closed_set_lattice(q.source), closed_set_lattice(q.target), {}};
    for (std::size_t s = 0; s < h.source.size(); ++s) {
        std::size_t image = 0;
        for (std::size_t x = 0; x < q.assignment.size(); ++x)
            if (s >> x & 1) image |= std::size_t{1} << q.assignment[x];
        h.map.push_back(image);
    }
    return h;
}

TTilde t_tilde(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec) {
    auto d = std::make_shared<const SubalgebraDiagram>(build_subdiagram(a, spec));
    auto lattices = postcompose(ClosedSetFunctor{}, postcompose(SpectrumFunctor{}, d->diagram));
    auto limit = limit_semilattice(lattices);
    return {std::move(d), std::move(lattices), std::move(limit)};
}

PartialIdeal ideal_of_closed_family(const std::shared_ptr<const SubalgebraDiagram>& d,
                                    const std::vector<std::size_t>& family) {
    if (family.size() != d->node_count()) throw std::invalid_argument("family needs one closed set per node");
    PartialIdeal p{d, {}};
    for (std::size_t u = 0; u < family.size(); ++u) {
        require_small(d->node(u));
        AtomSet all = d->node(u).size() == 64 ? ~AtomSet{0} : (AtomSet{1} << d->node(u).size()) - 1;
        p.choice.push_back(all & ~static_cast<AtomSet>(family[u]));
    }
    return p;
}

Conjecture1Report verify_conjecture1(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec) {
    Conjecture1Report r;
    r.spec = spec.describe();
    const auto totals = all_total_ideals(a);
    const auto ideal_lattice = total_ideal_lattice(a);
    r.total_ideals = totals.size();

    auto tt = t_tilde(a, spec);
    const auto& d = tt.subdiagram;
    r.t_tilde_size = tt.limit.lattice.size();
    r.lattice_isomorphic = find_order_isomorphism(tt.limit.lattice, ideal_lattice).has_value();
    if (!r.lattice_isomorphic)
        r.witnesses.push_back("no order isomorphism: t_tilde has " + std::to_string(r.t_tilde_size) + " elements, " +
                              std::to_string(r.total_ideals) + " total ideals");

    // Complementation: closed family -> ideal -> total ideal (as block mask).
    auto mask_of = [](const TotalIdeal& i) {
        std::size_t m = 0;
        for (auto b : i.blocks) m |= std::size_t{1} << b;
        return m;
    };
    std::vector<std::size_t> image;
    bool correspondence = r.t_tilde_size == r.total_ideals;
    for (std::size_t f = 0; f < tt.limit.families.size() && correspondence; ++f) {
        auto rec = reconstruct_total(ideal_of_closed_family(d, tt.limit.families[f]));
        if (!rec.ok) {
            r.witnesses.push_back("family " + tt.limit.lattice.label(f) + " gives an ideal that is not total (node " +
                                  d->diagram.shape.nodes()[*rec.violating_node] + ")");
            correspondence = false;
        }
        image.push_back(mask_of(rec.candidate));
    }
    if (correspondence) {
        auto sorted = image;
        std::sort(sorted.begin(), sorted.end());
        correspondence = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (!correspondence) r.witnesses.push_back("two closed families give the same total ideal");
    }
    for (std::size_t f = 0; f < image.size() && correspondence; ++f)
        for (std::size_t g = 0; g < image.size() && correspondence; ++g)
            if (tt.limit.lattice.leq(f, g) != ideal_lattice.leq(image[g], image[f])) {
                correspondence = false;
                r.witnesses.push_back("complementation does not reverse order between " + tt.limit.lattice.label(f) +
                                      " and " + tt.limit.lattice.label(g));
            }
    r.complement_correspondence = correspondence;

    // Rotation-fixed compatible partial ideals versus total ideals.
    auto compatible = compatible_partial_ideals(d);
    r.compatible_partial_ideals = compatible.size();
    std::vector<std::size_t> reached;
    bool bijection = true;
    for (const auto& p : compatible) {
        if (!is_rotation_fixed(p)) continue;
        ++r.rotation_fixed_partial_ideals;
        auto rec = reconstruct_total(p);
        if (!rec.ok) {
            bijection = false;
            r.witnesses.push_back("rotation-fixed partial ideal with no total ideal: " + describe_choice(p));
            continue;
        }
        reached.push_back(mask_of(rec.candidate));
    }
    for (const auto& i : totals) {
        auto p = partial_from_total(i, d);
        if (!is_compatible(p) || !is_rotation_fixed(p)) {
            bijection = false;
            r.witnesses.push_back("total ideal " + i.to_string() + " restricts to an incompatible or unfixed choice");
            continue;
        }
        auto rec = reconstruct_total(p);
        if (!rec.ok || !(rec.candidate == i)) {
            bijection = false;
            r.witnesses.push_back("total ideal " + i.to_string() + " is not recovered from its restriction");
        }
    }
    std::sort(reached.begin(), reached.end());
    if (std::adjacent_find(reached.begin(), reached.end()) != reached.end()) {
        bijection = false;
        r.witnesses.push_back("two rotation-fixed partial ideals reconstruct to the same total ideal");
    }
    if (r.rotation_fixed_partial_ideals != r.total_ideals) bijection = false;
    r.round_trip_bijection = bijection;
    return r;
}

}  // namespace ncs
