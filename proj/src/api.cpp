#include "ncspectrum/api.hpp"

#include <random>

#include "ncspectrum/ideals.hpp"
#include "ncspectrum/ktheory.hpp"

namespace ncs::api {

namespace {

SubdiagramSpec spec_or_default(const MultiMatrixAlgebra& a, const std::optional<json>& spec) {
    return spec ? io::spec_from_json(a, *spec, "spec") : SubdiagramSpec{};
}

json class_table(const MultiMatrixAlgebra& a, const K0Group& k) {
    json rows = json::array();
    for (std::size_t b = 0; b < a.block_count(); ++b)
        rows.push_back({{"block", b},
                        {"size", a.block_size(b)},
                        {"class", io::to_json(k.group.canonical(k.block_classes[b]))}});
    return rows;
}

json eta_json(const EtaReport& r) { return {{"passed", r.passed}, {"witness", r.witness}}; }

json check(const std::string& name, bool passed, const std::string& detail) {
    return {{"name", name}, {"passed", passed}, {"detail", detail}};
}

json nodes_json(const SubalgebraDiagram& d) {
    json nodes = json::array();
    for (std::size_t u = 0; u < d.node_count(); ++u) {
        json atoms = json::array();
        for (const auto& p : d.node(u).atoms()) atoms.push_back(io::to_json(p));
        nodes.push_back({{"id", d.diagram.shape.nodes()[u]}, {"atoms", std::move(atoms)}});
    }
    return nodes;
}

json edges_json(const SubalgebraDiagram& d) {
    json edges = json::array();
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
        const auto& edge = d.diagram.shape.edges()[e];
        edges.push_back({{"id", edge.id},
                         {"source", d.diagram.shape.nodes()[edge.source]},
                         {"target", d.diagram.shape.nodes()[edge.target]},
                         {"kind", d.kinds[e] == EdgeKind::inclusion ? "inclusion" : "rotation"},
                         {"point_map", d.diagram.edge_data[e].point_map}});
    }
    return edges;
}

std::string set_label(AtomSet s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t k = 0; k < 64; ++k)
        if (s >> k & 1) {
            out += (first ? "" : ",") + std::to_string(k);
            first = false;
        }
    return out + "}";
}

}  // namespace

json k0(const json& algebra, const std::string& method, std::size_t m, const std::optional<json>& spec, bool nonunital) {
    auto a = io::algebra_from_json(algebra, "algebra");
    if (m == 0) throw io::ValidationError("stabilize", "stabilization level must be at least 1");
    json out = {{"algebra", a.to_string()}, {"method", method}};
    if (method == "standard") {
        if (nonunital) throw io::ValidationError("method", "the non-unital construction needs --method diagram");
        if (spec) throw io::ValidationError("spec", "a subdiagram spec only applies to --method diagram");
        auto k = k0_standard(a);
        out.update(io::group_json(k.group));
        out["classes"] = class_table(a, k);
        return out;
    }
    if (method != "diagram") throw io::ValidationError("method", "expected \"standard\" or \"diagram\"");
    auto s = spec_or_default(a, spec);
    out["stabilize"] = m;
    out["spec"] = s.describe();
    if (nonunital) {
        auto r = k_tilde_f_nonunital(a, s, m);
        out["nonunital"] = true;
        out.update(io::group_json(r.k0.group));
        out["unitalized_group"] = r.unitalized.to_string();
        out["classes"] = class_table(a, r.k0);
        return out;
    }
    auto r = eta(a, s, m);
    out.update(io::group_json(r.target.group()));
    out["diagram"] = {{"nodes", r.target.subdiagram.node_count()},
                      {"edges", r.target.subdiagram.edge_count()},
                      {"generators", r.target.group().ngens()}};
    out["classes"] = class_table(a, r.target.k0());
    out["eta"] = eta_json(r);
    return out;
}

json verify_theorem1(const json& algebra, const std::optional<json>& hom, const std::optional<json>& spec,
                     std::size_t m, std::size_t random_homs, std::uint64_t seed) {
    auto a = io::algebra_from_json(algebra, "algebra");
    if (m == 0) throw io::ValidationError("stabilize", "stabilization level must be at least 1");
    auto s = spec_or_default(a, spec);
    std::optional<StarHom> phi;
    if (hom) {
        phi = io::hom_from_json(a, *hom, "hom");
        if (!phi->unital()) throw io::ValidationError("hom", "the naturality square needs a unital hom");
    }
    json checks = json::array();
    bool passed = true;
    auto add = [&](json c) {
        passed = passed && c["passed"].get<bool>();
        checks.push_back(std::move(c));
    };

    auto e = eta(a, s, m);
    auto standard = k0_standard(a).group.invariant_factors();
    auto found = e.target.group().invariant_factors();
    add(check("invariant_factors", found == standard,
              e.target.group().to_string() + " vs " + group_string(standard)));
    add(check("eta", e.passed, e.passed ? "inverse checked on all generators" : e.witness));

    auto square = [&](const std::string& name, const StarHom& f, const SubdiagramSpec& domain_spec) {
        auto r = verify_naturality_square(f, m, domain_spec);
        json c = check(name, r.passed && r.eta_domain_ok && r.eta_codomain_ok,
                       r.witness.empty() ? "both composites agree on every generator" : r.witness);
        c["hom"] = io::to_json(f);
        if (!r.passed) {
            c["left"] = io::to_json(r.left);
            c["right"] = io::to_json(r.right);
        }
        add(std::move(c));
    };
    if (phi) square("naturality", *phi, s);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_homs; ++k) square("naturality_random_" + std::to_string(k), random_unital_hom(rng), {});

    return {{"algebra", a.to_string()}, {"stabilize", m}, {"spec", s.describe()}, {"seed", seed},
            {"passed", passed}, {"checks", std::move(checks)}};
}

json colimit(const json& diagram) {
    auto d = io::ab_diagram_from_json(diagram, "diagram");
    if (d.variance != Variance::covariant) throw io::ValidationError("diagram.variance", "colimits need a covariant diagram");
    auto c = ncs::colimit(d);
    json out = io::group_json(c.group);
    json inj = json::array();
    for (std::size_t n = 0; n < d.shape.node_count(); ++n) {
        json images = json::array();
        for (std::size_t g = 0; g < d.node_data[n].ngens(); ++g)
            images.push_back(io::to_json(c.group.canonical(c.injections[n].apply(d.node_data[n].generator(g)))));
        inj.push_back({{"node", d.shape.nodes()[n]}, {"generator_images", std::move(images)}});
    }
    out["injections"] = std::move(inj);
    return out;
}

json limit(const json& diagram) {
    auto d = io::lattice_diagram_from_json(diagram, "diagram");
    auto l = limit_semilattice(d);
    json elements = json::array();
    json covers = json::array();
    const auto& lat = l.lattice;
    for (std::size_t x = 0; x < lat.size(); ++x) {
        elements.push_back(lat.label(x));
        for (std::size_t y = 0; y < lat.size(); ++y) {
            if (x == y || !lat.leq(x, y)) continue;
            bool cover = true;
            for (std::size_t z = 0; z < lat.size() && cover; ++z)
                cover = z == x || z == y || !(lat.leq(x, z) && lat.leq(z, y));
            if (cover) covers.push_back({lat.label(x), lat.label(y)});
        }
    }
    return {{"size", lat.size()},
            {"nodes", d.shape.nodes()},
            {"elements", std::move(elements)},
            {"top", lat.label(lat.top())},
            {"covers", std::move(covers)}};
}

json subdiagram(const json& algebra, const std::optional<json>& spec) {
    auto a = io::algebra_from_json(algebra, "algebra");
    auto s = spec_or_default(a, spec);
    auto d = build_subdiagram(a, s);
    return {{"algebra", a.to_string()}, {"spec", s.describe()}, {"nodes", nodes_json(d)}, {"edges", edges_json(d)}};
}

json ideals(const json& algebra, const std::optional<json>& spec) {
    auto a = io::algebra_from_json(algebra, "algebra");
    auto s = spec_or_default(a, spec);
    auto r = verify_conjecture1(a, s);
    auto tt = t_tilde(a, s);
    json totals = json::array();
    for (const auto& i : all_total_ideals(a)) totals.push_back(i.to_string());
    json elements = json::array();
    for (std::size_t x = 0; x < tt.limit.lattice.size(); ++x) elements.push_back(tt.limit.lattice.label(x));
    return {{"algebra", a.to_string()},
            {"spec", r.spec},
            {"total_ideals", std::move(totals)},
            {"t_tilde", {{"size", r.t_tilde_size}, {"nodes", tt.lattices.shape.nodes()}, {"elements", std::move(elements)}}},
            {"isomorphic", r.lattice_isomorphic},
            {"complement_correspondence", r.complement_correspondence},
            {"partial_ideals",
             {{"compatible", r.compatible_partial_ideals},
              {"rotation_fixed", r.rotation_fixed_partial_ideals},
              {"round_trip_bijection", r.round_trip_bijection}}},
            {"passed", r.passed()},
            {"witnesses", r.witnesses}};
}

json partial_ideal_check(const json& file) {
    auto a = io::algebra_from_json(file.is_object() && file.contains("algebra") ? file["algebra"] : json(), "file.algebra");
    auto s = file.contains("spec") ? io::spec_from_json(a, file["spec"], "file.spec") : SubdiagramSpec{};
    auto d = std::make_shared<const SubalgebraDiagram>(build_subdiagram(a, s));
    PartialIdeal p{d, std::vector<AtomSet>(d->node_count(), 0)};
    if (!file.contains("choice")) throw io::ValidationError("file", "missing field \"choice\"");
    const auto& cj = file["choice"];
    auto read_atoms = [&](std::size_t u, const json& atoms, const std::string& w) {
        if (!atoms.is_array()) throw io::ValidationError(w, "expected an array of atom indices");
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            auto aw = w + "[" + std::to_string(k) + "]";
            if (!atoms[k].is_number_integer() || atoms[k].get<long long>() < 0 ||
                atoms[k].get<std::size_t>() >= d->node(u).size())
                throw io::ValidationError(aw, "atom index out of range for node " + d->diagram.shape.nodes()[u] + " (" +
                                                  std::to_string(d->node(u).size()) + " atoms)");
            p.choice[u] |= AtomSet{1} << atoms[k].get<std::size_t>();
        }
    };
    if (cj.is_object()) {
        for (auto it = cj.begin(); it != cj.end(); ++it) {
            auto u = d->diagram.shape.find_node(it.key());
            if (!u) throw io::ValidationError("file.choice." + it.key(), "no such node in the subdiagram");
            read_atoms(*u, *it, "file.choice." + it.key());
        }
    } else if (cj.is_array()) {
        if (cj.size() != d->node_count())
            throw io::ValidationError("file.choice", "expected " + std::to_string(d->node_count()) + " entries, one per node");
        for (std::size_t u = 0; u < cj.size(); ++u) read_atoms(u, cj[u], "file.choice[" + std::to_string(u) + "]");
    } else {
        throw io::ValidationError("file.choice", "expected an object or an array");
    }

    const auto& names = d->diagram.shape.nodes();
    const auto& edges = d->diagram.shape.edges();
    auto bad_inclusion = first_incompatible_edge(p);
    auto bad_rotation = first_unfixed_edge(p);
    json out = {{"algebra", a.to_string()}, {"spec", s.describe()}, {"nodes", nodes_json(*d)}};
    json choice = json::object();
    for (std::size_t u = 0; u < d->node_count(); ++u) choice[names[u]] = set_label(p.choice[u]);
    out["choice"] = std::move(choice);
    out["compatible"] = !bad_inclusion;
    out["incompatible_edge"] = bad_inclusion ? json(edges[*bad_inclusion].id) : json(nullptr);
    out["rotation_fixed"] = !bad_rotation;
    out["unfixed_edge"] = bad_rotation ? json(edges[*bad_rotation].id) : json(nullptr);
    auto rec = reconstruct_total(p);
    out["reconstruction"] = {{"ok", rec.ok},
                             {"total_ideal", rec.candidate.to_string()},
                             {"violating_node", rec.violating_node ? json(names[*rec.violating_node]) : json(nullptr)}};
    out["passed"] = !bad_inclusion && !bad_rotation && rec.ok;
    return out;
}

json snf(const json& matrix) {
    auto m = io::integer_matrix_from_json(matrix.is_object() && matrix.contains("matrix") ? matrix["matrix"] : matrix,
                                          "matrix");
    auto r = ncs::snf(m);
    json diagonal = json::array();
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k) diagonal.push_back(io::to_json(Word{r.D(k, k)})[0]);
    bool unimodular = abs(determinant(r.U)) == 1 && abs(determinant(r.V)) == 1;
    bool divides = true;
    for (std::size_t k = 0; k + 1 < std::min(m.rows(), m.cols()); ++k)
        divides = divides && (r.D(k + 1, k + 1) == 0 || (r.D(k, k) != 0 && r.D(k + 1, k + 1) % r.D(k, k) == 0));
    return {{"rows", m.rows()},
            {"cols", m.cols()},
            {"rank", r.rank},
            {"diagonal", std::move(diagonal)},
            {"U", io::to_json(r.U)},
            {"D", io::to_json(r.D)},
            {"V", io::to_json(r.V)},
            {"cokernel", PresentedAbGroup(m.cols(), m).to_string()},
            {"checks", {{"UMV=D", r.U * m * r.V == r.D}, {"unimodular", unimodular}, {"divisibility", divides}}}};
}

}  // namespace ncs::api
