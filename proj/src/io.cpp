#include "ncspectrum/io.hpp"

#include <fstream>
#include <sstream>

namespace ncs::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

const json& require(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(where, "missing field \"" + key + "\"");
    return *it;
}

const json& require_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ValidationError(where, "expected an array");
    return j;
}

std::size_t natural(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ValidationError(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

bool boolean(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw ValidationError(where, "expected true or false");
    return j.get<bool>();
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string()) throw ValidationError(where, "expected a string");
    return j.get<std::string>();
}

Integer integer(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) return z;
    }
    throw ValidationError(where, "expected an integer");
}

/// Forward exceptions from constructors with the location attached.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where, e.what());
    } catch (const std::domain_error& e) {
        throw ValidationError(where, e.what());
    }
}

std::size_t node_index(const Shape& shape, const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        auto k = natural(j, where);
        if (k >= shape.node_count()) throw ValidationError(where, "node index out of range");
        return k;
    }
    auto id = text(j, where);
    auto k = shape.find_node(id);
    if (!k) throw ValidationError(where, "unknown node \"" + id + "\"");
    return *k;
}

Variance variance_from(const json& j, const std::string& where) {
    if (!j.contains("variance")) return Variance::covariant;
    auto v = text(j["variance"], at(where, "variance"));
    if (v == "covariant") return Variance::covariant;
    if (v == "contravariant") return Variance::contravariant;
    throw ValidationError(at(where, "variance"), "expected \"covariant\" or \"contravariant\"");
}

}  // namespace

json load(const std::string& text_or_path, const std::string& where) {
    auto first = text_or_path.find_first_not_of(" \t\r\n");
    std::string content;
    if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
        content = text_or_path;
    } else {
        std::ifstream in(text_or_path);
        if (!in) throw ValidationError(where, "cannot read file " + text_or_path);
        std::stringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    }
    try {
        return json::parse(content);
    } catch (const json::parse_error& e) {
        throw ValidationError(where, std::string("malformed JSON: ") + e.what());
    }
}

GaussianRational scalar_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return GaussianRational(Rational(std::to_string(j.get<long long>())));
    if (j.is_string()) return located(where, [&] { return GaussianRational::parse(j.get<std::string>()); });
    throw ValidationError(where, "expected an integer or a string such as \"3/5\" or \"1/2-i\"");
}

json to_json(const GaussianRational& x) { return x.to_string(); }

ExactMatrix matrix_from_json(const json& j, const std::string& where) {
    require_array(j, where);
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<GaussianRational> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = require_array(j[r], at(where, r));
        if (r == 0) cols = row.size();
        if (row.size() != cols) throw ValidationError(at(where, r), "rows have different lengths");
        for (std::size_t c = 0; c < cols; ++c) entries.push_back(scalar_from_json(row[c], at(at(where, r), c)));
    }
    return {rows, cols, std::move(entries)};
}

json to_json(const ExactMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

IntegerMatrix integer_matrix_from_json(const json& j, const std::string& where, std::size_t cols_if_empty) {
    require_array(j, where);
    std::vector<Word> rows;
    std::size_t cols = j.empty() ? cols_if_empty : 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto& row = require_array(j[r], at(where, r));
        if (r == 0) cols = row.size();
        if (row.size() != cols) throw ValidationError(at(where, r), "rows have different lengths");
        Word w;
        for (std::size_t c = 0; c < cols; ++c) w.push_back(integer(row[c], at(at(where, r), c)));
        rows.push_back(std::move(w));
    }
    return IntegerMatrix::from_rows(rows, cols);
}

json to_json(const Word& w) {
    json out = json::array();
    for (const auto& x : w) {
        if (x.fits_slong_p())
            out.push_back(x.get_si());
        else
            out.push_back(x.get_str());
    }
    return out;
}

json to_json(const IntegerMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

MultiMatrixAlgebra algebra_from_json(const json& j, const std::string& where) {
    const json& blocks = j.is_array() ? j : require(j, "blocks", where);
    auto bw = j.is_array() ? where : at(where, "blocks");
    require_array(blocks, bw);
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < blocks.size(); ++k) sizes.push_back(natural(blocks[k], at(bw, k)));
    return located(bw, [&] { return MultiMatrixAlgebra(sizes); });
}

json to_json(const MultiMatrixAlgebra& a) { return {{"blocks", a.blocks()}}; }

AlgebraElement element_from_json(const MultiMatrixAlgebra& a, const json& j, const std::string& where) {
    require_array(j, where);
    std::vector<ExactMatrix> parts;
    for (std::size_t k = 0; k < j.size(); ++k) parts.push_back(matrix_from_json(j[k], at(where, k)));
    return located(where, [&] { return AlgebraElement(a, std::move(parts)); });
}

json to_json(const AlgebraElement& x) {
    json out = json::array();
    for (const auto& p : x.parts()) out.push_back(to_json(p));
    return out;
}

StarHom hom_from_json(const MultiMatrixAlgebra& domain, const json& j, const std::string& where) {
    const auto& mj = require(j, "multiplicity", where);
    require_array(mj, at(where, "multiplicity"));
    IntMatrix mult;
    for (std::size_t i = 0; i < mj.size(); ++i) {
        const auto& row = require_array(mj[i], at(at(where, "multiplicity"), i));
        std::vector<std::size_t> r;
        for (std::size_t c = 0; c < row.size(); ++c) r.push_back(natural(row[c], at(at(at(where, "multiplicity"), i), c)));
        mult.push_back(std::move(r));
    }
    bool unital = j.contains("unital") ? boolean(j["unital"], at(where, "unital")) : true;
    std::optional<std::vector<std::vector<Slot>>> assignment;
    if (j.contains("assignment")) {
        auto aw = at(where, "assignment");
        const auto& aj = require_array(j["assignment"], aw);
        assignment.emplace();
        for (std::size_t i = 0; i < aj.size(); ++i) {
            const auto& row = require_array(aj[i], at(aw, i));
            std::vector<Slot> slots;
            for (std::size_t s = 0; s < row.size(); ++s) {
                auto sw = at(at(aw, i), s);
                const auto& pair = require_array(row[s], sw);
                if (pair.size() != 2) throw ValidationError(sw, "expected [domain block, copy]");
                slots.push_back({natural(pair[0], at(sw, 0)), natural(pair[1], at(sw, 1))});
            }
            assignment->push_back(std::move(slots));
        }
    }
    return located(where, [&] {
        if (j.contains("codomain"))
            return StarHom(domain, algebra_from_json(j["codomain"], at(where, "codomain")), mult, unital, assignment);
        if (!unital) throw std::invalid_argument("a non-unital hom needs an explicit codomain");
        auto forced = StarHom::unital_from_multiplicity(domain, mult);
        return StarHom(domain, forced.codomain(), mult, true, assignment);
    });
}

json to_json(const StarHom& phi) {
    json assignment = json::array();
    for (const auto& row : phi.assignment()) {
        json r = json::array();
        for (const auto& s : row) r.push_back({s.domain_block, s.copy});
        assignment.push_back(std::move(r));
    }
    return {{"domain", to_json(phi.domain())},
            {"codomain", to_json(phi.codomain())},
            {"multiplicity", phi.multiplicity()},
            {"unital", phi.unital()},
            {"assignment", std::move(assignment)}};
}

SubdiagramSpec spec_from_json(const MultiMatrixAlgebra& a, const json& j, const std::string& where) {
    if (!j.is_object()) throw ValidationError(where, "expected an object");
    SubdiagramSpec spec;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& key = it.key();
        auto kw = at(where, key);
        if (key == "depth")
            spec.depth = natural(*it, kw);
        else if (key == "rotation_depth")
            spec.rotation_depth = natural(*it, kw);
        else if (key == "transpositions")
            spec.transpositions = boolean(*it, kw);
        else if (key == "pythagorean")
            spec.pythagorean = boolean(*it, kw);
        else if (key == "rotations") {
            require_array(*it, kw);
            for (std::size_t k = 0; k < it->size(); ++k) {
                auto u = element_from_json(a, (*it)[k], at(kw, k));
                if (!u.is_unitary()) throw ValidationError(at(kw, k), "rotation is not unitary");
                spec.rotations.push_back(std::move(u));
            }
        } else
            throw ValidationError(kw, "unknown spec field");
    }
    return spec;
}

AbDiagram ab_diagram_from_json(const json& j, const std::string& where) {
    AbDiagram d;
    d.variance = variance_from(j, where);
    auto nw = at(where, "nodes");
    const auto& nodes = require_array(require(j, "nodes", where), nw);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        auto w = at(nw, k);
        auto id = text(require(nodes[k], "id", w), at(w, "id"));
        if (d.shape.find_node(id)) throw ValidationError(at(w, "id"), "duplicate node id");
        auto gens = natural(require(nodes[k], "generators", w), at(w, "generators"));
        IntegerMatrix rel(0, gens);
        if (nodes[k].contains("relations")) {
            rel = integer_matrix_from_json(nodes[k]["relations"], at(w, "relations"), gens);
            if (rel.cols() != gens) throw ValidationError(at(w, "relations"), "relation length differs from generator count");
        }
        d.add_node(id, PresentedAbGroup(gens, rel));
    }
    auto ew = at(where, "edges");
    const json empty = json::array();
    const auto& edges = j.contains("edges") ? require_array(j["edges"], ew) : empty;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto w = at(ew, k);
        auto id = edges[k].contains("id") ? text(edges[k]["id"], at(w, "id")) : "e" + std::to_string(k);
        auto s = node_index(d.shape, require(edges[k], "source", w), at(w, "source"));
        auto t = node_index(d.shape, require(edges[k], "target", w), at(w, "target"));
        const auto& from = d.node_data[d.variance == Variance::covariant ? s : t];
        const auto& to = d.node_data[d.variance == Variance::covariant ? t : s];
        auto images = integer_matrix_from_json(require(edges[k], "images", w), at(w, "images"), to.ngens());
        if (images.rows() != from.ngens() || images.cols() != to.ngens())
            throw ValidationError(at(w, "images"), "expected one image row per source generator, each of length " +
                                                       std::to_string(to.ngens()));
        d.add_edge(id, s, t, located(at(w, "images"), [&] { return AbHom(from, to, images); }));
    }
    return d;
}

namespace {

MeetSemilattice lattice_from_json(const json& j, const std::string& where) {
    if (j.contains("powerset")) {
        const auto& pj = require_array(j["powerset"], at(where, "powerset"));
        std::vector<std::string> points;
        for (std::size_t k = 0; k < pj.size(); ++k) points.push_back(text(pj[k], at(at(where, "powerset"), k)));
        return located(where, [&] { return MeetSemilattice::powerset(points); });
    }
    auto elw = at(where, "elements");
    const auto& ej = require_array(require(j, "elements", where), elw);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < ej.size(); ++k) labels.push_back(text(ej[k], at(elw, k)));
    const std::size_t n = labels.size();
    auto index = [&](const json& x, const std::string& w) {
        auto l = text(x, w);
        for (std::size_t k = 0; k < n; ++k)
            if (labels[k] == l) return k;
        throw ValidationError(w, "unknown element \"" + l + "\"");
    };
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < n; ++k) leq[k][k] = true;
    auto ow = at(where, "order");
    const json empty = json::array();
    const auto& oj = j.contains("order") ? require_array(j["order"], ow) : empty;
    for (std::size_t k = 0; k < oj.size(); ++k) {
        const auto& pair = require_array(oj[k], at(ow, k));
        if (pair.size() != 2) throw ValidationError(at(ow, k), "expected [lower, upper]");
        leq[index(pair[0], at(at(ow, k), 0))][index(pair[1], at(at(ow, k), 1))] = true;
    }
    // Reflexive-transitive closure of the listed pairs.
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (leq[a][m] && leq[m][b]) leq[a][b] = true;
    return located(where, [&] { return MeetSemilattice(labels, leq); });
}

}  // namespace

LatticeDiagram lattice_diagram_from_json(const json& j, const std::string& where) {
    LatticeDiagram d;
    d.variance = variance_from(j, where);
    auto nw = at(where, "nodes");
    const auto& nodes = require_array(require(j, "nodes", where), nw);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        auto w = at(nw, k);
        auto id = text(require(nodes[k], "id", w), at(w, "id"));
        if (d.shape.find_node(id)) throw ValidationError(at(w, "id"), "duplicate node id");
        d.add_node(id, lattice_from_json(nodes[k], w));
    }
    auto ew = at(where, "edges");
    const json empty = json::array();
    const auto& edges = j.contains("edges") ? require_array(j["edges"], ew) : empty;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto w = at(ew, k);
        auto id = edges[k].contains("id") ? text(edges[k]["id"], at(w, "id")) : "e" + std::to_string(k);
        auto s = node_index(d.shape, require(edges[k], "source", w), at(w, "source"));
        auto t = node_index(d.shape, require(edges[k], "target", w), at(w, "target"));
        const auto& from = d.node_data[d.variance == Variance::covariant ? s : t];
        const auto& to = d.node_data[d.variance == Variance::covariant ? t : s];
        LatticeHom h{from, to, std::vector<std::size_t>(from.size())};
        auto mw = at(w, "map");
        const auto& mj = require(edges[k], "map", w);
        auto target_of = [&](const json& x, const std::string& xw) {
            auto found = to.find(text(x, xw));
            if (!found) throw ValidationError(xw, "not an element of the target lattice");
            return *found;
        };
        if (mj.is_object()) {
            for (std::size_t e = 0; e < from.size(); ++e) {
                const auto& label = from.label(e);
                if (!mj.contains(label)) throw ValidationError(mw, "no image for \"" + label + "\"");
                h.map[e] = target_of(mj[label], at(mw, label));
            }
        } else {
            require_array(mj, mw);
            if (mj.size() != from.size()) throw ValidationError(mw, "expected one image per source element");
            for (std::size_t e = 0; e < from.size(); ++e) h.map[e] = target_of(mj[e], at(mw, e));
        }
        if (!h.preserves_meets()) throw ValidationError(mw, "map does not preserve meets and top");
        d.add_edge(id, s, t, std::move(h));
    }
    return d;
}

json to_json(const InvariantFactors& f) {
    json torsion = json::array();
    for (const auto& t : f.torsion) torsion.push_back(t.fits_slong_p() ? json(t.get_si()) : json(t.get_str()));
    return {{"free_rank", f.free_rank}, {"torsion", std::move(torsion)}};
}

json group_json(const PresentedAbGroup& g) {
    return {{"group", g.to_string()},
            {"invariant_factors", to_json(g.invariant_factors())},
            {"coordinate_orders", to_json(g.coordinate_orders())}};
}

}  // namespace ncs::io
