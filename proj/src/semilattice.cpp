#include "ncspectrum/semilattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ncs {

MeetSemilattice::MeetSemilattice(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
    const std::size_t n = labels.size();
    if (n == 0) throw std::invalid_argument("a semilattice needs at least one element");
    if (leq.size() != n) throw std::invalid_argument("order relation has the wrong size");
    auto d = std::make_shared<Data>();
    d->labels = std::move(labels);
    d->leq.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        if (leq[a].size() != n) throw std::invalid_argument("order relation has the wrong size");
        for (std::size_t b = 0; b < n; ++b) d->leq[a * n + b] = leq[a][b] ? 1 : 0;
    }
    auto le = [&](std::size_t a, std::size_t b) { return d->leq[a * n + b] != 0; };
    for (std::size_t a = 0; a < n; ++a) {
        if (!le(a, a)) throw std::invalid_argument("order is not reflexive");
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && le(a, b) && le(b, a)) throw std::invalid_argument("order is not antisymmetric");
            for (std::size_t c = 0; c < n; ++c)
                if (le(a, b) && le(b, c) && !le(a, c)) throw std::invalid_argument("order is not transitive");
        }
    }
    d->meet.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::optional<std::size_t> glb;
            for (std::size_t c = 0; c < n; ++c) {
                if (!le(c, a) || !le(c, b)) continue;
                if (!glb || le(*glb, c)) glb = c;
            }
            if (!glb) throw std::invalid_argument("elements " + d->labels[a] + " and " + d->labels[b] + " have no meet");
            for (std::size_t c = 0; c < n; ++c)
                if (le(c, a) && le(c, b) && !le(c, *glb))
                    throw std::invalid_argument("elements " + d->labels[a] + " and " + d->labels[b] +
                                                " have no greatest lower bound");
            d->meet[a * n + b] = *glb;
        }
    bool found_top = false;
    for (std::size_t t = 0; t < n && !found_top; ++t) {
        bool is_top = true;
        for (std::size_t a = 0; a < n; ++a) is_top = is_top && le(a, t);
        if (is_top) {
            d->top = t;
            found_top = true;
        }
    }
    if (!found_top) throw std::invalid_argument("semilattice has no top element");
    data_ = std::move(d);
}

MeetSemilattice MeetSemilattice::powerset(const std::vector<std::string>& points) {
    const std::size_t n = points.size();
    if (n > 12) throw std::invalid_argument("powerset too large to enumerate");
    const std::size_t count = std::size_t{1} << n;
    auto d = std::make_shared<Data>();
    d->leq.assign(count * count, 0);
    d->meet.assign(count * count, 0);
    d->top = count - 1;
    for (std::size_t s = 0; s < count; ++s) {
        std::string l = "{";
        bool first = true;
        for (std::size_t k = 0; k < n; ++k)
            if (s >> k & 1) {
                l += (first ? "" : ",") + points[k];
                first = false;
            }
        d->labels.push_back(l + "}");
        for (std::size_t t = 0; t < count; ++t) {
            d->leq[s * count + t] = (s & ~t) == 0;
            d->meet[s * count + t] = s & t;
        }
    }
    MeetSemilattice out;
    out.data_ = std::move(d);
    return out;
}

std::optional<std::size_t> MeetSemilattice::find(const std::string& label) const {
    for (std::size_t k = 0; k < size(); ++k)
        if (data_->labels[k] == label) return k;
    return std::nullopt;
}

bool operator==(const MeetSemilattice& a, const MeetSemilattice& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->labels == b.data_->labels && a.data_->leq == b.data_->leq;
}

LatticeHom LatticeHom::identity(const MeetSemilattice& l) {
    LatticeHom h{l, l, {}};
    for (std::size_t k = 0; k < l.size(); ++k) h.map.push_back(k);
    return h;
}

bool LatticeHom::preserves_order() const {
    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = 0; b < source.size(); ++b)
            if (source.leq(a, b) && !target.leq(map[a], map[b])) return false;
    return true;
}

bool LatticeHom::preserves_meets() const {
    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = 0; b < source.size(); ++b)
            if (map[source.meet(a, b)] != target.meet(map[a], map[b])) return false;
    return map[source.top()] == target.top();
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
    if (!(f.target == g.source)) throw std::invalid_argument("lattice maps do not chain");
    LatticeHom out{f.source, g.target, {}};
    for (auto x : f.map) out.map.push_back(g.map.at(x));
    return out;
}

namespace {

struct Constraint {
    std::size_t from, to, edge;
};

}  // namespace

std::vector<std::vector<std::size_t>> compatible_families(const LatticeDiagram& d) {
    d.validate();
    const std::size_t n = d.shape.node_count();
    if (n == 0) throw std::invalid_argument("limit of an empty diagram");
    std::vector<Constraint> constraints;
    for (std::size_t e = 0; e < d.shape.edge_count(); ++e) {
        const auto& edge = d.shape.edges()[e];
        if (d.variance == Variance::covariant)
            constraints.push_back({edge.source, edge.target, e});
        else
            constraints.push_back({edge.target, edge.source, e});
    }
    // Visit order: forced nodes as soon as possible, otherwise the node that
    // forces the most others.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
        std::optional<std::size_t> pick;
        for (const auto& c : constraints)
            if (placed[c.from] && !placed[c.to]) {
                pick = c.to;
                break;
            }
        if (!pick) {
            std::size_t best_out = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                std::size_t out = 0;
                for (const auto& c : constraints) out += c.from == v && !placed[c.to];
                if (!pick || out > best_out) {
                    pick = v;
                    best_out = out;
                }
            }
        }
        placed[*pick] = true;
        order.push_back(*pick);
    }

    std::vector<std::size_t> value(n);
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<std::size_t>> families;
    std::function<void(std::size_t)> visit = [&](std::size_t depth) {
        if (depth == n) {
            families.push_back(value);
            return;
        }
        auto v = order[depth];
        std::optional<std::size_t> forced;
        for (const auto& c : constraints)
            if (c.to == v && assigned[c.from]) {
                forced = d.edge_data[c.edge].map[value[c.from]];
                break;
            }
        auto try_value = [&](std::size_t x) {
            value[v] = x;
            assigned[v] = true;
            bool ok = true;
            for (const auto& c : constraints)
                if ((c.from == v || c.to == v) && assigned[c.from] && assigned[c.to] &&
                    d.edge_data[c.edge].map[value[c.from]] != value[c.to]) {
                    ok = false;
                    break;
                }
            if (ok) visit(depth + 1);
            assigned[v] = false;
        };
        if (forced)
            try_value(*forced);
        else
            for (std::size_t x = 0; x < d.node_data[v].size(); ++x) try_value(x);
    };
    visit(0);
    std::sort(families.begin(), families.end());
    return families;
}

SemilatticeLimit limit_semilattice(const LatticeDiagram& d) {
    auto families = compatible_families(d);
    const std::size_t n = d.shape.node_count();
    const std::size_t m = families.size();
    if (m > kMaxLimitSize)
        throw std::invalid_argument("limit has " + std::to_string(m) + " elements, more than can be tabulated");
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (std::size_t i = 0; i < m; ++i) {
        std::string l = "(";
        for (std::size_t a = 0; a < n; ++a) l += (a ? ", " : "") + d.node_data[a].label(families[i][a]);
        labels.push_back(l + ")");
        for (std::size_t j = 0; j < m; ++j) {
            bool le = true;
            for (std::size_t a = 0; a < n && le; ++a) le = d.node_data[a].leq(families[i][a], families[j][a]);
            leq[i][j] = le;
        }
    }
    return {MeetSemilattice(labels, leq), families};
}

std::optional<std::vector<std::size_t>> find_order_isomorphism(const MeetSemilattice& a, const MeetSemilattice& b) {
    const std::size_t n = a.size();
    if (n != b.size()) return std::nullopt;
    auto profile = [](const MeetSemilattice& l, std::size_t x) {
        std::size_t below = 0, above = 0;
        for (std::size_t y = 0; y < l.size(); ++y) {
            below += l.leq(y, x);
            above += l.leq(x, y);
        }
        return std::pair{below, above};
    };
    std::vector<std::pair<std::size_t, std::size_t>> pa(n), pb(n);
    for (std::size_t x = 0; x < n; ++x) {
        pa[x] = profile(a, x);
        pb[x] = profile(b, x);
    }
    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t x) {
        if (x == n) return true;
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || pa[x] != pb[y]) continue;
            bool ok = true;
            for (std::size_t z = 0; z < x && ok; ++z)
                ok = a.leq(z, x) == b.leq(map[z], y) && a.leq(x, z) == b.leq(y, map[z]);
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return map;
}

}  // namespace ncs
