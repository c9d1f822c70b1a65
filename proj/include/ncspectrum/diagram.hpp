#pragma once

// Finite shaped diagrams and the diagram categories built over an arbitrary
// target category. A target category is described by a policy type:
//
//   struct Cat {
//     using Object = ...;
//     using Morphism = ...;
//     static Morphism compose(const Morphism& g, const Morphism& f);  // g after f
//     static Morphism identity(const Object&);
//     static bool equal(const Morphism&, const Morphism&);
//     static const Object& source(const Morphism&);
//     static const Object& target(const Morphism&);
//     static bool same_object(const Object&, const Object&);
//   };
//
// Shapes are generating graphs: a functor between shapes sends nodes to
// nodes and generating edges to paths (the empty path is an identity).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncs {

template <class C>
concept DiagramCategory = requires(const typename C::Object& o, const typename C::Morphism& m) {
    { C::compose(m, m) } -> std::convertible_to<typename C::Morphism>;
    { C::identity(o) } -> std::convertible_to<typename C::Morphism>;
    { C::equal(m, m) } -> std::convertible_to<bool>;
    { C::source(m) } -> std::convertible_to<const typename C::Object&>;
    { C::target(m) } -> std::convertible_to<const typename C::Object&>;
    { C::same_object(o, o) } -> std::convertible_to<bool>;
};

enum class Variance { covariant, contravariant };

inline Variance flip(Variance v) {
    return v == Variance::covariant ? Variance::contravariant : Variance::covariant;
}

struct ShapeEdge {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    friend bool operator==(const ShapeEdge&, const ShapeEdge&) = default;
};

class Shape {
public:
    std::size_t add_node(std::string id) {
        nodes_.push_back(std::move(id));
        return nodes_.size() - 1;
    }
    std::size_t add_edge(std::string id, std::size_t source, std::size_t target) {
        if (source >= nodes_.size() || target >= nodes_.size())
            throw std::invalid_argument("edge " + id + " has an endpoint outside the shape");
        edges_.push_back({std::move(id), source, target});
        return edges_.size() - 1;
    }

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<ShapeEdge>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::optional<std::size_t> find_node(const std::string& id) const {
        for (std::size_t k = 0; k < nodes_.size(); ++k)
            if (nodes_[k] == id) return k;
        return std::nullopt;
    }

    /// Endpoint reached by following `path` from `start`; throws if the path
    /// is not connected.
    std::size_t walk(std::size_t start, const std::vector<std::size_t>& path) const {
        std::size_t at = start;
        for (auto e : path) {
            if (e >= edges_.size() || edges_[e].source != at) throw std::invalid_argument("path is not connected");
            at = edges_[e].target;
        }
        return at;
    }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<std::string> nodes_;
    std::vector<ShapeEdge> edges_;
};

using Path = std::vector<std::size_t>;

template <DiagramCategory Cat>
struct ShapedDiagram {
    using Object = typename Cat::Object;
    using Morphism = typename Cat::Morphism;

    Shape shape;
    std::vector<Object> node_data;
    std::vector<Morphism> edge_data;
    Variance variance = Variance::covariant;

    std::size_t add_node(std::string id, Object obj) {
        node_data.push_back(std::move(obj));
        return shape.add_node(std::move(id));
    }
    std::size_t add_edge(std::string id, std::size_t s, std::size_t t, Morphism m) {
        edge_data.push_back(std::move(m));
        return shape.add_edge(std::move(id), s, t);
    }

    /// Throws std::invalid_argument naming the first edge whose morphism
    /// endpoints disagree with the node data (orientation per variance).
    void validate() const {
        if (node_data.size() != shape.node_count() || edge_data.size() != shape.edge_count())
            throw std::invalid_argument("diagram payload count does not match its shape");
        for (std::size_t e = 0; e < shape.edge_count(); ++e) {
            const auto& edge = shape.edges()[e];
            auto from = variance == Variance::covariant ? edge.source : edge.target;
            auto to = variance == Variance::covariant ? edge.target : edge.source;
            if (!Cat::same_object(Cat::source(edge_data[e]), node_data[from]) ||
                !Cat::same_object(Cat::target(edge_data[e]), node_data[to]))
                throw std::invalid_argument("edge " + edge.id + " morphism does not match its endpoints");
        }
    }

    /// The morphism assigned to a path starting at `start`: the composite of
    /// its edges, reversed for contravariant diagrams.
    Morphism evaluate(std::size_t start, const Path& path) const {
        Morphism acc = Cat::identity(node_data.at(start));
        std::size_t at = start;
        for (auto e : path) {
            const auto& edge = shape.edges().at(e);
            if (edge.source != at) throw std::invalid_argument("path is not connected");
            acc = variance == Variance::covariant ? Cat::compose(edge_data[e], acc) : Cat::compose(acc, edge_data[e]);
            at = edge.target;
        }
        return acc;
    }
};

/// A morphism (f, eta) of the diagram category of the given variance.
///
/// Covariant D1 -> D2: f maps shape(D1) into shape(D2) and
/// components[a] : D1(a) -> D2(f a).
/// Contravariant D1 -> D2: f maps shape(D2) into shape(D1) and
/// components[a] : D1(f a) -> D2(a).
template <DiagramCategory Cat>
struct DiagramMorphism {
    using Morphism = typename Cat::Morphism;

    std::vector<std::size_t> node_map;
    std::vector<Path> edge_map;
    std::vector<Morphism> components;
};

namespace detail {

template <DiagramCategory Cat>
void check_shape_functor(const DiagramMorphism<Cat>& m, const Shape& from, const Shape& to) {
    if (m.node_map.size() != from.node_count() || m.edge_map.size() != from.edge_count() ||
        m.components.size() != from.node_count())
        throw std::invalid_argument("diagram morphism does not cover its shape");
    for (auto n : m.node_map)
        if (n >= to.node_count()) throw std::invalid_argument("node map leaves the target shape");
    for (std::size_t e = 0; e < from.edge_count(); ++e) {
        const auto& edge = from.edges()[e];
        if (to.walk(m.node_map[edge.source], m.edge_map[e]) != m.node_map[edge.target])
            throw std::invalid_argument("edge " + edge.id + " is not sent to a path between the image nodes");
    }
}

}  // namespace detail

/// Variance is taken from the diagrams, which must agree. Throws
/// std::invalid_argument when the shape map is malformed.
template <DiagramCategory Cat>
bool check_naturality(const DiagramMorphism<Cat>& m, const ShapedDiagram<Cat>& d1, const ShapedDiagram<Cat>& d2) {
    if (d1.variance != d2.variance) throw std::invalid_argument("diagrams of different variance");
    if (d1.variance == Variance::covariant) {
        detail::check_shape_functor(m, d1.shape, d2.shape);
        for (std::size_t e = 0; e < d1.shape.edge_count(); ++e) {
            const auto& edge = d1.shape.edges()[e];
            auto lhs = Cat::compose(m.components[edge.target], d1.edge_data[e]);
            auto rhs = Cat::compose(d2.evaluate(m.node_map[edge.source], m.edge_map[e]), m.components[edge.source]);
            if (!Cat::equal(lhs, rhs)) return false;
        }
        return true;
    }
    detail::check_shape_functor(m, d2.shape, d1.shape);
    for (std::size_t e = 0; e < d2.shape.edge_count(); ++e) {
        const auto& edge = d2.shape.edges()[e];
        auto lhs = Cat::compose(m.components[edge.source], d1.evaluate(m.node_map[edge.source], m.edge_map[e]));
        auto rhs = Cat::compose(d2.edge_data[e], m.components[edge.target]);
        if (!Cat::equal(lhs, rhs)) return false;
    }
    return true;
}

template <DiagramCategory Cat>
DiagramMorphism<Cat> identity_morphism(const ShapedDiagram<Cat>& d) {
    DiagramMorphism<Cat> m;
    for (std::size_t n = 0; n < d.shape.node_count(); ++n) {
        m.node_map.push_back(n);
        m.components.push_back(Cat::identity(d.node_data[n]));
    }
    for (std::size_t e = 0; e < d.shape.edge_count(); ++e) m.edge_map.push_back({e});
    return m;
}

/// second after first: (g f, (mu f) eta) for covariant diagrams, and the
/// mirrored formula (f g, mu (eta g)) for contravariant ones.
template <DiagramCategory Cat>
DiagramMorphism<Cat> compose_morphisms(const DiagramMorphism<Cat>& second, const DiagramMorphism<Cat>& first,
                                       Variance variance) {
    // Shape maps compose in diagram order for covariant, reversed for contravariant.
    const auto& inner = variance == Variance::covariant ? first : second;
    const auto& outer = variance == Variance::covariant ? second : first;
    DiagramMorphism<Cat> out;
    for (auto n : inner.node_map) {
        if (n >= outer.node_map.size()) throw std::invalid_argument("diagram morphisms do not chain");
        out.node_map.push_back(outer.node_map[n]);
    }
    for (const auto& path : inner.edge_map) {
        Path p;
        for (auto e : path) {
            if (e >= outer.edge_map.size()) throw std::invalid_argument("diagram morphisms do not chain");
            p.insert(p.end(), outer.edge_map[e].begin(), outer.edge_map[e].end());
        }
        out.edge_map.push_back(std::move(p));
    }
    if (variance == Variance::covariant) {
        for (std::size_t a = 0; a < first.components.size(); ++a)
            out.components.push_back(Cat::compose(second.components.at(first.node_map[a]), first.components[a]));
    } else {
        for (std::size_t c = 0; c < second.components.size(); ++c)
            out.components.push_back(Cat::compose(second.components[c], first.components.at(second.node_map[c])));
    }
    return out;
}

/// Structural equality of (f, eta): same shape maps and equal components.
template <DiagramCategory Cat>
bool morphisms_equal(const DiagramMorphism<Cat>& a, const DiagramMorphism<Cat>& b) {
    if (a.node_map != b.node_map || a.edge_map != b.edge_map || a.components.size() != b.components.size())
        return false;
    for (std::size_t k = 0; k < a.components.size(); ++k)
        if (!Cat::equal(a.components[k], b.components[k])) return false;
    return true;
}

/// A functor between two target categories, used to push diagrams forward.
///
///   struct F {
///     using From = ...; using To = ...;
///     static constexpr bool contravariant = ...;
///     To::Object object(const From::Object&) const;
///     To::Morphism morphism(const From::Morphism&) const;
///   };
template <class F>
concept DiagramFunctor = DiagramCategory<typename F::From> && DiagramCategory<typename F::To> &&
                         requires(const F& f, const typename F::From::Object& o, const typename F::From::Morphism& m) {
                             { F::contravariant } -> std::convertible_to<bool>;
                             { f.object(o) } -> std::convertible_to<typename F::To::Object>;
                             { f.morphism(m) } -> std::convertible_to<typename F::To::Morphism>;
                         };

/// F o D, with variance flipped when F is contravariant.
template <DiagramFunctor F>
ShapedDiagram<typename F::To> postcompose(const F& func, const ShapedDiagram<typename F::From>& d) {
    ShapedDiagram<typename F::To> out;
    out.shape = d.shape;
    out.variance = F::contravariant ? flip(d.variance) : d.variance;
    for (const auto& o : d.node_data) out.node_data.push_back(func.object(o));
    for (const auto& m : d.edge_data) out.edge_data.push_back(func.morphism(m));
    return out;
}

/// (f, F eta). For contravariant F the result runs from F(D2) to F(D1); the
/// stored shape map is unchanged.
template <DiagramFunctor F>
DiagramMorphism<typename F::To> postcompose(const F& func, const DiagramMorphism<typename F::From>& m) {
    DiagramMorphism<typename F::To> out;
    out.node_map = m.node_map;
    out.edge_map = m.edge_map;
    for (const auto& c : m.components) out.components.push_back(func.morphism(c));
    return out;
}

}  // namespace ncs
