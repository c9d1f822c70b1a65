#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncspectrum/diagram.hpp"

namespace ncs {

/// Finite meet-semilattice with a top element, given by its order relation.
class MeetSemilattice {
public:
    MeetSemilattice() = default;
    /// leq[a][b] means a <= b. Throws std::invalid_argument if the relation is
    /// not a partial order, some pair has no greatest lower bound, or there is
    /// no top.
    MeetSemilattice(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

    /// All subsets of the labelled points under containment; element index
    /// is the subset bitmask.
    static MeetSemilattice powerset(const std::vector<std::string>& points);

    std::size_t size() const { return data_ ? data_->labels.size() : 0; }
    const std::string& label(std::size_t a) const { return data_->labels.at(a); }
    bool leq(std::size_t a, std::size_t b) const { return data_->leq[a * size() + b] != 0; }
    std::size_t meet(std::size_t a, std::size_t b) const { return data_->meet[a * size() + b]; }
    std::size_t top() const { return data_->top; }
    std::optional<std::size_t> find(const std::string& label) const;

    friend bool operator==(const MeetSemilattice& a, const MeetSemilattice& b);

private:
    struct Data {
        std::vector<std::string> labels;
        std::vector<char> leq;
        std::vector<std::size_t> meet;
        std::size_t top = 0;
    };
    std::shared_ptr<const Data> data_;
};

struct LatticeHom {
    MeetSemilattice source;
    MeetSemilattice target;
    std::vector<std::size_t> map;

    static LatticeHom identity(const MeetSemilattice& l);
    bool preserves_order() const;
    bool preserves_meets() const;
    friend bool operator==(const LatticeHom&, const LatticeHom&) = default;
};

LatticeHom compose(const LatticeHom& g, const LatticeHom& f);

struct LatticeCategory {
    using Object = MeetSemilattice;
    using Morphism = LatticeHom;
    static Morphism compose(const Morphism& g, const Morphism& f) { return ncs::compose(g, f); }
    static Morphism identity(const Object& o) { return LatticeHom::identity(o); }
    static bool equal(const Morphism& a, const Morphism& b) { return a == b; }
    static const Object& source(const Morphism& m) { return m.source; }
    static const Object& target(const Morphism& m) { return m.target; }
    static bool same_object(const Object& a, const Object& b) { return a == b; }
};

using LatticeDiagram = ShapedDiagram<LatticeCategory>;

struct SemilatticeLimit {
    MeetSemilattice lattice;
    /// families[k] is the compatible family behind lattice element k: one
    /// element per diagram node.
    std::vector<std::vector<std::size_t>> families;
};

/// Every family (s_a), one element per node, with s_target = D(u)(s_source)
/// along every edge morphism (source and target read per variance), sorted.
std::vector<std::vector<std::size_t>> compatible_families(const LatticeDiagram& d);

/// Largest limit limit_semilattice will tabulate; its tables are cubic.
inline constexpr std::size_t kMaxLimitSize = 512;

/// Compatible families (s_a) with s_target = D(u)(s_source) along every
/// edge morphism, ordered componentwise. Meets are greatest lower bounds among
/// the families; image maps need not preserve binary meets, so these can sit
/// below the componentwise meet.
SemilatticeLimit limit_semilattice(const LatticeDiagram& d);

/// A bijection a -> b preserving and reflecting the order, if one exists.
std::optional<std::vector<std::size_t>> find_order_isomorphism(const MeetSemilattice& a, const MeetSemilattice& b);

}  // namespace ncs
