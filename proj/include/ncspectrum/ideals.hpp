#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncspectrum/semilattice.hpp"
#include "ncspectrum/subdiagram.hpp"

namespace ncs {

/// Subset of the atoms of a commutative subalgebra, bit k for atom k.
using AtomSet = std::uint64_t;

/// The two-sided ideal sum_{i in blocks} M_{n_i}.
struct TotalIdeal {
    MultiMatrixAlgebra parent;
    std::vector<std::size_t> blocks;  // sorted, distinct

    /// Throws std::invalid_argument on out-of-range or repeated blocks.
    TotalIdeal(MultiMatrixAlgebra parent, std::vector<std::size_t> blocks);
    bool contains(std::size_t b) const;
    std::string to_string() const;
    friend bool operator==(const TotalIdeal&, const TotalIdeal&) = default;
};

/// All total ideals, indexed by block bitmask.
std::vector<TotalIdeal> all_total_ideals(const MultiMatrixAlgebra& a);
/// The lattice of total ideals under containment (element index = bitmask).
MeetSemilattice total_ideal_lattice(const MultiMatrixAlgebra& a);

/// Atoms of U supported inside the blocks of I. Throws on parent mismatch.
AtomSet restrict_total(const TotalIdeal& i, const CommSubalgebra& u);

/// One ideal, as a set of atoms, per node of a subalgebra diagram.
struct PartialIdeal {
    std::shared_ptr<const SubalgebraDiagram> subdiagram;
    std::vector<AtomSet> choice;
};

PartialIdeal partial_from_total(const TotalIdeal& i, std::shared_ptr<const SubalgebraDiagram> d);

/// Ideal of U cut out by an ideal of V along an inclusion U in V: the atoms
/// of U all of whose V-subatoms are chosen.
AtomSet restrict_along(const SubalgebraHom& inclusion, AtomSet chosen_in_target);
/// Image of a chosen set along a rotation edge.
AtomSet rotate_along(const SubalgebraHom& rotation, AtomSet chosen_in_source);

/// First inclusion edge violating compatibility, if any.
std::optional<std::size_t> first_incompatible_edge(const PartialIdeal& p);
/// First rotation edge with choice(target) != rotated choice(source), if any.
std::optional<std::size_t> first_unfixed_edge(const PartialIdeal& p);
inline bool is_compatible(const PartialIdeal& p) { return !first_incompatible_edge(p); }
inline bool is_rotation_fixed(const PartialIdeal& p) { return !first_unfixed_edge(p); }

struct Reconstruction {
    TotalIdeal candidate;
    bool ok = false;
    std::optional<std::size_t> violating_node;
};

/// Candidate: blocks touched by some chosen atom. Succeeds iff restricting
/// the candidate reproduces the choice on every node.
Reconstruction reconstruct_total(const PartialIdeal& p);

/// Every compatible partial ideal over the inclusion edges of d.
std::vector<PartialIdeal> compatible_partial_ideals(std::shared_ptr<const SubalgebraDiagram> d);

/// All subsets of a finite discrete space (all closed) under containment.
MeetSemilattice closed_set_lattice(const FiniteSpace& x);
/// S |-> q(S).
LatticeHom closed_set_map(const SpaceMap& q);

struct ClosedSetFunctor {
    using From = SpaceCategory;
    using To = LatticeCategory;
    static constexpr bool contravariant = false;
    MeetSemilattice object(const FiniteSpace& x) const { return closed_set_lattice(x); }
    LatticeHom morphism(const SpaceMap& q) const { return closed_set_map(q); }
};

/// Limit of the closed-set lattices over the spectra of the sampled diagram.
struct TTilde {
    std::shared_ptr<const SubalgebraDiagram> subdiagram;
    LatticeDiagram lattices;
    SemilatticeLimit limit;
};

TTilde t_tilde(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec = {});

/// The ideal matching a family of closed sets: at each node, the atoms
/// outside the closed set.
PartialIdeal ideal_of_closed_family(const std::shared_ptr<const SubalgebraDiagram>& d,
                                    const std::vector<std::size_t>& family);

struct Conjecture1Report {
    std::string spec;
    std::size_t total_ideals = 0;
    std::size_t t_tilde_size = 0;
    bool lattice_isomorphic = false;  // some order isomorphism exists
    /// Complementation sends every family to a reconstructible ideal and
    /// this is an order-reversing bijection onto the total ideals.
    bool complement_correspondence = false;
    std::size_t compatible_partial_ideals = 0;
    std::size_t rotation_fixed_partial_ideals = 0;
    bool round_trip_bijection = false;
    std::vector<std::string> witnesses;

    bool passed() const { return lattice_isomorphic && complement_correspondence && round_trip_bijection; }
};

Conjecture1Report verify_conjecture1(const MultiMatrixAlgebra& a, const SubdiagramSpec& spec = {});

}  // namespace ncs
