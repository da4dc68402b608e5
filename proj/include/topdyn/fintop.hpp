#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topdyn/core.hpp"

namespace topdyn::fintop {

/// A finite topological space in minimal-neighborhood form: min_nbhd[x] is
/// the smallest open set containing x. Open sets are exactly the unions of
/// minimal neighborhoods; this determines the whole topology, so no open-set
/// family is ever materialized outside the exhaustive oracles.
struct FinSpace {
    std::uint32_t n = 0;
    std::vector<PointSet> min_nbhd;

    bool operator==(const FinSpace&) const = default;
};

/// Validates x ∈ min_nbhd[x] and y ∈ min_nbhd[x] ⟹ min_nbhd[y] ⊆ min_nbhd[x].
FinSpace space_from_min_nbhds(std::uint32_t n, std::vector<PointSet> nbhds);

/// Generates the topology from a subbasis: min_nbhd[x] is the intersection of
/// the subbasic sets containing x (whole space when there are none).
FinSpace space_from_subbasis(std::uint32_t n, const std::vector<PointSet>& sets);

bool is_open(const FinSpace& s, const PointSet& a);
bool is_closed(const FinSpace& s, const PointSet& a);

/// closure(S) = {x : min_nbhd[x] ∩ S ≠ ∅}; the smallest closed superset.
PointSet closure(const FinSpace& s, const PointSet& a);
/// interior(S) = complement(closure(complement(S))) = {x : min_nbhd[x] ⊆ S}.
PointSet interior(const FinSpace& s, const PointSet& a);

/// Dense ⟺ S meets every minimal neighborhood.
bool is_dense(const FinSpace& s, const PointSet& a);

PointSet isolated_points(const FinSpace& s);
bool is_perfect(const FinSpace& s);

struct SeparationFlags {
    bool t0 = false, t1 = false, hausdorff = false, regular = false;
    bool operator==(const SeparationFlags&) const = default;
};

SeparationFlags separation_flags(const FinSpace& s);

/// All open subsets, as bitmasks (includes ∅ and X). Exponential; guarded.
std::vector<PointSet> open_sets(const FinSpace& s);
std::vector<PointSet> opene_sets(const FinSpace& s);
std::vector<PointSet> closed_sets(const FinSpace& s);

struct DensityBasis {
    std::vector<PointSet> sets;
    bool operator==(const DensityBasis&) const = default;
};

enum class Criterion { I, II, III, IV, V };

Criterion criterion_from_string(const std::string& s);
std::string to_string(Criterion c);

/// Evaluates the chosen condition of the five-way equivalence literally.
/// I: every set meeting all members is dense (witness search per point,
///    complete because density is decided by minimal neighborhoods);
/// II: every closed set meeting all members is the whole space;
/// III: every open set meeting all members is dense;
/// IV: for every opene V the union of members inside V is dense in V;
/// V: every opene V contains a member.
bool is_density_basis(const FinSpace& s, const DensityBasis& d, Criterion c);

/// The family of all minimal neighborhoods; a density basis under every
/// criterion on every space.
DensityBasis min_nbhd_basis(const FinSpace& s);

struct Subspace {
    FinSpace space;
    std::vector<std::uint32_t> to_parent;   // subspace index -> ambient index
    std::vector<std::int32_t> from_parent;  // ambient index -> subspace index or -1
};

/// Relative topology: min_nbhd of a in the subspace is min_nbhd[a] ∩ A.
Subspace subspace(const FinSpace& s, const PointSet& a);

/// A point table between two spaces. Continuity is a computed predicate,
/// not a construction invariant, so that map_predicates can report it.
struct SpaceMap {
    FinSpace domain;
    FinSpace codomain;
    std::vector<std::uint32_t> table;
};

SpaceMap space_map(FinSpace domain, FinSpace codomain, std::vector<std::uint32_t> table);

PointSet map_image(const SpaceMap& h, const PointSet& a);
PointSet map_preimage(const SpaceMap& h, const PointSet& b);

struct MapFlags {
    bool continuous = false;
    bool open_map = false;
    bool dense_image = false;
    bool irreducible = false;
    bool weakly_almost_open = false;
    bool operator==(const MapFlags&) const = default;
};

/// Every flag is decided by literal finite enumeration (irreducible: over all
/// subsets of the domain).
MapFlags map_predicates(const SpaceMap& h);

bool is_continuous(const SpaceMap& h);

/// Exhaustive irreducibility: for all A ⊆ X, A dense ⟺ h(A) dense.
bool irreducible_exhaustive(const SpaceMap& h);

/// Shortcut for continuous maps: irreducible ⟺ h(X) dense and no complement
/// of a minimal neighborhood has a dense image. Complete because a non-dense
/// set is contained in the complement of some minimal neighborhood and images
/// are monotone. Used only next to the exhaustive mode in logged test
/// comparisons.
bool irreducible_min_nbhd_shortcut(const SpaceMap& h);

struct RestrictResult {
    Subspace sub;
    DensityBasis family;  // in subspace coordinates
    bool verified = false;
};

struct ExtendResult {
    DensityBasis family;  // in ambient coordinates
    bool verified = false;
};

struct MapTransferResult {
    DensityBasis family;
    bool verified = false;
    std::vector<PointSet> dropped;  // members lost to empty interiors
};

/// {U ∩ D : U ∈ basis} on the subspace D; requires D dense.
RestrictResult restrict_basis(const FinSpace& s, const PointSet& dense_subset,
                              const DensityBasis& basis);

/// {interior(closure(U)) : U ∈ basis} in the ambient space, for a basis of the
/// dense subspace D given in ambient coordinates; requires D dense and the
/// members opene in the relative topology.
ExtendResult extend_basis(const FinSpace& s, const PointSet& dense_subset,
                          const DensityBasis& relative_basis);

/// {h⁻¹(U) : U ∈ basis}; requires h continuous and irreducible.
MapTransferResult pullback_basis(const SpaceMap& h, const DensityBasis& basis_of_codomain);

/// {interior(closure(h(U))) : U ∈ basis} with empty members dropped; requires
/// h continuous with dense image. The verdict reports whether the surviving
/// family is a density basis of the codomain (verified, not assumed).
MapTransferResult pushforward_basis(const SpaceMap& h, const DensityBasis& basis_of_domain);

// Canonical small spaces used across tests and families.
FinSpace sierpinski();        // min_nbhd = [{0},{0,1}]
FinSpace indiscrete(std::uint32_t n);
FinSpace discrete(std::uint32_t n);
FinSpace partition4();        // min_nbhd = [{0,1},{0,1},{2,3},{2,3}]

}  // namespace topdyn::fintop
