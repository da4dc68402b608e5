#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topdyn/core.hpp"
#include "topdyn/epset.hpp"
#include "topdyn/fintop.hpp"

namespace topdyn::findyn {

using fintop::FinSpace;

/// A continuous self-map on a finite space, as a point table.
struct FinSystem {
    FinSpace space;
    std::vector<std::uint32_t> map;
    std::vector<std::string> labels;  // optional, cosmetic

    std::uint32_t n() const { return space.n; }
    std::string label(std::uint32_t x) const {
        return x < labels.size() ? labels[x] : std::to_string(x);
    }
    bool operator==(const FinSystem& o) const { return space == o.space && map == o.map; }
};

/// Validates continuity: f(min_nbhd[x]) ⊆ min_nbhd[f(x)] for every x
/// (equivalent to preimages of open sets being open).
FinSystem system_new(FinSpace space, std::vector<std::uint32_t> map,
                     std::vector<std::string> labels = {});

PointSet image(const FinSystem& s, const PointSet& a);
PointSet preimage(const FinSystem& s, const PointSet& a);

/// O(x) = {f^k(x) : k ≥ 0}.
PointSet forward_orbit(const FinSystem& s, std::uint32_t x);
PointSet forward_orbit_of_set(const FinSystem& s, const PointSet& a);
/// O₋(A) = ∪_k f^{-k}(A).
PointSet backward_saturation(const FinSystem& s, const PointSet& a);
/// O±(x) = O(x) ∪ O₋({x}).
PointSet two_sided(const FinSystem& s, std::uint32_t x);

/// ω(x) = ∩_n closure(O(f^n(x))); the intersection stabilizes once the
/// forward orbit enters its cycle.
PointSet omega_limit(const FinSystem& s, std::uint32_t x);

bool is_plus_invariant(const FinSystem& s, const PointSet& a);
bool is_minus_invariant(const FinSystem& s, const PointSet& a);
bool is_invariant(const FinSystem& s, const PointSet& a);
bool is_surjective(const FinSystem& s);
bool is_bijective(const FinSystem& s);

/// Exact value of N₊(U,V) = {k ∈ ℕ : U ∩ f^{-k}(V) ≠ ∅}, computed by
/// iterating the preimage operator on V until the subset sequence cycles.
EPSet hitting_set_plus(const FinSystem& s, const PointSet& u, const PointSet& v);

/// All N₊(min_nbhd[u], min_nbhd[v]) at once; m[u][v].
std::vector<std::vector<EPSet>> hitting_matrix(const FinSystem& s);

struct SignedHitResult {
    bool nonempty = false;
    std::optional<std::int64_t> k;  // U ∩ f^{-k}(V) ≠ ∅, k possibly negative
};

/// N(U,V) ≠ ∅ test via N(U,V) = N₊(U,V) ∪ -N₊(V,U).
SignedHitResult hitting_nonempty_z(const FinSystem& s, const PointSet& u, const PointSet& v);

/// Points lying on f-cycles, and the cycles themselves (pairwise disjoint).
PointSet cyclic_points(const FinSystem& s);
std::vector<PointSet> cycles(const FinSystem& s);
/// ∩_m f^m(X): the set of points with arbitrarily long backward chains.
PointSet eventual_image(const FinSystem& s);

PointSet transitive_points(const FinSystem& s);
bool is_minimal(const FinSystem& s);

/// On a finite system every orbit-sequence element set is either O(t) for a
/// preimage-free t (half-infinite form) or an f-cycle (bi-infinite form: a
/// repeat x_{-i} = x_{-j} in a backward walk forces the prefix onto the cycle
/// of x_{-j} because x_{-i} = f^{j-i}(x_{-j}), and an infinite walk repeats at
/// unbounded depth).
struct OrbitSeqWitness {
    bool half_infinite = false;  // true: starts at a preimage-free point
    std::uint32_t start = 0;     // the preimage-free start, or a cycle point
    PointSet elements;
    bool operator==(const OrbitSeqWitness&) const = default;
};

std::optional<OrbitSeqWitness> dense_orbit_sequence(const FinSystem& s);

// --- property report ----------------------------------------------------

/// min_nbhd[u] ∩ f^{-k}(min_nbhd[v]) ≠ ∅ for a signed k.
struct SignedHit {
    std::uint32_t u = 0, v = 0;
    std::int64_t k = 0;
    bool operator==(const SignedHit&) const = default;
};

/// {start + m·step : m ≥ 0} ⊆ N₊(min_nbhd[u], min_nbhd[v]).
struct ProgressionHit {
    std::uint32_t u = 0, v = 0;
    std::uint64_t start = 0, step = 1;
    bool operator==(const ProgressionHit&) const = default;
};

/// The exact hitting sets of a refuting minimal-neighborhood pair.
struct PairRefutation {
    std::uint32_t u = 0, v = 0;
    EPSet n_uv, n_vu;
    bool operator==(const PairRefutation&) const = default;
};

/// point ∈ O₋(min_nbhd[u]) ∩ O₋(min_nbhd[v]).
struct InMeet {
    std::uint32_t u = 0, v = 0, point = 0;
    bool operator==(const InMeet&) const = default;
};

/// Two proper, closed, +invariant sets covering X.
struct InCover {
    PointSet a1, a2;
    bool operator==(const InCover&) const = default;
};

/// A candidate orbit-sequence element set together with a minimal
/// neighborhood it fails to meet.
struct DenseFailure {
    bool half_infinite = false;
    std::uint32_t start = 0;
    std::uint32_t missed = 0;
    bool operator==(const DenseFailure&) const = default;
};

/// Per-point refutation: for DO+, O(point) misses min_nbhd[missed]; for DO++,
/// N₊({point}, min_nbhd[missed]) is finite.
struct PointFailure {
    std::uint32_t point = 0, missed = 0;
    bool operator==(const PointFailure&) const = default;
};

/// The seven verdicts plus Trans, Iso and replayable evidence. Every witness
/// re-checks against the raw definitions; the harness treats the deciders as
/// untrusted and replays them.
struct PropertyReport {
    bool in = false, tt = false, tt_plus = false, tt_plusplus = false;
    bool do_ = false, do_plus = false, do_plusplus = false;
    PointSet trans, iso;

    std::vector<InMeet> in_meets;            // IN true
    std::optional<InCover> in_cover;         // IN false
    std::vector<SignedHit> tt_hits;          // TT true
    std::optional<PairRefutation> tt_refuted;
    std::vector<SignedHit> ttp_hits;         // TT+ true (k ≥ 0)
    std::optional<PairRefutation> ttp_refuted;
    std::vector<ProgressionHit> ttpp_hits;   // TT++ true
    std::optional<PairRefutation> ttpp_refuted;
    std::optional<OrbitSeqWitness> do_witness;
    std::vector<DenseFailure> do_failures;
    std::optional<std::uint32_t> dop_point;
    std::vector<PointFailure> dop_failures;
    std::optional<std::uint32_t> dopp_point;
    std::vector<PointFailure> dopp_failures;

    bool verdict(const std::string& property) const;
    bool operator==(const PropertyReport&) const = default;
};

/// Decides all seven properties. Quantification over opene pairs is reduced
/// to minimal-neighborhood pairs (N is monotone in both arguments and every
/// opene set contains a minimal neighborhood); IN is decided independently by
/// testing pairwise disjointness among the sets O₋(min_nbhd[x]).
PropertyReport properties(const FinSystem& s);

/// All minimal nonempty closed +invariant subsets. They are exactly the
/// inclusion-minimal orbit closures.
std::vector<PointSet> minimal_subsets(const FinSystem& s);

enum class CaseTag {
    Figure0,
    FiniteFigure9,
    NShape,
    NChain,
    ZChain,
    InfiniteFigure9,
    NegNChain,
};

std::string to_string(CaseTag t);

/// Outcome of the isolated-point case analysis. Only Figure0 and
/// FiniteFigure9 arise from finite Hausdorff inputs; the remaining tags are
/// produced by the lazy families.
struct Classification {
    CaseTag tag = CaseTag::Figure0;
    std::uint32_t cycle_len = 0;
    std::uint32_t tail_len = 0;           // FiniteFigure9 only
    std::optional<std::uint32_t> start;   // preimage-free point, FiniteFigure9 only
    PointSet trans;                       // side fact, re-verified
    bool image_dense = false;             // side fact, re-verified
    bool operator==(const Classification&) const = default;
};

/// Requires a topologically transitive system on a Hausdorff (= discrete)
/// space with an isolated point; refuses anything else rather than
/// extrapolating the case analysis.
Classification classify_isolated(const FinSystem& s);

struct Subsystem {
    FinSystem sys;
    std::vector<std::uint32_t> to_parent;
};

/// Restriction to a nonempty +invariant subset, with the relative topology.
Subsystem subsystem(const FinSystem& s, const PointSet& a);

}  // namespace topdyn::findyn
