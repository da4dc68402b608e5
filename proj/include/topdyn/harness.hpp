#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topdyn/core.hpp"
#include "topdyn/families.hpp"
#include "topdyn/findyn.hpp"
#include "topdyn/fintop.hpp"

namespace topdyn::harness {

using findyn::FinSystem;
using findyn::PropertyReport;

struct Filter {
    bool hausdorff_only = false;
    bool perfect_only = false;
    bool surjective_only = false;  // on finite sets surjective = bijective
    bool bijective_only = false;
};

/// Deterministic: the same n, seed and filter reproduce the same system.
/// Topology via the reflexive-transitive closure of a random relation (with
/// discrete and indiscrete styles drawn with positive probability), map via
/// rejection sampling of specialization-monotone tables.
FinSystem random_system(std::uint32_t n, std::uint64_t seed, Filter filter = {});

/// All topologies on n points, raw (one per preorder, not up to
/// homeomorphism).
std::vector<fintop::FinSpace> enumerate_spaces(std::uint32_t n);

/// All continuous point tables on a space.
std::vector<std::vector<std::uint32_t>> continuous_tables(const fintop::FinSpace& space);

bool is_continuous_table(const fintop::FinSpace& space, const std::vector<std::uint32_t>& table);

struct CorpusSpec {
    bool include_families = false;   // catalog systems first (deterministic order)
    std::uint32_t exhaustive_max = 4;  // all topologies with n up to this (0 = none)
    std::uint32_t discrete_max = 5;    // additionally, all maps on discrete n up to this
    std::uint64_t random_count = 0;
    std::uint32_t random_max_points = 8;
    std::uint64_t seed = 1;
    Filter filter;
};

/// Streams the corpus in a deterministic order with stable ids.
void for_each_system(const CorpusSpec& spec,
                     const std::function<void(const FinSystem&, const std::string& id)>& fn);

std::uint64_t corpus_size(const CorpusSpec& spec);

struct Violation {
    std::string system_id;
    std::string witness;
};

struct TheoremResult {
    std::string id;
    std::string anchor;
    std::uint64_t checked = 0;  // systems (or instances) meeting the hypotheses
    std::uint64_t vacuous = 0;  // systems skipped by the hypothesis filter
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

/// Hook points used by the negative-control fixtures: they corrupt the
/// decision procedures and the checks must catch it.
using ReportHook = std::function<PropertyReport(const FinSystem&, PropertyReport)>;
using HittingHook =
    std::function<EPSet(const FinSystem&, const PointSet&, const PointSet&, EPSet)>;
using TransHook = std::function<PointSet(const FinSystem&, PointSet)>;

/// The unconditional implication lattice, with IN computed independently:
/// TT++ ⟹ TT+ ⟹ TT, DO++ ⟹ DO+ ⟹ DO, DO ⟹ TT, DO++ ⟹ TT++, TT ⟺ IN.
std::vector<TheoremResult> verify_lattice(const CorpusSpec& spec, const ReportHook& hook = {});

/// One entry per finite-testable proposition; each theorem is tested only on
/// systems satisfying its hypotheses and vacuity is reported separately.
std::vector<TheoremResult> verify_theorem_suite(const CorpusSpec& spec);

/// Exact hitting sets versus direct step-by-step simulation, for all
/// minimal-neighborhood pairs and k up to 3·(preperiod+period).
TheoremResult check_hitting_vs_simulation(const CorpusSpec& spec, const HittingHook& hook = {});

/// Trans = ∩_U O₋(U) over the minimal-neighborhood density basis.
TheoremResult check_trans_intersection(const CorpusSpec& spec, const TransHook& hook = {});

struct DensityCriteriaReport {
    TheoremResult agreement;  // I ⟺ II everywhere; V ⟺ I; regular: all five
    TheoremResult min_basis;  // the minimal-neighborhood family passes all five
    std::uint64_t nonregular_families = 0;
    /// Logged, not asserted: criterion III genuinely diverges from the others
    /// on non-regular spaces (e.g. the family {X} on the two-point space with
    /// one open point), which is why the agreement claims are filtered.
    std::uint64_t nonregular_divergences = 0;
};

/// Density-criteria agreement over every candidate family of opene sets on
/// every topology with at most max_n points.
DensityCriteriaReport check_density_criteria(std::uint32_t max_n);

struct DensityTransferReport {
    TheoremResult irreducible_wao;  // every irreducible map is weakly almost open
    TheoremResult pullback;         // along every irreducible map, unconditional
    TheoremResult pushforward;      // regular codomains, per the hypotheses
    std::uint64_t nonregular_pushforwards = 0;
    std::uint64_t nonregular_pushforward_failures = 0;  // logged, expected > 0
};

/// Basis transfers exhausted over all continuous maps between all topology
/// pairs with at most max_n points. The pushforward claim carries its
/// regularity hypothesis; outside it the failures are counted, not asserted
/// (the one-point space mapped onto the open point of the non-regular
/// two-point space pushes {X} forward, which is not a density basis there).
DensityTransferReport check_density_transfers(std::uint32_t max_n);

/// Replays every witness of a report against the raw definitions. With
/// exhaustive_opens, universal claims are re-quantified over all open sets
/// rather than minimal neighborhoods. Returns a failure description, or
/// nullopt when everything replays.
std::optional<std::string> replay_report(const FinSystem& sys, const PropertyReport& report,
                                         bool exhaustive_opens);

/// Conjunctions of possibly negated atoms over the seven property names and
/// the space flags perfect, hausdorff, surjective, bijective.
struct Predicate {
    struct Term {
        std::string name;
        bool negated = false;
    };
    std::vector<Term> terms;
    std::string text;
};

Predicate parse_predicate(const std::string& text);
bool eval_predicate(const Predicate& p, const FinSystem& sys, const PropertyReport& report);

struct SearchResult {
    bool found = false;
    FinSystem system;
    std::string system_id;
    std::uint64_t candidates_tried = 0;
    std::string certificate;  // replayed-facts summary for the found system
};

/// First system in deterministic search order (catalog, exhaustive up to 4
/// points, then seeded random systems up to 8 points) satisfying the
/// predicate; its report is replayed with exhaustive open-set quantification
/// before it is returned.
SearchResult search_counterexample(const std::string& predicate, std::uint64_t budget);

}  // namespace topdyn::harness
