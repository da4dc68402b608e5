#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topdyn/core.hpp"
#include "topdyn/epset.hpp"
#include "topdyn/findyn.hpp"

namespace topdyn::families {

enum class Family {
    cycle,
    figure9,
    sierpinski_map,
    indiscrete_swap,
    partition4,
    chainZ,
    discreteN,
    discreteZ,
    infiniteFigure9,
};

Family family_from_string(const std::string& name);
std::string to_string(Family f);
bool is_finite_family(Family f);

struct FamilySpec {
    Family name = Family::cycle;
    std::int64_t n = 0;       // cycle length / modulus where applicable
    std::int64_t k = 0;       // tail length where applicable
    std::int64_t window = 64; // oracle bound B
};

void validate(const FamilySpec& spec);

/// Builds the finite catalog systems; BadParams for the lazy families.
findyn::FinSystem build_finite(const FamilySpec& spec);

enum class Provenance { ExactFormula, FiniteComputation };

/// A per-property claim with a finite witness description. ExactFormula
/// verdicts carry the window bound at which the oracle is expected to
/// confirm them.
struct Verdict {
    std::string property;  // "IN","TT","TT+","TT++","DO","DO+","DO++","Trans","Iso","ImageDense"
    bool outcome = false;
    std::string witness;
    Provenance provenance = Provenance::ExactFormula;
    std::int64_t crosscheck_bound = 64;
};

/// Exact formula-based verdicts for a lazy family; BadParams for finite ones.
std::vector<Verdict> lazy_verdicts(const FamilySpec& spec);

/// The isolated-point case a lazy family realizes, when it realizes one (the
/// integer chain has no isolated points and classifies as none).
std::optional<findyn::CaseTag> lazy_case_tag(const FamilySpec& spec);

struct ChainHitting {
    EPSet set;            // always all of ℕ on the integer chain
    std::string formula;  // the witness schema
};

/// N₊((-∞,a),(-∞,b)) on the integer chain with down-set topology: ℕ exactly,
/// witnessed by x = min(a,b) - m - 1 at step m.
ChainHitting chain_hitting(std::int64_t a, std::int64_t b);

enum class OracleStatus { Confirmed, CounterexampleFound };

struct OracleOutcome {
    OracleStatus status = OracleStatus::Confirmed;
    std::string detail;
};

/// Re-derives the claim's finitely-checkable consequences for parameters of
/// magnitude up to B/2 directly from the definitions, scanning states of
/// magnitude up to B; throws BoundTooSmall when a required witness would
/// leave the window.
OracleOutcome window_oracle(const FamilySpec& spec, std::int64_t bound, const Verdict& claim);

/// Runs the oracle over every verdict of the family.
std::vector<std::pair<Verdict, OracleOutcome>> crosscheck_all(const FamilySpec& spec,
                                                              std::int64_t bound);

}  // namespace topdyn::families
