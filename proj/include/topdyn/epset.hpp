#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topdyn {

/// An eventually periodic subset of ℕ in canonical form: the period is
/// minimal, and no suffix of the preperiod can be absorbed into the period.
/// membership(k) = preperiod[k] for k < |preperiod|, else
/// period[(k - |preperiod|) mod |period|].
class EPSet {
public:
    EPSet() : per_{false} {}

    /// Canonicalizes: minimal period by divisor testing, then maximal
    /// absorption of the preperiod suffix (each absorbed bit rotates the
    /// period right by one).
    static EPSet from_bits(std::vector<bool> preperiod, std::vector<bool> period);

    static EPSet all_of_n();
    static EPSet empty_set();

    bool contains(std::uint64_t k) const;
    bool empty() const;
    bool infinite() const;

    const std::vector<bool>& preperiod() const { return pre_; }
    const std::vector<bool>& period() const { return per_; }

    /// Members when the set is finite (all lie in the preperiod).
    std::vector<std::uint64_t> finite_members() const;

    std::optional<std::uint64_t> min_member() const;

    /// For an infinite set: a k0 with {k0 + m·|period| : m ≥ 0} ⊆ set.
    std::optional<std::uint64_t> progression_start() const;

    bool operator==(const EPSet&) const = default;

    /// "pre=0110 per=10" style rendering plus a small member preview.
    std::string to_string() const;

private:
    std::vector<bool> pre_;
    std::vector<bool> per_;  // nonempty
};

}  // namespace topdyn
