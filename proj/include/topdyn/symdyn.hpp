#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topdyn/core.hpp"

namespace topdyn::symdyn {

/// Words are strings over '0'..'0'+k-1 (alphabet size k, default 2).
void validate_word(const std::string& word, unsigned alphabet = 2);

/// The opene set of bi-infinite sequences matching `word` starting at
/// coordinate `offset`.
struct Cylinder {
    std::string word;
    std::int64_t offset = 0;
    bool operator==(const Cylinder&) const = default;
};

Cylinder cylinder(std::string word, std::int64_t offset = 0, unsigned alphabet = 2);
/// Parses "WORD@OFFSET" (offset defaults to 0 when the suffix is absent).
Cylinder parse_cylinder(const std::string& text, unsigned alphabet = 2);

/// A point of the full shift given by a decidable coordinate rule.
class ComputablePoint {
public:
    static ComputablePoint all_zeros();
    static ComputablePoint periodic(std::string word, unsigned alphabet = 2);
    /// Zeros at negative coordinates; the concatenation of all words in
    /// length-then-lexicographic order at nonnegative coordinates.
    static ComputablePoint all_words_concat(unsigned alphabet = 2);
    static ComputablePoint shift_of(ComputablePoint base, std::int64_t k);

    /// s^k(p)(n) = p(n + k) for the shifted constructor.
    int coordinate(std::int64_t n) const;

    /// An N with coordinate(n) = 0 for all n < N, when one is evident from
    /// the constructor; nullopt otherwise.
    std::optional<std::int64_t> left_zero_bound() const;

    /// True when every coordinate is 0.
    bool is_zero_point() const;

    unsigned alphabet() const { return alphabet_; }
    std::string describe() const;

private:
    enum class Tag { AllZeros, Periodic, AllWords, Shifted };
    Tag tag_ = Tag::AllZeros;
    unsigned alphabet_ = 2;
    std::string word_;
    std::shared_ptr<const ComputablePoint> base_;
    std::int64_t shift_ = 0;
};

int shift_coordinate(const ComputablePoint& p, std::int64_t n);

/// An exact description of a subset of ℤ: explicit membership on a finite
/// window, constant membership outside it.
struct ZSetDescription {
    std::int64_t lo = 0, hi = -1;  // window [lo, hi]; may be empty
    std::vector<bool> window;
    bool below_member = true;  // membership of every n < lo
    bool above_member = true;  // membership of every n > hi

    bool contains(std::int64_t n) const;
    bool is_cofinite() const;
    /// Non-members (all inside the window when cofinite).
    std::vector<std::int64_t> nonmembers() const;
    bool nplus_infinite() const;
    std::string to_string() const;
    bool operator==(const ZSetDescription&) const = default;
};

/// N(U,V) = {n : U ∩ s^{-n}(V) ≠ ∅} for cylinders: n is a member exactly when
/// the two word constraints agree on their overlap, and every n with disjoint
/// supports is a member, which makes cofiniteness structural.
ZSetDescription cylinder_hitting(const Cylinder& u, const Cylinder& v);

struct CofiniteReport {
    std::uint64_t pairs_checked = 0;
    std::size_t max_exceptional = 0;
    bool all_within_bound = true;    // exceptional size ≤ |u|+|v|-1
    bool all_nplus_infinite = true;  // TT++ at window scale
};

/// Checks every word pair with lengths ≤ maxlen at offset 0.
CofiniteReport verify_cofinite(unsigned maxlen);

struct PrefixResult {
    std::string word;
    std::uint64_t expected_length = 0;  // Σ_{ℓ≤L} ℓ·2^ℓ, recomputed
    bool all_factors_present = false;   // every word of length ≤ L occurs
};

/// Concatenation of all binary words of length 1..L in canonical order.
PrefixResult transitive_prefix(unsigned maxlen);

struct Trans0Certificate {
    ComputablePoint point;
    unsigned level = 0;
    std::int64_t left_window = 0;     // coordinates -left_window..-1 checked zero
    bool left_tail_zero = false;      // plus the structural left-tail bound
    bool factors_certified = false;   // every word of length ≤ level occurs at n ≥ 0
};

/// The all-words point with a window certificate of membership in Trans⁰ up
/// to the requested level. Full membership holds by construction and is a
/// documented claim, not a checked verdict.
Trans0Certificate trans0_point(unsigned level);

struct PeriodicDensityReport {
    std::uint64_t cylinders_checked = 0;
    bool all_contained = false;      // Periodic(w) ∈ [w]@0 for every |w| ≤ L
    std::uint64_t witnesses_checked = 0;
    bool all_realized = false;       // every hitting member in window realized
                                     // by a periodic point
};

PeriodicDensityReport periodic_density_check(unsigned maxlen);

/// An exact dyadic value 2^exponent, or zero.
struct Dyadic {
    bool zero = true;
    std::int64_t exponent = 0;

    static Dyadic zero_value() { return Dyadic{true, 0}; }
    static Dyadic pow2(std::int64_t e) { return Dyadic{false, e}; }
    bool operator==(const Dyadic&) const = default;
    bool operator<(const Dyadic& o) const {
        if (zero) return !o.zero;
        if (o.zero) return false;
        return exponent < o.exponent;
    }
    bool operator<=(const Dyadic& o) const { return *this == o || *this < o; }
    std::string to_string() const;
};

struct BackwardDistance {
    std::int64_t steps = 0;
    std::int64_t radius = 0;
    Dyadic window_max;    // exact max over |n| ≤ R of 2^{-|n|}·[s^{-k}(p)_n ≠ 0]
    Dyadic tail_bound;    // 2^{-(R+1)}, a bound for |n| > R
    Dyadic exact;         // the exact distance d(s^{-k}p, 0̄)
};

/// d(x,y) = max_n 2^{-|n|}|x_n - y_n| against the fixed point 0̄. Requires a
/// point with an all-zero left tail below a computable bound.
BackwardDistance backward_distance_to_zero(const ComputablePoint& p, std::int64_t steps,
                                           std::int64_t radius);

}  // namespace topdyn::symdyn
