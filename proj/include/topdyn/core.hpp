#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace topdyn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal-neighborhood axioms violated at a point pair.
class AxiomViolation : public Error {
public:
    AxiomViolation(std::uint32_t x, std::uint32_t y, const std::string& what)
        : Error(what), x(x), y(y) {}
    std::uint32_t x, y;
};

class NotContinuous : public Error {
public:
    NotContinuous(std::uint32_t point, const std::string& what) : Error(what), point(point) {}
    std::uint32_t point;
};

class EmptyBasisRejected : public Error {
public:
    using Error::Error;
};

class EmptySubspace : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    PreconditionFailed(std::string hypothesis)
        : Error("precondition failed: " + hypothesis), hypothesis(std::move(hypothesis)) {}
    std::string hypothesis;
};

class NotPlusInvariant : public Error {
public:
    using Error::Error;
};

class NotTransitive : public Error {
public:
    using Error::Error;
};

class NotHausdorff : public Error {
public:
    using Error::Error;
};

class NoIsolatedPoints : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

class BoundTooSmall : public Error {
public:
    using Error::Error;
};

class TailNotComputable : public Error {
public:
    using Error::Error;
};

/// Subset of the points 0..n-1 of an ambient space, stored as a bitmask.
/// Everything in this project lives on spaces with at most 64 points.
struct PointSet {
    std::uint32_t n = 0;
    std::uint64_t bits = 0;

    PointSet() = default;
    PointSet(std::uint32_t n, std::uint64_t bits) : n(n), bits(bits) {
        check_size(n);
        if (n < 64 && (bits >> n) != 0) throw Error("PointSet: index out of range");
    }

    static void check_size(std::uint32_t n) {
        if (n > 64) throw Error("PointSet: spaces are limited to 64 points");
    }
    static std::uint64_t mask_of(std::uint32_t n) {
        return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

    static PointSet empty_set(std::uint32_t n) { return PointSet(n, 0); }
    static PointSet full_set(std::uint32_t n) { return PointSet(n, mask_of(n)); }
    static PointSet singleton(std::uint32_t n, std::uint32_t i) {
        require_index(n, i);
        return PointSet(n, std::uint64_t{1} << i);
    }
    static PointSet of(std::uint32_t n, std::initializer_list<std::uint32_t> idx) {
        PointSet s = empty_set(n);
        for (auto i : idx) s.add(i);
        return s;
    }
    static PointSet of(std::uint32_t n, const std::vector<std::uint32_t>& idx) {
        PointSet s = empty_set(n);
        for (auto i : idx) s.add(i);
        return s;
    }
    static void require_index(std::uint32_t n, std::uint32_t i) {
        if (i >= n) throw Error("PointSet: point index " + std::to_string(i) + " out of range");
    }

    bool contains(std::uint32_t i) const { return i < n && ((bits >> i) & 1u); }
    PointSet& add(std::uint32_t i) {
        require_index(n, i);
        bits |= std::uint64_t{1} << i;
        return *this;
    }
    PointSet& remove(std::uint32_t i) {
        require_index(n, i);
        bits &= ~(std::uint64_t{1} << i);
        return *this;
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(__builtin_popcountll(bits)); }
    bool none() const { return bits == 0; }
    bool any() const { return bits != 0; }

    bool subset_of(const PointSet& o) const { return (bits & ~o.bits) == 0; }
    bool intersects(const PointSet& o) const { return (bits & o.bits) != 0; }

    PointSet operator|(const PointSet& o) const { return PointSet(n, bits | o.bits); }
    PointSet operator&(const PointSet& o) const { return PointSet(n, bits & o.bits); }
    PointSet minus(const PointSet& o) const { return PointSet(n, bits & ~o.bits); }
    PointSet complement() const { return PointSet(n, ~bits & mask_of(n)); }

    /// Lowest-index member; only valid when nonempty.
    std::uint32_t first() const {
        if (none()) throw Error("PointSet::first on empty set");
        return static_cast<std::uint32_t>(__builtin_ctzll(bits));
    }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(size());
        for (std::uint32_t i = 0; i < n; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    bool operator==(const PointSet&) const = default;

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!contains(i)) continue;
            if (sep) s += ",";
            s += std::to_string(i);
            sep = true;
        }
        return s + "}";
    }
};

/// Deterministic, platform-independent generator (splitmix64). Corpus
/// reproducibility depends on never using std:: distributions, whose output
/// is implementation-defined.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

}  // namespace topdyn
