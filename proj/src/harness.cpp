#include "topdyn/harness.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace topdyn::harness {

using fintop::FinSpace;

// --- corpus ---------------------------------------------------------------

static FinSpace space_from_relation(std::uint32_t n, const std::vector<std::uint64_t>& rel) {
    std::vector<PointSet> nb;
    nb.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x) nb.push_back(PointSet(n, rel[x]));
    return FinSpace{n, std::move(nb)};
}

static void transitive_closure(std::uint32_t n, std::vector<std::uint64_t>& rel) {
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t x = 0; x < n; ++x)
            if ((rel[x] >> k) & 1u) rel[x] |= rel[k];
}

bool is_continuous_table(const FinSpace& space, const std::vector<std::uint32_t>& table) {
    for (std::uint32_t x = 0; x < space.n; ++x) {
        const PointSet& nb = space.min_nbhd[x];
        const PointSet& target = space.min_nbhd[table[x]];
        for (std::uint32_t y = 0; y < space.n; ++y)
            if (nb.contains(y) && !target.contains(table[y])) return false;
    }
    return true;
}

FinSystem random_system(std::uint32_t n, std::uint64_t seed, Filter filter) {
    if (n == 0) throw BadParams("random_system requires n >= 1");
    if (n > 32) throw BadParams("random_system is limited to 32 points");
    if (filter.perfect_only && n < 2)
        throw BadParams("a one-point space cannot be perfect");
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));

    FinSpace space;
    for (int attempt = 0;; ++attempt) {
        std::vector<std::uint64_t> rel(n, 0);
        if (filter.hausdorff_only) {
            for (std::uint32_t x = 0; x < n; ++x) rel[x] = std::uint64_t{1} << x;
        } else {
            const std::uint64_t style = rng.below(8);
            for (std::uint32_t x = 0; x < n; ++x) rel[x] = std::uint64_t{1} << x;
            if (style == 0) {
                // discrete: keep the diagonal only
            } else if (style == 1) {
                for (std::uint32_t x = 0; x < n; ++x) rel[x] = PointSet::mask_of(n);
            } else {
                const std::uint64_t num = style;  // edge probability style/16
                for (std::uint32_t x = 0; x < n; ++x)
                    for (std::uint32_t y = 0; y < n; ++y)
                        if (x != y && rng.chance(num, 16)) rel[x] |= std::uint64_t{1} << y;
                transitive_closure(n, rel);
            }
        }
        space = space_from_relation(n, rel);
        if (!filter.perfect_only || fintop::is_perfect(space)) break;
        if (attempt > 512) {
            space = fintop::indiscrete(n);
            break;
        }
    }

    const bool want_bijective = filter.bijective_only || filter.surjective_only;
    std::vector<std::uint32_t> table(n);
    bool have = false;
    for (int attempt = 0; attempt < 4096 && !have; ++attempt) {
        if (want_bijective) {
            for (std::uint32_t i = 0; i < n; ++i) table[i] = i;
            for (std::uint32_t i = n; i > 1; --i)
                std::swap(table[i - 1], table[rng.below(i)]);
        } else {
            for (std::uint32_t i = 0; i < n; ++i)
                table[i] = static_cast<std::uint32_t>(rng.below(n));
        }
        have = is_continuous_table(space, table);
    }
    if (!have) {
        // identity and constant maps are always continuous
        for (std::uint32_t i = 0; i < n; ++i) table[i] = want_bijective ? i : 0u;
    }
    return findyn::system_new(std::move(space), std::move(table));
}

std::vector<FinSpace> enumerate_spaces(std::uint32_t n) {
    if (n == 0 || n > 5) throw BoundExceeded("space enumeration is limited to 1..5 points");
    std::vector<FinSpace> out;
    const std::uint32_t offdiag = n * n - n;
    const std::uint64_t limit = std::uint64_t{1} << offdiag;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<std::uint64_t> rel(n, 0);
        std::uint32_t bit = 0;
        for (std::uint32_t x = 0; x < n; ++x) {
            rel[x] |= std::uint64_t{1} << x;
            for (std::uint32_t y = 0; y < n; ++y) {
                if (x == y) continue;
                if ((mask >> bit) & 1u) rel[x] |= std::uint64_t{1} << y;
                ++bit;
            }
        }
        // keep only relations that are already transitive: each preorder once
        bool transitive = true;
        for (std::uint32_t x = 0; x < n && transitive; ++x)
            for (std::uint32_t k = 0; k < n && transitive; ++k)
                if ((rel[x] >> k) & 1u)
                    if ((rel[k] & ~rel[x]) != 0) transitive = false;
        if (transitive) out.push_back(space_from_relation(n, rel));
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> continuous_tables(const FinSpace& space) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> table(space.n, 0);
    for (;;) {
        if (is_continuous_table(space, table)) out.push_back(table);
        std::uint32_t i = 0;
        while (i < space.n) {
            if (++table[i] < space.n) break;
            table[i] = 0;
            ++i;
        }
        if (i == space.n) break;
    }
    return out;
}

static bool passes_filter(const FinSystem& sys, const Filter& f) {
    if (f.hausdorff_only && !fintop::separation_flags(sys.space).hausdorff) return false;
    if (f.perfect_only && !fintop::is_perfect(sys.space)) return false;
    if ((f.surjective_only || f.bijective_only) && !findyn::is_surjective(sys)) return false;
    return true;
}

static std::vector<std::pair<std::string, FinSystem>> family_catalog() {
    using families::build_finite;
    using families::Family;
    using families::FamilySpec;
    std::vector<std::pair<std::string, FinSystem>> out;
    for (std::int64_t n = 1; n <= 4; ++n)
        out.emplace_back("family:cycle(" + std::to_string(n) + ")",
                         build_finite(FamilySpec{Family::cycle, n, 0, 64}));
    for (std::int64_t n = 1; n <= 2; ++n)
        for (std::int64_t k = 1; k <= 2; ++k)
            out.emplace_back(
                "family:figure9(" + std::to_string(n) + "," + std::to_string(k) + ")",
                build_finite(FamilySpec{Family::figure9, n, k, 64}));
    out.emplace_back("family:sierpinski_map",
                     build_finite(FamilySpec{Family::sierpinski_map, 0, 0, 64}));
    out.emplace_back("family:indiscrete_swap",
                     build_finite(FamilySpec{Family::indiscrete_swap, 0, 0, 64}));
    out.emplace_back("family:partition4",
                     build_finite(FamilySpec{Family::partition4, 0, 0, 64}));
    return out;
}

void for_each_system(const CorpusSpec& spec,
                     const std::function<void(const FinSystem&, const std::string&)>& fn) {
    if (spec.exhaustive_max > 5)
        throw BoundExceeded("exhaustive corpus is limited to 5 points for all topologies");
    if (spec.discrete_max > 6)
        throw BoundExceeded("exhaustive discrete corpus is limited to 6 points");

    if (spec.include_families)
        for (const auto& [id, sys] : family_catalog())
            if (passes_filter(sys, spec.filter)) fn(sys, id);

    for (std::uint32_t n = 1; n <= spec.exhaustive_max; ++n) {
        auto spaces = enumerate_spaces(n);
        for (std::size_t t = 0; t < spaces.size(); ++t) {
            if (spec.filter.hausdorff_only &&
                !fintop::separation_flags(spaces[t]).hausdorff)
                continue;
            if (spec.filter.perfect_only && !fintop::is_perfect(spaces[t])) continue;
            auto tables = continuous_tables(spaces[t]);
            for (std::size_t m = 0; m < tables.size(); ++m) {
                FinSystem sys{spaces[t], tables[m], {}};
                if (!passes_filter(sys, spec.filter)) continue;
                fn(sys, "exh:n=" + std::to_string(n) + ":topo=" + std::to_string(t) +
                            ":map=" + std::to_string(m));
            }
        }
    }

    for (std::uint32_t n = spec.exhaustive_max + 1; n <= spec.discrete_max; ++n) {
        FinSpace d = fintop::discrete(n);
        auto tables = continuous_tables(d);  // all n^n tables are continuous
        for (std::size_t m = 0; m < tables.size(); ++m) {
            FinSystem sys{d, tables[m], {}};
            if (!passes_filter(sys, spec.filter)) continue;
            fn(sys, "disc:n=" + std::to_string(n) + ":map=" + std::to_string(m));
        }
    }

    SplitMix64 rng(spec.seed);
    const std::uint32_t lo = spec.filter.perfect_only ? 2 : 1;
    for (std::uint64_t i = 0; i < spec.random_count; ++i) {
        const std::uint32_t span = spec.random_max_points >= lo
                                       ? spec.random_max_points - lo + 1
                                       : 1;
        const std::uint32_t n = lo + static_cast<std::uint32_t>(rng.below(span));
        const std::uint64_t sub_seed = rng.next();
        FinSystem sys = random_system(n, sub_seed, spec.filter);
        fn(sys, "rand:seed=" + std::to_string(spec.seed) + ":i=" + std::to_string(i) +
                    ":n=" + std::to_string(n));
    }
}

std::uint64_t corpus_size(const CorpusSpec& spec) {
    std::uint64_t count = 0;
    for_each_system(spec, [&](const FinSystem&, const std::string&) { ++count; });
    return count;
}

// --- raw replays ----------------------------------------------------------
//
// Deliberately definition-level recomputations, independent of the EPSet
// canonicalization and of the minimal-neighborhood reductions they audit.

namespace raw {

static PointSet step_preimage(const FinSystem& s, const PointSet& a) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x)
        if (a.contains(s.map[x])) out.add(x);
    return out;
}

static PointSet step_image(const FinSystem& s, const PointSet& a) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x)
        if (a.contains(x)) out.add(s.map[x]);
    return out;
}

// U ∩ f^{-k}(V) ≠ ∅ for signed k, by stepping sets
static bool member(const FinSystem& s, const PointSet& u, const PointSet& v, std::int64_t k) {
    PointSet w = v;
    if (k >= 0)
        for (std::int64_t i = 0; i < k; ++i) w = step_preimage(s, w);
    else
        for (std::int64_t i = 0; i < -k; ++i) w = step_image(s, w);
    return u.intersects(w);
}

// membership bits of N+(U,V) scanned until the preimage sequence repeats;
// returns (bits, mu) with bits.size() = mu + lambda
static std::pair<std::vector<bool>, std::size_t> nplus_bits(const FinSystem& s, const PointSet& u,
                                                            const PointSet& v) {
    std::map<std::uint64_t, std::size_t> seen;
    std::vector<bool> bits;
    PointSet w = v;
    for (;;) {
        auto it = seen.find(w.bits);
        if (it != seen.end()) return {bits, it->second};
        seen.emplace(w.bits, bits.size());
        bits.push_back(u.intersects(w));
        w = step_preimage(s, w);
    }
}

static bool nplus_nonempty(const FinSystem& s, const PointSet& u, const PointSet& v) {
    auto [bits, mu] = nplus_bits(s, u, v);
    return std::find(bits.begin(), bits.end(), true) != bits.end();
}

static bool nplus_infinite(const FinSystem& s, const PointSet& u, const PointSet& v) {
    auto [bits, mu] = nplus_bits(s, u, v);
    for (std::size_t i = mu; i < bits.size(); ++i)
        if (bits[i]) return true;
    return false;
}

static PointSet orbit(const FinSystem& s, std::uint32_t x) {
    PointSet out = PointSet::empty_set(s.n());
    std::uint32_t p = x;
    while (!out.contains(p)) {
        out.add(p);
        p = s.map[p];
    }
    return out;
}

static PointSet backward(const FinSystem& s, PointSet a) {
    for (;;) {
        PointSet next = a | step_preimage(s, a);
        if (next == a) return a;
        a = next;
    }
}

static PointSet omega(const FinSystem& s, std::uint32_t x) {
    PointSet out = PointSet::full_set(s.n());
    PointSet visited = PointSet::empty_set(s.n());
    std::uint32_t p = x;
    while (!visited.contains(p)) {
        visited.add(p);
        out = out & fintop::closure(s.space, orbit(s, p));
        p = s.map[p];
    }
    return out;
}

static PointSet trans(const FinSystem& s) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x)
        if (fintop::is_dense(s.space, orbit(s, x))) out.add(x);
    return out;
}

}  // namespace raw

std::optional<std::string> replay_report(const FinSystem& sys, const PropertyReport& report,
                                         bool exhaustive_opens) {
    const std::uint32_t n = sys.n();
    auto fail = [](const std::string& msg) { return std::optional<std::string>(msg); };

    if (report.trans != raw::trans(sys)) return fail("Trans does not match raw recomputation");
    if (report.iso != fintop::isolated_points(sys.space))
        return fail("Iso does not match raw recomputation");

    auto nb = [&](std::uint32_t i) { return sys.space.min_nbhd[i]; };

    // TT
    if (report.tt) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> covered;
        for (const auto& h : report.tt_hits) {
            if (!raw::member(sys, nb(h.u), nb(h.v), h.k))
                return fail("TT hit witness fails to replay");
            covered.emplace(h.u, h.v);
        }
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v)
                if (!covered.count({u, v})) return fail("TT certificate misses a pair");
    } else {
        if (!report.tt_refuted) return fail("TT refutation witness missing");
        const auto& p = *report.tt_refuted;
        if (raw::nplus_nonempty(sys, nb(p.u), nb(p.v)) ||
            raw::nplus_nonempty(sys, nb(p.v), nb(p.u)))
            return fail("TT refutation pair actually hits");
    }

    // TT+
    if (report.tt_plus) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> covered;
        for (const auto& h : report.ttp_hits) {
            if (h.k < 0) return fail("TT+ hit witness has a negative time");
            if (!raw::member(sys, nb(h.u), nb(h.v), h.k))
                return fail("TT+ hit witness fails to replay");
            covered.emplace(h.u, h.v);
        }
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v)
                if (!covered.count({u, v})) return fail("TT+ certificate misses a pair");
    } else {
        if (!report.ttp_refuted) return fail("TT+ refutation witness missing");
        const auto& p = *report.ttp_refuted;
        if (raw::nplus_nonempty(sys, nb(p.u), nb(p.v)))
            return fail("TT+ refutation pair actually hits forward");
    }

    // TT++
    if (report.tt_plusplus) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> covered;
        for (const auto& h : report.ttpp_hits) {
            for (std::uint64_t m = 0; m < 3; ++m)
                if (!raw::member(sys, nb(h.u), nb(h.v),
                                 static_cast<std::int64_t>(h.start + m * h.step)))
                    return fail("TT++ progression witness fails to replay");
            if (!raw::nplus_infinite(sys, nb(h.u), nb(h.v)))
                return fail("TT++ pair is not raw-infinite");
            covered.emplace(h.u, h.v);
        }
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v)
                if (!covered.count({u, v})) return fail("TT++ certificate misses a pair");
    } else {
        if (!report.ttpp_refuted) return fail("TT++ refutation witness missing");
        const auto& p = *report.ttpp_refuted;
        if (raw::nplus_infinite(sys, nb(p.u), nb(p.v)))
            return fail("TT++ refutation pair is actually infinite");
    }

    // IN
    if (report.in) {
        std::set<std::pair<std::uint32_t, std::uint32_t>> covered;
        for (const auto& w : report.in_meets) {
            PointSet bu = raw::backward(sys, nb(w.u));
            PointSet bv = raw::backward(sys, nb(w.v));
            if (!bu.contains(w.point) || !bv.contains(w.point))
                return fail("IN meet witness fails to replay");
            covered.emplace(w.u, w.v);
        }
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u; v < n; ++v)
                if (!covered.count({u, v})) return fail("IN certificate misses a pair");
    } else {
        if (!report.in_cover) return fail("IN cover witness missing");
        const auto& c = *report.in_cover;
        if (!fintop::is_closed(sys.space, c.a1) || !fintop::is_closed(sys.space, c.a2))
            return fail("IN cover parts are not closed");
        if (!raw::step_image(sys, c.a1).subset_of(c.a1) ||
            !raw::step_image(sys, c.a2).subset_of(c.a2))
            return fail("IN cover parts are not +invariant");
        if ((c.a1 | c.a2) != PointSet::full_set(n)) return fail("IN cover does not cover X");
        if (c.a1 == PointSet::full_set(n) || c.a2 == PointSet::full_set(n))
            return fail("IN cover parts must be proper");
    }

    // DO
    auto replay_candidate = [&](bool half, std::uint32_t start,
                                PointSet* elements) -> std::optional<std::string> {
        if (half) {
            if (raw::step_preimage(sys, PointSet::singleton(n, start)).any())
                return fail("half-infinite start has a preimage");
            *elements = raw::orbit(sys, start);
        } else {
            PointSet c = raw::orbit(sys, start);
            if (!c.contains(start) || raw::step_image(sys, c) != c)
                return fail("bi-infinite candidate is not an invariant cycle set");
            // a cycle: stepping |c| times from start returns to start
            std::uint32_t p = start;
            for (std::uint32_t i = 0; i < c.size(); ++i) p = sys.map[p];
            if (p != start) return fail("bi-infinite candidate does not close up");
            *elements = c;
        }
        return std::nullopt;
    };
    if (report.do_) {
        if (!report.do_witness) return fail("DO witness missing");
        PointSet elements = PointSet::empty_set(n);
        if (auto err = replay_candidate(report.do_witness->half_infinite,
                                        report.do_witness->start, &elements))
            return err;
        if (elements != report.do_witness->elements) return fail("DO witness element set wrong");
        if (!fintop::is_dense(sys.space, elements)) return fail("DO witness is not dense");
    } else {
        // failures must cover every candidate element set
        std::set<std::pair<bool, std::uint32_t>> covered;
        for (const auto& f : report.do_failures) {
            PointSet elements = PointSet::empty_set(n);
            if (auto err = replay_candidate(f.half_infinite, f.start, &elements)) return err;
            if (nb(f.missed).intersects(elements))
                return fail("DO failure witness actually meets the named neighborhood");
            covered.emplace(f.half_infinite, f.start);
        }
        PointSet img = raw::step_image(sys, PointSet::full_set(n));
        for (std::uint32_t t = 0; t < n; ++t)
            if (!img.contains(t) && !covered.count({true, t}))
                return fail("DO failures miss a preimage-free start");
        PointSet done = PointSet::empty_set(n);
        for (std::uint32_t x = 0; x < n; ++x) {
            PointSet o = raw::orbit(sys, x);
            std::uint32_t p = x;
            for (std::uint32_t i = 0; i < o.size(); ++i) p = sys.map[p];
            if (p == x && !done.contains(x)) {  // x lies on a cycle
                bool ok = false;
                for (auto rep : o.indices())
                    if (covered.count({false, rep})) ok = true;
                if (!ok) return fail("DO failures miss a cycle");
                done = done | o;
            }
        }
    }

    // DO+
    if (report.do_plus) {
        if (!report.dop_point) return fail("DO+ witness missing");
        if (!fintop::is_dense(sys.space, raw::orbit(sys, *report.dop_point)))
            return fail("DO+ witness orbit is not dense");
    } else {
        std::set<std::uint32_t> covered;
        for (const auto& f : report.dop_failures) {
            if (nb(f.missed).intersects(raw::orbit(sys, f.point)))
                return fail("DO+ failure witness actually meets the named neighborhood");
            covered.insert(f.point);
        }
        for (std::uint32_t x = 0; x < n; ++x)
            if (!covered.count(x)) return fail("DO+ failures miss a point");
    }

    // DO++
    if (report.do_plusplus) {
        if (!report.dopp_point) return fail("DO++ witness missing");
        if (raw::omega(sys, *report.dopp_point) != PointSet::full_set(n))
            return fail("DO++ witness omega-limit is not the whole space");
    } else {
        std::set<std::uint32_t> covered;
        for (const auto& f : report.dopp_failures) {
            if (raw::nplus_infinite(sys, PointSet::singleton(n, f.point), nb(f.missed)))
                return fail("DO++ failure witness has an infinite hitting set after all");
            covered.insert(f.point);
        }
        for (std::uint32_t x = 0; x < n; ++x)
            if (!covered.count(x)) return fail("DO++ failures miss a point");
    }

    if (exhaustive_opens) {
        if (n > 16) return fail("exhaustive open-set replay is limited to 16 points");
        auto openes = fintop::opene_sets(sys.space);
        for (const auto& u : openes)
            for (const auto& v : openes) {
                const bool fwd = raw::nplus_nonempty(sys, u, v);
                const bool bwd = raw::nplus_nonempty(sys, v, u);
                if (report.tt && !(fwd || bwd))
                    return fail("TT fails on an opene pair under exhaustive quantification");
                if (report.tt_plus && !fwd)
                    return fail("TT+ fails on an opene pair under exhaustive quantification");
                if (report.tt_plusplus && !raw::nplus_infinite(sys, u, v))
                    return fail("TT++ fails on an opene pair under exhaustive quantification");
            }
        // IN under exhaustive quantification: no two disjoint opene -invariant sets
        bool has_disjoint = false;
        for (const auto& u : openes)
            for (const auto& v : openes)
                if (raw::step_preimage(sys, u).subset_of(u) &&
                    raw::step_preimage(sys, v).subset_of(v) && !u.intersects(v))
                    has_disjoint = true;
        if (report.in == has_disjoint)
            return fail("IN disagrees with exhaustive -invariant opene quantification");
    }
    return std::nullopt;
}

// --- lattice ----------------------------------------------------------

std::vector<TheoremResult> verify_lattice(const CorpusSpec& spec, const ReportHook& hook) {
    struct Rule {
        std::string id;
        std::function<bool(const PropertyReport&)> ok;
    };
    const std::vector<Rule> rules = {
        {"ttpp_implies_ttp", [](const PropertyReport& r) { return !r.tt_plusplus || r.tt_plus; }},
        {"ttp_implies_tt", [](const PropertyReport& r) { return !r.tt_plus || r.tt; }},
        {"dopp_implies_dop", [](const PropertyReport& r) { return !r.do_plusplus || r.do_plus; }},
        {"dop_implies_do", [](const PropertyReport& r) { return !r.do_plus || r.do_; }},
        {"do_implies_tt", [](const PropertyReport& r) { return !r.do_ || r.tt; }},
        {"dopp_implies_ttpp",
         [](const PropertyReport& r) { return !r.do_plusplus || r.tt_plusplus; }},
        {"tt_iff_in", [](const PropertyReport& r) { return r.tt == r.in; }},
    };
    std::vector<TheoremResult> out;
    for (const auto& rule : rules) out.push_back(TheoremResult{rule.id, rule.id, 0, 0, {}});
    for_each_system(spec, [&](const FinSystem& sys, const std::string& id) {
        PropertyReport r = findyn::properties(sys);
        if (hook) r = hook(sys, std::move(r));
        for (std::size_t i = 0; i < rules.size(); ++i) {
            ++out[i].checked;
            if (!rules[i].ok(r))
                out[i].violations.push_back(
                    Violation{id, "verdicts IN=" + std::to_string(r.in) +
                                      " TT=" + std::to_string(r.tt) +
                                      " TT+=" + std::to_string(r.tt_plus) +
                                      " TT++=" + std::to_string(r.tt_plusplus) +
                                      " DO=" + std::to_string(r.do_) +
                                      " DO+=" + std::to_string(r.do_plus) +
                                      " DO++=" + std::to_string(r.do_plusplus)});
        }
    });
    return out;
}

// --- theorem suite ----------------------------------------------------

namespace {

struct Context {
    const FinSystem& sys;
    const std::string& id;
    PropertyReport report;
    fintop::SeparationFlags flags;
    bool perfect = false;
    bool surjective = false;
    bool open_map = false;
    PointSet iso;
};

struct Entry {
    std::string id;
    std::function<bool(const Context&)> hypothesis;
    std::function<std::optional<std::string>(const Context&)> check;
};

bool single_cycle(const FinSystem& s) {
    return findyn::is_surjective(s) &&
           findyn::forward_orbit(s, 0) == PointSet::full_set(s.n());
}

std::vector<PointSet> subsets_with(const FinSystem& s,
                                   const std::function<bool(const PointSet&)>& pred) {
    std::vector<PointSet> out;
    const std::uint64_t limit = std::uint64_t{1} << s.n();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        PointSet a(s.n(), bits);
        if (pred(a)) out.push_back(a);
    }
    return out;
}

std::optional<std::string> check_prop31_subset(const Context& c, const PointSet& a,
                                               bool check_perfectness) {
    const FinSystem& sys = c.sys;
    findyn::Subsystem sub = findyn::subsystem(sys, a);
    PropertyReport sr = findyn::properties(sub.sys);
    if (sr.tt != c.report.tt || sr.tt_plus != c.report.tt_plus ||
        sr.tt_plusplus != c.report.tt_plusplus)
        return "TT-level verdicts differ on dense +invariant subset " + a.to_string();
    // The perfectness clause needs the Hausdorff standing assumption: on the
    // two-blob partition space, the dense +invariant subset {0,2} is discrete
    // while the ambient space is perfect.
    if (check_perfectness &&
        fintop::is_perfect(sys.space) != fintop::is_perfect(sub.sys.space))
        return "perfectness differs on dense +invariant subset " + a.to_string();
    for (std::uint32_t i = 0; i < sub.sys.n(); ++i) {
        const std::uint32_t parent = sub.to_parent[i];
        if (c.report.trans.contains(parent) != sr.trans.contains(i))
            return "transitive-point membership differs at point " + std::to_string(parent);
        const bool full_parent =
            findyn::omega_limit(sys, parent) == PointSet::full_set(sys.n());
        const bool full_sub =
            findyn::omega_limit(sub.sys, i) == PointSet::full_set(sub.sys.n());
        if (full_parent != full_sub)
            return "omega-fullness differs at point " + std::to_string(parent);
    }
    return std::nullopt;
}

std::vector<Entry> suite_entries() {
    std::vector<Entry> entries;
    auto add = [&](std::string id, std::function<bool(const Context&)> hyp,
                   std::function<std::optional<std::string>(const Context&)> check) {
        entries.push_back(Entry{std::move(id), std::move(hyp), std::move(check)});
    };
    auto always = [](const Context&) { return true; };

    add("perfect_hausdorff_tt_implies_ttpp",
        [](const Context& c) { return c.perfect && c.flags.hausdorff; },
        [](const Context& c) -> std::optional<std::string> {
            if (c.report.tt && !c.report.tt_plusplus) return "TT without TT++";
            return std::nullopt;
        });

    add("perfect_hausdorff_tt_selfhitting_infinite",
        [](const Context& c) { return c.perfect && c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (std::uint32_t x = 0; x < c.sys.n(); ++x)
                if (!findyn::hitting_set_plus(c.sys, c.sys.space.min_nbhd[x],
                                              c.sys.space.min_nbhd[x])
                         .infinite())
                    return "N+(U,U) finite for a minimal neighborhood";
            return std::nullopt;
        });

    add("isolated_ttplus_iff_single_cycle",
        [](const Context& c) { return c.flags.hausdorff && c.iso.any(); },
        [](const Context& c) -> std::optional<std::string> {
            const bool cyc = single_cycle(c.sys);
            if (c.report.tt_plus != cyc) return "TT+ does not match the single-cycle shape";
            if (c.report.tt_plus != c.report.tt_plusplus) return "TT+ and TT++ differ";
            if (c.report.tt_plus != c.report.do_plusplus) return "TT+ and DO++ differ";
            return std::nullopt;
        });

    add("isolated_tt_iff_do",
        [](const Context& c) { return c.flags.hausdorff && c.iso.any(); },
        [](const Context& c) -> std::optional<std::string> {
            if (c.report.tt != c.report.do_) return "TT and DO differ";
            return std::nullopt;
        });

    add("ttplus_iff_neg_invariant_opene_dense", always,
        [](const Context& c) -> std::optional<std::string> {
            bool all_dense = true;
            for (std::uint32_t x = 0; x < c.sys.n(); ++x)
                if (!fintop::is_dense(
                        c.sys.space,
                        findyn::backward_saturation(c.sys, c.sys.space.min_nbhd[x])))
                    all_dense = false;
            if (all_dense != c.report.tt_plus)
                return "TT+ disagrees with density of the backward saturations";
            return std::nullopt;
        });

    add("ttplus_implies_plus_invariant_opene_dense", always,
        [](const Context& c) -> std::optional<std::string> {
            if (!c.report.tt_plus) return std::nullopt;
            for (const auto& w : subsets_with(c.sys, [&](const PointSet& a) {
                     return a.any() && fintop::is_open(c.sys.space, a) &&
                            findyn::is_plus_invariant(c.sys, a);
                 }))
                if (!fintop::is_dense(c.sys.space, w))
                    return "+invariant opene set " + w.to_string() + " is not dense";
            return std::nullopt;
        });

    add("open_map_plus_invariant_dense_implies_ttplus",
        [](const Context& c) { return c.open_map; },
        [](const Context& c) -> std::optional<std::string> {
            bool all_dense = true;
            for (const auto& w : subsets_with(c.sys, [&](const PointSet& a) {
                     return a.any() && fintop::is_open(c.sys.space, a) &&
                            findyn::is_plus_invariant(c.sys, a);
                 }))
                if (!fintop::is_dense(c.sys.space, w)) all_dense = false;
            if (all_dense && !c.report.tt_plus)
                return "all +invariant opene sets dense, yet TT+ fails";
            return std::nullopt;
        });

    add("bijective_tt_iff_invariant_opene_dense",
        [](const Context& c) { return c.surjective; },
        [](const Context& c) -> std::optional<std::string> {
            bool all_dense = true;
            for (const auto& w : subsets_with(c.sys, [&](const PointSet& a) {
                     return a.any() && fintop::is_open(c.sys.space, a) &&
                            findyn::is_invariant(c.sys, a);
                 }))
                if (!fintop::is_dense(c.sys.space, w)) all_dense = false;
            if (all_dense != c.report.tt) return "TT disagrees with invariant opene density";
            return std::nullopt;
        });

    add("omega_full_iff_point_hitting_infinite", always,
        [](const Context& c) -> std::optional<std::string> {
            for (std::uint32_t x = 0; x < c.sys.n(); ++x) {
                const bool full =
                    findyn::omega_limit(c.sys, x) == PointSet::full_set(c.sys.n());
                bool all_inf = true;
                for (std::uint32_t y = 0; y < c.sys.n(); ++y)
                    if (!findyn::hitting_set_plus(c.sys,
                                                  PointSet::singleton(c.sys.n(), x),
                                                  c.sys.space.min_nbhd[y])
                             .infinite())
                        all_inf = false;
                if (full != all_inf)
                    return "omega-fullness disagrees at point " + std::to_string(x);
            }
            return std::nullopt;
        });

    add("trans_minus_invariant", always,
        [](const Context& c) -> std::optional<std::string> {
            if (!findyn::preimage(c.sys, c.report.trans).subset_of(c.report.trans))
                return "Trans is not -invariant";
            return std::nullopt;
        });

    add("perfect_t1_trans_plus_invariant_dense",
        [](const Context& c) { return c.perfect && c.flags.t1 && c.report.trans.any(); },
        [](const Context& c) -> std::optional<std::string> {
            if (!findyn::image(c.sys, c.report.trans).subset_of(c.report.trans))
                return "Trans is not +invariant";
            if (!fintop::is_dense(c.sys.space, c.report.trans)) return "Trans is not dense";
            return std::nullopt;
        });

    add("trans_equals_preimage_orbit_intersection", always,
        [](const Context& c) -> std::optional<std::string> {
            PointSet meet = PointSet::full_set(c.sys.n());
            for (std::uint32_t x = 0; x < c.sys.n(); ++x)
                meet = meet & findyn::backward_saturation(c.sys, c.sys.space.min_nbhd[x]);
            if (meet != c.report.trans)
                return "Trans differs from the intersection of backward saturations";
            return std::nullopt;
        });

    add("isolated_points_orbit_comparable",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (auto x : c.iso.indices())
                for (auto y : c.iso.indices())
                    if (!findyn::forward_orbit(c.sys, y).contains(x) &&
                        !findyn::forward_orbit(c.sys, x).contains(y))
                        return "incomparable isolated points";
            return std::nullopt;
        });

    add("double_preimage_isolated_is_periodic_pair",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (auto x : c.iso.indices()) {
                PointSet fiber = findyn::preimage(c.sys, PointSet::singleton(c.sys.n(), x));
                if (fiber.size() >= 2) {
                    if (fiber.size() != 2) return "fiber larger than two";
                    if (!findyn::forward_orbit(c.sys, c.sys.map[x]).contains(x))
                        return "doubly covered isolated point is not periodic";
                    if (!fiber.intersects(findyn::forward_orbit(c.sys, x)))
                        return "no fiber point on the orbit";
                }
            }
            return std::nullopt;
        });

    add("isolated_fibers_open_isolated",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (auto x : c.iso.indices()) {
                PointSet fiber = findyn::preimage(c.sys, PointSet::singleton(c.sys.n(), x));
                if (!fintop::is_open(c.sys.space, fiber)) return "fiber not open";
                if (!fiber.subset_of(c.iso)) return "fiber contains a non-isolated point";
            }
            return std::nullopt;
        });

    add("iso_minus_invariant_open",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            if (!fintop::is_open(c.sys.space, c.iso)) return "Iso not open";
            if (!findyn::preimage(c.sys, c.iso).subset_of(c.iso))
                return "Iso not -invariant";
            for (auto x : c.iso.indices())
                if (!findyn::backward_saturation(c.sys, PointSet::singleton(c.sys.n(), x))
                         .subset_of(c.iso))
                    return "O-(x) leaves Iso";
            return std::nullopt;
        });

    add("periodic_isolated_orbit_in_iso",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            PointSet cyc = findyn::cyclic_points(c.sys);
            for (auto x : c.iso.indices()) {
                if (!cyc.contains(x)) continue;
                PointSet o = findyn::forward_orbit(c.sys, x);
                if (!o.subset_of(c.iso)) return "periodic isolated orbit leaves Iso";
                if (o != PointSet::full_set(c.sys.n())) {
                    PointSet extra = findyn::preimage(c.sys, o).minus(o);
                    if (extra.size() != 1) return "preimage of the orbit is not orbit plus one";
                }
            }
            return std::nullopt;
        });

    add("at_most_one_double_preimage",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            std::uint32_t count = 0;
            for (auto x : c.iso.indices())
                if (findyn::preimage(c.sys, PointSet::singleton(c.sys.n(), x)).size() > 1)
                    ++count;
            if (count > 1) return "two isolated points with double preimages";
            return std::nullopt;
        });

    add("plus_invariant_backstep_interior_singleton",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (const auto& a : subsets_with(c.sys, [&](const PointSet& s) {
                     return findyn::is_plus_invariant(c.sys, s);
                 })) {
                PointSet gap = fintop::interior(c.sys.space,
                                                findyn::preimage(c.sys, a).minus(a));
                if (gap.size() > 1) return "interior of f^{-1}(A)\\A has two points";
                if (gap.size() == 1 && !c.iso.contains(gap.first()))
                    return "interior point is not isolated";
            }
            return std::nullopt;
        });

    add("image_dense_or_single_isolated_gap",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            PointSet img = findyn::image(c.sys, PointSet::full_set(c.sys.n()));
            if (fintop::is_dense(c.sys.space, img)) return std::nullopt;
            PointSet gap = fintop::closure(c.sys.space, img).complement();
            if (gap.size() != 1 || !c.iso.contains(gap.first()))
                return "image closure gap is not a single isolated point";
            return std::nullopt;
        });

    add("proper_closed_invariant_interior_step",
        [](const Context& c) { return c.flags.hausdorff && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (const auto& a : subsets_with(c.sys, [&](const PointSet& s) {
                     return s != PointSet::full_set(c.sys.n()) &&
                            fintop::is_closed(c.sys.space, s) &&
                            findyn::is_plus_invariant(c.sys, s) &&
                            fintop::interior(c.sys.space, s).any();
                 })) {
                PointSet u = fintop::interior(c.sys.space, a);
                PointSet s1 = findyn::preimage(c.sys, u).minus(a);
                PointSet s2 =
                    fintop::interior(c.sys.space, findyn::preimage(c.sys, a).minus(a));
                PointSet s3 =
                    fintop::interior(c.sys.space, findyn::preimage(c.sys, a)).minus(u);
                PointSet s4 = findyn::preimage(c.sys, u).minus(u);
                if (!(s1 == s2 && s2 == s3 && s3 == s4)) return "the four gap sets differ";
                if (s1.size() != 1 || !c.iso.contains(s1.first()))
                    return "gap is not a single isolated point";
                if (!findyn::is_plus_invariant(c.sys, a.minus(u)))
                    return "A minus its interior is not +invariant";
            }
            return std::nullopt;
        });

    add("bijective_tt_two_sided_orbit_is_iso",
        [](const Context& c) { return c.flags.hausdorff && c.surjective && c.report.tt; },
        [](const Context& c) -> std::optional<std::string> {
            for (auto x : c.iso.indices()) {
                PointSet o = findyn::two_sided(c.sys, x);
                if (o != c.iso) return "two-sided orbit differs from Iso";
                if (!fintop::is_dense(c.sys.space, o)) return "two-sided orbit not dense";
            }
            if (c.iso.any() && !single_cycle(c.sys))
                return "transitive bijection with isolated points is not a single cycle";
            return std::nullopt;
        });

    add("minimal_iff_no_proper_closed_plus_invariant", always,
        [](const Context& c) -> std::optional<std::string> {
            bool has_proper = false;
            for (const auto& a : subsets_with(c.sys, [&](const PointSet& s) {
                     return s.any() && s != PointSet::full_set(c.sys.n()) &&
                            fintop::is_closed(c.sys.space, s) &&
                            findyn::is_plus_invariant(c.sys, s);
                 }))
                has_proper = has_proper || a.any();
            if (findyn::is_minimal(c.sys) == has_proper)
                return "minimality disagrees with proper closed +invariant subsets";
            return std::nullopt;
        });

    add("hausdorff_minimal_not_cycle_is_perfect",
        [](const Context& c) {
            return c.flags.hausdorff && findyn::is_minimal(c.sys) && !single_cycle(c.sys);
        },
        [](const Context& c) -> std::optional<std::string> {
            if (!c.perfect) return "minimal non-cycle system is not perfect";
            if (!fintop::is_dense(c.sys.space,
                                  findyn::image(c.sys, PointSet::full_set(c.sys.n()))))
                return "image not dense";
            for (std::uint32_t x = 0; x < c.sys.n(); ++x)
                if (findyn::omega_limit(c.sys, x) != PointSet::full_set(c.sys.n()))
                    return "omega-limit not full";
            return std::nullopt;
        });

    add("hausdorff_minimal_subsets_invariant",
        [](const Context& c) { return c.flags.hausdorff; },
        [](const Context& c) -> std::optional<std::string> {
            auto mins = findyn::minimal_subsets(c.sys);
            if (mins.empty()) return "no minimal subset found";
            for (const auto& a : mins)
                if (findyn::image(c.sys, a) != a) return "minimal subset not invariant";
            return std::nullopt;
        });

    add("minimal_subsets_are_minimal_systems", always,
        [](const Context& c) -> std::optional<std::string> {
            for (const auto& a : findyn::minimal_subsets(c.sys)) {
                findyn::Subsystem sub = findyn::subsystem(c.sys, a);
                if (!findyn::is_minimal(sub.sys))
                    return "subsystem on a minimal subset is not minimal";
            }
            return std::nullopt;
        });

    add("hausdorff_minimal_iff_no_proper_closed_invariant",
        [](const Context& c) { return c.flags.hausdorff; },
        [](const Context& c) -> std::optional<std::string> {
            bool has_proper = false;
            for (const auto& a : subsets_with(c.sys, [&](const PointSet& s) {
                     return s.any() && s != PointSet::full_set(c.sys.n()) &&
                            fintop::is_closed(c.sys.space, s) &&
                            findyn::is_invariant(c.sys, s);
                 }))
                has_proper = has_proper || a.any();
            if (findyn::is_minimal(c.sys) == has_proper)
                return "minimality disagrees with proper closed invariant subsets";
            return std::nullopt;
        });

    add("bijective_minimal_iff_inverse_minimal",
        [](const Context& c) { return c.surjective; },
        [](const Context& c) -> std::optional<std::string> {
            std::vector<std::uint32_t> inv(c.sys.n());
            for (std::uint32_t x = 0; x < c.sys.n(); ++x) inv[c.sys.map[x]] = x;
            FinSystem back = findyn::system_new(c.sys.space, std::move(inv));
            if (findyn::is_minimal(c.sys) != findyn::is_minimal(back))
                return "minimality differs between a bijection and its inverse";
            return std::nullopt;
        });

    add("dense_plus_invariant_subsystem_transfer", always,
        [](const Context& c) -> std::optional<std::string> {
            const bool perf = c.flags.hausdorff;  // perfectness clause per hypotheses
            if (c.sys.n() <= 4) {
                for (const auto& a : subsets_with(c.sys, [&](const PointSet& s) {
                         return s.any() && fintop::is_dense(c.sys.space, s) &&
                                findyn::is_plus_invariant(c.sys, s);
                     }))
                    if (auto err = check_prop31_subset(c, a, perf)) return err;
                return std::nullopt;
            }
            if (auto err = check_prop31_subset(c, PointSet::full_set(c.sys.n()), perf))
                return err;
            for (auto x : c.report.trans.indices())
                if (auto err = check_prop31_subset(c, findyn::forward_orbit(c.sys, x), perf))
                    return err;
            return std::nullopt;
        });

    add("surjective_transitive_points_omega_full",
        [](const Context& c) { return c.surjective; },
        [](const Context& c) -> std::optional<std::string> {
            for (auto x : c.report.trans.indices())
                if (findyn::omega_limit(c.sys, x) != PointSet::full_set(c.sys.n()))
                    return "transitive point with partial omega-limit";
            return std::nullopt;
        });

    add("hitting_orbit_identities", always,
        [](const Context& c) -> std::optional<std::string> {
            for (std::uint32_t u = 0; u < c.sys.n(); ++u)
                for (std::uint32_t v = 0; v < c.sys.n(); ++v) {
                    const PointSet& us = c.sys.space.min_nbhd[u];
                    const PointSet& vs = c.sys.space.min_nbhd[v];
                    const bool nplus = !findyn::hitting_set_plus(c.sys, us, vs).empty();
                    const bool o_forward =
                        findyn::forward_orbit_of_set(c.sys, us).intersects(vs);
                    const bool o_backward =
                        us.intersects(findyn::backward_saturation(c.sys, vs));
                    if (nplus != o_forward || nplus != o_backward)
                        return "forward hitting identity fails";
                    const bool nz = findyn::hitting_nonempty_z(c.sys, us, vs).nonempty;
                    const PointSet two_u = findyn::forward_orbit_of_set(c.sys, us) |
                                           findyn::backward_saturation(c.sys, us);
                    const PointSet two_v = findyn::forward_orbit_of_set(c.sys, vs) |
                                           findyn::backward_saturation(c.sys, vs);
                    if (nz != two_u.intersects(vs) || nz != us.intersects(two_v))
                        return "two-sided hitting identity fails";
                }
            return std::nullopt;
        });

    add("min_nbhd_pair_reduction_matches_all_opens",
        [](const Context& c) { return c.sys.n() <= 4; },
        [](const Context& c) -> std::optional<std::string> {
            auto openes = fintop::opene_sets(c.sys.space);
            bool tt = true, ttp = true, ttpp = true;
            for (const auto& u : openes)
                for (const auto& v : openes) {
                    EPSet fwd = findyn::hitting_set_plus(c.sys, u, v);
                    EPSet bwd = findyn::hitting_set_plus(c.sys, v, u);
                    if (fwd.empty() && bwd.empty()) tt = false;
                    if (fwd.empty()) ttp = false;
                    if (!fwd.infinite()) ttpp = false;
                }
            if (tt != c.report.tt || ttp != c.report.tt_plus || ttpp != c.report.tt_plusplus)
                return "minimal-neighborhood reduction disagrees with all-open quantification";
            return std::nullopt;
        });

    return entries;
}

}  // namespace

std::vector<TheoremResult> verify_theorem_suite(const CorpusSpec& spec) {
    auto entries = suite_entries();
    std::vector<TheoremResult> out;
    for (const auto& e : entries) out.push_back(TheoremResult{e.id, e.id, 0, 0, {}});
    for_each_system(spec, [&](const FinSystem& sys, const std::string& id) {
        Context c{sys, id, findyn::properties(sys), fintop::separation_flags(sys.space),
                  fintop::is_perfect(sys.space), findyn::is_surjective(sys), false,
                  fintop::isolated_points(sys.space)};
        c.open_map = true;
        for (std::uint32_t x = 0; x < sys.n() && c.open_map; ++x)
            if (!fintop::is_open(sys.space, findyn::image(sys, sys.space.min_nbhd[x])))
                c.open_map = false;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!entries[i].hypothesis(c)) {
                ++out[i].vacuous;
                continue;
            }
            ++out[i].checked;
            if (auto err = entries[i].check(c))
                out[i].violations.push_back(Violation{id, *err});
        }
    });
    return out;
}

TheoremResult check_hitting_vs_simulation(const CorpusSpec& spec, const HittingHook& hook) {
    TheoremResult res{"hitting_set_vs_direct_simulation", "hitting_set_vs_direct_simulation",
                      0, 0, {}};
    for_each_system(spec, [&](const FinSystem& sys, const std::string& id) {
        ++res.checked;
        for (std::uint32_t u = 0; u < sys.n(); ++u)
            for (std::uint32_t v = 0; v < sys.n(); ++v) {
                const PointSet& us = sys.space.min_nbhd[u];
                const PointSet& vs = sys.space.min_nbhd[v];
                EPSet e = findyn::hitting_set_plus(sys, us, vs);
                if (hook) e = hook(sys, us, vs, std::move(e));
                const std::uint64_t horizon =
                    3 * (static_cast<std::uint64_t>(e.preperiod().size()) + e.period().size());
                PointSet w = vs;
                for (std::uint64_t k = 0; k <= horizon; ++k) {
                    if (e.contains(k) != us.intersects(w)) {
                        res.violations.push_back(Violation{
                            id, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") disagrees with simulation at k=" + std::to_string(k)});
                        break;
                    }
                    w = findyn::preimage(sys, w);
                }
            }
    });
    return res;
}

TheoremResult check_trans_intersection(const CorpusSpec& spec, const TransHook& hook) {
    TheoremResult res{"trans_equals_preimage_orbit_intersection",
                      "trans_equals_preimage_orbit_intersection", 0, 0, {}};
    for_each_system(spec, [&](const FinSystem& sys, const std::string& id) {
        ++res.checked;
        PointSet trans = findyn::transitive_points(sys);
        if (hook) trans = hook(sys, trans);
        PointSet meet = PointSet::full_set(sys.n());
        for (std::uint32_t x = 0; x < sys.n(); ++x)
            meet = meet & findyn::backward_saturation(sys, sys.space.min_nbhd[x]);
        if (meet != trans)
            res.violations.push_back(
                Violation{id, "Trans " + trans.to_string() + " vs intersection " +
                                  meet.to_string()});
    });
    return res;
}

DensityCriteriaReport check_density_criteria(std::uint32_t max_n) {
    using fintop::Criterion;
    DensityCriteriaReport rep;
    rep.agreement = TheoremResult{"density_criteria_agreement",
                                  "density_criteria_agreement", 0, 0, {}};
    rep.min_basis = TheoremResult{"min_nbhd_family_is_density_basis",
                                  "min_nbhd_family_is_density_basis", 0, 0, {}};
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        auto spaces = enumerate_spaces(n);
        for (std::size_t t = 0; t < spaces.size(); ++t) {
            const auto& space = spaces[t];
            const std::string sid = "space:n=" + std::to_string(n) + ":" + std::to_string(t);
            const bool regular = fintop::separation_flags(space).regular;

            ++rep.min_basis.checked;
            auto basis = fintop::min_nbhd_basis(space);
            for (auto crit : {Criterion::I, Criterion::II, Criterion::III, Criterion::IV,
                              Criterion::V})
                if (!fintop::is_density_basis(space, basis, crit))
                    rep.min_basis.violations.push_back(
                        Violation{sid, "minimal-neighborhood family fails criterion " +
                                           fintop::to_string(crit)});

            auto openes = fintop::opene_sets(space);
            const std::uint64_t limit = std::uint64_t{1} << openes.size();
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                fintop::DensityBasis d;
                for (std::size_t i = 0; i < openes.size(); ++i)
                    if ((mask >> i) & 1u) d.sets.push_back(openes[i]);
                const bool c1 = fintop::is_density_basis(space, d, Criterion::I);
                const bool c2 = fintop::is_density_basis(space, d, Criterion::II);
                const bool c3 = fintop::is_density_basis(space, d, Criterion::III);
                const bool c4 = fintop::is_density_basis(space, d, Criterion::IV);
                const bool c5 = fintop::is_density_basis(space, d, Criterion::V);
                ++rep.agreement.checked;
                if (c1 != c2)
                    rep.agreement.violations.push_back(
                        Violation{sid, "criteria I and II differ"});
                if (c5 != c1)
                    rep.agreement.violations.push_back(
                        Violation{sid, "criteria I and V differ"});
                if (regular && !(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5))
                    rep.agreement.violations.push_back(
                        Violation{sid, "criteria diverge on a regular space"});
                if (!regular) {
                    ++rep.nonregular_families;
                    if (!(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5))
                        ++rep.nonregular_divergences;
                }
            }
        }
    }
    return rep;
}

DensityTransferReport check_density_transfers(std::uint32_t max_n) {
    using fintop::Criterion;
    DensityTransferReport rep;
    rep.irreducible_wao = TheoremResult{"irreducible_implies_weakly_almost_open",
                                        "irreducible_implies_weakly_almost_open", 0, 0, {}};
    rep.pullback = TheoremResult{"pullback_along_irreducible_is_density_basis",
                                 "pullback_along_irreducible_is_density_basis", 0, 0, {}};
    rep.pushforward =
        TheoremResult{"pushforward_along_wao_dense_is_density_basis_regular_target",
                      "pushforward_along_wao_dense_is_density_basis_regular_target", 0, 0, {}};

    std::vector<FinSpace> spaces;
    for (std::uint32_t n = 1; n <= max_n; ++n)
        for (const auto& s : enumerate_spaces(n)) spaces.push_back(s);

    for (std::size_t si = 0; si < spaces.size(); ++si)
        for (std::size_t ti = 0; ti < spaces.size(); ++ti) {
            const FinSpace& x = spaces[si];
            const FinSpace& y = spaces[ti];
            const bool y_regular = fintop::separation_flags(y).regular;
            auto openes_y = fintop::opene_sets(y);
            auto openes_x = fintop::opene_sets(x);
            // all point tables, filtered to continuous maps
            std::vector<std::uint32_t> table(x.n, 0);
            for (;;) {
                fintop::SpaceMap h{x, y, table};
                if (fintop::is_continuous(h)) {
                    fintop::MapFlags flags = fintop::map_predicates(h);
                    const std::string mid = "map:" + std::to_string(si) + "->" +
                                            std::to_string(ti);
                    ++rep.irreducible_wao.checked;
                    if (flags.irreducible && !flags.weakly_almost_open)
                        rep.irreducible_wao.violations.push_back(
                            Violation{mid, "irreducible map is not weakly almost open"});

                    if (flags.irreducible) {
                        const std::uint64_t limit = std::uint64_t{1} << openes_y.size();
                        for (std::uint64_t mask = 1; mask < limit; ++mask) {
                            fintop::DensityBasis d;
                            for (std::size_t i = 0; i < openes_y.size(); ++i)
                                if ((mask >> i) & 1u) d.sets.push_back(openes_y[i]);
                            if (!fintop::is_density_basis(y, d, Criterion::I)) continue;
                            ++rep.pullback.checked;
                            auto res = fintop::pullback_basis(h, d);
                            if (!res.verified)
                                rep.pullback.violations.push_back(
                                    Violation{mid, "pullback failed verification"});
                        }
                    }
                    if (flags.weakly_almost_open && flags.dense_image) {
                        const std::uint64_t limit = std::uint64_t{1} << openes_x.size();
                        for (std::uint64_t mask = 1; mask < limit; ++mask) {
                            fintop::DensityBasis d;
                            for (std::size_t i = 0; i < openes_x.size(); ++i)
                                if ((mask >> i) & 1u) d.sets.push_back(openes_x[i]);
                            if (!fintop::is_density_basis(x, d, Criterion::I)) continue;
                            auto res = fintop::pushforward_basis(h, d);
                            if (y_regular) {
                                ++rep.pushforward.checked;
                                if (!res.verified)
                                    rep.pushforward.violations.push_back(
                                        Violation{mid, "pushforward failed verification"});
                            } else {
                                ++rep.nonregular_pushforwards;
                                if (!res.verified) ++rep.nonregular_pushforward_failures;
                            }
                        }
                    }
                }
                std::uint32_t i = 0;
                while (i < x.n) {
                    if (++table[i] < y.n) break;
                    table[i] = 0;
                    ++i;
                }
                if (i == x.n) break;
            }
        }
    return rep;
}

// --- predicates and search ---------------------------------------------

Predicate parse_predicate(const std::string& text) {
    Predicate p;
    p.text = text;
    std::string term;
    std::stringstream ss(text);
    while (std::getline(ss, term, '&')) {
        std::string cleaned;
        for (char ch : term)
            if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
        if (cleaned.empty()) throw Error("empty term in predicate: " + text);
        Predicate::Term t;
        while (!cleaned.empty() && cleaned.front() == '!') {
            t.negated = !t.negated;
            cleaned.erase(cleaned.begin());
        }
        std::string lower;
        for (char ch : cleaned) lower += static_cast<char>(std::tolower(ch));
        static const std::set<std::string> names = {
            "in", "tt", "tt+", "tt++", "do", "do+", "do++",
            "perfect", "hausdorff", "surjective", "bijective"};
        if (!names.count(lower)) throw Error("unknown predicate atom: " + cleaned);
        t.name = lower;
        p.terms.push_back(t);
    }
    if (p.terms.empty()) throw Error("empty predicate");
    return p;
}

static bool atom_value(const std::string& name, const FinSystem& sys,
                       const PropertyReport& r) {
    if (name == "in") return r.in;
    if (name == "tt") return r.tt;
    if (name == "tt+") return r.tt_plus;
    if (name == "tt++") return r.tt_plusplus;
    if (name == "do") return r.do_;
    if (name == "do+") return r.do_plus;
    if (name == "do++") return r.do_plusplus;
    if (name == "perfect") return fintop::is_perfect(sys.space);
    if (name == "hausdorff") return fintop::separation_flags(sys.space).hausdorff;
    if (name == "surjective" || name == "bijective") return findyn::is_surjective(sys);
    throw Error("unknown predicate atom: " + name);
}

bool eval_predicate(const Predicate& p, const FinSystem& sys, const PropertyReport& report) {
    for (const auto& t : p.terms)
        if (atom_value(t.name, sys, report) == t.negated) return false;
    return true;
}

SearchResult search_counterexample(const std::string& predicate, std::uint64_t budget) {
    Predicate p = parse_predicate(predicate);
    SearchResult result;

    CorpusSpec spec;
    spec.include_families = true;
    spec.exhaustive_max = 4;
    spec.discrete_max = 5;
    spec.random_count = budget;  // upper bound; the walk stops at the budget
    spec.random_max_points = 8;
    spec.seed = 0xC0FFEE;

    struct Found {};
    try {
        for_each_system(spec, [&](const FinSystem& sys, const std::string& id) {
            if (result.candidates_tried >= budget) throw Found{};
            ++result.candidates_tried;
            PropertyReport r = findyn::properties(sys);
            if (!eval_predicate(p, sys, r)) return;
            if (auto err = replay_report(sys, r, true))
                throw Error("found a candidate whose certificate fails to replay: " + *err);
            result.found = true;
            result.system = sys;
            result.system_id = id;
            std::string cert = "replayed against raw definitions over all open sets:";
            for (const auto& t : p.terms)
                cert += " " + std::string(t.negated ? "!" : "") + t.name;
            result.certificate = cert;
            throw Found{};
        });
    } catch (const Found&) {
    }
    return result;
}

}  // namespace topdyn::harness
