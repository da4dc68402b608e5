#include "topdyn/findyn.hpp"

#include <algorithm>
#include <map>

namespace topdyn::findyn {

using fintop::closure;
using fintop::interior;
using fintop::is_dense;
using fintop::isolated_points;

FinSystem system_new(FinSpace space, std::vector<std::uint32_t> map,
                     std::vector<std::string> labels) {
    if (map.size() != space.n) throw Error("map table length must equal the point count");
    for (auto v : map)
        if (v >= space.n) throw Error("map table value out of range");
    for (std::uint32_t x = 0; x < space.n; ++x) {
        PointSet img = PointSet::empty_set(space.n);
        for (auto y : space.min_nbhd[x].indices()) img.add(map[y]);
        if (!img.subset_of(space.min_nbhd[map[x]]))
            throw NotContinuous(x, "map is not continuous at point " + std::to_string(x));
    }
    return FinSystem{std::move(space), std::move(map), std::move(labels)};
}

PointSet image(const FinSystem& s, const PointSet& a) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x)
        if (a.contains(x)) out.add(s.map[x]);
    return out;
}

PointSet preimage(const FinSystem& s, const PointSet& a) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x)
        if (a.contains(s.map[x])) out.add(x);
    return out;
}

PointSet forward_orbit(const FinSystem& s, std::uint32_t x) {
    PointSet out = PointSet::empty_set(s.n());
    std::uint32_t p = x;
    while (!out.contains(p)) {
        out.add(p);
        p = s.map[p];
    }
    return out;
}

PointSet forward_orbit_of_set(const FinSystem& s, const PointSet& a) {
    PointSet out = a;
    for (;;) {
        PointSet next = out | image(s, out);
        if (next == out) return out;
        out = next;
    }
}

PointSet backward_saturation(const FinSystem& s, const PointSet& a) {
    PointSet out = a;
    for (;;) {
        PointSet next = out | preimage(s, out);
        if (next == out) return out;
        out = next;
    }
}

PointSet two_sided(const FinSystem& s, std::uint32_t x) {
    return forward_orbit(s, x) | backward_saturation(s, PointSet::singleton(s.n(), x));
}

PointSet omega_limit(const FinSystem& s, std::uint32_t x) {
    // Tail closures are constant from the cycle entry on, so the intersection
    // stabilizes there.
    std::vector<std::uint32_t> seen_at(s.n(), UINT32_MAX);
    std::uint32_t p = x, step = 0;
    while (seen_at[p] == UINT32_MAX) {
        seen_at[p] = step++;
        p = s.map[p];
    }
    const std::uint32_t entry = seen_at[p];

    PointSet out = PointSet::full_set(s.n());
    p = x;
    for (std::uint32_t k = 0; k <= entry; ++k) {
        out = out & closure(s.space, forward_orbit(s, p));
        p = s.map[p];
    }
    return out;
}

bool is_plus_invariant(const FinSystem& s, const PointSet& a) {
    return image(s, a).subset_of(a);
}

bool is_minus_invariant(const FinSystem& s, const PointSet& a) {
    return preimage(s, a).subset_of(a);
}

bool is_invariant(const FinSystem& s, const PointSet& a) { return image(s, a) == a; }

bool is_surjective(const FinSystem& s) {
    return image(s, PointSet::full_set(s.n())) == PointSet::full_set(s.n());
}

bool is_bijective(const FinSystem& s) { return is_surjective(s); }

EPSet hitting_set_plus(const FinSystem& s, const PointSet& u, const PointSet& v) {
    // f^{-k}(V) is a deterministic subset sequence, hence eventually periodic.
    std::map<std::uint64_t, std::uint32_t> seen;
    std::vector<bool> bits;
    PointSet w = v;
    std::uint32_t k = 0;
    for (;;) {
        auto it = seen.find(w.bits);
        if (it != seen.end()) {
            const std::uint32_t mu = it->second;
            std::vector<bool> pre(bits.begin(), bits.begin() + mu);
            std::vector<bool> per(bits.begin() + mu, bits.end());
            return EPSet::from_bits(std::move(pre), std::move(per));
        }
        seen.emplace(w.bits, k);
        bits.push_back(u.intersects(w));
        w = preimage(s, w);
        ++k;
    }
}

std::vector<std::vector<EPSet>> hitting_matrix(const FinSystem& s) {
    const std::uint32_t n = s.n();
    std::vector<std::vector<EPSet>> m(n, std::vector<EPSet>(n));
    for (std::uint32_t v = 0; v < n; ++v) {
        // one preimage iteration per target neighborhood, shared by all sources
        std::map<std::uint64_t, std::uint32_t> seen;
        std::vector<PointSet> seq;
        PointSet w = s.space.min_nbhd[v];
        for (;;) {
            auto it = seen.find(w.bits);
            if (it != seen.end()) {
                const std::uint32_t mu = it->second;
                for (std::uint32_t u = 0; u < n; ++u) {
                    std::vector<bool> bits;
                    bits.reserve(seq.size());
                    for (const auto& wk : seq) bits.push_back(s.space.min_nbhd[u].intersects(wk));
                    std::vector<bool> pre(bits.begin(), bits.begin() + mu);
                    std::vector<bool> per(bits.begin() + mu, bits.end());
                    m[u][v] = EPSet::from_bits(std::move(pre), std::move(per));
                }
                break;
            }
            seen.emplace(w.bits, static_cast<std::uint32_t>(seq.size()));
            seq.push_back(w);
            w = preimage(s, w);
        }
    }
    return m;
}

SignedHitResult hitting_nonempty_z(const FinSystem& s, const PointSet& u, const PointSet& v) {
    SignedHitResult r;
    EPSet fwd = hitting_set_plus(s, u, v);
    if (auto k = fwd.min_member()) {
        r.nonempty = true;
        r.k = static_cast<std::int64_t>(*k);
        return r;
    }
    EPSet bwd = hitting_set_plus(s, v, u);
    if (auto k = bwd.min_member()) {
        r.nonempty = true;
        r.k = -static_cast<std::int64_t>(*k);
    }
    return r;
}

PointSet cyclic_points(const FinSystem& s) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x) {
        std::uint32_t p = s.map[x];
        for (std::uint32_t k = 1; k <= s.n(); ++k) {
            if (p == x) {
                out.add(x);
                break;
            }
            p = s.map[p];
        }
    }
    return out;
}

std::vector<PointSet> cycles(const FinSystem& s) {
    PointSet cyc = cyclic_points(s);
    std::vector<PointSet> out;
    PointSet done = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x) {
        if (!cyc.contains(x) || done.contains(x)) continue;
        PointSet c = forward_orbit(s, x);  // a cycle point's orbit is its cycle
        out.push_back(c);
        done = done | c;
    }
    return out;
}

PointSet eventual_image(const FinSystem& s) {
    PointSet w = PointSet::full_set(s.n());
    for (;;) {
        PointSet next = image(s, w);
        if (next == w) return w;
        w = next;
    }
}

PointSet transitive_points(const FinSystem& s) {
    PointSet out = PointSet::empty_set(s.n());
    for (std::uint32_t x = 0; x < s.n(); ++x)
        if (is_dense(s.space, forward_orbit(s, x))) out.add(x);
    return out;
}

bool is_minimal(const FinSystem& s) {
    return transitive_points(s) == PointSet::full_set(s.n());
}

static std::vector<OrbitSeqWitness> orbit_sequence_candidates(const FinSystem& s) {
    std::vector<OrbitSeqWitness> out;
    PointSet img = image(s, PointSet::full_set(s.n()));
    for (std::uint32_t t = 0; t < s.n(); ++t)
        if (!img.contains(t))
            out.push_back(OrbitSeqWitness{true, t, forward_orbit(s, t)});
    for (const auto& c : cycles(s)) out.push_back(OrbitSeqWitness{false, c.first(), c});
    return out;
}

std::optional<OrbitSeqWitness> dense_orbit_sequence(const FinSystem& s) {
    for (const auto& cand : orbit_sequence_candidates(s))
        if (is_dense(s.space, cand.elements)) return cand;
    return std::nullopt;
}

bool PropertyReport::verdict(const std::string& property) const {
    if (property == "IN") return in;
    if (property == "TT") return tt;
    if (property == "TT+") return tt_plus;
    if (property == "TT++") return tt_plusplus;
    if (property == "DO") return do_;
    if (property == "DO+") return do_plus;
    if (property == "DO++") return do_plusplus;
    throw Error("unknown property name: " + property);
}

PropertyReport properties(const FinSystem& s) {
    const std::uint32_t n = s.n();
    PropertyReport r;
    r.iso = isolated_points(s.space);
    r.trans = transitive_points(s);

    // DO+ and its witnesses
    r.do_plus = r.trans.any();
    if (r.do_plus) {
        r.dop_point = r.trans.first();
    } else {
        for (std::uint32_t x = 0; x < n; ++x) {
            PointSet o = forward_orbit(s, x);
            for (std::uint32_t y = 0; y < n; ++y)
                if (!s.space.min_nbhd[y].intersects(o)) {
                    r.dop_failures.push_back(PointFailure{x, y});
                    break;
                }
        }
    }

    auto m = hitting_matrix(s);

    // DO++: some omega-limit set is the whole space
    r.do_plusplus = false;
    for (std::uint32_t x = 0; x < n && !r.do_plusplus; ++x)
        if (omega_limit(s, x) == PointSet::full_set(n)) {
            r.do_plusplus = true;
            r.dopp_point = x;
        }
    if (!r.do_plusplus) {
        for (std::uint32_t x = 0; x < n; ++x) {
            PointSet single = PointSet::singleton(n, x);
            bool found = false;
            for (std::uint32_t y = 0; y < n && !found; ++y) {
                EPSet e = hitting_set_plus(s, single, s.space.min_nbhd[y]);
                if (!e.infinite()) {
                    r.dopp_failures.push_back(PointFailure{x, y});
                    found = true;
                }
            }
            if (!found) throw Error("internal: omega-limit refutation lacks a finite hitting set");
        }
    }

    // TT / TT+ / TT++ over minimal-neighborhood pairs
    r.tt = r.tt_plus = r.tt_plusplus = true;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v) {
            const EPSet& fwd = m[u][v];
            const EPSet& bwd = m[v][u];
            if (r.tt_plusplus && !fwd.infinite()) {
                r.tt_plusplus = false;
                r.ttpp_refuted = PairRefutation{u, v, fwd, bwd};
            }
            if (r.tt_plus && fwd.empty()) {
                r.tt_plus = false;
                r.ttp_refuted = PairRefutation{u, v, fwd, bwd};
            }
            if (r.tt && fwd.empty() && bwd.empty()) {
                r.tt = false;
                r.tt_refuted = PairRefutation{u, v, fwd, bwd};
            }
        }
    if (r.tt || r.tt_plus || r.tt_plusplus) {
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v) {
                const EPSet& fwd = m[u][v];
                if (r.tt_plusplus)
                    r.ttpp_hits.push_back(ProgressionHit{
                        u, v, *fwd.progression_start(),
                        static_cast<std::uint64_t>(fwd.period().size())});
                if (r.tt_plus)
                    r.ttp_hits.push_back(
                        SignedHit{u, v, static_cast<std::int64_t>(*fwd.min_member())});
                if (r.tt) {
                    if (auto k = fwd.min_member())
                        r.tt_hits.push_back(SignedHit{u, v, static_cast<std::int64_t>(*k)});
                    else
                        r.tt_hits.push_back(SignedHit{
                            u, v, -static_cast<std::int64_t>(*m[v][u].min_member())});
                }
            }
    }

    // IN, decided independently: no two of the sets O₋(min_nbhd[x]) are
    // disjoint (every opene -invariant set contains one of them).
    std::vector<PointSet> back(n, PointSet::empty_set(n));
    for (std::uint32_t x = 0; x < n; ++x) back[x] = backward_saturation(s, s.space.min_nbhd[x]);
    r.in = true;
    for (std::uint32_t u = 0; u < n && r.in; ++u)
        for (std::uint32_t v = u; v < n; ++v)
            if (!back[u].intersects(back[v])) {
                r.in = false;
                r.in_cover = InCover{back[u].complement(), back[v].complement()};
                break;
            }
    if (r.in) {
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u; v < n; ++v)
                r.in_meets.push_back(InMeet{u, v, (back[u] & back[v]).first()});
    }

    // DO via the two realizable element-set shapes
    auto cands = orbit_sequence_candidates(s);
    r.do_ = false;
    for (const auto& cand : cands) {
        if (is_dense(s.space, cand.elements)) {
            r.do_ = true;
            r.do_witness = cand;
            break;
        }
    }
    if (!r.do_) {
        for (const auto& cand : cands)
            for (std::uint32_t y = 0; y < n; ++y)
                if (!s.space.min_nbhd[y].intersects(cand.elements)) {
                    r.do_failures.push_back(DenseFailure{cand.half_infinite, cand.start, y});
                    break;
                }
    }
    return r;
}

std::vector<PointSet> minimal_subsets(const FinSystem& s) {
    std::vector<PointSet> closures;
    for (std::uint32_t x = 0; x < s.n(); ++x) {
        PointSet c = closure(s.space, forward_orbit(s, x));
        if (std::find(closures.begin(), closures.end(), c) == closures.end())
            closures.push_back(c);
    }
    std::vector<PointSet> out;
    for (const auto& c : closures) {
        bool minimal = true;
        for (const auto& o : closures)
            if (o != c && o.subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end(),
              [](const PointSet& a, const PointSet& b) { return a.bits < b.bits; });
    return out;
}

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::Figure0: return "Figure0";
        case CaseTag::FiniteFigure9: return "FiniteFigure9";
        case CaseTag::NShape: return "NShape";
        case CaseTag::NChain: return "NChain";
        case CaseTag::ZChain: return "ZChain";
        case CaseTag::InfiniteFigure9: return "InfiniteFigure9";
        case CaseTag::NegNChain: return "NegNChain";
    }
    return "?";
}

Classification classify_isolated(const FinSystem& s) {
    if (!fintop::separation_flags(s.space).hausdorff)
        throw NotHausdorff("the isolated-point case analysis requires a Hausdorff space");
    if (isolated_points(s.space).none())
        throw NoIsolatedPoints("no isolated points to classify");
    PropertyReport rep = properties(s);
    if (!rep.tt) throw NotTransitive("system is not topologically transitive");

    const std::uint32_t n = s.n();
    Classification c;
    PointSet img = image(s, PointSet::full_set(n));
    c.trans = rep.trans;
    c.image_dense = is_dense(s.space, img);

    if (img == PointSet::full_set(n)) {
        // every fiber is a singleton; a transitive discrete bijection is one cycle
        c.tag = CaseTag::Figure0;
        c.cycle_len = n;
        c.tail_len = 0;
        PointSet orbit = forward_orbit(s, 0);
        if (orbit != PointSet::full_set(n))
            throw Error("internal: transitive discrete bijection is not a single cycle");
        if (c.trans != PointSet::full_set(n))
            throw Error("internal: single periodic orbit must be minimal");
        if (!c.image_dense) throw Error("internal: bijective image must be dense");
        return c;
    }

    // a discrete map with a proper image has a preimage-free point, necessarily
    // unique here: its orbit is everything, so a second one would be missed
    PointSet free = img.complement();
    if (free.size() != 1)
        throw Error("internal: transitive case admits exactly one preimage-free point");
    const std::uint32_t start = free.first();
    if (forward_orbit(s, start) != PointSet::full_set(n))
        throw Error("internal: the preimage-free point must reach the whole space");

    // tail length: least k > 0 with f^k(start) periodic
    PointSet cyc = cyclic_points(s);
    std::uint32_t k = 0, p = start;
    while (!cyc.contains(p)) {
        p = s.map[p];
        ++k;
    }
    c.tag = CaseTag::FiniteFigure9;
    c.tail_len = k;
    c.cycle_len = forward_orbit(s, p).size();
    c.start = start;

    // side facts, re-verified against direct computation
    if (c.trans != PointSet::singleton(n, start))
        throw Error("internal: Trans must be exactly the preimage-free point");
    if (c.image_dense) throw Error("internal: image cannot be dense with a preimage-free point");
    const std::uint32_t periodic_entry = p;
    PointSet fiber = preimage(s, PointSet::singleton(n, periodic_entry));
    if (fiber.size() != 2)
        throw Error("internal: the cycle entry must have exactly two preimages");
    return c;
}

Subsystem subsystem(const FinSystem& s, const PointSet& a) {
    if (a.none()) throw EmptySubspace("subsystem carrier is empty");
    if (!is_plus_invariant(s, a))
        throw NotPlusInvariant("carrier " + a.to_string() + " is not +invariant");
    fintop::Subspace sub = fintop::subspace(s.space, a);
    std::vector<std::uint32_t> table(sub.space.n);
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < sub.space.n; ++i) {
        table[i] = static_cast<std::uint32_t>(sub.from_parent[s.map[sub.to_parent[i]]]);
        if (!s.labels.empty()) labels.push_back(s.label(sub.to_parent[i]));
    }
    Subsystem out;
    out.sys = system_new(sub.space, std::move(table), std::move(labels));
    out.to_parent = sub.to_parent;
    return out;
}

}  // namespace topdyn::findyn
