#include "topdyn/fintop.hpp"

#include <algorithm>

namespace topdyn::fintop {

FinSpace space_from_min_nbhds(std::uint32_t n, std::vector<PointSet> nbhds) {
    if (n == 0) throw Error("space must have at least one point");
    if (nbhds.size() != n) throw Error("min_nbhd list length must equal the point count");
    for (std::uint32_t x = 0; x < n; ++x) {
        if (nbhds[x].n != n) throw Error("min_nbhd member has mismatched ambient size");
        if (!nbhds[x].contains(x))
            throw AxiomViolation(x, x, "min_nbhd[" + std::to_string(x) + "] does not contain " +
                                           std::to_string(x));
    }
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (nbhds[x].contains(y) && !nbhds[y].subset_of(nbhds[x]))
                throw AxiomViolation(
                    x, y,
                    "min_nbhd[" + std::to_string(y) + "] is not contained in min_nbhd[" +
                        std::to_string(x) + "] although " + std::to_string(y) + " is a member");
    return FinSpace{n, std::move(nbhds)};
}

FinSpace space_from_subbasis(std::uint32_t n, const std::vector<PointSet>& sets) {
    if (n == 0) throw Error("space must have at least one point");
    std::vector<PointSet> nbhds(n, PointSet::full_set(n));
    for (std::uint32_t x = 0; x < n; ++x)
        for (const auto& s : sets) {
            if (s.n != n) throw Error("subbasis member has mismatched ambient size");
            if (s.contains(x)) nbhds[x] = nbhds[x] & s;
        }
    // Consistent by construction: a point in every subbasic set around x has a
    // smaller intersection.
    return FinSpace{n, std::move(nbhds)};
}

bool is_open(const FinSpace& s, const PointSet& a) {
    for (std::uint32_t x = 0; x < s.n; ++x)
        if (a.contains(x) && !s.min_nbhd[x].subset_of(a)) return false;
    return true;
}

bool is_closed(const FinSpace& s, const PointSet& a) { return is_open(s, a.complement()); }

PointSet closure(const FinSpace& s, const PointSet& a) {
    PointSet out = PointSet::empty_set(s.n);
    for (std::uint32_t x = 0; x < s.n; ++x)
        if (s.min_nbhd[x].intersects(a)) out.add(x);
    return out;
}

PointSet interior(const FinSpace& s, const PointSet& a) {
    return closure(s, a.complement()).complement();
}

bool is_dense(const FinSpace& s, const PointSet& a) {
    for (std::uint32_t x = 0; x < s.n; ++x)
        if (!s.min_nbhd[x].intersects(a)) return false;
    return true;
}

PointSet isolated_points(const FinSpace& s) {
    PointSet out = PointSet::empty_set(s.n);
    for (std::uint32_t x = 0; x < s.n; ++x)
        if (s.min_nbhd[x] == PointSet::singleton(s.n, x)) out.add(x);
    return out;
}

bool is_perfect(const FinSpace& s) { return isolated_points(s).none(); }

SeparationFlags separation_flags(const FinSpace& s) {
    SeparationFlags f;
    f.t0 = true;
    f.t1 = true;
    f.hausdorff = true;
    for (std::uint32_t x = 0; x < s.n && (f.t0 || f.t1 || f.hausdorff); ++x)
        for (std::uint32_t y = x + 1; y < s.n; ++y) {
            if (s.min_nbhd[x] == s.min_nbhd[y]) f.t0 = false;
            if (s.min_nbhd[x].contains(y) || s.min_nbhd[y].contains(x)) f.t1 = false;
            if (s.min_nbhd[x].intersects(s.min_nbhd[y])) f.hausdorff = false;
        }

    // Minimal opens are optimal separators: any open around a closed set C
    // contains the minimal neighborhoods of its points, and any open around x
    // contains min_nbhd[x], so regularity reduces to their disjointness against
    // the largest closed set avoiding min_nbhd[x].
    f.regular = true;
    for (std::uint32_t x = 0; x < s.n && f.regular; ++x) {
        PointSet c = PointSet::empty_set(s.n);
        for (std::uint32_t y = 0; y < s.n; ++y)
            if (!closure(s, PointSet::singleton(s.n, y)).intersects(s.min_nbhd[x]))
                c.add(y);
        PointSet around_c = PointSet::empty_set(s.n);
        for (std::uint32_t y = 0; y < s.n; ++y)
            if (c.contains(y)) around_c = around_c | s.min_nbhd[y];
        if (around_c.intersects(s.min_nbhd[x])) f.regular = false;
    }
    return f;
}

std::vector<PointSet> open_sets(const FinSpace& s) {
    if (s.n > 20) throw BoundExceeded("open-set enumeration is limited to 20 points");
    std::vector<PointSet> out;
    const std::uint64_t limit = std::uint64_t{1} << s.n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        PointSet a(s.n, bits);
        if (is_open(s, a)) out.push_back(a);
    }
    return out;
}

std::vector<PointSet> opene_sets(const FinSpace& s) {
    auto all = open_sets(s);
    std::vector<PointSet> out;
    for (const auto& a : all)
        if (a.any()) out.push_back(a);
    return out;
}

std::vector<PointSet> closed_sets(const FinSpace& s) {
    auto all = open_sets(s);
    for (auto& a : all) a = a.complement();
    return all;
}

Criterion criterion_from_string(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return Criterion::I;
    if (s == "II" || s == "ii" || s == "2") return Criterion::II;
    if (s == "III" || s == "iii" || s == "3") return Criterion::III;
    if (s == "IV" || s == "iv" || s == "4") return Criterion::IV;
    if (s == "V" || s == "v" || s == "5") return Criterion::V;
    throw Error("unknown density-basis criterion: " + s);
}

std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::I: return "I";
        case Criterion::II: return "II";
        case Criterion::III: return "III";
        case Criterion::IV: return "IV";
        case Criterion::V: return "V";
    }
    return "?";
}

static void validate_basis(const FinSpace& s, const DensityBasis& d) {
    if (d.sets.empty() && s.n > 0)
        throw EmptyBasisRejected("an empty density basis on a nonempty space is rejected");
    for (const auto& u : d.sets) {
        if (u.n != s.n) throw PreconditionFailed("basis member has mismatched ambient size");
        if (u.none()) throw PreconditionFailed("basis member is empty");
        if (!is_open(s, u)) throw PreconditionFailed("basis member " + u.to_string() + " is not open");
    }
}

bool is_density_basis(const FinSpace& s, const DensityBasis& d, Criterion c) {
    validate_basis(s, d);
    switch (c) {
        case Criterion::I: {
            // A non-dense witness misses some minimal neighborhood, and the
            // easiest witness avoiding min_nbhd[x] picks one point of each
            // member outside it; if every member allows a pick the definition
            // fails, otherwise some member sits inside min_nbhd[x] and any set
            // meeting all members meets that neighborhood.
            for (std::uint32_t x = 0; x < s.n; ++x) {
                bool witness_possible = true;
                for (const auto& u : d.sets)
                    if (u.subset_of(s.min_nbhd[x])) {
                        witness_possible = false;
                        break;
                    }
                if (witness_possible) return false;
            }
            return true;
        }
        case Criterion::II: {
            for (const auto& c0 : closed_sets(s)) {
                if (c0 == PointSet::full_set(s.n)) continue;
                bool meets_all = true;
                for (const auto& u : d.sets)
                    if (!c0.intersects(u)) {
                        meets_all = false;
                        break;
                    }
                if (meets_all) return false;
            }
            return true;
        }
        case Criterion::III: {
            for (const auto& v : opene_sets(s)) {
                bool meets_all = true;
                for (const auto& u : d.sets)
                    if (!v.intersects(u)) {
                        meets_all = false;
                        break;
                    }
                if (meets_all && !is_dense(s, v)) return false;
            }
            return true;
        }
        case Criterion::IV: {
            for (const auto& v : opene_sets(s)) {
                PointSet inside = PointSet::empty_set(s.n);
                for (const auto& u : d.sets)
                    if (u.subset_of(v)) inside = inside | u;
                // dense in the subspace V: relative minimal neighborhoods are
                // min_nbhd[p] ∩ V = min_nbhd[p] for p in the open set V
                for (std::uint32_t p = 0; p < s.n; ++p)
                    if (v.contains(p) && !s.min_nbhd[p].intersects(inside)) return false;
            }
            return true;
        }
        case Criterion::V: {
            for (const auto& v : opene_sets(s)) {
                bool contains_member = false;
                for (const auto& u : d.sets)
                    if (u.subset_of(v)) {
                        contains_member = true;
                        break;
                    }
                if (!contains_member) return false;
            }
            return true;
        }
    }
    return false;
}

DensityBasis min_nbhd_basis(const FinSpace& s) {
    DensityBasis d;
    for (std::uint32_t x = 0; x < s.n; ++x) d.sets.push_back(s.min_nbhd[x]);
    return d;
}

Subspace subspace(const FinSpace& s, const PointSet& a) {
    if (a.none()) throw EmptySubspace("subspace carrier is empty");
    if (a.n != s.n) throw Error("subspace carrier has mismatched ambient size");
    Subspace out;
    out.to_parent = a.indices();
    out.from_parent.assign(s.n, -1);
    const std::uint32_t m = static_cast<std::uint32_t>(out.to_parent.size());
    for (std::uint32_t i = 0; i < m; ++i) out.from_parent[out.to_parent[i]] = static_cast<std::int32_t>(i);
    out.space.n = m;
    out.space.min_nbhd.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        PointSet rel = PointSet::empty_set(m);
        PointSet cut = s.min_nbhd[out.to_parent[i]] & a;
        for (auto p : cut.indices()) rel.add(static_cast<std::uint32_t>(out.from_parent[p]));
        out.space.min_nbhd.push_back(rel);
    }
    return out;
}

SpaceMap space_map(FinSpace domain, FinSpace codomain, std::vector<std::uint32_t> table) {
    if (table.size() != domain.n) throw Error("map table length must equal the domain size");
    for (auto v : table)
        if (v >= codomain.n) throw Error("map table value out of codomain range");
    return SpaceMap{std::move(domain), std::move(codomain), std::move(table)};
}

PointSet map_image(const SpaceMap& h, const PointSet& a) {
    PointSet out = PointSet::empty_set(h.codomain.n);
    for (std::uint32_t x = 0; x < h.domain.n; ++x)
        if (a.contains(x)) out.add(h.table[x]);
    return out;
}

PointSet map_preimage(const SpaceMap& h, const PointSet& b) {
    PointSet out = PointSet::empty_set(h.domain.n);
    for (std::uint32_t x = 0; x < h.domain.n; ++x)
        if (b.contains(h.table[x])) out.add(x);
    return out;
}

bool is_continuous(const SpaceMap& h) {
    for (std::uint32_t x = 0; x < h.domain.n; ++x)
        if (!map_image(h, h.domain.min_nbhd[x]).subset_of(h.codomain.min_nbhd[h.table[x]]))
            return false;
    return true;
}

bool irreducible_exhaustive(const SpaceMap& h) {
    if (h.domain.n > 20) throw BoundExceeded("exhaustive irreducibility is limited to 20 points");
    const std::uint64_t limit = std::uint64_t{1} << h.domain.n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        PointSet a(h.domain.n, bits);
        if (is_dense(h.domain, a) != is_dense(h.codomain, map_image(h, a))) return false;
    }
    return true;
}

bool irreducible_min_nbhd_shortcut(const SpaceMap& h) {
    if (!is_dense(h.codomain, map_image(h, PointSet::full_set(h.domain.n)))) return false;
    for (std::uint32_t x = 0; x < h.domain.n; ++x) {
        PointSet a = h.domain.min_nbhd[x].complement();
        if (is_dense(h.codomain, map_image(h, a))) return false;
    }
    return true;
}

MapFlags map_predicates(const SpaceMap& h) {
    MapFlags f;
    f.continuous = is_continuous(h);
    f.open_map = true;
    for (const auto& o : open_sets(h.domain))
        if (!is_open(h.codomain, map_image(h, o))) {
            f.open_map = false;
            break;
        }
    f.dense_image = is_dense(h.codomain, map_image(h, PointSet::full_set(h.domain.n)));
    f.irreducible = irreducible_exhaustive(h);
    f.weakly_almost_open = true;
    for (const auto& u : opene_sets(h.domain))
        if (interior(h.codomain, closure(h.codomain, map_image(h, u))).none()) {
            f.weakly_almost_open = false;
            break;
        }
    return f;
}

RestrictResult restrict_basis(const FinSpace& s, const PointSet& dense_subset,
                              const DensityBasis& basis) {
    validate_basis(s, basis);
    if (!is_dense(s, dense_subset)) throw PreconditionFailed("subset is not dense");
    RestrictResult out;
    out.sub = subspace(s, dense_subset);
    for (const auto& u : basis.sets) {
        PointSet cut = u & dense_subset;
        if (cut.none()) continue;  // cannot happen for a dense subset, kept for uniformity
        PointSet rel = PointSet::empty_set(out.sub.space.n);
        for (auto p : cut.indices()) rel.add(static_cast<std::uint32_t>(out.sub.from_parent[p]));
        out.family.sets.push_back(rel);
    }
    out.verified = !out.family.sets.empty() &&
                   is_density_basis(out.sub.space, out.family, Criterion::I);
    return out;
}

ExtendResult extend_basis(const FinSpace& s, const PointSet& dense_subset,
                          const DensityBasis& relative_basis) {
    if (!is_dense(s, dense_subset)) throw PreconditionFailed("subset is not dense");
    Subspace sub = subspace(s, dense_subset);
    for (const auto& u : relative_basis.sets) {
        if (!u.subset_of(dense_subset) || u.none())
            throw PreconditionFailed("relative basis member is not an opene subset of the subspace");
        PointSet rel = PointSet::empty_set(sub.space.n);
        for (auto p : (u & dense_subset).indices())
            rel.add(static_cast<std::uint32_t>(sub.from_parent[p]));
        if (!is_open(sub.space, rel))
            throw PreconditionFailed("relative basis member is not open in the subspace");
    }
    if (relative_basis.sets.empty() && s.n > 0)
        throw EmptyBasisRejected("an empty density basis on a nonempty space is rejected");
    ExtendResult out;
    for (const auto& u : relative_basis.sets) {
        PointSet e = interior(s, closure(s, u));
        if (e.any()) out.family.sets.push_back(e);
    }
    out.verified = !out.family.sets.empty() && is_density_basis(s, out.family, Criterion::I);
    return out;
}

MapTransferResult pullback_basis(const SpaceMap& h, const DensityBasis& basis_of_codomain) {
    validate_basis(h.codomain, basis_of_codomain);
    if (!is_continuous(h)) throw PreconditionFailed("map is not continuous");
    if (!irreducible_exhaustive(h)) throw PreconditionFailed("map is not irreducible");
    MapTransferResult out;
    for (const auto& u : basis_of_codomain.sets) {
        PointSet p = map_preimage(h, u);
        if (p.any())
            out.family.sets.push_back(p);
        else
            out.dropped.push_back(u);
    }
    out.verified = !out.family.sets.empty() &&
                   is_density_basis(h.domain, out.family, Criterion::I);
    return out;
}

MapTransferResult pushforward_basis(const SpaceMap& h, const DensityBasis& basis_of_domain) {
    validate_basis(h.domain, basis_of_domain);
    if (!is_continuous(h)) throw PreconditionFailed("map is not continuous");
    if (!is_dense(h.codomain, map_image(h, PointSet::full_set(h.domain.n))))
        throw PreconditionFailed("map image is not dense");
    MapTransferResult out;
    for (const auto& u : basis_of_domain.sets) {
        PointSet e = interior(h.codomain, closure(h.codomain, map_image(h, u)));
        if (e.any())
            out.family.sets.push_back(e);
        else
            out.dropped.push_back(u);
    }
    out.verified = !out.family.sets.empty() &&
                   is_density_basis(h.codomain, out.family, Criterion::I);
    return out;
}

FinSpace sierpinski() {
    return space_from_min_nbhds(2, {PointSet::of(2, {0u}), PointSet::of(2, {0u, 1u})});
}

FinSpace indiscrete(std::uint32_t n) {
    return space_from_min_nbhds(n, std::vector<PointSet>(n, PointSet::full_set(n)));
}

FinSpace discrete(std::uint32_t n) {
    std::vector<PointSet> nb;
    for (std::uint32_t i = 0; i < n; ++i) nb.push_back(PointSet::singleton(n, i));
    return space_from_min_nbhds(n, std::move(nb));
}

FinSpace partition4() {
    PointSet a = PointSet::of(4, {0u, 1u});
    PointSet b = PointSet::of(4, {2u, 3u});
    return space_from_min_nbhds(4, {a, a, b, b});
}

}  // namespace topdyn::fintop
