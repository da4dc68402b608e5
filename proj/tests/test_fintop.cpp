#include <doctest.h>

#include "topdyn/fintop.hpp"
#include "topdyn/harness.hpp"

using namespace topdyn;
using namespace topdyn::fintop;

namespace {

// independent density check: A is dense iff every opene set meets it
bool dense_by_all_opens(const FinSpace& s, const PointSet& a) {
    for (const auto& v : opene_sets(s))
        if (!v.intersects(a)) return false;
    return true;
}

}  // namespace

TEST_CASE("space construction validates the minimal-neighborhood axioms") {
    CHECK(sierpinski().min_nbhd[0] == PointSet::of(2, {0u}));
    CHECK(indiscrete(2).min_nbhd[1] == PointSet::full_set(2));

    // 0 not in its own neighborhood
    CHECK_THROWS_AS(
        space_from_min_nbhds(2, {PointSet::of(2, {1u}), PointSet::of(2, {0u})}),
        AxiomViolation);
    try {
        space_from_min_nbhds(2, {PointSet::of(2, {1u}), PointSet::of(2, {0u})});
    } catch (const AxiomViolation& e) {
        CHECK(e.x == 0);
        CHECK(e.y == 0);
    }

    // nesting failure: 1 in min_nbhd[0] but min_nbhd[1] not contained in it
    CHECK_THROWS_AS(space_from_min_nbhds(3, {PointSet::of(3, {0u, 1u}),
                                             PointSet::of(3, {1u, 2u}),
                                             PointSet::of(3, {2u})}),
                    AxiomViolation);
}

TEST_CASE("subbasis generation") {
    FinSpace s = space_from_subbasis(3, {PointSet::of(3, {0u, 1u}), PointSet::of(3, {1u, 2u})});
    CHECK(s.min_nbhd[0] == PointSet::of(3, {0u, 1u}));
    CHECK(s.min_nbhd[1] == PointSet::of(3, {1u}));
    CHECK(s.min_nbhd[2] == PointSet::of(3, {1u, 2u}));

    CHECK(space_from_subbasis(2, {}) == indiscrete(2));
    CHECK(space_from_subbasis(2, {PointSet::of(2, {0u}), PointSet::of(2, {1u})}) == discrete(2));
}

TEST_CASE("closure and interior on the named spaces") {
    FinSpace s = sierpinski();
    // closed sets of the Sierpinski space are {}, {1}, {0,1}
    CHECK(closure(s, PointSet::of(2, {0u})) == PointSet::full_set(2));
    CHECK(closure(s, PointSet::of(2, {1u})) == PointSet::of(2, {1u}));
    CHECK(closure(s, PointSet::empty_set(2)).none());
    CHECK(interior(s, PointSet::of(2, {1u})).none());
    CHECK(interior(s, PointSet::of(2, {0u})) == PointSet::of(2, {0u}));

    FinSpace d = discrete(4);
    PointSet a = PointSet::of(4, {1u, 2u});
    CHECK(closure(d, a) == a);
    CHECK(interior(d, a) == a);
}

TEST_CASE("closure and interior laws on random spaces") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto sys = harness::random_system(1 + seed % 7, seed * 31 + 5);
        const FinSpace& s = sys.space;
        SplitMix64 rng(seed);
        PointSet a(s.n, rng.next() & PointSet::mask_of(s.n));
        PointSet b = a | PointSet::singleton(s.n, static_cast<std::uint32_t>(rng.below(s.n)));
        CHECK(interior(s, a).subset_of(a));
        CHECK(a.subset_of(closure(s, a)));
        CHECK(closure(s, closure(s, a)) == closure(s, a));
        CHECK(interior(s, interior(s, a)) == interior(s, a));
        CHECK(closure(s, a).subset_of(closure(s, b)));
        CHECK(interior(s, a) == closure(s, a.complement()).complement());
        CHECK(is_open(s, interior(s, a)));
        CHECK(is_closed(s, closure(s, a)));
        CHECK(is_dense(s, a) == dense_by_all_opens(s, a));
    }
}

TEST_CASE("density on the named spaces") {
    FinSpace s = sierpinski();
    CHECK(is_dense(s, PointSet::of(2, {0u})));
    CHECK(!is_dense(s, PointSet::of(2, {1u})));
    CHECK(is_dense(s, PointSet::full_set(2)));
}

TEST_CASE("isolated points and perfectness") {
    CHECK(isolated_points(sierpinski()) == PointSet::of(2, {0u}));
    CHECK(!is_perfect(sierpinski()));
    CHECK(isolated_points(indiscrete(2)).none());
    CHECK(is_perfect(indiscrete(2)));
    CHECK(isolated_points(discrete(3)) == PointSet::full_set(3));
    CHECK(is_perfect(partition4()));
}

TEST_CASE("separation flags") {
    SeparationFlags d = separation_flags(discrete(3));
    CHECK(d.t0);
    CHECK(d.t1);
    CHECK(d.hausdorff);
    CHECK(d.regular);

    SeparationFlags s = separation_flags(sierpinski());
    CHECK(s.t0);
    CHECK(!s.t1);
    CHECK(!s.hausdorff);
    CHECK(!s.regular);

    SeparationFlags p = separation_flags(partition4());
    CHECK(!p.t0);
    CHECK(p.regular);
}

TEST_CASE("hausdorff iff t1 iff all points isolated on finite spaces") {
    for (std::uint32_t n = 1; n <= 4; ++n)
        for (const auto& s : harness::enumerate_spaces(n)) {
            SeparationFlags f = separation_flags(s);
            CHECK(f.hausdorff == f.t1);
            CHECK(f.t1 == (isolated_points(s) == PointSet::full_set(s.n)));
        }
}

TEST_CASE("regularity matches the exhaustive open-set oracle") {
    for (std::uint32_t n = 1; n <= 4; ++n)
        for (const auto& s : harness::enumerate_spaces(n)) {
            bool oracle = true;
            auto opens = open_sets(s);
            for (const auto& c : closed_sets(s)) {
                for (std::uint32_t x = 0; x < s.n && oracle; ++x) {
                    if (c.contains(x)) continue;
                    bool separated = false;
                    for (const auto& u : opens) {
                        if (!u.contains(x)) continue;
                        for (const auto& v : opens)
                            if (c.subset_of(v) && !u.intersects(v)) separated = true;
                    }
                    if (!separated) oracle = false;
                }
                if (!oracle) break;
            }
            CHECK(separation_flags(s).regular == oracle);
        }
}

TEST_CASE("density basis criteria on the named spaces") {
    FinSpace d3 = discrete(3);
    DensityBasis singletons;
    for (std::uint32_t i = 0; i < 3; ++i) singletons.sets.push_back(PointSet::singleton(3, i));
    for (auto c : {Criterion::I, Criterion::II, Criterion::III, Criterion::IV, Criterion::V})
        CHECK(is_density_basis(d3, singletons, c));

    FinSpace s = sierpinski();
    DensityBasis zero{{PointSet::of(2, {0u})}};
    CHECK(is_density_basis(s, zero, Criterion::I));
    DensityBasis whole{{PointSet::full_set(2)}};
    CHECK(!is_density_basis(s, whole, Criterion::V));  // opene {0} contains no member

    CHECK_THROWS_AS(is_density_basis(s, DensityBasis{}, Criterion::I), EmptyBasisRejected);
    DensityBasis bad{{PointSet::of(2, {1u})}};  // not open
    CHECK_THROWS_AS(is_density_basis(s, bad, Criterion::I), PreconditionFailed);
}

TEST_CASE("criterion I agrees with the all-subsets oracle") {
    // the oracle quantifies the definition over every subset
    for (std::uint32_t n = 1; n <= 4; ++n) {
        std::uint32_t topo = 0;
        for (const auto& s : harness::enumerate_spaces(n)) {
            if (++topo % 7 != 0 && n == 4) continue;  // sample the big batch
            auto openes = opene_sets(s);
            const std::uint64_t fam_limit = std::uint64_t{1} << openes.size();
            for (std::uint64_t mask = 1; mask < fam_limit; ++mask) {
                if (n == 4 && (mask % 5 != 0) && mask != 1) continue;
                DensityBasis d;
                for (std::size_t i = 0; i < openes.size(); ++i)
                    if ((mask >> i) & 1u) d.sets.push_back(openes[i]);
                bool oracle = true;
                const std::uint64_t limit = std::uint64_t{1} << s.n;
                for (std::uint64_t bits = 0; bits < limit && oracle; ++bits) {
                    PointSet a(s.n, bits);
                    bool meets_all = true;
                    for (const auto& u : d.sets)
                        if (!a.intersects(u)) meets_all = false;
                    if (meets_all && !is_dense(s, a)) oracle = false;
                }
                CHECK(is_density_basis(s, d, Criterion::I) == oracle);
            }
        }
    }
}

TEST_CASE("density of a set is decided by meeting a density basis") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto sys = harness::random_system(1 + seed % 6, seed * 29 + 7);
        const FinSpace& s = sys.space;
        DensityBasis d = min_nbhd_basis(s);
        const std::uint64_t limit = std::uint64_t{1} << s.n;
        for (std::uint64_t bits = 0; bits < limit; ++bits) {
            PointSet a(s.n, bits);
            bool meets_all = true;
            for (const auto& u : d.sets)
                if (!a.intersects(u)) meets_all = false;
            CHECK(is_dense(s, a) == meets_all);
        }
    }
}

TEST_CASE("minimal-neighborhood family is a density basis under every criterion") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto sys = harness::random_system(1 + seed % 6, seed * 17 + 3);
        DensityBasis d = min_nbhd_basis(sys.space);
        for (auto c : {Criterion::I, Criterion::II, Criterion::III, Criterion::IV, Criterion::V})
            CHECK(is_density_basis(sys.space, d, c));
    }
}

TEST_CASE("subspace topologies") {
    Subspace one = subspace(sierpinski(), PointSet::of(2, {1u}));
    CHECK(one.space.n == 1);
    CHECK(one.space.min_nbhd[0] == PointSet::full_set(1));

    Subspace diag = subspace(partition4(), PointSet::of(4, {0u, 2u}));
    CHECK(diag.space == discrete(2));
    CHECK(diag.to_parent == std::vector<std::uint32_t>{0, 2});

    Subspace dd = subspace(discrete(4), PointSet::of(4, {1u, 3u}));
    CHECK(dd.space == discrete(2));

    CHECK_THROWS_AS(subspace(discrete(2), PointSet::empty_set(2)), EmptySubspace);
}

TEST_CASE("map predicates on the named maps") {
    // identity on the Sierpinski space
    SpaceMap id = space_map(sierpinski(), sierpinski(), {0, 1});
    MapFlags f = map_predicates(id);
    CHECK(f.continuous);
    CHECK(f.open_map);
    CHECK(f.dense_image);
    CHECK(f.irreducible);
    CHECK(f.weakly_almost_open);

    // 0 -> 1, 1 -> 1 on the Sierpinski space: continuous but not irreducible
    // ({0} is dense yet its image {1} is not)
    SpaceMap collapse = space_map(sierpinski(), sierpinski(), {1, 1});
    MapFlags g = map_predicates(collapse);
    CHECK(g.continuous);
    CHECK(!g.irreducible);

    // constant map onto the dense point of the Sierpinski space
    SpaceMap cst = space_map(discrete(2), sierpinski(), {0, 0});
    MapFlags h = map_predicates(cst);
    CHECK(h.continuous);
    CHECK(h.weakly_almost_open);

    // swap on the Sierpinski space is not continuous
    SpaceMap swap = space_map(sierpinski(), sierpinski(), {1, 0});
    CHECK(!is_continuous(swap));
}

TEST_CASE("irreducibility shortcut agrees with the exhaustive mode") {
    // logged equivalence check on all continuous maps between small spaces
    std::uint64_t compared = 0;
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (const auto& x : harness::enumerate_spaces(n))
            for (const auto& y : harness::enumerate_spaces(n)) {
                std::vector<std::uint32_t> table(x.n, 0);
                for (;;) {
                    SpaceMap hm{x, y, table};
                    if (is_continuous(hm)) {
                        ++compared;
                        CHECK(irreducible_exhaustive(hm) == irreducible_min_nbhd_shortcut(hm));
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
    MESSAGE("irreducibility shortcut vs exhaustive: ", compared, " maps compared");
    CHECK(compared > 1000);
}

TEST_CASE("density basis transfers") {
    FinSpace s = sierpinski();

    // restrict to the dense subset {0}
    RestrictResult r = restrict_basis(s, PointSet::of(2, {0u}),
                                      DensityBasis{{PointSet::of(2, {0u})}});
    CHECK(r.sub.space.n == 1);
    REQUIRE(r.family.sets.size() == 1);
    CHECK(r.family.sets[0] == PointSet::full_set(1));
    CHECK(r.verified);
    CHECK_THROWS_AS(
        restrict_basis(s, PointSet::of(2, {1u}), DensityBasis{{PointSet::of(2, {0u})}}),
        PreconditionFailed);

    // pullback along the identity returns the same family
    SpaceMap id = space_map(s, s, {0, 1});
    DensityBasis zero{{PointSet::of(2, {0u})}};
    MapTransferResult pb = pullback_basis(id, zero);
    CHECK(pb.family == zero);
    CHECK(pb.verified);

    // pullback requires irreducibility
    SpaceMap collapse = space_map(s, s, {1, 1});
    CHECK_THROWS_AS(pullback_basis(collapse, zero), PreconditionFailed);

    // pushforward of the discrete basis along discrete-2 -> Sierpinski: the
    // image of {1} is the closed point, has empty interior and is dropped;
    // the image of {0} is the dense point, whose closure is everything, so
    // the surviving member is X. {X} is not a density basis of the
    // (non-regular) Sierpinski space, and the verdict reports that honestly.
    SpaceMap j = space_map(discrete(2), s, {0, 1});
    MapTransferResult pf = pushforward_basis(
        j, DensityBasis{{PointSet::of(2, {0u}), PointSet::of(2, {1u})}});
    REQUIRE(pf.family.sets.size() == 1);
    CHECK(pf.family.sets[0] == PointSet::full_set(2));
    CHECK(pf.dropped.size() == 1);
    CHECK(pf.dropped[0] == PointSet::of(2, {1u}));
    CHECK(!pf.verified);

    // a verified pushforward onto the regular partition space
    SpaceMap jp = space_map(discrete(2), partition4(), {0, 2});
    MapTransferResult pfp = pushforward_basis(
        jp, DensityBasis{{PointSet::of(2, {0u}), PointSet::of(2, {1u})}});
    REQUIRE(pfp.family.sets.size() == 2);
    CHECK(pfp.family.sets[0] == PointSet::of(4, {0u, 1u}));
    CHECK(pfp.family.sets[1] == PointSet::of(4, {2u, 3u}));
    CHECK(pfp.verified);

    // pushforward requires a dense image
    FinSpace d2 = discrete(2);
    SpaceMap notdense = space_map(d2, d2, {0, 0});
    CHECK_THROWS_AS(pushforward_basis(notdense, DensityBasis{{PointSet::of(2, {0u})}}),
                    PreconditionFailed);

    // extend a basis of a dense subspace back to the ambient space; the
    // extension needs the ambient regularity hypothesis, so on the
    // non-regular Sierpinski space the verified flag honestly reports failure
    ExtendResult ext = extend_basis(s, PointSet::of(2, {0u}),
                                    DensityBasis{{PointSet::of(2, {0u})}});
    REQUIRE(ext.family.sets.size() == 1);
    CHECK(ext.family.sets[0] == PointSet::full_set(2));  // interior(closure({0}))
    CHECK(!ext.verified);

    // on the regular partition space the extension verifies
    FinSpace p4 = partition4();
    ExtendResult ext2 = extend_basis(p4, PointSet::of(4, {0u, 2u}),
                                     DensityBasis{{PointSet::of(4, {0u}),
                                                   PointSet::of(4, {2u})}});
    CHECK(ext2.verified);
    REQUIRE(ext2.family.sets.size() == 2);
    CHECK(ext2.family.sets[0] == PointSet::of(4, {0u, 1u}));
    CHECK(ext2.family.sets[1] == PointSet::of(4, {2u, 3u}));
}

TEST_CASE("extension verifies on every regular space") {
    for (std::uint32_t n = 1; n <= 3; ++n)
        for (const auto& s : harness::enumerate_spaces(n)) {
            if (!separation_flags(s).regular) continue;
            const std::uint64_t limit = std::uint64_t{1} << s.n;
            for (std::uint64_t bits = 1; bits < limit; ++bits) {
                PointSet d(s.n, bits);
                if (!is_dense(s, d)) continue;
                Subspace sub = subspace(s, d);
                auto sub_openes = opene_sets(sub.space);
                const std::uint64_t fams = std::uint64_t{1} << sub_openes.size();
                for (std::uint64_t mask = 1; mask < fams; ++mask) {
                    DensityBasis rel_sub;
                    for (std::size_t i = 0; i < sub_openes.size(); ++i)
                        if ((mask >> i) & 1u) rel_sub.sets.push_back(sub_openes[i]);
                    if (!is_density_basis(sub.space, rel_sub, Criterion::I)) continue;
                    // translate to ambient coordinates
                    DensityBasis rel;
                    for (const auto& u : rel_sub.sets) {
                        PointSet amb = PointSet::empty_set(s.n);
                        for (auto i : u.indices()) amb.add(sub.to_parent[i]);
                        rel.sets.push_back(amb);
                    }
                    CHECK(extend_basis(s, d, rel).verified);
                }
            }
        }
}
