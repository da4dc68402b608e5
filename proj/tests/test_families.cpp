#include <doctest.h>

#include "topdyn/families.hpp"
#include "topdyn/findyn.hpp"

using namespace topdyn;
using namespace topdyn::families;
using findyn::PropertyReport;

TEST_CASE("finite family construction") {
    auto c4 = build_finite({Family::cycle, 4, 0, 64});
    CHECK(c4.n() == 4);
    CHECK(c4.map == std::vector<std::uint32_t>{1, 2, 3, 0});
    CHECK(c4.space == fintop::discrete(4));

    auto f9 = build_finite({Family::figure9, 2, 1, 64});
    CHECK(f9.n() == 3);
    CHECK(f9.map == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(f9.label(0) == "t");
    CHECK(f9.label(1) == "a");

    auto p4 = build_finite({Family::partition4, 0, 0, 64});
    CHECK(p4.map == std::vector<std::uint32_t>{2, 3, 2, 3});

    CHECK_THROWS_AS(build_finite({Family::cycle, 0, 0, 64}), BadParams);
    CHECK_THROWS_AS(build_finite({Family::figure9, 1, 0, 64}), BadParams);
    CHECK_THROWS_AS(build_finite({Family::chainZ, 0, 0, 64}), BadParams);
    CHECK_THROWS_AS(lazy_verdicts({Family::cycle, 3, 0, 64}), BadParams);
    CHECK_THROWS_AS(family_from_string("nope"), BadParams);
}

TEST_CASE("finite family verdict rows") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        PropertyReport r = findyn::properties(build_finite({Family::cycle, n, 0, 64}));
        CHECK(r.in);
        CHECK(r.tt);
        CHECK(r.tt_plus);
        CHECK(r.tt_plusplus);
        CHECK(r.do_);
        CHECK(r.do_plus);
        CHECK(r.do_plusplus);
        CHECK(r.trans == PointSet::full_set(static_cast<std::uint32_t>(n)));
    }
    for (std::int64_t n = 1; n <= 3; ++n)
        for (std::int64_t k = 1; k <= 3; ++k) {
            PropertyReport r = findyn::properties(build_finite({Family::figure9, n, k, 64}));
            CHECK(r.tt);
            CHECK(r.do_);
            CHECK(r.do_plus);
            CHECK(!r.tt_plus);
            CHECK(!r.tt_plusplus);
            CHECK(!r.do_plusplus);
            CHECK(r.trans == PointSet::of(static_cast<std::uint32_t>(n + k), {0u}));
        }
}

TEST_CASE("chain hitting formula") {
    ChainHitting h = chain_hitting(0, 5);
    CHECK(h.set == EPSet::all_of_n());
    CHECK(!h.formula.empty());
    CHECK(chain_hitting(3, 3).set == EPSet::all_of_n());
    CHECK(chain_hitting(5, 0).set == EPSet::all_of_n());

    // window cross-check: membership re-derived by scanning x in [-B, B]
    const std::int64_t B = 64;
    for (std::int64_t a : {-5, 0, 3, 5})
        for (std::int64_t b : {-5, 0, 3, 5}) {
            ChainHitting ch = chain_hitting(a, b);
            for (std::int64_t m = 0; m <= 16; ++m) {
                bool found = false;
                for (std::int64_t x = -B; x <= B && !found; ++x)
                    if (x < a && x + m < b) found = true;
                CHECK(ch.set.contains(static_cast<std::uint64_t>(m)) == found);
            }
        }
}

TEST_CASE("lazy verdict tables") {
    auto has = [](const std::vector<Verdict>& vs, const std::string& p, bool outcome) {
        for (const auto& v : vs)
            if (v.property == p) return v.outcome == outcome;
        return false;
    };
    auto chain = lazy_verdicts({Family::chainZ, 0, 0, 64});
    CHECK(has(chain, "TT++", true));
    CHECK(has(chain, "DO", true));
    CHECK(has(chain, "DO+", false));
    CHECK(has(chain, "Trans", false));
    CHECK(has(chain, "Iso", false));

    auto dn = lazy_verdicts({Family::discreteN, 0, 0, 64});
    CHECK(has(dn, "DO+", true));
    CHECK(has(dn, "TT+", false));
    CHECK(has(dn, "Trans", true));

    auto dz = lazy_verdicts({Family::discreteZ, 0, 0, 64});
    CHECK(has(dz, "DO", true));
    CHECK(has(dz, "DO+", false));
    CHECK(has(dz, "Trans", false));

    auto f9 = lazy_verdicts({Family::infiniteFigure9, 3, 0, 64});
    CHECK(has(f9, "TT", true));
    CHECK(has(f9, "TT+", false));
    CHECK(has(f9, "Trans", false));
    CHECK(has(f9, "Iso", true));
}

TEST_CASE("window oracle confirms every lazy verdict, monotonically in B") {
    for (auto fam : {Family::chainZ, Family::discreteN, Family::discreteZ,
                     Family::infiniteFigure9}) {
        FamilySpec spec{fam, fam == Family::infiniteFigure9 ? 3 : 0, 0, 64};
        for (std::int64_t bound : {16, 32, 64, 128})
            for (const auto& [verdict, outcome] : crosscheck_all(spec, bound))
                CHECK(outcome.status == OracleStatus::Confirmed);
    }
    // every modulus behaves the same way for the infinite figure 9
    for (std::int64_t n = 1; n <= 5; ++n)
        for (const auto& [verdict, outcome] :
             crosscheck_all(FamilySpec{Family::infiniteFigure9, n, 0, 64}, 64))
            CHECK(outcome.status == OracleStatus::Confirmed);
}

TEST_CASE("window oracle rejects corrupted claims") {
    FamilySpec chain{Family::chainZ, 0, 0, 64};
    Verdict corrupted{"DO+", true, "deliberately wrong", Provenance::ExactFormula, 64};
    OracleOutcome out = window_oracle(chain, 64, corrupted);
    CHECK(out.status == OracleStatus::CounterexampleFound);

    Verdict corrupted2{"TT++", false, "deliberately wrong", Provenance::ExactFormula, 64};
    CHECK(window_oracle(chain, 64, corrupted2).status == OracleStatus::CounterexampleFound);

    FamilySpec dz{Family::discreteZ, 0, 0, 64};
    Verdict corrupted3{"Trans", true, "deliberately wrong", Provenance::ExactFormula, 64};
    CHECK(window_oracle(dz, 64, corrupted3).status == OracleStatus::CounterexampleFound);
}

TEST_CASE("lazy case tags") {
    CHECK(lazy_case_tag({Family::discreteN, 0, 0, 64}) == findyn::CaseTag::NChain);
    CHECK(lazy_case_tag({Family::discreteZ, 0, 0, 64}) == findyn::CaseTag::ZChain);
    CHECK(lazy_case_tag({Family::infiniteFigure9, 2, 0, 64}) ==
          findyn::CaseTag::InfiniteFigure9);
    CHECK(!lazy_case_tag({Family::chainZ, 0, 0, 64}).has_value());
    CHECK_THROWS_AS(lazy_case_tag({Family::cycle, 3, 0, 64}), BadParams);
}

TEST_CASE("window oracle bound handling") {
    FamilySpec chain{Family::chainZ, 0, 0, 64};
    Verdict v{"TT", true, "", Provenance::ExactFormula, 64};
    CHECK_THROWS_AS(window_oracle(chain, 4, v), BoundTooSmall);
    CHECK_THROWS_AS(window_oracle(chain, 64, Verdict{"nonsense", true, "", {}, 64}), BadParams);
    CHECK_THROWS_AS(window_oracle({Family::cycle, 3, 0, 64}, 64, v), BadParams);
}
