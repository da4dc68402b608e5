#include <doctest.h>

#include <algorithm>

#include "topdyn/core.hpp"
#include "topdyn/symdyn.hpp"

using namespace topdyn;
using namespace topdyn::symdyn;

namespace {

// Brute-force membership oracle: try every assignment of the finitely many
// constrained coordinates and test both cylinder conditions literally.
bool member_oracle(const Cylinder& u, const Cylinder& v, std::int64_t n) {
    std::vector<std::int64_t> positions;
    for (std::size_t i = 0; i < u.word.size(); ++i)
        positions.push_back(u.offset + static_cast<std::int64_t>(i));
    for (std::size_t i = 0; i < v.word.size(); ++i) {
        std::int64_t p = v.offset + n + static_cast<std::int64_t>(i);
        if (std::find(positions.begin(), positions.end(), p) == positions.end())
            positions.push_back(p);
    }
    const std::size_t m = positions.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        auto value_at = [&](std::int64_t p) -> int {
            for (std::size_t i = 0; i < m; ++i)
                if (positions[i] == p) return static_cast<int>((bits >> i) & 1u);
            return 0;
        };
        bool ok = true;
        for (std::size_t i = 0; i < u.word.size() && ok; ++i)
            if (value_at(u.offset + static_cast<std::int64_t>(i)) != u.word[i] - '0') ok = false;
        for (std::size_t i = 0; i < v.word.size() && ok; ++i)
            if (value_at(v.offset + n + static_cast<std::int64_t>(i)) != v.word[i] - '0')
                ok = false;
        if (ok) return true;
    }
    return false;
}

std::vector<std::string> binary_words(unsigned maxlen) {
    std::vector<std::string> out;
    for (unsigned len = 1; len <= maxlen; ++len)
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
            std::string s(len, '0');
            for (unsigned i = 0; i < len; ++i)
                if ((w >> (len - 1 - i)) & 1) s[i] = '1';
            out.push_back(s);
        }
    return out;
}

}  // namespace

TEST_CASE("coordinates of computable points") {
    auto p01 = ComputablePoint::periodic("01");
    CHECK(p01.coordinate(5) == 1);
    CHECK(p01.coordinate(0) == 0);
    CHECK(p01.coordinate(-1) == 1);

    CHECK(ComputablePoint::all_zeros().coordinate(12345) == 0);

    auto shifted = ComputablePoint::shift_of(ComputablePoint::periodic("01"), 1);
    CHECK(shifted.coordinate(0) == 1);
    CHECK(shift_coordinate(shifted, 0) == 1);

    auto aw = ComputablePoint::all_words_concat();
    std::string first10;
    for (std::int64_t i = 0; i < 10; ++i) first10 += static_cast<char>('0' + aw.coordinate(i));
    CHECK(first10 == "0100011011");
    CHECK(aw.coordinate(-1) == 0);
    CHECK(aw.coordinate(-100) == 0);
    // shifting commutes with coordinates: s^k(p)(n) = p(n+k)
    auto aw3 = ComputablePoint::shift_of(aw, 3);
    for (std::int64_t i = -5; i < 20; ++i) CHECK(aw3.coordinate(i) == aw.coordinate(i + 3));
}

TEST_CASE("cylinder parsing") {
    Cylinder c = parse_cylinder("011@-2");
    CHECK(c.word == "011");
    CHECK(c.offset == -2);
    CHECK(parse_cylinder("01").offset == 0);
    CHECK_THROWS_AS(parse_cylinder("012"), BadParams);
    CHECK_THROWS_AS(parse_cylinder("01@x"), BadParams);
    CHECK_THROWS_AS(cylinder(""), BadParams);
}

TEST_CASE("cylinder hitting sets on the named pairs") {
    ZSetDescription z = cylinder_hitting(cylinder("01"), cylinder("10"));
    CHECK(z.is_cofinite());
    CHECK(z.nonmembers() == std::vector<std::int64_t>{0});
    CHECK(z.contains(1));
    CHECK(z.contains(-1));
    CHECK(z.nplus_infinite());

    ZSetDescription all = cylinder_hitting(cylinder("0"), cylinder("0"));
    CHECK(all.nonmembers().empty());

    ZSetDescription z01 = cylinder_hitting(cylinder("0"), cylinder("1"));
    CHECK(z01.nonmembers() == std::vector<std::int64_t>{0});

    ZSetDescription z0011 = cylinder_hitting(cylinder("00"), cylinder("11"));
    CHECK(z0011.nonmembers() == std::vector<std::int64_t>{-1, 0, 1});
}

TEST_CASE("cylinder hitting agrees with the brute-force word oracle") {
    auto words = binary_words(4);
    for (const auto& uw : words)
        for (const auto& vw : words) {
            Cylinder u = cylinder(uw), v = cylinder(vw);
            ZSetDescription z = cylinder_hitting(u, v);
            for (std::int64_t n = -8; n <= 8; ++n)
                CHECK(z.contains(n) == member_oracle(u, v, n));
        }
    // spot checks with nonzero offsets
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Cylinder u = cylinder(words[rng.below(words.size())],
                              static_cast<std::int64_t>(rng.below(7)) - 3);
        Cylinder v = cylinder(words[rng.below(words.size())],
                              static_cast<std::int64_t>(rng.below(7)) - 3);
        for (std::int64_t n = -6; n <= 6; ++n)
            CHECK(cylinder_hitting(u, v).contains(n) == member_oracle(u, v, n));
    }
}

TEST_CASE("hitting symmetry and refinement monotonicity") {
    auto words = binary_words(3);
    SplitMix64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        Cylinder u = cylinder(words[rng.below(words.size())],
                              static_cast<std::int64_t>(rng.below(9)) - 4);
        Cylinder v = cylinder(words[rng.below(words.size())],
                              static_cast<std::int64_t>(rng.below(9)) - 4);
        ZSetDescription uv = cylinder_hitting(u, v);
        ZSetDescription vu = cylinder_hitting(v, u);
        for (std::int64_t n = -10; n <= 10; ++n) CHECK(uv.contains(n) == vu.contains(-n));

        // refining u (appending a symbol) never adds members
        Cylinder u2 = u;
        u2.word += rng.chance(1, 2) ? '1' : '0';
        ZSetDescription uv2 = cylinder_hitting(u2, v);
        for (std::int64_t n = -10; n <= 10; ++n)
            if (uv2.contains(n)) CHECK(uv.contains(n));
    }
}

TEST_CASE("cofiniteness verification") {
    CofiniteReport r1 = verify_cofinite(1);
    CHECK(r1.pairs_checked == 4);
    CHECK(r1.all_within_bound);
    CHECK(r1.all_nplus_infinite);
    CHECK(r1.max_exceptional == 1);  // ("0","1") has the single exception {0}

    CofiniteReport r2 = verify_cofinite(2);
    CHECK(r2.pairs_checked == 36);
    CHECK(r2.all_within_bound);
    CHECK(r2.all_nplus_infinite);
    // attained by ("00","11") with non-members {-1,0,1}
    CHECK(r2.max_exceptional == 3);
}

TEST_CASE("transitive prefix") {
    PrefixResult p1 = transitive_prefix(1);
    CHECK(p1.word == "01");
    CHECK(p1.all_factors_present);

    PrefixResult p2 = transitive_prefix(2);
    CHECK(p2.word == "0100011011");
    CHECK(p2.expected_length == 10);
    CHECK(p2.all_factors_present);

    PrefixResult p3 = transitive_prefix(3);
    CHECK(p3.word.size() == 34);
    CHECK(p3.expected_length == 34);
    CHECK(p3.all_factors_present);
}

TEST_CASE("trans0 point certificate") {
    Trans0Certificate c = trans0_point(2);
    std::string first10;
    for (std::int64_t i = 0; i < 10; ++i)
        first10 += static_cast<char>('0' + c.point.coordinate(i));
    CHECK(first10 == "0100011011");
    CHECK(c.left_tail_zero);
    CHECK(c.factors_certified);

    Trans0Certificate c4 = trans0_point(4);
    CHECK(c4.left_tail_zero);
    CHECK(c4.factors_certified);
}

TEST_CASE("periodic point density and witness realization") {
    PeriodicDensityReport r = periodic_density_check(8);
    CHECK(r.all_contained);
    CHECK(r.cylinders_checked == 510);
    CHECK(r.all_realized);
    CHECK(r.witnesses_checked > 0);

    // the named witness: u=01, v=10, n=1 realized by periodic "010"
    auto p = ComputablePoint::periodic("010");
    CHECK(p.coordinate(0) == 0);
    CHECK(p.coordinate(1) == 1);
    CHECK(p.coordinate(2) == 0);
}

TEST_CASE("backward distances to the zero point") {
    auto aw = ComputablePoint::all_words_concat();
    BackwardDistance d0 = backward_distance_to_zero(aw, 0, 64);
    CHECK(d0.exact == Dyadic::pow2(-1));
    BackwardDistance d5 = backward_distance_to_zero(aw, 5, 64);
    CHECK(d5.exact == Dyadic::pow2(-6));
    CHECK(d5.tail_bound == Dyadic::pow2(-65));
    CHECK(d5.window_max == d5.exact);

    BackwardDistance z = backward_distance_to_zero(ComputablePoint::all_zeros(), 3, 16);
    CHECK(z.exact == Dyadic::zero_value());

    CHECK_THROWS_AS(backward_distance_to_zero(ComputablePoint::periodic("01"), 1, 16),
                    TailNotComputable);

    Dyadic prev;
    bool have = false;
    for (std::int64_t k = 1; k <= 32; ++k) {
        Dyadic d = backward_distance_to_zero(aw, k, 64).exact;
        CHECK(d <= Dyadic::pow2(-k));
        if (have) CHECK(d < prev);
        prev = d;
        have = true;
    }
}
