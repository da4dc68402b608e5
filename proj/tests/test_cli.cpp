#include <doctest.h>

#include <fstream>
#include <sstream>

#include "topdyn/cli.hpp"
#include "topdyn/families.hpp"
#include "topdyn/io.hpp"

using namespace topdyn;

namespace {

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/topdyn_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("report subcommand") {
    auto f9 = families::build_finite({families::Family::figure9, 2, 1, 64});
    std::string path = write_temp("figure9.json", io::system_to_json(f9).dump());

    std::string out;
    CHECK(run_cli({"report", path}, &out) == 0);
    CHECK(out.find("DO+ : true") != std::string::npos);
    CHECK(out.find("TT+ : false") != std::string::npos);
    CHECK(out.find("Trans: {t}") != std::string::npos);

    // JSON round-trip: parsing the emitted document reproduces the verdicts
    std::string json_out;
    CHECK(run_cli({"report", path, "--json"}, &json_out) == 0);
    auto parsed = io::report_from_json(io::json::parse(json_out), f9.n());
    CHECK(parsed == findyn::properties(f9));
}

TEST_CASE("report rejects a discontinuous map with exit 2") {
    std::string path = write_temp(
        "swap.json", R"({"points":2,"min_nbhd":[[0],[0,1]],"map":[1,0]})");
    std::string out, err;
    CHECK(run_cli({"report", path}, &out, &err) == 2);
    CHECK(err.find("not continuous") != std::string::npos);
}

TEST_CASE("report rejects malformed documents") {
    std::string path = write_temp("bad.json", R"({"points":2})");
    CHECK(run_cli({"report", path}) == 2);
    std::string path2 = write_temp("badax.json",
                                   R"({"points":2,"min_nbhd":[[1],[0]],"map":[0,1]})");
    CHECK(run_cli({"report", path2}) == 2);
    CHECK(run_cli({"report", "/tmp/definitely_missing_file.json"}) == 2);
}

TEST_CASE("classify subcommand") {
    auto f9 = families::build_finite({families::Family::figure9, 3, 2, 64});
    std::string path = write_temp("classify9.json", io::system_to_json(f9).dump());
    std::string out;
    CHECK(run_cli({"classify", path}, &out) == 0);
    CHECK(out.find("FiniteFigure9") != std::string::npos);

    auto id2 = findyn::system_new(fintop::discrete(2), {0, 1});
    std::string idpath = write_temp("id2.json", io::system_to_json(id2).dump());
    std::string err;
    CHECK(run_cli({"classify", idpath}, &out, &err) == 2);
    CHECK(err.find("transitive") != std::string::npos);

    auto sierp = families::build_finite({families::Family::sierpinski_map, 0, 0, 64});
    std::string spath = write_temp("sierp.json", io::system_to_json(sierp).dump());
    CHECK(run_cli({"classify", spath}, &out, &err) == 2);
}

TEST_CASE("lattice and theorems subcommands") {
    CHECK(run_cli({"lattice", "--random", "50", "--seed", "2", "--exhaustive-max", "2",
                   "--discrete-max", "3"}) == 0);
    CHECK(run_cli({"theorems", "--random", "30", "--seed", "2", "--exhaustive-max", "2",
                   "--discrete-max", "3"}) == 0);
}

TEST_CASE("enumerate subcommand") {
    std::string out;
    CHECK(run_cli({"enumerate", "--points", "4"}, &out) == 0);
    CHECK(out.find("topologies: 355") != std::string::npos);
    CHECK(run_cli({"enumerate", "--points", "3", "--discrete"}, &out) == 0);
    CHECK(out.find("systems: 27") != std::string::npos);
    CHECK(run_cli({"enumerate", "--points", "7"}) == 2);
}

TEST_CASE("search subcommand exit codes") {
    std::string out;
    CHECK(run_cli({"search", "--predicate", "perfect & TT & !TT+", "--budget", "1000"},
                  &out) == 1);
    CHECK(out.find("found") != std::string::npos);
    CHECK(run_cli({"search", "--predicate", "hausdorff & TT & !DO", "--budget", "200"}) == 3);
    CHECK(run_cli({"search", "--predicate", "banana"}) == 2);
}

TEST_CASE("shift subcommands") {
    std::string out;
    CHECK(run_cli({"shift", "hitting", "--u", "01@0", "--v", "10@0"}, &out) == 0);
    CHECK(out.find("Z minus {0}") != std::string::npos);
    CHECK(run_cli({"shift", "prefix", "--maxlen", "3"}, &out) == 0);
    CHECK(run_cli({"shift", "verify-cofinite", "--maxlen", "3"}, &out) == 0);
    CHECK(run_cli({"shift", "trans0", "--level", "4"}, &out) == 0);
    CHECK(run_cli({"shift", "backward", "--steps", "8"}, &out) == 0);
    CHECK(out.find("yes") != std::string::npos);
    CHECK(run_cli({"shift", "hitting", "--u", "013", "--v", "0"}) == 2);
}

TEST_CASE("family subcommand") {
    std::string out;
    CHECK(run_cli({"family", "figure9", "--n", "2", "--k", "1"}, &out) == 0);
    CHECK(out.find("Trans: {t}") != std::string::npos);
    CHECK(run_cli({"family", "partition4", "--verify"}, &out) == 0);
    CHECK(out.find("replay against raw definitions") != std::string::npos);
    CHECK(run_cli({"family", "chainZ", "--verify", "--window", "64"}, &out) == 0);
    CHECK(out.find("confirmed") != std::string::npos);
    CHECK(run_cli({"family", "unknown_family"}) == 2);
    CHECK(run_cli({"family", "cycle", "--n", "0"}) == 2);
}

TEST_CASE("density-basis subcommand") {
    std::string space = write_temp("sierp_space.json", R"({"points":2,"min_nbhd":[[0],[0,1]]})");
    std::string good = write_temp("basis_good.json", R"({"sets":[[0]]})");
    std::string bad = write_temp("basis_bad.json", R"({"sets":[[0,1]]})");
    CHECK(run_cli({"density-basis", space, "--basis", good, "--criterion", "I"}) == 0);
    CHECK(run_cli({"density-basis", space, "--basis", bad, "--criterion", "V"}) == 1);
    std::string empty = write_temp("basis_empty.json", R"({"sets":[]})");
    CHECK(run_cli({"density-basis", space, "--basis", empty, "--criterion", "I"}) == 2);
}

TEST_CASE("bad flags are rejected") {
    CHECK(run_cli({"report"}) == 2);
    CHECK(run_cli({"nonsense"}) == 2);
    CHECK(run_cli({"lattice", "--bogus-flag"}) == 2);
    CHECK(run_cli({}) == 2);
}

TEST_CASE("system json round-trips") {
    for (auto fam : {families::Family::cycle, families::Family::partition4}) {
        auto sys = families::build_finite({fam, 3, 0, 64});
        auto j = io::system_to_json(sys);
        auto back = io::system_from_json(j);
        CHECK(back == sys);
    }
}
