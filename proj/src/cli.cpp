#include "topdyn/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "topdyn/families.hpp"
#include "topdyn/harness.hpp"
#include "topdyn/io.hpp"
#include "topdyn/symdyn.hpp"

namespace topdyn::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;
constexpr int kExhausted = 3;

void print_theorem_results(const std::vector<harness::TheoremResult>& results,
                           std::ostream& out) {
    for (const auto& r : results) {
        out << (r.passed() ? "pass" : "FAIL") << "  " << r.id << "  checked=" << r.checked
            << " vacuous=" << r.vacuous << " violations=" << r.violations.size() << "\n";
        for (std::size_t i = 0; i < r.violations.size() && i < 3; ++i)
            out << "      " << r.violations[i].system_id << ": " << r.violations[i].witness
                << "\n";
    }
}

bool any_violations(const std::vector<harness::TheoremResult>& results) {
    for (const auto& r : results)
        if (!r.passed()) return true;
    return false;
}

struct CorpusFlags {
    std::uint32_t exhaustive_max = 3;
    std::uint32_t discrete_max = 4;
    std::uint64_t random_count = 200;
    std::uint32_t max_points = 8;
    std::uint64_t seed = 1;
    bool families = true;

    harness::CorpusSpec to_spec() const {
        harness::CorpusSpec spec;
        spec.include_families = families;
        spec.exhaustive_max = exhaustive_max;
        spec.discrete_max = discrete_max;
        spec.random_count = random_count;
        spec.random_max_points = max_points;
        spec.seed = seed;
        return spec;
    }
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& flags) {
    cmd->add_option("--random", flags.random_count, "number of random systems");
    cmd->add_option("--max-points", flags.max_points, "maximum size of random systems");
    cmd->add_option("--seed", flags.seed, "deterministic seed (never wall-clock)");
    cmd->add_option("--exhaustive-max", flags.exhaustive_max,
                    "exhaust all topologies up to this size");
    cmd->add_option("--discrete-max", flags.discrete_max,
                    "additionally exhaust discrete spaces up to this size");
    cmd->add_flag("!--no-families", flags.families, "skip the catalog systems");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite topological dynamics workbench"};
    app.require_subcommand(1);

    // report
    auto* report_cmd = app.add_subcommand("report", "seven-property report for a system file");
    std::string report_file;
    bool report_json = false;
    report_cmd->add_option("file", report_file, "system JSON file")->required();
    report_cmd->add_flag("--json", report_json, "emit JSON");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "isolated-point case analysis for a system file");
    std::string classify_file;
    bool classify_json = false;
    classify_cmd->add_option("file", classify_file, "system JSON file")->required();
    classify_cmd->add_flag("--json", classify_json, "emit JSON");

    // lattice
    auto* lattice_cmd =
        app.add_subcommand("lattice", "verify the unconditional implication lattice");
    CorpusFlags lattice_flags;
    bool lattice_json = false;
    add_corpus_flags(lattice_cmd, lattice_flags);
    lattice_cmd->add_flag("--json", lattice_json, "emit JSON");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "exhaustively enumerate systems");
    std::uint32_t enum_points = 3;
    bool enum_discrete = false;
    enum_cmd->add_option("--points", enum_points, "space size")->required();
    enum_cmd->add_flag("--discrete", enum_discrete, "discrete topology only");

    // theorems
    auto* theorems_cmd = app.add_subcommand("theorems", "run the theorem suite");
    CorpusFlags theorems_flags;
    bool theorems_json = false;
    std::uint32_t theorems_density_max = 3;
    std::uint32_t theorems_transfer_max = 2;
    add_corpus_flags(theorems_cmd, theorems_flags);
    theorems_cmd->add_option("--density-max", theorems_density_max,
                             "density-criteria exhaustion bound");
    theorems_cmd->add_option("--transfer-max", theorems_transfer_max,
                             "basis-transfer exhaustion bound");
    theorems_cmd->add_flag("--json", theorems_json, "emit JSON");

    // search
    auto* search_cmd = app.add_subcommand("search", "counterexample search");
    std::string search_predicate;
    std::uint64_t search_budget = 1000;
    search_cmd->add_option("--predicate", search_predicate, "e.g. \"perfect & TT & !TT+\"")
        ->required();
    search_cmd->add_option("--budget", search_budget, "candidate budget");

    // shift
    auto* shift_cmd = app.add_subcommand("shift", "full two-shift window computations");
    shift_cmd->require_subcommand(1);
    auto* hitting_cmd = shift_cmd->add_subcommand("hitting", "N(U,V) for two cylinders");
    std::string hit_u, hit_v;
    hitting_cmd->add_option("--u", hit_u, "cylinder WORD@OFFSET")->required();
    hitting_cmd->add_option("--v", hit_v, "cylinder WORD@OFFSET")->required();
    auto* prefix_cmd = shift_cmd->add_subcommand("prefix", "all-words transitive prefix");
    unsigned prefix_len = 3;
    prefix_cmd->add_option("--maxlen", prefix_len, "maximum word length")->required();
    auto* cofinite_cmd =
        shift_cmd->add_subcommand("verify-cofinite", "cofiniteness over all word pairs");
    unsigned cofinite_len = 3;
    cofinite_cmd->add_option("--maxlen", cofinite_len, "maximum word length")->required();
    auto* trans0_cmd = shift_cmd->add_subcommand("trans0", "certified Trans0 point");
    unsigned trans0_level = 4;
    trans0_cmd->add_option("--level", trans0_level, "certificate level")->required();
    auto* backward_cmd =
        shift_cmd->add_subcommand("backward", "backward distances to the zero point");
    std::int64_t backward_steps = 8;
    std::int64_t backward_radius = 64;
    backward_cmd->add_option("--steps", backward_steps, "number of backward steps")->required();
    backward_cmd->add_option("--radius", backward_radius, "window radius");

    // family
    auto* family_cmd = app.add_subcommand("family", "catalog and lazy families");
    std::string family_name;
    families::FamilySpec family_spec;
    bool family_verify = false;
    bool family_json = false;
    family_cmd->add_option("name", family_name, "family name")->required();
    family_cmd->add_option("--n", family_spec.n, "cycle length / modulus");
    family_cmd->add_option("--k", family_spec.k, "tail length");
    family_cmd->add_option("--window", family_spec.window, "oracle bound B");
    family_cmd->add_flag("--verify", family_verify, "run the window oracle");
    family_cmd->add_flag("--json", family_json, "emit JSON");

    // density-basis
    auto* basis_cmd = app.add_subcommand("density-basis", "test a family of opene sets");
    std::string basis_space_file, basis_file, basis_criterion = "I";
    basis_cmd->add_option("file", basis_space_file, "space or system JSON file")->required();
    basis_cmd->add_option("--basis", basis_file, "basis JSON file")->required();
    basis_cmd->add_option("--criterion", basis_criterion, "I, II, III, IV or V");

    std::vector<const char*> argv;
    argv.push_back("topdyn");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (*report_cmd) {
            auto sys = io::load_system_file(report_file);
            auto rep = findyn::properties(sys);
            if (report_json)
                out << io::report_to_json(rep).dump(2) << "\n";
            else
                out << io::render_report_text(sys, rep);
            return kOk;
        }

        if (*classify_cmd) {
            auto sys = io::load_system_file(classify_file);
            auto cls = findyn::classify_isolated(sys);
            if (classify_json)
                out << io::classification_to_json(cls).dump(2) << "\n";
            else
                out << io::render_classification_text(sys, cls);
            return kOk;
        }

        if (*lattice_cmd) {
            auto results = harness::verify_lattice(lattice_flags.to_spec());
            if (lattice_json)
                out << io::theorem_results_to_json(results).dump(2) << "\n";
            else
                print_theorem_results(results, out);
            return any_violations(results) ? kViolation : kOk;
        }

        if (*enum_cmd) {
            if (enum_discrete) {
                if (enum_points > 6) throw BoundExceeded("discrete enumeration bound is 6");
                auto d = fintop::discrete(enum_points);
                auto tables = harness::continuous_tables(d);
                out << "topologies: 1 (discrete)\nsystems: " << tables.size() << "\n";
            } else {
                if (enum_points > 4)
                    throw BoundExceeded("all-topologies enumeration bound is 4");
                auto spaces = harness::enumerate_spaces(enum_points);
                std::uint64_t systems = 0;
                for (const auto& s : spaces) systems += harness::continuous_tables(s).size();
                out << "topologies: " << spaces.size() << "\nsystems: " << systems << "\n";
            }
            return kOk;
        }

        if (*theorems_cmd) {
            auto spec = theorems_flags.to_spec();
            auto results = harness::verify_lattice(spec);
            auto suite = harness::verify_theorem_suite(spec);
            results.insert(results.end(), suite.begin(), suite.end());
            results.push_back(harness::check_hitting_vs_simulation(spec));
            results.push_back(harness::check_trans_intersection(spec));
            auto crit = harness::check_density_criteria(theorems_density_max);
            results.push_back(crit.agreement);
            results.push_back(crit.min_basis);
            auto transfers = harness::check_density_transfers(theorems_transfer_max);
            results.push_back(transfers.irreducible_wao);
            results.push_back(transfers.pullback);
            results.push_back(transfers.pushforward);
            if (theorems_json)
                out << io::theorem_results_to_json(results).dump(2) << "\n";
            else {
                print_theorem_results(results, out);
                out << "note: criterion III diverged on " << crit.nonregular_divergences
                    << " non-regular families; " << transfers.nonregular_pushforward_failures
                    << " pushforwards failed outside the regularity hypothesis (logged, not "
                       "asserted)\n";
            }
            return any_violations(results) ? kViolation : kOk;
        }

        if (*search_cmd) {
            auto res = harness::search_counterexample(search_predicate, search_budget);
            if (!res.found) {
                out << "exhausted after " << res.candidates_tried
                    << " candidates: no system matching \"" << search_predicate << "\"\n";
                return kExhausted;
            }
            out << "found " << res.system_id << " after " << res.candidates_tried
                << " candidates\n";
            out << io::system_to_json(res.system).dump() << "\n";
            out << io::render_report_text(res.system, findyn::properties(res.system));
            out << "certificate: " << res.certificate << "\n";
            return kViolation;
        }

        if (*shift_cmd) {
            if (*hitting_cmd) {
                auto z = symdyn::cylinder_hitting(symdyn::parse_cylinder(hit_u),
                                                  symdyn::parse_cylinder(hit_v));
                out << "N(U,V) = " << z.to_string() << "\n";
                out << "N+ infinite: " << (z.nplus_infinite() ? "yes" : "no") << "\n";
                return kOk;
            }
            if (*prefix_cmd) {
                auto p = symdyn::transitive_prefix(prefix_len);
                out << "length " << p.word.size() << " (expected " << p.expected_length
                    << ")\n";
                out << p.word << "\n";
                out << "all factors up to length " << prefix_len << ": "
                    << (p.all_factors_present ? "present" : "MISSING") << "\n";
                return p.all_factors_present && p.word.size() == p.expected_length
                           ? kOk
                           : kViolation;
            }
            if (*cofinite_cmd) {
                auto rep = symdyn::verify_cofinite(cofinite_len);
                out << "pairs checked: " << rep.pairs_checked << "\n";
                out << "max exceptional size: " << rep.max_exceptional << "\n";
                out << "within |u|+|v|-1 bound: " << (rep.all_within_bound ? "yes" : "NO")
                    << "\n";
                out << "N+ infinite in every case: "
                    << (rep.all_nplus_infinite ? "yes" : "NO") << "\n";
                return rep.all_within_bound && rep.all_nplus_infinite ? kOk : kViolation;
            }
            if (*trans0_cmd) {
                auto cert = symdyn::trans0_point(trans0_level);
                out << cert.point.describe() << "\n";
                out << "coordinates 0..9: ";
                for (std::int64_t i = 0; i < 10; ++i) out << cert.point.coordinate(i);
                out << "\nleft tail zero (window " << cert.left_window << "): "
                    << (cert.left_tail_zero ? "yes" : "NO") << "\n";
                out << "all words up to length " << cert.level
                    << " occur at nonnegative positions: "
                    << (cert.factors_certified ? "yes" : "NO") << "\n";
                return cert.left_tail_zero && cert.factors_certified ? kOk : kViolation;
            }
            if (*backward_cmd) {
                auto p = symdyn::ComputablePoint::all_words_concat();
                bool ok = true;
                symdyn::Dyadic prev;
                bool have_prev = false;
                for (std::int64_t k = 0; k <= backward_steps; ++k) {
                    auto d = symdyn::backward_distance_to_zero(p, k, backward_radius);
                    out << "k=" << k << "  d(s^-k x, zero) = " << d.exact.to_string() << "\n";
                    if (k >= 1 && !(d.exact <= symdyn::Dyadic::pow2(-k))) ok = false;
                    if (have_prev && !(d.exact < prev)) ok = false;
                    prev = d.exact;
                    have_prev = true;
                }
                out << "strictly decreasing and within 2^-k: " << (ok ? "yes" : "NO") << "\n";
                return ok ? kOk : kViolation;
            }
        }

        if (*family_cmd) {
            family_spec.name = families::family_from_string(family_name);
            if (families::is_finite_family(family_spec.name)) {
                auto sys = families::build_finite(family_spec);
                auto rep = findyn::properties(sys);
                if (family_json) {
                    io::json j;
                    j["system"] = io::system_to_json(sys);
                    j["report"] = io::report_to_json(rep);
                    out << j.dump(2) << "\n";
                } else {
                    out << io::render_report_text(sys, rep);
                }
                if (family_verify) {
                    if (auto errmsg = harness::replay_report(sys, rep, true)) {
                        out << "replay FAILED: " << *errmsg << "\n";
                        return kViolation;
                    }
                    out << "replay against raw definitions (all open sets): ok\n";
                }
                return kOk;
            }
            if (auto tag = families::lazy_case_tag(family_spec))
                out << "case: " << findyn::to_string(*tag) << "\n";
            auto verdicts = families::lazy_verdicts(family_spec);
            bool all_ok = true;
            for (const auto& v : verdicts) {
                out << v.property << ": " << (v.outcome ? "true" : "false") << "  [" << v.witness
                    << "]\n";
                if (family_verify) {
                    auto res = families::window_oracle(family_spec, family_spec.window, v);
                    const bool ok = res.status == families::OracleStatus::Confirmed;
                    all_ok = all_ok && ok;
                    out << "    oracle@" << family_spec.window << ": "
                        << (ok ? "confirmed" : "COUNTEREXAMPLE: " + res.detail) << "\n";
                }
            }
            return all_ok ? kOk : kViolation;
        }

        if (*basis_cmd) {
            auto space = io::load_space_file(basis_space_file);
            auto basis = io::load_basis_file(basis_file, space.n);
            auto crit = fintop::criterion_from_string(basis_criterion);
            const bool ok = fintop::is_density_basis(space, basis, crit);
            out << "density basis under criterion " << fintop::to_string(crit) << ": "
                << (ok ? "yes" : "no") << "\n";
            return ok ? kOk : kViolation;
        }
    } catch (const BoundTooSmall& e) {
        err << "bound too small: " << e.what() << "\n";
        return kExhausted;
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
    err << "error: no subcommand\n";
    return kInvalid;
}

}  // namespace topdyn::cli
