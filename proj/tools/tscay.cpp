// tscay: analyse two-sided Cayley graphs of finite groups from the
// command line. Groups are given in a mini-language (C12, D6, S4, Q8,
// or products like S3xS3); connection sets as comma-separated element
// words ("a,a^2", "b,a^3*b", "(123),(132)", "((12),e)").
//
// Exit codes: 0 = requested claims hold, 1 = a claim failed or a
// verdict was negative, 2 = bad usage or unparsable input.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tscay/graph_export.hpp"
#include "tscay/group_automorphisms.hpp"
#include "tscay/jobs.hpp"
#include "tscay/report.hpp"

namespace {

struct PairArgs {
    std::string group, left, right;
};

void add_pair_args(CLI::App* cmd, PairArgs& args) {
    cmd->add_option("group", args.group, "group spec, e.g. C12, D6, S3, Q8, S3xS3")->required();
    cmd->add_option("L", args.left, "left connection set, e.g. a,a^2")->required();
    cmd->add_option("R", args.right, "right connection set, e.g. b,a^3*b")->required();
}

// The group lives on the heap so the references inside ConnectionPair
// stay valid when ParsedPair is moved around.
struct ParsedPair {
    std::shared_ptr<tscay::FiniteGroup> group_storage;
    tscay::ConnectionPair pair;
    const tscay::FiniteGroup& group() const { return *group_storage; }
};

ParsedPair parse_pair(const PairArgs& args) {
    auto g = std::make_shared<tscay::FiniteGroup>(tscay::parse_group_spec(args.group));
    tscay::ElementSet L = tscay::parse_element_set(*g, args.left);
    tscay::ElementSet R = tscay::parse_element_set(*g, args.right);
    tscay::ConnectionPair pair(*g, std::move(L), std::move(R));
    return {std::move(g), std::move(pair)};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void print_condition(const char* name, const tscay::FiniteGroup& g,
                     const tscay::ConditionResult& c) {
    std::cout << "  " << name << ": " << (c.pass ? "holds" : "FAILS");
    if (!c.pass && c.witness)
        std::cout << " (witness: " << tscay::detail::witness_json(g, *c.witness).dump() << ")";
    std::cout << "\n";
}

int run_check(const PairArgs& args) {
    ParsedPair p = parse_pair(args);
    tscay::PropertyVerdict v = tscay::check_property(p.pair);
    std::cout << "group " << p.group().description() << ", |G| = " << p.group().order() << "\n"
              << "L = {" << p.pair.left().to_string() << "}\n"
              << "R = {" << p.pair.right().to_string() << "}\n";
    print_condition("condition 1 (symmetry:      L^-1 g R = L g R^-1)", p.group(), v.cond1);
    print_condition("condition 2 (no loops:      L^g disjoint from R)", p.group(), v.cond2);
    print_condition("condition 3 (no multi-arcs: (LL^-1)^g ^ RR^-1 = {e})", p.group(), v.cond3);
    std::cout << (v.overall ? "pair property holds: the graph is a simple undirected graph "
                              "of valency "
                                  + std::to_string(p.pair.left().size() * p.pair.right().size())
                            : std::string("pair property fails"))
              << "\n";
    return v.overall ? 0 : 1;
}

int run_build(const PairArgs& args, bool as_json, const std::string& out_path) {
    ParsedPair p = parse_pair(args);
    tscay::TwoSidedCayleyGraph graph = tscay::build_graph(p.pair);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (as_json) out << tscay::graph_to_json(graph).dump(2) << "\n";
    else out << tscay::to_dot(graph);
    return 0;
}

int run_analyze(const PairArgs& args, bool as_json) {
    ParsedPair p = parse_pair(args);
    nlohmann::json rep = tscay::analyze_report(p.pair);
    if (as_json) std::cout << rep.dump(2) << "\n";
    else std::cout << tscay::render_analysis_text(rep);
    return rep["property"]["overall"].get<bool>() ? 0 : 1;
}

int run_iso(const PairArgs& args, bool do_swap, const std::vector<std::string>& translate,
            bool do_sigma, int sigma_index) {
    ParsedPair p = parse_pair(args);
    std::optional<tscay::IsoWitness> witness;
    if (do_swap) {
        witness = tscay::iso_swap(p.pair);
    } else if (!translate.empty()) {
        int x = tscay::parse_element(p.group(), translate[0]);
        int y = tscay::parse_element(p.group(), translate[1]);
        witness = tscay::iso_translate(p.pair, x, y);
    } else if (do_sigma) {
        std::vector<tscay::Perm> auts = tscay::tabulated_automorphisms(p.group());
        if (sigma_index < 0 || sigma_index >= int(auts.size()))
            throw tscay::ParseError("sigma index out of range: have " +
                                        std::to_string(auts.size()) + " tabulated automorphisms",
                                    0);
        witness = tscay::iso_sigma(p.pair, auts[std::size_t(sigma_index)]);
    }
    std::cout << "isomorphism rule: " << witness->phi.rule << "\n"
              << "image pair over " << p.group().description() << ":\n"
              << "  L' = {" << witness->image_pair.left().to_string() << "}\n"
              << "  R' = {" << witness->image_pair.right().to_string() << "}\n"
              << "verified arc-for-arc on " << p.group().order() << " vertices\n";
    return 0;
}

int run_examples_cmd() {
    tscay::ExamplesReport rep = tscay::run_examples();
    std::string last;
    for (const auto& c : rep.claims) {
        if (c.scenario != last) {
            std::cout << "[" << c.scenario << "]\n";
            last = c.scenario;
        }
        std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.claim;
        if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    int fails = 0;
    for (const auto& c : rep.claims) fails += c.pass ? 0 : 1;
    std::cout << rep.claims.size() << " claims checked, " << fails << " failed\n";
    return fails == 0 ? 0 : 1;
}

int run_petersen() {
    tscay::PetersenSearchReport rep = tscay::petersen_search();
    for (const auto& s : rep.scans)
        std::cout << s.group << ": " << s.pairs_scanned << " pairs with |L|*|R| = 3, "
                  << s.with_property << " with the pair property, " << s.connected_candidates
                  << " connected (prime valency 3), " << s.cayley_confirmed
                  << " confirmed Cayley, " << s.petersen_hits << " isomorphic to Petersen\n";
    std::cout << (rep.total_hits() == 0
                      ? "no two-sided Cayley graph over a group of order 10 is the Petersen graph"
                      : "unexpected Petersen graph found")
              << "\n";
    return rep.total_hits() == 0 ? 0 : 1;
}

int run_census(const tscay::CensusOptions& opts, const std::string& out_path, bool summary_only) {
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    nlohmann::json summary;
    if (summary_only) {
        std::ostringstream sink;
        summary = tscay::census(opts, sink);
    } else {
        summary = tscay::census(opts, out);
    }
    (out_path.empty() && !summary_only ? std::cerr : std::cout) << summary.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sided Cayley graph toolkit"};
    app.require_subcommand(1);

    PairArgs pair_args;
    auto* check = app.add_subcommand("check", "verify the pair property for (G, L, R)");
    add_pair_args(check, pair_args);

    auto* build = app.add_subcommand("build", "emit the graph as DOT or JSON");
    add_pair_args(build, pair_args);
    bool build_json = false, build_dot = false;
    std::string out_path;
    build->add_flag("--json", build_json, "emit JSON");
    build->add_flag("--dot", build_dot, "emit DOT (default)");
    build->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "full structural report for (G, L, R)");
    add_pair_args(analyze, pair_args);
    bool analyze_json = false;
    analyze->add_flag("--json", analyze_json, "emit the report as JSON");

    auto* iso = app.add_subcommand("iso", "apply a generic isomorphism and verify it");
    add_pair_args(iso, pair_args);
    bool iso_swap_flag = false, iso_sigma_flag = false;
    int sigma_index = 0;
    std::vector<std::string> translate_args;
    iso->add_flag("--swap", iso_swap_flag, "swap to (R, L) via g -> g^-1");
    iso->add_option("--translate", translate_args,
                    "conjugate to (L^x, R^y) via g -> x^-1 g y; takes two elements")
        ->expected(2);
    auto* sig = iso->add_option("--sigma", sigma_index,
                                "apply tabulated group automorphism #K (default 0 = identity)");
    sig->expected(0, 1)->default_val(0);
    iso->callback([&] {
        iso_sigma_flag = sig->count() > 0;
        int chosen = (iso_swap_flag ? 1 : 0) + (translate_args.empty() ? 0 : 1) +
                     (iso_sigma_flag ? 1 : 0);
        if (chosen != 1)
            throw CLI::ValidationError("iso", "choose exactly one of --swap, --translate, --sigma");
    });

    auto* examples = app.add_subcommand("examples", "re-derive the worked-example claims");
    auto* petersen = app.add_subcommand("petersen-search",
                                        "scan order-10 groups for Petersen candidates");

    auto* census_cmd = app.add_subcommand("census", "enumerate pairs over a group catalogue");
    tscay::CensusOptions census_opts;
    bool summary_only = false;
    std::string census_out;
    census_cmd->add_option("--max-order", census_opts.max_order, "largest group order")
        ->required();
    census_cmd->add_option("--max-set-size", census_opts.max_set_size,
                           "largest |L|, |R| (default 3)");
    census_cmd->add_flag("--inverse-closed", census_opts.inverse_closed_only,
                         "only inverse-closed connection sets");
    census_cmd->add_flag("--force", census_opts.force, "allow max order above 24");
    census_cmd->add_flag("--summary", summary_only, "print only the per-group summary");
    census_cmd->add_option("-o,--output", census_out, "write JSON-lines rows to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(pair_args);
        if (*build) {
            if (build_json && build_dot)
                throw tscay::ParseError("choose one of --dot, --json", 0);
            return run_build(pair_args, build_json, out_path);
        }
        if (*analyze) return run_analyze(pair_args, analyze_json);
        if (*iso)
            return run_iso(pair_args, iso_swap_flag, translate_args, iso_sigma_flag, sigma_index);
        if (*examples) return run_examples_cmd();
        if (*petersen) return run_petersen();
        if (*census_cmd) return run_census(census_opts, census_out, summary_only);
    } catch (const tscay::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
