#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "randic/bounds.hpp"
#include "randic/enumeration.hpp"
#include "randic/families.hpp"
#include "randic/graph6.hpp"
#include "randic/invariants.hpp"
#include "randic/verifier.hpp"

namespace {

using nlohmann::json;

void check_gammas(const std::vector<double>& gammas) {
    for (double g : gammas) {
        if (g == 0.0) {
            throw std::invalid_argument(
                "gamma = 0 is not allowed: the index is defined for non-zero "
                "real exponents only");
        }
    }
}

int default_jobs() {
    if (const char* env = std::getenv("RANDIC_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

struct IndexOptions {
    std::vector<double> gammas;
    std::string graph6_text;
    std::string in_path;
    std::string format = "text";
    std::string out_path;
};

int run_index(const IndexOptions& opt) {
    check_gammas(opt.gammas);
    std::vector<std::string> lines;
    if (!opt.graph6_text.empty()) {
        lines.push_back(opt.graph6_text);
    } else {
        std::istream* in = &std::cin;
        std::ifstream file;
        if (!opt.in_path.empty()) {
            file.open(opt.in_path);
            if (!file) throw std::runtime_error("cannot open input file: " + opt.in_path);
            in = &file;
        }
        std::string line;
        while (std::getline(*in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }
    json results = json::array();
    for (const auto& line : lines) {
        randic::Graph g = randic::graph6_decode(line);
        for (double gamma : opt.gammas) {
            double value = randic::zeroth_order_general_randic(
                g, randic::GammaExponent(gamma));
            results.push_back({{"graph6", line}, {"gamma", gamma}, {"value", value}});
        }
    }
    std::string text;
    if (opt.format == "json") {
        text = results.dump(2) + "\n";
    } else if (opt.format == "csv") {
        text = "graph6,gamma,value\n";
        for (const auto& r : results) {
            text += r["graph6"].get<std::string>() + ',' + r["gamma"].dump() + ',' +
                    r["value"].dump() + '\n';
        }
    } else if (results.size() == 1) {
        text = results[0]["value"].dump() + "\n";
    } else {
        for (const auto& r : results) {
            text += r["graph6"].get<std::string>() + '\t' + r["gamma"].dump() + '\t' +
                    r["value"].dump() + '\n';
        }
    }
    write_output(text, opt.out_path);
    return 0;
}

struct GenOptions {
    std::string family;
    int n = 0;
    int c = -1;
    std::vector<int> parts;
    std::vector<int> pendants;
    int n1 = -1;
    std::string out_path;
};

randic::FamilySpec spec_from_options(const GenOptions& opt) {
    using randic::Family;
    using randic::FamilySpec;
    switch (randic::family_from_name(opt.family)) {
        case Family::complete: return FamilySpec::complete(opt.n);
        case Family::cycle: return FamilySpec::cycle(opt.n);
        case Family::path: return FamilySpec::path(opt.n);
        case Family::star: return FamilySpec::star(opt.n);
        case Family::multipartite: return FamilySpec::multipartite(opt.parts);
        case Family::turan: return FamilySpec::turan(opt.n, opt.c);
        case Family::pineapple: return FamilySpec::pineapple(opt.n, opt.c);
        case Family::star_clique: return FamilySpec::star_clique(opt.n, opt.pendants);
        case Family::pendant_cycle: return FamilySpec::pendant_cycle(opt.n, opt.c);
        case Family::kite: return FamilySpec::kite(opt.n, opt.c);
        case Family::connectivity_split:
            return FamilySpec::connectivity_split(opt.n, opt.c, opt.n1);
    }
    throw std::invalid_argument("unknown family: " + opt.family);
}

int run_gen(const GenOptions& opt) {
    randic::Graph g = randic::generate(spec_from_options(opt));
    write_output(randic::graph6_encode(g) + "\n", opt.out_path);
    return 0;
}

struct BoundOptions {
    std::string theorem;
    int n = 0;
    int c = 0;
    std::vector<double> gammas;
    bool exploratory = false;
    std::string out_path;
};

int run_bound(const BoundOptions& opt) {
    check_gammas(opt.gammas);
    randic::TheoremId id = randic::theorem_from_name(opt.theorem);
    json results = json::array();
    for (double gamma : opt.gammas) {
        randic::BoundQuery query{id, opt.n, opt.c, gamma, opt.exploratory};
        json entry;
        entry["theorem"] = opt.theorem;
        entry["n"] = opt.n;
        entry["c"] = opt.c;
        entry["gamma"] = gamma;
        entry["exploratory"] = opt.exploratory;
        entry["value"] = randic::bound_value(query);
        json witnesses = json::array();
        for (const auto& spec : randic::extremal_witnesses(query).specs) {
            witnesses.push_back({{"family", spec.describe()},
                                 {"graph6", randic::graph6_encode(randic::generate(spec))}});
        }
        entry["witnesses"] = witnesses;
        results.push_back(entry);
    }
    std::string text =
        (results.size() == 1 ? results[0].dump(2) : results.dump(2)) + "\n";
    write_output(text, opt.out_path);
    return 0;
}

struct EnumerateOptions {
    int n = 0;
    std::string out_path;
};

int run_enumerate(const EnumerateOptions& opt) {
    auto stream = randic::enumerate_connected(opt.n);
    std::string text;
    while (auto g = stream->next()) text += randic::graph6_encode(*g) + "\n";
    write_output(text, opt.out_path);
    return 0;
}

struct VerifyOptions {
    std::vector<int> orders;
    std::vector<int> cs;
    std::vector<double> gammas;
    std::vector<std::string> theorems;
    std::string corpus;
    std::string out_path;
    std::string format = "text";
    double tolerance = randic::default_tolerance;
    int jobs = 0;
    bool exploratory = false;
    std::string config_path;
};

void apply_config(VerifyOptions& opt, const CLI::App* cmd) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw std::runtime_error("cannot open config file: " + opt.config_path);
    json cfg = json::parse(in);
    auto unset = [&](const std::string& flag) { return cmd->count(flag) == 0; };
    if (cfg.contains("n") && unset("--n")) opt.orders = cfg["n"].get<std::vector<int>>();
    if (cfg.contains("c") && unset("--c")) opt.cs = cfg["c"].get<std::vector<int>>();
    if (cfg.contains("gamma") && unset("--gamma")) {
        opt.gammas = cfg["gamma"].get<std::vector<double>>();
    }
    if (cfg.contains("theorems") && unset("--theorem")) {
        opt.theorems = cfg["theorems"].get<std::vector<std::string>>();
    }
    if (cfg.contains("corpus") && unset("--corpus")) {
        opt.corpus = cfg["corpus"].get<std::string>();
    }
    if (cfg.contains("out") && unset("--out")) opt.out_path = cfg["out"].get<std::string>();
    if (cfg.contains("format") && unset("--format")) {
        opt.format = cfg["format"].get<std::string>();
    }
    if (cfg.contains("tolerance") && unset("--tolerance")) {
        opt.tolerance = cfg["tolerance"].get<double>();
    }
    if (cfg.contains("jobs") && unset("--jobs")) opt.jobs = cfg["jobs"].get<int>();
    if (cfg.contains("exploratory") && unset("--exploratory")) {
        opt.exploratory = cfg["exploratory"].get<bool>();
    }
}

int run_verify(VerifyOptions opt, const CLI::App* cmd) {
    apply_config(opt, cmd);
    if (opt.orders.empty()) throw std::invalid_argument("verify needs at least one --n");
    if (opt.gammas.empty()) throw std::invalid_argument("verify needs at least one --gamma");
    check_gammas(opt.gammas);
    if (opt.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");

    randic::SuitePolicy policy;
    policy.orders = opt.orders;
    policy.gammas = opt.gammas;
    policy.c_filter = opt.cs;
    for (const auto& name : opt.theorems) {
        policy.theorems.push_back(randic::theorem_from_name(name));
    }
    policy.exploratory = opt.exploratory;
    policy.tolerance = opt.tolerance;
    policy.jobs = opt.jobs >= 1 ? opt.jobs : default_jobs();
    if (!opt.corpus.empty()) {
        if (opt.orders.size() != 1) {
            throw std::invalid_argument("--corpus requires exactly one --n value");
        }
        policy.sources.push_back(randic::CorpusSource::file(opt.corpus));
    }

    auto reports = randic::verify_suite(policy);
    std::string text;
    if (opt.format == "json") {
        text = randic::reports_to_json(reports);
    } else if (opt.format == "csv") {
        text = randic::reports_to_csv(reports);
    } else {
        text = randic::reports_to_text(reports);
    }
    write_output(text, opt.out_path);
    return randic::all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeroth-order general Randic index: invariants, extremal families, "
                 "bounds and exhaustive verification"};
    app.require_subcommand(1);

    IndexOptions index_opt;
    auto* index_cmd = app.add_subcommand("index", "compute the index of graph6 input");
    index_cmd->add_option("--gamma", index_opt.gammas, "exponent list")->delimiter(',')->required();
    index_cmd->add_option("--graph6", index_opt.graph6_text, "one graph6 string");
    index_cmd->add_option("--in", index_opt.in_path, "graph6 file (default: stdin)");
    index_cmd->add_option("--format", index_opt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    index_cmd->add_option("--out", index_opt.out_path, "output file (default: stdout)");

    GenOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("gen", "emit an extremal family as graph6");
    gen_cmd->add_option("--family", gen_opt.family, "family name")->required();
    gen_cmd->add_option("--n", gen_opt.n, "order");
    gen_cmd->add_option("--c", gen_opt.c, "family parameter");
    gen_cmd->add_option("--parts", gen_opt.parts, "multipartite part sizes")->delimiter(',');
    gen_cmd->add_option("--pendants", gen_opt.pendants, "star_clique pendant counts")->delimiter(',');
    gen_cmd->add_option("--n1", gen_opt.n1, "connectivity_split first clique size");
    gen_cmd->add_option("--out", gen_opt.out_path, "output file (default: stdout)");

    BoundOptions bound_opt;
    auto* bound_cmd = app.add_subcommand("bound", "print a bound value and its witnesses");
    bound_cmd->add_option("--theorem", bound_opt.theorem, "theorem id")->required();
    bound_cmd->add_option("--n", bound_opt.n, "order")->required();
    bound_cmd->add_option("--c", bound_opt.c, "class parameter")->required();
    bound_cmd->add_option("--gamma", bound_opt.gammas, "exponent list")->delimiter(',')->required();
    bound_cmd->add_flag("--exploratory", bound_opt.exploratory,
                        "evaluate outside the proven range");
    bound_cmd->add_option("--out", bound_opt.out_path, "output file (default: stdout)");

    EnumerateOptions enum_opt;
    auto* enum_cmd =
        app.add_subcommand("enumerate", "write the builtin connected corpus as graph6");
    enum_cmd->add_option("--n", enum_opt.n, "order (1..7)")->required();
    enum_cmd->add_option("--out", enum_opt.out_path, "output file (default: stdout)");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "sweep a corpus against the theorems");
    verify_cmd->add_option("--n", verify_opt.orders, "orders to sweep")->delimiter(',');
    verify_cmd->add_option("--c", verify_opt.cs, "restrict the c sweep")->delimiter(',');
    verify_cmd->add_option("--gamma", verify_opt.gammas, "exponent list")->delimiter(',');
    auto* all_flag = verify_cmd->add_flag("--all", "verify every theorem");
    auto* theorem_opt =
        verify_cmd->add_option("--theorem", verify_opt.theorems, "theorem ids")->delimiter(',');
    all_flag->excludes(theorem_opt);
    verify_cmd->add_option("--corpus", verify_opt.corpus, "graph6 corpus file");
    verify_cmd->add_option("--out", verify_opt.out_path, "report file (default: stdout)");
    verify_cmd->add_option("--format", verify_opt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--tolerance", verify_opt.tolerance, "relative tolerance");
    verify_cmd->add_option("--jobs", verify_opt.jobs,
                           "parallel workers (default: RANDIC_JOBS or hardware)");
    verify_cmd->add_flag("--exploratory", verify_opt.exploratory,
                         "include off-range probes, excluded from the exit status");
    verify_cmd->add_option("--config", verify_opt.config_path,
                           "JSON file with suite parameters (flags win)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "randic: error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (index_cmd->parsed()) return run_index(index_opt);
        if (gen_cmd->parsed()) return run_gen(gen_opt);
        if (bound_cmd->parsed()) return run_bound(bound_opt);
        if (enum_cmd->parsed()) return run_enumerate(enum_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt, verify_cmd);
    } catch (const std::exception& e) {
        std::cerr << "randic: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
