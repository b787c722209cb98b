// Command-line front end: check / color / verify / oracle / gen / fuzz over
// graph6 and DIMACS files. stdout carries machine-readable JSON (or graph6
// records for gen); human summaries go to stderr.
//
// Exit codes: 0 ok, 1 domain rejection or verification failure,
//             2 parse/usage error, 3 theory violation.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chibound/chibound.hpp"

namespace {

std::atomic<bool> g_cancel{false};

void handle_sigint(int) { g_cancel.store(true); }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chibound::input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

chibound::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "dimacs") return chibound::io::parse_dimacs(text);
    return chibound::io::parse_graph6(text);
}

void write_output(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw chibound::input_error("cannot write " + path);
    out << payload;
}

int cmd_check(const std::string& input, const std::string& format) {
    chibound::Graph g;
    try {
        g = load_graph(input, format);
    } catch (const chibound::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    auto verdict = chibound::class_membership(g);
    std::cout << chibound::io::verdict_to_json(verdict);
    return verdict.in_class ? 0 : 1;
}

int cmd_color(const std::string& input, const std::string& format,
              const std::string& cert_path) {
    chibound::Graph g;
    try {
        g = load_graph(input, format);
    } catch (const chibound::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    chibound::StrategyOutcome outcome;
    try {
        outcome = chibound::colour(g);
    } catch (const chibound::out_of_class_error& e) {
        chibound::MembershipVerdict verdict{false, e.witness};
        std::cout << chibound::io::verdict_to_json(verdict);
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const chibound::theory_violation& e) {
        std::cerr << "theory violation: " << e.what() << "\n";
        return 3;
    }
    auto doc = chibound::io::make_certificate(g, outcome);
    std::string json = chibound::io::write_certificate(doc);
    std::cout << json;
    if (!cert_path.empty()) write_output(cert_path, json);
    std::cerr << "omega=" << outcome.omega << " k=" << outcome.k << " strategy="
              << chibound::strategy_name(outcome.strategy) << " colours="
              << outcome.colouring.colours_used << " bound=" << outcome.bound << "\n";
    return 0;
}

int cmd_verify(const std::string& input, const std::string& format,
               const std::string& cert_path) {
    chibound::Graph g;
    chibound::io::CertificateDocument doc;
    try {
        g = load_graph(input, format);
        doc = chibound::io::parse_certificate(read_input(cert_path));
    } catch (const chibound::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    auto reject = [](const std::string& why) {
        std::cerr << "verification failed: " << why << "\n";
        return 1;
    };
    if (doc.n != g.order()) return reject("vertex count mismatch");
    if (!doc.in_class) return reject("certificate does not claim class membership");
    chibound::Colouring c{doc.colouring, doc.colours_used};
    auto check = chibound::oracle::verify_colouring(g, c);
    if (!check.proper)
        return reject("monochromatic edge (" + std::to_string(check.offending_edge.first) + ","
                      + std::to_string(check.offending_edge.second) + ")");
    int omega = chibound::max_clique(g).count();
    if (doc.omega != omega)
        return reject("certificate omega " + std::to_string(doc.omega) + " but graph has omega "
                      + std::to_string(omega));
    if (doc.bound != chibound::theorem_bound(omega)) return reject("bound claim mismatch");
    if (doc.colours_used > doc.bound) return reject("colours exceed bound");
    std::cerr << "certificate verified: " << doc.colours_used << " colours within bound "
              << doc.bound << "\n";
    return 0;
}

int cmd_oracle(const std::string& input, const std::string& format, const std::string& what) {
    chibound::Graph g;
    try {
        g = load_graph(input, format);
    } catch (const chibound::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    try {
        int value = 0;
        if (what == "chi")
            value = chibound::oracle::chromatic_number_exact(g, -1, &g_cancel);
        else
            value = chibound::oracle::max_clique_bruteforce(g);
        std::cout << value << "\n";
        return 0;
    } catch (const chibound::size_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int cmd_gen(const std::string& name, int n, double p, uint64_t seed, const std::string& out) {
    chibound::Graph g;
    if (name == "grotzsch") {
        g = chibound::grotzsch();
    } else if (name == "schlafli") {
        g = chibound::schlafli_complement();
    } else if (name == "h") {
        g = chibound::h_n(n);
    } else if (name == "random") {
        g = chibound::random_in_class(n, p, seed);
    } else if (name == "cograph") {
        g = chibound::random_cograph(n, seed);
    } else {
        std::cerr << "unknown generator '" << name
                  << "' (expected grotzsch|schlafli|h|random|cograph)\n";
        return 2;
    }
    std::string record = chibound::io::write_graph6(g) + "\n";
    if (out.empty()) std::cout << record;
    else write_output(out, record);
    std::cerr << "generated " << name << ": n=" << g.order() << " m=" << g.edge_count() << "\n";
    return 0;
}

int cmd_fuzz(int max_n, double p, long count, uint64_t seed, int jobs) {
    chibound::FuzzOptions opt;
    opt.max_n = max_n;
    opt.p = p;
    opt.count = count;
    opt.seed = seed;
    opt.jobs = jobs;
    opt.cancel = &g_cancel;
    auto report = chibound::run_fuzz(opt);
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["instances"] = report.instances;
    j["oracle_checked"] = report.oracle_checked;
    nlohmann::ordered_json strategies = nlohmann::ordered_json::object();
    for (auto& [name, hits] : report.strategy_counts) strategies[name] = hits;
    j["strategies"] = strategies;
    nlohmann::ordered_json omegas = nlohmann::ordered_json::object();
    for (auto& [omega, hits] : report.omega_counts) omegas[std::to_string(omega)] = hits;
    j["omega"] = omegas;
    j["theory_violations"] = report.theory_violations;
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (auto& v : report.violations)
        violations.push_back({{"index", v.index}, {"message", v.message}});
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
    std::cerr << "fuzz: " << report.instances << " instances, " << report.violations.size()
              << " violations, " << report.theory_violations << " theory violations\n";
    if (report.theory_violations > 0) return 3;
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);
    CLI::App app{"recognise and colour (P2 u P4, diamond)-free graphs with certificates"};
    app.require_subcommand(1);

    std::string input = "-", format = "graph6", cert_path, what = "chi", gen_name, out_path;
    int n = 12, jobs = 1, max_n = 14;
    double p = 0.5, fuzz_p = -1.0;
    long count = 100;
    uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "test class membership");
    check->add_option("input", input, "graph file or - for stdin");
    check->add_option("--format", format, "graph6 or dimacs")
        ->check(CLI::IsMember({"graph6", "dimacs"}));

    auto* color = app.add_subcommand("color", "colour within the clique-number bound");
    color->add_option("input", input);
    color->add_option("--format", format)->check(CLI::IsMember({"graph6", "dimacs"}));
    color->add_option("--emit-certificate", cert_path, "also write the certificate here");

    auto* verify = app.add_subcommand("verify", "re-check a certificate against a graph");
    verify->add_option("input", input)->required();
    verify->add_option("certificate", cert_path)->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"graph6", "dimacs"}));

    auto* oracle = app.add_subcommand("oracle", "exact brute-force chi or omega");
    oracle->add_option("input", input);
    oracle->add_option("--what", what)->check(CLI::IsMember({"chi", "omega"}));
    oracle->add_option("--format", format)->check(CLI::IsMember({"graph6", "dimacs"}));

    auto* gen = app.add_subcommand("gen", "emit a named graph as graph6");
    gen->add_option("name", gen_name, "grotzsch|schlafli|h|random|cograph")->required();
    gen->add_option("--n", n, "order parameter (h, random, cograph)");
    gen->add_option("--p", p, "edge probability (random)");
    gen->add_option("--seed", seed, "PRNG seed (random, cograph)");
    gen->add_option("--out", out_path, "write to file instead of stdout");

    auto* fuzz = app.add_subcommand("fuzz", "random in-class instances through the full pipeline");
    fuzz->add_option("--n", max_n, "maximum instance order");
    fuzz->add_option("--p", fuzz_p, "fixed edge probability; omit for a grid");
    fuzz->add_option("--count", count, "number of instances");
    fuzz->add_option("--seed", seed, "master seed");
    fuzz->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(input, format);
        if (app.got_subcommand(color)) return cmd_color(input, format, cert_path);
        if (app.got_subcommand(verify)) return cmd_verify(input, format, cert_path);
        if (app.got_subcommand(oracle)) return cmd_oracle(input, format, what);
        if (app.got_subcommand(gen)) return cmd_gen(gen_name, n, p, seed, out_path);
        if (app.got_subcommand(fuzz)) return cmd_fuzz(max_n, fuzz_p, count, seed, jobs);
    } catch (const chibound::theory_violation& e) {
        std::cerr << "theory violation: " << e.what() << "\n";
        return 3;
    } catch (const chibound::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
