// Command-line front end. Exit codes: 0 prime/success, 2 not-maximal or
// verification failure, 1 usage/IO/parse errors.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zxprime/zxprime.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_negative = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

zxprime::OracleSpec load_oracle(const std::string& path) {
    return zxprime::parse_oracle_spec(read_file(path));
}

int cmd_run(const std::string& oracle_path, const std::string& cert_path, bool json) {
    zxprime::Oracle oracle = zxprime::build_oracle(load_oracle(oracle_path));
    zxprime::Outcome outcome = zxprime::maxzx(oracle);
    if (!cert_path.empty()) {
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot write " + cert_path);
        out << zxprime::serialize_certificate(outcome.certificate) << "\n";
    }
    if (json)
        std::cout << zxprime::serialize_certificate(outcome.certificate) << "\n";
    else
        std::cout << zxprime::describe_outcome(outcome) << "\n";
    return outcome.is_prime() ? exit_ok : exit_negative;
}

int cmd_search(const std::string& oracle_path, std::uint64_t limit, bool json) {
    zxprime::Oracle oracle = zxprime::build_oracle(load_oracle(oracle_path));
    auto found = zxprime::unbounded_search(oracle, limit);
    if (json) {
        nlohmann::json j;
        j["found"] = found ? nlohmann::json(found->get_str()) : nlohmann::json(nullptr);
        j["membership_calls"] = oracle.membership_calls();
        std::cout << j.dump(2) << "\n";
    } else if (found) {
        std::cout << "prime: " << found->get_str() << " (" << oracle.membership_calls()
                  << " membership calls)\n";
    } else {
        std::cout << "none within " << limit << " (" << oracle.membership_calls()
                  << " membership calls)\n";
    }
    return found ? exit_ok : exit_negative;
}

int cmd_verify(const std::string& oracle_path, const std::string& cert_path, bool json) {
    zxprime::Oracle oracle = zxprime::build_oracle(load_oracle(oracle_path));
    zxprime::Certificate cert = zxprime::deserialize_certificate(read_file(cert_path));
    zxprime::VerifyReport report = zxprime::verify_certificate(oracle, cert);
    if (json) {
        nlohmann::json j;
        j["overall"] = report.overall ? "pass" : "fail";
        j["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks)
            j["checks"].push_back(
                {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks)
            std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "fail") << " ("
                      << c.detail << ")\n";
        std::cout << "overall: " << (report.overall ? "pass" : "fail") << "\n";
    }
    return report.overall ? exit_ok : exit_negative;
}

int cmd_bench(const std::string& list_path, int repeat, std::uint64_t limit, bool json) {
    std::vector<zxprime::NamedOracleSpec> specs;
    std::istringstream lines(read_file(list_path));
    std::filesystem::path base = std::filesystem::path(list_path).parent_path();
    std::string line;
    while (std::getline(lines, line)) {
        std::string name(zxprime::detail::trim_view(line));
        if (name.empty() || name[0] == '#') continue;
        std::filesystem::path p(name);
        if (p.is_relative()) p = base / p;
        specs.push_back({name, load_oracle(p.string())});
    }
    auto results = zxprime::run_bench(specs, repeat, limit);
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results)
            j.push_back({{"instance", r.instance},
                         {"method", r.method},
                         {"outcome", r.outcome},
                         {"m_calls", r.m_calls},
                         {"nu_calls", r.nu_calls},
                         {"wall_ms", r.wall_ms}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << std::left << std::setw(28) << "instance" << std::setw(8) << "method"
                  << std::setw(11) << "m_calls" << std::setw(11) << "nu_calls" << std::setw(12)
                  << "wall_ms" << "outcome\n";
        for (const auto& r : results)
            std::cout << std::left << std::setw(28) << r.instance << std::setw(8) << r.method
                      << std::setw(11) << r.m_calls << std::setw(11) << r.nu_calls
                      << std::setw(12) << std::fixed << std::setprecision(3) << r.wall_ms
                      << r.outcome << "\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"witness-producing engine for prime extraction from ideal oracles over Z[x]"};
    app.require_subcommand(1);

    std::string oracle_path, cert_path, list_path;
    std::uint64_t limit = 0;
    int repeat = 1;
    bool json = false;
    bool empty_oracle = false;

    auto* run = app.add_subcommand("run", "run the engine on an oracle file");
    run->add_option("--oracle", oracle_path, "oracle spec file")->required();
    run->add_option("--cert", cert_path, "write the run certificate here");
    run->add_flag("--json", json, "print the certificate as JSON");

    auto* search = app.add_subcommand("search", "test primes in increasing order");
    search->add_option("--oracle", oracle_path, "oracle spec file")->required();
    search->add_option("--limit", limit, "number of primes to try (0 = unbounded)");
    search->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "check a certificate against an oracle");
    verify->add_option("--oracle", oracle_path, "oracle spec file")->required();
    verify->add_option("--cert", cert_path, "certificate file")->required();
    verify->add_flag("--json", json, "machine-readable output");

    auto* bench = app.add_subcommand("bench", "compare engine and search over a spec list");
    bench->add_option("--list", list_path, "file with one oracle path per line")->required();
    bench->add_option("--repeat", repeat, "average wall time over this many runs");
    bench->add_option("--limit", limit, "search prime budget per instance")
        ->default_val(std::uint64_t{100000});
    bench->add_flag("--json", json, "machine-readable output");

    auto* repl = app.add_subcommand("repl", "interactive refinement loop");
    repl->add_option("--oracle", oracle_path, "oracle spec file to start from");
    repl->add_flag("--empty", empty_oracle,
                   "start from the constant-false oracle with nu = 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_error;
    }

    try {
        if (run->parsed()) return cmd_run(oracle_path, cert_path, json);
        if (search->parsed()) return cmd_search(oracle_path, limit, json);
        if (verify->parsed()) return cmd_verify(oracle_path, cert_path, json);
        if (bench->parsed()) return cmd_bench(list_path, repeat, limit, json);
        if (repl->parsed()) {
            zxprime::OracleSpec spec;
            if (empty_oracle) {
                spec.kind = zxprime::OracleKind::constant;
                spec.value = false;
                spec.default_nu = zxprime::Poly(1);
            } else if (!oracle_path.empty()) {
                spec = load_oracle(oracle_path);
            } else {
                std::cerr << "error: repl needs --oracle or --empty\n";
                return exit_error;
            }
            return zxprime::run_repl(std::cin, std::cout, spec);
        }
    } catch (const zxprime::CertificateFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const zxprime::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
