#pragma once

// The interactive refinement loop: run the engine, read off the evidence,
// patch M or nu at the offending points, run again. Session overrides are
// kept in the spec itself, so a session is reproducible as an oracle file
// with the same override lines.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "zxprime/certificate.hpp"
#include "zxprime/engine.hpp"
#include "zxprime/oracle.hpp"
#include "zxprime/oracle_spec.hpp"
#include "zxprime/parser.hpp"

namespace zxprime {

namespace detail {

inline std::string strip(const std::string& s) {
    return std::string(trim_view(s));
}

}  // namespace detail

inline std::string describe_outcome(const Outcome& outcome) {
    return outcome.is_prime() ? "prime: " + outcome.prime().get_str()
                              : "not-maximal: " + describe_evidence(outcome.evidence());
}

inline int run_repl(std::istream& in, std::ostream& out, OracleSpec base,
                    const EngineLimits& limits = {}) {
    OracleSpec current = base;
    std::optional<Certificate> last_cert;
    std::string line;
    out << "commands: run | set M <poly> = tt|ff | set nu <poly> = <poly> | "
           "show overrides | show cert | save cert <path> | reset | quit\n";
    while (out << "zx> " << std::flush, std::getline(in, line)) {
        std::string cmd = detail::strip(line);
        if (cmd.empty()) continue;
        try {
            if (cmd == "quit" || cmd == "exit") {
                return 0;
            } else if (cmd == "run") {
                Oracle o = build_oracle(current);
                Outcome outcome = maxzx(o, limits);
                out << describe_outcome(outcome) << "\n";
                last_cert = outcome.certificate;
            } else if (cmd == "reset") {
                current = base;
                last_cert.reset();
                out << "overrides cleared\n";
            } else if (cmd == "show overrides") {
                if (current.overrides.empty()) out << "(none)\n";
                for (const auto& ov : current.overrides) {
                    if (ov.targets_membership)
                        out << "override M: " << format_poly(ov.key) << " = "
                            << (ov.bool_value ? "tt" : "ff") << "\n";
                    else
                        out << "override nu: " << format_poly(ov.key) << " = "
                            << format_poly(ov.poly_value) << "\n";
                }
            } else if (cmd == "show cert") {
                if (last_cert)
                    out << serialize_certificate(*last_cert) << "\n";
                else
                    out << "no run yet\n";
            } else if (cmd.rfind("save cert", 0) == 0) {
                if (!last_cert) {
                    out << "no run yet\n";
                    continue;
                }
                std::string path = detail::strip(cmd.substr(9));
                if (path.empty()) {
                    out << "error: save cert needs a path\n";
                    continue;
                }
                std::ofstream file(path);
                if (!file) {
                    out << "error: cannot write " << path << "\n";
                    continue;
                }
                file << serialize_certificate(*last_cert) << "\n";
                out << "saved " << path << "\n";
            } else if (cmd.rfind("set", 0) == 0) {
                std::istringstream words(cmd);
                std::string kw, target;
                words >> kw >> target;
                std::string rest;
                std::getline(words, rest);
                std::size_t eq = rest.find('=');
                if ((target != "M" && target != "nu") || eq == std::string::npos) {
                    out << "error: expected 'set M <poly> = tt|ff' or 'set nu <poly> = <poly>'\n";
                    continue;
                }
                Poly key = parse_poly(detail::strip(rest.substr(0, eq)));
                std::string value = detail::strip(rest.substr(eq + 1));
                OverrideEntry entry;
                entry.key = key;
                if (target == "M") {
                    entry.targets_membership = true;
                    entry.bool_value = detail::parse_bool_token(value, 0);
                } else {
                    entry.targets_membership = false;
                    entry.poly_value = parse_poly(value);
                }
                current.overrides.push_back(std::move(entry));
                out << "ok\n";
            } else {
                out << "error: unknown command '" << cmd << "'\n";
            }
        } catch (const std::exception& e) {
            out << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

}  // namespace zxprime
