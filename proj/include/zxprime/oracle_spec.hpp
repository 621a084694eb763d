#pragma once

// Oracle specification files: one key=value per line, '#' comments, plus
// override lines ("override M: <poly> = tt|ff", "override nu: <poly> = <poly>").

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxprime/integer.hpp"
#include "zxprime/modpoly.hpp"
#include "zxprime/parser.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

enum class OracleKind { pg_ideal, principal, constant, table };

struct OverrideEntry {
    bool targets_membership = true;  // false: targets nu
    Poly key;
    bool bool_value = false;
    Poly poly_value;
};

struct OracleSpec {
    OracleKind kind = OracleKind::constant;
    Integer p;                   // pg_ideal
    Poly g;                      // pg_ideal, principal
    bool value = false;          // constant
    Poly default_nu;             // all kinds; nu outside any override
    std::vector<Poly> members;   // table
    bool table_default = false;  // table
    std::vector<OverrideEntry> overrides;
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool parse_bool_token(std::string_view v, std::size_t offset) {
    if (v == "tt") return true;
    if (v == "ff") return false;
    throw ParseError("expected tt or ff, got '" + std::string(v) + "'", offset);
}

}  // namespace detail

inline OracleSpec parse_oracle_spec(std::string_view text) {
    OracleSpec spec;
    std::optional<std::string> kind_str;
    std::optional<Integer> p;
    std::optional<Poly> g;
    std::optional<bool> value;
    std::optional<Poly> nu;
    std::optional<std::vector<Poly>> members;
    std::optional<bool> table_default;

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t eol = text.find('\n', line_start);
        std::string_view raw = text.substr(
            line_start, eol == std::string_view::npos ? std::string_view::npos : eol - line_start);
        std::size_t offset = line_start;
        line_start = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim_view(line);
        if (line.empty()) continue;

        if (line.substr(0, 8) == "override") {
            std::string_view rest = detail::trim_view(line.substr(8));
            std::size_t colon = rest.find(':');
            if (colon == std::string_view::npos)
                throw ParseError("override line missing ':'", offset);
            std::string_view target = detail::trim_view(rest.substr(0, colon));
            std::string_view body = rest.substr(colon + 1);
            std::size_t eq = body.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("override line missing '='", offset);
            Poly key = parse_poly(detail::trim_view(body.substr(0, eq)));
            std::string_view val = detail::trim_view(body.substr(eq + 1));
            OverrideEntry entry;
            entry.key = key;
            if (target == "M") {
                entry.targets_membership = true;
                entry.bool_value = detail::parse_bool_token(val, offset);
            } else if (target == "nu") {
                entry.targets_membership = false;
                entry.poly_value = parse_poly(val);
            } else {
                throw ParseError("override target must be M or nu", offset);
            }
            spec.overrides.push_back(std::move(entry));
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", offset);
        std::string key(detail::trim_view(line.substr(0, eq)));
        std::string_view val = detail::trim_view(line.substr(eq + 1));

        if (key == "kind") {
            kind_str = std::string(val);
        } else if (key == "p") {
            p = Integer(std::string(val), 10);
        } else if (key == "g") {
            g = parse_poly(val);
        } else if (key == "value") {
            value = detail::parse_bool_token(val, offset);
        } else if (key == "nu") {
            nu = parse_poly(val);
        } else if (key == "members") {
            std::vector<Poly> list;
            std::size_t start = 0;
            std::string vs(val);
            while (start <= vs.size()) {
                std::size_t semi = vs.find(';', start);
                std::string_view item = detail::trim_view(
                    std::string_view(vs).substr(start, semi == std::string::npos
                                                           ? std::string::npos
                                                           : semi - start));
                if (!item.empty()) list.push_back(parse_poly(item));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            members = std::move(list);
        } else if (key == "default") {
            table_default = detail::parse_bool_token(val, offset);
        } else {
            throw ParseError("unknown key '" + key + "'", offset);
        }
    }

    if (!kind_str) throw ParseError("missing required key 'kind'", 0);
    spec.default_nu = nu.value_or(Poly());

    if (*kind_str == "pg_ideal") {
        spec.kind = OracleKind::pg_ideal;
        if (!p) throw ParseError("pg_ideal requires key 'p'", 0);
        if (!g) throw ParseError("pg_ideal requires key 'g'", 0);
        if (!int_is_prime(*p) || *p < 2) throw ParseError("p must be prime", 0);
        if (mod_reduce(*g, *p).is_zero()) throw ParseError("g vanishes mod p", 0);
        spec.p = *p;
        spec.g = *g;
    } else if (*kind_str == "principal") {
        spec.kind = OracleKind::principal;
        if (!g) throw ParseError("principal requires key 'g'", 0);
        spec.g = *g;
    } else if (*kind_str == "constant") {
        spec.kind = OracleKind::constant;
        if (!value) throw ParseError("constant requires key 'value'", 0);
        spec.value = *value;
    } else if (*kind_str == "table") {
        spec.kind = OracleKind::table;
        spec.members = members.value_or(std::vector<Poly>{});
        spec.table_default = table_default.value_or(false);
    } else {
        throw ParseError("unknown kind '" + *kind_str + "'", 0);
    }
    return spec;
}

}  // namespace zxprime
