#pragma once

// The pair (M, nu) as total, deterministic, instrumented functions. An
// override layer sits in front of the base definition; counters track how
// often each side is consulted.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "zxprime/division.hpp"
#include "zxprime/modpoly.hpp"
#include "zxprime/oracle_spec.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

class Oracle {
  public:
    using MembershipFn = std::function<bool(const Poly&)>;
    using CompanionFn = std::function<Poly(const Poly&)>;

    Oracle(MembershipFn m, CompanionFn nu) : base_m_(std::move(m)), base_nu_(std::move(nu)) {}

    bool membership(const Poly& f) {
        ++m_calls_;
        if (auto it = m_over_.find(f); it != m_over_.end()) return it->second;
        return base_m_(f);
    }

    Poly nu(const Poly& f) {
        ++nu_calls_;
        if (auto it = nu_over_.find(f); it != nu_over_.end()) return it->second;
        return base_nu_(f);
    }

    // The returned oracle differs only at the key; counters start fresh.
    Oracle with_membership_override(const Poly& key, bool value) const {
        Oracle o = *this;
        o.m_over_[key] = value;
        o.m_calls_ = o.nu_calls_ = 0;
        return o;
    }

    Oracle with_nu_override(const Poly& key, const Poly& value) const {
        Oracle o = *this;
        o.nu_over_[key] = value;
        o.m_calls_ = o.nu_calls_ = 0;
        return o;
    }

    std::uint64_t membership_calls() const { return m_calls_; }
    std::uint64_t nu_calls() const { return nu_calls_; }

  private:
    MembershipFn base_m_;
    CompanionFn base_nu_;
    std::map<Poly, bool> m_over_;
    std::map<Poly, Poly> nu_over_;
    std::uint64_t m_calls_ = 0;
    std::uint64_t nu_calls_ = 0;
};

namespace detail {

// nu for <p, g>: lift of the inverse of f in F_p[x]/(g) when the extended
// gcd reaches 1, the zero polynomial otherwise. Totality over usefulness.
inline Poly pg_companion(const Poly& f, const Integer& p, const ModPoly& gbar) {
    ModPoly fbar = mod_reduce(f, p);
    if (gbar.degree() && *gbar.degree() >= 1) fbar = modpoly_divrem(fbar, gbar).remainder;
    if (fbar.is_zero()) return Poly();
    ModExtGcd e = modpoly_ext_gcd(fbar, gbar);
    if (e.g.degree() != std::optional<std::size_t>(0) || e.g.leading_coefficient() != 1)
        return Poly();
    if (e.s.degree() && gbar.degree() && *gbar.degree() >= 1)
        return modpoly_divrem(e.s, gbar).remainder.lift();
    return e.s.lift();
}

}  // namespace detail

inline Oracle build_oracle(const OracleSpec& spec) {
    Oracle::MembershipFn m;
    Oracle::CompanionFn nu;
    switch (spec.kind) {
        case OracleKind::pg_ideal: {
            Integer p = spec.p;
            ModPoly gbar = mod_reduce(spec.g, p);
            m = [p, gbar](const Poly& f) {
                ModPoly fbar = mod_reduce(f, p);
                if (fbar.is_zero()) return true;
                return modpoly_divrem(fbar, gbar).remainder.is_zero();
            };
            nu = [p, gbar](const Poly& f) { return detail::pg_companion(f, p, gbar); };
            break;
        }
        case OracleKind::principal: {
            Poly g = spec.g;
            m = [g](const Poly& f) { return divides_exactly(g, f); };
            Poly dn = spec.default_nu;
            nu = [dn](const Poly&) { return dn; };
            break;
        }
        case OracleKind::constant: {
            bool v = spec.value;
            m = [v](const Poly&) { return v; };
            Poly dn = spec.default_nu;
            nu = [dn](const Poly&) { return dn; };
            break;
        }
        case OracleKind::table: {
            std::map<Poly, bool> table;
            for (const auto& member : spec.members) table[member] = true;
            bool dflt = spec.table_default;
            m = [table, dflt](const Poly& f) {
                auto it = table.find(f);
                return it != table.end() ? it->second : dflt;
            };
            Poly dn = spec.default_nu;
            nu = [dn](const Poly&) { return dn; };
            break;
        }
    }
    Oracle o(std::move(m), std::move(nu));
    for (const auto& ov : spec.overrides) {
        o = ov.targets_membership ? o.with_membership_override(ov.key, ov.bool_value)
                                  : o.with_nu_override(ov.key, ov.poly_value);
    }
    return o;
}

}  // namespace zxprime
