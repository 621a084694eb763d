#pragma once

// Side-by-side cost of the engine and the prime search on the same oracle
// specs. Each run gets a fresh oracle instance, so the counters are the
// per-run totals.

#include <chrono>
#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "zxprime/engine.hpp"
#include "zxprime/oracle.hpp"
#include "zxprime/oracle_spec.hpp"
#include "zxprime/parser.hpp"

namespace zxprime {

struct BenchResult {
    std::string instance;
    std::string method;  // "maxzx" or "search"
    std::string outcome;
    std::uint64_t m_calls = 0;
    std::uint64_t nu_calls = 0;
    double wall_ms = 0.0;
};

struct NamedOracleSpec {
    std::string name;
    OracleSpec spec;
};

namespace detail {

template <class Run>
BenchResult bench_one(const std::string& instance, const std::string& method,
                      const OracleSpec& spec, int repeat, Run run) {
    BenchResult r;
    r.instance = instance;
    r.method = method;
    double total_ms = 0.0;
    for (int i = 0; i < repeat; ++i) {
        Oracle o = build_oracle(spec);
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.outcome = run(o);
        } catch (const std::exception& e) {
            r.outcome = std::string("error: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        r.m_calls = o.membership_calls();
        r.nu_calls = o.nu_calls();
    }
    r.wall_ms = total_ms / repeat;
    return r;
}

}  // namespace detail

inline std::vector<BenchResult> run_bench(const std::vector<NamedOracleSpec>& specs,
                                          int repeat = 1, std::uint64_t search_limit = 100000,
                                          const EngineLimits& limits = {}) {
    if (repeat < 1) repeat = 1;
    std::vector<BenchResult> out;
    for (const auto& item : specs) {
        out.push_back(detail::bench_one(item.name, "maxzx", item.spec, repeat, [&](Oracle& o) {
            Outcome r = maxzx(o, limits);
            return r.is_prime() ? "prime: " + r.prime().get_str()
                                : "not-maximal: " + describe_evidence(r.evidence());
        }));
        out.push_back(detail::bench_one(item.name, "search", item.spec, repeat, [&](Oracle& o) {
            auto p = unbounded_search(o, search_limit);
            return p ? "prime: " + p->get_str()
                     : "none within " + std::to_string(search_limit);
        }));
    }
    return out;
}

}  // namespace zxprime
