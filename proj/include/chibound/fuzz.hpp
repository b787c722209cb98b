#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "chibound/engine.hpp"
#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"

namespace chibound {

// Whole-pipeline fuzz: generate an in-class instance, colour it, verify the
// colouring, the bound, the omega >= 4 equality, and (small instances) the
// exact oracle agreement.
struct FuzzOptions {
    int max_n = 14;     // instance sizes are drawn from 4..max_n
    double p = -1.0;    // fixed edge probability; negative means a per-instance grid
    long count = 100;
    uint64_t seed = 1;
    int jobs = 1;
    int oracle_limit = 16; // exact-chi comparison only at or below this order
    bool with_oracle = true;
    const std::atomic<bool>* cancel = nullptr;
};

struct FuzzViolation {
    long index;
    std::string message;
};

struct FuzzReport {
    long instances = 0;
    long oracle_checked = 0;
    std::map<std::string, long> strategy_counts;
    std::map<int, long> omega_counts;
    long theory_violations = 0;
    std::vector<FuzzViolation> violations; // capped at 32 entries

    bool ok() const { return theory_violations == 0 && violations.empty(); }

    void merge(const FuzzReport& other) {
        instances += other.instances;
        oracle_checked += other.oracle_checked;
        for (auto& [k, v] : other.strategy_counts) strategy_counts[k] += v;
        for (auto& [k, v] : other.omega_counts) omega_counts[k] += v;
        theory_violations += other.theory_violations;
        for (auto& v : other.violations)
            if (violations.size() < 32) violations.push_back(v);
    }
};

namespace detail {

inline void fuzz_one(const FuzzOptions& opt, long index, FuzzReport& report) {
    Xorshift64Star rng(derive_seed(opt.seed, uint64_t(index)));
    int span = std::max(1, opt.max_n - 3);
    int n = std::min(opt.max_n, 4 + int(rng.next_below(uint64_t(span))));
    double p = opt.p >= 0.0 ? opt.p : double(1 + rng.next_below(19)) / 20.0;
    uint64_t gseed = rng.next();

    auto fail = [&](const std::string& msg) {
        if (report.violations.size() < 32)
            report.violations.push_back({index, "n=" + std::to_string(n) + " p="
                                                    + std::to_string(p) + " seed="
                                                    + std::to_string(gseed) + ": " + msg});
    };

    Graph g = random_in_class(n, p, gseed);
    ++report.instances;
    auto verdict = class_membership(g);
    if (!verdict.in_class) {
        fail("generator emitted an out-of-class graph");
        return;
    }
    StrategyOutcome outcome;
    try {
        outcome = colour(g);
    } catch (const theory_violation& e) {
        ++report.theory_violations;
        fail(std::string("theory violation: ") + e.what());
        return;
    } catch (const std::exception& e) {
        fail(std::string("engine error: ") + e.what());
        return;
    }
    report.strategy_counts[strategy_name(outcome.strategy)]++;
    report.omega_counts[outcome.omega]++;

    auto check = oracle::verify_colouring(g, outcome.colouring);
    if (!check.proper) {
        fail("improper colouring");
        return;
    }
    if (outcome.bound != theorem_bound(outcome.omega)
        || outcome.colouring.colours_used > outcome.bound) {
        fail("bound violated: " + std::to_string(outcome.colouring.colours_used) + " > "
             + std::to_string(outcome.bound));
        return;
    }
    if (outcome.omega >= 4 && outcome.colouring.colours_used != outcome.omega) {
        fail("omega >= 4 requires exactly omega colours");
        return;
    }
    if (opt.with_oracle && n <= opt.oracle_limit) {
        ++report.oracle_checked;
        int bf_omega = oracle::max_clique_bruteforce(g);
        if (bf_omega != outcome.omega) {
            fail("clique number disagreement: engine " + std::to_string(outcome.omega)
                 + ", oracle " + std::to_string(bf_omega));
            return;
        }
        int chi = oracle::chromatic_number_exact(g, -1, opt.cancel);
        if (chi > outcome.colouring.colours_used) {
            fail("exact chi " + std::to_string(chi) + " exceeds colours used");
            return;
        }
        if (outcome.omega >= 4 && chi != outcome.omega) {
            fail("exact chi disagrees with omega");
            return;
        }
    }
}

} // namespace detail

inline FuzzReport run_fuzz(const FuzzOptions& opt) {
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        FuzzReport report;
        for (long i = 0; i < opt.count; ++i) {
            if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) break;
            detail::fuzz_one(opt, i, report);
        }
        return report;
    }
    std::vector<FuzzReport> partial;
    partial.resize(size_t(jobs));
    std::vector<std::thread> workers;
    std::atomic<long> next{0};
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            while (true) {
                long i = next.fetch_add(1);
                if (i >= opt.count) break;
                if (opt.cancel && opt.cancel->load(std::memory_order_relaxed)) break;
                detail::fuzz_one(opt, i, partial[size_t(w)]);
            }
        });
    for (auto& t : workers) t.join();
    FuzzReport report;
    for (auto& p : partial) report.merge(p);
    return report;
}

} // namespace chibound
