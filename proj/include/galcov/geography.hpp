#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "galcov/cover_engine.hpp"
#include "galcov/families.hpp"
#include "galcov/render.hpp"

namespace galcov {

// Geographic invariants of a (c1^2, c2) pair, all exact. The signature is
// stored as a rational: its integrality is a derived sanity signal on
// intermediate covers, not an assumption.
struct GeographyReport {
    ChernPair chern;
    Rational signature;            // (c1^2 - 2 c2) / 3
    std::optional<Rational> slope; // c1^2 / c2, absent when c2 = 0
    BigInt chi_times_12;           // c1^2 + c2
    bool bmy_ok = false;           // c1^2 <= 3 c2
    bool noether_line_ok = false;  // 5 c1^2 >= c2 - 36
    bool nonneg_ok = false;        // c1^2 >= 0 and c2 >= 0
    bool noether_mod12_ok = false; // 12 | c1^2 + c2
};

inline GeographyReport geography(const ChernPair& c) {
    GeographyReport g;
    g.chern = c;
    g.signature = Rational(c.c1sq - 2 * c.c2, 3);
    if (c.c2 != 0) {
        g.slope = Rational(c.c1sq, c.c2);
    }
    g.chi_times_12 = c.c1sq + c.c2;
    g.bmy_ok = c.c1sq <= 3 * c.c2;
    g.noether_line_ok = 5 * c.c1sq >= c.c2 - 36;
    g.nonneg_ok = c.c1sq >= 0 && c.c2 >= 0;
    g.noether_mod12_ok = g.chi_times_12 % 12 == 0;
    return g;
}

// Diagnostic names for every failed geography check. The mod-12 entry is
// warning-level: smoothness of intermediate covers is not guaranteed.
inline std::vector<std::string> diagnostic_flags(const GeographyReport& g) {
    std::vector<std::string> flags;
    if (!g.nonneg_ok) {
        flags.push_back("negative-chern(c1sq=" + g.chern.c1sq.str() + ", c2=" + g.chern.c2.str() + ")");
    }
    if (!g.bmy_ok) {
        flags.push_back("bmy-violated(c1sq=" + g.chern.c1sq.str() + ", 3c2="
                        + BigInt(3 * g.chern.c2).str() + ")");
    }
    if (!g.noether_line_ok) {
        flags.push_back("noether-line-violated(5c1sq=" + BigInt(5 * g.chern.c1sq).str()
                        + ", c2-36=" + BigInt(g.chern.c2 - 36).str() + ")");
    }
    if (!g.noether_mod12_ok) {
        flags.push_back("noether-mod12-warning(c1sq+c2=" + g.chi_times_12.str() + ")");
    }
    return flags;
}

// Flags for covers whose published example values disagree with what the
// formulas produce. Keyed on the exact input data, so raw `compute` runs on
// the same numbers are flagged too.
inline std::vector<std::string> published_value_flags(const BranchData& x, const BigInt& k,
                                                      const GeographyReport& geo) {
    std::vector<std::string> flags;
    const BigInt kk = effective_k(x.n, k);
    if (x == BranchData{4, 12, 36, 24, 12} && kk == 3) {
        flags.push_back("paper-example-3.3-c2-discrepancy(printed=240, computed="
                        + geo.chern.c2.str() + ")");
    }
    if (x == BranchData{9, 18, 12, 42, 84} && kk == 4 && geo.slope) {
        flags.push_back("paper-slope-2.73-unreproduced(computed=" + decimal_str(*geo.slope, 4) + ")");
    }
    return flags;
}

// One closed-vs-recursion mismatch flag per disagreeing component. None of
// these are ever expected; a non-empty result is a finding.
inline std::vector<std::string> mismatch_flags(const CrossCheckedChern& cc) {
    std::vector<std::string> flags;
    if (cc.closed.c1sq != cc.oracle.c1sq) {
        flags.push_back("closed-oracle-mismatch(c1sq: closed=" + cc.closed.c1sq.str()
                        + ", oracle=" + cc.oracle.c1sq.str() + ")");
    }
    if (cc.closed.c2 != cc.oracle.c2) {
        flags.push_back("closed-oracle-mismatch(c2: closed=" + cc.closed.c2.str()
                        + ", oracle=" + cc.oracle.c2.str() + ")");
    }
    return flags;
}

enum class KPolicy { AllK, FixedK };

struct ScanOptions {
    KPolicy policy = KPolicy::AllK;
    BigInt fixed_k = 1;
    int threads = 1;
};

struct ScanRow {
    std::string label;
    BranchData data;
    BigInt k;
    GeographyReport geo;
    std::vector<std::string> flags;
};

// Per-instance signature summary. sign_change_k is the first k whose
// signature is positive after being negative at some smaller k — the
// negative-to-positive crossing. (X_1 = X itself may start positive, so
// "first positive" alone would be degenerate.)
struct InstanceSummary {
    std::string label;
    BigInt n;
    std::optional<BigInt> sign_change_k;
    std::optional<Rational> crossing_ratio; // k* / n
};

struct MaxSlope {
    std::string label;
    BigInt k;
    Rational slope;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<InstanceSummary> instances;
    std::optional<MaxSlope> max_slope;
};

namespace detail {

inline ScanRow scan_row(const FamilyInstance& inst, const BigInt& k) {
    const CrossCheckedChern cc = chern(inst.branch, k);
    // The recursion is ground truth on disagreement; the flag records it.
    const ChernPair value = cc.agree ? cc.closed : cc.oracle;
    const GeographyReport geo = geography(value);
    std::vector<std::string> flags = mismatch_flags(cc);
    for (auto& f : published_value_flags(inst.branch, k, geo)) {
        flags.push_back(std::move(f));
    }
    return {inst.label, inst.branch, k, geo, std::move(flags)};
}

} // namespace detail

// Evaluates every (instance, k) pair. Rows are ordered by (instance order,
// k ascending) regardless of thread count: jobs are laid out up front and
// workers write into their own slots.
inline ScanResult scan(const std::vector<FamilyInstance>& instances, const ScanOptions& options) {
    if (options.threads < 1) {
        throw InvalidParameter("thread count must be >= 1");
    }
    struct Job {
        std::size_t instance;
        BigInt k;
    };
    std::vector<Job> jobs;
    std::vector<std::size_t> first_row(instances.size() + 1, 0);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        first_row[i] = jobs.size();
        const BigInt& n = instances[i].branch.n;
        if (options.policy == KPolicy::AllK) {
            for (BigInt k = 1; k <= n - 1; ++k) {
                jobs.push_back({i, k});
            }
        } else if (options.fixed_k >= 1 && options.fixed_k <= n) {
            jobs.push_back({i, options.fixed_k});
        }
    }
    first_row[instances.size()] = jobs.size();

    ScanResult result;
    result.rows.resize(jobs.size());
    const std::size_t workers = std::min<std::size_t>(
        static_cast<std::size_t>(options.threads), std::max<std::size_t>(jobs.size(), 1));
    auto run_shard = [&](std::size_t shard) {
        for (std::size_t i = shard; i < jobs.size(); i += workers) {
            result.rows[i] = detail::scan_row(instances[jobs[i].instance], jobs[i].k);
        }
    };
    if (workers <= 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(run_shard, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (std::size_t i = 0; i < instances.size(); ++i) {
        InstanceSummary summary{instances[i].label, instances[i].branch.n, {}, {}};
        bool seen_negative = false;
        for (std::size_t r = first_row[i]; r < first_row[i + 1]; ++r) {
            const Rational& tau = result.rows[r].geo.signature;
            if (tau < 0) {
                seen_negative = true;
            } else if (seen_negative && tau > 0) {
                summary.sign_change_k = result.rows[r].k;
                summary.crossing_ratio = Rational(result.rows[r].k, summary.n);
                break;
            }
        }
        result.instances.push_back(std::move(summary));
    }
    for (const ScanRow& row : result.rows) {
        if (row.geo.slope && (!result.max_slope || *row.geo.slope > result.max_slope->slope)) {
            result.max_slope = MaxSlope{row.label, row.k, *row.geo.slope};
        }
    }
    return result;
}

} // namespace galcov
