#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "galcov/records.hpp"

// Self-verification: every cross-check the library promises, runnable from
// the CLI. Checks either pass, fail with a minimal reproducing input, or
// warn (for diagnostics whose geometric hypotheses are not guaranteed on
// intermediate covers).

namespace galcov {

enum class CheckStatus { Pass, Warn, Fail };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    BigInt max_n = 12;
    bool families_only = false;
};

namespace detail {

inline std::string describe(const BranchData& x) {
    return "n=" + x.n.str() + " m=" + x.m.str() + " mu=" + x.mu.str()
         + " rho=" + x.rho.str() + " d=" + x.d.str();
}

inline std::string describe(const BranchData& x, const BigInt& k) {
    return describe(x) + " k=" + k.str();
}

// The family grid used by cheap per-instance checks (validation, round
// trips, tower diagnostics).
inline std::vector<FamilyInstance> verify_families() {
    std::vector<FamilyInstance> out;
    for (BigInt b = 2; b <= 10; ++b) {
        out.push_back(veronese(b));
    }
    for (BigInt t = 0; t <= 3; ++t) {
        for (BigInt a = 1; a <= 6; ++a) {
            for (BigInt b = 1; b <= 6; ++b) {
                out.push_back(hirzebruch(t, a, b));
            }
        }
    }
    out.push_back(k3());
    return out;
}

// Synthetic branch data for the exhaustive checks. Only geometrically
// realizable shapes are generated: m even (deg S = E.K + 3E^2 and E.(E+K)
// is even), cusps require triple points (n >= 3), nodes require two
// colliding pairs (n >= 4); mu is pinned by the dual-degree identity and
// the genus must be non-negative.
inline std::vector<BranchData> realizable_grid(const BigInt& max_n) {
    std::vector<BranchData> out;
    for (BigInt n = 2; n <= max_n; ++n) {
        for (BigInt m = 2; m <= 12; m += 2) {
            const BigInt rho_hi = n >= 3 ? 5 : 0;
            const BigInt d_hi = n >= 4 ? 5 : 0;
            for (BigInt rho = 0; rho <= rho_hi; ++rho) {
                for (BigInt d = 0; d <= d_hi; ++d) {
                    const BigInt mu = dual_degree(m, d, rho);
                    if (mu < 0 || numerator(genus_of_model(m, d, rho)) < 0) {
                        continue;
                    }
                    out.push_back(BranchData{n, m, mu, rho, d});
                }
            }
        }
    }
    return out;
}

// Intrinsics recovered from branch data; inverse of derive_branch on
// consistent inputs (c1^2 and c2 of the base are the k = 1 cover values).
inline SurfaceIntrinsics intrinsics_of(const BranchData& x) {
    return {c1sq_closed(x, 1), c2_closed(x, 1), x.n, x.m - 3 * x.n};
}

// Full (c1^2, c2) tower k = 1..n-1 through the recursions only, maintaining
// every sequence incrementally; O(n) big-integer operations total. Used for
// the large-family diagnostics where per-k recomputation would be cubic.
inline std::vector<ChernPair> oracle_tower(const BranchData& x) {
    std::vector<ChernPair> tower;
    if (x.n < 2) {
        return tower;
    }
    const BigInt& n = x.n;
    BigInt c2 = 3 * n - 2 * x.m + x.mu;
    BigInt mu_p = x.mu;
    BigInt a = 2 * x.rho + 2 * x.d;
    BigInt e = x.m;
    BigInt degg = n;
    // S_k node/cusp counts, trailing one step behind the loop index.
    BigInt d_prev = x.d, rho_prev = x.rho;
    {
        const Rational c1 = 9 * degg - 6 * e + Rational(x.m, 2) * e - Rational(a, 2);
        tower.push_back({as_integer(c1, "c1^2 tower"), c2});
    }
    BigInt m_prod = 1, d_prod = 1, rho_prod = 1, e_prod = 1;
    for (BigInt k = 2; k <= n - 1; ++k) {
        m_prod *= (k == 2) ? BigInt(n - 2) : BigInt(n - k);
        d_prod *= (k == 2) ? BigInt(n - 4) : BigInt(n - k - 2);
        rho_prod *= (k == 2) ? BigInt(n - 3) : BigInt(n - k - 1);
        if (k >= 3) {
            e_prod *= n - k + 1; // rp(n-k+1, n-2) is empty at k = 2
        }
        degg *= n - k + 1;
        const BigInt m_k = m_prod * x.m;
        const BigInt d_k = d_prod * x.d;
        const BigInt rho_k = rho_prod * x.rho;
        mu_p = (n - k) * mu_p + rho_prev + 2 * d_prev;
        a = (n - k - 1) * a + 2 * rho_k + 2 * d_k;
        c2 = (n - k + 1) * c2 - 2 * m_k + mu_p;
        const Rational e_k = Rational(x.m, 2) * e_prod * ((2 * n - 1) * k - k * k);
        e = as_integer(e_k, "E_k.T'_k tower");
        const Rational c1 = 9 * degg - 6 * e + Rational(x.m, 2) * e - Rational(a, 2);
        tower.push_back({as_integer(c1, "c1^2 tower"), c2});
        d_prev = d_k;
        rho_prev = rho_k;
    }
    return tower;
}

class CheckRunner {
public:
    explicit CheckRunner(std::string name) { result_.name = std::move(name); }

    // Records one case; on the first failure captures the reproducing input.
    void expect(bool ok, const std::function<std::string()>& repro) {
        ++result_.cases;
        if (!ok && result_.status != CheckStatus::Fail) {
            result_.status = CheckStatus::Fail;
            result_.detail = "counterexample: " + repro();
        }
    }

    void warn(const std::string& note) {
        if (result_.status == CheckStatus::Pass) {
            result_.status = CheckStatus::Warn;
            result_.detail = note;
        } else if (result_.status == CheckStatus::Warn) {
            ++extra_warnings_;
        }
    }

    void count() { ++result_.cases; }

    CheckResult finish() {
        if (result_.status == CheckStatus::Warn && extra_warnings_ > 0) {
            result_.detail += " (+" + std::to_string(extra_warnings_) + " more)";
        }
        return result_;
    }

private:
    CheckResult result_;
    std::size_t extra_warnings_ = 0;
};

} // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    using detail::CheckRunner;
    using detail::describe;

    std::vector<CheckResult> results;
    const std::vector<FamilyInstance> families = detail::verify_families();
    std::vector<BranchData> grid;
    for (const FamilyInstance& inst : families) {
        if (inst.branch.n <= options.max_n) {
            grid.push_back(inst.branch);
        }
    }
    if (!options.families_only) {
        for (BranchData& x : detail::realizable_grid(options.max_n)) {
            grid.push_back(std::move(x));
        }
    }

    {
        CheckRunner check("range-product-composition");
        for (int a = -6; a <= 6; ++a) {
            for (int b = a - 1; b <= 6; ++b) {
                for (int c = b; c <= 6; ++c) {
                    check.expect(range_product(a, b) * range_product(b + 1, c) == range_product(a, c),
                                 [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b)
                                              + " c=" + std::to_string(c); });
                }
            }
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("range-product-falling-factorial");
        for (BigInt n = 0; n <= 12; ++n) {
            for (BigInt k = 0; k <= n; ++k) {
                check.expect(range_product(n - k + 1, n) == factorial(n) / factorial(n - k),
                             [&] { return "n=" + n.str() + " k=" + k.str(); });
            }
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("rational-arithmetic-laws");
        std::vector<Rational> values;
        for (int p = -4; p <= 4; ++p) {
            for (int q = 1; q <= 3; ++q) {
                values.push_back(Rational(p, q));
            }
        }
        for (const Rational& x : values) {
            for (const Rational& y : values) {
                for (const Rational& z : values) {
                    const bool ok = (x + y) + z == x + (y + z) && x * y == y * x
                                 && x * (y + z) == x * y + x * z && (x * y) * z == x * (y * z);
                    check.expect(ok, [&] { return x.str() + ", " + y.str() + ", " + z.str(); });
                }
            }
        }
        // normalization: lowest terms with positive denominator, idempotent
        check.expect(Rational(2, 4) == Rational(1, 2) && Rational(3, -6).str() == "-1/2"
                         && denominator(Rational(-5, -10)) == 2,
                     [] { return std::string("normalization"); });
        results.push_back(check.finish());
    }
    {
        CheckRunner check("family-validation");
        for (const FamilyInstance& inst : families) {
            check.expect(validate_branch(inst.branch).ok(), [&] { return inst.label; });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("derive-branch-round-trip");
        for (const FamilyInstance& inst : families) {
            check.expect(inst.intrinsics && derive_branch(*inst.intrinsics) == inst.branch,
                         [&] { return inst.label; });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("node-cusp-resolution");
        for (const BranchData& x : grid) {
            // re-solve (d, rho) from (m, mu, g); must recover the inputs
            const BigInt g = numerator(genus_of_model(x.m, x.d, x.rho));
            const BigInt rho = 2 * (x.m - 1) - x.mu + 2 * g;
            const BigInt d = (x.m - 1) * (x.m - 2) / 2 - g - rho;
            check.expect(rho == x.rho && d == x.d, [&] { return describe(x); });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner closed_oracle("closed-oracle-agreement");
        CheckRunner mu_agree("mu-prime-agreement");
        CheckRunner ram_agree("ram-pairing-agreement");
        CheckRunner integrality("integrality");
        for (const BranchData& x : grid) {
            try {
                for (BigInt k = 1; k <= x.n - 1; ++k) {
                    const CrossCheckedChern cc = chern(x, k);
                    closed_oracle.expect(cc.agree, [&] { return describe(x, k); });
                    mu_agree.expect(mu_prime(x, k) == mu_prime_oracle(x, k),
                                    [&] { return describe(x, k); });
                    ram_agree.expect(branch_dot_ram(x, k) == branch_dot_ram_oracle(x, k),
                                     [&] { return describe(x, k); });
                    integrality.count();
                }
            } catch (const IntegralityViolation& e) {
                integrality.expect(false, [&] { return describe(x) + " (" + e.what() + ")"; });
            }
        }
        results.push_back(closed_oracle.finish());
        results.push_back(mu_agree.finish());
        results.push_back(ram_agree.finish());
        results.push_back(integrality.finish());
    }
    {
        CheckRunner check("cover-sequences-base");
        for (const BranchData& x : grid) {
            const CoverSequences s = cover_sequences(x, 1);
            check.expect(s.m_k == x.m && s.d_k == x.d && s.rho_k == x.rho && s.mu_prime_k == x.mu
                             && s.e_dot_t == x.m && s.s_dot_t == 2 * x.rho + 2 * x.d,
                         [&] { return describe(x); });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("base-case-round-trip");
        for (const BranchData& x : grid) {
            const SurfaceIntrinsics s = detail::intrinsics_of(x);
            const BranchData back = derive_branch(s);
            const CrossCheckedChern cc = chern(back, 1);
            check.expect(back == x && cc.closed.c1sq == s.c1sq && cc.closed.c2 == s.c2,
                         [&] { return describe(x); });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("galois-coincidence");
        for (const BranchData& x : grid) {
            const ChernPair g = galois_chern(x);
            check.expect(g == ChernPair{c1sq_closed(x, x.n - 1), c2_closed(x, x.n - 1)},
                         [&] { return describe(x); });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("corollary-coincidence");
        for (const BranchData& x : grid) {
            const SurfaceIntrinsics s = detail::intrinsics_of(x);
            check.expect(corollary_n(s) == galois_chern(derive_branch(s)),
                         [&] { return describe(x); });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner check("isomorphism-rule");
        for (const BranchData& x : grid) {
            const CrossCheckedChern at_n = chern(x, x.n);
            const CrossCheckedChern at_n1 = chern(x, x.n - 1);
            check.expect(at_n.closed == at_n1.closed && at_n.oracle == at_n1.oracle,
                         [&] { return describe(x); });
        }
        results.push_back(check.finish());
    }
    {
        CheckRunner tau_check("signature-definition");
        CheckRunner mod12("noether-mod12 (warning-level)");
        CheckRunner inequalities("geography-inequalities (warning-level)");
        for (const FamilyInstance& inst : families) {
            const std::vector<ChernPair> tower = detail::oracle_tower(inst.branch);
            for (std::size_t i = 0; i < tower.size(); ++i) {
                const GeographyReport geo = geography(tower[i]);
                tau_check.expect(3 * geo.signature == Rational(tower[i].c1sq - 2 * tower[i].c2),
                                 [&] { return inst.label + " k=" + std::to_string(i + 1); });
                mod12.count();
                inequalities.count();
                const std::string where = inst.label + " k=" + std::to_string(i + 1)
                    + " (c1sq=" + tower[i].c1sq.str() + ", c2=" + tower[i].c2.str() + ")";
                if (!geo.noether_mod12_ok) {
                    mod12.warn("finding: " + where);
                }
                if (!geo.bmy_ok || !geo.nonneg_ok || !geo.noether_line_ok) {
                    inequalities.warn("finding: " + where);
                }
            }
        }
        results.push_back(tau_check.finish());
        results.push_back(mod12.finish());
        results.push_back(inequalities.finish());
    }
    {
        CheckRunner check("scan-determinism");
        const std::vector<FamilyInstance> range = veronese_range(2, 6);
        auto render = [](const ScanResult& scan_result) {
            std::vector<OutputRecord> records;
            records.reserve(scan_result.rows.size());
            for (const ScanRow& row : scan_result.rows) {
                records.push_back(record_from_scan_row(row));
            }
            return to_csv(records) + to_json(records, nlohmann::json::object()).dump();
        };
        const std::string serial = render(scan(range, {KPolicy::AllK, 1, 1}));
        const std::string serial_again = render(scan(range, {KPolicy::AllK, 1, 1}));
        const std::string parallel = render(scan(range, {KPolicy::AllK, 1, 4}));
        check.expect(serial == serial_again && serial == parallel,
                     [] { return std::string("scan veronese b=2..6 across thread counts"); });
        results.push_back(check.finish());
    }
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) {
        if (r.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

inline std::string format_results(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const CheckResult& r : results) {
        width = std::max(width, r.name.size());
    }
    for (const CheckResult& r : results) {
        const char* status = r.status == CheckStatus::Pass ? "PASS"
                           : r.status == CheckStatus::Warn ? "WARN" : "FAIL";
        out << status << "  " << r.name << std::string(width - r.name.size() + 2, ' ')
            << "cases=" << r.cases;
        if (!r.detail.empty()) {
            out << "  " << r.detail;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace galcov
