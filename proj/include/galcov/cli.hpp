#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galcov/records.hpp"
#include "galcov/verify.hpp"

// Command-line front end. Exit codes are a stable contract:
//   0 success, 1 domain/validation failure, 2 usage error.

namespace galcov::cli {

namespace detail {

inline BigInt parse_bigint(const std::string& text, const std::string& option) {
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw InvalidParameter("option " + option + " expects an integer, got '" + text + "'");
    }
}

struct OutputOptions {
    std::string format = "table";
};

inline void add_format_option(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
}

struct KSelection {
    std::string k_text;
    bool all_k = false;
};

inline void add_k_options(CLI::App* cmd, KSelection& sel) {
    auto* k_opt = cmd->add_option("--k", sel.k_text, "Cover index k (k = n is an alias for k = n-1)");
    auto* all_opt = cmd->add_flag("--all-k", sel.all_k, "Compute every cover k = 1..n-1");
    k_opt->excludes(all_opt);
    all_opt->excludes(k_opt);
}

// Cover indices requested for branch data with degree n.
inline std::vector<BigInt> selected_ks(const KSelection& sel, const BigInt& n) {
    std::vector<BigInt> ks;
    if (sel.all_k) {
        if (n < 2) {
            throw Error("no valid cover indices: n = " + n.str());
        }
        for (BigInt k = 1; k <= n - 1; ++k) {
            ks.push_back(k);
        }
    } else {
        ks.push_back(parse_bigint(sel.k_text, "--k"));
    }
    return ks;
}

inline void emit_records(const std::vector<OutputRecord>& records, const OutputOptions& opts,
                         const nlohmann::json& summary, std::ostream& out) {
    if (opts.format == "json") {
        out << to_json(records, summary).dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << to_csv(records);
    } else {
        out << to_table(records);
    }
}

inline std::string describe_violations(const ValidationReport& report) {
    std::string text;
    for (const Violation& v : report.violations) {
        text += "  " + v.identity + ": expected " + v.expected.str() + ", got " + v.actual.str() + "\n";
    }
    return text;
}

inline std::vector<std::string> violation_flags(const ValidationReport& report) {
    std::vector<std::string> flags;
    for (const Violation& v : report.violations) {
        flags.push_back("validator:" + v.identity + "(expected=" + v.expected.str()
                        + ", actual=" + v.actual.str() + ")");
    }
    return flags;
}

struct ScanReportOptions {
    std::string report = "full";
};

inline nlohmann::json scan_summary_json(const ScanResult& result, const ScanReportOptions& opts) {
    nlohmann::json summary{{"records", result.rows.size()}};
    if (opts.report == "slope" || opts.report == "full") {
        if (result.max_slope) {
            summary["max_slope"] = {
                {"source", result.max_slope->label},
                {"k", result.max_slope->k.str()},
                {"slope", {{"rational", rational_str(result.max_slope->slope)},
                           {"decimal", decimal_str(result.max_slope->slope, 4)}}},
            };
        } else {
            summary["max_slope"] = nullptr;
        }
    }
    if (opts.report == "signature" || opts.report == "full") {
        nlohmann::json changes = nlohmann::json::array();
        for (const InstanceSummary& inst : result.instances) {
            nlohmann::json entry{{"source", inst.label}, {"n", inst.n.str()}};
            if (inst.sign_change_k) {
                entry["sign_change_k"] = inst.sign_change_k->str();
                entry["crossing_ratio"] = {{"rational", rational_str(*inst.crossing_ratio)},
                                           {"decimal", decimal_str(*inst.crossing_ratio, 4)}};
            } else {
                entry["sign_change_k"] = nullptr;
            }
            changes.push_back(std::move(entry));
        }
        summary["sign_changes"] = std::move(changes);
    }
    return summary;
}

inline std::string scan_summary_text(const ScanResult& result, const ScanReportOptions& opts,
                                     const std::string& prefix) {
    std::string text;
    if (opts.report == "slope" || opts.report == "full") {
        if (result.max_slope) {
            text += prefix + "max slope: " + rational_str(result.max_slope->slope) + " ("
                 + decimal_str(result.max_slope->slope, 4) + ") at " + result.max_slope->label
                 + " k=" + result.max_slope->k.str() + "\n";
        } else {
            text += prefix + "max slope: none (no rows with c2 != 0)\n";
        }
    }
    if (opts.report == "signature" || opts.report == "full") {
        for (const InstanceSummary& inst : result.instances) {
            text += prefix + "sign change (tau neg->pos) " + inst.label + ": ";
            if (inst.sign_change_k) {
                text += "k*=" + inst.sign_change_k->str() + " of n=" + inst.n.str()
                     + ", ratio " + rational_str(*inst.crossing_ratio)
                     + " (" + decimal_str(*inst.crossing_ratio, 4) + ")";
            } else {
                text += "none";
            }
            text += "\n";
        }
    }
    return text;
}

} // namespace detail

// Runs the CLI on already-split arguments (no program name). Streams are
// injected so the whole surface is testable in-process.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"Exact Chern invariants c1^2, c2 of the k-th Galois cover X_k of a "
                 "generic projection, with closed-form/recursive cross-validation"};
    app.require_subcommand(1);

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "Invariants from raw branch-curve data");
    std::string arg_n, arg_m, arg_mu, arg_rho, arg_d;
    compute->add_option("--n", arg_n, "Degree of the generic projection")->required();
    compute->add_option("--m", arg_m, "Degree of the branch curve")->required();
    compute->add_option("--mu", arg_mu, "Number of branch points (degree of the dual curve)")->required();
    compute->add_option("--rho", arg_rho, "Number of cusps")->required();
    compute->add_option("--d", arg_d, "Number of nodes")->required();
    bool force = false;
    compute->add_flag("--force", force, "Compute even if validation fails (violations become flags)");
    KSelection compute_k;
    add_k_options(compute, compute_k);
    OutputOptions compute_fmt;
    add_format_option(compute, compute_fmt);

    // ---- from-intrinsics ----
    auto* intr = app.add_subcommand("from-intrinsics",
                                    "Derive branch data from (c1^2, c2, deg X, E.K), then compute");
    std::string arg_c1sq, arg_c2, arg_deg, arg_ek;
    intr->add_option("--c1sq", arg_c1sq, "c1^2(X) = K^2")->required();
    intr->add_option("--c2", arg_c2, "c2(X) = e(X)")->required();
    intr->add_option("--deg", arg_deg, "deg X = E^2")->required();
    intr->add_option("--ek", arg_ek, "Intersection number E.K")->required();
    KSelection intr_k;
    add_k_options(intr, intr_k);
    OutputOptions intr_fmt;
    add_format_option(intr, intr_fmt);

    // ---- family ----
    auto* family = app.add_subcommand("family", "Invariants for a stock family instance");
    family->require_subcommand(1);
    auto* fam_veronese = family->add_subcommand("veronese", "Veronese embedding of order b");
    std::string arg_vb;
    fam_veronese->add_option("--b", arg_vb, "Veronese order (b >= 2)")->required();
    auto* fam_hirzebruch = family->add_subcommand("hirzebruch", "Hirzebruch surface F_t with |a.l + b.C+|");
    std::string arg_ht, arg_ha, arg_hb;
    fam_hirzebruch->add_option("--t", arg_ht, "Hirzebruch order t (t >= 0)")->required();
    fam_hirzebruch->add_option("--a", arg_ha, "Coefficient a (a >= 1)")->required();
    fam_hirzebruch->add_option("--b", arg_hb, "Coefficient b (b >= 1)")->required();
    auto* fam_k3 = family->add_subcommand("k3", "K3 surface (n = 4)");
    KSelection family_k;
    add_k_options(family, family_k);
    OutputOptions family_fmt;
    add_format_option(family, family_fmt);

    // ---- scan ----
    auto* scan_cmd = app.add_subcommand("scan", "Evaluate a parameter range and summarize geography");
    scan_cmd->require_subcommand(1);
    auto* scan_veronese = scan_cmd->add_subcommand("veronese", "Scan veronese b = b-min..b-max");
    std::string arg_bmin, arg_bmax;
    scan_veronese->add_option("--b-min", arg_bmin, "Smallest order")->required();
    scan_veronese->add_option("--b-max", arg_bmax, "Largest order")->required();
    auto* scan_hirzebruch = scan_cmd->add_subcommand("hirzebruch", "Scan hirzebruch a,b ranges at fixed t");
    std::string arg_st;
    std::vector<std::string> arg_arange, arg_brange;
    scan_hirzebruch->add_option("--t", arg_st, "Hirzebruch order t")->required();
    scan_hirzebruch->add_option("--a-range", arg_arange, "a range: MIN MAX")->expected(2)->required();
    scan_hirzebruch->add_option("--b-range", arg_brange, "b range: MIN MAX")->expected(2)->required();
    auto* scan_k3 = scan_cmd->add_subcommand("k3", "Scan the single K3 instance");
    ScanReportOptions scan_report;
    scan_cmd->add_option("--report", scan_report.report, "Summary selection")
        ->check(CLI::IsMember({"slope", "signature", "full"}))
        ->capture_default_str();
    int scan_threads = 1;
    scan_cmd->add_option("--threads", scan_threads, "Worker threads (output is identical for any value)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    KSelection scan_k;
    add_k_options(scan_cmd, scan_k);
    OutputOptions scan_fmt;
    add_format_option(scan_cmd, scan_fmt);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "Run the full invariant cross-check suite");
    int max_n = 12;
    verify_cmd->add_option("--max-n", max_n, "Upper bound for the exhaustive grid")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    bool families_only = false;
    verify_cmd->add_flag("--families-only", families_only, "Skip the exhaustive grid");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*compute) {
            const BranchData data{parse_bigint(arg_n, "--n"), parse_bigint(arg_m, "--m"),
                                  parse_bigint(arg_mu, "--mu"), parse_bigint(arg_rho, "--rho"),
                                  parse_bigint(arg_d, "--d")};
            if (!compute_k.all_k && compute_k.k_text.empty()) {
                err << "usage error: one of --k or --all-k is required\n";
                return 2;
            }
            const ValidationReport report = validate_branch(data);
            std::vector<std::string> extra;
            if (!report.ok()) {
                if (!force) {
                    err << "validation failed:\n" << describe_violations(report);
                    return 1;
                }
                extra = violation_flags(report);
            }
            std::vector<OutputRecord> records;
            for (const BigInt& k : selected_ks(compute_k, data.n)) {
                records.push_back(make_record("raw", data, k, extra));
            }
            emit_records(records, compute_fmt, {{"records", records.size()}}, out);
            return 0;
        }
        if (*intr) {
            if (!intr_k.all_k && intr_k.k_text.empty()) {
                err << "usage error: one of --k or --all-k is required\n";
                return 2;
            }
            const SurfaceIntrinsics s{parse_bigint(arg_c1sq, "--c1sq"), parse_bigint(arg_c2, "--c2"),
                                      parse_bigint(arg_deg, "--deg"), parse_bigint(arg_ek, "--ek")};
            const BranchData data = derive_branch(s);
            std::vector<OutputRecord> records;
            for (const BigInt& k : selected_ks(intr_k, data.n)) {
                records.push_back(make_record("intrinsics", data, k));
            }
            emit_records(records, intr_fmt, {{"records", records.size()}}, out);
            return 0;
        }
        if (*family) {
            if (!family_k.all_k && family_k.k_text.empty()) {
                err << "usage error: one of --k or --all-k is required\n";
                return 2;
            }
            FamilyInstance inst = *fam_k3 ? k3()
                : *fam_veronese ? veronese(parse_bigint(arg_vb, "--b"))
                : hirzebruch(parse_bigint(arg_ht, "--t"), parse_bigint(arg_ha, "--a"),
                             parse_bigint(arg_hb, "--b"));
            std::vector<OutputRecord> records;
            for (const BigInt& k : selected_ks(family_k, inst.branch.n)) {
                records.push_back(make_record(inst.label, inst.branch, k));
            }
            emit_records(records, family_fmt, {{"records", records.size()}}, out);
            return 0;
        }
        if (*scan_cmd) {
            std::vector<FamilyInstance> instances;
            if (*scan_veronese) {
                const BigInt lo = parse_bigint(arg_bmin, "--b-min");
                if (lo < 2) {
                    throw InvalidParameter("veronese scan requires b-min >= 2, got " + lo.str());
                }
                instances = veronese_range(lo, parse_bigint(arg_bmax, "--b-max"));
            } else if (*scan_hirzebruch) {
                instances = hirzebruch_range(parse_bigint(arg_st, "--t"),
                                             parse_bigint(arg_arange[0], "--a-range"),
                                             parse_bigint(arg_arange[1], "--a-range"),
                                             parse_bigint(arg_brange[0], "--b-range"),
                                             parse_bigint(arg_brange[1], "--b-range"));
            } else if (*scan_k3) {
                instances.push_back(k3());
            }
            ScanOptions options;
            options.threads = scan_threads;
            if (!scan_k.k_text.empty()) {
                options.policy = KPolicy::FixedK;
                options.fixed_k = parse_bigint(scan_k.k_text, "--k");
                if (options.fixed_k < 1) {
                    throw InvalidK("cover index k = " + options.fixed_k.str() + " outside [1, n]");
                }
            }
            const ScanResult result = scan(instances, options);
            std::vector<OutputRecord> records;
            records.reserve(result.rows.size());
            for (const ScanRow& row : result.rows) {
                records.push_back(record_from_scan_row(row));
            }
            if (scan_fmt.format == "json") {
                out << to_json(records, scan_summary_json(result, scan_report)).dump(2) << "\n";
            } else if (scan_fmt.format == "csv") {
                out << to_csv(records);
                out << scan_summary_text(result, scan_report, "# ");
            } else {
                out << to_table(records);
                out << scan_summary_text(result, scan_report, "");
            }
            return 0;
        }
        // verify
        const std::vector<CheckResult> results = run_verification({max_n, families_only});
        out << format_results(results);
        if (!all_passed(results)) {
            out << "verification FAILED\n";
            return 1;
        }
        out << "verification passed\n";
        return 0;
    } catch (const InvalidParameter& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidK& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace galcov::cli
