#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "galcov/geography.hpp"

// CLI-facing records. Every numeric field is serialized as a full-precision
// decimal string: full-Galois degrees and Chern numbers overflow 64 bits
// quickly, so consumers never see native JSON numbers.

namespace galcov {

struct OutputRecord {
    std::string source; // "raw", "intrinsics", or a family label
    BranchData data;
    BigInt k;
    ChernPair chern;
    Rational signature;
    std::optional<Rational> slope;
    std::vector<std::string> flags;
};

inline OutputRecord make_record(std::string source, const BranchData& data, const BigInt& k,
                                std::vector<std::string> extra_flags = {}) {
    const CrossCheckedChern cc = chern(data, k);
    const ChernPair value = cc.agree ? cc.closed : cc.oracle;
    const GeographyReport geo = geography(value);
    OutputRecord rec{std::move(source), data, k, value, geo.signature, geo.slope,
                     std::move(extra_flags)};
    for (auto& f : mismatch_flags(cc)) {
        rec.flags.push_back(std::move(f));
    }
    for (auto& f : published_value_flags(data, k, geo)) {
        rec.flags.push_back(std::move(f));
    }
    for (auto& f : diagnostic_flags(geo)) {
        rec.flags.push_back(std::move(f));
    }
    return rec;
}

inline OutputRecord record_from_scan_row(const ScanRow& row) {
    OutputRecord rec{row.label, row.data, row.k, row.geo.chern, row.geo.signature,
                     row.geo.slope, row.flags};
    for (auto& f : diagnostic_flags(row.geo)) {
        rec.flags.push_back(std::move(f));
    }
    return rec;
}

namespace detail {

inline std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (i > 0) {
            out += ";";
        }
        out += flags[i];
    }
    return out;
}

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    out += "\"";
    return out;
}

} // namespace detail

inline constexpr const char* kCsvHeader = "source,n,m,mu,rho,d,k,c1sq,c2,signature,slope,flags";

// Fixed column order; slope is the 4-place decimal (the exact ratio is
// recoverable from the c1sq and c2 columns).
inline std::string to_csv(const std::vector<OutputRecord>& records) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const OutputRecord& r : records) {
        out += detail::csv_quote(r.source) + ",";
        out += r.data.n.str() + "," + r.data.m.str() + "," + r.data.mu.str() + ","
             + r.data.rho.str() + "," + r.data.d.str() + ",";
        out += r.k.str() + "," + r.chern.c1sq.str() + "," + r.chern.c2.str() + ",";
        out += rational_str(r.signature) + ",";
        out += (r.slope ? decimal_str(*r.slope, 4) : "") + ",";
        out += detail::csv_quote(detail::join_flags(r.flags)) + "\n";
    }
    return out;
}

inline nlohmann::json record_json(const OutputRecord& r) {
    nlohmann::json j{
        {"source", r.source},
        {"n", r.data.n.str()},
        {"m", r.data.m.str()},
        {"mu", r.data.mu.str()},
        {"rho", r.data.rho.str()},
        {"d", r.data.d.str()},
        {"k", r.k.str()},
        {"c1sq", r.chern.c1sq.str()},
        {"c2", r.chern.c2.str()},
        {"signature", rational_str(r.signature)},
        {"flags", r.flags},
    };
    if (r.slope) {
        j["slope"] = {{"rational", rational_str(*r.slope)}, {"decimal", decimal_str(*r.slope, 4)}};
    } else {
        j["slope"] = nullptr;
    }
    return j;
}

inline nlohmann::json to_json(const std::vector<OutputRecord>& records, nlohmann::json summary) {
    nlohmann::json recs = nlohmann::json::array();
    for (const OutputRecord& r : records) {
        recs.push_back(record_json(r));
    }
    return nlohmann::json{{"records", std::move(recs)}, {"summary", std::move(summary)}};
}

inline std::string to_table(const std::vector<OutputRecord>& records) {
    const std::vector<std::string> header = {"source", "n", "m", "mu", "rho", "d", "k",
                                             "c1sq", "c2", "signature", "slope", "flags"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    for (const OutputRecord& r : records) {
        std::string slope = "-";
        if (r.slope) {
            slope = rational_str(*r.slope) + " (" + decimal_str(*r.slope, 4) + ")";
        }
        cells.push_back({r.source, r.data.n.str(), r.data.m.str(), r.data.mu.str(),
                         r.data.rho.str(), r.data.d.str(), r.k.str(), r.chern.c1sq.str(),
                         r.chern.c2.str(), rational_str(r.signature), slope,
                         r.flags.empty() ? "-" : detail::join_flags(r.flags)});
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) {
                out.append(width[c] - row[c].size() + 2, ' ');
            }
        }
        out += "\n";
    }
    return out;
}

} // namespace galcov
