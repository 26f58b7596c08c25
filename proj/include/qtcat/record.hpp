#pragma once

#include "qtcat/laurent.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace qtcat {

inline const char* engine_version() { return "qtcat/1.0.0"; }

/// One computed result. kind is one of catalan-comb, catalan-loc,
/// nested-comb, nested-loc, cells, pieri-report. Polynomial kinds carry a
/// term list; for cells the term exponents are read as (t = k, q = i) of the
/// b[k][i] table; pieri-report carries report lines instead.
struct ResultRecord {
    std::string kind;
    int n = 0;
    int m = 0;
    LaurentPoly poly;
    std::vector<std::string> report;
    std::string engine = engine_version();

    bool operator==(const ResultRecord&) const = default;
};

/// Coefficients rendered as decimal strings so arbitrary precision survives
/// any JSON reader. Term order is the canonical display order.
inline nlohmann::ordered_json record_to_json(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    j["n"] = r.n;
    j["m"] = r.m;
    if (r.kind == "pieri-report") {
        j["report"] = r.report;
    } else {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [e, c] : canonical_terms(r.poly))
            terms.push_back({{"t", e.t}, {"q", e.q}, {"c", c.str()}});
        j["terms"] = std::move(terms);
    }
    j["engine"] = r.engine;
    return j;
}

inline std::string render_record(const ResultRecord& r) { return record_to_json(r).dump(2); }

inline ResultRecord parse_record(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ResultRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.engine = j.at("engine").get<std::string>();
    if (j.contains("report")) r.report = j["report"].get<std::vector<std::string>>();
    if (j.contains("terms"))
        for (const auto& t : j["terms"])
            r.poly.add_term(Exp2{t.at("t").get<long long>(), t.at("q").get<long long>()},
                            Int(t.at("c").get<std::string>()));
    return r;
}

inline std::string cache_filename(const std::string& kind, int n, int m) {
    return kind + "-" + std::to_string(n) + "-" + std::to_string(m) + ".json";
}

/// Load a cached record; entries from another engine version are stale and
/// reported as a miss.
inline std::optional<ResultRecord> cache_load(const std::filesystem::path& dir,
                                              const std::string& kind, int n, int m) {
    std::filesystem::path file = dir / cache_filename(kind, n, m);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        ResultRecord r = parse_record(text);
        if (r.engine != engine_version()) return std::nullopt;
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Store a record; a write timestamp is added as cache metadata only (it is
/// not part of the record schema, keeping rendered output deterministic).
inline void cache_store(const std::filesystem::path& dir, const ResultRecord& r) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    nlohmann::ordered_json j = record_to_json(r);
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
    std::ofstream out(dir / cache_filename(r.kind, r.n, r.m));
    out << j.dump(2) << "\n";
}

} // namespace qtcat
