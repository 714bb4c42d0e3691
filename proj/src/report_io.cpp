#include "qift/report_io.hpp"

#include "qift/int128.hpp"
#include "qift/version.hpp"

namespace qift {

using nlohmann::json;

json to_json(const TransformSpec& spec) {
    json j;
    j["name"] = spec.name();
    j["canonical"] = spec.canonical_alias();
    j["modified"] = spec.modified();
    j["degenerate"] = spec.degenerate();
    if (spec.kind == TransformKind::ExactQft) {
        j["m"] = nullptr;
    } else {
        j["m"] = spec.effective_m();
    }
    return j;
}

json to_json(const Fraction& fraction) {
    return json{{"num", fraction.num}, {"den", fraction.den}};
}

json to_json(const PeriodicState& state) {
    return json{{"n", state.n}, {"x0", state.x0}, {"r", state.r},
                {"term_count", state.term_count()}};
}

json to_json(const RelProb& value) {
    json j;
    j["value"] = value.value;
    j["exact"] = value.exact;
    j["numerator"] = value.exact ? json(u128_to_string(value.numerator)) : json(nullptr);
    j["denominator"] = value.exact ? json(u128_to_string(value.denominator)) : json(nullptr);
    return j;
}

json to_json(const UnitaryReport& report) {
    return json{{"unitary", report.unitary},
                {"max_deviation", report.max_deviation},
                {"exact", report.exact}};
}

json to_json(const PeakWindowRow& row) {
    json j;
    j["k"] = row.k;
    j["ys"] = row.ys;
    j["rp"] = row.rp_values;
    j["prob"] = row.probs;
    j["in_window"] = row.in_window;
    j["pr_window"] = row.window_rp_sum;
    j["window_hit"] = row.window_hit;
    j["recovered"] = row.recovered_valid ? to_json(row.recovered) : json(nullptr);
    return j;
}

json to_json(const ThresholdHit& hit) {
    json j;
    j["y"] = hit.y;
    j["rp"] = hit.rp_value;
    j["prob"] = hit.prob_value;
    j["recovered"] = to_json(hit.recovered);
    j["matches_period"] = hit.matches_period;
    j["k_implied"] = hit.matches_period ? json(hit.k_implied) : json(nullptr);
    j["in_window"] = hit.in_window;
    return j;
}

json to_json(const ScanReport& report) {
    json j;
    j["n"] = report.state.n;
    j["x0"] = report.state.x0;
    j["r"] = report.state.r;
    j["term_count"] = report.state.term_count();
    j["spec"] = to_json(report.spec);
    j["mode"] = report.full_mode ? "full" : "peak";
    j["recovery_bound"] = report.recovery_bound;
    j["pr_total"] = report.pr_total;
    // The y = 0 outcome always carries relative probability 1 but teaches
    // nothing about the period; its mass is deliberately left out of pr_total,
    // and the report says so explicitly rather than leaving readers to guess.
    j["pr_total_excludes_y0"] = true;
    j["min_pr_y"] = report.min_pr_y;
    j["min_pr_k"] = report.min_pr_k;
    j["row_count"] = report.row_count;
    j["rows_kept"] = report.rows_kept;
    if (report.rows_kept) {
        json rows = json::array();
        for (const PeakWindowRow& row : report.rows) rows.push_back(to_json(row));
        j["rows"] = std::move(rows);
    } else {
        j["rows"] = nullptr;
    }
    if (report.full_mode) {
        j["threshold"] = report.threshold;
        j["total_prob"] = report.total_prob;
        json hits = json::array();
        for (const ThresholdHit& hit : report.threshold_hits) hits.push_back(to_json(hit));
        j["threshold_hits"] = std::move(hits);
    }
    return j;
}

json to_json(const PowerLawFit& fit) {
    return json{{"constant", fit.constant}, {"exponent", fit.exponent}, {"points", fit.points}};
}

json to_json(const TableResult& table) {
    json j;
    j["spec"] = to_json(table.spec);
    j["seed"] = table.seed;
    j["r_parity"] = to_string(table.r_parity);
    j["runs_per_n"] = table.runs_per_n;
    json rows = json::array();
    for (const TableRow& row : table.rows) {
        json r;
        r["n"] = row.n;
        r["runs"] = row.runs;
        r["pr_min"] = row.pr_min;
        r["min_min_pr_y"] = row.min_min_pr_y;
        json details = json::array();
        for (const RunSummary& run : row.run_details) {
            details.push_back(json{{"r", run.r},
                                   {"x0", run.x0},
                                   {"pr_total", run.pr_total},
                                   {"min_pr_y", run.min_pr_y}});
        }
        r["run_details"] = std::move(details);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["fit"] = table.has_fit ? to_json(table.fit) : json(nullptr);
    return j;
}

json to_json(const AttemptRecord& record) {
    json j;
    j["attempt"] = record.attempt;
    j["base"] = record.base;
    j["order"] = record.order;
    j["x0"] = record.x0;
    j["y"] = record.y;
    j["recovered"] = to_json(record.recovered);
    j["window_hit"] = record.window_hit;
    j["candidates"] = record.candidates;
    j["period_found"] = record.period_found == 0 ? json(nullptr) : json(record.period_found);
    j["outcome"] = record.outcome;
    j["factor1"] = record.factor1 == 0 ? json(nullptr) : json(record.factor1);
    j["factor2"] = record.factor2 == 0 ? json(nullptr) : json(record.factor2);
    return j;
}

json to_json(const FactorResult& result) {
    json j;
    j["target"] = result.target;
    j["spec"] = to_json(result.spec);
    j["seed"] = result.seed;
    j["c_min"] = result.c_min;
    j["n"] = result.n;
    j["effective_c"] = result.effective_c;
    j["max_attempts"] = result.max_attempts;
    j["success"] = result.success;
    j["factor1"] = result.factor1 == 0 ? json(nullptr) : json(result.factor1);
    j["factor2"] = result.factor2 == 0 ? json(nullptr) : json(result.factor2);
    j["attempts_used"] = result.attempts_used;
    json transcript = json::array();
    for (const AttemptRecord& record : result.transcript) transcript.push_back(to_json(record));
    j["transcript"] = std::move(transcript);
    return j;
}

std::string json_number_text(double value) { return json(value).dump(); }

std::string table_csv(const TableResult& table) {
    std::string out = "n,spec,runs,pr_min,min_min_pr_y,seed\n";
    for (const TableRow& row : table.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += table.spec.name();
        out += ',';
        out += std::to_string(row.runs);
        out += ',';
        out += json_number_text(row.pr_min);
        out += ',';
        out += json_number_text(row.min_min_pr_y);
        out += ',';
        out += std::to_string(table.seed);
        out += '\n';
    }
    return out;
}

json envelope_json(const Envelope& envelope) {
    json j;
    j["version"] = kVersion;
    j["command"] = envelope.command;
    j["seed"] = envelope.has_seed ? json(envelope.seed) : json(nullptr);
    j["spec"] = envelope.spec_name.empty() ? json(nullptr) : json(envelope.spec_name);
    j["payload"] = envelope.payload;
    j["wall_time_ms"] = envelope.wall_time_ms;
    return j;
}

}  // namespace qift
