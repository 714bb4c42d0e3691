#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "qift/number_theory.hpp"
#include "qift/periodic_state.hpp"
#include "qift/scan.hpp"
#include "qift/shor.hpp"
#include "qift/transform_spec.hpp"
#include "qift/transforms.hpp"

namespace qift {

nlohmann::json to_json(const TransformSpec& spec);
nlohmann::json to_json(const Fraction& fraction);
nlohmann::json to_json(const PeriodicState& state);
nlohmann::json to_json(const RelProb& value);
nlohmann::json to_json(const UnitaryReport& report);
nlohmann::json to_json(const PeakWindowRow& row);
nlohmann::json to_json(const ThresholdHit& hit);
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const PowerLawFit& fit);
nlohmann::json to_json(const TableResult& table);
nlohmann::json to_json(const AttemptRecord& record);
nlohmann::json to_json(const FactorResult& result);

/// Table CSV with header n,spec,runs,pr_min,min_min_pr_y,seed. Numbers are
/// rendered exactly as in the JSON payload.
std::string table_csv(const TableResult& table);

/// The textual form a value takes inside emitted JSON (shortest digits that
/// parse back to the identical double).
std::string json_number_text(double value);

struct Envelope {
    std::string command;
    bool has_seed = false;
    std::uint64_t seed = 0;
    std::string spec_name;  // empty → recorded as null
    nlohmann::json payload;
    double wall_time_ms = 0.0;
};

nlohmann::json envelope_json(const Envelope& envelope);

}  // namespace qift
