// Command-line front end: relative-probability queries, spectrum scans,
// minimum-probability tables, continued-fraction recovery, and the toy
// order-finding factorization loop.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qift/bitops.hpp"
#include "qift/errors.hpp"
#include "qift/number_theory.hpp"
#include "qift/periodic_state.hpp"
#include "qift/report_io.hpp"
#include "qift/rng.hpp"
#include "qift/scan.hpp"
#include "qift/shor.hpp"
#include "qift/transforms.hpp"

namespace {

std::string fmt6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string join_args(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

int threads_from_env() {
    const char* raw = std::getenv("QIFT_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    const long parsed = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || parsed <= 0 || parsed > 4096) return 0;
    return static_cast<int>(parsed);
}

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct GlobalOptions {
    bool as_json = false;
    std::string out_path;
    int threads = threads_from_env();
    bool force = false;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
    if (!file) throw std::runtime_error("failed writing output file: " + path);
}

// Emits one command's result: human text or envelope JSON on stdout, plus an
// optional file copy (CSV only where the caller supplied csv_text).
void emit(const GlobalOptions& opts, const qift::Envelope& env, const std::string& human,
          const std::string& csv_text = std::string()) {
    const std::string envelope_text = qift::envelope_json(env).dump(2) + "\n";
    if (opts.as_json) {
        std::cout << envelope_text;
    } else {
        std::cout << human;
    }
    if (!opts.out_path.empty()) {
        if (ends_with(opts.out_path, ".csv")) {
            if (csv_text.empty()) {
                throw std::invalid_argument("--out with a .csv path is only supported for 'table'");
            }
            write_file(opts.out_path, csv_text);
        } else {
            write_file(opts.out_path, envelope_text);
        }
    }
}

qift::Envelope make_envelope(std::string command, const nlohmann::json& payload,
                             double wall_ms, const qift::TransformSpec* spec = nullptr,
                             const std::uint64_t* seed = nullptr) {
    qift::Envelope env;
    env.command = std::move(command);
    env.payload = payload;
    env.wall_time_ms = wall_ms;
    if (spec != nullptr) env.spec_name = spec->name();
    if (seed != nullptr) {
        env.has_seed = true;
        env.seed = *seed;
    }
    return env;
}

class Stopwatch {
  public:
    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string scan_human(const qift::ScanReport& report) {
    std::ostringstream out;
    out << "n = " << report.state.n << ", x0 = " << report.state.x0
        << ", r = " << report.state.r << ", spec = " << report.spec.name() << '\n';
    if (report.full_mode) {
        out << "total_prob = " << fmt6(report.total_prob) << '\n';
        out << "threshold hits (rp > " << fmt6(report.threshold) << "): "
            << report.threshold_hits.size() << '\n';
        for (const auto& hit : report.threshold_hits) {
            out << "  y = " << hit.y << "  rp = " << fmt6(hit.rp_value)
                << "  prob = " << fmt6(hit.prob_value)
                << "  recovered = " << hit.recovered.num << '/' << hit.recovered.den
                << (hit.matches_period ? "  period-match" : "")
                << (hit.in_window ? "  in-window" : "") << '\n';
        }
    }
    out << "pr_total = " << fmt6(report.pr_total) << " (excludes the trivial y = 0 peak)\n";
    out << "min_pr_y = " << fmt6(report.min_pr_y) << " (k = " << report.min_pr_k << ")\n";
    out << "windows = " << report.row_count << '\n';
    return out.str();
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Period-finding success probabilities for exact, approximate, and "
                 "integer-only Fourier transforms"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand name

    GlobalOptions opts;
    app.add_flag("--json", opts.as_json, "print the JSON envelope instead of human text");
    app.add_option("--out", opts.out_path,
                   "write the JSON envelope (or CSV for 'table' when the path ends in .csv)");
    app.add_option("--threads", opts.threads,
                   "worker threads (0 = hardware; QIFT_THREADS overrides the default)");
    app.add_flag("--force", opts.force, "override resource ceilings on scan commands");

    const std::string command_echo = join_args(argc, argv);

    // ---- rp ----------------------------------------------------------------
    auto* rp_cmd = app.add_subcommand("rp", "relative probability of one outcome y");
    std::uint32_t rp_n = 25;
    std::uint64_t rp_x0 = 0, rp_r = 1, rp_y = 0;
    std::string rp_spec = "integral";
    rp_cmd->add_option("--n", rp_n, "register width in bits")->required();
    rp_cmd->add_option("--x0", rp_x0, "offset of the periodic state")->required();
    rp_cmd->add_option("--r", rp_r, "period of the state")->required();
    rp_cmd->add_option("--y", rp_y, "measured outcome")->required();
    rp_cmd->add_option("--spec", rp_spec, "transform: qft | aqft:m | maqft:m | integral");

    // ---- scan-full ---------------------------------------------------------
    auto* full_cmd = app.add_subcommand("scan-full", "exhaustive outcome scan with threshold hits");
    std::uint32_t full_n = 20;
    std::uint64_t full_x0 = 0, full_r = 2;
    std::string full_spec = "integral";
    double full_threshold = 0.05;
    bool full_rows = false;
    full_cmd->add_option("--n", full_n, "register width in bits")->required();
    full_cmd->add_option("--x0", full_x0, "offset of the periodic state")->required();
    full_cmd->add_option("--r", full_r, "period of the state")->required();
    full_cmd->add_option("--spec", full_spec, "transform: qft | aqft:m | maqft:m | integral");
    full_cmd->add_option("--threshold", full_threshold, "relative-probability hit threshold");
    full_cmd->add_flag("--rows", full_rows, "include per-window rows in the JSON payload");

    // ---- scan-peaks --------------------------------------------------------
    auto* peaks_cmd = app.add_subcommand("scan-peaks", "scan only the expected peak windows");
    std::uint32_t peaks_n = 20;
    std::uint64_t peaks_x0 = 0, peaks_r = 2;
    std::string peaks_spec = "integral";
    bool peaks_rows = false;
    peaks_cmd->add_option("--n", peaks_n, "register width in bits")->required();
    peaks_cmd->add_option("--x0", peaks_x0, "offset of the periodic state")->required();
    peaks_cmd->add_option("--r", peaks_r, "period of the state")->required();
    peaks_cmd->add_option("--spec", peaks_spec, "transform: qft | aqft:m | maqft:m | integral");
    peaks_cmd->add_flag("--rows", peaks_rows, "include per-window rows in the JSON payload");

    // ---- table -------------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "seeded random-run minimum-probability table");
    std::uint32_t table_from = 20, table_to = 27;
    std::string table_spec = "integral";
    unsigned table_runs = 3;
    std::uint64_t table_seed = qift::kDefaultSeed;
    std::string table_parity = "odd";
    bool table_no_fit = false;
    table_cmd->add_option("--n-from", table_from, "first register width")->required();
    table_cmd->add_option("--n-to", table_to, "last register width")->required();
    table_cmd->add_option("--spec", table_spec, "transform: qft | aqft:m | maqft:m | integral");
    table_cmd->add_option("--runs", table_runs, "random runs per width");
    table_cmd->add_option("--seed", table_seed, "base seed for the per-width draws");
    table_cmd->add_option("--r-parity", table_parity, "period parity filter: odd | even | any")
        ->check(CLI::IsMember({"odd", "even", "any"}));
    table_cmd->add_flag("--no-fit", table_no_fit, "skip the power-law fit");

    // ---- cf ----------------------------------------------------------------
    auto* cf_cmd = app.add_subcommand("cf", "continued-fraction recovery of y / 2^n");
    std::uint64_t cf_y = 0;
    std::uint32_t cf_n = 25;
    std::uint64_t cf_bound = 0;
    bool cf_convergents_only = false;
    cf_cmd->add_option("--y", cf_y, "measured outcome")->required();
    cf_cmd->add_option("--n", cf_n, "register width in bits")->required();
    cf_cmd->add_option("--bound", cf_bound, "denominator bound (default 2^ceil(n/2))");
    cf_cmd->add_flag("--convergents-only", cf_convergents_only,
                     "restrict recovery to plain convergents");

    // ---- factor ------------------------------------------------------------
    auto* factor_cmd = app.add_subcommand("factor", "toy order-finding factorization");
    std::uint64_t factor_target = 15;
    unsigned factor_c_min = 2;
    std::string factor_spec = "integral";
    std::uint64_t factor_seed = qift::kDefaultSeed;
    std::uint64_t factor_base = 0;
    unsigned factor_attempts = 20;
    factor_cmd->add_option("--target", factor_target, "odd composite to factor (<= 1024)")
        ->required();
    factor_cmd->add_option("--c-min", factor_c_min, "minimum multiple of target^2 for 2^n");
    factor_cmd->add_option("--spec", factor_spec, "transform: qft | aqft:m | maqft:m | integral");
    factor_cmd->add_option("--seed", factor_seed, "seed for base and offset draws");
    factor_cmd->add_option("--base", factor_base, "fixed first base (0 = draw randomly)");
    factor_cmd->add_option("--max-attempts", factor_attempts, "attempt budget");

    // ---- bound -------------------------------------------------------------
    auto* bound_cmd = app.add_subcommand("bound", "approximation-quality lower bound for AQFT(m)");
    std::uint32_t bound_n = 4;
    std::uint32_t bound_m = 4;
    bound_cmd->add_option("--n", bound_n, "register width in bits")->required();
    bound_cmd->add_option("--m", bound_m, "phase-shift depth")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Stopwatch timer;

    if (rp_cmd->parsed()) {
        const qift::TransformSpec spec = qift::TransformSpec::parse(rp_spec);
        const qift::PeriodicState state(rp_n, rp_x0, rp_r);
        if (rp_y >= state.modulus()) throw std::invalid_argument("y must satisfy y < 2^n");
        const qift::RelProb rel = qift::rp(state, spec, rp_y);
        const double probability = qift::prob_from_rp(rel, state);
        nlohmann::json payload(nlohmann::json::value_t::object);
        payload["n"] = state.n;
        payload["x0"] = state.x0;
        payload["r"] = state.r;
        payload["term_count"] = state.term_count();
        payload["y"] = rp_y;
        payload["spec"] = qift::to_json(spec);
        payload["rp"] = qift::to_json(rel);
        payload["prob"] = probability;
        std::ostringstream human;
        human << "rp = " << fmt6(rel.value) << (rel.exact ? " (exact)" : "") << '\n'
              << "prob = " << fmt6(probability) << '\n';
        emit(opts, make_envelope(command_echo, payload, timer.elapsed_ms(), &spec), human.str());
        return 0;
    }

    if (full_cmd->parsed()) {
        const qift::TransformSpec spec = qift::TransformSpec::parse(full_spec);
        const qift::PeriodicState state(full_n, full_x0, full_r);
        const qift::ScanReport report = qift::full_scan(state, spec, full_threshold,
                                                        opts.threads, opts.force, full_rows);
        emit(opts, make_envelope(command_echo, qift::to_json(report), timer.elapsed_ms(), &spec),
             scan_human(report));
        return 0;
    }

    if (peaks_cmd->parsed()) {
        const qift::TransformSpec spec = qift::TransformSpec::parse(peaks_spec);
        const qift::PeriodicState state(peaks_n, peaks_x0, peaks_r);
        const qift::ScanReport report =
            qift::peak_scan(state, spec, opts.threads, opts.force, peaks_rows);
        emit(opts, make_envelope(command_echo, qift::to_json(report), timer.elapsed_ms(), &spec),
             scan_human(report));
        return 0;
    }

    if (table_cmd->parsed()) {
        const qift::TransformSpec spec = qift::TransformSpec::parse(table_spec);
        qift::RParity parity = qift::RParity::Odd;
        if (table_parity == "even") parity = qift::RParity::Even;
        if (table_parity == "any") parity = qift::RParity::Any;
        const qift::TableResult result =
            qift::table_reproduce(table_from, table_to, spec, table_runs, table_seed, parity,
                                  opts.threads, opts.force, !table_no_fit);
        const std::string csv = qift::table_csv(result);
        std::ostringstream human;
        human << csv;
        if (result.has_fit) {
            human << "fit: pr_min ~ C / n^c with C = " << fmt6(result.fit.constant)
                  << ", c = " << fmt6(result.fit.exponent) << '\n';
        }
        emit(opts,
             make_envelope(command_echo, qift::to_json(result), timer.elapsed_ms(), &spec,
                           &table_seed),
             human.str(), csv);
        return 0;
    }

    if (cf_cmd->parsed()) {
        qift::detail::check_width(cf_n);
        const std::uint64_t modulus = std::uint64_t{1} << cf_n;
        if (cf_y >= modulus) throw std::invalid_argument("y must satisfy y < 2^n");
        const std::uint64_t bound = cf_bound == 0 ? std::uint64_t{1} << ((cf_n + 1) / 2) : cf_bound;
        const qift::Fraction best = qift::best_approx(cf_y, modulus, bound, cf_convergents_only);
        const auto ladder = qift::convergent_ladder(cf_y, modulus);
        nlohmann::json payload(nlohmann::json::value_t::object);
        payload["y"] = cf_y;
        payload["n"] = cf_n;
        payload["modulus"] = modulus;
        payload["bound"] = bound;
        payload["convergents_only"] = cf_convergents_only;
        payload["best"] = qift::to_json(best);
        payload["is_best_under_bound"] = !cf_convergents_only;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : ladder) {
            nlohmann::json item(nlohmann::json::value_t::object);
            item["quotient"] = row.quotient;
            item["convergent"] = qift::to_json(row.convergent);
            rows.push_back(item);
        }
        payload["ladder"] = rows;
        std::ostringstream human;
        human << "best = " << best.num << '/' << best.den << '\n';
        for (const auto& row : ladder) {
            human << "  a = " << row.quotient << "  ->  " << row.convergent.num << '/'
                  << row.convergent.den << '\n';
        }
        emit(opts, make_envelope(command_echo, payload, timer.elapsed_ms()), human.str());
        return 0;
    }

    if (factor_cmd->parsed()) {
        const qift::TransformSpec spec = qift::TransformSpec::parse(factor_spec);
        qift::FactorJob job;
        job.target = factor_target;
        job.base = factor_base;
        job.c_min = factor_c_min;
        job.max_attempts = factor_attempts;
        job.seed = factor_seed;
        const qift::FactorResult result = qift::run_factor(job, spec, opts.threads);
        std::ostringstream human;
        human << "target = " << result.target << ", n = " << result.n
              << " (effective c = " << fmt6(result.effective_c) << ")\n";
        for (const auto& rec : result.transcript) {
            human << "attempt " << rec.attempt << ": base = " << rec.base;
            if (rec.order > 0) human << ", order = " << rec.order;
            if (rec.order > 0) {
                human << ", y = " << rec.y << ", recovered = " << rec.recovered.num << '/'
                      << rec.recovered.den;
            }
            human << " -> " << rec.outcome;
            if (rec.factor1 != 0) human << " (" << rec.factor1 << " x " << rec.factor2 << ")";
            human << '\n';
        }
        if (result.success) {
            human << "success: " << result.target << " = " << result.factor1 << " x "
                  << result.factor2 << " after " << result.attempts_used << " attempt(s)\n";
        } else {
            human << "no factors found in " << result.attempts_used << " attempt(s)\n";
        }
        emit(opts,
             make_envelope(command_echo, qift::to_json(result), timer.elapsed_ms(), &spec,
                           &factor_seed),
             human.str());
        return 0;
    }

    if (bound_cmd->parsed()) {
        const double value = qift::barenco_bound(bound_n, bound_m);
        const bool guaranteed = qift::barenco_guaranteed(bound_n, bound_m);
        nlohmann::json payload(nlohmann::json::value_t::object);
        payload["n"] = bound_n;
        payload["m"] = bound_m;
        payload["bound"] = value;
        payload["guaranteed"] = guaranteed;
        std::ostringstream human;
        human << "bound = " << fmt6(value) << (guaranteed ? " (guaranteed)" : " (heuristic range)")
              << '\n';
        emit(opts, make_envelope(command_echo, payload, timer.elapsed_ms()), human.str());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const qift::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
