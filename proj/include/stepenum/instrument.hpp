#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stepenum/regularize.hpp"
#include "stepenum/trace.hpp"

namespace stepenum {

/// Least-squares fit of log d_i = log scale + exponent log i.
struct FitResult {
    double exponent_hat = 0;
    double scale_hat = 0;
    double r_squared = 0;
    std::size_t i_min = 0;  ///< window actually used (inclusive)
    std::size_t i_max = 0;
    std::size_t points = 0;
    std::vector<std::size_t> excluded;  ///< zero delays left out of the fit

    nlohmann::json to_json() const;
};

inline constexpr std::size_t kMinFitPoints = 8;

/// Fits delays d_i for i in [max(1, i_min), min(i_max, n-1)]: the pre- and
/// postcomputation phases are not part of the power law. Zero delays are
/// excluded and listed. Throws InsufficientData if the window holds fewer
/// than 8 delays, DegenerateTrace if fewer than 8 remain after exclusion.
FitResult fit_exponent(const DelayTrace& trace, std::size_t i_min, std::size_t i_max);

/// Default window [max(8, n/100), n].
FitResult fit_exponent(const DelayTrace& trace);

enum class BoundKind { Delay, CapTotal };

struct BoundReport {
    BoundKind kind = BoundKind::Delay;
    unsigned a = 0;
    Cost t_k = 0;
    Cost p_n = 0;
    bool pass = true;
    std::optional<std::size_t> first_violation;
    double max_ratio = 0;  ///< max observed / bound; > 1 exactly when pass is false

    nlohmann::json to_json() const;
};

/// d_0 <= t p and d_i <= t p i^a for 1 <= i <= n (0^0 = 1).
BoundReport check_delay_bound(const DelayTrace& trace, Cost t_k, Cost p_n, unsigned a);

/// Cumulative cost at emission i <= t p i^a for 1 <= i <= n.
BoundReport check_cap_bound(const DelayTrace& trace, Cost t_k, Cost p_n, unsigned a);

struct MemoryProfile {
    std::size_t max_queue = 0;
    std::vector<QueueSample> samples;

    nlohmann::json to_json() const;
};

/// Throws NoSamples if the run was made without queue sampling.
MemoryProfile memory_profile(const RegularizerProfile& run);

void write_queue_csv(std::ostream& out, const MemoryProfile& profile);

/// One run's entry in a report.
struct RunRecord {
    std::string problem;
    std::string instance_digest;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::string trace_csv_path;
    std::size_t solutions_count = 0;
    std::vector<FitResult> fits;
    std::vector<BoundReport> bounds;
    std::optional<MemoryProfile> memory;
    std::optional<std::size_t> violation;  ///< bound-violation index of the run, if any
    std::vector<std::size_t> late_emissions;

    bool pass() const;
    nlohmann::json to_json() const;
};

inline constexpr const char* kReportSchemaVersion = "1";

/// {schema_version, runs: [...], overall_pass}. Byte-for-byte deterministic
/// for identical inputs (keys are emitted in sorted order).
nlohmann::json report(std::span<const RunRecord> runs);

/// Merges run entries of several report documents into one.
nlohmann::json merge_reports(std::span<const nlohmann::json> documents);

/// 64-bit FNV-1a of the instance bytes, as "fnv1a64:<16 hex digits>".
std::string instance_digest(std::string_view raw);

}  // namespace stepenum
