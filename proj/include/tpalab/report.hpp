#pragma once

#include "tpalab/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tpalab {

struct IntRange {
    size_t lo = 1, hi = 0;  // inclusive; lo > hi is empty
    bool empty() const { return lo > hi; }
};
// "A..B" or "A"
IntRange parse_range(const std::string& s);

struct ReportEntry {
    Family family;
    Params params;
    size_t n = 0;
    std::string check;  // lie_axioms, halfder_dim, tpa_linear_dim, tp_verify, normalization, invariance
    std::string variant;
    std::string expected, computed;
    std::optional<bool> pass;  // empty for disputed variants
    std::string notes;
};

struct ReportDocument {
    std::string tool_version;
    std::string generated_at;
    std::vector<ReportEntry> entries;
    // every entry with a verdict passed
    bool all_passed() const;
};

// worker count: TPA_LAB_THREADS if set and positive, else hardware concurrency
size_t worker_count();

ReportDocument run_verify_all(IntRange n_s, IntRange n_r, std::uint64_t seed, size_t threads = 0);
json report_to_json(const ReportDocument& doc);

extern const char* const kToolVersion;

}  // namespace tpalab
