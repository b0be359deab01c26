#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kuiper/io.hpp"

namespace kuiper {

struct TrialFailure {
    std::size_t trial = 0;
    std::string check;
    Json inputs;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<TrialFailure> failures;
    std::size_t exact = 0;    ///< trials whose comparisons were all exact
    std::size_t checked = 0;  ///< trials counted for exactness
    double wall_time_ms = 0.0;
    std::vector<VerifyReport> parts;  ///< per-suite reports for "all"

    std::size_t failure_count() const;
    /// "N/M exact".
    std::string exactness() const;
    Json to_json() const;
};

/// Suite names accepted by run_verify besides "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite, or every suite for "all". Deterministic in (name, seed,
/// trials) apart from wall_time_ms. Throws std::invalid_argument for an
/// unknown name.
VerifyReport run_verify(const std::string& name, std::uint64_t seed, std::size_t trials);

}  // namespace kuiper
