#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermite/field.hpp"

namespace hermite {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample or summary counts
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    // all | field | partitions | tensor | polyring | iso | hunter
    std::string suite = "all";
    // When set, randomized field-generic checks run over this field only;
    // checks with pinned field lists always run as specified.
    std::optional<FieldSpec> field_filter;
};

// Runs the property checks of every module at their stated desk-scale
// bounds. Deterministic for a fixed seed; result order is fixed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

} // namespace hermite
