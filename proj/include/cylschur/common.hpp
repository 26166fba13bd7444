#pragma once

#include <stdexcept>
#include <string>

namespace cylschur {

// Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maps to CLI exit code 3.
struct cost_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EpsilonMode { FloorOfTotal, PerTerm };

struct Config {
    int maxSubsetEdges = 24;       // 2^|E| signed-sum guard
    long long maxTilingBoxes = 30; // tiling search guard
    int maxPermSize = 8;           // n! signed-sum guard
    EpsilonMode epsilonMode = EpsilonMode::FloorOfTotal;
};

// Reads CYLSCHUR_MAX_SUBSET_EDGES, CYLSCHUR_MAX_TILING_BOXES,
// CYLSCHUR_MAX_PERM and CYLSCHUR_EPSILON_MODE (floor|perterm) once.
Config& config();

}
