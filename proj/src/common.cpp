#include "cylschur/common.hpp"

#include <cstdlib>

namespace cylschur {

namespace {

long long env_int(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0') {
        throw input_error(std::string(name) + ": not an integer: " + v);
    }
    return parsed;
}

Config load_config() {
    Config c;
    c.maxSubsetEdges = static_cast<int>(env_int("CYLSCHUR_MAX_SUBSET_EDGES", c.maxSubsetEdges));
    c.maxTilingBoxes = env_int("CYLSCHUR_MAX_TILING_BOXES", c.maxTilingBoxes);
    c.maxPermSize = static_cast<int>(env_int("CYLSCHUR_MAX_PERM", c.maxPermSize));
    if (const char* m = std::getenv("CYLSCHUR_EPSILON_MODE")) {
        std::string s(m);
        if (s == "floor") {
            c.epsilonMode = EpsilonMode::FloorOfTotal;
        } else if (s == "perterm") {
            c.epsilonMode = EpsilonMode::PerTerm;
        } else if (!s.empty()) {
            throw input_error("CYLSCHUR_EPSILON_MODE: expected floor or perterm, got " + s);
        }
    }
    return c;
}

}

Config& config() {
    static Config c = load_config();
    return c;
}

}
