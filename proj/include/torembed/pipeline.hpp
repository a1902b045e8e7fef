#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "torembed/io.hpp"

namespace torembed {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitInvalidFan = 2,
    kExitNotProjective = 3,
    kExitRetriesExhausted = 4,
};

struct RunConfig {
    /// Exactly one of fan_path and preset must be set.
    std::optional<std::filesystem::path> fan_path;
    std::optional<std::string> preset;
    /// Divisor file; unset means "auto" (find_ample).
    std::optional<std::filesystem::path> ample_path;
    XiMethod xi_method = XiMethod::Intersection;
    std::uint64_t seed = 0;
    TorusElement torus = default_torus();
    /// Further attempts (seed + 1, seed + 2, ...) after a failed certificate.
    int max_retries = 3;
    std::optional<std::filesystem::path> out_dir;
    VerifyOptions verify;
};

Json config_to_json(const RunConfig& config);
RunConfig config_from_json(const Json& j);

/// "a,b,c" with each entry an integer or p/q, all nonzero.
TorusElement parse_torus(const std::string& text);

struct RunOutcome {
    int exit_code = kExitOk;
    Json report;
    std::optional<EmbeddingData> data;
    std::optional<Certificate> certificate;
    int retries = 0;
};

/// validate -> ample divisor -> xi -> sample -> conditions -> charts -> certify,
/// retrying with the next seed while the certificate fails. Never throws for
/// library errors; they are mapped to exit codes and described in the report.
RunOutcome run_pipeline(const RunConfig& config);

/// Resolves the fan source of a config (file or preset).
Fan load_fan_source(const RunConfig& config);

/// Maps a library error to its exit code.
int exit_code_for(const std::exception& e);
Json error_to_json(const std::exception& e);

}  // namespace torembed
