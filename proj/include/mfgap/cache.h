#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "mfgap/cuspspace.h"

namespace mfgap::cache {

inline constexpr const char* kEngineVersion = "mfgap-1.0";

/// "MFBASIS v1 <level> <weight> <precision> <dim>", then one line of
/// coefficients q^1..q^B per row, plus a JSON sidecar <file>.json with
/// {engineVersion, sturmBound, pivots}.
void write_basis(const SpaceBasis& b, const std::filesystem::path& file);
/// Throws std::runtime_error on a malformed file or header/body mismatch.
SpaceBasis read_basis(const std::filesystem::path& file);

std::string file_name(int64_t level, int64_t weight, int64_t precision);

/// MFCACHE, when set and non-empty, overrides the command-line directory.
std::optional<std::filesystem::path> resolve_dir(const std::string& cli_dir);

/// Reuses a cached basis of precision >= B (truncated to B) or builds and
/// stores one. Without a directory it just builds.
SpaceBasis load_or_build(int64_t level, int64_t weight, int64_t precision,
                         const std::optional<std::filesystem::path>& dir, const msengine::BuildOptions& opts = {},
                         bool* from_cache = nullptr);

}  // namespace mfgap::cache
