// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "ccarbon/store/documents.hpp"

namespace ccarbon::store {

/// Environment variable that overrides the compiled-in data directory.
inline constexpr const char* kDataDirEnvVar = "COMPUTE_CARBON_DATA";

/// Resolves the data directory: explicit override, then $COMPUTE_CARBON_DATA,
/// then the compiled-in default.
std::string data_dir(const std::string& override_path = "");

/// Reads a whole file; throws IoError if it cannot be opened or read.
std::string read_file(const std::string& path);

/// Loads and parses the factor set `<data_dir>/factors/<name>.factors`.
FactorSet load_factor_set(const std::string& name, const std::string& data_dir);

/// A profile document together with the factor set it was resolved against.
struct LoadedProfile {
    ProfileDocument doc;
    FactorSet factors;
    std::string path;
};

/// Loads a profile by path, or by preset name under `<data_dir>/profiles/`.
/// The factor set the document names is loaded from the same data directory.
LoadedProfile load_profile(const std::string& name_or_path, const std::string& data_dir);

/// Loads a grid table CSV by path. An empty path loads the bundled default,
/// `<data_dir>/grids/default.csv`.
GridTable load_grid_table(const std::string& path, const std::string& data_dir);

}  // namespace ccarbon::store
