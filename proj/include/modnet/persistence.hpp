#pragma once

#include <filesystem>
#include <string_view>

#include "modnet/dataset.hpp"
#include "modnet/modulation.hpp"
#include "modnet/network.hpp"

namespace modnet {

/// Current on-disk schema version for all persisted types.
inline constexpr int kFormatVersion = 1;

/// Persisted files are JSON trees with every real printed to 17
/// significant digits, so save -> load round trips are bit-identical for
/// binary64 values. A 64-bit payload checksum is verified on load;
/// writes go to a temp file renamed into place.
void save_network(const Network& net, const std::filesystem::path& path, std::string_view provenance = "");
Network load_network(const std::filesystem::path& path);

void save_modmatrix(const ModulationMatrix& mod, const std::filesystem::path& path, std::string_view provenance = "");
ModulationMatrix load_modmatrix(const std::filesystem::path& path);

void save_dataset(const Dataset& data, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace modnet
