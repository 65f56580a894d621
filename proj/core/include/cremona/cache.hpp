#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

enum class EnumerationKind { Noether, Proper };

/// On-disk memo of enumeration results: one JSON array of type objects per
/// degree, named noether-<d>.json / proper-<d>.json, each with a sidecar
/// <name>.fnv1a holding the 64-bit FNV-1a digest of the file bytes.
/// A file whose digest or content does not check out is ignored.
class EnumerationCache {
public:
    explicit EnumerationCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path file_for(EnumerationKind kind, Int degree) const;

    std::optional<std::vector<HomaloidalType>> load(EnumerationKind kind, Int degree) const;
    void store(EnumerationKind kind, Int degree, const std::vector<HomaloidalType>& types) const;

private:
    std::filesystem::path dir_;
};

/// Canonical serialisation used for cache files (and `enum --json`).
std::string types_to_json_text(const std::vector<HomaloidalType>& types);

std::string fnv1a_hex(const std::string& bytes);

/// Enumerates through the cache when one is given.
std::vector<HomaloidalType> enumerate_cached(EnumerationKind kind, Int degree, const EnumerationCache* cache,
                                             unsigned threads = 1);

}  // namespace cremona
