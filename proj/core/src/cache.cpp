#include "cremona/cache.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cremona/enumeration.hpp"
#include "cremona/json_io.hpp"

namespace cremona {

namespace {

std::optional<std::string> read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomically(const std::filesystem::path& p, const std::string& bytes) {
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << bytes;
    }
    std::filesystem::rename(tmp, p);
}

bool valid_listing(EnumerationKind kind, Int degree, const std::vector<HomaloidalType>& types) {
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (types[i].degree() != degree) return false;
        if (i > 0 && !(types[i] < types[i - 1])) return false;
        if (kind == EnumerationKind::Proper && !is_proper(types[i])) return false;
    }
    return true;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::filesystem::path EnumerationCache::file_for(EnumerationKind kind, Int degree) const {
    const char* prefix = kind == EnumerationKind::Proper ? "proper-" : "noether-";
    return dir_ / (prefix + std::to_string(degree) + ".json");
}

std::optional<std::vector<HomaloidalType>> EnumerationCache::load(EnumerationKind kind, Int degree) const {
    const auto path = file_for(kind, degree);
    auto sum_path = path;
    sum_path += ".fnv1a";
    const auto bytes = read_file(path);
    const auto digest = read_file(sum_path);
    if (!bytes || !digest) return std::nullopt;
    std::string expected = *digest;
    while (!expected.empty() && std::isspace(static_cast<unsigned char>(expected.back()))) expected.pop_back();
    if (expected != fnv1a_hex(*bytes)) return std::nullopt;

    std::vector<HomaloidalType> types;
    try {
        const auto j = nlohmann::json::parse(*bytes);
        if (!j.is_array()) return std::nullopt;
        for (const auto& item : j) types.push_back(homaloidal_type_from_json(item));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!valid_listing(kind, degree, types)) return std::nullopt;
    return types;
}

void EnumerationCache::store(EnumerationKind kind, Int degree, const std::vector<HomaloidalType>& types) const {
    std::filesystem::create_directories(dir_);
    const auto path = file_for(kind, degree);
    const auto text = types_to_json_text(types);
    auto sum_path = path;
    sum_path += ".fnv1a";
    write_file_atomically(path, text);
    write_file_atomically(sum_path, fnv1a_hex(text) + "\n");
}

std::string types_to_json_text(const std::vector<HomaloidalType>& types) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& t : types) j.push_back(t);
    return j.dump() + "\n";
}

std::vector<HomaloidalType> enumerate_cached(EnumerationKind kind, Int degree, const EnumerationCache* cache,
                                             unsigned threads) {
    if (cache) {
        if (auto hit = cache->load(kind, degree)) return *std::move(hit);
    }
    auto types = kind == EnumerationKind::Proper ? enumerate_proper(degree, threads) : enumerate_noether(degree, threads);
    if (cache) cache->store(kind, degree, types);
    return types;
}

}  // namespace cremona
