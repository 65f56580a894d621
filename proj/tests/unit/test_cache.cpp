#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cremona/cache.hpp"
#include "cremona/enumeration.hpp"

using namespace cremona;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("cremona-cache-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cache, StoreAndLoad) {
    const EnumerationCache cache(fresh_dir("roundtrip"));
    const auto types = enumerate_proper(9);
    EXPECT_FALSE(cache.load(EnumerationKind::Proper, 9).has_value());
    cache.store(EnumerationKind::Proper, 9, types);
    const auto loaded = cache.load(EnumerationKind::Proper, 9);
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(*loaded, types);
    EXPECT_EQ(cache.file_for(EnumerationKind::Noether, 4).filename(), "noether-4.json");
    EXPECT_EQ(cache.file_for(EnumerationKind::Proper, 4).filename(), "proper-4.json");
}

TEST(Cache, ChecksumMismatchIsIgnored) {
    const auto dir = fresh_dir("corrupt");
    const EnumerationCache cache(dir);
    cache.store(EnumerationKind::Proper, 6, enumerate_proper(6));
    const auto file = cache.file_for(EnumerationKind::Proper, 6);
    {
        std::ofstream out(file, std::ios::trunc);
        out << "[{\"degree\":6,\"mults\":[5,1,1,1,1,1,1,1,1,1,1]}]\n";
    }
    EXPECT_FALSE(cache.load(EnumerationKind::Proper, 6).has_value());
    EXPECT_EQ(enumerate_cached(EnumerationKind::Proper, 6, &cache), enumerate_proper(6));
    EXPECT_TRUE(cache.load(EnumerationKind::Proper, 6).has_value());
}

TEST(Cache, ValidChecksumButWrongContentIsIgnored) {
    const EnumerationCache cache(fresh_dir("wrong"));
    const auto file = cache.file_for(EnumerationKind::Proper, 5);
    std::filesystem::create_directories(file.parent_path());
    const std::string text = types_to_json_text({parse_homaloidal_type("5;3,3,1^6")});
    std::ofstream(file) << text;
    auto sum = file;
    sum += ".fnv1a";
    std::ofstream(sum) << fnv1a_hex(text) << "\n";
    EXPECT_FALSE(cache.load(EnumerationKind::Proper, 5).has_value());
    EXPECT_TRUE(cache.load(EnumerationKind::Noether, 5) == std::nullopt);
}

TEST(Cache, FileFormat) {
    const EnumerationCache cache(fresh_dir("format"));
    cache.store(EnumerationKind::Noether, 2, enumerate_noether(2));
    EXPECT_EQ(slurp(cache.file_for(EnumerationKind::Noether, 2)), "[{\"degree\":2,\"mults\":[1,1,1]}]\n");
}

TEST(Cache, Fnv1aKnownValues) {
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
