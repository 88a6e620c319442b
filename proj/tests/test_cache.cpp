#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stirlab/cache.hpp"
#include "stirlab/triangle.hpp"

using namespace stirlab;
namespace fs = std::filesystem;

namespace {

struct temp_dir {
    fs::path path;

    temp_dir() {
        std::mt19937_64 rng(std::random_device{}());
        path = fs::temp_directory_path() /
               ("stirlab-cache-test-" + std::to_string(rng()));
        fs::create_directories(path);
    }
    ~temp_dir() { fs::remove_all(path); }
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes body plus a correct checksum footer, bypassing store(), so tests
// can feed the loader arbitrary well-checksummed content.
void write_with_footer(const fs::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << body << "checksum fnv1a " << detail::fnv1a_hex(body) << "\n";
}

std::vector<std::vector<Int>> rows_for(const triangle_kind& kind, std::size_t n_max) {
    triangle t(kind);
    t.ensure(n_max);
    return t.rows();
}

}  // namespace

TEST_CASE("fnv1a matches the published 64-bit vectors", "[cache]") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ull);
    CHECK(detail::fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("store then load round-trips triangle rows", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    const auto kind = triangle_kind::second_max(3);
    const auto rows = rows_for(kind, 10);

    cache.store(kind, rows);
    CHECK(fs::exists(dir.path / "rows-s2max3.txt"));
    CHECK(cache.load(kind) == rows);
}

TEST_CASE("load returns nothing for an absent file", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    CHECK(cache.load(triangle_kind::second()).empty());
}

TEST_CASE("store creates missing directories", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path / "nested" / "deeper");
    const auto kind = triangle_kind::first();
    cache.store(kind, rows_for(kind, 4));
    CHECK(cache.load(kind).size() == 5);
}

TEST_CASE("store replaces the file and leaves no temp behind", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    const auto kind = triangle_kind::second_r(2);

    cache.store(kind, rows_for(kind, 5));
    cache.store(kind, rows_for(kind, 12));
    CHECK(cache.load(kind).size() == 13);

    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++entries;
    CHECK(entries == 1);
}

TEST_CASE("loaded rows seed a triangle that extends correctly", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    const auto kind = triangle_kind::second_min(2);
    cache.store(kind, rows_for(kind, 9));

    triangle seeded(kind);
    seeded.seed(cache.load(kind));
    seeded.ensure(15);

    triangle fresh(kind);
    fresh.ensure(15);
    CHECK(seeded.rows() == fresh.rows());
}

TEST_CASE("loader rejects malformed files wholesale", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    const auto kind = triangle_kind::second();
    const fs::path file = cache.file_for(kind);

    SECTION("empty file") {
        std::ofstream(file).close();
        CHECK(cache.load(kind).empty());
    }
    SECTION("footer only") {
        write_with_footer(file, "");
        CHECK(cache.load(kind).empty());
    }
    SECTION("missing footer") {
        std::ofstream(file) << "stirlab-rows v1 s2\n0 1\n";
        CHECK(cache.load(kind).empty());
    }
    SECTION("wrong header version") {
        write_with_footer(file, "stirlab-rows v2 s2\n0 1\n");
        CHECK(cache.load(kind).empty());
    }
    SECTION("header names a different kind") {
        write_with_footer(file, "stirlab-rows v1 s2max3\n0 1\n");
        CHECK(cache.load(kind).empty());
    }
    SECTION("row indices out of order") {
        write_with_footer(file, "stirlab-rows v1 s2\n0 1\n2 0 1 1\n");
        CHECK(cache.load(kind).empty());
    }
    SECTION("row length does not match its index") {
        write_with_footer(file, "stirlab-rows v1 s2\n0 1\n1 0 1 9\n");
        CHECK(cache.load(kind).empty());
    }
    SECTION("non-numeric token") {
        write_with_footer(file, "stirlab-rows v1 s2\n0 1\n1 0 x\n");
        CHECK(cache.load(kind).empty());
    }
    SECTION("negative value") {
        write_with_footer(file, "stirlab-rows v1 s2\n0 1\n1 0 -1\n");
        CHECK(cache.load(kind).empty());
    }
    SECTION("blank row line") {
        write_with_footer(file, "stirlab-rows v1 s2\n0 1\n\n1 0 1\n");
        CHECK(cache.load(kind).empty());
    }
}

TEST_CASE("loader rejects content that fails its checksum", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    const auto kind = triangle_kind::second();
    cache.store(kind, rows_for(kind, 6));
    const fs::path file = cache.file_for(kind);

    SECTION("flipped digit in a row") {
        std::string content = read_file(file);
        const auto pos = content.find("1 0 1\n");
        REQUIRE(pos != std::string::npos);
        content[pos + 2] = '9';
        std::ofstream(file, std::ios::trunc) << content;
        CHECK(cache.load(kind).empty());
    }
    SECTION("tampered checksum digits") {
        std::string content = read_file(file);
        content[content.size() - 2] = content[content.size() - 2] == '0' ? '1' : '0';
        std::ofstream(file, std::ios::trunc) << content;
        CHECK(cache.load(kind).empty());
    }
    SECTION("truncated file") {
        std::string content = read_file(file);
        std::ofstream(file, std::ios::trunc) << content.substr(0, content.size() / 2);
        CHECK(cache.load(kind).empty());
    }
    SECTION("carriage return before the final newline still loads") {
        std::string content = read_file(file);
        content.insert(content.size() - 1, "\r");
        std::ofstream(file, std::ios::trunc) << content;
        CHECK(cache.load(kind).size() == 7);
    }
}

TEST_CASE("cache files are keyed per kind", "[cache]") {
    temp_dir dir;
    triangle_row_cache cache(dir.path);
    const auto plain = triangle_kind::second();
    const auto restricted = triangle_kind::second_max(2);

    cache.store(plain, rows_for(plain, 8));
    cache.store(restricted, rows_for(restricted, 5));

    CHECK(cache.load(plain).size() == 9);
    CHECK(cache.load(restricted).size() == 6);
    CHECK(cache.file_for(plain) != cache.file_for(restricted));
}
