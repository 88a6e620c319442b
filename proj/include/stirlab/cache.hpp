#pragma once

// On-disk cache of triangle rows, one text file per triangle kind:
//
//   stirlab-rows v1 <key>
//   0 1
//   1 0 1
//   2 0 1 1
//   ...
//   checksum fnv1a <16 hex digits>
//
// Row lines hold the index followed by the n+1 entries in decimal. The
// checksum covers every byte above its own line. Files are replaced
// atomically (write to a temp file, then rename); a file that fails any
// validation step is ignored wholesale and will be rebuilt. The cache is
// an accelerator, never an authority.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stirlab/bigint.hpp"
#include "stirlab/triangle.hpp"

namespace stirlab {

inline std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace detail {

inline std::string fnv1a_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(data)));
    return buf;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!std::isdigit(c)) return false;
    return true;
}

}  // namespace detail

class triangle_row_cache {
  public:
    explicit triangle_row_cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path file_for(const triangle_kind& kind) const {
        return dir_ / ("rows-" + kind.key() + ".txt");
    }

    // Rows 0..n for the given kind, or an empty vector when the file is
    // absent or fails any validation.
    std::vector<std::vector<Int>> load(const triangle_kind& kind) const {
        std::ifstream in(file_for(kind), std::ios::binary);
        if (!in) return {};
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse(buf.str(), kind);
    }

    // Atomically replaces the cache file for the kind with the given rows.
    void store(const triangle_kind& kind, const std::vector<std::vector<Int>>& rows) const {
        std::filesystem::create_directories(dir_);

        std::ostringstream out;
        out << "stirlab-rows v1 " << kind.key() << "\n";
        for (std::size_t n = 0; n < rows.size(); ++n) {
            out << n;
            for (const Int& v : rows[n]) out << ' ' << v;
            out << "\n";
        }
        const std::string body = out.str();

        const std::filesystem::path target = file_for(kind);
        const std::filesystem::path tmp = target.string() + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            f << body << "checksum fnv1a " << detail::fnv1a_hex(body) << "\n";
            if (!f) {
                std::filesystem::remove(tmp);
                return;
            }
        }
        std::filesystem::rename(tmp, target);
    }

  private:
    static std::vector<std::vector<Int>> parse(const std::string& content,
                                               const triangle_kind& kind) {
        const std::string footer_tag = "checksum fnv1a ";
        const std::size_t footer = content.rfind(footer_tag);
        if (footer == std::string::npos || footer == 0) return {};
        if (content[footer - 1] != '\n') return {};

        std::string_view hex(content);
        hex.remove_prefix(footer + footer_tag.size());
        while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r'))
            hex.remove_suffix(1);
        if (detail::fnv1a_hex(std::string_view(content).substr(0, footer)) != hex)
            return {};

        std::istringstream in(content.substr(0, footer));
        std::string line;
        if (!std::getline(in, line) || line != "stirlab-rows v1 " + kind.key()) return {};

        std::vector<std::vector<Int>> rows;
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            std::string tok;
            if (!(fields >> tok) || !detail::all_digits(tok)) return {};
            if (Int(tok) != rows.size()) return {};
            std::vector<Int> row;
            while (fields >> tok) {
                if (!detail::all_digits(tok)) return {};
                row.emplace_back(tok);
            }
            if (row.size() != rows.size() + 1) return {};
            rows.push_back(std::move(row));
        }
        return rows;
    }

    std::filesystem::path dir_;
};

}  // namespace stirlab
