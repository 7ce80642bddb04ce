#pragma once

// Landscape files.
//
// Text form:   "#MSL <kind> <n>\n" then n lines, one height each.
// Binary form: magic "MSL1", kind u8 (0 self, 1 general, 2 silhouette),
//              n u64, then n heights as u32; little-endian throughout.
// Heights are indexed by 0-based target position.

#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "../error.hpp"
#include "../landscape.hpp"
#include "index_file.hpp"

namespace mslkit::io {

enum class MslFormat { text, binary };

inline MslFormat parse_msl_format(std::string_view s) {
    if(s == "text") return MslFormat::text;
    if(s == "binary") return MslFormat::binary;
    throw InputError("unknown landscape format '" + std::string(s) + "' (expected text or binary)");
}

inline void write_msl_text(std::ostream& out, const MslArray& msl) {
    out << "#MSL " << to_string(msl.kind) << ' ' << msl.size() << '\n';
    for(auto h : msl.heights) out << h << '\n';
}

inline void write_msl_binary(std::ostream& out, const MslArray& msl) {
    out.write("MSL1", 4);
    detail::put_le<std::uint8_t>(out, static_cast<std::uint8_t>(msl.kind));
    detail::put_le<std::uint64_t>(out, msl.size());
    for(auto h : msl.heights) detail::put_le<std::uint32_t>(out, h);
}

inline MslArray read_msl(std::istream& in) {
    std::array<char, 4> head{};
    in.read(head.data(), 4);
    mslkit::detail::require_input(in.gcount() == 4, "landscape file too short");
    MslArray msl;
    if(std::string_view(head.data(), 4) == "MSL1") {
        const auto kind = detail::get_le<std::uint8_t>(in);
        mslkit::detail::require_input(kind <= 2, "landscape file: bad kind byte");
        msl.kind = static_cast<MslKind>(kind);
        const auto n = detail::get_le<std::uint64_t>(in);
        msl.heights.resize(n);
        for(auto& h : msl.heights) h = detail::get_le<std::uint32_t>(in);
        return msl;
    }
    mslkit::detail::require_input(std::string_view(head.data(), 4) == "#MSL", "not a landscape file");
    std::string header;
    std::getline(in, header);
    std::istringstream hs(header);
    std::string kind;
    std::uint64_t n = 0;
    mslkit::detail::require_input(static_cast<bool>(hs >> kind >> n), "landscape file: malformed header");
    msl.kind = parse_msl_kind(kind);
    msl.heights.reserve(n);
    std::string line;
    while(std::getline(in, line)) {
        if(line.empty()) continue;
        std::uint32_t h = 0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), h);
        mslkit::detail::require_input(ec == std::errc() && ptr == line.data() + line.size(),
                                      "landscape file: bad height '" + line + "'");
        msl.heights.push_back(h);
    }
    mslkit::detail::require_input(msl.heights.size() == n, "landscape file: expected " + std::to_string(n) +
                                                               " heights, found " + std::to_string(msl.heights.size()));
    return msl;
}

inline void write_msl_file(const std::filesystem::path& path, const MslArray& msl, MslFormat format) {
    std::ofstream out(path, std::ios::binary);
    mslkit::detail::require_input(out.good(), "cannot write '" + path.string() + "'");
    if(format == MslFormat::text) write_msl_text(out, msl); else write_msl_binary(out, msl);
}

inline MslArray read_msl_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    mslkit::detail::require_input(in.good(), "cannot open '" + path.string() + "'");
    return read_msl(in);
}

} // namespace mslkit::io
