#pragma once

// Binary suffix-index file ("SLIX"), all integers little-endian:
//
//   offset  size  field
//   0       4     magic "SLIX"
//   4       2     format version (1)
//   6       2     flags: bit 0 = 64-bit array entries, bit 1 = generic text mode
//   8       8     n, text length including the sentinel
//   16      ...   four arrays, each as u64 length followed by that many
//                 entries (u32, or u64 when flag bit 0 is set):
//                 sa (n), lcp (n-1), inv (n), sp (n)
//   ...     n     text bytes, sentinel last
//
// Entries are 0-based. The sp entry of the sentinel suffix is the all-ones
// value of the entry width. Bit 0 is set iff n >= 2^32.

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../suffix_index.hpp"

namespace mslkit::io {

inline constexpr std::array<char, 4> kIndexMagic = {'S', 'L', 'I', 'X'};
inline constexpr std::uint16_t kIndexVersion = 1;
inline constexpr std::uint16_t kIndexFlagWide = 0x1;
inline constexpr std::uint16_t kIndexFlagGeneric = 0x2;

namespace detail {

template<typename T>
void put_le(std::ostream& out, T v) {
    std::array<char, sizeof(T)> buf{};
    for(std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
    out.write(buf.data(), buf.size());
}

template<typename T>
T get_le(std::istream& in) {
    std::array<unsigned char, sizeof(T)> buf{};
    in.read(reinterpret_cast<char*>(buf.data()), buf.size());
    mslkit::detail::require_input(in.gcount() == static_cast<std::streamsize>(buf.size()), "unexpected end of file");
    std::uint64_t v = 0;
    for(std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return static_cast<T>(v);
}

template<typename Index>
void put_array(std::ostream& out, const std::vector<Index>& a, bool wide) {
    put_le<std::uint64_t>(out, a.size());
    for(Index v : a) {
        if(wide) {
            put_le<std::uint64_t>(out, v == std::numeric_limits<Index>::max() ? std::numeric_limits<std::uint64_t>::max() : v);
        } else {
            put_le<std::uint32_t>(out, static_cast<std::uint32_t>(v));
        }
    }
}

template<typename Index>
std::vector<Index> get_array(std::istream& in, bool wide, std::uint64_t expected) {
    const auto len = get_le<std::uint64_t>(in);
    mslkit::detail::require_input(len == expected, "index file: array length mismatch");
    std::vector<Index> a(len);
    for(auto& v : a) {
        const std::uint64_t raw = wide ? get_le<std::uint64_t>(in) : get_le<std::uint32_t>(in);
        const std::uint64_t none = wide ? std::numeric_limits<std::uint64_t>::max() : std::numeric_limits<std::uint32_t>::max();
        if(raw == none) {
            v = std::numeric_limits<Index>::max();
        } else {
            mslkit::detail::require_input(raw < std::numeric_limits<Index>::max(), "index file: entry too wide");
            v = static_cast<Index>(raw);
        }
    }
    return a;
}

} // namespace detail

template<typename Index>
void write_index(std::ostream& out, const BasicSuffixIndex<Index>& index) {
    const std::uint64_t n = index.size();
    const bool wide = n >= (std::uint64_t{1} << 32);
    std::uint16_t flags = wide ? kIndexFlagWide : 0;
    if(index.text().mode() == TextMode::generic) flags |= kIndexFlagGeneric;
    out.write(kIndexMagic.data(), kIndexMagic.size());
    detail::put_le<std::uint16_t>(out, kIndexVersion);
    detail::put_le<std::uint16_t>(out, flags);
    detail::put_le<std::uint64_t>(out, n);
    detail::put_array(out, index.sa(), wide);
    detail::put_array(out, index.lcp(), wide);
    detail::put_array(out, index.inv(), wide);
    detail::put_array(out, index.sp(), wide);
    out.write(index.text().bytes().data(), static_cast<std::streamsize>(n));
}

template<typename Index = std::uint32_t>
BasicSuffixIndex<Index> read_index(std::istream& in) {
    std::array<char, 4> magic{};
    in.read(magic.data(), magic.size());
    mslkit::detail::require_input(in.gcount() == 4 && magic == kIndexMagic, "not a suffix index file (bad magic)");
    const auto version = detail::get_le<std::uint16_t>(in);
    mslkit::detail::require_input(version == kIndexVersion, "unsupported index file version " + std::to_string(version));
    const auto flags = detail::get_le<std::uint16_t>(in);
    const auto n = detail::get_le<std::uint64_t>(in);
    mslkit::detail::require_input(n >= 1, "index file: empty text");
    const bool wide = (flags & kIndexFlagWide) != 0;
    auto sa = detail::get_array<Index>(in, wide, n);
    auto lcp = detail::get_array<Index>(in, wide, n - 1);
    auto inv = detail::get_array<Index>(in, wide, n);
    auto sp = detail::get_array<Index>(in, wide, n);
    std::string bytes(n, '\0');
    in.read(bytes.data(), static_cast<std::streamsize>(n));
    mslkit::detail::require_input(static_cast<std::uint64_t>(in.gcount()) == n, "index file: truncated text");
    const auto mode = (flags & kIndexFlagGeneric) ? TextMode::generic : TextMode::genomic;
    Text text = Text::from_terminated(std::move(bytes), mode);
    for(std::uint64_t r = 0; r < n; ++r) {
        mslkit::detail::require_input(sa[r] < n && inv[sa[r]] == r, "index file: sa/inv are not inverse permutations");
    }
    return BasicSuffixIndex<Index>(std::move(text), std::move(sa), std::move(lcp), std::move(inv), std::move(sp));
}

template<typename Index>
void write_index_file(const std::filesystem::path& path, const BasicSuffixIndex<Index>& index) {
    std::ofstream out(path, std::ios::binary);
    mslkit::detail::require_input(out.good(), "cannot write '" + path.string() + "'");
    write_index(out, index);
}

template<typename Index = std::uint32_t>
BasicSuffixIndex<Index> read_index_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    mslkit::detail::require_input(in.good(), "cannot open '" + path.string() + "'");
    return read_index<Index>(in);
}

} // namespace mslkit::io
