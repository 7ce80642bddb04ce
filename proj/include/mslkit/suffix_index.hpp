#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <type_traits>
#include <vector>

#include "error.hpp"
#include "sais.hpp"
#include "text.hpp"

namespace mslkit {

/// Inclusive range of suffix-array ranks (0-based).
struct RankRange {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t width() const { return last - first + 1; }
    bool contains(std::size_t r) const { return first <= r && r <= last; }
    friend bool operator==(const RankRange&, const RankRange&) = default;
};

/// Suffix array, LCP array, index (inverse) array and suffix-pointer array
/// of one terminated text. All positions and ranks are 0-based:
///
///   sa[r]   start of the r-th smallest suffix
///   lcp[r]  longest common prefix of the suffixes ranked r and r+1 (n-1 entries)
///   inv[p]  rank of the suffix starting at p
///   sp[r]   rank of the suffix sa[r]+1, or npos for the sentinel suffix
///
/// Immutable once built; concurrent read-only queries are safe.
template<typename Index>
class BasicSuffixIndex {
    static_assert(std::is_unsigned_v<Index>);

public:
    using index_type = Index;
    static constexpr Index npos = std::numeric_limits<Index>::max();

    BasicSuffixIndex() = default;

    BasicSuffixIndex(Text text, std::vector<Index> sa, std::vector<Index> lcp,
                     std::vector<Index> inv, std::vector<Index> sp)
        : text_(std::move(text)), sa_(std::move(sa)), lcp_(std::move(lcp)),
          inv_(std::move(inv)), sp_(std::move(sp)) {}

    const Text& text() const { return text_; }
    std::size_t size() const { return sa_.size(); }
    const std::vector<Index>& sa() const { return sa_; }
    const std::vector<Index>& lcp() const { return lcp_; }
    const std::vector<Index>& inv() const { return inv_; }
    const std::vector<Index>& sp() const { return sp_; }

    RankRange full_range() const { return {0, size() - 1}; }

    /// Words of auxiliary storage (sa + lcp + inv + sp); at most 4n.
    std::size_t aux_words() const { return sa_.size() + lcp_.size() + inv_.size() + sp_.size(); }

private:
    Text text_;
    std::vector<Index> sa_;
    std::vector<Index> lcp_;
    std::vector<Index> inv_;
    std::vector<Index> sp_;
};

using SuffixIndex = BasicSuffixIndex<std::uint32_t>;
using SuffixIndex64 = BasicSuffixIndex<std::uint64_t>;

namespace detail {

// Kasai et al. LCP from SA and its inverse.
template<typename Index>
std::vector<Index> lcp_kasai(std::string_view text, const std::vector<Index>& sa, const std::vector<Index>& inv) {
    const std::size_t n = sa.size();
    std::vector<Index> lcp(n > 0 ? n - 1 : 0);
    std::size_t h = 0;
    for(std::size_t p = 0; p < n; ++p) {
        const std::size_t r = inv[p];
        if(r + 1 < n) {
            const std::size_t q = sa[r + 1];
            while(p + h < n && q + h < n && text[p + h] == text[q + h]) ++h;
            lcp[r] = static_cast<Index>(h);
            if(h > 0) --h;
        } else {
            h = 0;
        }
    }
    return lcp;
}

} // namespace detail

/// Builds all four arrays in O(n) time and space.
template<typename Index = std::uint32_t>
BasicSuffixIndex<Index> build_suffix_index(Text text) {
    const std::size_t n = text.size();
    detail::require_input(n >= 1, "text must contain at least the sentinel");
    detail::require_input(n < static_cast<std::size_t>(std::numeric_limits<Index>::max()),
        "text too long for the selected index width");

    std::vector<Index> sa(n);
    if(n < static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
        const auto raw = detail::suffix_array_bytes<std::int32_t>(text.bytes());
        for(std::size_t r = 0; r < n; ++r) sa[r] = static_cast<Index>(raw[r]);
    } else {
        const auto raw = detail::suffix_array_bytes<std::int64_t>(text.bytes());
        for(std::size_t r = 0; r < n; ++r) sa[r] = static_cast<Index>(raw[r]);
    }

    std::vector<Index> inv(n);
    for(std::size_t r = 0; r < n; ++r) inv[sa[r]] = static_cast<Index>(r);

    auto lcp = detail::lcp_kasai<Index>(text.bytes(), sa, inv);

    std::vector<Index> sp(n);
    for(std::size_t r = 0; r < n; ++r) {
        const std::size_t next = static_cast<std::size_t>(sa[r]) + 1;
        sp[r] = next < n ? inv[next] : BasicSuffixIndex<Index>::npos;
    }
    return BasicSuffixIndex<Index>(std::move(text), std::move(sa), std::move(lcp), std::move(inv), std::move(sp));
}

/// Narrows a rank range whose suffixes share a prefix of length `depth` to
/// the ranks whose next symbol is `symbol`. Binary search inside `range`.
template<typename Index>
std::optional<RankRange> sa_interval_lookup(const BasicSuffixIndex<Index>& index, RankRange range,
                                            std::size_t depth, unsigned char symbol) {
    const auto& sa = index.sa();
    const Text& text = index.text();
    const std::size_t n = text.size();
    // symbol at offset `depth` of the suffix ranked r; -1 past the end
    auto at = [&](std::size_t r) -> int {
        const std::size_t pos = static_cast<std::size_t>(sa[r]) + depth;
        return pos < n ? static_cast<int>(text[pos]) : -1;
    };
    const int c = symbol;
    std::size_t lo = range.first, hi = range.last + 1;
    while(lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if(at(mid) < c) lo = mid + 1; else hi = mid;
    }
    const std::size_t first = lo;
    hi = range.last + 1;
    while(lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if(at(mid) <= c) lo = mid + 1; else hi = mid;
    }
    if(first == lo) return std::nullopt;
    return RankRange{first, lo - 1};
}

/// Maximal rank range of suffixes starting with `pattern`; nullopt if absent.
/// The empty pattern yields the full range.
template<typename Index>
std::optional<RankRange> find_pattern(const BasicSuffixIndex<Index>& index, std::string_view pattern) {
    std::optional<RankRange> range = index.full_range();
    for(std::size_t d = 0; d < pattern.size() && range; ++d) {
        range = sa_interval_lookup(index, *range, d, static_cast<unsigned char>(pattern[d]));
    }
    return range;
}

/// Number of (possibly overlapping) occurrences of the pattern whose
/// maximal interval is `range`.
inline std::size_t occurrence_count(const RankRange& range) { return range.width(); }

template<typename Index>
std::size_t occurrence_count(const BasicSuffixIndex<Index>& index, std::string_view pattern) {
    const auto range = find_pattern(index, pattern);
    return range ? range->width() : 0;
}

} // namespace mslkit
