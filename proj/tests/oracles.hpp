#pragma once

// Slow, obviously-correct reference computations used only by the tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

inline std::vector<std::size_t> suffix_array(std::string_view s) {
    std::vector<std::size_t> sa(s.size());
    for(std::size_t i = 0; i < sa.size(); ++i) sa[i] = i;
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return s.substr(a) < s.substr(b); });
    return sa;
}

inline std::size_t lcp(std::string_view a, std::string_view b) {
    std::size_t h = 0;
    while(h < a.size() && h < b.size() && a[h] == b[h]) ++h;
    return h;
}

/// Overlapping occurrences of p in s.
inline std::size_t count(std::string_view s, std::string_view p) {
    if(p.empty() || p.size() > s.size()) return p.empty() ? s.size() + 1 : 0;
    std::size_t c = 0;
    for(std::size_t i = 0; i + p.size() <= s.size(); ++i) {
        if(s.compare(i, p.size(), p) == 0) ++c;
    }
    return c;
}

/// Per-position longest substring of `target` covering the position and
/// occurring at least `min_freq` times in `source`, zeroed below
/// `min_height`. Built from a longest-common-extension table: for every
/// target start a, the min_freq-th largest extension against all source
/// positions is the longest qualifying substring starting at a.
inline std::vector<std::uint32_t> landscape(std::string_view target, std::string_view source, std::size_t min_freq,
                                            std::size_t min_height) {
    const std::size_t m = target.size(), n = source.size();
    std::vector<std::uint32_t> next(n + 1, 0), cur(n + 1, 0);
    std::vector<std::uint32_t> longest(m, 0);
    std::vector<std::uint32_t> row;
    for(std::size_t a = m; a-- > 0;) {
        for(std::size_t q = 0; q < n; ++q) cur[q] = target[a] == source[q] ? 1 + next[q + 1] : 0;
        cur[n] = 0;
        row.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n));
        if(row.size() >= min_freq) {
            std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(min_freq - 1), row.end(),
                             std::greater<>());
            longest[a] = row[min_freq - 1];
        }
        std::swap(cur, next);
    }
    std::vector<std::uint32_t> heights(m, 0);
    for(std::size_t a = 0; a < m; ++a) {
        const auto h = longest[a];
        if(h < min_height || h == 0) continue;
        for(std::size_t i = a; i < a + h; ++i) heights[i] = std::max(heights[i], h);
    }
    return heights;
}

inline std::vector<std::uint32_t> self_landscape(std::string_view s) { return landscape(s, s, 2, 2); }

/// Largest window around i with values >= alpha, by scanning outward.
template<typename T>
std::optional<std::pair<std::size_t, std::size_t>> largest_interval(const std::vector<T>& v, std::size_t i, T alpha) {
    if(v[i] < alpha) return std::nullopt;
    std::size_t a = i, b = i;
    while(a > 0 && v[a - 1] >= alpha) --a;
    while(b + 1 < v.size() && v[b + 1] >= alpha) ++b;
    return std::make_pair(a, b);
}

/// All k-mers with multiplicity.
inline std::map<std::string, std::uint32_t> kmer_counts(const std::vector<std::string>& seqs, std::size_t k) {
    std::map<std::string, std::uint32_t> counts;
    for(const auto& s : seqs) {
        for(std::size_t i = 0; i + k <= s.size(); ++i) ++counts[s.substr(i, k)];
    }
    return counts;
}

/// 0-based starts of p in s.
inline std::vector<std::size_t> occurrences(std::string_view s, std::string_view p) {
    std::vector<std::size_t> out;
    for(std::size_t i = 0; i + p.size() <= s.size(); ++i) {
        if(s.compare(i, p.size(), p) == 0) out.push_back(i);
    }
    return out;
}

inline std::string random_string(std::mt19937_64& rng, std::size_t n, std::string_view alphabet = "ACGT") {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s(n, ' ');
    for(auto& c : s) c = alphabet[pick(rng)];
    return s;
}

} // namespace oracle
