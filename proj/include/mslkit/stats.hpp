#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "suffix_index.hpp"
#include "text.hpp"

namespace mslkit {

struct ContigStats {
    std::size_t count = 0;
    std::size_t total_length = 0;
    std::size_t largest = 0;
    std::size_t n50 = 0;
    /// Fraction of contig bases in contigs found verbatim (either strand) in
    /// the reference; absent when no reference was given.
    std::optional<double> exact_match_fraction;
    std::string warning;
};

/// N50: the largest length L such that contigs of length >= L hold at least
/// half of the total length.
inline std::size_t n50(std::vector<std::size_t> lengths) {
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    std::size_t total = 0;
    for(auto l : lengths) total += l;
    std::size_t acc = 0;
    for(auto l : lengths) {
        acc += l;
        if(2 * acc >= total) return l;
    }
    return 0;
}

template<typename Index = std::uint32_t>
ContigStats contig_stats(const std::vector<std::string>& contigs, const BasicSuffixIndex<Index>* reference = nullptr) {
    ContigStats s;
    s.count = contigs.size();
    std::vector<std::size_t> lengths;
    lengths.reserve(contigs.size());
    for(const auto& c : contigs) {
        lengths.push_back(c.size());
        s.total_length += c.size();
        s.largest = std::max(s.largest, c.size());
    }
    if(contigs.empty()) {
        s.warning = "empty contig set";
        if(reference) s.exact_match_fraction = 0.0;
        return s;
    }
    s.n50 = n50(std::move(lengths));
    if(reference) {
        std::size_t matched = 0;
        for(const auto& c : contigs) {
            if(find_pattern(*reference, c) || find_pattern(*reference, reverse_complement(c))) matched += c.size();
        }
        s.exact_match_fraction = s.total_length ? static_cast<double>(matched) / static_cast<double>(s.total_length) : 0.0;
    }
    return s;
}

} // namespace mslkit
