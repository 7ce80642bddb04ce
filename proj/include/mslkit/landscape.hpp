#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "interval_tree.hpp"
#include "suffix_index.hpp"
#include "text.hpp"

namespace mslkit {

enum class MslKind : std::uint8_t { self_landscape = 0, general_landscape = 1, silhouette = 2 };

inline std::string_view to_string(MslKind kind) {
    switch(kind) {
    case MslKind::self_landscape: return "self";
    case MslKind::general_landscape: return "general";
    case MslKind::silhouette: return "silhouette";
    }
    return "unknown";
}

inline MslKind parse_msl_kind(std::string_view s) {
    if(s == "self") return MslKind::self_landscape;
    if(s == "general") return MslKind::general_landscape;
    if(s == "silhouette") return MslKind::silhouette;
    throw InputError("unknown landscape kind '" + std::string(s) + "'");
}

/// One occurrence of a source substring in the target: [begin, end] plus
/// the substring's frequency in the source. Only produced for diagnostics.
struct Mountain {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t freq = 0;

    std::size_t height() const { return end - begin + 1; }
};

/// Per-position summit heights. heights[i] is the length of the longest
/// qualifying substring covering target position i, 0 if none.
struct MslArray {
    std::vector<std::uint32_t> heights;
    MslKind kind = MslKind::self_landscape;

    std::size_t size() const { return heights.size(); }
};

/// Constant-time read; throws std::out_of_range past the end.
inline std::uint32_t msl_query(const MslArray& msl, std::size_t i) {
    if(i >= msl.heights.size()) {
        throw std::out_of_range("msl_query: position " + std::to_string(i) + " outside [0, " +
                                std::to_string(msl.heights.size()) + ")");
    }
    return msl.heights[i];
}

/// Scan instrumentation.
struct LandscapeStats {
    std::size_t ascents = 0;
    std::size_t descents = 0;
    std::size_t tree_node_visits = 0;
    std::size_t tree_queries = 0;
    std::size_t target_length = 0;
};

/// Source-side structures: the suffix index plus the interval tree over its
/// LCP array. The tree is absent for the one-symbol text "$".
template<typename Index>
class LandscapeSource {
public:
    explicit LandscapeSource(BasicSuffixIndex<Index> index) : index_(std::move(index)) {
        if(!index_.lcp().empty()) tree_.emplace(std::span<const Index>(index_.lcp()));
    }

    static LandscapeSource from_text(Text text) { return LandscapeSource(build_suffix_index<Index>(std::move(text))); }

    const BasicSuffixIndex<Index>& index() const { return index_; }
    const ConsecutiveIntervalTree<Index>* tree() const { return tree_ ? &*tree_ : nullptr; }

private:
    BasicSuffixIndex<Index> index_;
    std::optional<ConsecutiveIntervalTree<Index>> tree_;
};

/// Current window t[begin, begin+length) and the source ranks sharing it.
struct ScanState {
    std::size_t begin = 0;
    std::size_t length = 0;
    RankRange range;
};

namespace detail {

struct ScanRule {
    std::size_t min_freq;
    std::size_t min_height;
};

/// Ranks around `anchor` whose suffixes share a prefix of length `depth`.
template<typename Index>
RankRange expand_rank_range(const LandscapeSource<Index>& source, std::size_t anchor, std::size_t depth,
                            LandscapeStats& stats) {
    const auto& index = source.index();
    if(depth == 0) return index.full_range();
    const auto& lcp = index.lcp();
    const std::span<const Index> values(lcp);
    const auto alpha = static_cast<Index>(depth);
    RankRange out{anchor, anchor};
    std::optional<IndexRange> window;
    TreeQueryStats q;
    if(anchor > 0 && lcp[anchor - 1] >= alpha) {
        window = source.tree()->largest_interval(values, anchor - 1, alpha, &q);
    } else if(anchor < lcp.size() && lcp[anchor] >= alpha) {
        window = source.tree()->largest_interval(values, anchor, alpha, &q);
    }
    if(window) {
        ++stats.tree_queries;
        stats.tree_node_visits += q.node_visits;
        out.first = std::min(out.first, window->first);
        out.last = std::max(out.last, window->last + 1);
    }
    return out;
}

/// Sliding scan over one separator-free target segment. For every end
/// position e, end_len[e] receives the length of the longest suffix of
/// t[0..e] occurring at least `min_freq` times in the source.
template<typename Index>
void scan_segment(std::string_view target, const LandscapeSource<Index>& source, std::size_t min_freq,
                  std::span<std::uint32_t> end_len, LandscapeStats& stats) {
    const auto& index = source.index();
    const auto& sp = index.sp();
    ScanState st{0, 0, index.full_range()};
    for(std::size_t i = 0; i < target.size(); ++i) {
        const auto c = static_cast<unsigned char>(target[i]);
        for(;;) {
            const auto next = sa_interval_lookup(index, st.range, st.length, c);
            if(next && occurrence_count(*next) >= min_freq) {
                st.range = *next;
                ++st.length;
                ++stats.ascents;
                break;
            }
            if(st.length == 0) {
                st.begin = i + 1;
                break;
            }
            // drop the first window symbol; any rank of the interval works as
            // the representative because all of them share the window prefix
            const std::size_t anchor = sp[st.range.first];
            --st.length;
            ++st.begin;
            st.range = expand_rank_range(source, anchor, st.length, stats);
            ++stats.descents;
        }
        end_len[i] = static_cast<std::uint32_t>(st.length);
    }
}

/// heights[i] = max{ len[e] : e >= i, e - len[e] + 1 <= i, len[e] >= min_height }.
/// Window starts are non-decreasing in e, so the covering ends of i form a
/// contiguous range that slides right; a monotone deque gives the maxima.
inline void summits_from_windows(std::span<const std::uint32_t> end_len, std::size_t min_height,
                                 std::span<std::uint32_t> heights) {
    const std::size_t m = end_len.size();
    std::deque<std::size_t> dq; // ends, decreasing filtered length
    auto filtered = [&](std::size_t e) -> std::uint32_t {
        return end_len[e] >= min_height ? end_len[e] : 0;
    };
    auto start = [&](std::size_t e) { return e + 1 - end_len[e]; };
    std::size_t next_end = 0;
    for(std::size_t i = 0; i < m; ++i) {
        // admit every end whose window starts at or before i
        while(next_end < m && start(next_end) <= i) {
            const auto v = filtered(next_end);
            while(!dq.empty() && filtered(dq.back()) <= v) dq.pop_back();
            dq.push_back(next_end);
            ++next_end;
        }
        while(!dq.empty() && dq.front() < i) dq.pop_front();
        heights[i] = dq.empty() ? 0 : filtered(dq.front());
    }
}

template<typename Index>
MslArray build_landscape(std::string_view target, TextMode mode, const LandscapeSource<Index>& source,
                         ScanRule rule, MslKind kind, LandscapeStats* stats_out,
                         std::vector<std::uint32_t>* end_lengths_out) {
    LandscapeStats stats;
    stats.target_length = target.size();
    MslArray msl;
    msl.kind = kind;
    msl.heights.assign(target.size(), 0);
    std::vector<std::uint32_t> end_len(target.size(), 0);

    // genomic multi-record targets are scanned one record at a time so that
    // no window ever spans a separator
    std::size_t seg_begin = 0;
    while(seg_begin <= target.size()) {
        std::size_t seg_end = target.size();
        if(mode == TextMode::genomic) {
            const auto sep = target.find(kRecordSeparator, seg_begin);
            if(sep != std::string_view::npos) seg_end = sep;
        }
        const std::size_t len = seg_end - seg_begin;
        if(len > 0) {
            auto seg_len = std::span<std::uint32_t>(end_len).subspan(seg_begin, len);
            scan_segment(target.substr(seg_begin, len), source, rule.min_freq, seg_len, stats);
            summits_from_windows(seg_len, rule.min_height, std::span<std::uint32_t>(msl.heights).subspan(seg_begin, len));
        }
        if(seg_end == target.size()) break;
        seg_begin = seg_end + 1;
    }
    if(stats_out) *stats_out = stats;
    if(end_lengths_out) *end_lengths_out = std::move(end_len);
    return msl;
}

} // namespace detail

/// Longest substring covering each position that occurs at least twice in
/// the text itself (overlaps count); heights of 1 are reported as 0.
template<typename Index>
MslArray build_self_msl(const LandscapeSource<Index>& source, LandscapeStats* stats = nullptr,
                        std::vector<std::uint32_t>* end_lengths = nullptr) {
    const Text& text = source.index().text();
    return detail::build_landscape(text.body(), text.mode(), source, {2, 2}, MslKind::self_landscape, stats,
                                   end_lengths);
}

/// Longest substring of the target covering each target position that
/// occurs at least twice in the source.
template<typename Index>
MslArray build_general_msl(std::string_view target, const LandscapeSource<Index>& source,
                           LandscapeStats* stats = nullptr, std::vector<std::uint32_t>* end_lengths = nullptr) {
    return detail::build_landscape(target, source.index().text().mode(), source, {2, 2},
                                   MslKind::general_landscape, stats, end_lengths);
}

/// Longest substring of the target covering each target position that
/// occurs anywhere in the source (frequency >= 1, height >= 1).
template<typename Index>
MslArray build_silhouette(std::string_view target, const LandscapeSource<Index>& source,
                          LandscapeStats* stats = nullptr, std::vector<std::uint32_t>* end_lengths = nullptr) {
    return detail::build_landscape(target, source.index().text().mode(), source, {1, 1}, MslKind::silhouette,
                                   stats, end_lengths);
}

/// Debug helper: the window [begin, end] realising heights[i], recovered
/// from the per-end window lengths. The frequency is looked up in the source.
template<typename Index>
std::optional<Mountain> summit_witness(std::string_view target, const MslArray& msl,
                                       std::span<const std::uint32_t> end_lengths,
                                       const LandscapeSource<Index>& source, std::size_t i) {
    const auto h = msl_query(msl, i);
    if(h == 0) return std::nullopt;
    for(std::size_t e = i; e < end_lengths.size(); ++e) {
        const std::size_t start = e + 1 - end_lengths[e];
        if(start > i) break;
        if(end_lengths[e] == h) {
            Mountain m{start, e, 0};
            m.freq = occurrence_count(source.index(), target.substr(m.begin, h));
            return m;
        }
    }
    throw InvariantError("no witness window for position " + std::to_string(i));
}

} // namespace mslkit
