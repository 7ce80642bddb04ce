#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "kmer_assignment.hpp"
#include "text.hpp"

namespace mslkit {

struct AssemblyOptions {
    /// Minimum k-mer multiplicity kept in the graph.
    std::uint32_t cutoff = 1;
    /// Fold each k-mer with its reverse complement.
    bool canonical = false;
};

struct AssemblyCounters {
    std::uint64_t total_kmer_insertions = 0;
    std::uint64_t rounds = 0;
};

struct ContigSet {
    std::vector<std::string> contigs;
    std::size_t k = 0;
};

/// De Bruijn graph over (k-1)-mer nodes with one edge per retained k-mer.
///
/// Edges are views into the input sequences (and, in canonical mode, into
/// reverse complements owned by the graph); the inputs must outlive it.
class DeBruijnGraph {
public:
    struct NodeInfo {
        std::uint32_t in = 0;
        std::uint32_t out = 0;
        std::uint32_t out_edge = 0; // meaningful when out == 1
    };

    /// Counts the k-mers of `sequences` (weight 1 per occurrence) and of
    /// `seeds` (weight `options.cutoff` per occurrence), drops k-mers below
    /// the cutoff and links the rest. Sequences shorter than k contribute
    /// nothing.
    static DeBruijnGraph build(std::span<const std::string_view> sequences, std::span<const std::string_view> seeds,
                               std::size_t k, const AssemblyOptions& options, AssemblyCounters* counters = nullptr) {
        detail::require_input(k >= 2, "k must be at least 2");
        detail::require_input(options.cutoff >= 1, "coverage cutoff must be at least 1");
        DeBruijnGraph g;
        g.k_ = k;
        g.canonical_ = options.canonical;

        struct Count {
            std::uint32_t count = 0;
            std::string_view twin; // reverse complement view (canonical mode)
        };
        std::unordered_map<std::string_view, Count> counts;
        std::uint64_t insertions = 0;

        auto add = [&](std::string_view seq, std::uint32_t weight) {
            if(seq.size() < k) return;
            std::string_view rc;
            if(g.canonical_) {
                g.arena_.push_back(reverse_complement(seq));
                rc = g.arena_.back();
            }
            for(std::size_t i = 0; i + k <= seq.size(); ++i) {
                std::string_view kmer = seq.substr(i, k);
                std::string_view twin;
                if(g.canonical_) {
                    twin = rc.substr(seq.size() - k - i, k);
                    if(twin < kmer) std::swap(kmer, twin);
                }
                auto& slot = counts[kmer];
                slot.count += weight;
                slot.twin = twin;
                ++insertions;
            }
        };
        for(auto s : sequences) add(s, 1);
        for(auto s : seeds) add(s, options.cutoff);
        if(counters) counters->total_kmer_insertions += insertions;

        for(const auto& [kmer, c] : counts) {
            if(c.count < options.cutoff) continue;
            g.edges_.push_back({kmer, c.count});
            if(g.canonical_ && c.twin != kmer) g.edges_.push_back({c.twin, c.count});
        }
        std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) { return a.kmer < b.kmer; });

        g.edge_index_.reserve(g.edges_.size());
        for(std::size_t e = 0; e < g.edges_.size(); ++e) {
            const auto kmer = g.edges_[e].kmer;
            g.edge_index_.emplace(kmer, static_cast<std::uint32_t>(e));
            auto& from = g.nodes_[kmer.substr(0, k - 1)];
            ++from.out;
            from.out_edge = static_cast<std::uint32_t>(e);
            ++g.nodes_[kmer.substr(1)].in;
        }
        return g;
    }

    static DeBruijnGraph build(const std::vector<std::string>& sequences, std::size_t k, const AssemblyOptions& options,
                               AssemblyCounters* counters = nullptr) {
        std::vector<std::string_view> views(sequences.begin(), sequences.end());
        return build(views, {}, k, options, counters);
    }

    // edges would dangle into the temporary
    static DeBruijnGraph build(std::vector<std::string>&&, std::size_t, const AssemblyOptions&,
                               AssemblyCounters* = nullptr) = delete;

    std::size_t k() const { return k_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::string_view edge(std::size_t e) const { return edges_[e].kmer; }
    std::uint32_t coverage(std::size_t e) const { return edges_[e].coverage; }

    const NodeInfo* node(std::string_view v) const {
        auto it = nodes_.find(v);
        return it == nodes_.end() ? nullptr : &it->second;
    }

    std::uint32_t max_in_degree() const {
        std::uint32_t m = 0;
        for(const auto& [_, info] : nodes_) m = std::max(m, info.in);
        return m;
    }

    std::uint32_t max_out_degree() const {
        std::uint32_t m = 0;
        for(const auto& [_, info] : nodes_) m = std::max(m, info.out);
        return m;
    }

    /// Spells every maximal non-branching path (isolated cycles included)
    /// once, sorted lexicographically. In canonical mode a path and its
    /// reverse complement are reported once, as the smaller spelling.
    ContigSet condense() const {
        ContigSet out;
        out.k = k_;
        std::vector<bool> visited(edges_.size(), false);
        auto mark = [&](std::uint32_t e) {
            visited[e] = true;
            if(canonical_) {
                const auto rc = reverse_complement(edges_[e].kmer);
                visited[edge_index_.at(rc)] = true;
            }
        };
        auto simple = [&](std::string_view v) {
            const auto& info = nodes_.at(v);
            return info.in == 1 && info.out == 1;
        };
        auto walk = [&](std::uint32_t e) {
            std::string spelled(edges_[e].kmer);
            mark(e);
            std::string_view v = edges_[e].kmer.substr(1);
            while(simple(v)) {
                const std::uint32_t next = nodes_.at(v).out_edge;
                if(visited[next]) break;
                spelled.push_back(edges_[next].kmer.back());
                mark(next);
                v = edges_[next].kmer.substr(1);
            }
            if(canonical_) {
                auto rc = reverse_complement(spelled);
                if(rc < spelled) spelled.swap(rc);
            }
            out.contigs.push_back(std::move(spelled));
        };

        for(std::uint32_t e = 0; e < edges_.size(); ++e) {
            if(visited[e] || simple(edges_[e].kmer.substr(0, k_ - 1))) continue;
            walk(e);
        }
        // whatever is left lies on isolated cycles; start each at its smallest edge
        for(std::uint32_t e = 0; e < edges_.size(); ++e) {
            if(!visited[e]) walk(e);
        }
        std::sort(out.contigs.begin(), out.contigs.end());
        return out;
    }

private:
    struct Edge {
        std::string_view kmer;
        std::uint32_t coverage = 0;
    };

    std::size_t k_ = 0;
    bool canonical_ = false;
    std::deque<std::string> arena_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string_view, std::uint32_t> edge_index_;
    std::unordered_map<std::string_view, NodeInfo> nodes_;
};

/// Counts, filters and condenses in one call.
inline ContigSet assemble_single_k(std::span<const std::string_view> sequences, std::span<const std::string_view> seeds,
                                   std::size_t k, const AssemblyOptions& options, AssemblyCounters* counters = nullptr) {
    const auto g = DeBruijnGraph::build(sequences, seeds, k, options, counters);
    if(counters) ++counters->rounds;
    return g.condense();
}

inline ContigSet assemble_single_k(const std::vector<std::string>& sequences, std::size_t k,
                                   const AssemblyOptions& options, AssemblyCounters* counters = nullptr) {
    std::vector<std::string_view> views(sequences.begin(), sequences.end());
    return assemble_single_k(views, {}, k, options, counters);
}

/// Reads grouped by their assigned k. Buckets exist for every k in
/// [k_min, k_max], empty ones included.
class ReadPartition {
public:
    ReadPartition() = default;

    static ReadPartition from_assignments(std::span<const ReadAssignment> rows) {
        detail::require_input(!rows.empty(), "cannot partition an empty read set");
        ReadPartition p;
        p.k_min_ = rows.front().k;
        p.k_max_ = rows.front().k;
        for(const auto& r : rows) {
            p.k_min_ = std::min(p.k_min_, r.k);
            p.k_max_ = std::max(p.k_max_, r.k);
        }
        p.buckets_.resize(p.k_max_ - p.k_min_ + 1);
        for(std::size_t i = 0; i < rows.size(); ++i) p.buckets_[rows[i].k - p.k_min_].push_back(i);
        return p;
    }

    /// All reads in one bucket.
    static ReadPartition single(std::size_t read_count, std::uint32_t k) {
        ReadPartition p;
        p.k_min_ = p.k_max_ = k;
        p.buckets_.resize(1);
        for(std::size_t i = 0; i < read_count; ++i) p.buckets_[0].push_back(i);
        return p;
    }

    std::uint32_t k_min() const { return k_min_; }
    std::uint32_t k_max() const { return k_max_; }

    const std::vector<std::size_t>& bucket(std::uint32_t k) const {
        static const std::vector<std::size_t> none;
        if(k < k_min_ || k > k_max_ || buckets_.empty()) return none;
        return buckets_[k - k_min_];
    }

    std::size_t read_count() const {
        std::size_t n = 0;
        for(const auto& b : buckets_) n += b.size();
        return n;
    }

private:
    std::uint32_t k_min_ = 0;
    std::uint32_t k_max_ = 0;
    std::vector<std::vector<std::size_t>> buckets_;
};

enum class RoundFeed : std::uint8_t {
    /// round k sees the reads with assigned k' <= k
    partitioned,
    /// every round sees every read (baseline for comparison)
    all_reads,
};

/// Multi-k assembly: for k = k_min..k_max the active read set grows by R_k
/// and the round assembles it together with the previous round's contigs.
/// Returns the contigs of the last round.
inline ContigSet iterative_assemble(const std::vector<std::string>& reads, const ReadPartition& partition,
                                    const AssemblyOptions& options, AssemblyCounters* counters = nullptr,
                                    RoundFeed feed = RoundFeed::partitioned) {
    detail::require_input(partition.read_count() > 0, "read partition is empty");
    std::vector<std::string_view> active;
    if(feed == RoundFeed::all_reads) active.assign(reads.begin(), reads.end());
    ContigSet previous;
    const std::uint32_t k_start = std::max<std::uint32_t>(partition.k_min(), 2);
    for(std::uint32_t k = partition.k_min(); k <= partition.k_max(); ++k) {
        if(feed == RoundFeed::partitioned) {
            for(std::size_t r : partition.bucket(k)) {
                detail::require_input(r < reads.size(), "partition references a missing read");
                active.push_back(reads[r]);
            }
        }
        if(k < k_start) continue;
        std::vector<std::string_view> seeds(previous.contigs.begin(), previous.contigs.end());
        previous = assemble_single_k(active, seeds, k, options, counters);
    }
    return previous;
}

} // namespace mslkit
