#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "kmer_assignment.hpp"
#include "suffix_index.hpp"
#include "text.hpp"

namespace mslkit {

namespace detail {

template<typename Index>
void collect_hits(const BasicSuffixIndex<Index>& index, const ReferenceLayout& layout, const ReadRecord& read,
                  std::string_view pattern, Strand strand, std::vector<AlignmentRecord>& out) {
    const auto range = find_pattern(index, pattern);
    if(!range) return;
    const std::size_t first = out.size();
    for(std::size_t r = range->first; r <= range->last; ++r) {
        const std::size_t global = index.sa()[r];
        AlignmentRecord aln{read.id, {}, global, strand, true};
        if(!layout.empty()) {
            const RecordSpan* rec = layout.locate(global);
            if(rec == nullptr || global + pattern.size() > rec->offset + rec->length) continue;
            aln.ref_name = rec->name;
            aln.position = global - rec->offset;
        }
        out.push_back(std::move(aln));
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
              [](const AlignmentRecord& a, const AlignmentRecord& b) {
                  return std::tie(a.ref_name, a.position) < std::tie(b.ref_name, b.position);
              });
}

} // namespace detail

/// All exact full-length occurrences of each read (forward) and of its
/// reverse complement (reverse strand). A read without hits yields a single
/// unmapped record. Output is grouped by read in input order regardless of
/// `threads`.
template<typename Index>
std::vector<AlignmentRecord> align_exact(const BasicSuffixIndex<Index>& index, const ReferenceLayout& layout,
                                         const std::vector<ReadRecord>& reads, unsigned threads = 1) {
    std::vector<std::vector<AlignmentRecord>> per_read(reads.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for(std::size_t i = lo; i < hi; ++i) {
            const auto& read = reads[i];
            auto& hits = per_read[i];
            if(!read.bases.empty()) {
                detail::collect_hits(index, layout, read, read.bases, Strand::forward, hits);
                const auto rc = reverse_complement(read.bases);
                if(rc != read.bases) detail::collect_hits(index, layout, read, rc, Strand::reverse, hits);
            }
            if(hits.empty()) hits.push_back(AlignmentRecord{read.id, {}, 0, Strand::forward, false});
        }
    };
    threads = std::max(1u, threads);
    if(threads == 1 || reads.size() < 2) {
        work(0, reads.size());
    } else {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (reads.size() + threads - 1) / threads;
            for(unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        work(std::min(reads.size(), t * chunk), std::min(reads.size(), (t + 1) * chunk));
                    } catch(...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for(auto& e : errors) if(e) std::rethrow_exception(e);
    }
    std::vector<AlignmentRecord> out;
    for(auto& v : per_read) {
        for(auto& a : v) out.push_back(std::move(a));
    }
    return out;
}

} // namespace mslkit
