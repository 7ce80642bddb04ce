#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "landscape.hpp"
#include "text.hpp"

namespace mslkit {

struct ReadRecord {
    std::string id;
    std::string bases;

    std::size_t length() const { return bases.size(); }
};

enum class Strand : std::uint8_t { forward, reverse };

/// One alignment of a read. `position` is 0-based; when `ref_name` is empty
/// it is an offset into the concatenated reference, otherwise into the
/// named record.
struct AlignmentRecord {
    std::string read_id;
    std::string ref_name;
    std::size_t position = 0;
    Strand strand = Strand::forward;
    bool mapped = true;
    /// Reference bases covered (from a CIGAR); 0 means the read length.
    std::size_t span = 0;
};

enum class KSource : std::uint8_t { aligned, overflow_default, unaligned_default };

inline std::string_view to_string(KSource s) {
    switch(s) {
    case KSource::aligned: return "aligned";
    case KSource::overflow_default: return "overflow_default";
    case KSource::unaligned_default: return "unaligned_default";
    }
    return "unknown";
}

inline KSource parse_k_source(std::string_view s) {
    if(s == "aligned") return KSource::aligned;
    if(s == "overflow_default") return KSource::overflow_default;
    if(s == "unaligned_default") return KSource::unaligned_default;
    throw InputError("unknown k source '" + std::string(s) + "'");
}

struct ReadAssignment {
    std::string read_id;
    std::uint32_t k = 0;
    KSource source = KSource::unaligned_default;

    friend bool operator==(const ReadAssignment&, const ReadAssignment&) = default;
};

struct AssignmentDefaults {
    std::uint32_t overflow_k = 77;
    std::uint32_t unaligned_k = 55;
    /// Smallest k handed to the assembler; aligned values below it are raised.
    std::uint32_t k_floor = 2;
};

/// 1 + the largest landscape height over the positions p .. p+len-1
/// (0-based, concatenated coordinates).
inline std::uint32_t k_for_alignment(const MslArray& msl, std::size_t p, std::size_t len) {
    detail::require_input(len >= 1, "alignment of an empty read");
    detail::require_input(p < msl.size() && len <= msl.size() - p,
        "alignment [" + std::to_string(p) + ", " + std::to_string(p + len) + ") exceeds the reference length " +
        std::to_string(msl.size()));
    const auto first = msl.heights.begin() + static_cast<std::ptrdiff_t>(p);
    return 1 + *std::max_element(first, first + static_cast<std::ptrdiff_t>(len));
}

/// Resolves an alignment to a concatenated 0-based start, checking that the
/// covered window fits inside its record.
inline std::size_t resolve_alignment(const AlignmentRecord& aln, std::size_t read_length,
                                     const ReferenceLayout& layout, std::size_t msl_size) {
    if(aln.ref_name.empty()) {
        detail::require_input(aln.position < msl_size && read_length <= msl_size - aln.position,
            "alignment of '" + aln.read_id + "' runs past the reference end");
        return aln.position;
    }
    const RecordSpan* rec = layout.find(aln.ref_name);
    detail::require_input(rec != nullptr, "alignment of '" + aln.read_id + "' references unknown sequence '" +
                                              aln.ref_name + "'");
    detail::require_input(aln.position < rec->length && read_length <= rec->length - aln.position,
        "alignment of '" + aln.read_id + "' runs past the end of '" + aln.ref_name + "'");
    return rec->offset + aln.position;
}

/// Chooses k for one read from all of its alignments. Forward and reverse
/// alignments cover the same reference window, so both feed one maximum.
inline ReadAssignment assign_k(const ReadRecord& read, const std::vector<const AlignmentRecord*>& alignments,
                               const MslArray& msl, const ReferenceLayout& layout,
                               const AssignmentDefaults& defaults = {}) {
    ReadAssignment out{read.id, defaults.unaligned_k, KSource::unaligned_default};
    std::uint32_t best = 0;
    bool any = false;
    for(const AlignmentRecord* aln : alignments) {
        if(!aln->mapped) continue;
        const std::size_t window = aln->span ? aln->span : read.length();
        const std::size_t p = resolve_alignment(*aln, window, layout, msl.size());
        best = std::max(best, k_for_alignment(msl, p, window));
        any = true;
    }
    if(!any) return out;
    best = std::max(best, defaults.k_floor);
    if(best > read.length()) {
        out.k = defaults.overflow_k;
        out.source = KSource::overflow_default;
    } else {
        out.k = best;
        out.source = KSource::aligned;
    }
    return out;
}

inline ReadAssignment assign_k(const ReadRecord& read, const std::vector<AlignmentRecord>& alignments,
                               const MslArray& msl, const ReferenceLayout& layout,
                               const AssignmentDefaults& defaults = {}) {
    std::vector<const AlignmentRecord*> ptrs;
    for(const auto& a : alignments) ptrs.push_back(&a);
    return assign_k(read, ptrs, msl, layout, defaults);
}

struct AssignmentTable {
    std::vector<ReadAssignment> rows;         // input read order
    std::map<std::uint32_t, std::size_t> histogram; // k -> read count
};

/// Assigns every read. Output order follows `reads`; `threads` > 1 splits
/// the reads into contiguous chunks with identical results.
inline AssignmentTable assign_all(const std::vector<ReadRecord>& reads, const std::vector<AlignmentRecord>& alignments,
                                  const MslArray& msl, const ReferenceLayout& layout,
                                  const AssignmentDefaults& defaults = {}, unsigned threads = 1) {
    std::unordered_map<std::string_view, std::size_t> by_id;
    by_id.reserve(reads.size());
    for(std::size_t r = 0; r < reads.size(); ++r) {
        detail::require_input(by_id.emplace(reads[r].id, r).second, "duplicate read id '" + reads[r].id + "'");
    }
    std::vector<std::vector<const AlignmentRecord*>> per_read(reads.size());
    for(const auto& aln : alignments) {
        auto it = by_id.find(aln.read_id);
        detail::require_input(it != by_id.end(), "alignment for unknown read '" + aln.read_id + "'");
        per_read[it->second].push_back(&aln);
    }

    AssignmentTable table;
    table.rows.resize(reads.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        for(std::size_t r = lo; r < hi; ++r) table.rows[r] = assign_k(reads[r], per_read[r], msl, layout, defaults);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, reads.size()))));
    if(threads == 1) {
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
    for(const auto& row : table.rows) ++table.histogram[row.k];
    return table;
}

} // namespace mslkit
