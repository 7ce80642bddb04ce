#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "../error.hpp"
#include "../kmer_assignment.hpp"
#include "../text.hpp"

namespace mslkit::io {

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    for(;;) {
        const auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if(tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return cols;
}

template<typename T>
T parse_number(std::string_view s, const std::string& where) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    mslkit::detail::require_input(ec == std::errc() && ptr == s.data() + s.size(),
        where + ": expected a number, got '" + std::string(s) + "'");
    return v;
}

/// Reference bases consumed by a CIGAR string (M, D, N, =, X); 0 for '*'.
inline std::size_t cigar_reference_span(std::string_view cigar, const std::string& where) {
    if(cigar.empty() || cigar == "*") return 0;
    std::size_t span = 0, i = 0;
    while(i < cigar.size()) {
        std::size_t j = i;
        while(j < cigar.size() && cigar[j] >= '0' && cigar[j] <= '9') ++j;
        mslkit::detail::require_input(j > i && j < cigar.size(), where + ": malformed CIGAR '" + std::string(cigar) + "'");
        const auto len = parse_number<std::size_t>(cigar.substr(i, j - i), where);
        switch(cigar[j]) {
        case 'M': case 'D': case 'N': case '=': case 'X': span += len; break;
        case 'I': case 'S': case 'H': case 'P': break;
        default:
            throw InputError(where + ": unknown CIGAR operation '" + std::string(1, cigar[j]) + "'");
        }
        i = j + 1;
    }
    return span;
}

} // namespace detail

/// Reads the SAM columns QNAME, FLAG, RNAME, POS and, when present, CIGAR.
/// FLAG 0x4 marks an unmapped record, 0x10 the reverse strand. POS is 1-based
/// on input and 0-based in the returned records. Clipped or gapped records
/// keep the reference span named by their CIGAR.
inline std::vector<AlignmentRecord> parse_sam(std::istream& in, const std::string& name = "<sam>") {
    std::vector<AlignmentRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while(std::getline(in, line)) {
        ++lineno;
        if(!line.empty() && line.back() == '\r') line.pop_back();
        if(line.empty() || line[0] == '@') continue;
        const auto cols = detail::split_tabs(line);
        const std::string where = name + ":" + std::to_string(lineno);
        mslkit::detail::require_input(cols.size() >= 4, where + ": fewer than 4 SAM columns");
        AlignmentRecord aln;
        aln.read_id = std::string(cols[0]);
        const auto flag = detail::parse_number<unsigned>(cols[1], where);
        const auto pos = detail::parse_number<std::size_t>(cols[3], where);
        aln.mapped = (flag & 0x4u) == 0 && cols[2] != "*" && pos > 0;
        aln.strand = (flag & 0x10u) ? Strand::reverse : Strand::forward;
        if(aln.mapped) {
            aln.ref_name = std::string(cols[2]);
            aln.position = pos - 1;
            if(cols.size() >= 6) aln.span = detail::cigar_reference_span(cols[5], where);
        }
        out.push_back(std::move(aln));
    }
    return out;
}

/// Minimal 11-column SAM: @SQ lines from the layout, MAPQ 255, CIGAR
/// `<len>M`, SEQ/QUAL '*'. Hits after a read's first are flagged secondary.
inline void write_sam(std::ostream& out, const std::vector<AlignmentRecord>& alignments, const ReferenceLayout& layout,
                      const std::vector<ReadRecord>& reads) {
    out << "@HD\tVN:1.6\tSO:unsorted\n";
    for(const auto& rec : layout.records()) out << "@SQ\tSN:" << rec.name << "\tLN:" << rec.length << '\n';
    std::unordered_map<std::string_view, std::size_t> lengths;
    for(const auto& r : reads) lengths.emplace(r.id, r.length());
    std::string_view last_id;
    bool first_of_read = true;
    for(const auto& a : alignments) {
        first_of_read = a.read_id != last_id;
        last_id = a.read_id;
        if(!a.mapped) {
            out << a.read_id << "\t4\t*\t0\t0\t*\t*\t0\t0\t*\t*\n";
            continue;
        }
        unsigned flag = a.strand == Strand::reverse ? 0x10u : 0u;
        if(!first_of_read) flag |= 0x100u;
        std::string rname = a.ref_name;
        std::size_t pos = a.position;
        if(rname.empty() && !layout.empty()) {
            const RecordSpan* rec = layout.locate(a.position);
            mslkit::detail::require_input(rec != nullptr, "alignment outside every reference record");
            rname = rec->name;
            pos = a.position - rec->offset;
        }
        const auto it = lengths.find(a.read_id);
        out << a.read_id << '\t' << flag << '\t' << rname << '\t' << pos + 1 << "\t255\t";
        if(it != lengths.end()) out << it->second << 'M'; else out << '*';
        out << "\t*\t0\t0\t*\t*\n";
    }
}

/// `read_id<TAB>pos<TAB>strand` with 1-based positions in the concatenated
/// reference (records joined by one separator). Strand is '+' or '-';
/// position 0 or strand '*' marks an unmapped read.
inline std::vector<AlignmentRecord> parse_alignment_tsv(std::istream& in, const std::string& name = "<tsv>") {
    std::vector<AlignmentRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while(std::getline(in, line)) {
        ++lineno;
        if(!line.empty() && line.back() == '\r') line.pop_back();
        if(line.empty() || line[0] == '#') continue;
        const auto cols = detail::split_tabs(line);
        const std::string where = name + ":" + std::to_string(lineno);
        mslkit::detail::require_input(cols.size() >= 3, where + ": expected read_id, pos, strand");
        AlignmentRecord aln;
        aln.read_id = std::string(cols[0]);
        const auto pos = detail::parse_number<std::size_t>(cols[1], where);
        const auto strand = cols[2];
        mslkit::detail::require_input(strand == "+" || strand == "-" || strand == "*" || strand == "forward" ||
                                          strand == "reverse",
                                      where + ": bad strand '" + std::string(strand) + "'");
        aln.mapped = pos > 0 && strand != "*";
        aln.strand = (strand == "-" || strand == "reverse") ? Strand::reverse : Strand::forward;
        aln.position = aln.mapped ? pos - 1 : 0;
        out.push_back(std::move(aln));
    }
    return out;
}

inline void write_alignment_tsv(std::ostream& out, const std::vector<AlignmentRecord>& alignments,
                                const ReferenceLayout& layout) {
    for(const auto& a : alignments) {
        if(!a.mapped) {
            out << a.read_id << "\t0\t*\n";
            continue;
        }
        std::size_t global = a.position;
        if(!a.ref_name.empty()) {
            const RecordSpan* rec = layout.find(a.ref_name);
            mslkit::detail::require_input(rec != nullptr, "unknown reference '" + a.ref_name + "'");
            global += rec->offset;
        }
        out << a.read_id << '\t' << global + 1 << '\t' << (a.strand == Strand::reverse ? '-' : '+') << '\n';
    }
}

/// Picks the parser from the extension (.sam => SAM, anything else => TSV).
inline std::vector<AlignmentRecord> read_alignment_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    mslkit::detail::require_input(in.good(), "cannot open '" + path.string() + "'");
    if(path.extension() == ".sam") return parse_sam(in, path.string());
    return parse_alignment_tsv(in, path.string());
}

} // namespace mslkit::io
