#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "../error.hpp"
#include "../kmer_assignment.hpp"
#include "../text.hpp"

namespace mslkit::io {

enum class SequenceFormat { fasta, fastq };

/// Records of a FASTA or FASTQ file. Ids are the first whitespace-delimited
/// token of the header and are unique; bases are upper-cased and checked
/// against the genomic alphabet. FASTQ qualities are validated, then dropped.
struct SequenceFile {
    std::vector<ReadRecord> records;
    SequenceFormat format = SequenceFormat::fasta;
};

namespace detail {

inline std::string header_id(const std::string& line, std::size_t lineno, const std::string& name) {
    const auto end = line.find_first_of(" \t", 1);
    std::string id = line.substr(1, end == std::string::npos ? std::string::npos : end - 1);
    mslkit::detail::require_input(!id.empty(), name + ":" + std::to_string(lineno) + ": empty record id");
    return id;
}

inline void append_bases(std::string& dst, const std::string& line, std::size_t lineno, const std::string& name) {
    for(char c : line) {
        if(c == '\r' || c == ' ' || c == '\t') continue;
        const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        mslkit::detail::require_input(is_genomic_symbol(u), name + ":" + std::to_string(lineno) +
                                                                ": invalid base '" + std::string(1, c) + "'");
        dst.push_back(u);
    }
}

inline void strip_cr(std::string& line) {
    if(!line.empty() && line.back() == '\r') line.pop_back();
}

} // namespace detail

inline SequenceFile parse_sequences(std::istream& in, const std::string& name = "<input>") {
    SequenceFile file;
    std::unordered_set<std::string> seen;
    auto add = [&](ReadRecord rec, std::size_t lineno) {
        mslkit::detail::require_input(seen.insert(rec.id).second,
            name + ":" + std::to_string(lineno) + ": duplicate record id '" + rec.id + "'");
        file.records.push_back(std::move(rec));
    };

    std::string line;
    std::size_t lineno = 0;
    // skip leading blank lines to sniff the format
    while(std::getline(in, line)) {
        ++lineno;
        detail::strip_cr(line);
        if(!line.empty()) break;
    }
    if(line.empty()) return file;

    if(line[0] == '>') {
        file.format = SequenceFormat::fasta;
        ReadRecord cur{detail::header_id(line, lineno, name), {}};
        std::size_t cur_line = lineno;
        while(std::getline(in, line)) {
            ++lineno;
            detail::strip_cr(line);
            if(line.empty() || line[0] == ';') continue;
            if(line[0] == '>') {
                add(std::move(cur), cur_line);
                cur = ReadRecord{detail::header_id(line, lineno, name), {}};
                cur_line = lineno;
            } else {
                detail::append_bases(cur.bases, line, lineno, name);
            }
        }
        add(std::move(cur), cur_line);
        return file;
    }

    mslkit::detail::require_input(line[0] == '@', name + ":" + std::to_string(lineno) +
                                                      ": expected '>' (FASTA) or '@' (FASTQ) header");
    file.format = SequenceFormat::fastq;
    for(;;) {
        mslkit::detail::require_input(!line.empty() && line[0] == '@',
            name + ":" + std::to_string(lineno) + ": expected '@' header");
        const std::size_t header_line = lineno;
        ReadRecord rec{detail::header_id(line, lineno, name), {}};
        std::string seq, plus, qual;
        mslkit::detail::require_input(static_cast<bool>(std::getline(in, seq)), name + ": truncated FASTQ record");
        ++lineno;
        detail::strip_cr(seq);
        detail::append_bases(rec.bases, seq, lineno, name);
        mslkit::detail::require_input(std::getline(in, plus) && !plus.empty() && plus[0] == '+',
            name + ":" + std::to_string(lineno + 1) + ": expected '+' separator");
        ++lineno;
        mslkit::detail::require_input(static_cast<bool>(std::getline(in, qual)), name + ": truncated FASTQ record");
        ++lineno;
        detail::strip_cr(qual);
        mslkit::detail::require_input(qual.size() == rec.bases.size(),
            name + ":" + std::to_string(lineno) + ": quality length does not match sequence length");
        add(std::move(rec), header_line);
        do {
            if(!std::getline(in, line)) return file;
            ++lineno;
            detail::strip_cr(line);
        } while(line.empty());
    }
}

inline SequenceFile read_sequence_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    mslkit::detail::require_input(in.good(), "cannot open '" + path.string() + "'");
    return parse_sequences(in, path.string());
}

/// FASTA with `width`-column wrapping.
inline void write_fasta(std::ostream& out, const std::vector<ReadRecord>& records, std::size_t width = 60) {
    for(const auto& r : records) {
        out << '>' << r.id << '\n';
        for(std::size_t i = 0; i < r.bases.size(); i += width) out << r.bases.substr(i, width) << '\n';
    }
}

/// FASTQ with a constant quality character.
inline void write_fastq(std::ostream& out, const std::vector<ReadRecord>& records, char quality = 'I') {
    for(const auto& r : records) {
        out << '@' << r.id << '\n' << r.bases << "\n+\n" << std::string(r.bases.size(), quality) << '\n';
    }
}

} // namespace mslkit::io
