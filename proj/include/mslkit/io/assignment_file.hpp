#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "../error.hpp"
#include "../kmer_assignment.hpp"
#include "alignment_file.hpp"

namespace mslkit::io {

/// `read_id<TAB>k<TAB>source`, one row per read.
inline void write_assignments(std::ostream& out, const std::vector<ReadAssignment>& rows) {
    for(const auto& r : rows) out << r.read_id << '\t' << r.k << '\t' << to_string(r.source) << '\n';
}

inline std::vector<ReadAssignment> parse_assignments(std::istream& in, const std::string& name = "<k-table>") {
    std::vector<ReadAssignment> rows;
    std::string line;
    std::size_t lineno = 0;
    while(std::getline(in, line)) {
        ++lineno;
        if(!line.empty() && line.back() == '\r') line.pop_back();
        if(line.empty() || line[0] == '#') continue;
        const auto cols = detail::split_tabs(line);
        const std::string where = name + ":" + std::to_string(lineno);
        mslkit::detail::require_input(cols.size() >= 2, where + ": expected read_id and k");
        ReadAssignment r;
        r.read_id = std::string(cols[0]);
        r.k = detail::parse_number<std::uint32_t>(cols[1], where);
        r.source = cols.size() >= 3 ? parse_k_source(cols[2]) : KSource::aligned;
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<ReadAssignment> read_assignment_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    mslkit::detail::require_input(in.good(), "cannot open '" + path.string() + "'");
    return parse_assignments(in, path.string());
}

/// JSON object {"k": count, ...} with keys in ascending k.
inline void write_histogram_json(std::ostream& out, const std::map<std::uint32_t, std::size_t>& histogram) {
    out << '{';
    bool first = true;
    for(const auto& [k, count] : histogram) {
        if(!first) out << ", ";
        first = false;
        out << '"' << k << "\": " << count;
    }
    out << "}\n";
}

} // namespace mslkit::io
