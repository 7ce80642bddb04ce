#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "align.hpp"
#include "debruijn.hpp"
#include "error.hpp"
#include "io/alignment_file.hpp"
#include "io/assignment_file.hpp"
#include "io/msl_file.hpp"
#include "io/sequence_file.hpp"
#include "kmer_assignment.hpp"
#include "landscape.hpp"
#include "stats.hpp"
#include "version.hpp"

namespace mslkit {

/// A reference genome: concatenated text plus its record table.
struct Reference {
    Text text;
    ReferenceLayout layout;
};

inline Reference make_reference(const std::vector<ReadRecord>& records) {
    detail::require_input(!records.empty(), "reference has no records");
    std::vector<std::string_view> bodies;
    std::vector<std::pair<std::string, std::size_t>> lengths;
    for(const auto& r : records) {
        detail::require_input(!r.bases.empty(), "reference record '" + r.id + "' is empty");
        bodies.push_back(r.bases);
        lengths.emplace_back(r.id, r.bases.size());
    }
    return {Text::genomic_records(bodies), ReferenceLayout::from_lengths(lengths)};
}

struct PipelineConfig {
    std::filesystem::path reference;
    std::filesystem::path reads;
    std::filesystem::path out_dir;
    /// External SAM/TSV alignments used instead of the built-in exact aligner.
    std::optional<std::filesystem::path> alignments;
    AssignmentDefaults defaults;
    std::uint32_t cutoff = 5;
    /// Optional clamp applied to every assigned k.
    std::optional<std::uint32_t> k_lower;
    std::optional<std::uint32_t> k_upper;
    bool canonical = false;
    unsigned threads = 1;
    io::MslFormat msl_format = io::MslFormat::text;

    void validate() const {
        detail::require_input(cutoff >= 1, "cutoff must be at least 1");
        detail::require_input(defaults.overflow_k >= 2 && defaults.unaligned_k >= 2, "default k values must be >= 2");
        detail::require_input(defaults.k_floor >= 2, "k floor must be >= 2");
        if(k_lower) detail::require_input(*k_lower >= 2, "k lower bound must be >= 2");
        if(k_upper) detail::require_input(*k_upper >= 2, "k upper bound must be >= 2");
        if(k_lower && k_upper) detail::require_input(*k_lower <= *k_upper, "k lower bound exceeds upper bound");
        detail::require_input(!out_dir.empty(), "output directory required");
    }
};

struct PipelineResult {
    MslArray msl;
    LandscapeStats landscape;
    AssignmentTable assignments;
    ContigSet contigs;
    ContigStats stats;
    AssemblyCounters counters;
    std::vector<std::filesystem::path> outputs;
};

inline nlohmann::json to_json(const ContigStats& s) {
    nlohmann::json j{{"count", s.count}, {"total_length", s.total_length}, {"largest", s.largest}, {"n50", s.n50}};
    j["exact_match_fraction"] = s.exact_match_fraction ? nlohmann::json(*s.exact_match_fraction) : nlohmann::json(nullptr);
    if(!s.warning.empty()) j["warning"] = s.warning;
    return j;
}

inline std::vector<ReadRecord> to_contig_records(const ContigSet& set) {
    std::vector<ReadRecord> out;
    for(std::size_t i = 0; i < set.contigs.size(); ++i) {
        out.push_back({"contig_" + std::to_string(i + 1) + " len=" + std::to_string(set.contigs[i].size()) +
                           " k=" + std::to_string(set.k),
                       set.contigs[i]});
    }
    return out;
}

/// Landscape -> alignment -> k assignment -> iterative assembly -> stats.
/// Any failure is rethrown with the stage name prefixed and every output
/// written so far is removed.
inline PipelineResult run_pipeline(const PipelineConfig& config) {
    config.validate();
    PipelineResult result;
    std::string stage = "setup";
    auto out_path = [&](const char* name) {
        auto p = config.out_dir / name;
        result.outputs.push_back(p);
        return p;
    };
    try {
        std::filesystem::create_directories(config.out_dir);

        stage = "load";
        const auto ref_file = io::read_sequence_file(config.reference);
        auto reads_file = io::read_sequence_file(config.reads);
        detail::require_input(!reads_file.records.empty(), "reads file '" + config.reads.string() + "' has no reads");
        const auto reference = make_reference(ref_file.records);

        stage = "landscape";
        const auto source = LandscapeSource<std::uint32_t>::from_text(reference.text);
        result.msl = build_self_msl(source, &result.landscape);
        detail::require_invariant(result.landscape.ascents + result.landscape.descents <= 2 * result.msl.size(),
                                  "landscape scan exceeded 2n ascents and descents");
        io::write_msl_file(out_path(config.msl_format == io::MslFormat::text ? "reference.msl" : "reference.mslb"),
                           result.msl, config.msl_format);

        stage = "align";
        std::vector<AlignmentRecord> alignments;
        if(config.alignments) {
            alignments = io::read_alignment_file(*config.alignments);
        } else {
            alignments = align_exact(source.index(), reference.layout, reads_file.records, config.threads);
            std::ofstream out(out_path("alignments.sam"));
            io::write_sam(out, alignments, reference.layout, reads_file.records);
        }

        stage = "assign";
        result.assignments = assign_all(reads_file.records, alignments, result.msl, reference.layout, config.defaults,
                                        config.threads);
        for(auto& row : result.assignments.rows) {
            if(config.k_lower) row.k = std::max(row.k, *config.k_lower);
            if(config.k_upper) row.k = std::min(row.k, *config.k_upper);
        }
        result.assignments.histogram.clear();
        for(const auto& row : result.assignments.rows) ++result.assignments.histogram[row.k];
        {
            std::ofstream out(out_path("assignments.tsv"));
            io::write_assignments(out, result.assignments.rows);
        }
        {
            std::ofstream out(out_path("k_histogram.json"));
            io::write_histogram_json(out, result.assignments.histogram);
        }

        stage = "assemble";
        std::vector<std::string> read_bases;
        read_bases.reserve(reads_file.records.size());
        for(auto& r : reads_file.records) read_bases.push_back(r.bases);
        const auto partition = ReadPartition::from_assignments(result.assignments.rows);
        result.contigs = iterative_assemble(read_bases, partition, {config.cutoff, config.canonical}, &result.counters);
        {
            std::ofstream out(out_path("contigs.fa"));
            io::write_fasta(out, to_contig_records(result.contigs));
        }

        stage = "stats";
        result.stats = contig_stats(result.contigs.contigs, &source.index());
        {
            std::ofstream out(out_path("stats.json"));
            out << to_json(result.stats).dump(2) << '\n';
        }

        stage = "manifest";
        nlohmann::json manifest;
        manifest["tool"] = "mslkit";
        manifest["version"] = kVersion;
        manifest["config"] = {
            {"reference", config.reference.string()},
            {"reads", config.reads.string()},
            {"alignments", config.alignments ? nlohmann::json(config.alignments->string()) : nlohmann::json(nullptr)},
            {"overflow_k", config.defaults.overflow_k},
            {"unaligned_k", config.defaults.unaligned_k},
            {"k_floor", config.defaults.k_floor},
            {"cutoff", config.cutoff},
            {"canonical", config.canonical},
            {"threads", config.threads},
        };
        manifest["counters"] = {
            {"reference_length", result.msl.size()},
            {"landscape_ascents", result.landscape.ascents},
            {"landscape_descents", result.landscape.descents},
            {"reads", reads_file.records.size()},
            {"k_min", partition.k_min()},
            {"k_max", partition.k_max()},
            {"assembly_rounds", result.counters.rounds},
            {"total_kmer_insertions", result.counters.total_kmer_insertions},
            {"contigs", result.contigs.contigs.size()},
        };
        std::ofstream out(out_path("manifest.json"));
        out << manifest.dump(2) << '\n';
    } catch(const std::exception& e) {
        std::error_code ec;
        for(const auto& p : result.outputs) std::filesystem::remove(p, ec);
        const std::string msg = "[" + stage + "] " + e.what();
        if(dynamic_cast<const InputError*>(&e)) throw InputError(msg);
        if(dynamic_cast<const std::filesystem::filesystem_error*>(&e)) throw InputError(msg);
        throw InvariantError(msg);
    }
    return result;
}

} // namespace mslkit
