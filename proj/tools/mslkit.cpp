// mslkit command-line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mslkit/mslkit.hpp"

namespace fs = std::filesystem;
using namespace mslkit;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

unsigned env_threads() {
    const char* v = std::getenv("MSLKIT_THREADS");
    if(v == nullptr || *v == '\0') return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    detail::require_input(*end == '\0' && n >= 1 && n <= 1024, "MSLKIT_THREADS must be an integer in [1, 1024]");
    return static_cast<unsigned>(n);
}

std::ofstream open_out(const fs::path& path, bool binary = false) {
    if(path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    detail::require_input(out.good(), "cannot write '" + path.string() + "'");
    return out;
}

Reference load_reference(const fs::path& path) { return make_reference(io::read_sequence_file(path).records); }

std::string joined_bodies(const std::vector<ReadRecord>& records) {
    std::string s;
    for(std::size_t i = 0; i < records.size(); ++i) {
        if(i) s.push_back(kRecordSeparator);
        s += records[i].bases;
    }
    return s;
}

struct IndexBuildArgs {
    std::string reference, out;
};

void run_index_build(const IndexBuildArgs& a) {
    const auto ref = load_reference(a.reference);
    const auto idx = build_suffix_index(ref.text);
    io::write_index_file(a.out, idx);
    std::cerr << "indexed " << idx.size() << " symbols from " << ref.layout.records().size() << " record(s)\n";
}

struct LandscapeArgs {
    std::string reference, index, general, out, format = "text";
    bool silhouette = false;
};

void run_landscape_build(const LandscapeArgs& a) {
    const auto format = io::parse_msl_format(a.format);
    detail::require_input(a.reference.empty() != a.index.empty(), "give exactly one of --reference or --index");
    detail::require_input(!a.silhouette || !a.general.empty(), "--silhouette needs a --general target");
    const auto source = a.index.empty() ? LandscapeSource<std::uint32_t>::from_text(load_reference(a.reference).text)
                                        : LandscapeSource<std::uint32_t>(io::read_index_file(a.index));
    LandscapeStats stats;
    MslArray msl;
    if(a.general.empty()) {
        msl = build_self_msl(source, &stats);
    } else {
        const auto target = joined_bodies(io::read_sequence_file(a.general).records);
        msl = a.silhouette ? build_silhouette(target, source, &stats) : build_general_msl(target, source, &stats);
    }
    detail::require_invariant(stats.ascents + stats.descents <= 2 * msl.size(),
                              "landscape scan exceeded 2n ascents and descents");
    io::write_msl_file(a.out, msl, format);
    std::cerr << to_string(msl.kind) << " landscape: " << msl.size() << " positions, " << stats.ascents
              << " ascents, " << stats.descents << " descents\n";
}

struct AlignArgs {
    std::string reference, reads, out, format = "sam";
};

void run_align_exact(const AlignArgs& a) {
    detail::require_input(a.format == "sam" || a.format == "tsv", "--format must be sam or tsv");
    const auto ref = load_reference(a.reference);
    const auto reads = io::read_sequence_file(a.reads).records;
    const auto idx = build_suffix_index(ref.text);
    const auto alns = align_exact(idx, ref.layout, reads, env_threads());
    auto out = open_out(a.out);
    if(a.format == "sam") io::write_sam(out, alns, ref.layout, reads); else io::write_alignment_tsv(out, alns, ref.layout);
    std::size_t mapped = 0;
    for(const auto& r : alns) mapped += r.mapped;
    std::cerr << reads.size() << " reads, " << mapped << " exact hits\n";
}

struct AssignArgs {
    std::string msl, alignments, reads, reference, out, histogram;
    AssignmentDefaults defaults;
};

void run_assign_k(const AssignArgs& a) {
    const auto msl = io::read_msl_file(a.msl);
    const auto reads = io::read_sequence_file(a.reads).records;
    const auto alns = io::read_alignment_file(a.alignments);
    ReferenceLayout layout;
    if(!a.reference.empty()) {
        layout = load_reference(a.reference).layout;
        detail::require_input(layout.total_length() == msl.size(),
                              "reference length does not match the landscape length");
    } else {
        for(const auto& r : alns) {
            detail::require_input(!r.mapped || r.ref_name.empty(),
                                  "alignments name reference records; pass --reference to resolve them");
        }
    }
    const auto table = assign_all(reads, alns, msl, layout, a.defaults, env_threads());
    {
        auto out = open_out(a.out);
        io::write_assignments(out, table.rows);
    }
    if(!a.histogram.empty()) {
        auto out = open_out(a.histogram);
        io::write_histogram_json(out, table.histogram);
    }
}

struct AssembleArgs {
    std::string reads, k_table, out, report;
    std::optional<std::uint32_t> k;
    std::uint32_t cutoff = 5;
    bool canonical = false;
    bool all_reads = false;
};

void run_assemble(const AssembleArgs& a) {
    detail::require_input(a.k_table.empty() != !a.k.has_value(), "give exactly one of --k-table or -k");
    const auto records = io::read_sequence_file(a.reads).records;
    detail::require_input(!records.empty(), "reads file has no reads");
    std::vector<std::string> reads;
    reads.reserve(records.size());
    for(const auto& r : records) reads.push_back(r.bases);

    ReadPartition partition;
    if(a.k) {
        detail::require_input(*a.k >= 2, "k must be at least 2");
        partition = ReadPartition::single(reads.size(), *a.k);
    } else {
        const auto table = io::read_assignment_file(a.k_table);
        std::unordered_map<std::string_view, std::uint32_t> k_of;
        for(const auto& row : table) {
            detail::require_input(k_of.emplace(row.read_id, row.k).second, "duplicate read '" + row.read_id + "' in k table");
        }
        std::vector<ReadAssignment> rows;
        rows.reserve(records.size());
        for(const auto& r : records) {
            const auto it = k_of.find(r.id);
            detail::require_input(it != k_of.end(), "read '" + r.id + "' missing from the k table");
            rows.push_back({r.id, it->second, KSource::aligned});
        }
        partition = ReadPartition::from_assignments(rows);
    }
    AssemblyCounters counters;
    const auto contigs = iterative_assemble(reads, partition, {a.cutoff, a.canonical}, &counters,
                                            a.all_reads ? RoundFeed::all_reads : RoundFeed::partitioned);
    {
        auto out = open_out(a.out);
        io::write_fasta(out, to_contig_records(contigs));
    }
    const nlohmann::json report{{"k_min", partition.k_min()},
                                {"k_max", partition.k_max()},
                                {"rounds", counters.rounds},
                                {"total_kmer_insertions", counters.total_kmer_insertions},
                                {"contigs", contigs.contigs.size()}};
    if(!a.report.empty()) {
        auto out = open_out(a.report);
        out << report.dump(2) << '\n';
    }
    std::cerr << report.dump() << '\n';
}

struct SimulateArgs {
    std::string genome, out_genome, out_reads;
    std::size_t genome_length = 0, repeat_length = 0, repeat_copies = 0;
    SimulationConfig config;
    bool fastq = false;
};

void run_simulate(const SimulateArgs& a) {
    std::string genome;
    if(!a.genome.empty()) {
        const auto recs = io::read_sequence_file(a.genome).records;
        detail::require_input(recs.size() == 1, "--genome must hold exactly one record");
        genome = recs[0].bases;
    } else {
        detail::require_input(a.genome_length > 0, "give --genome or --genome-length");
        genome = random_genome(a.genome_length, a.config.seed);
    }
    if(a.repeat_copies > 0) plant_repeat(genome, a.repeat_length, a.repeat_copies, a.config.seed);
    const auto reads = simulate_reads(genome, a.config);
    if(!a.out_genome.empty()) {
        auto out = open_out(a.out_genome);
        io::write_fasta(out, {{"genome", genome}});
    }
    auto out = open_out(a.out_reads);
    if(a.fastq) io::write_fastq(out, reads); else io::write_fasta(out, reads);
    std::cerr << "seed " << a.config.seed << ": " << reads.size() << " reads of " << a.config.read_length
              << " bp from " << genome.size() << " bp\n";
}

struct StatsArgs {
    std::string contigs, reference, out;
};

void run_stats(const StatsArgs& a) {
    std::vector<std::string> contigs;
    for(auto& r : io::read_sequence_file(a.contigs).records) contigs.push_back(std::move(r.bases));
    ContigStats s;
    if(a.reference.empty()) {
        s = contig_stats(contigs);
    } else {
        const auto idx = build_suffix_index(load_reference(a.reference).text);
        s = contig_stats(contigs, &idx);
    }
    const auto text = to_json(s).dump(2) + "\n";
    if(a.out.empty()) {
        std::cout << text;
    } else {
        auto out = open_out(a.out);
        out << text;
    }
    if(!s.warning.empty()) std::cerr << "warning: " << s.warning << '\n';
}

struct PipelineArgs {
    std::string reference, reads, out_dir, alignments, format = "text";
    PipelineConfig config;
};

void run_pipeline_cmd(PipelineArgs a) {
    a.config.reference = a.reference;
    a.config.reads = a.reads;
    a.config.out_dir = a.out_dir;
    if(!a.alignments.empty()) a.config.alignments = fs::path(a.alignments);
    a.config.msl_format = io::parse_msl_format(a.format);
    a.config.threads = env_threads();
    const auto result = run_pipeline(a.config);
    std::cerr << result.contigs.contigs.size() << " contigs, N50 " << result.stats.n50 << ", outputs in "
              << a.out_dir << '\n';
}

void add_defaults(CLI::App* cmd, AssignmentDefaults& d) {
    cmd->add_option("--overflow-k", d.overflow_k, "k for reads whose landscape k exceeds their length")
        ->capture_default_str();
    cmd->add_option("--unaligned-k", d.unaligned_k, "k for reads without alignments")->capture_default_str();
    cmd->add_option("--k-floor", d.k_floor, "smallest aligned k")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mslkit: repeat landscapes and landscape-guided multi-k assembly"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    auto* index = app.add_subcommand("index", "suffix index files");
    index->require_subcommand(1);
    IndexBuildArgs ib;
    auto* index_build = index->add_subcommand("build", "build a suffix index of a reference");
    index_build->add_option("-r,--reference", ib.reference, "reference FASTA")->required();
    index_build->add_option("-o,--out", ib.out, "output index file")->required();
    index_build->callback([&] { run_index_build(ib); });

    auto* landscape = app.add_subcommand("landscape", "repeat landscapes");
    landscape->require_subcommand(1);
    LandscapeArgs lb;
    auto* landscape_build = landscape->add_subcommand("build", "per-position longest repeat heights");
    landscape_build->add_option("-r,--reference", lb.reference, "source FASTA");
    landscape_build->add_option("-i,--index", lb.index, "prebuilt source index");
    landscape_build->add_option("--general", lb.general, "target FASTA scanned against the source");
    landscape_build->add_flag("--silhouette", lb.silhouette, "count single occurrences in the source");
    landscape_build->add_option("--format", lb.format, "text or binary")->capture_default_str();
    landscape_build->add_option("-o,--out", lb.out, "output landscape file")->required();
    landscape_build->callback([&] { run_landscape_build(lb); });

    AlignArgs al;
    auto* align = app.add_subcommand("align-exact", "exact full-length read placement on both strands");
    align->add_option("-r,--reference", al.reference, "reference FASTA")->required();
    align->add_option("--reads", al.reads, "reads FASTA/FASTQ")->required();
    align->add_option("--format", al.format, "sam or tsv")->capture_default_str();
    align->add_option("-o,--out", al.out, "output alignments")->required();
    align->callback([&] { run_align_exact(al); });

    AssignArgs as;
    auto* assign = app.add_subcommand("assign-k", "choose k per read from the landscape");
    assign->add_option("--msl", as.msl, "reference self landscape file")->required();
    assign->add_option("--alignments", as.alignments, "SAM (.sam) or TSV alignments")->required();
    assign->add_option("--reads", as.reads, "reads FASTA/FASTQ")->required();
    assign->add_option("-r,--reference", as.reference, "reference FASTA, resolves record names");
    assign->add_option("-o,--out", as.out, "output k table")->required();
    assign->add_option("--histogram", as.histogram, "output JSON histogram of k");
    add_defaults(assign, as.defaults);
    assign->callback([&] { run_assign_k(as); });

    AssembleArgs am;
    auto* assemble = app.add_subcommand("assemble", "de Bruijn assembly, single or multi-k");
    assemble->add_option("--reads", am.reads, "reads FASTA/FASTQ")->required();
    auto* table_opt = assemble->add_option("--k-table", am.k_table, "per-read k table (iterative mode)");
    auto* k_opt = assemble->add_option("-k", am.k, "single k");
    table_opt->excludes(k_opt);
    assemble->add_option("--cutoff", am.cutoff, "minimum k-mer count")->capture_default_str();
    assemble->add_flag("--canonical", am.canonical, "merge k-mers with their reverse complements");
    assemble->add_flag("--all-reads", am.all_reads, "feed every read to every round");
    assemble->add_option("-o,--out", am.out, "output contigs FASTA")->required();
    assemble->add_option("--report", am.report, "output JSON counters");
    assemble->callback([&] { run_assemble(am); });

    SimulateArgs sm;
    auto* simulate = app.add_subcommand("simulate", "random genome and error-free reads");
    simulate->add_option("--genome", sm.genome, "existing genome FASTA");
    simulate->add_option("--genome-length", sm.genome_length, "length of a random genome");
    simulate->add_option("--repeat-length", sm.repeat_length, "planted repeat unit length");
    simulate->add_option("--repeat-copies", sm.repeat_copies, "planted repeat copies");
    simulate->add_option("--read-length", sm.config.read_length)->capture_default_str();
    simulate->add_option("--coverage", sm.config.coverage)->capture_default_str();
    simulate->add_option("--seed", sm.config.seed)->capture_default_str();
    simulate->add_flag("--fastq", sm.fastq, "write reads as FASTQ");
    simulate->add_option("--out-genome", sm.out_genome, "output genome FASTA");
    simulate->add_option("--out-reads", sm.out_reads, "output reads")->required();
    simulate->callback([&] { run_simulate(sm); });

    StatsArgs st;
    auto* stats = app.add_subcommand("stats", "contig statistics as JSON");
    stats->add_option("--contigs", st.contigs, "contigs FASTA")->required();
    stats->add_option("-r,--reference", st.reference, "reference FASTA for exact-match fraction");
    stats->add_option("-o,--out", st.out, "output JSON (default stdout)");
    stats->callback([&] { run_stats(st); });

    PipelineArgs pl;
    auto* pipeline = app.add_subcommand("pipeline", "landscape, align, assign k, iterative assembly, stats");
    pipeline->add_option("-r,--reference", pl.reference, "reference FASTA")->required();
    pipeline->add_option("--reads", pl.reads, "reads FASTA/FASTQ")->required();
    pipeline->add_option("-o,--out-dir", pl.out_dir, "output directory")->required();
    pipeline->add_option("--alignments", pl.alignments, "external SAM/TSV instead of exact alignment");
    pipeline->add_option("--cutoff", pl.config.cutoff, "minimum k-mer count")->capture_default_str();
    pipeline->add_option("--k-min", pl.config.k_lower, "raise every assigned k to at least this");
    pipeline->add_option("--k-max", pl.config.k_upper, "lower every assigned k to at most this");
    pipeline->add_flag("--canonical", pl.config.canonical, "merge k-mers with their reverse complements");
    pipeline->add_option("--format", pl.format, "landscape file format, text or binary")->capture_default_str();
    add_defaults(pipeline, pl.config.defaults);
    pipeline->callback([&] { run_pipeline_cmd(pl); });

    try {
        app.parse(argc, argv);
    } catch(const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch(const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch(const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch(const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch(const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch(const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    } catch(const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch(const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
