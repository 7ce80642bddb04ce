#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mslkit/align.hpp"
#include "mslkit/debruijn.hpp"
#include "mslkit/simulate.hpp"
#include "oracles.hpp"

using namespace mslkit;

TEST(AlignExact, ToyHits) {
    const auto idx = build_suffix_index(Text::genomic("CATCATTTG"));
    const auto hits = align_exact(idx, {}, {{"r", "CAT"}});
    ASSERT_EQ(hits.size(), 2u);
    EXPECT_EQ(hits[0].position, 0u);
    EXPECT_EQ(hits[1].position, 3u);
    EXPECT_EQ(hits[0].strand, Strand::forward);

    // CAAA is the reverse complement of TTTG
    const auto rev = align_exact(idx, {}, {{"r", "CAAA"}});
    ASSERT_EQ(rev.size(), 1u);
    EXPECT_EQ(rev[0].position, 5u);
    EXPECT_EQ(rev[0].strand, Strand::reverse);

    const auto miss = align_exact(idx, {}, {{"r", "GGGG"}});
    ASSERT_EQ(miss.size(), 1u);
    EXPECT_FALSE(miss[0].mapped);
}

TEST(AlignExact, RecordLocalCoordinatesSkipSeparators) {
    const auto idx = build_suffix_index(Text::genomic_records({"ACGT", "ACGA"}));
    const auto layout = ReferenceLayout::from_lengths({{"x", 4}, {"y", 4}});
    const auto hits = align_exact(idx, layout, {{"r", "ACG"}});
    // CGT is ACG reversed-complemented, and occurs in x
    ASSERT_EQ(hits.size(), 3u);
    EXPECT_EQ(hits[0].ref_name, "x");
    EXPECT_EQ(hits[0].position, 0u);
    EXPECT_EQ(hits[1].ref_name, "y");
    EXPECT_EQ(hits[1].position, 0u);
    EXPECT_EQ(hits[2].ref_name, "x");
    EXPECT_EQ(hits[2].position, 1u);
    EXPECT_EQ(hits[2].strand, Strand::reverse);
}

TEST(AlignExact, MatchesNaiveScan) {
    std::mt19937_64 rng(61);
    for(int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_string(rng, 500, trial % 2 ? "AC" : "ACGT");
        const auto idx = build_suffix_index(Text::genomic(g));
        std::vector<ReadRecord> reads;
        for(int r = 0; r < 40; ++r) {
            reads.push_back({"r" + std::to_string(r), oracle::random_string(rng, 2 + rng() % 8, "ACGT")});
        }
        const auto hits = align_exact(idx, {}, reads);
        const auto threaded = align_exact(idx, {}, reads, 3);
        ASSERT_EQ(hits.size(), threaded.size());
        for(const auto& read : reads) {
            std::vector<std::pair<std::size_t, Strand>> want, got;
            for(auto p : oracle::occurrences(g, read.bases)) want.emplace_back(p, Strand::forward);
            const auto rc = reverse_complement(read.bases);
            if(rc != read.bases) {
                for(auto p : oracle::occurrences(g, rc)) want.emplace_back(p, Strand::reverse);
            }
            for(const auto& h : hits) {
                if(h.read_id == read.id && h.mapped) got.emplace_back(h.position, h.strand);
            }
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            ASSERT_EQ(got, want) << read.bases;
        }
        for(std::size_t i = 0; i < hits.size(); ++i) {
            ASSERT_EQ(hits[i].read_id, threaded[i].read_id);
            ASSERT_EQ(hits[i].position, threaded[i].position);
        }
    }
}

TEST(Simulate, DeterministicAndCovering) {
    const auto g = random_genome(5000, 9);
    EXPECT_EQ(g, random_genome(5000, 9));
    EXPECT_NE(g, random_genome(5000, 10));
    const auto a = simulate_reads(g, {100, 30, 3});
    const auto b = simulate_reads(g, {100, 30, 3});
    ASSERT_EQ(a.size(), b.size());
    for(std::size_t i = 0; i < a.size(); ++i) ASSERT_EQ(a[i].bases, b[i].bases);
    std::size_t bases = 0;
    for(const auto& r : a) {
        bases += r.length();
        const bool rev = r.id.ends_with("_rev");
        const auto fwd = rev ? reverse_complement(r.bases) : r.bases;
        ASSERT_NE(g.find(fwd), std::string::npos);
    }
    EXPECT_NEAR(static_cast<double>(bases) / static_cast<double>(g.size()), 30.0, 1.5);
    EXPECT_THROW(simulate_reads(g, {6000, 1, 1}), InputError);
}

TEST(Simulate, FullLengthReadsReassembleGenome) {
    const auto g = random_genome(300, 2);
    const auto reads = simulate_reads(g, {300, 1, 1});
    ASSERT_EQ(reads.size(), 1u);
    EXPECT_EQ(reads[0].bases, g);
    EXPECT_EQ(assemble_single_k(std::vector<std::string>{reads[0].bases}, 31, {}).contigs,
              std::vector<std::string>{g});
}

TEST(Simulate, PlantRepeat) {
    auto g = random_genome(10000, 4);
    const auto starts = plant_repeat(g, 400, 10, 4);
    ASSERT_EQ(starts.size(), 10u);
    const auto unit = g.substr(starts[0], 400);
    for(auto s : starts) EXPECT_EQ(g.substr(s, 400), unit);
    EXPECT_GE(oracle::count(g, unit), 10u);
    EXPECT_THROW(plant_repeat(g, 2000, 10, 1), InputError);
}
