#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mslkit/align.hpp"
#include "mslkit/kmer_assignment.hpp"
#include "mslkit/landscape.hpp"
#include "oracles.hpp"

using namespace mslkit;

namespace {

MslArray toy_msl() {
    return build_self_msl(LandscapeSource<std::uint32_t>::from_text(Text::genomic("CATCATTTG")));
}

AlignmentRecord fwd(std::string id, std::size_t pos) { return {std::move(id), {}, pos, Strand::forward, true}; }

} // namespace

TEST(KmerAssignment, KForAlignmentExamples) {
    const auto msl = toy_msl();
    EXPECT_EQ(k_for_alignment(msl, 3, 4), 4u);
    EXPECT_EQ(k_for_alignment(msl, 6, 3), 3u);
    EXPECT_EQ(k_for_alignment(MslArray{std::vector<std::uint32_t>(10, 0)}, 2, 5), 1u);
    EXPECT_THROW(k_for_alignment(msl, 7, 3), InputError);
    EXPECT_THROW(k_for_alignment(msl, 0, 0), InputError);
}

TEST(KmerAssignment, AssignExamples) {
    const auto msl = toy_msl();
    const ReferenceLayout none;
    const ReadRecord r4{"r4", "CATT"};
    EXPECT_EQ(assign_k(r4, std::vector{fwd("r4", 3)}, msl, none), (ReadAssignment{"r4", 4, KSource::aligned}));
    const ReadRecord r3{"r3", "ATC"};
    EXPECT_EQ(assign_k(r3, std::vector{fwd("r3", 0)}, msl, none),
              (ReadAssignment{"r3", 77, KSource::overflow_default}));
    EXPECT_EQ(assign_k(r3, std::vector<AlignmentRecord>{}, msl, none),
              (ReadAssignment{"r3", 55, KSource::unaligned_default}));
    AlignmentRecord unmapped{"r3", {}, 0, Strand::forward, false};
    EXPECT_EQ(assign_k(r3, std::vector{unmapped}, msl, none).source, KSource::unaligned_default);
}

TEST(KmerAssignment, FloorRaisesTinyK) {
    const MslArray flat{std::vector<std::uint32_t>(8, 0)};
    const ReadRecord r{"r", "ACG"};
    EXPECT_EQ(assign_k(r, std::vector{fwd("r", 2)}, flat, {}).k, 2u);
    AssignmentDefaults d;
    d.k_floor = 3;
    EXPECT_EQ(assign_k(r, std::vector{fwd("r", 2)}, flat, {}, d).k, 3u);
}

TEST(KmerAssignment, ClippedAlignmentUsesReferenceSpan) {
    const auto msl = toy_msl();
    // 6-base read whose CIGAR covers only positions 6..8 (TTG)
    const ReadRecord r{"r", "GGGTTG"};
    AlignmentRecord a = fwd("r", 6);
    a.span = 3;
    EXPECT_EQ(assign_k(r, std::vector{a}, msl, {}), (ReadAssignment{"r", 3, KSource::aligned}));
    a.span = 0;
    EXPECT_THROW(assign_k(r, std::vector{a}, msl, {}), InputError);
}

TEST(KmerAssignment, RecordCoordinates) {
    // chrA = CATCAT (offset 0), chrB = TTG (offset 7)
    const auto text = Text::genomic_records({"CATCAT", "TTG"});
    const auto layout = ReferenceLayout::from_lengths({{"chrA", 6}, {"chrB", 3}});
    const auto msl = build_self_msl(LandscapeSource<std::uint32_t>::from_text(text));
    const ReadRecord r{"r", "TG"};
    AlignmentRecord a{"r", "chrB", 1, Strand::forward, true};
    EXPECT_EQ(k_for_alignment(msl, 8, 2), 1u);
    EXPECT_EQ(assign_k(r, std::vector{a}, msl, layout).k, 2u);
    a.position = 2;
    EXPECT_THROW(assign_k(r, std::vector{a}, msl, layout), InputError);
    a.ref_name = "chrZ";
    EXPECT_THROW(assign_k(r, std::vector{a}, msl, layout), InputError);
}

TEST(KmerAssignment, AssignAllShapes) {
    const auto msl = toy_msl();
    const ReferenceLayout none;
    EXPECT_TRUE(assign_all({}, {}, msl, none).rows.empty());

    const std::vector<ReadRecord> reads = {{"a", "CATT"}, {"b", "TTG"}};
    const auto t = assign_all(reads, {fwd("a", 3), fwd("b", 6)}, msl, none);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0].read_id, "a");
    EXPECT_EQ(t.rows[1].read_id, "b");
    EXPECT_EQ(t.histogram.at(4), 1u);
    EXPECT_EQ(t.histogram.at(3), 1u);

    const auto u = assign_all(reads, {}, msl, none);
    EXPECT_EQ(u.histogram.size(), 1u);
    EXPECT_EQ(u.histogram.at(55), 2u);

    EXPECT_THROW(assign_all({{"a", "CA"}, {"a", "AT"}}, {}, msl, none), InputError);
    EXPECT_THROW(assign_all(reads, {fwd("zz", 0)}, msl, none), InputError);
}

TEST(KmerAssignment, Properties) {
    std::mt19937_64 rng(31);
    for(int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_string(rng, 600, trial % 2 ? "AC" : "ACGT");
        const auto src = LandscapeSource<std::uint32_t>::from_text(Text::genomic(g));
        const auto msl = build_self_msl(src);

        std::vector<ReadRecord> reads;
        for(int r = 0; r < 60; ++r) {
            const std::size_t len = std::uniform_int_distribution<std::size_t>(3, 40)(rng);
            const std::size_t p = std::uniform_int_distribution<std::size_t>(0, g.size() - len)(rng);
            auto bases = g.substr(p, len);
            if(r % 3 == 1) bases = reverse_complement(bases);
            if(r % 7 == 6) bases = std::string(len, 'N');
            reads.push_back({"read" + std::to_string(r), bases});
        }
        const auto alignments = align_exact(src.index(), {}, reads);
        const auto table = assign_all(reads, alignments, msl, {});

        for(std::size_t r = 0; r < reads.size(); ++r) {
            const auto& row = table.rows[r];
            const auto& read = reads[r];
            std::vector<std::size_t> starts;
            for(const auto& a : alignments) {
                if(a.read_id == read.id && a.mapped) starts.push_back(a.position);
            }
            if(starts.empty()) {
                ASSERT_EQ(row.source, KSource::unaligned_default);
                continue;
            }
            // reference: max over alignments of 1 + max height, by plain scan
            std::uint32_t want = 0;
            for(auto p : starts) {
                std::uint32_t m = 0;
                for(std::size_t i = p; i < p + read.length(); ++i) m = std::max(m, msl.heights[i]);
                want = std::max(want, m + 1);
            }
            want = std::max<std::uint32_t>(want, 2);
            if(want > read.length()) {
                ASSERT_EQ(row.source, KSource::overflow_default);
                continue;
            }
            ASSERT_EQ(row.k, want);
            // every length-k window of the aligned reference span occurs once
            for(auto p : starts) {
                for(std::size_t a = p; a + row.k <= p + read.length(); ++a) {
                    ASSERT_LE(oracle::count(g, std::string_view(g).substr(a, row.k)), 1u) << read.id;
                }
            }
        }

        // monotone in the landscape: raising heights never lowers k
        MslArray higher = msl;
        for(auto& h : higher.heights) h += static_cast<std::uint32_t>(rng() % 3);
        const auto raised = assign_all(reads, alignments, higher, {});
        for(std::size_t r = 0; r < reads.size(); ++r) {
            if(table.rows[r].source == KSource::aligned && raised.rows[r].source == KSource::aligned) {
                ASSERT_GE(raised.rows[r].k, table.rows[r].k);
            }
        }

        // alignment order does not matter and threads change nothing
        auto shuffled = alignments;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ASSERT_EQ(assign_all(reads, shuffled, msl, {}).rows, table.rows);
        ASSERT_EQ(assign_all(reads, alignments, msl, {}, {}, 4).rows, table.rows);
    }
}

TEST(KmerAssignment, SourceNamesRoundTrip) {
    for(auto s : {KSource::aligned, KSource::overflow_default, KSource::unaligned_default}) {
        EXPECT_EQ(parse_k_source(to_string(s)), s);
    }
    EXPECT_THROW(parse_k_source("other"), InputError);
}
