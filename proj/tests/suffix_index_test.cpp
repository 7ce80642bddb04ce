#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "mslkit/suffix_index.hpp"
#include "oracles.hpp"

using namespace mslkit;

namespace {

template<typename V>
std::vector<std::size_t> one_based(const V& v) {
    std::vector<std::size_t> out;
    for(auto x : v) out.push_back(static_cast<std::size_t>(x) + 1);
    return out;
}

SuffixIndex bananas() { return build_suffix_index(Text::from_terminated("mybananas$", TextMode::generic)); }

} // namespace

TEST(SuffixIndex, BananasGoldenArrays) {
    const auto idx = bananas();
    EXPECT_EQ(one_based(idx.sa()), (std::vector<std::size_t>{10, 4, 6, 8, 3, 1, 5, 7, 9, 2}));
    EXPECT_EQ(one_based(idx.inv()), (std::vector<std::size_t>{6, 10, 5, 2, 7, 3, 8, 4, 9, 1}));
    EXPECT_EQ(std::vector<std::uint32_t>(idx.lcp().begin(), idx.lcp().end()),
              (std::vector<std::uint32_t>{0, 3, 1, 0, 0, 0, 2, 0, 0}));
    std::vector<std::size_t> sp;
    for(auto v : idx.sp()) sp.push_back(v == SuffixIndex::npos ? 0 : v + 1);
    EXPECT_EQ(sp, (std::vector<std::size_t>{0, 7, 8, 9, 2, 10, 3, 4, 1, 5}));
}

TEST(SuffixIndex, SentinelOnly) {
    const auto idx = build_suffix_index(Text::from_terminated("$", TextMode::genomic));
    EXPECT_EQ(idx.sa(), (std::vector<std::uint32_t>{0}));
    EXPECT_TRUE(idx.lcp().empty());
    EXPECT_EQ(idx.sp(), (std::vector<std::uint32_t>{SuffixIndex::npos}));
}

TEST(SuffixIndex, RejectsBadSentinels) {
    EXPECT_THROW(Text::from_terminated("ACGT", TextMode::genomic), InputError);
    EXPECT_THROW(Text::from_terminated("AC$GT$", TextMode::genomic), InputError);
    EXPECT_THROW(Text::from_terminated("", TextMode::generic), InputError);
    EXPECT_THROW(Text::from_terminated("ab$c$", TextMode::generic), InputError);
    EXPECT_THROW(Text::generic(std::string("a\0b", 3)), InputError);
    EXPECT_THROW(Text::genomic("ACXT"), InputError);
}

TEST(SuffixIndex, GenomicKeepsAmbiguityCodesAsSymbols) {
    const auto idx = build_suffix_index(Text::genomic("ANNA"));
    EXPECT_EQ(occurrence_count(idx, "N"), 2u);
    EXPECT_EQ(occurrence_count(idx, "A"), 2u);
    EXPECT_EQ(occurrence_count(idx, "NA"), 1u);
}

TEST(SuffixIndex, IntervalLookupExamples) {
    const auto idx = bananas();
    // ranks for "a" are 2..4 one-based
    const auto a = find_pattern(idx, "a");
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, (RankRange{1, 3}));
    const auto an = sa_interval_lookup(idx, *a, 1, 'n');
    ASSERT_TRUE(an);
    EXPECT_EQ(*an, (RankRange{1, 2}));
    const auto ana = sa_interval_lookup(idx, *an, 2, 'a');
    ASSERT_TRUE(ana);
    EXPECT_EQ(*ana, (RankRange{1, 2}));
    EXPECT_FALSE(sa_interval_lookup(idx, idx.full_range(), 0, 'z'));
}

TEST(SuffixIndex, OccurrenceCountExamples) {
    const auto idx = bananas();
    EXPECT_EQ(occurrence_count(idx, "ana"), 2u);
    EXPECT_EQ(occurrence_count(idx, "mybananas"), 1u);
    const auto aaaa = build_suffix_index(Text::genomic("AAAA"));
    EXPECT_EQ(occurrence_count(aaaa, "AA"), 3u);
    EXPECT_EQ(occurrence_count(aaaa, "AAAAA"), 0u);
}

TEST(SuffixIndex, RandomTextsMatchNaiveConstruction) {
    std::mt19937_64 rng(20240611);
    for(int trial = 0; trial < 120; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 2000)(rng);
        const std::string alphabet = trial % 3 == 0 ? "AC" : (trial % 3 == 1 ? "ACGT" : "ACGTN");
        const auto body = oracle::random_string(rng, n, alphabet);
        const auto idx = build_suffix_index(Text::genomic(body));
        const std::string bytes(idx.text().bytes());
        const auto sa = oracle::suffix_array(bytes);
        ASSERT_EQ(idx.size(), bytes.size());
        for(std::size_t r = 0; r < sa.size(); ++r) ASSERT_EQ(idx.sa()[r], sa[r]) << "trial " << trial;
        for(std::size_t r = 0; r + 1 < sa.size(); ++r) {
            ASSERT_EQ(idx.lcp()[r], oracle::lcp(std::string_view(bytes).substr(sa[r]), std::string_view(bytes).substr(sa[r + 1])));
        }
        for(std::size_t r = 0; r < sa.size(); ++r) {
            ASSERT_EQ(idx.inv()[idx.sa()[r]], r);
            if(idx.sa()[r] + 1 < idx.size()) {
                ASSERT_EQ(idx.sp()[r], idx.inv()[idx.sa()[r] + 1]);
            } else {
                ASSERT_EQ(idx.sp()[r], SuffixIndex::npos);
                ASSERT_EQ(r, 0u); // the sentinel suffix is smallest
            }
        }
        // four arrays of at most n words each
        EXPECT_LE(idx.aux_words(), 4 * idx.size());
    }
}

TEST(SuffixIndex, GenericBytesMatchNaiveConstruction) {
    std::mt19937_64 rng(7);
    std::string alphabet;
    for(int c = 1; c < 256; c += 7) alphabet.push_back(static_cast<char>(c));
    for(int trial = 0; trial < 30; ++trial) {
        const auto body = oracle::random_string(rng, 500, alphabet);
        const auto idx = build_suffix_index(Text::generic(body));
        const auto sa = oracle::suffix_array(idx.text().bytes());
        for(std::size_t r = 0; r < sa.size(); ++r) ASSERT_EQ(idx.sa()[r], sa[r]);
    }
}

TEST(SuffixIndex, OccurrenceCountMatchesBruteForceOnAllSubstrings) {
    std::mt19937_64 rng(99);
    for(int trial = 0; trial < 20; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
        const auto s = oracle::random_string(rng, n, trial % 2 ? "AC" : "ACGT");
        const auto idx = build_suffix_index(Text::genomic(s));
        for(std::size_t i = 0; i < n; ++i) {
            for(std::size_t len = 1; i + len <= n; ++len) {
                const auto p = std::string_view(s).substr(i, len);
                ASSERT_EQ(occurrence_count(idx, p), oracle::count(s, p)) << s << " / " << p;
            }
        }
    }
    // n = 200: every substring starting at a sampled offset
    const auto s = oracle::random_string(rng, 200, "ACG");
    const auto idx = build_suffix_index(Text::genomic(s));
    for(std::size_t i = 0; i < 200; i += 7) {
        for(std::size_t len = 1; i + len <= 200; ++len) {
            const auto p = std::string_view(s).substr(i, len);
            ASSERT_EQ(occurrence_count(idx, p), oracle::count(s, p));
        }
    }
}

TEST(SuffixIndex, WideIndexAgreesWithNarrow) {
    std::mt19937_64 rng(3);
    const auto body = oracle::random_string(rng, 700);
    const auto narrow = build_suffix_index<std::uint32_t>(Text::genomic(body));
    const auto wide = build_suffix_index<std::uint64_t>(Text::genomic(body));
    for(std::size_t r = 0; r < narrow.size(); ++r) {
        ASSERT_EQ(narrow.sa()[r], wide.sa()[r]);
        ASSERT_EQ(narrow.inv()[r], wide.inv()[r]);
    }
    EXPECT_EQ(wide.sp()[0], SuffixIndex64::npos);
}
