#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "kmer_assignment.hpp"
#include "text.hpp"

namespace mslkit {

/// Uniform random sequence over ACGT.
inline std::string random_genome(std::size_t length, std::uint64_t seed) {
    static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::string g(length, 'A');
    for(auto& c : g) c = kBases[pick(rng)];
    return g;
}

/// Overwrites `copies` non-overlapping stretches of `genome` with one random
/// repeat unit of length `repeat_length`. Copy i is placed at a random offset
/// inside the i-th of `copies` equal slots. Returns the copy start positions.
inline std::vector<std::size_t> plant_repeat(std::string& genome, std::size_t repeat_length, std::size_t copies,
                                             std::uint64_t seed) {
    detail::require_input(copies >= 1, "need at least one repeat copy");
    const std::size_t slot = genome.size() / copies;
    detail::require_input(slot >= repeat_length, "genome too short for the requested repeat copies");
    const std::string unit = random_genome(repeat_length, seed ^ 0x9e3779b97f4a7c15ULL);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> starts;
    for(std::size_t i = 0; i < copies; ++i) {
        std::uniform_int_distribution<std::size_t> off(0, slot - repeat_length);
        const std::size_t at = i * slot + off(rng);
        genome.replace(at, repeat_length, unit);
        starts.push_back(at);
    }
    return starts;
}

struct SimulationConfig {
    std::size_t read_length = 100;
    double coverage = 30.0;
    std::uint64_t seed = 1;
};

/// Error-free reads with uniform start positions. Strands alternate
/// (even reads forward, odd reads reverse-complemented), and the read count
/// is round(coverage * |genome| / read_length), at least one.
inline std::vector<ReadRecord> simulate_reads(const std::string& genome, const SimulationConfig& config) {
    detail::require_input(config.read_length >= 1, "read length must be positive");
    detail::require_input(config.read_length <= genome.size(), "read length exceeds genome length");
    detail::require_input(config.coverage > 0.0, "coverage must be positive");
    const auto count = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
        config.coverage * static_cast<double>(genome.size()) / static_cast<double>(config.read_length))));
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<std::size_t> start(0, genome.size() - config.read_length);
    std::vector<ReadRecord> reads;
    reads.reserve(count);
    for(std::size_t i = 0; i < count; ++i) {
        const std::size_t p = start(rng);
        const bool reverse = (i % 2) == 1;
        std::string bases = genome.substr(p, config.read_length);
        if(reverse) bases = reverse_complement(bases);
        reads.push_back({"r" + std::to_string(i) + "_" + std::to_string(p + 1) + (reverse ? "_rev" : "_fwd"),
                         std::move(bases)});
    }
    return reads;
}

} // namespace mslkit
