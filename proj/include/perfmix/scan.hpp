#pragma once

#include "perfmix/space.hpp"

#include <cstdint>
#include <vector>

namespace perfmix {

// Exhaustive scan kernels. Each hot loop exists twice: a serial reference
// implementation and an OpenMP variant. Both must return identical results
// for identical inputs regardless of thread count; the tests check that and
// tools/bench compares their wall times.

// Codewords packed into 64-bit limbs, one byte per symbol, zero padded.
struct PackedCode {
    std::size_t nwords = 0;
    std::size_t limbs = 0;
    std::vector<std::uint64_t> data;

    const std::uint64_t* row(std::size_t i) const { return data.data() + i * limbs; }
};

PackedCode pack_words(const std::vector<Word>& words);

// Exact minimum pairwise distance, provided no pair lies strictly below
// `floor`. Any pair at distance <= floor short-circuits the scan, so with
// floor = 0 the result is the unconditional exact minimum. Callers pass a
// floor only when it is already certified (e.g. by sphere disjointness).
int min_distance_scan_serial(const PackedCode& pc, int floor = 0);
int min_distance_scan_omp(const PackedCode& pc, int floor = 0);

// Reference covering radius straight from the definition: for every word of
// the space, distance to the nearest codeword. O(|V| * |C| * n).
int covering_radius_naive(const MixedSpace& sp, const std::vector<Word>& words,
                          std::uint64_t gate);

// Multi-source BFS over the Hamming graph, O(|V| * sum(q_i - 1)) per level.
// The parallel variant relaxes levels with a race-free pull scheme.
int covering_radius_bfs_serial(const MixedSpace& sp, const std::vector<Word>& words,
                               std::uint64_t gate);
int covering_radius_bfs_omp(const MixedSpace& sp, const std::vector<Word>& words,
                            std::uint64_t gate);

// True if radius-r balls around the given words are pairwise disjoint
// (mark-off over a |V| bitmap, aborts on first collision).
bool spheres_disjoint(const MixedSpace& sp, const std::vector<Word>& words, int r,
                      std::uint64_t gate);

// Number of nonzero symbols in a packed row.
int packed_weight(const std::uint64_t* row, std::size_t limbs);
int packed_distance(const std::uint64_t* a, const std::uint64_t* b, std::size_t limbs);

} // namespace perfmix
