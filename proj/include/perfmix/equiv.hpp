#pragma once

#include "perfmix/space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace perfmix {

enum class EquivVerdict { equivalent, nonequivalent, unknown };

// sigma[i] = j: source coordinate i lands on target position j (orders must
// match). pi[i] is the symbol bijection applied to coordinate i before the
// move, so the mapped word is y[sigma[i]] = pi[i][x[i]].
struct EquivWitness {
    std::vector<std::size_t> sigma;
    std::vector<std::vector<Symbol>> pi;
};

struct EquivResult {
    EquivVerdict verdict = EquivVerdict::unknown;
    std::string detail;
    EquivWitness witness; // populated on `equivalent`
    std::uint64_t nodes = 0;
};

// Decides equivalence of two codes over the same space under coordinate
// permutations restricted to equal-order coordinates composed with
// per-coordinate alphabet permutations. Cheap invariants (size, distance
// distribution, symbol-frequency spectra) reject first; otherwise a
// backtracking search with multiset pruning runs until `budget` nodes.
EquivResult are_equivalent(const Code& a, const Code& b,
                           std::uint64_t budget = 200000);

// Applies a witness to a code; used for verification and in tests.
Code apply_witness(const Code& c, const EquivWitness& w);

// Pairwise distance histogram, index = distance.
std::vector<std::uint64_t> distance_distribution(const Code& c);

// Per-coordinate symbol frequency spectra, each sorted ascending.
std::vector<std::vector<std::uint64_t>> coordinate_spectra(const Code& c);

} // namespace perfmix
