#pragma once

#include "perfmix/construct.hpp"
#include "perfmix/equiv.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace perfmix {

// Equivalence-invariant summary: coordinate permutations within equal
// alphabet orders and per-coordinate symbol relabelings preserve all three
// fields, so codes with different fingerprints are never equivalent.
struct CodeFingerprint {
    std::uint64_t size = 0;
    std::vector<std::uint64_t> distance_distribution;
    std::vector<std::vector<std::uint64_t>> coordinate_spectra;

    bool operator==(const CodeFingerprint&) const = default;
    bool operator<(const CodeFingerprint& o) const;
};

CodeFingerprint fingerprint(const Code& c);

struct CensusReport {
    int q = 0, m1 = 0, m2 = 0;
    std::uint64_t assignments_tried = 0;
    std::uint64_t distinct_code_count = 0;
    std::uint64_t nonequivalent_lower_bound = 0;
    std::uint64_t undecided_pairs = 0;
    std::vector<CodeFingerprint> fingerprints; // one per distinct code, sorted
};

// One product code per assignment of library quasigroups to driver-codeword
// slots. Assignments are sampled as library indices from a seeded mt19937_64,
// so identical (q, m1, m2, limit, seed) yield identical reports. Distinct
// assignments provably yield distinct word sets (block classes are disjoint,
// so the per-slot table is recoverable from the code); the run asserts this.
CensusReport census_distinct(int q, int m1, int m2, std::uint64_t limit,
                             std::uint64_t seed);

// Same construction with the assignments spelled out (library indices, one
// row per assignment, one column per driver codeword).
CensusReport census_distinct_assignments(
    int q, int m1, int m2,
    const std::vector<std::vector<std::size_t>>& assignments);

// Proven lower bound on the number of equivalence classes among the input
// codes: fingerprint classes split first, then are_equivalent runs within
// each class under the node budget. A code undecided against an already
// counted representative is never counted; the pair lands in
// undecided_pairs instead.
CensusReport census_nonequivalent(const std::vector<Code>& codes,
                                  std::uint64_t budget = 200000);

// The symmetry group of F_n x F_q^n (first-coordinate relabelings times
// q-ary coordinate permutations times per-coordinate symbol permutations)
// has order n!·n!·(q!)^n with n = q^m. Checks, in exact integer arithmetic,
// that this stays below q^{2m(q^m+1)} · q^{(q+1)q^m}, the comparison point
// used when code families are counted against equivalence-class sizes.
struct SymmetryBound {
    bool pass = false;
    std::string lhs, rhs; // decimal
};
SymmetryBound symmetry_bound_check(int q, int m);

} // namespace perfmix
