#pragma once

#include "perfmix/linalg.hpp"
#include "perfmix/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace perfmix {

// Evaluation code of m-variate polynomials of total degree <= r over GF(q),
// per-variable exponents capped at q-1, evaluated at all q^m points of the
// affine space in lexicographic point order (first variable most
// significant). Monomials are enumerated in graded lexicographic order, so
// the generator rows of order r are a prefix of those of order r+1.
struct GrmCode {
    int q = 2, m = 1, r = 0;
    Matrix gen;                              // k x q^m evaluation matrix
    std::vector<std::vector<int>> monomials; // exponent tuples, one per row
};

// Number of reduced monomials of degree <= r: the dimension formula.
std::int64_t grm_dimension(int q, int m, int r);

// (q-b) * q^(m-a-1) where r = (q-1)a + b, 0 <= b < q-1.
std::int64_t grm_min_distance(int q, int m, int r);

GrmCode grm_generate(int q, int m, int r);

// Full codeword expansion; q^k words, gated.
Code grm_expand(const GrmCode& gc, std::uint64_t gate = std::uint64_t(1) << 22);

// Explicit codeword of weight grm_min_distance(q,m,r): the evaluation of
// prod_i (1 - X_i^(q-1)) for i <= a times prod_j (X_{a+1} - c_j) over b
// distinct constants c_j.
std::vector<Symbol> grm_min_weight_word(const GrmCode& gc);

// Parameter check without linearity: |C| = q^k and min distance d for the
// (q,m,r) formulas. Distances measured by full pairwise scan.
bool is_rm_like(const Code& c, int q, int m, int r);

// Basis of the dual code (right null space of the generator).
Matrix grm_dual_basis(const GrmCode& gc);

// ---- exact minimum-distance measurement ----------------------------------

struct DistanceMeasurement {
    bool measured = false;
    int d = -1;
    std::string route; // "enumeration", "dual-macwilliams", "column-test", or
                       // the reason the code is out of reach
};

struct MeasureLimits {
    std::uint64_t stream_gate = std::uint64_t(1) << 25; // max enumerated words
    double probe_gate = 3.2e8; // column-test probe combinations
    double store_gate = 3.2e7; // column-test stored combinations
};

// Minimum nonzero weight over all q^k codewords, by streamed enumeration.
int min_weight_stream(const Matrix& gen, std::uint64_t gate);

// Weight distribution (counts indexed by weight) by streamed enumeration.
std::vector<std::uint64_t> weight_distribution_stream(const Matrix& gen,
                                                      std::uint64_t gate);

// Weight distribution of the dual transform: given the distribution of C
// and |C|, returns the exact integer distribution of the dual code.
// Both directions of MacWilliams use this one function.
std::vector<std::uint64_t> macwilliams_transform(const std::vector<std::uint64_t>& dist,
                                                 int n, int q);

// True iff no d-1 or fewer columns of the parity-check matrix are linearly
// dependent, i.e. the code generated by `gen` has minimum distance >= d.
// Meet-in-the-middle over column combinations; refuses (CodimensionTooLarge)
// when the combination counts exceed the limits. On a negative answer,
// *light_word (if given) receives a codeword of weight < d.
bool no_light_dependency(const Matrix& gen, int d, const MeasureLimits& lim,
                         std::vector<Symbol>* light_word = nullptr);

// Certifies min distance == d: no lighter dependency plus an explicit
// weight-d codeword (membership checked against the row space).
bool low_weight_check(const Matrix& gen, int d, const std::vector<Symbol>& witness,
                      const MeasureLimits& lim = {});

// Tries, in order: streamed enumeration, dual enumeration + MacWilliams,
// column test against the formula value. Returns an unmeasured result with
// the blocking reason when every route is out of budget.
DistanceMeasurement measure_grm_distance(const GrmCode& gc,
                                         const MeasureLimits& lim = {});

} // namespace perfmix
