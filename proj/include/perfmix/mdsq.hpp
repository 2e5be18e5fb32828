#pragma once

#include "perfmix/space.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace perfmix {

// n-ary quasigroup of order k: an operation on {1..k} uniquely invertible
// in each argument. The dense table is the multiplication hypercube in
// lexicographic argument order, first argument most significant. Symbols
// are 1-based here; codes use 0-based field indices, and the only place the
// two conventions meet is code_from_quasigroup / quasigroup_from_code,
// which shift by exactly one.
struct Quasigroup {
    int order = 0;
    int arity = 0;
    std::vector<Symbol> table; // order^arity values in {1..order}

    std::size_t cells() const { return table.size(); }
    // args are 1-based symbols, one per argument
    Symbol value(const std::vector<Symbol>& args) const;
};

// k^n with the 2^20 cell gate (TooLarge beyond it).
std::size_t qg_cells(int order, int arity);

// Validates shape and symbol range; Latinness is checked by the consumers
// that require it.
Quasigroup qg_from_table(int order, int arity, std::vector<Symbol> table);

// Every axis-aligned line of the table is a permutation of {1..k}.
// The OpenMP variant splits on the leading argument; results agree.
bool is_latin(const Quasigroup& g);
bool is_latin_serial(const Quasigroup& g);

// c + sum lambda_i x_i over GF(k) on 0-based indices, shifted to symbols.
// Every lambda_i must be nonzero.
Quasigroup qg_affine(int order, int arity, Symbol c, const std::vector<Symbol>& lambda);

// (x_1 + ... + x_n + c) mod k on 0-based indices. For (k, arity) = (4, 2)
// this is the cyclic square, which is not isotopic to qg_affine's square.
Quasigroup qg_cyclic(int order, int arity, int c = 0);

// g'(x_1..x_n) = symperm(g(argperm_1(x_1), ..., argperm_n(x_n))).
// Permutations are 1-based tables of length k.
Quasigroup qg_isotope(const Quasigroup& g, const std::vector<std::vector<Symbol>>& argperm,
                      const std::vector<Symbol>& symperm);

// Exhaustive (k!)^3 isotopy decision for binary quasigroups, k <= 5.
bool qg_isotopic2(const Quasigroup& a, const Quasigroup& b);

// True iff superimposing the two hypercubes and fixing all but any two
// arguments yields every ordered symbol pair exactly once (the pair forms
// a Graeco-Latin hypercube).
bool orthogonal_pair_check(const Quasigroup& h1, const Quasigroup& h2);

// Deterministic generators: all affine quasigroups over GF(k) for prime
// power k (over Z_k otherwise), plus the cyclic square at (4, 2). For
// order 3, arity 2 this is exactly the 12 Latin squares.
std::vector<Quasigroup> quasigroup_library(int order, int arity);

// All quasigroups of the given shape by line-pruned DFS over table cells.
// Intended for the small orders where uniqueness questions are decidable
// by brute force.
std::vector<Quasigroup> enumerate_quasigroups(int order, int arity,
                                              std::uint64_t cell_gate = std::uint64_t(1)
                                                                        << 16);

struct Mds2Cert {
    bool pass = false;
    std::string detail; // violated clause when !pass
    int n = 0;
    int d = -1;                // measured minimum distance (-1 if |C| < 2)
    std::uint64_t size = 0;    // |C|
    std::uint64_t expect = 0;  // q^{n-1}
};

// Distance-2 MDS: |C| = q^{n-1} and minimum distance exactly 2. Checked by
// full pairwise scan and, independently, by the coordinate-deletion
// bijection characterization; the two routes must agree.
Mds2Cert is_mds2(const Code& c);

// The graph {(x, g(x))} of an (n-1)-ary quasigroup as a code of length n.
Code code_from_quasigroup(const Quasigroup& g);

// Inverse of code_from_quasigroup (round-trip identity on MDS codes).
Quasigroup quasigroup_from_code(const Code& c);

// The zero-sum code {x in F_q^n : p(x) = 0}.
Code linear_mds2(int q, int n);

} // namespace perfmix
