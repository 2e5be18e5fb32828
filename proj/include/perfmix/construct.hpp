#pragma once

#include "perfmix/linalg.hpp"
#include "perfmix/mdsq.hpp"
#include "perfmix/partition.hpp"
#include "perfmix/space.hpp"

#include <cstddef>
#include <vector>

namespace perfmix {

// Subspaces of F_q^m that pairwise intersect only in 0 and jointly cover
// the space. Each subgroup is listed by a basis in reduced echelon form;
// the element with coefficient vector (c_1..c_d) over that basis gets the
// alphabet index c_1 + c_2 q + ... + c_d q^{d-1}. This labeling is additive:
// both sides add base-p digitwise, so the label map is a group isomorphism
// onto the index arithmetic of F_{q^d}.
struct SubgroupPartition {
    int q = 2; // order of the base field
    int m = 0; // ambient dimension
    std::vector<Matrix> subgroups;
};

// Marks every subgroup element over the ambient space (gated at 2^14);
// rejects non-echelon bases, double coverage, and gaps.
void validate_subgroup_partition(const SubgroupPartition& sp);

// One alpha-dimensional subspace W = <e_1..e_alpha> plus every line not
// inside W, W first, lines in lexicographic order of monic representatives.
SubgroupPartition hs_subgroup_partition(int q, int m, int alpha);

// The zero-sum code over the subgroup labels:
// {(g_1..g_n) : g_i in G_i, sum g_i = 0 in G}. Additive and 1-perfect.
Code herzog_schonheim(const SubgroupPartition& sp);

// Hamming code over F_q with s check symbols, length (q^s - 1)/(q - 1).
// Parity-check columns are the monic projective points in lex order.
Code hamming_code(int q, int s);

// The q^s cosets of hamming_code(q, s): zero coset first, then first-seen
// order over the lexicographic scan of the space.
std::vector<Code> hamming_coset_partition(int q, int s);

// Substitution: deletes the order-t coordinate `position` and appends, for
// each removed symbol value i, the words of partition class i. Position
// npos (the default) means the last coordinate. Output coordinate order:
// (cp minus position | partition space).
Code heden_substitute(const Code& cp, const std::vector<Code>& partition,
                      std::size_t position = std::size_t(-1));

// {(u|v) : u in cp.classes[i], v in cpp[pi[i]]} where cp partitions the
// even words of F_2^{2^m} into extended 1-perfect codes and cpp partitions
// F_2^{2^m - 1} into 1-perfect codes. Empty pi means identity.
Code doubling(const Partition& cp, const std::vector<Code>& cpp,
              const std::vector<std::size_t>& pi = {});

// {(omega_i | v) : v in class i}: prepends the class label as a symbol of
// F_n, n = q^m. 1-perfect in F_n x F_q^n for m >= 2; q-ary of length q+1
// for m = 1, q >= 3.
Code theorem4_construct(const Partition& p);

// Converse: splits a 1-perfect code in F_n x F_q^n by its first symbol.
// The resulting partition always validates (that is the converse theorem).
Partition theorem4_extract(const Code& c);

// {(u|v) : u in class i of p, v in hp[pi[i]]} over F_q^{n + (n-1)/(q-1)}.
Code theorem5_concatenate(const Partition& p, const std::vector<Code>& hp,
                          const std::vector<std::size_t>& pi = {});

// {(u_1|..|u_t) : v in b, u_i in a_list[v_i]} for a partition a_list of
// F_q^{q^{m1}} into q distance-2 MDS codes; output is distance-2 MDS of
// length q^{m1+m2}.
Code prop1_product(const std::vector<Code>& a_list, const Code& b);

// Quasigroup assignment for the quasigroup-indexed product: qv[i] drives
// the i-th word of the (sorted) driver code.
struct ProductSpec {
    int m1 = 0;
    int m2 = 0;
    std::vector<Quasigroup> qv;
};

// Coset partitions of the q parity classes of F_q^{q^m1}: partition k is
// coset_partition_rm(q, m1) translated by the word (0..0, k).
std::vector<Partition> default_a_partitions(int q, int m1);

// Quasigroup-indexed product: blocks u_i from class j_i of A^{v_i} where
// j_1 = q_v(j_2, ..., j_{q^{m2}}) and the other j_i range freely. RM-like
// of length q^{m1+m2} and order (q-1)(m1+m2) - 2.
Code theorem6_product(const std::vector<Partition>& a_partitions, const Code& b,
                      const ProductSpec& ps);

// The q^{m1+m2} sibling classes obtained by ranging over bp's classes and
// all cyclic offsets of j_1; together they partition
// prop1_product(targets of a_partitions, bp.target). ps.qv is indexed by
// bp.target's word order.
Partition theorem6_family(const std::vector<Partition>& a_partitions,
                          const Partition& bp, const ProductSpec& ps);

} // namespace perfmix
