#pragma once

#include "perfmix/mdsq.hpp"
#include "perfmix/space.hpp"

#include <string>
#include <utility>
#include <vector>

namespace perfmix {

// Ordered list of disjoint classes covering a target code. (q, m) declare
// the parameters every class certifies against: length q^m, RM order
// (q-1)m - 2. Class 1 contains the zero word; later classes follow the
// lexicographic order of their minimal representatives.
struct Partition {
    Code target;
    std::vector<Code> classes;
    int q = 0;
    int m = 0;

    int class_order() const { return (q - 1) * m - 2; }
};

struct PartitionCert {
    bool pass = false;
    std::string detail; // first violated clause
    bool disjoint = false;
    bool covers = false;
    bool target_mds = false;
    bool classes_rm_like = false;
};

// Splits the zero-sum code RM_q((q-1)m-1, m) into the q^m cosets of
// RM_q((q-1)m-2, m), zero-containing coset first.
Partition coset_partition_rm(int q, int m);

// Disjointness, covering, distance-2 MDS target, and per-class RM-likeness,
// each failure reported in the certificate rather than thrown.
PartitionCert validate_partition(const Partition& p);

// The q parity translates {x : p(x) = c} of F_q^n, zero-sum class first.
std::vector<Code> space_partition_mds(int q, int n);

// m = 1 correspondence: the target's quasigroup (last symbol as a function
// of the rest) paired with the class index as a second hypercube. The two
// are orthogonal exactly when p is a valid partition.
std::pair<Quasigroup, Quasigroup> partition_to_graeco_latin(const Partition& p);

// Inverse of partition_to_graeco_latin.
Partition graeco_latin_to_partition(const Quasigroup& h1, const Quasigroup& h2);

} // namespace perfmix
