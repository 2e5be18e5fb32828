#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfmix/construct.hpp"
#include "perfmix/error.hpp"
#include "perfmix/grm.hpp"
#include "perfmix/mdsq.hpp"
#include "perfmix/partition.hpp"
#include "perfmix/space.hpp"

#include <algorithm>
#include <set>

using namespace perfmix;

namespace {

Matrix rows(int q, int m, std::vector<std::vector<int>> rs) {
    Matrix a(q, rs.size(), m);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (int j = 0; j < m; ++j) a.at(i, j) = Symbol(rs[i][j]);
    return a;
}

// coordinate-wise group addition using each coordinate's own field table
bool is_additive(const Code& c) {
    const MixedSpace& sp = c.space();
    for (const Word& a : c.words())
        for (const Word& b : c.words()) {
            Word s(sp.n());
            for (std::size_t i = 0; i < sp.n(); ++i)
                s[i] = field(sp.order(i)).add(a[i], b[i]);
            if (!c.contains(s)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("subgroup partitions: structure checks and failures") {
    SubgroupPartition sp = hs_subgroup_partition(2, 3, 2);
    CHECK(sp.subgroups.size() == 5); // 1 + (8 - 4) / 1
    CHECK(sp.subgroups[0].rows == 2);
    validate_subgroup_partition(sp); // throws on failure

    CHECK(hs_subgroup_partition(3, 3, 2).subgroups.size() == 10); // 1 + 18/2
    CHECK_THROWS_AS(hs_subgroup_partition(2, 2, 2), Error); // m > alpha needed

    SubgroupPartition overlap;
    overlap.q = 2;
    overlap.m = 2;
    overlap.subgroups.push_back(rows(2, 2, {{1, 0}}));
    overlap.subgroups.push_back(rows(2, 2, {{1, 0}}));
    CHECK_THROWS_AS(validate_subgroup_partition(overlap), Error);

    SubgroupPartition gap;
    gap.q = 2;
    gap.m = 2;
    gap.subgroups.push_back(rows(2, 2, {{1, 0}}));
    gap.subgroups.push_back(rows(2, 2, {{0, 1}}));
    CHECK_THROWS_AS(validate_subgroup_partition(gap), Error); // misses (1,1)
}

TEST_CASE("zero-sum code over subgroup labels is additive and 1-perfect") {
    Code c = herzog_schonheim(hs_subgroup_partition(2, 3, 2));
    CHECK(c.space().orders() == std::vector<int>{4, 2, 2, 2, 2});
    CHECK(c.size() == 8);
    CHECK(c.contains_zero());
    CHECK(is_additive(c));
    PerfectCert pc = is_perfect(c, 1);
    CHECK(pc.pass);
    CHECK(pc.sphere_identity);

    // one symbol transposition on a binary coordinate keeps 1-perfection
    // but destroys additivity
    Code twisted = relabel(c, 1, {1, 0});
    CHECK(is_perfect(twisted, 1).pass);
    CHECK_FALSE(is_additive(twisted));
}

TEST_CASE("larger label spaces stay 1-perfect") {
    // q=2, m=4, alpha=2: F_4 x F_2^12, |V| = 16384
    Code c = herzog_schonheim(hs_subgroup_partition(2, 4, 2));
    CHECK(c.space().n() == 13);
    CHECK(is_perfect(c, 1).pass);
    CHECK(is_additive(c));
}

TEST_CASE("hamming codes with their coset partitions") {
    Code h23 = hamming_code(2, 3);
    CHECK(h23.space().orders() == std::vector<int>(7, 2));
    CHECK(h23.size() == 16);
    CHECK(minimum_distance(h23) == 3);
    CHECK(is_perfect(h23, 1).pass);

    Code h42 = hamming_code(4, 2);
    CHECK(h42.space().n() == 5);
    CHECK(h42.size() == 64);
    CHECK(minimum_distance(h42) == 3);
    CHECK(is_perfect(h42, 1).pass);

    std::vector<Code> cosets = hamming_coset_partition(2, 2);
    REQUIRE(cosets.size() == 4);
    CHECK(cosets[0].words() == hamming_code(2, 2).words());
    std::set<Word> seen;
    for (const Code& c : cosets) {
        CHECK(is_perfect(c, 1).pass);
        for (const Word& x : c.words()) CHECK(seen.insert(x).second);
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("substitution step: one F_4 coordinate becomes three binary ones") {
    Code base = hamming_code(4, 2);                    // [5, 3]_4
    std::vector<Code> part = hamming_coset_partition(2, 2); // F_2^3 into 4 codes
    Code c = heden_substitute(base, part);
    CHECK(c.space().orders() == std::vector<int>{4, 4, 4, 4, 2, 2, 2});
    CHECK(c.size() == base.size() * part[0].size());
    CHECK(is_perfect(c, 1).pass);

    // substituting at an explicit position works the same
    Code c0 = heden_substitute(base, part, 0);
    CHECK(c0.space().orders() == std::vector<int>{4, 4, 4, 4, 2, 2, 2});
    CHECK(is_perfect(c0, 1).pass);

    // ball-size mismatch is refused: F_2^3 partition cannot replace F_2
    CHECK_THROWS_AS(heden_substitute(hamming_code(2, 3), part), Error);
}

TEST_CASE("doubling produces the next binary perfect length") {
    Code c = doubling(coset_partition_rm(2, 2), hamming_coset_partition(2, 2));
    CHECK(c.space().orders() == std::vector<int>(7, 2));
    CHECK(c.size() == 16);
    CHECK(is_perfect(c, 1).pass);

    // a class permutation changes the word set, not 1-perfection
    Code moved = doubling(coset_partition_rm(2, 2),
                          hamming_coset_partition(2, 2), {1, 0, 3, 2});
    CHECK(is_perfect(moved, 1).pass);
    CHECK(moved.words() != c.words());

    CHECK_THROWS_AS(doubling(coset_partition_rm(3, 1),
                             hamming_coset_partition(2, 2), {}),
                    Error);
}

TEST_CASE("class-label prefix construction and its converse") {
    struct P { int q, m; };
    for (P t : {P{2, 2}, P{3, 1}, P{4, 1}}) {
        CAPTURE(t.q);
        CAPTURE(t.m);
        Partition p = coset_partition_rm(t.q, t.m);
        Code c = theorem4_construct(p);
        std::uint64_t n = p.classes.size();
        CHECK(c.space().order(0) == int(n));
        CHECK(c.space().n() == n + 1);
        CHECK(c.size() == p.target.size());
        PerfectCert pc = is_perfect(c, 1);
        CHECK(pc.pass);
        CHECK(pc.sphere_identity);

        Partition back = theorem4_extract(c);
        CHECK(back.q == p.q);
        CHECK(back.m == p.m);
        CHECK(back.target.words() == p.target.words());
        REQUIRE(back.classes.size() == p.classes.size());
        for (std::size_t i = 0; i < p.classes.size(); ++i)
            CHECK(back.classes[i].words() == p.classes[i].words());
    }
    CHECK_THROWS_AS(theorem4_extract(hamming_code(2, 3)), Error); // shape
}

TEST_CASE("extraction validates arbitrary 1-perfect inputs") {
    // the mixed Hamming-like code from subgroup labels has the right shape:
    // F_4 x F_2^4 with 4 = 2^2
    Code hs = herzog_schonheim(hs_subgroup_partition(2, 3, 2));
    Partition p = theorem4_extract(hs);
    CHECK(p.q == 2);
    CHECK(p.m == 2);
    CHECK(validate_partition(p).pass);
    // round trip back to a code equals the original up to nothing at all:
    // construct uses class index = first symbol, which extract preserved
    Code again = theorem4_construct(p);
    CHECK(again.words() == hs.words());
}

TEST_CASE("concatenation with Hamming cosets") {
    Code c = theorem5_concatenate(coset_partition_rm(2, 2),
                                  hamming_coset_partition(2, 2), {});
    CHECK(c.space().orders() == std::vector<int>(7, 2));
    CHECK(is_perfect(c, 1).pass);

    Code moved = theorem5_concatenate(coset_partition_rm(2, 2),
                                      hamming_coset_partition(2, 2),
                                      {0, 1, 3, 2});
    CHECK(is_perfect(moved, 1).pass);
    CHECK(moved.words() != c.words());

    // ingredient shapes must agree: these cosets live in F_2^7, not F_2^3
    CHECK_THROWS_AS(theorem5_concatenate(coset_partition_rm(2, 2),
                                         hamming_coset_partition(2, 3), {}),
                    Error);
    // m = 1 is excluded: (n-1)/(q-1) = 1 gives no room for a Hamming code
    CHECK_THROWS_AS(theorem5_concatenate(coset_partition_rm(3, 1),
                                         hamming_coset_partition(3, 1), {}),
                    Error);
}

TEST_CASE("block product of MDS partitions is MDS") {
    Code c = prop1_product(space_partition_mds(2, 2), linear_mds2(2, 2));
    CHECK(c.space().n() == 4);
    Mds2Cert cert = is_mds2(c);
    CHECK(cert.pass);
    // the product of zero-sum ingredients is again parity-structured:
    // here it equals the even-weight code
    CHECK(c.words() == linear_mds2(2, 4).words());

    Code c3 = prop1_product(space_partition_mds(3, 3), linear_mds2(3, 2));
    CHECK(c3.space().n() == 6);
    CHECK(is_mds2(c3).pass);

    CHECK_THROWS_AS(
        prop1_product({linear_mds2(2, 2), linear_mds2(2, 2)}, linear_mds2(2, 2)),
        Error); // overlapping classes do not tile
}

TEST_CASE("quasigroup-indexed product at (3,1,1)") {
    std::vector<Partition> aps = default_a_partitions(3, 1);
    REQUIRE(aps.size() == 3);
    Code b = grm_expand(grm_generate(3, 1, 0)); // {000, 111, 222}
    REQUIRE(b.size() == 3);

    ProductSpec ps;
    ps.m1 = ps.m2 = 1;
    std::vector<Quasigroup> lib = quasigroup_library(3, 2);
    ps.qv = {lib[0], lib[0], lib[0]};
    Code c = theorem6_product(aps, b, ps);
    CHECK(c.space().n() == 9);
    CHECK(c.size() == 729); // 3^{9-2-1}
    CHECK(is_rm_like(c, 3, 2, 2));

    // changing one slot changes the word set
    ProductSpec ps2 = ps;
    ps2.qv[1] = lib[5];
    Code c2 = theorem6_product(aps, b, ps2);
    CHECK(c2.size() == c.size());
    CHECK(c2.words() != c.words());
    CHECK(is_rm_like(c2, 3, 2, 2));
}

TEST_CASE("quasigroup-indexed product at (2,2,2), cyclic cube in one slot") {
    std::vector<Partition> aps = default_a_partitions(2, 2);
    Code b = grm_expand(grm_generate(2, 2, 0)); // {0000, 1111}
    REQUIRE(b.size() == 2);

    ProductSpec ps;
    ps.m1 = ps.m2 = 2;
    Quasigroup affine = quasigroup_library(4, 3)[0];
    ps.qv = {affine, affine};
    Code c = theorem6_product(aps, b, ps);
    CHECK(c.size() == 2048); // 2^{16-4-1}
    CHECK(is_rm_like(c, 2, 4, 2));

    ProductSpec ps2 = ps;
    ps2.qv[0] = qg_cyclic(4, 3); // not isotopic to the affine square's cube
    Code c2 = theorem6_product(aps, b, ps2);
    CHECK(c2.size() == 2048);
    CHECK(is_rm_like(c2, 2, 4, 2));
    CHECK(c2.words() != c.words());
}

TEST_CASE("sibling family partitions a distance-2 MDS target") {
    std::vector<Partition> aps = default_a_partitions(3, 1);
    Partition bp = coset_partition_rm(3, 1);
    ProductSpec ps;
    ps.m1 = ps.m2 = 1;
    ps.qv.assign(bp.target.size(), quasigroup_library(3, 2)[0]);

    Partition fam = theorem6_family(aps, bp, ps);
    CHECK(fam.q == 3);
    CHECK(fam.m == 2);
    REQUIRE(fam.classes.size() == 9);
    PartitionCert cert = validate_partition(fam);
    CHECK(cert.pass);
    // every sibling has the size of the quasigroup-indexed product
    for (const Code& c : fam.classes) CHECK(c.size() == 729);
}

TEST_CASE("default ingredient partitions tile the block space") {
    for (int q : {2, 3}) {
        std::vector<Partition> aps = default_a_partitions(q, 1 + (q == 2));
        REQUIRE(int(aps.size()) == q);
        std::set<Word> seen;
        for (const Partition& ap : aps) {
            CHECK(validate_partition(ap).pass);
            for (const Word& x : ap.target.words())
                CHECK(seen.insert(x).second);
        }
        CHECK(seen.size() == aps[0].target.space().size());
    }
}
