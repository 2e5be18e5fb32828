// Acceptance gate: one timed pass/fail line per criterion, exit 0 iff all
// criteria pass. Every expected value here is either arithmetic done in the
// comments, an independently verified table, or a published example.
#include "perfmix/census.hpp"
#include "perfmix/construct.hpp"
#include "perfmix/equiv.hpp"
#include "perfmix/error.hpp"
#include "perfmix/gf.hpp"
#include "perfmix/grm.hpp"
#include "perfmix/io.hpp"
#include "perfmix/linalg.hpp"
#include "perfmix/mdsq.hpp"
#include "perfmix/partition.hpp"
#include "perfmix/space.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace perfmix;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void demand(bool ok, const std::string& msg) {
    if (!ok) throw Error("Acceptance", msg);
}

// codes produced along the way, re-examined by the radius identity criterion
std::vector<std::pair<std::string, Code>> g_built;

void built(std::string name, const Code& c) {
    g_built.emplace_back(std::move(name), c);
}

// ---- 1: generalized Reed-Muller parameter table ---------------------------

// rows whose exact distance no implemented route reaches at default gates:
// primal and dual enumerations both exceed 2^25 words and the column test
// exceeds its combination budgets
const std::vector<std::tuple<int, int, int>> kRefusedRows = {
    {4, 3, 3}, {4, 3, 4}, {7, 2, 3}, {7, 2, 4}, {7, 2, 5},
    {8, 2, 3}, {8, 2, 4}, {8, 2, 5}, {8, 2, 6},
};

Outcome criterion_grm_table() {
    int rows = 0, measured = 0;
    std::vector<std::tuple<int, int, int>> refused;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        for (int m = 1;; ++m) {
            std::uint64_t n = 1;
            for (int i = 0; i < m; ++i) n *= std::uint64_t(q);
            if (n > 64) break;
            for (int r = 0; r <= (q - 1) * m; ++r) {
                ++rows;
                GrmCode gc = grm_generate(q, m, r);
                std::ostringstream tag;
                tag << "(" << q << "," << m << "," << r << ")";
                demand(std::int64_t(rank(gc.gen)) == grm_dimension(q, m, r),
                       "rank != dimension formula at " + tag.str());

                // explicit witness: a codeword of exactly the formula weight
                std::vector<Symbol> w = grm_min_weight_word(gc);
                demand(weight(w) == grm_min_distance(q, m, r),
                       "witness weight off at " + tag.str());
                demand(in_row_space(gc.gen, w),
                       "witness not in the code at " + tag.str());

                DistanceMeasurement dm = measure_grm_distance(gc);
                if (!dm.measured) {
                    refused.emplace_back(q, m, r);
                    continue;
                }
                ++measured;
                demand(dm.d == grm_min_distance(q, m, r),
                       "measured distance != formula at " + tag.str() +
                           " via " + dm.route);
            }
        }
    }
    demand(rows == 129, "row count drifted");
    demand(refused == kRefusedRows,
           "the set of gate-refused rows changed; measure or re-freeze");
    std::ostringstream d;
    d << "ranks " << rows << "/" << rows << " exact; distances " << measured
      << "/" << rows << " measured exact; " << refused.size()
      << " rows refused by every exact route at default gates "
         "(witness words of formula weight verified instead)";
    return {true, d.str()};
}

// ---- 2: the published F4 x F2^4 example -----------------------------------

Matrix basis_rows(int q, int m, const std::vector<std::vector<int>>& rs) {
    Matrix a(q, rs.size(), m);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (int j = 0; j < m; ++j) a.at(i, j) = Symbol(rs[i][j]);
    return a;
}

std::set<std::vector<Word>> subgroup_sets(const SubgroupPartition& sp) {
    MixedSpace amb = MixedSpace::uniform(sp.q, sp.m);
    std::set<std::vector<Word>> sets;
    for (const Matrix& b : sp.subgroups) {
        std::vector<Word> elems;
        std::vector<int> c(b.rows, 0);
        for (;;) {
            Word v(sp.m, 0);
            for (std::size_t i = 0; i < b.rows; ++i)
                for (int j = 0; j < sp.m; ++j)
                    v[j] = field(sp.q).add(
                        v[j], field(sp.q).mul(Symbol(c[i]), b.at(i, j)));
            elems.push_back(std::move(v));
            std::size_t i = 0;
            while (i < c.size() && ++c[i] == sp.q) c[i++] = 0;
            if (i == c.size()) break;
        }
        std::sort(elems.begin(), elems.end());
        sets.insert(std::move(elems));
    }
    return sets;
}

Outcome criterion_published_example() {
    // the example's partition of F_2^3, in its printed order: the plane
    // spanned by 100 and 010, then the lines 101, 011, 111, 001
    SubgroupPartition printed;
    printed.q = 2;
    printed.m = 3;
    printed.subgroups.push_back(basis_rows(2, 3, {{1, 0, 0}, {0, 1, 0}}));
    for (auto line : {std::vector<int>{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 0, 1}})
        printed.subgroups.push_back(basis_rows(2, 3, {line}));

    Code example = herzog_schonheim(printed);
    // the eight printed words under the documented F_4 indexing
    // (alpha at index 2, beta at index 3), sorted
    const std::vector<Word> expected = {
        {0, 0, 0, 0, 0}, {0, 1, 1, 1, 1}, {1, 0, 1, 1, 0}, {1, 1, 0, 0, 1},
        {2, 0, 1, 0, 1}, {2, 1, 0, 1, 0}, {3, 0, 0, 1, 1}, {3, 1, 1, 0, 0},
    };
    demand(example.words() == expected, "printed codeword list not reproduced");

    // the library helper orders the same subgroups canonically (plane first,
    // lines lexicographic); same partition as a set, equivalent code
    SubgroupPartition canon = hs_subgroup_partition(2, 3, 2);
    demand(subgroup_sets(canon) == subgroup_sets(printed),
           "helper changed the subgroup set");
    EquivResult lex = are_equivalent(herzog_schonheim(canon), example);
    demand(lex.verdict == EquivVerdict::equivalent,
           "line reordering must stay within equivalence");

    Code prefixed = theorem4_construct(coset_partition_rm(2, 2));
    EquivResult r = are_equivalent(prefixed, example);
    demand(r.verdict == EquivVerdict::equivalent,
           "class-label code not equivalent to the example");
    demand(apply_witness(prefixed, r.witness).words() == example.words(),
           "equivalence witness does not transport the code");

    built("published-example", example);
    std::ostringstream d;
    d << "8 printed words reproduced exactly; class-label code equivalent, "
         "witness verified by transport ("
      << r.nodes << " nodes)";
    return {true, d.str()};
}

// ---- 3 and 4: class-label codes and their converse ------------------------

const std::vector<std::pair<int, int>> kPrefixParams = {
    {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}};

Outcome criterion_prefix_codes() {
    std::uint64_t largest = 0;
    for (auto [q, m] : kPrefixParams) {
        std::ostringstream tag;
        tag << "(" << q << "," << m << ")";
        Code c = theorem4_construct(coset_partition_rm(q, m));
        PerfectCert pc = is_perfect(c, 1);
        demand(pc.pass, "not 1-perfect at " + tag.str());
        demand(pc.sphere_identity,
               "|C|*|B_1| != |V| at " + tag.str());
        demand(pc.code_size * pc.ball == pc.space_size,
               "sphere identity arithmetic at " + tag.str());
        largest = std::max(largest, pc.space_size);
        built("class-label" + tag.str(), c);
    }
    std::ostringstream d;
    d << kPrefixParams.size()
      << " parameter pairs 1-perfect by full covering scan, sphere identity "
         "exact; largest space "
      << largest << " words";
    return {true, d.str()};
}

Outcome criterion_prefix_roundtrip() {
    for (auto [q, m] : kPrefixParams) {
        std::ostringstream tag;
        tag << "(" << q << "," << m << ")";
        Partition p = coset_partition_rm(q, m);
        Partition back = theorem4_extract(theorem4_construct(p));
        demand(back.q == p.q && back.m == p.m, "shape lost at " + tag.str());
        demand(back.target.words() == p.target.words(),
               "target changed at " + tag.str());
        demand(back.classes.size() == p.classes.size(),
               "class count changed at " + tag.str());
        for (std::size_t i = 0; i < p.classes.size(); ++i) {
            demand(back.classes[i].words() == p.classes[i].words(),
                   "class words changed at " + tag.str());
            demand(is_rm_like(back.classes[i], q, m, (q - 1) * m - 2),
                   "class not Reed-Muller-like at " + tag.str());
        }
    }
    return {true, "round trip exact class-by-class on all 6 partitions; "
                  "every class Reed-Muller-like at its coset order"};
}

// ---- 5: substitution chain down to the binary Hamming code ----------------

Outcome criterion_substitution_chain() {
    Code c = hamming_code(4, 2); // [5,3,3] over F_4
    std::vector<Code> part = hamming_coset_partition(2, 2);
    int steps = 0;
    for (int pos = 4; pos >= 0; --pos) {
        c = heden_substitute(c, part, std::size_t(pos));
        ++steps;
        PerfectCert pc = is_perfect(c, 1);
        std::ostringstream tag;
        tag << "step " << steps << " (space " << pc.space_size << ")";
        demand(pc.pass, "chain code not 1-perfect at " + tag.str());
        demand(pc.sphere_identity, "sphere identity failed at " + tag.str());
        built("substitution-" + std::to_string(steps), c);
    }
    demand(c.space().n() == 15, "chain should end at length 15");
    for (std::size_t i = 0; i < 15; ++i)
        demand(c.space().order(i) == 2, "chain should end binary");
    return {true, "all 5 substituted codes (F_4^4 x F_2^3 through F_2^15) "
                  "1-perfect by full scan"};
}

// ---- 6: concatenated codes -------------------------------------------------

Outcome criterion_concatenation() {
    struct Row { int q, m; std::size_t len; std::uint64_t space; };
    const std::vector<Row> rows = {
        {3, 2, 13, 1594323}, {2, 2, 7, 128}, {2, 3, 15, 32768}};
    for (const Row& row : rows) {
        std::ostringstream tag;
        tag << "(" << row.q << "," << row.m << ")";
        Code c = theorem5_concatenate(coset_partition_rm(row.q, row.m),
                                      hamming_coset_partition(row.q, row.m), {});
        demand(c.space().n() == row.len, "length off at " + tag.str());
        PerfectCert pc = is_perfect(c, 1);
        demand(pc.space_size == row.space, "space size off at " + tag.str());
        demand(pc.pass, "not 1-perfect at " + tag.str());
        demand(pc.sphere_identity, "sphere identity failed at " + tag.str());
        built("concatenated-" + std::to_string(row.len), c);
    }
    return {true, "lengths 13 (ternary, 1594323 words scanned), 7 and 15 "
                  "(binary) all 1-perfect by full covering scan"};
}

// ---- 7: products and sibling families --------------------------------------

Outcome criterion_products() {
    // distance-2 MDS block products
    for (auto [q, l1, l2] : {std::tuple<int, int, int>{2, 2, 2}, {3, 3, 2}}) {
        Code c = prop1_product(space_partition_mds(q, l1), linear_mds2(q, l2));
        Mds2Cert mc = is_mds2(c);
        std::ostringstream tag;
        tag << "(" << q << "," << l1 << "x" << l2 << ")";
        demand(mc.pass, "block product not distance-2 MDS at " + tag.str());
        built("block-product" + tag.str(), c);
    }

    // quasigroup-indexed products at the two reference parameter points
    std::vector<Partition> aps2 = default_a_partitions(2, 2);
    Code drv2 = grm_expand(grm_generate(2, 2, 0));
    ProductSpec ps2{2, 2, std::vector<Quasigroup>(
                              drv2.size(), quasigroup_library(4, 3)[0])};
    Code c22 = theorem6_product(aps2, drv2, ps2);
    demand(c22.size() == 2048, "size must be 2^11 at (2,2,2)"); // 2^(16-4-1)
    demand(is_rm_like(c22, 2, 4, 2), "(2,2,2) output not Reed-Muller-like");
    built("quasigroup-product(2,2,2)", c22);

    std::vector<Partition> aps3 = default_a_partitions(3, 1);
    Code drv3 = grm_expand(grm_generate(3, 1, 0));
    ProductSpec ps3{1, 1, std::vector<Quasigroup>(
                              drv3.size(), quasigroup_library(3, 2)[0])};
    Code c31 = theorem6_product(aps3, drv3, ps3);
    demand(c31.size() == 729, "size must be 3^6 at (3,1,1)"); // 3^(9-2-1)
    demand(is_rm_like(c31, 3, 2, 2), "(3,1,1) output not Reed-Muller-like");
    built("quasigroup-product(3,1,1)", c31);

    // sibling families partition a distance-2 MDS target; the family spec
    // assigns one quasigroup per word of the driver partition's target
    Partition bp2 = coset_partition_rm(2, 2);
    ProductSpec fs2{2, 2, std::vector<Quasigroup>(
                              bp2.target.size(), quasigroup_library(4, 3)[0])};
    Partition fam2 = theorem6_family(aps2, bp2, fs2);
    demand(fam2.classes.size() == 16, "binary family must have 16 classes");
    PartitionCert f2 = validate_partition(fam2);
    demand(f2.pass && f2.target_mds, "binary family fails validation");

    Partition bp3 = coset_partition_rm(3, 1);
    ProductSpec fs3{1, 1, std::vector<Quasigroup>(
                              bp3.target.size(), quasigroup_library(3, 2)[0])};
    Partition fam3 = theorem6_family(aps3, bp3, fs3);
    demand(fam3.classes.size() == 9, "ternary family must have 9 classes");
    PartitionCert f3 = validate_partition(fam3);
    demand(f3.pass && f3.target_mds, "ternary family fails validation");

    return {true, "block products distance-2 MDS; product sizes 2048 = 2^11 "
                  "and 729 = 3^6 exact, both Reed-Muller-like; 16-class and "
                  "9-class sibling families validate against MDS targets"};
}

// ---- 8: census mechanism and the symmetry-bound arithmetic -----------------

Outcome criterion_census() {
    // one slot swept across all 12 order-3 Latin squares
    std::vector<std::vector<std::size_t>> sweep;
    for (std::size_t i = 0; i < 12; ++i) sweep.push_back({i, 0, 0});
    CensusReport swept = census_distinct_assignments(3, 1, 1, sweep);
    demand(swept.distinct_code_count >= 2, "sweep must vary the code");
    demand(swept.distinct_code_count == 12, "single-slot sweep collided");

    // assignments differing in independent slots stay distinct
    CensusReport indep = census_distinct_assignments(
        3, 1, 1, {{0, 0, 0}, {0, 5, 0}, {0, 0, 5}, {0, 5, 5}});
    demand(indep.distinct_code_count == 4, "independent slots collided");

    // exact integer arithmetic of the symmetry-vs-family comparison;
    // hand values at (2,2): 4!*4!*(2!)^4 = 9216 and 2^(2*2*5 + 3*4) = 2^32
    SymmetryBound b22 = symmetry_bound_check(2, 2);
    demand(b22.pass && b22.lhs == "9216" && b22.rhs == "4294967296",
           "hand-checked (2,2) bound values drifted");
    for (auto [q, m] : {std::pair<int, int>{2, 3}, {3, 2}}) {
        SymmetryBound b = symmetry_bound_check(q, m);
        demand(b.pass, "symmetry bound fails");
    }
    return {true, "single-slot sweep: 12/12 codes distinct (>= 2 required); "
                  "independent-slot assignments distinct 4/4; bound "
                  "arithmetic exact at (2,2), (2,3), (3,2)"};
}

// ---- 9: property suites -----------------------------------------------------

void check_field_axioms(int q) {
    const FieldTable& f = field(q);
    std::ostringstream tag;
    tag << "GF(" << q << ")";
    for (int a = 0; a < q; ++a) {
        demand(f.add(Symbol(a), 0) == a, "additive identity in " + tag.str());
        demand(f.mul(Symbol(a), 1) == a, "unit in " + tag.str());
        demand(f.add(Symbol(a), f.neg(Symbol(a))) == 0,
               "negation in " + tag.str());
        if (a) demand(f.mul(Symbol(a), f.inv(Symbol(a))) == 1,
                      "inverse in " + tag.str());
        for (int b = 0; b < q; ++b) {
            demand(f.add(Symbol(a), Symbol(b)) == f.add(Symbol(b), Symbol(a)),
                   "+ commutes in " + tag.str());
            demand(f.mul(Symbol(a), Symbol(b)) == f.mul(Symbol(b), Symbol(a)),
                   "* commutes in " + tag.str());
            for (int c = 0; c < q; ++c) {
                demand(f.add(f.add(Symbol(a), Symbol(b)), Symbol(c)) ==
                           f.add(Symbol(a), f.add(Symbol(b), Symbol(c))),
                       "+ associates in " + tag.str());
                demand(f.mul(f.mul(Symbol(a), Symbol(b)), Symbol(c)) ==
                           f.mul(Symbol(a), f.mul(Symbol(b), Symbol(c))),
                       "* associates in " + tag.str());
                demand(f.mul(Symbol(a), f.add(Symbol(b), Symbol(c))) ==
                           f.add(f.mul(Symbol(a), Symbol(b)),
                                 f.mul(Symbol(a), Symbol(c))),
                       "distributivity in " + tag.str());
            }
        }
    }
}

Outcome criterion_property_suites() {
    // exhaustive field axioms over every supported order
    const std::vector<int> orders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
    for (int q : orders) check_field_axioms(q);

    // quasigroup <-> MDS code round trip over the full generated library
    std::size_t round_trips = 0;
    for (auto [k, n] : {std::pair<int, int>{2, 2}, {2, 3}, {2, 4},
                        {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
        for (const Quasigroup& g : quasigroup_library(k, n)) {
            Code c = code_from_quasigroup(g);
            demand(is_mds2(c).pass, "library graph not distance-2 MDS");
            demand(quasigroup_from_code(c).table == g.table,
                   "round trip disturbed a table");
            ++round_trips;
        }
    }

    // zero-fixing distance-2 MDS codes by exhaustive search (as tables):
    // binary unique, ternary exactly 2^(n-1), all of them sign relabelings
    // of the zero-sum code
    for (int n = 2; n <= 5; ++n) {
        std::size_t binary = 0;
        for (const Quasigroup& g : enumerate_quasigroups(2, n - 1))
            binary += g.table[0] == 1;
        demand(binary == 1, "binary uniqueness broke");

        std::set<std::vector<Word>> expect;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Code c = linear_mds2(3, n);
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) c = relabel(c, i, {0, 2, 1});
            expect.insert(c.words());
        }
        std::size_t ternary = 0;
        for (const Quasigroup& g : enumerate_quasigroups(3, n - 1)) {
            if (g.table[0] != 1) continue;
            ++ternary;
            demand(expect.count(code_from_quasigroup(g).words()) == 1,
                   "a ternary MDS code escaped the relabeling family");
        }
        demand(ternary == (std::size_t(1) << (n - 1)),
               "ternary count broke");
    }

    // packing radius == floor((d-1)/2) for everything built above
    demand(!g_built.empty(), "no constructed codes were registered");
    for (const auto& [name, c] : g_built) {
        int e = packing_radius(c);
        int d = minimum_distance(c);
        demand(e == (d - 1) / 2, "radius identity fails for " + name);
    }
    std::ostringstream d;
    d << "field axioms exhaustive for 10 orders; " << round_trips
      << " library round trips; uniqueness families exact for n <= 5; "
         "radius identity on "
      << g_built.size() << " constructed codes";
    return {true, d.str()};
}

} // namespace

int main() {
    struct Row {
        const char* name;
        Outcome (*run)();
        double budget; // seconds; 0 = untimed
    };
    const Row rows[] = {
        {"reed-muller parameter table", criterion_grm_table, 60},
        {"published mixed-code example", criterion_published_example, 1},
        {"class-label codes 1-perfect", criterion_prefix_codes, 60},
        {"class-label round trip", criterion_prefix_roundtrip, 0},
        {"substitution chain", criterion_substitution_chain, 30},
        {"concatenated codes", criterion_concatenation, 120},
        {"products and sibling families", criterion_products, 60},
        {"census mechanism", criterion_census, 0},
        {"property suites", criterion_property_suites, 0},
    };
    int failures = 0;
    int idx = 0;
    for (const Row& row : rows) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = row.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (out.pass && row.budget > 0 && secs >= row.budget) {
            out.pass = false;
            out.detail += " [exceeded " + std::to_string(int(row.budget)) +
                          "s budget]";
        }
        std::printf("[%d/9] %s %7.2fs  %s: %s\n", idx,
                    out.pass ? "PASS" : "FAIL", secs, row.name,
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures)
        std::printf("acceptance: %d of 9 criteria FAILED\n", failures);
    else
        std::printf("acceptance: 9/9 criteria passed\n");
    return failures ? 1 : 0;
}
