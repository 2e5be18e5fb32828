#include "perfmix/census.hpp"

#include "perfmix/error.hpp"
#include "perfmix/grm.hpp"
#include "perfmix/mdsq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <utility>

namespace perfmix {

using boost::multiprecision::cpp_int;

bool CodeFingerprint::operator<(const CodeFingerprint& o) const {
    return std::tie(size, distance_distribution, coordinate_spectra) <
           std::tie(o.size, o.distance_distribution, o.coordinate_spectra);
}

CodeFingerprint fingerprint(const Code& c) {
    CodeFingerprint fp;
    fp.size = c.size();
    fp.distance_distribution = distance_distribution(c);
    // equivalence may permute coordinates of equal alphabet order, so the
    // outer list is stored in canonical (order, spectrum) order
    std::vector<std::vector<std::uint64_t>> raw = coordinate_spectra(c);
    std::vector<std::pair<int, std::vector<std::uint64_t>>> keyed;
    keyed.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        keyed.emplace_back(c.space().order(i), std::move(raw[i]));
    std::sort(keyed.begin(), keyed.end());
    for (auto& [ord, spec] : keyed)
        fp.coordinate_spectra.push_back(std::move(spec));
    return fp;
}

namespace {

std::uint64_t ipow(int b, int e) {
    std::uint64_t v = 1;
    while (e-- > 0) v *= std::uint64_t(b);
    return v;
}

struct ProductSetup {
    std::vector<Partition> aps;
    Code driver;
    std::vector<Quasigroup> library;
};

ProductSetup product_setup(int q, int m1, int m2) {
    require((q - 1) * m1 >= 2 && (q - 1) * m2 >= 2, "DegenerateOrder",
            "(q-1)m_i - 2 must be nonnegative");
    ProductSetup s{default_a_partitions(q, m1),
                   grm_expand(grm_generate(q, m2, (q - 1) * m2 - 2)),
                   quasigroup_library(int(ipow(q, m1)), int(ipow(q, m2)) - 1)};
    return s;
}

CensusReport report_from_codes(int q, int m1, int m2,
                               std::vector<std::vector<Word>> codes) {
    CensusReport rep;
    rep.q = q;
    rep.m1 = m1;
    rep.m2 = m2;
    rep.assignments_tried = codes.size();
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    rep.distinct_code_count = codes.size();
    MixedSpace sp = MixedSpace::uniform(q, int(ipow(q, m1) * ipow(q, m2)));
    for (std::vector<Word>& w : codes)
        rep.fingerprints.push_back(
            fingerprint(Code(sp, std::move(w), Code::ZeroWord::optional)));
    std::sort(rep.fingerprints.begin(), rep.fingerprints.end());
    // distinct fingerprints prove nonequivalence without the search engine;
    // same-fingerprint pairs stay undecided at this stage
    for (std::size_t i = 0; i < rep.fingerprints.size();) {
        std::size_t j = i;
        while (j < rep.fingerprints.size() && rep.fingerprints[j] == rep.fingerprints[i])
            ++j;
        ++rep.nonequivalent_lower_bound;
        rep.undecided_pairs += (j - i) * (j - i - 1) / 2;
        i = j;
    }
    return rep;
}

} // namespace

CensusReport census_distinct_assignments(
    int q, int m1, int m2,
    const std::vector<std::vector<std::size_t>>& assignments) {
    ProductSetup s = product_setup(q, m1, m2);
    std::vector<std::vector<Word>> codes;
    codes.reserve(assignments.size());
    std::uint64_t distinct_assignments;
    {
        std::vector<std::vector<std::size_t>> uniq = assignments;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        distinct_assignments = uniq.size();
    }
    for (const std::vector<std::size_t>& a : assignments) {
        require(a.size() == s.driver.size(), "BadQuasigroupShape",
                "one library index per driver codeword");
        ProductSpec ps;
        ps.m1 = m1;
        ps.m2 = m2;
        for (std::size_t idx : a) {
            require(idx < s.library.size(), "BadQuasigroupShape",
                    "library index out of range");
            ps.qv.push_back(s.library[idx]);
        }
        codes.push_back(theorem6_product(s.aps, s.driver, ps).words());
    }
    CensusReport rep = report_from_codes(q, m1, m2, std::move(codes));
    require(rep.distinct_code_count == distinct_assignments, "Internal",
            "assignment-to-code map must be injective");
    return rep;
}

CensusReport census_distinct(int q, int m1, int m2, std::uint64_t limit,
                             std::uint64_t seed) {
    ProductSetup s = product_setup(q, m1, m2);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> assignments;
    assignments.reserve(limit);
    for (std::uint64_t t = 0; t < limit; ++t) {
        std::vector<std::size_t> a(s.driver.size());
        for (std::size_t& idx : a) idx = std::size_t(rng() % s.library.size());
        assignments.push_back(std::move(a));
    }
    return census_distinct_assignments(q, m1, m2, assignments);
}

CensusReport census_nonequivalent(const std::vector<Code>& codes,
                                  std::uint64_t budget) {
    CensusReport rep;
    rep.assignments_tried = codes.size();
    if (codes.empty()) return rep;
    const MixedSpace& sp = codes[0].space();
    require(sp.size() <= 4096, "SpaceTooLarge",
            "equivalence engine is gated at |V| <= 4096");
    for (const Code& c : codes)
        require(c.space() == sp, "SpaceTooLarge",
                "all codes must share one space");

    // distinct codes only; groups keyed by fingerprint
    std::vector<std::size_t> order(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return codes[a].words() < codes[b].words();
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) {
                                return codes[a].words() == codes[b].words();
                            }),
                order.end());
    rep.distinct_code_count = order.size();

    std::map<CodeFingerprint, std::vector<std::size_t>> groups;
    for (std::size_t i : order) {
        CodeFingerprint fp = fingerprint(codes[i]);
        groups[fp].push_back(i);
        rep.fingerprints.push_back(std::move(fp));
    }
    std::sort(rep.fingerprints.begin(), rep.fingerprints.end());

    for (const auto& [fp, members] : groups) {
        std::vector<std::size_t> reps;
        for (std::size_t i : members) {
            bool matched = false, undecided = false;
            for (std::size_t r : reps) {
                EquivResult res = are_equivalent(codes[r], codes[i], budget);
                if (res.verdict == EquivVerdict::equivalent) {
                    matched = true;
                    break;
                }
                if (res.verdict == EquivVerdict::unknown) {
                    undecided = true;
                    ++rep.undecided_pairs;
                }
            }
            if (!matched && !undecided) reps.push_back(i);
        }
        rep.nonequivalent_lower_bound += reps.size();
    }
    return rep;
}

SymmetryBound symmetry_bound_check(int q, int m) {
    require(q >= 2 && m >= 1, "BadParameters", "need q >= 2, m >= 1");
    const std::uint64_t n = ipow(q, m);
    auto fact = [](std::uint64_t k) {
        cpp_int f = 1;
        for (std::uint64_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    cpp_int lhs = fact(n) * fact(n) *
                  boost::multiprecision::pow(fact(std::uint64_t(q)), unsigned(n));
    cpp_int rhs = boost::multiprecision::pow(
        cpp_int(q), unsigned(2 * std::uint64_t(m) * (n + 1) +
                             std::uint64_t(q + 1) * n));
    SymmetryBound b;
    b.pass = lhs <= rhs;
    b.lhs = lhs.str();
    b.rhs = rhs.str();
    return b;
}

} // namespace perfmix
