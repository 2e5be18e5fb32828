#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfmix/equiv.hpp"
#include "perfmix/error.hpp"
#include "perfmix/space.hpp"

#include <algorithm>
#include <numeric>

using namespace perfmix;

namespace {

Word w(std::initializer_list<int> xs) {
    Word out;
    for (int x : xs) out.push_back(Symbol(x));
    return out;
}

Code even_code(int n) {
    MixedSpace sp = MixedSpace::uniform(2, n);
    std::vector<Word> words;
    for_each_word(sp, [&](const Word& x) {
        if (is_even(sp, x)) words.push_back(x);
    });
    return Code(sp, std::move(words));
}

Code permute_coords(const Code& c, const std::vector<std::size_t>& sigma) {
    std::vector<int> orders(c.space().n());
    for (std::size_t i = 0; i < orders.size(); ++i)
        orders[sigma[i]] = c.space().order(i);
    std::vector<Word> words;
    for (const Word& x : c.words()) {
        Word y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[sigma[i]] = x[i];
        words.push_back(std::move(y));
    }
    return Code(MixedSpace(std::move(orders)), std::move(words),
                Code::ZeroWord::optional);
}

} // namespace

TEST_CASE("a code is equivalent to itself with a verified witness") {
    Code c = even_code(4);
    EquivResult r = are_equivalent(c, c);
    REQUIRE(r.verdict == EquivVerdict::equivalent);
    CHECK(apply_witness(c, r.witness) == c);
}

TEST_CASE("coordinate permutations are found and witnessed") {
    MixedSpace sp({4, 2, 2, 2, 2});
    Code c(sp, {w({0, 0, 0, 0, 0}), w({1, 0, 1, 1, 0}), w({2, 1, 0, 1, 0}),
                w({3, 1, 1, 0, 0})});
    Code moved = permute_coords(c, {0, 3, 1, 4, 2});
    EquivResult r = are_equivalent(c, moved);
    REQUIRE(r.verdict == EquivVerdict::equivalent);
    CHECK(apply_witness(c, r.witness) == moved);
}

TEST_CASE("symbol relabelings are found and witnessed") {
    Code c = even_code(5);
    Code moved = relabel(relabel(c, 1, {1, 0}), 3, {1, 0});
    EquivResult r = are_equivalent(c, moved);
    REQUIRE(r.verdict == EquivVerdict::equivalent);
    CHECK(apply_witness(c, r.witness) == moved);
}

TEST_CASE("coordinates of different orders never mix") {
    // different spaces are incomparable by definition
    Code ca(MixedSpace({2, 4}), {w({0, 0}), w({1, 1})});
    Code cb(MixedSpace({4, 2}), {w({0, 0}), w({1, 1})});
    CHECK_THROWS_AS(are_equivalent(ca, cb), Error);

    // same space: matching the active coordinate would require moving the
    // order-4 coordinate onto an order-2 one, which no witness may do
    MixedSpace sp({4, 2, 2});
    Code cc(sp, {w({0, 0, 0}), w({1, 1, 0})});
    Code cd(sp, {w({0, 0, 0}), w({0, 1, 1})});
    EquivResult r = are_equivalent(cc, cd);
    CHECK(r.verdict == EquivVerdict::nonequivalent);
}

TEST_CASE("distance distributions separate inequivalent codes") {
    MixedSpace sp = MixedSpace::uniform(2, 2);
    Code ca(sp, {w({0, 0}), w({1, 1})});
    Code cb(sp, {w({0, 0}), w({1, 0})});
    EquivResult r = are_equivalent(ca, cb);
    CHECK(r.verdict == EquivVerdict::nonequivalent);
    CHECK(distance_distribution(ca) != distance_distribution(cb));
}

TEST_CASE("size mismatch is decided without search") {
    MixedSpace sp = MixedSpace::uniform(2, 3);
    Code ca(sp, {w({0, 0, 0}), w({1, 1, 1})});
    Code cb(sp, {w({0, 0, 0}), w({1, 1, 1}), w({0, 1, 1})});
    EquivResult r = are_equivalent(ca, cb);
    CHECK(r.verdict == EquivVerdict::nonequivalent);
    CHECK(r.nodes == 0);
}

TEST_CASE("distance distribution is a pairwise histogram") {
    Code c = even_code(4); // 8 words, all pairwise distances even
    std::vector<std::uint64_t> dd = distance_distribution(c);
    REQUIRE(dd.size() == 5);
    CHECK(dd[0] == 0);
    CHECK(dd[1] == 0);
    CHECK(dd[3] == 0);
    CHECK(dd[2] + dd[4] == 8 * 7 / 2);
    std::uint64_t total = std::accumulate(dd.begin(), dd.end(), std::uint64_t(0));
    CHECK(total == 28);
}

TEST_CASE("equivalence transformations preserve the fingerprint pieces") {
    Code c = even_code(5);
    Code moved = relabel(permute_coords(c, {2, 0, 4, 1, 3}), 2, {1, 0});
    CHECK(distance_distribution(c) == distance_distribution(moved));
    // spectra are per-coordinate multisets, sorted rows compare equal as sets
    std::vector<std::vector<std::uint64_t>> sa = coordinate_spectra(c);
    std::vector<std::vector<std::uint64_t>> sb = coordinate_spectra(moved);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    CHECK(sa == sb);
}

TEST_CASE("the verdict never claims nonequivalence of equivalent codes") {
    Code c = even_code(4);
    Code moved = permute_coords(relabel(c, 0, {1, 0}), {3, 1, 0, 2});
    // tiny budget may leave the search undecided, but must not lie
    for (std::uint64_t budget : {1u, 10u, 200000u}) {
        EquivResult r = are_equivalent(c, moved, budget);
        CHECK(r.verdict != EquivVerdict::nonequivalent);
    }
}
