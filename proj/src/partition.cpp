#include "perfmix/partition.hpp"

#include "perfmix/error.hpp"
#include "perfmix/grm.hpp"
#include "perfmix/linalg.hpp"

#include <algorithm>
#include <map>

namespace perfmix {

Partition coset_partition_rm(int q, int m) {
    require((q - 1) * m - 2 >= 0, "DegenerateOrder",
            "class order (q-1)m-2 is negative");
    std::uint64_t n = 1;
    for (int i = 0; i < m; ++i) n *= std::uint64_t(q);
    require(n <= 16, "TooLarge", "target length q^m exceeds 16");

    GrmCode big = grm_generate(q, m, (q - 1) * m - 1);
    GrmCode sub = grm_generate(q, m, (q - 1) * m - 2);
    Code target = grm_expand(big);

    // syndromes of the subcode's dual separate its cosets; first-seen order
    // over the lexicographically sorted target puts the zero coset first
    Matrix H = grm_dual_basis(sub);
    std::map<std::vector<Symbol>, std::size_t> ids;
    std::vector<std::vector<Word>> buckets;
    for (const Word& w : target.words()) {
        std::vector<Symbol> s = mul_col(H, w.data());
        auto [it, fresh] = ids.try_emplace(std::move(s), buckets.size());
        if (fresh) buckets.emplace_back();
        buckets[it->second].push_back(w);
    }
    require(buckets.size() == n, "Internal", "coset count != q^m");

    std::vector<Code> classes;
    classes.reserve(buckets.size());
    for (auto& b : buckets)
        classes.emplace_back(target.space(), std::move(b), Code::ZeroWord::optional);
    return Partition{std::move(target), std::move(classes), q, m};
}

PartitionCert validate_partition(const Partition& p) {
    PartitionCert cert;
    auto flunk = [&](const std::string& why) {
        if (cert.detail.empty()) cert.detail = why;
    };

    if (p.classes.empty()) {
        flunk("no classes");
        return cert;
    }
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        if (p.classes[i].space() != p.target.space()) {
            flunk("class " + std::to_string(i) + " lives in a different space");
            return cert;
        }
        if (p.classes[i].size() == 0) {
            flunk("class " + std::to_string(i) + " empty");
            return cert;
        }
    }

    std::vector<Word> all;
    all.reserve(p.target.size());
    for (const Code& c : p.classes)
        all.insert(all.end(), c.words().begin(), c.words().end());
    std::sort(all.begin(), all.end());
    cert.disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    cert.covers = (all == p.target.words());
    if (!cert.disjoint) flunk("classes overlap");
    else if (!cert.covers) flunk("union of classes != target");

    Mds2Cert mds = is_mds2(p.target);
    cert.target_mds = mds.pass;
    if (!mds.pass) flunk("target not distance-2 MDS: " + mds.detail);

    const int r = p.class_order();
    if (r < 0) {
        flunk("class order (q-1)m-2 negative");
    } else {
        cert.classes_rm_like = true;
        for (std::size_t i = 0; i < p.classes.size(); ++i)
            if (!is_rm_like(p.classes[i], p.q, p.m, r)) {
                cert.classes_rm_like = false;
                flunk("class " + std::to_string(i) + " not RM-like at order " +
                      std::to_string(r));
                break;
            }
    }

    cert.pass = cert.disjoint && cert.covers && cert.target_mds && cert.classes_rm_like;
    return cert;
}

std::vector<Code> space_partition_mds(int q, int n) {
    require(is_prime_power(q), "Unsupported", "alphabet must be a field");
    require(n >= 2 && n <= 16, "Unsupported", "length out of range");
    MixedSpace sp = MixedSpace::uniform(q, n);
    require(sp.size() <= (std::uint64_t(1) << 20), "Unsupported",
            "space too large to materialize parity classes");
    std::vector<std::vector<Word>> buckets(q);
    for_each_word(sp, [&](const Word& w) { buckets[parity(sp, w)].push_back(w); });
    std::vector<Code> out;
    out.reserve(q);
    for (int c = 0; c < q; ++c)
        out.emplace_back(sp, std::move(buckets[c]),
                         c == 0 ? Code::ZeroWord::required : Code::ZeroWord::optional);
    return out;
}

std::pair<Quasigroup, Quasigroup> partition_to_graeco_latin(const Partition& p) {
    const int q = p.q;
    require(p.m == 1 && q >= 3, "NotM1Partition",
            "correspondence defined for m = 1, q >= 3");
    require(p.target.space().n() == std::size_t(q) &&
                p.target.space().uniform_order() == q,
            "NotM1Partition", "target must be q-ary of length q");
    require(p.classes.size() == std::size_t(q), "NotM1Partition",
            "need exactly q classes");

    Quasigroup h1 = quasigroup_from_code(p.target);
    Quasigroup h2;
    h2.order = q;
    h2.arity = q - 1;
    h2.table.assign(qg_cells(q, q - 1), 0);
    for (std::size_t ci = 0; ci < p.classes.size(); ++ci)
        for (const Word& w : p.classes[ci].words()) {
            std::size_t idx = 0;
            for (int i = 0; i < q - 1; ++i) idx = idx * q + w[i];
            require(h2.table[idx] == 0, "NotM1Partition", "classes overlap on a prefix");
            h2.table[idx] = Symbol(ci + 1);
        }
    for (Symbol v : h2.table)
        require(v != 0, "NotM1Partition", "classes do not cover the target");
    require(is_latin(h2), "NotM1Partition", "class-index hypercube is not Latin");
    require(orthogonal_pair_check(h1, h2), "NotM1Partition",
            "hypercube pair is not Graeco-Latin");
    return {std::move(h1), std::move(h2)};
}

Partition graeco_latin_to_partition(const Quasigroup& h1, const Quasigroup& h2) {
    const int q = h1.order;
    require(h1.order == h2.order && h1.arity == h2.arity, "NotM1Partition",
            "hypercube shapes differ");
    require(q >= 3 && h1.arity == q - 1, "NotM1Partition",
            "need dimension q-1, order q, q >= 3");
    require(is_latin(h1) && is_latin(h2), "NotM1Partition", "tables must be Latin");
    require(orthogonal_pair_check(h1, h2), "NotM1Partition",
            "hypercube pair is not Graeco-Latin");

    Code target = code_from_quasigroup(h1);
    std::vector<std::vector<Word>> buckets(q);
    for (const Word& w : target.words()) {
        std::size_t idx = 0;
        for (int i = 0; i < q - 1; ++i) idx = idx * q + w[i];
        buckets[h2.table[idx] - 1].push_back(w);
    }
    std::vector<Code> classes;
    classes.reserve(q);
    for (auto& b : buckets)
        classes.emplace_back(target.space(), std::move(b), Code::ZeroWord::optional);
    return Partition{std::move(target), std::move(classes), q, 1};
}

} // namespace perfmix
