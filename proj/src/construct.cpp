#include "perfmix/construct.hpp"

#include "perfmix/error.hpp"
#include "perfmix/grm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace perfmix {

namespace {

std::uint64_t ipow(int b, int e) {
    std::uint64_t v = 1;
    while (e-- > 0) v *= std::uint64_t(b);
    return v;
}

// all q^k words of the row space, odometer over information vectors
std::vector<Word> span_words(const Matrix& gen, std::uint64_t gate) {
    const FieldTable& F = field(gen.q);
    const std::size_t k = gen.rows, n = gen.cols;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= std::uint64_t(gen.q);
        require(count <= gate, "TooLarge", "row space exceeds the expansion gate");
    }
    std::vector<Word> out;
    out.reserve(count);
    Word cw(n, 0);
    std::vector<Symbol> u(k, 0);
    out.push_back(cw);
    if (k == 0) return out;
    for (std::uint64_t step = 1; step < count; ++step) {
        std::size_t i = k - 1;
        for (;;) {
            Symbol old = u[i];
            Symbol next = (old + 1 < gen.q) ? Symbol(old + 1) : Symbol(0);
            u[i] = next;
            Symbol delta = F.sub(next, old);
            for (std::size_t j = 0; j < n; ++j)
                cw[j] = F.add(cw[j], F.mul(delta, gen.at(i, j)));
            if (next != 0) break;
            --i;
        }
        out.push_back(cw);
    }
    return out;
}

// index of w inside its subgroup's label range, or -1 when w is not in the
// subgroup; built once per subgroup as a dense table over the ambient space
std::vector<std::int64_t> label_table(const Matrix& basis, const MixedSpace& amb) {
    std::vector<std::int64_t> lab(amb.size(), -1);
    std::vector<Word> elems = span_words(basis, std::uint64_t(1) << 20);
    // span_words enumerates coefficient vectors (c_1..c_d) with c_d fastest,
    // i.e. element index sum c_i q^{d-i}; the documented label is
    // c_1 + c_2 q + ..., so relabel by digit reversal
    const int q = basis.q;
    const std::size_t d = basis.rows;
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        std::size_t rev = 0, tmp = idx;
        std::vector<std::size_t> digits(d);
        for (std::size_t i = 0; i < d; ++i) {
            digits[d - 1 - i] = tmp % q;
            tmp /= q;
        }
        for (std::size_t i = 0; i < d; ++i) rev = rev + digits[i] * ipow(q, int(i));
        lab[amb.index_of(elems[idx])] = std::int64_t(rev);
    }
    return lab;
}

} // namespace

void validate_subgroup_partition(const SubgroupPartition& sp) {
    require(is_prime_power(sp.q), "NotPrimePower", "base field order");
    require(sp.m >= 1, "BadParameters", "ambient dimension");
    require(sp.subgroups.size() >= 2, "NotAPartition",
            "need at least two subgroups");
    std::uint64_t ambient = 1;
    for (int i = 0; i < sp.m; ++i) {
        ambient *= std::uint64_t(sp.q);
        require(ambient <= (std::uint64_t(1) << 14), "TooLarge",
                "ambient space exceeds the 2^14 gate");
    }
    MixedSpace amb = MixedSpace::uniform(sp.q, sp.m);
    std::vector<char> seen(ambient, 0);
    seen[0] = 1; // zero is shared by every subgroup
    for (const Matrix& b : sp.subgroups) {
        require(b.q == sp.q && b.cols == std::size_t(sp.m), "ShapeMismatch",
                "subgroup basis shape");
        Matrix r = b;
        require(rref(r) == b.rows && r.a == b.a, "BadParameters",
                "subgroup basis must be reduced echelon with independent rows");
        for (const Word& w : span_words(b, std::uint64_t(1) << 20)) {
            std::uint64_t idx = amb.index_of(w);
            if (idx == 0) continue;
            require(!seen[idx], "NotAPartition", "subgroups share a nonzero element");
            seen[idx] = 1;
        }
    }
    for (std::uint64_t i = 0; i < ambient; ++i)
        require(seen[i], "NotAPartition", "subgroups do not cover the space");
}

SubgroupPartition hs_subgroup_partition(int q, int m, int alpha) {
    require(m > alpha && alpha >= 2, "BadParameters", "need m > alpha >= 2");
    std::uint64_t ambient = 1;
    for (int i = 0; i < m; ++i) {
        ambient *= std::uint64_t(q);
        require(ambient <= (std::uint64_t(1) << 14), "BadParameters",
                "ambient space exceeds the 2^14 gate");
    }
    SubgroupPartition sp;
    sp.q = q;
    sp.m = m;
    Matrix w(q, alpha, m);
    for (int i = 0; i < alpha; ++i) w.at(i, i) = 1;
    sp.subgroups.push_back(std::move(w));

    // monic line representatives in lex order, skipping lines inside W
    // (those have all coordinates past alpha-1 equal to zero)
    MixedSpace amb = MixedSpace::uniform(q, m);
    for (std::uint64_t idx = 1; idx < ambient; ++idx) {
        Word v = amb.word_of(idx);
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] != 1) continue; // not monic
        bool in_w = true;
        for (int i = alpha; i < m; ++i)
            if (v[i] != 0) in_w = false;
        if (in_w) continue;
        Matrix line(q, 1, m);
        for (int i = 0; i < m; ++i) line.at(0, i) = v[i];
        sp.subgroups.push_back(std::move(line));
    }
    std::uint64_t expect = 1 + (ambient - ipow(q, alpha)) / std::uint64_t(q - 1);
    require(sp.subgroups.size() == expect, "Internal", "subgroup count formula");
    validate_subgroup_partition(sp);
    return sp;
}

Code herzog_schonheim(const SubgroupPartition& sp) {
    validate_subgroup_partition(sp);
    const FieldTable& F = field(sp.q);
    MixedSpace amb = MixedSpace::uniform(sp.q, sp.m);
    const std::size_t n = sp.subgroups.size();

    std::vector<int> orders(n);
    std::vector<std::vector<Word>> elems(n); // label -> ambient element
    std::vector<std::int64_t> last_label = label_table(sp.subgroups[n - 1], amb);
    for (std::size_t i = 0; i < n; ++i) {
        orders[i] = int(ipow(sp.q, int(sp.subgroups[i].rows)));
        std::vector<std::int64_t> lab = label_table(sp.subgroups[i], amb);
        elems[i].assign(orders[i], Word());
        for (std::uint64_t idx = 0; idx < amb.size(); ++idx)
            if (lab[idx] >= 0) elems[i][lab[idx]] = amb.word_of(idx);
    }

    std::uint64_t combos = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        combos *= std::uint64_t(orders[i]);
        require(combos <= (std::uint64_t(1) << 22), "TooLarge",
                "partial-sum enumeration exceeds the gate");
    }

    // enumerate labels of the first n-1 coordinates; the last coordinate is
    // forced to -sum and must land inside G_n
    std::vector<Word> words;
    std::vector<Symbol> g(n, 0);
    Word zero_amb(sp.m, 0);
    for (std::uint64_t c = 0;; ++c) {
        Word sum = zero_amb;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Word& e = elems[i][g[i]];
            for (int j = 0; j < sp.m; ++j) sum[j] = F.add(sum[j], e[j]);
        }
        for (int j = 0; j < sp.m; ++j) sum[j] = F.neg(sum[j]);
        std::int64_t lab = last_label[amb.index_of(sum)];
        if (lab >= 0) {
            Word w(g.begin(), g.end() - 1);
            w.push_back(Symbol(lab));
            words.push_back(std::move(w));
        }
        if (c + 1 == combos) break;
        std::size_t i = n - 2;
        while (g[i] + 1 == orders[i]) g[i--] = 0;
        ++g[i];
    }

    require(words.size() * amb.size() == combos * std::uint64_t(orders[n - 1]),
            "Internal", "zero-sum count |C| != prod |G_i| / |G|");
    return Code(MixedSpace(std::move(orders)), std::move(words));
}

Code hamming_code(int q, int s) {
    require(is_prime_power(q), "NotPrimePower", "alphabet must be a field");
    require(s >= 2, "BadParameters", "need at least two check symbols");
    std::uint64_t N = (ipow(q, s) - 1) / std::uint64_t(q - 1);
    require(N <= 16, "TooLarge", "Hamming length exceeds 16");

    Matrix h(q, std::size_t(s), std::size_t(N));
    MixedSpace cols = MixedSpace::uniform(q, s);
    std::size_t c = 0;
    for (std::uint64_t idx = 1; idx < cols.size(); ++idx) {
        Word v = cols.word_of(idx);
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] != 1) continue;
        for (int i = 0; i < s; ++i) h.at(i, c) = v[i];
        ++c;
    }
    require(c == N, "Internal", "projective point count");
    Matrix gen = null_space(h);
    require(gen.rows == N - std::size_t(s), "Internal", "Hamming dimension");
    return Code(MixedSpace::uniform(q, int(N)),
                span_words(gen, std::uint64_t(1) << 22));
}

std::vector<Code> hamming_coset_partition(int q, int s) {
    Code ham = hamming_code(q, s);
    const MixedSpace& sp = ham.space();
    const FieldTable& F = field(q);

    // rebuild the parity-check matrix to classify by syndrome
    Matrix h(q, std::size_t(s), sp.n());
    MixedSpace cols = MixedSpace::uniform(q, s);
    std::size_t c = 0;
    for (std::uint64_t idx = 1; idx < cols.size(); ++idx) {
        Word v = cols.word_of(idx);
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] != 1) continue;
        for (int i = 0; i < s; ++i) h.at(i, c) = v[i];
        ++c;
    }
    (void)F;

    std::map<std::vector<Symbol>, std::size_t> ids;
    std::vector<std::vector<Word>> buckets;
    for_each_word(sp, [&](const Word& w) {
        std::vector<Symbol> syn = mul_col(h, w.data());
        auto [it, fresh] = ids.try_emplace(std::move(syn), buckets.size());
        if (fresh) buckets.emplace_back();
        buckets[it->second].push_back(w);
    });
    require(buckets.size() == ipow(q, s), "Internal", "coset count != q^s");
    std::vector<Code> out;
    out.reserve(buckets.size());
    for (std::size_t i = 0; i < buckets.size(); ++i)
        out.emplace_back(sp, std::move(buckets[i]),
                         i == 0 ? Code::ZeroWord::required : Code::ZeroWord::optional);
    require(out[0].words() == ham.words(), "Internal", "zero coset != Hamming code");
    return out;
}

namespace {

// partition classes must tile their space exactly; returns the common size
std::uint64_t check_tiling(const std::vector<Code>& classes, const char* err) {
    require(!classes.empty(), err, "no classes");
    const MixedSpace& sp = classes[0].space();
    require(sp.size() <= (std::uint64_t(1) << 20), "TooLarge",
            "ingredient space too large to tile-check");
    std::vector<char> seen(sp.size(), 0);
    std::uint64_t total = 0;
    for (const Code& c : classes) {
        require(c.space() == sp, err, "classes live in different spaces");
        for (const Word& w : c.words()) {
            std::uint64_t idx = sp.index_of(w);
            require(!seen[idx], err, "classes overlap");
            seen[idx] = 1;
        }
        total += c.size();
    }
    require(total == sp.size(), err, "classes do not cover the space");
    return classes[0].size();
}

void check_classes_perfect(const std::vector<Code>& classes, const char* err) {
    for (const Code& c : classes) {
        PerfectCert pc = is_perfect(c, 1);
        require(pc.pass, err, "ingredient class is not 1-perfect");
    }
}

} // namespace

Code heden_substitute(const Code& cp, const std::vector<Code>& partition,
                      std::size_t position) {
    const MixedSpace& msp = cp.space();
    if (position == std::size_t(-1)) position = msp.n() - 1;
    require(position < msp.n(), "BadParameters", "position out of range");
    const int t = msp.order(position);

    require(!partition.empty(), "NotAPartition", "empty partition");
    const MixedSpace& psp = partition[0].space();
    require(int(partition.size()) == t, "SphereMismatch",
            "class count != alphabet order at the substituted position");
    require(psp.ball_size(1) == std::uint64_t(t), "SphereMismatch",
            "|B''_1| != alphabet order at the substituted position");
    check_tiling(partition, "NotAPartition");
    check_classes_perfect(partition, "NotAPartition");

    std::vector<int> orders;
    for (std::size_t i = 0; i < msp.n(); ++i)
        if (i != position) orders.push_back(msp.order(i));
    for (std::size_t i = 0; i < psp.n(); ++i) orders.push_back(psp.order(i));

    std::vector<Word> words;
    words.reserve(cp.size() * partition[0].size());
    for (const Word& w : cp.words()) {
        Word head;
        head.reserve(orders.size());
        for (std::size_t i = 0; i < msp.n(); ++i)
            if (i != position) head.push_back(w[i]);
        for (const Word& u : partition[w[position]].words()) {
            Word out = head;
            out.insert(out.end(), u.begin(), u.end());
            words.push_back(std::move(out));
        }
    }
    require(words.size() == cp.size() * partition[0].size(), "Internal",
            "|C| != |C'| * |C''|");
    return Code(MixedSpace(std::move(orders)), std::move(words),
                Code::ZeroWord::optional);
}

Code doubling(const Partition& cp, const std::vector<Code>& cpp,
              const std::vector<std::size_t>& pi) {
    const std::size_t t = cp.classes.size();
    require(cpp.size() == t, "PartitionShapeMismatch",
            "the two partitions need equally many classes");
    require(cp.q == 2 && cp.target.space().uniform_order() == 2,
            "PartitionShapeMismatch", "first partition must be binary");
    const std::size_t len = cp.target.space().n();
    require(t == len, "PartitionShapeMismatch", "need 2^m classes of length 2^m");
    require(cpp[0].space().uniform_order() == 2 && cpp[0].space().n() == len - 1,
            "PartitionShapeMismatch", "second partition must cover F_2^{2^m - 1}");

    PartitionCert pc = validate_partition(cp);
    require(pc.pass, "PartitionShapeMismatch",
            "even-word partition invalid: " + pc.detail);
    check_tiling(cpp, "PartitionShapeMismatch");
    check_classes_perfect(cpp, "PartitionShapeMismatch");

    std::vector<std::size_t> perm = pi;
    if (perm.empty()) {
        perm.resize(t);
        std::iota(perm.begin(), perm.end(), std::size_t(0));
    }
    require(perm.size() == t, "PartitionShapeMismatch", "permutation length");

    std::vector<Word> words;
    for (std::size_t i = 0; i < t; ++i)
        for (const Word& u : cp.classes[i].words())
            for (const Word& v : cpp[perm[i]].words()) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                words.push_back(std::move(w));
            }
    return Code(MixedSpace::uniform(2, int(2 * len - 1)), std::move(words),
                Code::ZeroWord::optional);
}

Code theorem4_construct(const Partition& p) {
    PartitionCert pc = validate_partition(p);
    require(pc.pass, "InvalidPartition", pc.detail);
    require(p.q >= 3 || p.m >= 2, "ExcludedParameters",
            "(q, m) = (2, 1) is excluded");
    const std::size_t n = p.classes.size();
    require(n == p.target.space().n() && n == ipow(p.q, p.m), "InvalidPartition",
            "need q^m classes over length q^m");
    require(n <= 16, "TooLarge", "first alphabet order exceeds 16");

    std::vector<int> orders(n + 1, p.q);
    orders[0] = int(n);
    std::vector<Word> words;
    words.reserve(p.target.size());
    for (std::size_t i = 0; i < n; ++i)
        for (const Word& v : p.classes[i].words()) {
            Word w;
            w.reserve(n + 1);
            w.push_back(Symbol(i));
            w.insert(w.end(), v.begin(), v.end());
            words.push_back(std::move(w));
        }
    require(words.size() == p.target.size(), "Internal", "|C| != q^{n-1}");
    return Code(MixedSpace(std::move(orders)), std::move(words),
                Code::ZeroWord::optional);
}

Partition theorem4_extract(const Code& c) {
    const MixedSpace& sp = c.space();
    require(sp.n() >= 3, "ShapeMismatch", "too short");
    const std::size_t n = std::size_t(sp.order(0));
    require(sp.n() == n + 1, "ShapeMismatch",
            "first alphabet order must equal the remaining length");
    const int q = sp.order(1);
    for (std::size_t i = 1; i < sp.n(); ++i)
        require(sp.order(i) == q, "ShapeMismatch", "tail must be q-ary");
    int m = 0;
    std::uint64_t pw = 1;
    while (pw < n) {
        pw *= std::uint64_t(q);
        ++m;
    }
    require(pw == n, "ShapeMismatch", "first alphabet order is not a power of q");
    require(q >= 3 || m >= 2, "ShapeMismatch", "(q, m) = (2, 1) is excluded");

    PerfectCert pc = is_perfect(c, 1);
    require(pc.pass, "NotPerfect", "input code is not 1-perfect");

    MixedSpace tail = MixedSpace::uniform(q, int(n));
    std::vector<std::vector<Word>> buckets(n);
    for (const Word& w : c.words())
        buckets[w[0]].emplace_back(w.begin() + 1, w.end());
    std::vector<Word> all;
    all.reserve(c.size());
    for (const auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    Code target(tail, std::move(all), Code::ZeroWord::optional);
    std::vector<Code> classes;
    classes.reserve(n);
    for (auto& b : buckets)
        classes.emplace_back(tail, std::move(b), Code::ZeroWord::optional);

    Partition p{std::move(target), std::move(classes), q, m};
    PartitionCert vp = validate_partition(p);
    require(vp.pass, "Internal", "converse extraction failed validation: " + vp.detail);
    return p;
}

Code theorem5_concatenate(const Partition& p, const std::vector<Code>& hp,
                          const std::vector<std::size_t>& pi) {
    PartitionCert pc = validate_partition(p);
    require(pc.pass, "InvalidPartition", pc.detail);
    require(p.m >= 2, "ExcludedParameters", "concatenation needs m >= 2");
    const std::size_t n = p.classes.size();
    require(hp.size() == n, "ClassCountMismatch",
            "need one 1-perfect class per partition class");
    const int q = p.q;
    const std::size_t N = (n - 1) / std::size_t(q - 1);
    require(N * std::size_t(q - 1) == n - 1, "ClassCountMismatch",
            "(n-1)/(q-1) must be integral");
    require(hp[0].space().uniform_order() == q && hp[0].space().n() == N,
            "ClassCountMismatch", "second partition must cover F_q^{(n-1)/(q-1)}");
    check_tiling(hp, "ClassCountMismatch");
    check_classes_perfect(hp, "ClassCountMismatch");

    std::vector<std::size_t> perm = pi;
    if (perm.empty()) {
        perm.resize(n);
        std::iota(perm.begin(), perm.end(), std::size_t(0));
    }
    require(perm.size() == n, "ClassCountMismatch", "permutation length");

    std::vector<Word> words;
    for (std::size_t i = 0; i < n; ++i)
        for (const Word& u : p.classes[i].words())
            for (const Word& v : hp[perm[i]].words()) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                words.push_back(std::move(w));
            }
    return Code(MixedSpace::uniform(q, int(n + N)), std::move(words),
                Code::ZeroWord::optional);
}

Code prop1_product(const std::vector<Code>& a_list, const Code& b) {
    const int q = b.space().uniform_order();
    require(q >= 2, "NotAPartitionOfSpace", "driver code must be q-ary");
    require(int(a_list.size()) == q, "NotAPartitionOfSpace",
            "need one MDS class per field element");
    check_tiling(a_list, "NotAPartitionOfSpace");
    for (const Code& a : a_list)
        require(is_mds2(a).pass, "NotAPartitionOfSpace",
                "ingredient class is not distance-2 MDS");
    require(is_mds2(b).pass, "NotAPartitionOfSpace",
            "driver code is not distance-2 MDS");
    require(a_list[0].space().uniform_order() == q, "NotAPartitionOfSpace",
            "alphabet mismatch");

    const std::size_t l1 = a_list[0].space().n();
    const std::size_t l2 = b.space().n();
    require(l1 * l2 <= 16, "TooLarge", "product length exceeds 16");

    std::vector<Word> words;
    Word cur(l1 * l2);
    std::function<void(const Word&, std::size_t)> emit = [&](const Word& v,
                                                             std::size_t blk) {
        if (blk == l2) {
            words.push_back(cur);
            return;
        }
        for (const Word& u : a_list[v[blk]].words()) {
            std::copy(u.begin(), u.end(), cur.begin() + blk * l1);
            emit(v, blk + 1);
        }
    };
    for (const Word& v : b.words()) emit(v, 0);

    std::uint64_t expect = 1;
    for (std::size_t i = 1; i < l1 * l2; ++i) expect *= std::uint64_t(q);
    require(words.size() == expect, "Internal", "|C| != q^{n-1}");
    return Code(MixedSpace::uniform(q, int(l1 * l2)), std::move(words),
                Code::ZeroWord::optional);
}

std::vector<Partition> default_a_partitions(int q, int m1) {
    Partition zero = coset_partition_rm(q, m1);
    const MixedSpace& sp = zero.target.space();
    std::vector<Partition> out;
    out.reserve(q);
    for (int k = 0; k < q; ++k) {
        if (k == 0) {
            out.push_back(zero);
            continue;
        }
        Word t(sp.n(), 0);
        t.back() = Symbol(k);
        const FieldTable& F = field(q);
        auto translate = [&](const Code& c) {
            std::vector<Word> ws;
            ws.reserve(c.size());
            for (const Word& w : c.words()) {
                Word v = w;
                for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(v[i], t[i]);
                ws.push_back(std::move(v));
            }
            return Code(sp, std::move(ws), Code::ZeroWord::optional);
        };
        std::vector<Code> classes;
        classes.reserve(zero.classes.size());
        for (const Code& c : zero.classes) classes.push_back(translate(c));
        out.push_back(Partition{translate(zero.target), std::move(classes), q, m1});
    }
    return out;
}

namespace {

void check_theorem6_inputs(const std::vector<Partition>& aps, int q, int m1,
                           std::size_t l1) {
    require(int(aps.size()) == q, "NotAPartitionOfSpace",
            "need one partitioned class per field element");
    std::vector<Code> targets;
    targets.reserve(q);
    for (const Partition& ap : aps) {
        require(ap.q == q && ap.m == m1 && ap.target.space().n() == l1,
                "ShapeMismatch", "ingredient partition parameters");
        require(ap.classes.size() == l1, "ShapeMismatch",
                "ingredient partition must have q^{m1} classes");
        PartitionCert c = validate_partition(ap);
        require(c.pass, "InvalidPartition", "ingredient partition: " + c.detail);
        targets.push_back(ap.target);
    }
    check_tiling(targets, "NotAPartitionOfSpace");
}

// one product class: driver words with their quasigroups, j_1 offset by s
std::vector<Word> theorem6_emit(const std::vector<Partition>& aps,
                                const std::vector<Word>& driver,
                                const std::vector<const Quasigroup*>& qv, int offset,
                                std::size_t l1, std::size_t l2) {
    std::vector<Word> words;
    Word cur(l1 * l2);
    std::vector<Symbol> js(l2); // 1-based class choices per block
    std::function<void(const Word&, std::size_t)> blocks = [&](const Word& v,
                                                               std::size_t blk) {
        if (blk == l2) {
            words.push_back(cur);
            return;
        }
        for (const Word& u : aps[v[blk]].classes[js[blk] - 1].words()) {
            std::copy(u.begin(), u.end(), cur.begin() + blk * l1);
            blocks(v, blk + 1);
        }
    };
    const int k = int(l1);
    for (std::size_t wi = 0; wi < driver.size(); ++wi) {
        const Word& v = driver[wi];
        const Quasigroup& g = *qv[wi];
        std::vector<Symbol> args(l2 - 1, 1);
        for (;;) {
            Symbol j1 = g.value(args);
            js[0] = Symbol((int(j1) - 1 + offset) % k + 1);
            for (std::size_t i = 1; i < l2; ++i) js[i] = args[i - 1];
            blocks(v, 0);
            std::size_t i = l2 - 2;
            for (;;) {
                if (args[i] < k) {
                    ++args[i];
                    break;
                }
                args[i] = 1;
                if (i == 0) goto next_word;
                --i;
            }
        }
    next_word:;
    }
    return words;
}

} // namespace

Code theorem6_product(const std::vector<Partition>& a_partitions, const Code& b,
                      const ProductSpec& ps) {
    const int q = b.space().uniform_order();
    require(q >= 2 && is_prime_power(q), "ShapeMismatch", "driver must be q-ary");
    require((q - 1) * ps.m1 >= 2 && (q - 1) * ps.m2 >= 2, "DegenerateOrder",
            "(q-1)m_i - 2 must be nonnegative");
    const std::size_t l1 = ipow(q, ps.m1), l2 = ipow(q, ps.m2);
    require(l1 * l2 <= 16, "TooLarge", "product length exceeds 16");
    require(b.space().n() == l2, "ShapeMismatch", "driver length must be q^{m2}");
    require(is_rm_like(b, q, ps.m2, (q - 1) * ps.m2 - 2), "ShapeMismatch",
            "driver is not RM-like of order (q-1)m2-2");
    check_theorem6_inputs(a_partitions, q, ps.m1, l1);
    require(ps.qv.size() == b.size(), "BadQuasigroupShape",
            "one quasigroup per driver codeword");
    std::vector<const Quasigroup*> qv;
    qv.reserve(ps.qv.size());
    for (const Quasigroup& g : ps.qv) {
        require(g.order == int(l1) && g.arity == int(l2) - 1, "BadQuasigroupShape",
                "need arity q^{m2}-1 and order q^{m1}");
        require(is_latin(g), "BadQuasigroupShape", "assigned table is not Latin");
        qv.push_back(&g);
    }

    std::vector<Word> words = theorem6_emit(a_partitions, b.words(), qv, 0, l1, l2);
    std::uint64_t expect = ipow(q, int(l1 * l2) - (ps.m1 + ps.m2) - 1);
    require(words.size() == expect, "Internal",
            "|C| != q^{q^{m1+m2} - (m1+m2) - 1}");
    return Code(MixedSpace::uniform(q, int(l1 * l2)), std::move(words),
                Code::ZeroWord::optional);
}

Partition theorem6_family(const std::vector<Partition>& a_partitions,
                          const Partition& bp, const ProductSpec& ps) {
    const int q = bp.q;
    require(bp.m == ps.m2, "ShapeMismatch", "driver partition order mismatch");
    require((q - 1) * ps.m1 >= 2 && (q - 1) * ps.m2 >= 2, "DegenerateOrder",
            "(q-1)m_i - 2 must be nonnegative");
    PartitionCert bc = validate_partition(bp);
    require(bc.pass, "InvalidPartition", "driver partition: " + bc.detail);
    const std::size_t l1 = ipow(q, ps.m1), l2 = ipow(q, ps.m2);
    require(l1 * l2 <= 16, "TooLarge", "product length exceeds 16");
    check_theorem6_inputs(a_partitions, q, ps.m1, l1);
    require(ps.qv.size() == bp.target.size(), "BadQuasigroupShape",
            "one quasigroup per target codeword");
    for (const Quasigroup& g : ps.qv) {
        require(g.order == int(l1) && g.arity == int(l2) - 1, "BadQuasigroupShape",
                "need arity q^{m2}-1 and order q^{m1}");
        require(is_latin(g), "BadQuasigroupShape", "assigned table is not Latin");
    }

    std::vector<Code> a_targets;
    a_targets.reserve(a_partitions.size());
    for (const Partition& ap : a_partitions) a_targets.push_back(ap.target);
    Code target = prop1_product(a_targets, bp.target);

    std::vector<Code> classes;
    classes.reserve(l1 * l2);
    for (std::size_t t = 0; t < bp.classes.size(); ++t) {
        const std::vector<Word>& driver = bp.classes[t].words();
        std::vector<const Quasigroup*> qv;
        qv.reserve(driver.size());
        for (const Word& v : driver) {
            const std::vector<Word>& tw = bp.target.words();
            auto it = std::lower_bound(tw.begin(), tw.end(), v);
            require(it != tw.end() && *it == v, "Internal",
                    "class word missing from target");
            qv.push_back(&ps.qv[std::size_t(it - tw.begin())]);
        }
        for (int s = 0; s < int(l1); ++s) {
            std::vector<Word> words =
                theorem6_emit(a_partitions, driver, qv, s, l1, l2);
            std::sort(words.begin(), words.end());
            classes.emplace_back(target.space(), std::move(words),
                                 Code::ZeroWord::optional);
        }
    }
    require(classes.size() == l1 * l2, "Internal", "sibling count != q^{m1+m2}");
    return Partition{std::move(target), std::move(classes), q, ps.m1 + ps.m2};
}

} // namespace perfmix
