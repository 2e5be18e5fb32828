#include "perfmix/grm.hpp"

#include "perfmix/error.hpp"
#include "perfmix/scan.hpp"

#include <algorithm>

namespace perfmix {

namespace {

void check_params(int q, int m, int r) {
    require(is_prime_power(q) && q >= 2 && q <= 16, "NotPrimePower",
            "order " + std::to_string(q));
    require(m >= 1 && m <= 16, "Unsupported", "need 1 <= m <= 16");
    require(r >= 0 && r <= (q - 1) * m, "DegreeOutOfRange",
            "need 0 <= r <= (q-1)m");
}

// C(x, y) with the convention 0 when y < 0 or x < y. The complementary
// index x-y stays tiny (m-1 at most) in every use here.
std::int64_t binom(std::int64_t x, std::int64_t y) {
    if (y < 0 || x < y) return 0;
    y = std::min(y, x - y);
    __int128 acc = 1;
    for (std::int64_t i = 1; i <= y; ++i) {
        acc = acc * (x - y + i) / i;
        require(acc < (__int128(1) << 62), "Unsupported", "binomial overflow");
    }
    return std::int64_t(acc);
}

// monomial exponent tuples with entries <= q-1 and total degree <= r,
// graded lexicographic (degree ascending, then lex)
std::vector<std::vector<int>> monomials_upto(int q, int m, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(m, 0);
    std::vector<std::vector<int>> all;
    for (;;) {
        int deg = 0;
        for (int v : e) deg += v;
        if (deg <= r) all.push_back(e);
        int i = m - 1;
        while (i >= 0 && e[i] == q - 1) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         int da = 0, db = 0;
                         for (int v : a) da += v;
                         for (int v : b) db += v;
                         return da != db ? da < db : a < b;
                     });
    return all;
}

} // namespace

std::int64_t grm_dimension(int q, int m, int r) {
    check_params(q, m, r);
    std::int64_t total = 0;
    for (int i = 0; i <= r; ++i)
        for (int k = 0; k <= m; ++k) {
            std::int64_t term = binom(m, k) * binom(i - k * q + m - 1, i - k * q);
            total += (k % 2 == 0) ? term : -term;
        }
    return total;
}

std::int64_t grm_min_distance(int q, int m, int r) {
    check_params(q, m, r);
    int a = r / (q - 1), b = r % (q - 1);
    if (a == m) return 1; // r = (q-1)m, the full space
    std::int64_t d = q - b;
    for (int i = 0; i < m - a - 1; ++i) d *= q;
    return d;
}

GrmCode grm_generate(int q, int m, int r) {
    check_params(q, m, r);
    std::int64_t npoints = 1;
    for (int i = 0; i < m; ++i) {
        npoints *= q;
        require(npoints <= (std::int64_t(1) << 20), "SpaceTooLarge",
                "q^m exceeds the evaluation gate");
    }
    const FieldTable& F = field(q);

    GrmCode gc;
    gc.q = q;
    gc.m = m;
    gc.r = r;
    gc.monomials = monomials_upto(q, m, r);

    // pow_tab[s][e] = s^e, with 0^0 = 1 so constants evaluate correctly
    std::vector<std::vector<Symbol>> pow_tab(q, std::vector<Symbol>(q, 1));
    for (int s = 0; s < q; ++s)
        for (int e = 1; e < q; ++e)
            pow_tab[s][e] = F.mul(pow_tab[s][e - 1], Symbol(s));

    gc.gen = Matrix(q, gc.monomials.size(), std::size_t(npoints));
    std::vector<int> pt(m, 0);
    for (std::size_t col = 0;; ++col) {
        for (std::size_t row = 0; row < gc.monomials.size(); ++row) {
            Symbol v = 1;
            const std::vector<int>& e = gc.monomials[row];
            for (int i = 0; i < m; ++i) v = F.mul(v, pow_tab[pt[i]][e[i]]);
            gc.gen.at(row, col) = v;
        }
        int i = m - 1;
        while (i >= 0 && pt[i] == q - 1) pt[i--] = 0;
        if (i < 0) break;
        ++pt[i];
    }

    std::int64_t k = grm_dimension(q, m, r);
    require(std::int64_t(rank(gc.gen)) == k, "Internal",
            "evaluation matrix rank does not match the dimension formula");
    return gc;
}

Code grm_expand(const GrmCode& gc, std::uint64_t gate) {
    const FieldTable& F = field(gc.q);
    const std::size_t k = gc.gen.rows, n = gc.gen.cols;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= std::uint64_t(gc.q);
        require(count <= gate, "SpaceTooLarge", "q^k exceeds the expansion gate");
    }
    std::vector<Word> words;
    words.reserve(count);
    std::vector<Symbol> u(k, 0);
    for (;;) {
        Word w(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (u[i] == 0) continue;
            const Symbol* row = gc.gen.row(i);
            for (std::size_t j = 0; j < n; ++j)
                w[j] = F.add(w[j], F.mul(u[i], row[j]));
        }
        words.push_back(std::move(w));
        std::size_t i = k;
        while (i-- > 0) {
            if (++u[i] < gc.q) break;
            u[i] = 0;
            if (i == 0) return Code(MixedSpace::uniform(gc.q, int(n)), std::move(words));
        }
    }
}

std::vector<Symbol> grm_min_weight_word(const GrmCode& gc) {
    const FieldTable& F = field(gc.q);
    const int q = gc.q, m = gc.m, r = gc.r;
    int a = r / (q - 1), b = r % (q - 1);
    const std::size_t n = gc.gen.cols;
    std::vector<Symbol> w(n, 0);
    std::vector<int> pt(m, 0);
    for (std::size_t col = 0;; ++col) {
        // f = prod_{i<a} (1 - X_i^{q-1}) * prod_{j<b} (X_a - j)
        Symbol v = 1;
        for (int i = 0; i < a; ++i)
            v = F.mul(v, F.sub(1, F.pow(Symbol(pt[i]), q - 1)));
        for (int j = 0; j < b; ++j)
            v = F.mul(v, F.sub(Symbol(pt[a]), Symbol(j)));
        w[col] = v;
        int i = m - 1;
        while (i >= 0 && pt[i] == q - 1) pt[i--] = 0;
        if (i < 0) break;
        ++pt[i];
    }
    return w;
}

bool is_rm_like(const Code& c, int q, int m, int r) {
    check_params(q, m, r);
    if (c.space().uniform_order() != q) return false;
    std::int64_t n = 1;
    for (int i = 0; i < m; ++i) n *= q;
    if (std::int64_t(c.space().n()) != n) return false;
    std::int64_t size = 1;
    std::int64_t k = grm_dimension(q, m, r);
    for (std::int64_t i = 0; i < k; ++i) size *= q;
    if (std::int64_t(c.size()) != size) return false;
    if (c.size() < 2) return true;
    PackedCode pc = pack_words(c.words());
    return min_distance_scan_omp(pc) == grm_min_distance(q, m, r);
}

Matrix grm_dual_basis(const GrmCode& gc) { return null_space(gc.gen); }

} // namespace perfmix
