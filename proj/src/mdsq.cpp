#include "perfmix/mdsq.hpp"

#include "perfmix/error.hpp"
#include "perfmix/scan.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace perfmix {

std::size_t qg_cells(int order, int arity) {
    require(order >= 1, "BadParameters", "quasigroup order must be positive");
    require(arity >= 1, "BadParameters", "quasigroup arity must be positive");
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) {
        cells *= std::size_t(order);
        require(cells <= (std::size_t(1) << 20), "TooLarge",
                "quasigroup table exceeds the 2^20 cell gate");
    }
    return cells;
}

Symbol Quasigroup::value(const std::vector<Symbol>& args) const {
    require(int(args.size()) == arity, "ShapeMismatch", "argument count");
    std::size_t idx = 0;
    for (Symbol a : args) {
        require(a >= 1 && a <= order, "BadSymbol", "argument out of {1..k}");
        idx = idx * order + (a - 1);
    }
    return table[idx];
}

Quasigroup qg_from_table(int order, int arity, std::vector<Symbol> table) {
    std::size_t cells = qg_cells(order, arity);
    require(table.size() == cells, "ShapeMismatch", "table size != order^arity");
    for (Symbol v : table)
        require(v >= 1 && v <= order, "BadSymbol", "table value out of {1..k}");
    Quasigroup g;
    g.order = order;
    g.arity = arity;
    g.table = std::move(table);
    return g;
}

namespace {

// line id for a cell along `axis`: the mixed-radix index with that digit
// removed. Cells of one line differ only in the axis digit.
std::size_t line_of(std::size_t cell, int axis, int order, int arity) {
    std::vector<std::size_t> digits(arity);
    for (int i = arity - 1; i >= 0; --i) {
        digits[i] = cell % order;
        cell /= order;
    }
    std::size_t line = 0;
    for (int i = 0; i < arity; ++i)
        if (i != axis) line = line * order + digits[i];
    return line;
}

bool latin_lines(const Quasigroup& g, int lead_lo, int lead_hi) {
    // check every line whose cells' leading digit ranges over [lead_lo, lead_hi)
    // for axis 0, plus all other axes restricted to that leading-digit band
    const int k = g.order, ar = g.arity;
    const std::size_t cells = g.cells();
    std::size_t block = cells / k; // cells per leading digit
    // axis 0 lines: one per suffix index, only when the caller owns lead 0
    if (lead_lo == 0) {
        for (std::size_t suf = 0; suf < block; ++suf) {
            unsigned mask = 0;
            for (int d = 0; d < k; ++d)
                mask |= 1u << (g.table[std::size_t(d) * block + suf] - 1);
            if (mask != (1u << k) - 1) return false;
        }
    }
    // other axes: lines live entirely inside one leading-digit block
    for (int lead = lead_lo; lead < lead_hi; ++lead) {
        for (int axis = 1; axis < ar; ++axis) {
            // stride of the axis digit within the block
            std::size_t stride = 1;
            for (int i = ar - 1; i > axis; --i) stride *= k;
            for (std::size_t base = 0; base < block; ++base) {
                if ((base / stride) % k != 0) continue; // not a line start
                unsigned mask = 0;
                for (int d = 0; d < k; ++d)
                    mask |= 1u
                            << (g.table[std::size_t(lead) * block + base + d * stride] -
                                1);
                if (mask != (1u << k) - 1) return false;
            }
        }
    }
    return true;
}

} // namespace

bool is_latin_serial(const Quasigroup& g) {
    if (g.arity == 0 || g.table.size() != qg_cells(g.order, g.arity)) return false;
    for (Symbol v : g.table)
        if (v < 1 || v > g.order) return false;
    return latin_lines(g, 0, g.order);
}

bool is_latin(const Quasigroup& g) {
    if (g.arity == 0 || g.table.size() != qg_cells(g.order, g.arity)) return false;
    for (Symbol v : g.table)
        if (v < 1 || v > g.order) return false;
    bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(&& : ok)
#endif
    for (int lead = 0; lead < g.order; ++lead)
        ok = ok && latin_lines(g, lead, lead + 1);
    return ok;
}

Quasigroup qg_affine(int order, int arity, Symbol c, const std::vector<Symbol>& lambda) {
    std::size_t cells = qg_cells(order, arity);
    require(int(lambda.size()) == arity, "ShapeMismatch", "one lambda per argument");
    Quasigroup g;
    g.order = order;
    g.arity = arity;
    g.table.assign(cells, 1);
    if (order == 1) return g;
    const FieldTable& F = field(order);
    for (Symbol l : lambda)
        require(l >= 1 && l < order, "BadParameters", "lambda must be invertible");
    std::vector<Symbol> x(arity, 0); // 0-based indices
    for (std::size_t idx = 0;; ++idx) {
        Symbol acc = c;
        for (int i = 0; i < arity; ++i) acc = F.add(acc, F.mul(lambda[i], x[i]));
        g.table[idx] = Symbol(acc + 1);
        int i = arity - 1;
        while (i >= 0 && x[i] == order - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return g;
}

Quasigroup qg_cyclic(int order, int arity, int c) {
    std::size_t cells = qg_cells(order, arity);
    Quasigroup g;
    g.order = order;
    g.arity = arity;
    g.table.assign(cells, 1);
    std::vector<int> x(arity, 0);
    for (std::size_t idx = 0;; ++idx) {
        int acc = c;
        for (int v : x) acc += v;
        g.table[idx] = Symbol(acc % order + 1);
        int i = arity - 1;
        while (i >= 0 && x[i] == order - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return g;
}

namespace {

bool is_perm_1based(const std::vector<Symbol>& p, int k) {
    if (int(p.size()) != k) return false;
    unsigned mask = 0;
    for (Symbol v : p) {
        if (v < 1 || v > k) return false;
        mask |= 1u << (v - 1);
    }
    return mask == (1u << k) - 1;
}

} // namespace

Quasigroup qg_isotope(const Quasigroup& g, const std::vector<std::vector<Symbol>>& argperm,
                      const std::vector<Symbol>& symperm) {
    require(int(argperm.size()) == g.arity, "ShapeMismatch",
            "one argument permutation per axis");
    for (const auto& p : argperm)
        require(is_perm_1based(p, g.order), "BadParameters", "argperm not a permutation");
    require(is_perm_1based(symperm, g.order), "BadParameters",
            "symperm not a permutation");
    Quasigroup out = g;
    std::vector<Symbol> x(g.arity, 1), y(g.arity, 1);
    for (std::size_t idx = 0;; ++idx) {
        for (int i = 0; i < g.arity; ++i) y[i] = argperm[i][x[i] - 1];
        out.table[idx] = symperm[g.value(y) - 1];
        int i = g.arity - 1;
        while (i >= 0 && x[i] == g.order) x[i--] = 1;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

bool qg_isotopic2(const Quasigroup& a, const Quasigroup& b) {
    require(a.arity == 2 && b.arity == 2, "Unsupported", "binary quasigroups only");
    if (a.order != b.order) return false;
    require(a.order <= 5, "TooLarge", "exhaustive isotopy limited to order 5");
    const int k = a.order;
    std::vector<Symbol> rowp(k), colp(k), symp(k);
    std::iota(rowp.begin(), rowp.end(), Symbol(1));
    do {
        std::iota(colp.begin(), colp.end(), Symbol(1));
        do {
            std::iota(symp.begin(), symp.end(), Symbol(1));
            do {
                bool match = true;
                for (int x = 1; x <= k && match; ++x)
                    for (int y = 1; y <= k && match; ++y) {
                        Symbol lhs = symp[a.table[std::size_t(x - 1) * k + (y - 1)] - 1];
                        Symbol rhs = b.table[std::size_t(rowp[x - 1] - 1) * k +
                                             (colp[y - 1] - 1)];
                        match = (lhs == rhs);
                    }
                if (match) return true;
            } while (std::next_permutation(symp.begin(), symp.end()));
        } while (std::next_permutation(colp.begin(), colp.end()));
    } while (std::next_permutation(rowp.begin(), rowp.end()));
    return false;
}

bool orthogonal_pair_check(const Quasigroup& h1, const Quasigroup& h2) {
    require(h1.order == h2.order && h1.arity == h2.arity, "ShapeMismatch",
            "orthogonality needs equal shape");
    const int k = h1.order, ar = h1.arity;
    if (ar < 2) fail("ShapeMismatch", "orthogonality needs arity >= 2");
    const std::size_t cells = h1.cells();
    std::vector<std::size_t> stride(ar, 1);
    for (int i = ar - 2; i >= 0; --i) stride[i] = stride[i + 1] * k;
    std::vector<char> seen(std::size_t(k) * k);
    for (int i = 0; i < ar; ++i)
        for (int j = i + 1; j < ar; ++j) {
            // enumerate slices: all cells with digits i, j equal to 0
            for (std::size_t base = 0; base < cells; ++base) {
                if ((base / stride[i]) % k != 0 || (base / stride[j]) % k != 0)
                    continue;
                std::fill(seen.begin(), seen.end(), 0);
                for (int x = 0; x < k; ++x)
                    for (int y = 0; y < k; ++y) {
                        std::size_t cell = base + x * stride[i] + y * stride[j];
                        std::size_t pair =
                            std::size_t(h1.table[cell] - 1) * k + (h2.table[cell] - 1);
                        if (seen[pair]) return false;
                        seen[pair] = 1;
                    }
            }
        }
    return true;
}

std::vector<Quasigroup> quasigroup_library(int order, int arity) {
    qg_cells(order, arity);
    std::vector<Quasigroup> out;
    if (order == 1) {
        Quasigroup g;
        g.order = 1;
        g.arity = arity;
        g.table.assign(qg_cells(order, arity), 1);
        out.push_back(std::move(g));
        return out;
    }
    if (is_prime_power(order)) {
        // all (q-1)^arity * q affine quasigroups, constants varying fastest
        std::vector<Symbol> lam(arity, 1);
        for (;;) {
            for (int c = 0; c < order; ++c)
                out.push_back(qg_affine(order, arity, Symbol(c), lam));
            int i = arity - 1;
            while (i >= 0 && lam[i] == order - 1) lam[i--] = 1;
            if (i < 0) break;
            ++lam[i];
        }
    } else {
        for (int c = 0; c < order; ++c) out.push_back(qg_cyclic(order, arity, c));
    }
    if (order == 4 && arity == 2) out.push_back(qg_cyclic(4, 2));
    for (const Quasigroup& g : out)
        require(is_latin(g), "Internal", "library emitted a non-Latin table");
    return out;
}

std::vector<Quasigroup> enumerate_quasigroups(int order, int arity,
                                              std::uint64_t cell_gate) {
    std::size_t cells = qg_cells(order, arity);
    require(cells <= cell_gate, "TooLarge", "exhaustive search gate");
    const int k = order, ar = arity;
    // per-axis line ids and per-line used-symbol masks
    std::vector<std::size_t> lid(cells * ar);
    std::size_t nlines = cells / k;
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (int axis = 0; axis < ar; ++axis)
            lid[cell * ar + axis] = line_of(cell, axis, k, ar);
    std::vector<unsigned> used(ar * nlines, 0);
    std::vector<Symbol> table(cells, 0);
    std::vector<Quasigroup> out;
    const unsigned full = (1u << k) - 1;

    std::function<void(std::size_t)> rec = [&](std::size_t cell) {
        if (cell == cells) {
            Quasigroup g;
            g.order = k;
            g.arity = ar;
            g.table = table;
            out.push_back(std::move(g));
            return;
        }
        unsigned avail = full;
        for (int axis = 0; axis < ar; ++axis)
            avail &= ~used[axis * nlines + lid[cell * ar + axis]];
        while (avail) {
            unsigned bit = avail & (~avail + 1);
            avail ^= bit;
            int v = __builtin_ctz(bit);
            table[cell] = Symbol(v + 1);
            for (int axis = 0; axis < ar; ++axis)
                used[axis * nlines + lid[cell * ar + axis]] |= bit;
            rec(cell + 1);
            for (int axis = 0; axis < ar; ++axis)
                used[axis * nlines + lid[cell * ar + axis]] &= ~bit;
        }
    };
    rec(0);
    return out;
}

Mds2Cert is_mds2(const Code& c) {
    Mds2Cert cert;
    cert.n = int(c.space().n());
    cert.size = c.size();
    const int q = c.space().uniform_order();
    if (q < 0) {
        cert.detail = "mixed alphabet";
        return cert;
    }
    cert.expect = c.space().size() / std::uint64_t(q);
    bool size_ok = (cert.size == cert.expect);

    // route A: full pairwise scan
    cert.d = (c.size() >= 2) ? minimum_distance(c) : -1;
    bool dist_ok = (cert.d == 2);

    // route B: deleting any one coordinate is injective (no distance-1 pair)
    bool delete_ok = true;
    const std::size_t n = c.space().n();
    for (std::size_t skip = 0; skip < n && delete_ok; ++skip) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(c.size() * 2);
        for (const Word& w : c.words()) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (i != skip) key = key * q + w[i];
            if (!seen.insert(key).second) {
                delete_ok = false;
                break;
            }
        }
    }
    // the two distance criteria must agree: d >= 2 iff every deletion injective
    require((cert.d != 1) == delete_ok, "Internal",
            "distance scan and deletion route disagree");

    if (!size_ok)
        cert.detail = "size " + std::to_string(cert.size) + " != q^{n-1} = " +
                      std::to_string(cert.expect);
    else if (!dist_ok)
        cert.detail = "minimum distance " + std::to_string(cert.d) + " != 2";
    cert.pass = size_ok && dist_ok;
    return cert;
}

Code code_from_quasigroup(const Quasigroup& g) {
    require(is_latin(g), "NotLatin", "table is not uniquely invertible");
    const int q = g.order;
    require(is_prime_power(q), "NotPrimePower", "code alphabet must be a field");
    MixedSpace sp = MixedSpace::uniform(q, g.arity + 1);
    std::vector<Word> words;
    words.reserve(g.cells());
    std::vector<Symbol> x(g.arity, 0); // 0-based
    for (std::size_t idx = 0;; ++idx) {
        Word w(x.begin(), x.end());
        w.push_back(Symbol(g.table[idx] - 1));
        words.push_back(std::move(w));
        int i = g.arity - 1;
        while (i >= 0 && x[i] == q - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return Code(sp, std::move(words), Code::ZeroWord::optional);
}

Quasigroup quasigroup_from_code(const Code& c) {
    Mds2Cert cert = is_mds2(c);
    require(cert.pass, "NotMds2", "not a distance-2 MDS code: " + cert.detail);
    const int q = c.space().uniform_order();
    const int ar = int(c.space().n()) - 1;
    Quasigroup g;
    g.order = q;
    g.arity = ar;
    g.table.assign(qg_cells(q, ar), 0);
    for (const Word& w : c.words()) {
        std::size_t idx = 0;
        for (int i = 0; i < ar; ++i) idx = idx * q + w[i];
        g.table[idx] = Symbol(w[ar] + 1);
    }
    require(is_latin(g), "Internal", "MDS code did not yield a Latin table");
    return g;
}

Code linear_mds2(int q, int n) {
    require(is_prime_power(q), "NotPrimePower", "alphabet must be a field");
    require(n >= 2 && n <= 16, "Unsupported", "length out of range");
    const FieldTable& F = field(q);
    MixedSpace sp = MixedSpace::uniform(q, n);
    std::uint64_t count = sp.size() / q;
    require(count <= (std::uint64_t(1) << 20), "Unsupported",
            "zero-sum code too large to materialize");
    std::vector<Word> words;
    words.reserve(count);
    Word x(std::size_t(n) - 1, 0);
    for (;;) {
        Symbol s = 0;
        for (Symbol v : x) s = F.add(s, v);
        Word w(x.begin(), x.end());
        w.push_back(F.neg(s));
        words.push_back(std::move(w));
        int i = n - 2;
        while (i >= 0 && x[i] == q - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return Code(sp, std::move(words));
}

} // namespace perfmix
