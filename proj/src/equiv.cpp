#include "perfmix/equiv.hpp"

#include "perfmix/error.hpp"
#include "perfmix/scan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace perfmix {

std::vector<std::uint64_t> distance_distribution(const Code& c) {
    std::vector<std::uint64_t> hist(c.space().n() + 1, 0);
    PackedCode pc = pack_words(c.words());
    for (std::size_t i = 0; i + 1 < pc.nwords; ++i)
        for (std::size_t j = i + 1; j < pc.nwords; ++j)
            ++hist[packed_distance(pc.row(i), pc.row(j), pc.limbs)];
    return hist;
}

std::vector<std::vector<std::uint64_t>> coordinate_spectra(const Code& c) {
    std::vector<std::vector<std::uint64_t>> spectra;
    for (std::size_t i = 0; i < c.space().n(); ++i) {
        std::vector<std::uint64_t> counts(c.space().order(i), 0);
        for (const Word& w : c.words()) ++counts[w[i]];
        std::sort(counts.begin(), counts.end());
        spectra.push_back(std::move(counts));
    }
    return spectra;
}

namespace {

struct Search {
    const Code& a;
    const Code& b;
    std::size_t n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;

    // raw per-coordinate symbol counts (unsorted)
    std::vector<std::vector<std::uint64_t>> cnt_a, cnt_b;
    // bprefix[j] = sorted multiset of length-(j+1) prefixes of b's words
    std::vector<std::vector<Word>> bprefix;

    std::vector<bool> used_source;
    std::vector<std::size_t> chosen_src; // per target level
    std::vector<std::vector<Symbol>> chosen_pi;
    std::vector<Word> cur; // partial images of a's words, one per word

    EquivWitness found;

    Search(const Code& a_, const Code& b_, std::uint64_t budget_)
        : a(a_), b(b_), n(a_.space().n()), budget(budget_) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint64_t> ca(a.space().order(i), 0),
                cb(b.space().order(i), 0);
            for (const Word& w : a.words()) ++ca[w[i]];
            for (const Word& w : b.words()) ++cb[w[i]];
            cnt_a.push_back(std::move(ca));
            cnt_b.push_back(std::move(cb));
        }
        bprefix.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            bprefix[j].reserve(b.words().size());
            for (const Word& w : b.words())
                bprefix[j].emplace_back(w.begin(), w.begin() + j + 1);
            // b's words are sorted, so their prefixes already are
        }
        used_source.assign(n, false);
        cur.assign(a.words().size(), Word());
        for (Word& w : cur) w.reserve(n);
    }

    // enumerate symbol bijections from source coordinate i to target column j
    // compatible with the frequency counts, invoking fn on each
    template <typename Fn>
    bool for_each_pi(std::size_t i, std::size_t j, Fn fn) {
        const int q = a.space().order(i);
        std::vector<Symbol> pi(q, 0);
        std::vector<bool> taken(q, false);
        std::function<bool(int)> rec = [&](int s) -> bool {
            if (s == q) return fn(pi);
            for (int t = 0; t < q; ++t) {
                if (taken[t] || cnt_a[i][s] != cnt_b[j][t]) continue;
                taken[t] = true;
                pi[s] = Symbol(t);
                if (rec(s + 1)) return true;
                taken[t] = false;
            }
            return false;
        };
        return rec(0);
    }

    bool descend(std::size_t j) {
        if (j == n) {
            found.sigma.assign(n, 0);
            found.pi.assign(n, {});
            for (std::size_t lvl = 0; lvl < n; ++lvl) {
                found.sigma[chosen_src[lvl]] = lvl;
                found.pi[chosen_src[lvl]] = chosen_pi[lvl];
            }
            return true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (used_source[i]) continue;
            if (a.space().order(i) != b.space().order(j)) continue;
            bool hit = for_each_pi(i, j, [&](const std::vector<Symbol>& pi) -> bool {
                if (++nodes > budget) {
                    exhausted_budget = true;
                    return true; // unwind
                }
                // extend images and compare against b's prefix multiset
                std::vector<Word> ext(cur);
                for (std::size_t w = 0; w < ext.size(); ++w)
                    ext[w].push_back(pi[a.words()[w][i]]);
                std::vector<Word> sorted_ext = ext;
                std::sort(sorted_ext.begin(), sorted_ext.end());
                if (sorted_ext != bprefix[j]) return false;
                used_source[i] = true;
                chosen_src.push_back(i);
                chosen_pi.push_back(pi);
                std::vector<Word> saved;
                saved.swap(cur);
                cur = std::move(ext);
                bool ok = descend(j + 1);
                if (!ok) {
                    cur.swap(saved);
                    chosen_src.pop_back();
                    chosen_pi.pop_back();
                    used_source[i] = false;
                }
                return ok;
            });
            if (hit) return !exhausted_budget;
            if (exhausted_budget) return false;
        }
        return false;
    }
};

} // namespace

Code apply_witness(const Code& c, const EquivWitness& w) {
    require(w.sigma.size() == c.space().n(), "LengthMismatch", "witness arity");
    std::vector<int> orders(c.space().n());
    for (std::size_t i = 0; i < w.sigma.size(); ++i)
        orders[w.sigma[i]] = c.space().order(i);
    std::vector<Word> out;
    out.reserve(c.words().size());
    for (const Word& x : c.words()) {
        Word y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[w.sigma[i]] = w.pi[i][x[i]];
        out.push_back(std::move(y));
    }
    return Code(MixedSpace(orders), std::move(out), Code::ZeroWord::optional);
}

EquivResult are_equivalent(const Code& a, const Code& b, std::uint64_t budget) {
    require(a.space() == b.space(), "SpaceMismatch",
            "equivalence is defined over a common space");
    EquivResult res;
    if (a.size() != b.size()) {
        res.verdict = EquivVerdict::nonequivalent;
        res.detail = "code sizes differ";
        return res;
    }
    if (distance_distribution(a) != distance_distribution(b)) {
        res.verdict = EquivVerdict::nonequivalent;
        res.detail = "distance distributions differ";
        return res;
    }
    {
        // multiset of (order, sorted spectrum) over coordinates
        auto sa = coordinate_spectra(a), sb = coordinate_spectra(b);
        std::multiset<std::pair<int, std::vector<std::uint64_t>>> ma, mb;
        for (std::size_t i = 0; i < sa.size(); ++i) {
            ma.emplace(a.space().order(i), sa[i]);
            mb.emplace(b.space().order(i), sb[i]);
        }
        if (ma != mb) {
            res.verdict = EquivVerdict::nonequivalent;
            res.detail = "coordinate symbol spectra differ";
            return res;
        }
    }

    Search s(a, b, budget);
    bool hit = s.descend(0);
    res.nodes = s.nodes;
    if (hit) {
        res.verdict = EquivVerdict::equivalent;
        res.witness = s.found;
        require(apply_witness(a, res.witness) == b, "Internal",
                "equivalence witness failed verification");
        res.detail = "witness verified";
    } else if (s.exhausted_budget) {
        res.verdict = EquivVerdict::unknown;
        res.detail = "search budget exhausted";
    } else {
        res.verdict = EquivVerdict::nonequivalent;
        res.detail = "exhaustive search found no witness";
    }
    return res;
}

} // namespace perfmix
