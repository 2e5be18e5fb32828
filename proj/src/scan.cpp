#include "perfmix/scan.hpp"

#include "perfmix/error.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

namespace perfmix {

namespace {

// prefix-OR folds every byte onto its bit 0; the popcount then counts
// nonzero bytes of x
inline int nonzero_bytes(std::uint64_t x) {
    x |= x >> 4;
    x |= x >> 2;
    x |= x >> 1;
    x &= 0x0101010101010101ull;
    return __builtin_popcountll(x);
}

} // namespace

int packed_weight(const std::uint64_t* row, std::size_t limbs) {
    int w = 0;
    for (std::size_t i = 0; i < limbs; ++i) w += nonzero_bytes(row[i]);
    return w;
}

int packed_distance(const std::uint64_t* a, const std::uint64_t* b, std::size_t limbs) {
    int d = 0;
    for (std::size_t i = 0; i < limbs; ++i) d += nonzero_bytes(a[i] ^ b[i]);
    return d;
}

PackedCode pack_words(const std::vector<Word>& words) {
    PackedCode pc;
    pc.nwords = words.size();
    std::size_t n = words.empty() ? 0 : words[0].size();
    pc.limbs = (n + 7) / 8;
    if (pc.limbs == 0) pc.limbs = 1;
    pc.data.assign(pc.nwords * pc.limbs, 0);
    for (std::size_t i = 0; i < words.size(); ++i)
        std::memcpy(pc.data.data() + i * pc.limbs, words[i].data(), words[i].size());
    return pc;
}

int min_distance_scan_serial(const PackedCode& pc, int floor) {
    require(pc.nwords >= 2, "DegenerateCode", "minimum distance needs >= 2 words");
    int best = 8 * int(pc.limbs) + 1;
    for (std::size_t i = 0; i + 1 < pc.nwords; ++i) {
        const std::uint64_t* a = pc.row(i);
        for (std::size_t j = i + 1; j < pc.nwords; ++j) {
            int d = packed_distance(a, pc.row(j), pc.limbs);
            if (d < best) {
                best = d;
                if (best <= floor) return best;
            }
        }
    }
    return best;
}

int min_distance_scan_omp(const PackedCode& pc, int floor) {
    require(pc.nwords >= 2, "DegenerateCode", "minimum distance needs >= 2 words");
    const std::size_t n = pc.nwords;
    int best = 8 * int(pc.limbs) + 1;
#ifdef _OPENMP
#pragma omp parallel
    {
        int local = 8 * int(pc.limbs) + 1;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long i = 0; i < (long long)n - 1; ++i) {
            if (local <= floor) continue; // this thread is already done
            const std::uint64_t* a = pc.row(std::size_t(i));
            for (std::size_t j = std::size_t(i) + 1; j < n; ++j) {
                int d = packed_distance(a, pc.row(j), pc.limbs);
                if (d < local) {
                    local = d;
                    if (local <= floor) break;
                }
            }
        }
#pragma omp critical
        best = std::min(best, local);
    }
    // identical floor semantics as the serial kernel: with a certified floor
    // the exact minimum is unique, so thread order cannot change the result
    return best;
#else
    return min_distance_scan_serial(pc, floor);
#endif
}

namespace {

constexpr std::uint8_t kUnset = 0xff;

void check_gate(std::uint64_t size, std::uint64_t gate) {
    require(gate <= kGateCeiling, "GateTooLarge", "gate exceeds hard ceiling 2^28");
    require(size <= gate, "SpaceTooLarge",
            "space of size " + std::to_string(size) + " exceeds scan gate " +
                std::to_string(gate));
}

std::vector<std::uint8_t> seed_distances(const MixedSpace& sp,
                                         const std::vector<Word>& words) {
    std::vector<std::uint8_t> dist(sp.size(), kUnset);
    for (const Word& w : words) dist[sp.index_of(w)] = 0;
    return dist;
}

} // namespace

int covering_radius_naive(const MixedSpace& sp, const std::vector<Word>& words,
                          std::uint64_t gate) {
    check_gate(sp.size(), gate);
    require(!words.empty(), "DegenerateCode", "covering radius of empty set");
    int rho = 0;
    Word w(sp.n(), 0);
    for (std::uint64_t idx = 0; idx < sp.size(); ++idx) {
        int best = int(sp.n()) + 1;
        for (const Word& c : words) {
            int d = 0;
            for (std::size_t i = 0; i < w.size() && d < best; ++i) d += (w[i] != c[i]);
            if (d < best) best = d;
        }
        rho = std::max(rho, best);
        // lexicographic odometer, last coordinate fastest
        for (std::size_t i = sp.n(); i-- > 0;) {
            if (++w[i] < sp.order(i)) break;
            w[i] = 0;
        }
    }
    return rho;
}

int covering_radius_bfs_serial(const MixedSpace& sp, const std::vector<Word>& words,
                               std::uint64_t gate) {
    check_gate(sp.size(), gate);
    require(!words.empty(), "DegenerateCode", "covering radius of empty set");
    std::vector<std::uint8_t> dist = seed_distances(sp, words);
    std::vector<std::uint64_t> frontier;
    frontier.reserve(words.size());
    for (const Word& w : words) frontier.push_back(sp.index_of(w));
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

    int level = 0;
    std::vector<std::uint64_t> next;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t idx : frontier) {
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < sp.n(); ++i) {
                const std::uint64_t stride = sp.stride(i);
                const int q = sp.order(i);
                const int digit = int(rest / stride);
                rest -= std::uint64_t(digit) * stride;
                const std::uint64_t base = idx - std::uint64_t(digit) * stride;
                for (int s = 0; s < q; ++s) {
                    if (s == digit) continue;
                    const std::uint64_t nb = base + std::uint64_t(s) * stride;
                    if (dist[nb] == kUnset) {
                        dist[nb] = std::uint8_t(level + 1);
                        next.push_back(nb);
                    }
                }
            }
        }
        if (next.empty()) break;
        ++level;
        frontier.swap(next);
    }
    return level;
}

int covering_radius_bfs_omp(const MixedSpace& sp, const std::vector<Word>& words,
                            std::uint64_t gate) {
#ifndef _OPENMP
    return covering_radius_bfs_serial(sp, words, gate);
#else
    check_gate(sp.size(), gate);
    require(!words.empty(), "DegenerateCode", "covering radius of empty set");
    std::vector<std::uint8_t> dist = seed_distances(sp, words);
    const std::uint64_t total = sp.size();
    std::uint64_t unset = 0;
    for (std::uint64_t i = 0; i < total; ++i) unset += (dist[i] == kUnset);

    std::vector<std::uint8_t> claim(total, 0);
    int level = 0;
    while (unset > 0) {
        // pull phase: a word joins level+1 if any neighbour sits at `level`.
        // dist is read-only here and claim[idx] is written by iteration idx
        // alone, so the result is independent of scheduling.
        std::uint64_t claimed = 0;
#pragma omp parallel for schedule(static) reduction(+ : claimed)
        for (long long sidx = 0; sidx < (long long)total; ++sidx) {
            const std::uint64_t idx = std::uint64_t(sidx);
            if (dist[idx] != kUnset) continue;
            std::uint64_t rest = idx;
            bool touch = false;
            for (std::size_t i = 0; i < sp.n() && !touch; ++i) {
                const std::uint64_t stride = sp.stride(i);
                const int q = sp.order(i);
                const int digit = int(rest / stride);
                rest -= std::uint64_t(digit) * stride;
                const std::uint64_t base = idx - std::uint64_t(digit) * stride;
                for (int s = 0; s < q; ++s) {
                    if (s == digit) continue;
                    if (dist[base + std::uint64_t(s) * stride] == level) {
                        touch = true;
                        break;
                    }
                }
            }
            if (touch) {
                claim[idx] = 1;
                claimed = claimed + 1;
            }
        }
        require(claimed > 0, "Internal", "BFS stalled; space not connected?");
#pragma omp parallel for schedule(static)
        for (long long sidx = 0; sidx < (long long)total; ++sidx) {
            if (claim[sidx]) {
                dist[sidx] = std::uint8_t(level + 1);
                claim[sidx] = 0;
            }
        }
        unset -= claimed;
        ++level;
    }
    return level;
#endif
}

bool spheres_disjoint(const MixedSpace& sp, const std::vector<Word>& words, int r,
                      std::uint64_t gate) {
    check_gate(sp.size(), gate);
    std::vector<std::uint8_t> mark(sp.size(), 0);
    // Marks every word reachable from idx by substituting up to `left`
    // coordinates at positions >= from. Distinct substitution patterns give
    // distinct words, so within one ball nothing is stamped twice; a stamp
    // collision therefore means two balls intersect.
    std::function<bool(std::uint64_t, std::size_t, int)> stamp =
        [&](std::uint64_t idx, std::size_t from, int left) -> bool {
        if (left == 0) return true;
        for (std::size_t i = from; i < sp.n(); ++i) {
            const std::uint64_t stride = sp.stride(i);
            const int q = sp.order(i);
            const int digit = int((idx / stride) % std::uint64_t(q));
            const std::uint64_t base = idx - std::uint64_t(digit) * stride;
            for (int s = 0; s < q; ++s) {
                if (s == digit) continue;
                const std::uint64_t nb = base + std::uint64_t(s) * stride;
                if (mark[nb]) return false;
                mark[nb] = 1;
                if (!stamp(nb, i + 1, left - 1)) return false;
            }
        }
        return true;
    };
    for (const Word& w : words) {
        const std::uint64_t idx = sp.index_of(w);
        if (mark[idx]) return false;
        mark[idx] = 1;
        if (!stamp(idx, 0, r)) return false;
    }
    return true;
}

} // namespace perfmix
