#pragma once

#include "perfmix/gf.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace perfmix {

// A word is one symbol per coordinate. Words over the same space compare
// lexicographically via the container's operator<, first coordinate most
// significant; that order is part of the file-format contract.
using Word = std::vector<Symbol>;

// Cartesian product of finite fields of (possibly) different orders.
// Word indices are mixed-radix with the first coordinate most significant,
// so index order equals lexicographic order.
class MixedSpace {
public:
    explicit MixedSpace(std::vector<int> orders);
    static MixedSpace uniform(int q, int n);

    std::size_t n() const { return orders_.size(); }
    int order(std::size_t i) const { return orders_[i]; }
    const std::vector<int>& orders() const { return orders_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t stride(std::size_t i) const { return strides_[i]; }

    // -1 if coordinates have mixed orders, else the common order.
    int uniform_order() const;

    std::uint64_t index_of(const Word& w) const;
    Word word_of(std::uint64_t idx) const;
    bool contains(const Word& w) const;

    // |B_r|: number of words within Hamming distance r of any fixed word.
    std::uint64_t ball_size(int r) const;

    bool operator==(const MixedSpace& o) const { return orders_ == o.orders_; }
    bool operator!=(const MixedSpace& o) const { return !(*this == o); }

private:
    std::vector<int> orders_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t size_ = 1;
};

// Default brute-force gate on |V| for whole-space scans, and the hard
// ceiling that even explicit overrides may not exceed.
inline constexpr std::uint64_t kDefaultGate = std::uint64_t(1) << 25;
inline constexpr std::uint64_t kGateCeiling = std::uint64_t(1) << 28;

// Nonempty set of distinct words in a common space, kept sorted
// lexicographically. By library convention a code contains the zero word;
// constructions that legitimately produce translates (partition classes,
// relabelings) opt out with ZeroWord::optional.
class Code {
public:
    enum class ZeroWord { required, optional };

    Code(MixedSpace space, std::vector<Word> words,
         ZeroWord zw = ZeroWord::required);

    const MixedSpace& space() const { return space_; }
    const std::vector<Word>& words() const { return words_; }
    std::uint64_t size() const { return words_.size(); }
    bool contains(const Word& w) const;
    bool contains_zero() const;

    bool operator==(const Code& o) const {
        return space_ == o.space_ && words_ == o.words_;
    }

private:
    MixedSpace space_;
    std::vector<Word> words_;
};

int distance(const Word& a, const Word& b);
int weight(const Word& w);

// Sum of coordinates in GF(q); defined for uniform spaces only.
Symbol parity(const MixedSpace& sp, const Word& w);
bool is_even(const MixedSpace& sp, const Word& w);

// Appends the parity-completing symbol -p(x) to every codeword.
Code extend_code(const Code& c);

// Exact minimum distance by full pairwise scan (|C| >= 2).
int minimum_distance(const Code& c);

// Largest e such that radius-e balls around codewords are pairwise
// disjoint. Cross-checked internally against floor((d-1)/2).
int packing_radius(const Code& c, std::uint64_t gate = kDefaultGate);

// max over all words of the space of the distance to the nearest codeword.
int covering_radius(const Code& c, std::uint64_t gate = kDefaultGate);

struct PerfectCert {
    bool pass = false;
    int e_requested = 0;
    int packing = 0;
    int covering = 0;
    int min_distance = 0;
    std::uint64_t space_size = 0;
    std::uint64_t code_size = 0;
    std::uint64_t ball = 0;       // |B_e| for the requested e
    bool sphere_identity = false; // |C| * |B_e| == |V|
    bool quasi_perfect = false;   // covering == packing + 1
};

// Certifies whether C is e-perfect: packing radius e, covering radius e,
// and the sphere-count identity, all verified by exhaustive scan.
PerfectCert is_perfect(const Code& c, int e, std::uint64_t gate = kDefaultGate);

// Applies a symbol bijection to one coordinate. psi must be a permutation
// of {0..q_i-1}. Distances are preserved, additivity generally is not.
Code relabel(const Code& c, std::size_t coord, const std::vector<Symbol>& psi);

// Calls fn for every word of the space in lexicographic order (gated).
void for_each_word(const MixedSpace& sp, const std::function<void(const Word&)>& fn,
                   std::uint64_t gate = kDefaultGate);

} // namespace perfmix
