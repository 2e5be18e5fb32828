#include "perfmix/space.hpp"

#include "perfmix/error.hpp"
#include "perfmix/scan.hpp"

#include <algorithm>

namespace perfmix {

MixedSpace::MixedSpace(std::vector<int> orders) : orders_(std::move(orders)) {
    require(!orders_.empty(), "EmptySpace", "a space needs at least one coordinate");
    for (int q : orders_)
        require(is_prime_power(q) && q >= 2 && q <= 16, "NotPrimePower",
                "coordinate order " + std::to_string(q) + " unsupported");
    strides_.assign(orders_.size(), 1);
    size_ = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
        strides_[i] = size_;
        std::uint64_t next = size_ * std::uint64_t(orders_[i]);
        require(next / std::uint64_t(orders_[i]) == size_, "SpaceTooLarge",
                "space size overflows 64 bits");
        size_ = next;
    }
}

MixedSpace MixedSpace::uniform(int q, int n) {
    require(n >= 1, "EmptySpace", "need n >= 1");
    return MixedSpace(std::vector<int>(std::size_t(n), q));
}

int MixedSpace::uniform_order() const {
    int q = orders_[0];
    for (int o : orders_)
        if (o != q) return -1;
    return q;
}

std::uint64_t MixedSpace::index_of(const Word& w) const {
    require(w.size() == orders_.size(), "LengthMismatch", "word length != n");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        require(w[i] < orders_[i], "SymbolOutOfRange", "symbol exceeds coordinate order");
        idx += std::uint64_t(w[i]) * strides_[i];
    }
    return idx;
}

Word MixedSpace::word_of(std::uint64_t idx) const {
    require(idx < size_, "IndexOutOfRange", "word index exceeds space size");
    Word w(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        w[i] = Symbol(idx / strides_[i]);
        idx -= std::uint64_t(w[i]) * strides_[i];
    }
    return w;
}

bool MixedSpace::contains(const Word& w) const {
    if (w.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= orders_[i]) return false;
    return true;
}

std::uint64_t MixedSpace::ball_size(int r) const {
    require(r >= 0, "IndexOutOfRange", "negative radius");
    // ways[j] = number of difference patterns on the first i coordinates
    // with exactly j substituted positions
    std::vector<std::uint64_t> ways(std::size_t(r) + 1, 0);
    ways[0] = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        for (std::size_t j = std::min(std::size_t(r), i + 1); j >= 1; --j)
            ways[j] += ways[j - 1] * std::uint64_t(orders_[i] - 1);
    }
    std::uint64_t total = 0;
    for (std::uint64_t v : ways) total += v;
    return total;
}

Code::Code(MixedSpace space, std::vector<Word> words, ZeroWord zw)
    : space_(std::move(space)), words_(std::move(words)) {
    require(!words_.empty(), "EmptyCode", "a code needs at least one word");
    for (const Word& w : words_)
        require(space_.contains(w), "SymbolOutOfRange",
                "codeword does not lie in the space");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (zw == ZeroWord::required)
        require(contains_zero(), "MissingZeroWord",
                "code does not contain the zero word (pass ZeroWord::optional "
                "for translates)");
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

bool Code::contains_zero() const {
    return !words_.empty() && weight(words_.front()) == 0;
}

int distance(const Word& a, const Word& b) {
    require(a.size() == b.size(), "LengthMismatch", "distance of unequal lengths");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

int weight(const Word& w) {
    int c = 0;
    for (Symbol s : w) c += (s != 0);
    return c;
}

Symbol parity(const MixedSpace& sp, const Word& w) {
    int q = sp.uniform_order();
    require(q > 0, "MixedAlphabet", "parity needs a uniform alphabet");
    const FieldTable& F = field(q);
    Symbol acc = 0;
    for (Symbol s : w) acc = F.add(acc, s);
    return acc;
}

bool is_even(const MixedSpace& sp, const Word& w) { return parity(sp, w) == 0; }

Code extend_code(const Code& c) {
    int q = c.space().uniform_order();
    require(q > 0, "MixedAlphabet", "extension needs a uniform alphabet");
    const FieldTable& F = field(q);
    std::vector<int> orders = c.space().orders();
    orders.push_back(q);
    std::vector<Word> out;
    out.reserve(c.words().size());
    for (const Word& w : c.words()) {
        Word e = w;
        e.push_back(F.neg(parity(c.space(), w)));
        out.push_back(std::move(e));
    }
    return Code(MixedSpace(orders), std::move(out),
                c.contains_zero() ? Code::ZeroWord::required : Code::ZeroWord::optional);
}

int minimum_distance(const Code& c) {
    PackedCode pc = pack_words(c.words());
    return min_distance_scan_omp(pc);
}

namespace {

// largest radius with pairwise disjoint balls, found by growing r;
// covering radius is a hard upper bound so the loop terminates
int packing_by_marking(const Code& c, int rho, std::uint64_t gate) {
    int e = -1;
    for (int r = 0; r <= rho + 1; ++r) {
        if (spheres_disjoint(c.space(), c.words(), r, gate))
            e = r;
        else
            break;
    }
    return e;
}

} // namespace

int covering_radius(const Code& c, std::uint64_t gate) {
    return covering_radius_bfs_omp(c.space(), c.words(), gate);
}

int packing_radius(const Code& c, std::uint64_t gate) {
    require(c.size() >= 2, "DegenerateCode", "packing radius needs >= 2 words");
    int rho = covering_radius(c, gate);
    int by_marking = packing_by_marking(c, rho, gate);
    // agreement check against floor((d-1)/2); the marking result certifies
    // d >= 2e+1, which makes the floored scan exact
    PackedCode pc = pack_words(c.words());
    int d = min_distance_scan_omp(pc, 2 * by_marking + 1);
    require((d - 1) / 2 == by_marking, "Internal",
            "packing radius disagrees with floor((d-1)/2)");
    return by_marking;
}

PerfectCert is_perfect(const Code& c, int e, std::uint64_t gate) {
    require(e >= 0, "IndexOutOfRange", "negative packing radius requested");
    require(c.size() >= 2, "DegenerateCode", "perfection needs >= 2 words");
    PerfectCert cert;
    cert.e_requested = e;
    cert.space_size = c.space().size();
    cert.code_size = c.size();
    cert.ball = c.space().ball_size(e);
    cert.covering = covering_radius(c, gate);
    cert.packing = packing_by_marking(c, cert.covering, gate);
    PackedCode pc = pack_words(c.words());
    cert.min_distance = min_distance_scan_omp(pc, 2 * cert.packing + 1);
    require((cert.min_distance - 1) / 2 == cert.packing, "Internal",
            "packing radius disagrees with floor((d-1)/2)");
    cert.sphere_identity = (cert.code_size * cert.ball == cert.space_size);
    cert.quasi_perfect = (cert.covering == cert.packing + 1);
    cert.pass = (cert.packing == e && cert.covering == e && cert.sphere_identity);
    return cert;
}

Code relabel(const Code& c, std::size_t coord, const std::vector<Symbol>& psi) {
    require(coord < c.space().n(), "IndexOutOfRange", "coordinate out of range");
    const int q = c.space().order(coord);
    require(int(psi.size()) == q, "NotAPermutation", "psi has wrong size");
    std::vector<bool> seen(psi.size(), false);
    for (Symbol s : psi) {
        require(s < q && !seen[s], "NotAPermutation", "psi is not a bijection");
        seen[s] = true;
    }
    std::vector<Word> out = c.words();
    for (Word& w : out) w[coord] = psi[w[coord]];
    return Code(c.space(), std::move(out), Code::ZeroWord::optional);
}

void for_each_word(const MixedSpace& sp, const std::function<void(const Word&)>& fn,
                   std::uint64_t gate) {
    require(gate <= kGateCeiling, "GateTooLarge", "gate exceeds hard ceiling 2^28");
    require(sp.size() <= gate, "SpaceTooLarge", "space exceeds enumeration gate");
    Word w(sp.n(), 0);
    for (std::uint64_t idx = 0;; ++idx) {
        fn(w);
        std::size_t i = sp.n();
        while (i-- > 0) {
            if (++w[i] < sp.order(i)) break;
            w[i] = 0;
            if (i == 0) return;
        }
        if (idx + 1 == sp.size()) return;
    }
}

} // namespace perfmix
