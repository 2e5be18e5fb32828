#include "perfmix/gf.hpp"

#include "perfmix/error.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <sstream>

namespace perfmix {

bool is_prime_power(int q, int* p_out, int* t_out) {
    if (q < 2) return false;
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q; // q itself is prime
    int t = 0, m = q;
    while (m % p == 0) { m /= p; ++t; }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (t_out) *t_out = t;
    return true;
}

namespace {

// Polynomials over GF(p) as coefficient vectors c0..c_deg, used only while
// building the tables. All degrees involved are <= 8.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(a);
    while (a.size() >= m.size()) {
        int lead = a.back();
        std::size_t shift = a.size() - m.size();
        // m is monic, so subtract lead * X^shift * m
        for (std::size_t i = 0; i < m.size(); ++i) {
            int& c = a[shift + i];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        a = trim(a);
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Smallest irreducible monic polynomial of degree t over GF(p), comparing
// coefficient vectors from the highest non-leading coefficient down.
// Enumerating low coefficients as a base-p counter with c_{t-1} most
// significant yields exactly that order.
Poly smallest_irreducible(int p, int t) {
    std::vector<int> low(t, 0);
    for (;;) {
        Poly cand(low.begin(), low.end());
        cand.push_back(1);
        bool irreducible = true;
        // trial division by every monic polynomial of degree 1..t-1
        for (int d = 1; d < t && irreducible; ++d) {
            int count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (int enc = 0; enc < count && irreducible; ++enc) {
                Poly div;
                int e = enc;
                for (int i = 0; i < d; ++i) { div.push_back(e % p); e /= p; }
                div.push_back(1);
                if (poly_divides(div, cand, p)) irreducible = false;
            }
        }
        if (irreducible) return cand;
        int i = 0;
        while (i < t && low[i] == p - 1) { low[i] = 0; ++i; }
        require(i < t, "Unsupported", "no irreducible polynomial found");
        ++low[i];
    }
}

Poly decode(int index, int p, int t) {
    Poly c;
    for (int i = 0; i < t; ++i) { c.push_back(index % p); index /= p; }
    return trim(c);
}

int encode(const Poly& c, int p) {
    int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

} // namespace

FieldTable::FieldTable(int q) : q_(q) {
    require(q >= 2 && q <= 16, "Unsupported", "field order must be in [2,16]");
    require(is_prime_power(q, &p_, &t_), "NotPrimePower",
            "no field of order " + std::to_string(q));

    Poly red;
    if (t_ > 1) {
        red = smallest_irreducible(p_, t_);
        redpoly_ = red;
    }

    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        Poly pa = decode(a, p_, t_);
        for (int b = 0; b < q; ++b) {
            Poly pb = decode(b, p_, t_);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (std::size_t i = 0; i < pa.size(); ++i) s[i] = pa[i];
            for (std::size_t i = 0; i < pb.size(); ++i) s[i] = (s[i] + pb[i]) % p_;
            add_[idx(Symbol(a), Symbol(b))] = Symbol(encode(trim(s), p_));
            Poly m = poly_mul(pa, pb, p_);
            if (t_ > 1) m = poly_mod(m, red, p_);
            mul_[idx(Symbol(a), Symbol(b))] = Symbol(encode(m, p_));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[idx(Symbol(a), Symbol(b))] == 0) neg_[a] = Symbol(b);
            if (mul_[idx(Symbol(a), Symbol(b))] == 1) inv_[a] = Symbol(b);
        }
    }
}

Symbol FieldTable::inv(Symbol a) const {
    require(a != 0, "ZeroInverse", "0 has no multiplicative inverse");
    return inv_[a];
}

Symbol FieldTable::pow(Symbol a, int e) const {
    require(e >= 0, "Unsupported", "negative exponent");
    Symbol r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::string FieldTable::reduction_poly_str() const {
    if (t_ == 1) return "";
    std::ostringstream os;
    for (int d = t_; d >= 0; --d) {
        int c = redpoly_[d];
        if (c == 0) continue;
        if (os.tellp() > 0) os << "+";
        if (d == 0 || c > 1) os << c;
        if (d >= 1) {
            os << "X";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

const FieldTable& field(int q) {
    require(q >= 2 && q <= 16, "Unsupported", "field order must be in [2,16]");
    static std::array<std::unique_ptr<FieldTable>, 17> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[q]) cache[q] = std::make_unique<FieldTable>(q);
    return *cache[q];
}

} // namespace perfmix
