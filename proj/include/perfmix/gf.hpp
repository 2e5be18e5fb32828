#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace perfmix {

using Symbol = std::uint8_t;

bool is_prime_power(int q, int* p_out = nullptr, int* t_out = nullptr);

// Dense arithmetic tables for GF(q), q = p^t <= 16.
//
// Elements are the indices 0..q-1. For prime q the index is the residue
// mod p. For t > 1 the index encodes the coefficient vector of the
// polynomial representative in base p: index = c0 + c1*p + ... with the
// element being c0 + c1*X + ... reduced modulo the lexicographically
// smallest irreducible monic polynomial of degree t over GF(p).
//
// In particular GF(4) = {0, 1, alpha, beta} reduces by X^2+X+1 with
// alpha = X at index 2 and beta = X+1 at index 3.
class FieldTable {
public:
    explicit FieldTable(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int t() const { return t_; }

    // Coefficients c0..c_t of the reduction polynomial (monic, c_t = 1).
    // Empty for prime fields.
    const std::vector<int>& reduction_poly() const { return redpoly_; }
    std::string reduction_poly_str() const;

    Symbol add(Symbol a, Symbol b) const { return add_[idx(a, b)]; }
    Symbol sub(Symbol a, Symbol b) const { return add_[idx(a, neg_[b])]; }
    Symbol mul(Symbol a, Symbol b) const { return mul_[idx(a, b)]; }
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol inv(Symbol a) const;
    Symbol pow(Symbol a, int e) const;

    const Symbol* add_table() const { return add_.data(); }
    const Symbol* mul_table() const { return mul_.data(); }
    const Symbol* neg_table() const { return neg_.data(); }

private:
    std::size_t idx(Symbol a, Symbol b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    int q_, p_, t_;
    std::vector<int> redpoly_;
    std::vector<Symbol> add_, mul_, neg_, inv_;
};

// Shared immutable table for GF(q); constructed once per order on first use.
const FieldTable& field(int q);

} // namespace perfmix
