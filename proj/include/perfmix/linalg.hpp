#pragma once

#include "perfmix/gf.hpp"

#include <cstddef>
#include <vector>

namespace perfmix {

// Dense row-major matrix over GF(q). Small sizes only (n <= 64 columns in
// practice), so plain Gaussian elimination is all we need.
struct Matrix {
    int q = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<Symbol> a;

    Matrix() = default;
    Matrix(int q_, std::size_t r, std::size_t c)
        : q(q_), rows(r), cols(c), a(r * c, 0) {}

    Symbol& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Symbol at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    const Symbol* row(std::size_t r) const { return a.data() + r * cols; }
    Symbol* row(std::size_t r) { return a.data() + r * cols; }
};

// Reduced row echelon form in place; returns rank and (optionally) the list
// of pivot columns.
std::size_t rref(Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Matrix m);

// Basis of the right null space {x : M x = 0}, one solution per row.
Matrix null_space(const Matrix& m);

// True if v (length m.cols) lies in the row space of m.
bool in_row_space(const Matrix& m, const std::vector<Symbol>& v);

// True if the two matrices span the same row space.
bool same_row_space(const Matrix& a, const Matrix& b);

// y = x * M for a row vector x of length m.rows.
std::vector<Symbol> mul_row(const Matrix& m, const std::vector<Symbol>& x);

// s = M * w for a column vector w of length m.cols (syndrome computation).
std::vector<Symbol> mul_col(const Matrix& m, const Symbol* w);

} // namespace perfmix
