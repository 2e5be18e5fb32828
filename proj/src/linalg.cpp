#include "perfmix/linalg.hpp"

#include "perfmix/error.hpp"

#include <algorithm>

namespace perfmix {

std::size_t rref(Matrix& m, std::vector<std::size_t>* pivots) {
    const FieldTable& F = field(m.q);
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(r));
        Symbol s = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Symbol f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

std::size_t rank(Matrix m) { return rref(m); }

Matrix null_space(const Matrix& m) {
    const FieldTable& F = field(m.q);
    Matrix e = m;
    std::vector<std::size_t> pivots;
    std::size_t r = rref(e, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Matrix ns(m.q, m.cols - r, m.cols);
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        // free column c: set x_c = 1, solve pivots
        ns.at(out, c) = 1;
        for (std::size_t i = 0; i < r; ++i)
            ns.at(out, pivots[i]) = F.neg(e.at(i, c));
        ++out;
    }
    return ns;
}

bool in_row_space(const Matrix& m, const std::vector<Symbol>& v) {
    require(v.size() == m.cols, "ShapeMismatch", "vector length != column count");
    Matrix e = m;
    std::size_t r0 = rref(e);
    Matrix ext(m.q, r0 + 1, m.cols);
    std::copy(e.a.begin(), e.a.begin() + r0 * m.cols, ext.a.begin());
    std::copy(v.begin(), v.end(), ext.row(r0));
    return rref(ext) == r0;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.q != b.q || a.cols != b.cols) return false;
    Matrix ea = a, eb = b;
    std::size_t ra = rref(ea), rb = rref(eb);
    if (ra != rb) return false;
    Matrix stacked(a.q, ra + rb, a.cols);
    std::copy(ea.a.begin(), ea.a.begin() + ra * a.cols, stacked.a.begin());
    std::copy(eb.a.begin(), eb.a.begin() + rb * b.cols, stacked.row(ra));
    return rref(stacked) == ra;
}

std::vector<Symbol> mul_row(const Matrix& m, const std::vector<Symbol>& x) {
    require(x.size() == m.rows, "ShapeMismatch", "vector length != row count");
    const FieldTable& F = field(m.q);
    std::vector<Symbol> y(m.cols, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (x[i] == 0) continue;
        const Symbol* r = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j)
            y[j] = F.add(y[j], F.mul(x[i], r[j]));
    }
    return y;
}

std::vector<Symbol> mul_col(const Matrix& m, const Symbol* w) {
    const FieldTable& F = field(m.q);
    std::vector<Symbol> s(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const Symbol* r = m.row(i);
        Symbol acc = 0;
        for (std::size_t j = 0; j < m.cols; ++j) acc = F.add(acc, F.mul(r[j], w[j]));
        s[i] = acc;
    }
    return s;
}

} // namespace perfmix
