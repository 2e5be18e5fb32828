#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perfmix/error.hpp"
#include "perfmix/gf.hpp"

#include <set>

using namespace perfmix;

static const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

TEST_CASE("prime power detection") {
    int p = 0, t = 0;
    CHECK(is_prime_power(9, &p, &t));
    CHECK(p == 3);
    CHECK(t == 2);
    CHECK(is_prime_power(16, &p, &t));
    CHECK(p == 2);
    CHECK(t == 4);
    for (int q : {6, 10, 12, 14, 15, 1, 0}) CHECK_FALSE(is_prime_power(q));
    CHECK_THROWS_AS(FieldTable(6), Error);
    CHECK_THROWS_AS(field(12), Error);
    CHECK_THROWS_AS(field(17), Error);
}

TEST_CASE("field axioms hold exhaustively for every supported order") {
    for (int q : kOrders) {
        const FieldTable& F = field(q);
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            Symbol sa = Symbol(a);
            CHECK(F.add(sa, 0) == sa);
            CHECK(F.mul(sa, 1) == sa);
            CHECK(F.mul(sa, 0) == 0);
            CHECK(F.add(sa, F.neg(sa)) == 0);
            if (a != 0) CHECK(F.mul(sa, F.inv(sa)) == 1);
            for (int b = 0; b < q; ++b) {
                Symbol sb = Symbol(b);
                CHECK(F.add(sa, sb) == F.add(sb, sa));
                CHECK(F.mul(sa, sb) == F.mul(sb, sa));
                for (int c = 0; c < q; ++c) {
                    Symbol sc = Symbol(c);
                    CHECK(F.add(F.add(sa, sb), sc) == F.add(sa, F.add(sb, sc)));
                    CHECK(F.mul(F.mul(sa, sb), sc) == F.mul(sa, F.mul(sb, sc)));
                    CHECK(F.mul(sa, F.add(sb, sc)) ==
                          F.add(F.mul(sa, sb), F.mul(sa, sc)));
                }
            }
        }
        // the multiplicative group of nonzero elements is closed
        std::set<Symbol> nonzero;
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) nonzero.insert(F.mul(Symbol(a), Symbol(b)));
        CHECK(nonzero.count(0) == 0);
    }
}

TEST_CASE("frobenius endomorphism") {
    for (int q : kOrders) {
        const FieldTable& F = field(q);
        int p = F.p();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                Symbol s = F.add(Symbol(a), Symbol(b));
                CHECK(F.pow(s, p) == F.add(F.pow(Symbol(a), p), F.pow(Symbol(b), p)));
            }
    }
}

// Hand-computed values in GF(4) with reduction X^2+X+1, alpha = X (index 2),
// beta = X+1 (index 3):
//   alpha*alpha = X^2 = X+1 = beta, beta*beta = X^2+1 = X = alpha,
//   alpha*beta = X^2+X = 1.
TEST_CASE("gf(4) multiplication matches the documented labeling") {
    const FieldTable& F = field(4);
    CHECK(F.reduction_poly() == std::vector<int>{1, 1, 1});
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.mul(3, 3) == 2);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.add(2, 3) == 1);
    CHECK(F.add(2, 2) == 0);
}

TEST_CASE("reduction polynomials are the smallest irreducible choices") {
    CHECK(field(8).reduction_poly() == std::vector<int>{1, 1, 0, 1});   // X^3+X+1
    CHECK(field(9).reduction_poly() == std::vector<int>{1, 0, 1});      // X^2+1
    CHECK(field(16).reduction_poly() == std::vector<int>{1, 1, 0, 0, 1}); // X^4+X+1
    CHECK(field(4).reduction_poly_str() == "X^2+X+1");
    CHECK(field(9).reduction_poly_str() == "X^2+1");
    CHECK(field(5).reduction_poly_str() == "");
}

TEST_CASE("prime field arithmetic is mod p") {
    const FieldTable& F3 = field(3);
    CHECK(F3.add(2, 2) == 1);
    CHECK(F3.mul(2, 2) == 1);
    const FieldTable& F5 = field(5);
    CHECK(F5.inv(2) == 3);
    CHECK(F5.neg(2) == 3);
    CHECK_THROWS_AS(F5.inv(0), Error);
}
