#include <doctest.h>

#include "ffchol/field.hpp"

using namespace ffchol;

TEST_CASE("canonical field construction") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->q() == 7);
    CHECK(f7->modulus() == std::vector<int>{0, 1});

    auto f9 = Field::make(3, 2);
    CHECK(f9->q() == 9);
    // x^2 + 1: first irreducible monic quadratic in scan order over F_3
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1});

    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});

    CHECK_THROWS_WITH_AS(Field::make(6, 1), doctest::Contains("E_NOT_PRIME"), DomainError);
    CHECK_THROWS_WITH_AS(Field::make(3, 5), doctest::Contains("E_DEGREE_UNSUPPORTED"), DomainError);
    CHECK_THROWS_WITH_AS(Field::make(5, 4), doctest::Contains("E_DEGREE_UNSUPPORTED"), DomainError);
}

TEST_CASE("arithmetic examples") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->inv(3) == 5);
    CHECK_THROWS_WITH_AS(f7->inv(0), doctest::Contains("E_DIVISION_BY_ZERO"), DomainError);

    auto f9 = Field::make(3, 2);
    const int x = f9->code_of({0, 1});
    CHECK(f9->mul(x, x) == 2);  // x^2 = -1 = 2

    for (int a = 0; a < f9->q(); ++a) CHECK(f9->add(a, f9->neg(a)) == 0);
}

TEST_CASE("field axioms, exhaustive small q") {
    for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        auto F = Field::make(p, k);
        const int q = F->q();
        for (int a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                    CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("quadratic character") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->chi(0) == 0);
    CHECK(f7->chi(1) == 1);
    CHECK(f7->chi(3) == -1);  // squares of F_7^x are {1,2,4}
    CHECK(f7->chi(2) == 1);
    CHECK(f7->chi(4) == 1);

    auto f4 = Field::make(2, 2);
    for (int a = 1; a < 4; ++a) CHECK(f4->chi(a) == 1);

    SUBCASE("multiplicativity and square counts, q <= 9") {
        for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {2, 2}, {2, 3}}) {
            auto F = Field::make(p, k);
            int plus = 0;
            for (int a = 0; a < F->q(); ++a) {
                if (F->chi(a) == 1) ++plus;
                for (int b = 0; b < F->q(); ++b)
                    CHECK(F->chi(F->mul(a, b)) == F->chi(a) * F->chi(b));
            }
            if (p != 2) CHECK(plus == (F->q() - 1) / 2);
        }
    }
}

TEST_CASE("field classification") {
    CHECK(Field::make(7, 1)->cls() == FieldClass::Definite);
    CHECK(Field::make(3, 2)->cls() == FieldClass::NonDefinite);
    CHECK(Field::make(2, 2)->cls() == FieldClass::EvenChar);
    CHECK(Field::make(3, 3)->cls() == FieldClass::Definite);  // 27 = 3 mod 4
    CHECK(Field::make(5, 1)->cls() == FieldClass::NonDefinite);

    // definite iff -1 is a non-square (odd q)
    for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {3, 3}, {5, 2}}) {
        auto F = Field::make(p, k);
        const int chi_minus1 = F->chi(F->neg(1));
        CHECK(chi_minus1 == (F->cls() == FieldClass::Definite ? -1 : 1));
    }
}

TEST_CASE("frobenius") {
    auto f9 = Field::make(3, 2);
    const int a = f9->code_of({1, 1});  // 1 + x
    CHECK(f9->frobenius(a, 1) == f9->code_of({1, 2}));  // 1 + 2x

    for (int e = 0; e < f9->q(); ++e) {
        CHECK(f9->frobenius(e, 0) == e);
        CHECK(f9->frobenius(f9->frobenius(e, 1), 1) == e);
        CHECK(f9->frobenius(e, f9->k()) == e);
    }

    SUBCASE("automorphism, q <= 9") {
        for (auto [p, k] : {std::pair{3, 2}, {2, 2}, {2, 3}, {7, 1}}) {
            auto F = Field::make(p, k);
            for (int x = 0; x < F->q(); ++x)
                for (int y = 0; y < F->q(); ++y) {
                    CHECK(F->frobenius(F->add(x, y), 1) ==
                          F->add(F->frobenius(x, 1), F->frobenius(y, 1)));
                    CHECK(F->frobenius(F->mul(x, y), 1) ==
                          F->mul(F->frobenius(x, 1), F->frobenius(y, 1)));
                }
        }
    }
}

TEST_CASE("positive square root") {
    auto f7 = Field::make(7, 1);
    CHECK(f7->positive_sqrt(2) == 4);
    CHECK(f7->positive_sqrt(1) == 1);
    CHECK(f7->positive_sqrt(0) == 0);
    CHECK_THROWS_WITH_AS(f7->positive_sqrt(3), doctest::Contains("E_NOT_A_SQUARE"), DomainError);

    auto f4 = Field::make(2, 2);
    const int x = f4->code_of({0, 1});
    CHECK(f4->positive_sqrt(x) == f4->code_of({1, 1}));  // (x+1)^2 = x

    auto f5 = Field::make(5, 1);
    CHECK_THROWS_WITH_AS(f5->positive_sqrt(4), doctest::Contains("E_NONDEFINITE"), DomainError);

    SUBCASE("sqrt round trip, exhaustive") {
        for (auto [p, k] : {std::pair{3, 1}, {7, 1}, {3, 3}, {2, 2}, {2, 3}}) {
            auto F = Field::make(p, k);
            for (int a = 1; a < F->q(); ++a) {
                if (F->chi(a) != 1) continue;
                const int r = F->positive_sqrt(a);
                CHECK(F->mul(r, r) == a);
                CHECK(F->chi(r) == 1);
            }
        }
    }
}

TEST_CASE("element codes") {
    auto f9 = Field::make(3, 2);
    CHECK(f9->code_of({1, 2}) == 7);
    CHECK(f9->coeffs_of(7) == std::vector<int>{1, 2});
    CHECK(f9->name() == "3^2");
}
