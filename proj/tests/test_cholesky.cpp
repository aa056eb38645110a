#include <doctest.h>

#include <map>
#include <random>

#include "ffchol/census.hpp"
#include "ffchol/cholesky.hpp"

using namespace ffchol;

namespace {

Matrix sym2(const FieldPtr& f, int a, int b, int c) {
    Matrix m(f, 2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = m.at(1, 0) = b;
    m.at(1, 1) = c;
    return m;
}

// All lower triangular matrices with positive diagonal, n = 2.
std::vector<LowerPosTri> all_lower_pos_2(const FieldPtr& f) {
    std::vector<LowerPosTri> out;
    for (int d1 = 1; d1 < f->q(); ++d1) {
        if (f->chi(d1) != 1) continue;
        for (int d2 = 1; d2 < f->q(); ++d2) {
            if (f->chi(d2) != 1) continue;
            for (int l = 0; l < f->q(); ++l) {
                Matrix m(f, 2, 2);
                m.at(0, 0) = d1;
                m.at(1, 0) = l;
                m.at(1, 1) = d2;
                out.emplace_back(m);
            }
        }
    }
    return out;
}

LowerPosTri random_lower_pos(const FieldPtr& f, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, f->q() - 1);
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) {
        int d;
        do { d = pick(rng); } while (f->chi(d) != 1);
        m.at(i, i) = d;
        for (int j = 0; j < i; ++j) m.at(i, j) = pick(rng);
    }
    return LowerPosTri(m);
}

}  // namespace

TEST_CASE("LowerPosTri invariants") {
    auto f7 = Field::make(7, 1);
    CHECK_NOTHROW((void)LowerPosTri(Matrix::diagonal(f7, {1, 2})));
    CHECK_THROWS_WITH_AS(LowerPosTri(Matrix::diagonal(f7, {1, 3})),
                         doctest::Contains("E_NOT_POS_DIAG"), DomainError);
    Matrix upper(f7, 2, 2);
    upper.at(0, 0) = upper.at(1, 1) = 1;
    upper.at(0, 1) = 2;
    CHECK_THROWS_WITH_AS((void)LowerPosTri{upper}, doctest::Contains("E_NOT_LOWER_TRIANGULAR"),
                         DomainError);
}

TEST_CASE("congruence") {
    auto f3 = Field::make(3, 1);
    const SymMatrix id2(Matrix::identity(f3, 2));
    CHECK(congruence(Matrix::identity(f3, 2), id2) == id2);

    Matrix l(f3, 2, 2);
    l.at(0, 0) = 1; l.at(1, 0) = 1; l.at(1, 1) = 1;
    CHECK(congruence(l, id2) == SymMatrix(sym2(f3, 1, 1, 2)));

    auto f7 = Field::make(7, 1);
    const SymMatrix got = congruence(Matrix::diagonal(f7, {3, 1}),
                                     SymMatrix(Matrix::diagonal(f7, {1, 3})));
    CHECK(got == SymMatrix(Matrix::diagonal(f7, {2, 3})));
    CHECK(sign_pattern_lpm(got) == SignPattern{1, -1});

    CHECK_THROWS_WITH_AS(congruence(Matrix::diagonal(f7, {0, 1}), id2),
                         doctest::Contains("E_SINGULAR"), DomainError);
}

TEST_CASE("factor examples") {
    auto f3 = Field::make(3, 1);
    const SymMatrix id2(Matrix::identity(f3, 2));
    CHECK(factor(id2, id2).L.mat() == Matrix::identity(f3, 2));

    SUBCASE("uniqueness by exhausting all candidates over F_3") {
        const SymMatrix a(sym2(f3, 1, 1, 2));
        const Factorization f = factor(a, id2);
        Matrix want(f3, 2, 2);
        want.at(0, 0) = 1; want.at(1, 0) = 1; want.at(1, 1) = 1;
        CHECK(f.L.mat() == want);
        int hits = 0;
        for (const LowerPosTri& l : all_lower_pos_2(f3))
            if (congruence(l.mat(), id2) == a) ++hits;
        CHECK(hits == 1);
    }

    auto f7 = Field::make(7, 1);
    const Factorization f = factor(SymMatrix(Matrix::diagonal(f7, {2, 3})),
                                   SymMatrix(Matrix::diagonal(f7, {1, 3})));
    CHECK(f.L.mat() == Matrix::diagonal(f7, {4, 1}));
    CHECK(f.eps == SignPattern{1, -1});
}

TEST_CASE("factor error paths") {
    auto f5 = Field::make(5, 1);
    CHECK_THROWS_WITH_AS(factor(SymMatrix(Matrix::identity(f5, 2)),
                                SymMatrix(Matrix::identity(f5, 2))),
                         doctest::Contains("E_NONDEFINITE"), DomainError);

    auto f7 = Field::make(7, 1);
    CHECK_THROWS_WITH_AS(factor(SymMatrix(Matrix::diagonal(f7, {1, 3})),
                                SymMatrix(Matrix::identity(f7, 2))),
                         doctest::Contains("E_PATTERN_MISMATCH"), DomainError);
    CHECK_THROWS_WITH_AS(factor(SymMatrix(Matrix::diagonal(f7, {0, 1})),
                                SymMatrix(Matrix::identity(f7, 2))),
                         doctest::Contains("E_ZERO_MINOR"), DomainError);
}

TEST_CASE("factor_tpm") {
    auto f3 = Field::make(3, 1);
    const SymMatrix id2(Matrix::identity(f3, 2));
    CHECK(factor_tpm(id2, id2) == Matrix::identity(f3, 2));

    Matrix want(f3, 2, 2);
    want.at(0, 0) = 1; want.at(0, 1) = 1; want.at(1, 1) = 1;
    CHECK(factor_tpm(SymMatrix(sym2(f3, 2, 1, 1)), id2) == want);

    auto f7 = Field::make(7, 1);
    CHECK(factor_tpm(SymMatrix(Matrix::diagonal(f7, {3, 2})),
                     SymMatrix(Matrix::diagonal(f7, {3, 1}))) == Matrix::diagonal(f7, {1, 4}));

    SUBCASE("U reconstructs A against the TPM anchor") {
        std::mt19937 rng(3);
        auto f27 = Field::make(3, 3);
        for (int trial = 0; trial < 25; ++trial) {
            const LowerPosTri l = random_lower_pos(f27, 3, rng);
            SignPattern e(3);
            for (int i = 0; i < 3; ++i) e[i] = rng() % 2 ? 1 : -1;
            const SymMatrix anchor = anchor_tpm(f27, e);
            const SymMatrix a(mul(mul(reverse(l.mat()), anchor.mat()),
                                  transpose(reverse(l.mat()))));
            const Matrix u = factor_tpm(a, anchor);
            CHECK(u.is_upper_triangular());
            CHECK(SymMatrix(mul(mul(u, anchor.mat()), transpose(u))) == a);
        }
    }
}

TEST_CASE("psi round trips") {
    auto f3 = Field::make(3, 1);
    const SymMatrix id2(Matrix::identity(f3, 2));
    CHECK(psi(id2, LowerPosTri(Matrix::identity(f3, 2))) == id2);

    const SymMatrix a(sym2(f3, 1, 2, 2));
    Matrix want(f3, 2, 2);
    want.at(0, 0) = 1; want.at(1, 0) = 2; want.at(1, 1) = 1;
    CHECK(psi_inv(id2, a).mat() == want);

    SUBCASE("round trip on a whole cone") {
        enumerate_sym(f3, 2, [&](const SymMatrix& m) {
            if (!in_lpm_cone(m, {1, 1})) return;
            CHECK(psi(id2, psi_inv(id2, m)) == m);
        });
        for (const LowerPosTri& l : all_lower_pos_2(f3))
            CHECK(psi_inv(id2, psi(id2, l)) == l);
    }
}

TEST_CASE("transition between cones") {
    auto f3 = Field::make(3, 1);
    const SymMatrix id2(Matrix::identity(f3, 2));
    const SymMatrix a(sym2(f3, 1, 1, 2));
    CHECK(transition(a, id2, id2) == a);

    const SymMatrix to(Matrix::diagonal(f3, {1, 2}));
    const SymMatrix got = transition(a, id2, to);
    CHECK(got == SymMatrix(sym2(f3, 1, 1, 0)));
    CHECK(sign_pattern_lpm(got) == SignPattern{1, -1});

    SUBCASE("transition is a bijection between cones") {
        int count = 0;
        enumerate_sym(f3, 2, [&](const SymMatrix& m) {
            if (!in_lpm_cone(m, {1, 1})) return;
            ++count;
            const SymMatrix over = transition(m, id2, to);
            CHECK(in_lpm_cone(over, {1, -1}));
            CHECK(transition(over, to, id2) == m);
        });
        CHECK(count == 3);
    }
}

TEST_CASE("reconstruction sweep, small fields") {
    // every cone member factors back exactly, against the canonical anchor
    // and against an arbitrary second member of its cone
    for (auto [p, k] : {std::pair{3, 1}, {7, 1}, {2, 1}, {2, 2}}) {
        auto F = Field::make(p, k);
        for (int n = 2; n <= 3; ++n) {
            std::map<SignPattern, SymMatrix> second_anchor;
            enumerate_sym(F, n, [&](const SymMatrix& a) {
                if (!in_lpm_cone(a)) return;
                const SignPattern e = sign_pattern_lpm(a);
                const SymMatrix anchor = anchor_diag(F, e);
                const Factorization f = factor(a, anchor);
                CHECK(f.reconstruct() == a);
                auto [it, fresh] = second_anchor.emplace(e, a);
                if (!fresh) CHECK(factor(a, it->second).reconstruct() == a);
            });
        }
    }
}

TEST_CASE("non-uniqueness witnesses over non-definite fields") {
    auto f5 = Field::make(5, 1);
    auto [a1, a2] = nonuniqueness_witness(f5, 1);
    CHECK(a1.mat().at(0, 0) == 1);
    CHECK(a2.mat().at(0, 0) == 4);

    auto [b1, b2] = nonuniqueness_witness(f5, 2);
    CHECK(b1 != b2);
    const SymMatrix anchor = anchor_diag(f5, {1, -1});
    CHECK(congruence(b1.mat(), anchor) == congruence(b2.mat(), anchor));

    auto f9 = Field::make(3, 2);
    auto [c1, c2] = nonuniqueness_witness(f9, 1);
    CHECK(c1.mat().at(0, 0) == 1);
    CHECK(c2.mat().at(0, 0) == 2);
    CHECK(f9->mul(2, 2) == 1);

    auto f7 = Field::make(7, 1);
    CHECK_THROWS_WITH_AS(nonuniqueness_witness(f7, 2), doctest::Contains("E_DEFINITE"),
                         DomainError);
}
