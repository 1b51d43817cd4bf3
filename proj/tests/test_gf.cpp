#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmatroids/gf.hpp"
#include "qmatroids/matrix.hpp"

using namespace qmatroids;

// Independent irreducibility oracle: a polynomial over GF(q) of degree 2 or 3
// is irreducible exactly when it has no root.  Used to pin the canonical
// moduli before anything trusts the construction-time check.
namespace {
bool has_root(const Field& f, const std::vector<Elem>& poly) {
    for (Elem x = 0; x < f.q(); ++x) {
        Elem acc = 0, xp = 1;
        for (Elem c : poly) {
            acc = f.add(acc, f.mul(c, xp));
            xp = f.mul(xp, x);
        }
        if (acc == 0) return true;
    }
    return false;
}
} // namespace

TEST_CASE("prime field arithmetic frozen values") {
    auto f2 = Field::make(2);
    CHECK(f2->add(1, 1) == 0);
    CHECK(f2->mul(1, 1) == 1);
    CHECK(f2->neg(1) == 1);

    auto f3 = Field::make(3);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f3->mul(2, 2) == 1);
    CHECK(f3->inv(2) == 2);
    CHECK(f3->neg(1) == 2);
    CHECK(f3->pow(2, 3) == 2);
}

TEST_CASE("GF(4) built from the canonical modulus") {
    auto f4 = Field::make(4);
    // The least irreducible monic quadratic over GF(2) is x^2 + x + 1.
    CHECK(f4->modulus() == std::vector<Elem>{1, 1, 1});
    CHECK_FALSE(has_root(*Field::make(2), f4->modulus()));
    // With g the residue of x (index 2): g^2 = g + 1 (index 3), g^3 = 1.
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->mul(2, 3) == 1);
    CHECK(f4->pow(2, 3) == 1);
    CHECK(f4->inv(2) == 3);
    // Characteristic 2: addition is coefficientwise xor.
    CHECK(f4->add(2, 3) == 1);
    CHECK(f4->add(3, 3) == 0);
}

TEST_CASE("canonical moduli of GF(8) and GF(9)") {
    auto f8 = Field::make(8);
    CHECK(f8->modulus() == std::vector<Elem>{1, 1, 0, 1}); // x^3 + x + 1
    CHECK_FALSE(has_root(*Field::make(2), f8->modulus()));

    auto f9 = Field::make(9);
    CHECK(f9->modulus() == std::vector<Elem>{1, 0, 1}); // x^2 + 1
    CHECK_FALSE(has_root(*Field::make(3), f9->modulus()));
    CHECK(f9->mul(3, 3) == 2); // g^2 = -1
}

TEST_CASE("orders that are not prime powers are rejected") {
    CHECK_THROWS_AS(Field::make(6), InvalidArgument);
    CHECK_THROWS_AS(Field::make(12), InvalidArgument);
    CHECK_THROWS_AS(Field::make(1), InvalidArgument);
    CHECK_THROWS_AS(Field::make(257), GuardError);
}

TEST_CASE("field laws exhaustively for small orders") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
        auto f = Field::make(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        for (Elem a = 1; a < q; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    }
}

TEST_CASE("field laws randomized for larger orders") {
    std::mt19937 rng(7);
    for (unsigned q : {25u, 27u, 64u, 128u, 243u, 256u}) {
        auto f = Field::make(q);
        std::uniform_int_distribution<Elem> pick(0, q - 1);
        for (int i = 0; i < 2000; ++i) {
            Elem a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            if (a) REQUIRE(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("extension field over GF(2) of degree 2") {
    auto ext = ExtField::make(Field::make(2), 2);
    CHECK(ext->order() == 4);
    CHECK(ext->modulus() == std::vector<Elem>{1, 1, 1});
    CHECK(ext->gamma() == std::vector<Elem>{1, 2});
    // g^2 = g + 1 under the default modulus.
    CHECK(ext->mul(2, 2) == 3);
    CHECK(ext->add(2, 1) == 3);
    CHECK(ext->embed(1) == 1);
    CHECK(ext->digits(3) == std::vector<Elem>{1, 1});
}

TEST_CASE("extension field laws randomized") {
    std::mt19937 rng(11);
    auto f4 = Field::make(4);
    for (auto ext : {ExtField::make(Field::make(2), 8), ExtField::make(f4, 2),
                     ExtField::make(Field::make(3), 4), ExtField::make(Field::make(5), 3)}) {
        std::uniform_int_distribution<Elem> pick(0, ext->order() - 1);
        for (int i = 0; i < 2000; ++i) {
            Elem a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(ext->add(ext->add(a, b), c) == ext->add(a, ext->add(b, c)));
            REQUIRE(ext->mul(ext->mul(a, b), c) == ext->mul(a, ext->mul(b, c)));
            REQUIRE(ext->mul(a, ext->add(b, c)) == ext->add(ext->mul(a, b), ext->mul(a, c)));
            if (a) REQUIRE(ext->mul(a, ext->inv(a)) == 1);
        }
        // Embedding is a ring homomorphism on the base.
        const Field& base = *ext->base();
        for (Elem a = 0; a < base.q(); ++a)
            for (Elem b = 0; b < base.q(); ++b) {
                REQUIRE(ext->add(ext->embed(a), ext->embed(b)) == ext->embed(base.add(a, b)));
                REQUIRE(ext->mul(ext->embed(a), ext->embed(b)) == ext->embed(base.mul(a, b)));
            }
    }
}

TEST_CASE("extension rejects reducible moduli and oversized defaults") {
    // x^2 + 1 = (x+1)^2 over GF(2).
    CHECK_THROWS_AS(ExtField::make(Field::make(2), 2, std::vector<Elem>{1, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(ExtField::make(Field::make(256), 3), GuardError);
}

TEST_CASE("gamma expansion in the power basis") {
    auto ext = ExtField::make(Field::make(2), 2);
    // v = (1, g): rows are the coordinate vectors of 1 and g.
    auto m = gamma_expand(ext, {1, 2});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.entries() == std::vector<Elem>{1, 0, 0, 1});

    // Alternate basis (g, 1) swaps the columns.
    std::vector<Elem> alt{2, 1};
    auto ma = gamma_expand(ext, {1, 2}, &alt);
    CHECK(ma.entries() == std::vector<Elem>{0, 1, 1, 0});
}

TEST_CASE("gamma expansion is linear over the base field") {
    std::mt19937 rng(13);
    auto ext = ExtField::make(Field::make(3), 2);
    std::uniform_int_distribution<Elem> pick(0, ext->order() - 1);
    std::uniform_int_distribution<Elem> pickb(0, 2);
    for (int i = 0; i < 500; ++i) {
        Elem u = pick(rng), v = pick(rng), c = pickb(rng);
        auto mu = gamma_expand(ext, {u}), mv = gamma_expand(ext, {v});
        auto msum = gamma_expand(ext, {ext->add(u, v)});
        auto mscaled = gamma_expand(ext, {ext->mul(ext->embed(c), u)});
        const Field& base = *ext->base();
        for (unsigned j = 0; j < ext->m(); ++j) {
            REQUIRE(msum.at(0, j) == base.add(mu.at(0, j), mv.at(0, j)));
            REQUIRE(mscaled.at(0, j) == base.mul(c, mu.at(0, j)));
        }
    }
}

TEST_CASE("rref frozen example and properties") {
    auto f2 = Field::make(2);
    Matrix<Field> m(f2, 2, 2, {1, 1, 1, 1});
    auto rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.pivots == std::vector<std::size_t>{0});
    CHECK(rr.matrix.entries() == std::vector<Elem>{1, 1, 0, 0});
}

TEST_CASE("rank agrees with rank of the transpose") {
    std::mt19937 rng(17);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::make(q);
        std::uniform_int_distribution<Elem> pick(0, q - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 6);
            std::size_t r = dim(rng), c = dim(rng);
            Matrix<Field> m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) m.at(i, j) = pick(rng);
            REQUIRE(rank(m) == rank(m.transpose()));
        }
    }
}

TEST_CASE("nullspace rows annihilate the matrix") {
    std::mt19937 rng(19);
    auto f3 = Field::make(3);
    std::uniform_int_distribution<Elem> pick(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix<Field> m(f3, 3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = pick(rng);
        auto ker = nullspace(m);
        CHECK(ker.rows() == 5 - rank(m));
        auto prod = m * ker.transpose();
        for (Elem e : prod.entries()) REQUIRE(e == 0);
    }
}

TEST_CASE("matrix multiplication against the identity and by hand") {
    auto f4 = Field::make(4);
    auto id = Matrix<Field>::identity(f4, 3);
    Matrix<Field> m(f4, 3, 3, {1, 2, 3, 0, 1, 2, 2, 2, 1});
    CHECK((m * id) == m);
    CHECK((id * m) == m);

    // 1x2 times 2x1 over GF(4): (g, g+1) . (g, g)^T = g*g + (g+1)*g
    //                           = (g+1) + (g^2+g) = (g+1) + 1 = g.
    Matrix<Field> a(f4, 1, 2, {2, 3});
    Matrix<Field> b(f4, 2, 1, {2, 2});
    CHECK((a * b).entries() == std::vector<Elem>{2});
}

TEST_CASE("lifting a base matrix into an extension keeps entries") {
    auto ext = ExtField::make(Field::make(2), 2);
    Matrix<Field> h(Field::make(2), 2, 3, {1, 0, 1, 0, 1, 1});
    auto lifted = lift(h, ext);
    CHECK(lifted.entries() == h.entries());
    CHECK_THROWS_AS(lift(Matrix<Field>(Field::make(3), 1, 1, {1}), ext), InvalidArgument);
}
