#include <catch2/catch_amalgamated.hpp>

#include "conegeo/subspace.hpp"
#include "conegeo/symmat.hpp"
#include "testutil.hpp"

using namespace conegeo;
using namespace conegeo::testutil;

namespace {

Subspace random_subspace(Rng& rng, int ambient, const QVec& w) {
    int gens = (int)rng.uniform(0, ambient);
    return Subspace(ambient, random_mat(rng, gens, ambient, -4, 4), w);
}

}  // namespace

TEST_CASE("canonical basis makes equality span equality") {
    Mat g1{{rat(1), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    Mat g2{{rat(2), rat(2), rat(2)}, {rat(1), rat(1), rat(5)}};
    CHECK(Subspace(3, g1) == Subspace(3, g2));
    CHECK(Subspace(3, g1) != Subspace(3, Mat{{rat(1), rat(0), rat(0)}}));
    CHECK(Subspace(3, g1).dim() == 2);
    CHECK(Subspace::zero(3, QVec(3, rat(1))).dim() == 0);
    CHECK(Subspace::full(3, QVec(3, rat(1))).is_full());
}

TEST_CASE("membership") {
    Subspace s(3, Mat{{rat(1), rat(2), rat(0)}, {rat(0), rat(0), rat(1)}});
    CHECK(s.contains(QVec{rat(2), rat(4), rat(-7)}));
    CHECK_FALSE(s.contains(QVec{rat(1), rat(0), rat(0)}));
    CHECK(s.contains(qvec_zero(3)));
}

TEST_CASE("orthogonal complement, unit weights") {
    Subspace s(3, Mat{{rat(1), rat(1), rat(1)}});
    Subspace c = s.orth_complement();
    CHECK(c.dim() == 2);
    for (const QVec& b : c.basis) CHECK(is_zero(dot(b, QVec{rat(1), rat(1), rat(1)})));
    CHECK(c.orth_complement() == s);
}

TEST_CASE("orthogonal complement respects weights") {
    // Weighted pairing <(a,b),(c,d)> = ac + 2bd.
    QVec w{rat(1), rat(2)};
    Subspace s(2, Mat{{rat(2), rat(1)}}, w);
    Subspace c = s.orth_complement();
    REQUIRE(c.dim() == 1);
    CHECK(is_zero(s.inner(c.basis[0], QVec{rat(2), rat(1)})));
    // Euclidean complement of the same line is different.
    Subspace ce = Subspace(2, Mat{{rat(2), rat(1)}}).orth_complement();
    CHECK(primitive(c.basis[0]) != primitive(ce.basis[0]));
}

TEST_CASE("complement involution and dimension count") {
    Rng rng(21);
    QVec symw = sym_weights(3);
    for (int t = 0; t < 120; ++t) {
        int ambient = (int)rng.uniform(1, 6);
        QVec w = (t % 3 == 0 && ambient == 6) ? symw : QVec(ambient, rat(1));
        if ((int)w.size() != ambient) w = QVec(ambient, rat(1));
        Subspace s = random_subspace(rng, ambient, w);
        Subspace c = s.orth_complement();
        CHECK(s.dim() + c.dim() == ambient);
        CHECK(c.orth_complement() == s);
        for (const QVec& bs : s.basis)
            for (const QVec& bc : c.basis) CHECK(is_zero(s.inner(bs, bc)));
    }
}

TEST_CASE("projection splits vectors orthogonally") {
    Rng rng(22);
    for (int t = 0; t < 120; ++t) {
        int ambient = (int)rng.uniform(1, 5);
        QVec w(ambient, rat(1));
        if (t % 2) {
            for (int i = 0; i < ambient; ++i) w[i] = rat(rng.uniform(1, 3));
        }
        Subspace s = random_subspace(rng, ambient, w);
        QVec v = random_vec(rng, ambient, -5, 5, 3);
        QVec p = s.project(v);
        QVec r = sub(v, p);
        CHECK(s.contains(p));
        for (const QVec& b : s.basis) CHECK(is_zero(s.inner(b, r)));
        CHECK(s.project(p) == p);
        CHECK(s.inner(v, v) == s.inner(p, p) + s.inner(r, r));
    }
}

TEST_CASE("projection onto complement completes the identity") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        int ambient = (int)rng.uniform(1, 5);
        QVec w(ambient, rat(1));
        Subspace s = random_subspace(rng, ambient, w);
        Subspace c = s.orth_complement();
        QVec v = random_vec(rng, ambient, -4, 4, 2);
        CHECK(add(s.project(v), c.project(v)) == v);
    }
}

TEST_CASE("sum and intersection") {
    Subspace a(3, Mat{{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}});
    Subspace b(3, Mat{{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
    CHECK(sum(a, b).is_full());
    Subspace i = intersect(a, b);
    REQUIRE(i.dim() == 1);
    CHECK(i.contains(QVec{rat(0), rat(1), rat(0)}));

    Rng rng(24);
    for (int t = 0; t < 80; ++t) {
        int ambient = (int)rng.uniform(1, 5);
        QVec w(ambient, rat(1));
        Subspace x = random_subspace(rng, ambient, w);
        Subspace y = random_subspace(rng, ambient, w);
        CHECK(sum(x, y).dim() + intersect(x, y).dim() == x.dim() + y.dim());
        CHECK(intersect(x, y).orth_complement() ==
              sum(x.orth_complement(), y.orth_complement()));
        for (const QVec& bx : x.basis) CHECK(sum(x, y).contains(bx));
        for (const QVec& bi : intersect(x, y).basis) {
            CHECK(x.contains(bi));
            CHECK(y.contains(bi));
        }
    }
}
