#include <doctest.h>

#include "diamondlab/geninv.hpp"

using namespace dlab;

namespace {
CMat mat2(Complex a, Complex b, Complex c, Complex d) {
    CMat m(2, 2);
    m << a, b, c, d;
    return m;
}
}  // namespace

TEST_CASE("pinv of [[0,2],[0,0]]") {
    const CMat g = pinv(mat2(0, 2, 0, 0));
    CHECK(approx_eq(g, mat2(0, 0, 0.5, 0)));
}

TEST_CASE("pinv of zero is zero") {
    CHECK(pinv(CMat::Zero(3, 2)).isZero(0));
}

TEST_CASE("pinv satisfies the Penrose equations on rank-deficient input") {
    Sampler s(21);
    const CMat a = s.fixed_rank(5, 3);
    const CMat g = pinv(a);
    CHECK((a * g * a - a).norm() <= 1e-10 * fro(a));
    CHECK(penrose_residuals(a, g).max() <= 1e-10);
}

TEST_CASE("pinv involution and adjoint commutation") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Sampler s(seed);
        const CMat a = s.fixed_rank(4, 1 + s.uniform_index(4));
        CHECK((pinv(pinv(a)) - a).norm() <= 1e-9 * std::max(1.0, fro(a)));
        CHECK(approx_eq(pinv(CMat(a.adjoint())), CMat(pinv(a).adjoint())));
    }
}

TEST_CASE("group inverse of a nilpotent does not exist") {
    CHECK_FALSE(group_inverse(mat2(0, 1, 0, 0)).has_value());
}

TEST_CASE("group inverse of diag(2,0)") {
    const auto g = group_inverse(mat2(2, 0, 0, 0));
    REQUIRE(g.has_value());
    CHECK(approx_eq(*g, mat2(0.5, 0, 0, 0)));
}

TEST_CASE("idempotents are their own group inverse") {
    const CMat p = mat2(1, 1, 0, 0);
    const auto g = group_inverse(p);
    REQUIRE(g.has_value());
    CHECK(approx_eq(*g, p));
}

TEST_CASE("group inverse rejects rectangular input") {
    CHECK_THROWS_AS(group_inverse(CMat::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("group inverse is a commuting generalized inverse; EP elements match pinv") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Sampler s(seed);
        // normal samples (hermitian) are EP: a a† = a† a and a# = a†
        const CMat h = s.hermitian(4);
        const auto g = group_inverse(h);
        REQUIRE(g.has_value());
        CHECK(approx_eq(h * *g * h, h));
        CHECK(approx_eq(*g * h * *g, *g));
        CHECK(approx_eq(h * *g, *g * h));
        CHECK((*g - pinv(h)).norm() <= 1e-8 * std::max(1.0, fro(*g)));
    }
}

TEST_CASE("inner inverse family") {
    Sampler s(4);
    const CMat b = s.fixed_rank(4, 2);

    SUBCASE("v = 0 gives the Moore-Penrose inverse") {
        CHECK(approx_eq(inner_inverse(b, CMat::Zero(4, 4)), pinv(b)));
    }
    SUBCASE("identity absorbs any parameter") {
        CHECK(approx_eq(inner_inverse(CMat::Identity(3, 3), s.ginibre(3)), CMat::Identity(3, 3)));
    }
    SUBCASE("always an inner inverse") {
        const CMat g = inner_inverse(b, s.ginibre(4));
        CHECK((b * g * b - b).norm() <= 1e-10 * fro(b));
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(inner_inverse(b, CMat::Zero(3, 3)), std::invalid_argument);
    }
}

TEST_CASE("inner inverses with random parameter usually break Penrose 3-4") {
    Sampler s(99);
    int broken = 0;
    for (int k = 0; k < 100; ++k) {
        const CMat b = s.fixed_rank(4, 2);
        const CMat g = inner_inverse(b, s.ginibre(4));
        const PenroseResiduals r = penrose_residuals(b, g);
        CHECK(r.r1 <= 1e-9);  // first equation holds by construction
        if (r.r3 > 0.01 || r.r4 > 0.01) ++broken;
    }
    CHECK(broken >= 95);
}

TEST_CASE("penrose_residuals examples") {
    const CMat id = CMat::Identity(2, 2);
    const PenroseResiduals zero = penrose_residuals(id, id);
    CHECK(zero.max() == 0.0);

    const PenroseResiduals off = penrose_residuals(mat2(1, 0, 0, 0), mat2(0, 0, 0, 1));
    CHECK(off.r1 == doctest::Approx(1.0));

    CHECK_THROWS_AS(penrose_residuals(CMat::Zero(2, 3), CMat::Zero(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("blockwise pinv and group inverse") {
    Sampler s(8);
    BlockMat a;
    a.blocks = {s.hermitian(2), s.hermitian(3)};
    const BlockMat g = pinv(a);
    CHECK(approx_eq(g.dense(), pinv(a.dense())));
    const auto gi = group_inverse(a);
    REQUIRE(gi.has_value());
    CHECK(approx_eq(gi->dense(), *group_inverse(a.dense())));
}
