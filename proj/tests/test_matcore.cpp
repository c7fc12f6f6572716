#include <doctest.h>

#include "diamondlab/matcore.hpp"

using namespace dlab;

namespace {
CMat diag2(double a, double b) {
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}
}  // namespace

TEST_CASE("svd on a diagonal matrix") {
    const SvdFactors f = svd(diag2(3, 1));
    CHECK(f.sigma(0) == doctest::Approx(3.0));
    CHECK(f.sigma(1) == doctest::Approx(1.0));
}

TEST_CASE("svd of the zero matrix") {
    const SvdFactors f = svd(CMat::Zero(2, 2));
    CHECK(f.sigma(0) == 0.0);
    CHECK(f.sigma(1) == 0.0);
}

TEST_CASE("svd reconstruction and unitarity on random input") {
    for (std::uint64_t seed : {1, 2, 3}) {
        const CMat a = sample(SampleKind::Ginibre, 4, seed);
        const SvdFactors f = svd(a);
        CHECK((f.reconstruct() - a).norm() <= 1e-12 * f.sigma(0));
        CHECK((f.left.adjoint() * f.left - CMat::Identity(4, 4)).norm() <= 1e-12);
        CHECK((f.right.adjoint() * f.right - CMat::Identity(4, 4)).norm() <= 1e-12);
    }
}

TEST_CASE("svd rejects non-finite entries") {
    CMat a = CMat::Zero(2, 2);
    a(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(svd(a), std::invalid_argument);
}

TEST_CASE("numerical rank") {
    CHECK(rank(diag2(1, 0)) == 1);
    CHECK(rank(diag2(1e-15, 1)) == 1);  // 1e-15 below the cutoff 1e-12 * 1 * 2
    CHECK(rank(CMat::Identity(3, 3)) == 3);
    CHECK(rank(CMat::Zero(3, 3)) == 0);
}

TEST_CASE("rank symmetry under adjoint and gram product") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Sampler s(seed);
        const CMat a = s.fixed_rank(5, 1 + s.uniform_index(5));
        const Eigen::Index r = rank(a);
        CHECK(rank(CMat(a.adjoint())) == r);
        CHECK(rank(CMat(a * a.adjoint())) == r);
    }
}

TEST_CASE("approx_eq") {
    const CMat id = CMat::Identity(2, 2);
    CHECK(approx_eq(id, id));
    CMat nudged = id;
    nudged(0, 0) += 1e-12;
    CHECK(approx_eq(id, nudged));
    CHECK_FALSE(approx_eq(diag2(1, 0), diag2(0, 1)));
    CHECK_THROWS_AS(approx_eq(id, CMat::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("approx_eq is reflexive and symmetric") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Sampler s(seed);
        const CMat a = s.ginibre(3);
        const CMat b = a + 1e-11 * s.ginibre(3);
        CHECK(approx_eq(a, a));
        CHECK(approx_eq(a, b) == approx_eq(b, a));
    }
}

TEST_CASE("zero matrix is only approx_eq to near-zero matrices") {
    const Tol tol;
    CHECK(approx_eq(CMat::Zero(2, 2), CMat::Constant(2, 2, tol.atol / 10)));
    CHECK_FALSE(approx_eq(CMat::Zero(2, 2), CMat::Constant(2, 2, 1e-6)));
}

TEST_CASE("sampled projections are selfadjoint idempotents of the requested rank") {
    for (std::uint64_t seed : {5, 6, 7}) {
        const CMat p = sample(SampleKind::Projection, 4, seed, 1);
        CHECK(approx_eq(p * p, p));
        CHECK(approx_eq(CMat(p.adjoint()), p));
        CHECK(rank(p) == 1);
    }
}

TEST_CASE("sampled unitaries are unitary") {
    for (Eigen::Index n : {2, 4, 8}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const CMat u = sample(SampleKind::Unitary, n, seed);
            CHECK((u.adjoint() * u - CMat::Identity(n, n)).norm() <= 1e-10 * double(n));
        }
    }
}

TEST_CASE("sampling is deterministic per (kind, n, seed)") {
    const CMat a = sample(SampleKind::Ginibre, 3, 42);
    const CMat b = sample(SampleKind::Ginibre, 3, 42);
    CHECK((a - b).norm() == 0.0);
    const CMat c = sample(SampleKind::Ginibre, 3, 43);
    CHECK((a - c).norm() > 0.0);
}

TEST_CASE("sample rejects r > n") {
    CHECK_THROWS_AS(sample(SampleKind::Projection, 2, 0, 3), std::invalid_argument);
}

TEST_CASE("partial isometry sample satisfies w w* w = w") {
    const CMat w = sample(SampleKind::PartialIsometry, 4, 9, 2);
    CHECK(approx_eq(w * w.adjoint() * w, w));
}

TEST_CASE("block operations act blockwise") {
    Sampler s(3);
    BlockMat a, b;
    a.blocks = {s.ginibre(2), s.ginibre(3)};
    b.blocks = {s.ginibre(2), s.ginibre(3)};
    const BlockMat prod = a * b;
    const BlockMat adj = a.adjoint();
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(approx_eq(prod.blocks[i], CMat(a.blocks[i] * b.blocks[i])));
        CHECK(approx_eq(adj.blocks[i], CMat(a.blocks[i].adjoint())));
    }
    CHECK(approx_eq(prod.dense(), CMat(a.dense() * b.dense())));
    CHECK_THROWS_AS(BlockMat({s.ginibre(2, 3)}), std::invalid_argument);
}

TEST_CASE("vec/kron identity vec(M v N) = (N^T kron M) vec(v)") {
    Sampler s(11);
    const CMat m = s.ginibre(3), v = s.ginibre(3), n = s.ginibre(3);
    const CVec lhs = vec(CMat(m * v * n));
    const CVec rhs = kron(n.transpose(), m) * vec(v);
    CHECK((lhs - rhs).norm() <= 1e-12 * lhs.norm());
}
