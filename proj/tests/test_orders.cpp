#include <doctest.h>

#include "diamondlab/orders.hpp"
#include "diamondlab/suites.hpp"

using namespace dlab;

namespace {
CMat diag(std::initializer_list<double> entries) {
    CMat m = CMat::Zero(entries.size(), entries.size());
    Eigen::Index i = 0;
    for (double e : entries) m(i, i) = e, ++i;
    return m;
}
const CMat kE11 = diag({1, 0});
const CMat kE22 = diag({0, 1});
const CMat kI2 = CMat::Identity(2, 2);
}  // namespace

TEST_CASE("space pre-order basics") {
    CHECK(leq_space(kE11, kI2).holds());
    const OrderReport fail = leq_space(kE11, kE22);
    CHECK_FALSE(fail.holds());
    CHECK(fail.residuals.at("col_incl") == doctest::Approx(1.0));
}

TEST_CASE("space witnesses reproduce a = xb = by") {
    Sampler s(2);
    const CMat b = s.ginibre(3);
    const CMat a = s.ginibre(3) * b;  // row space of a inside row space of b
    const OrderReport rep = leq_space(a, CMat(b + CMat::Zero(3, 3)));
    if (rep.holds()) {
        CHECK(approx_eq(rep.witnesses.at("x") * b, a));
        CHECK(approx_eq(b * rep.witnesses.at("y"), a));
    }
    // full-rank b relates everything both ways
    const OrderReport full = leq_space(a, CMat::Identity(3, 3));
    CHECK(full.holds());
    CHECK(approx_eq(full.witnesses.at("x"), a));
}

TEST_CASE("worked 2x2 instance: diamond holds, star and orthogonality fail") {
    const ExamplePair ex = example_pair();
    CHECK((ex.a * ex.u.adjoint() * ex.a).norm() <= 1e-12);
    CHECK(leq_space(ex.a, ex.b).holds());
    CHECK(leq_diamond(ex.a, ex.b).holds());
    CHECK(leq_diamond_dagger(ex.a, ex.b).holds());
    CHECK_FALSE(leq_star(ex.a, ex.b).holds());
    CHECK_FALSE(orthogonal(ex.a, ex.u));
}

TEST_CASE("diamond basics") {
    Sampler s(5);
    CHECK(leq_diamond(CMat::Zero(3, 3), s.ginibre(3)).holds());
    CHECK_FALSE(leq_diamond(diag({1, 0}), diag({2, 0})).holds());
    // projections sit below the identity
    CHECK(leq_diamond(s.projection(4, 2), CMat::Identity(4, 4)).holds());
    CHECK_THROWS_AS(leq_diamond(CMat::Zero(2, 2), CMat::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("dagger route agrees with the definition route") {
    for (Eigen::Index n : {2, 3, 4}) {
        for (int k = 0; k < 100; ++k) {
            Sampler s(mix_seed(1000 + n, k));
            CMat a, b;
            if (k % 2) {
                std::tie(a, b) = gen_diamond_pair(n, mix_seed(n, k));
            } else {
                a = s.fixed_rank(n, 1 + s.uniform_index(n));
                b = s.ginibre(n);
            }
            CHECK(leq_diamond(a, b).holds() == leq_diamond_dagger(a, b).holds());
        }
    }
}

TEST_CASE("star order basics") {
    CHECK(leq_star(diag({1, 0}), diag({1, 3})).holds());
    CHECK(leq_left_star(diag({1, 0}), diag({1, 3})).holds());
    CHECK(leq_right_star(diag({1, 0}), diag({1, 3})).holds());
    CHECK_FALSE(leq_star(diag({1, 0}), diag({2, 0})).holds());
}

TEST_CASE("svd truncation produces star pairs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto [a, b] = gen_star_pair(4, seed);
        CHECK(leq_star(a, b).holds());
        CHECK(leq_left_star(a, b).holds());
        CHECK(leq_right_star(a, b).holds());
        CHECK(leq_diamond(a, b).holds());  // star implies diamond
    }
}

TEST_CASE("minus order by rank subtractivity") {
    CHECK(leq_minus(diag({1, 0, 0}), diag({1, 2, 0})).holds());
    CHECK_FALSE(leq_minus(diag({1, 0}), diag({2, 0})).holds());
    Sampler s(1);
    const CMat a = s.ginibre(3);
    CHECK(leq_minus(a, a).holds());
}

TEST_CASE("minus witness") {
    SUBCASE("diagonal pair has the textbook witness") {
        const auto w = minus_witness(diag({1, 0, 0}), diag({1, 2, 0}));
        REQUIRE(w.has_value());
        CHECK(approx_eq(*w, diag({1, 0.5, 0})));
    }
    SUBCASE("reflexive pair yields the Moore-Penrose inverse") {
        Sampler s(3);
        const CMat a = s.fixed_rank(3, 2);
        const auto w = minus_witness(a, a);
        REQUIRE(w.has_value());
        CHECK(approx_eq(*w, pinv(a)));
    }
    SUBCASE("no witness when rank subtractivity fails") {
        CHECK_FALSE(minus_witness(diag({1, 0}), diag({2, 0})).has_value());
    }
    SUBCASE("witness identities hold when found") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto [a, b] = gen_diamond_pair(3, 2 * seed);  // route (i) pairs
            const auto w = minus_witness(a, b);
            const bool rank_route = leq_minus(a, b).holds();
            CHECK(w.has_value() == rank_route);
            if (w) {
                CHECK((a * *w * b - a).norm() <= 1e-8 * std::max(1.0, fro(a)));
                CHECK((b * *w * a - a).norm() <= 1e-8 * std::max(1.0, fro(a)));
                CHECK((a * *w * a - a).norm() <= 1e-8 * std::max(1.0, fro(a)));
            }
        }
    }
}

TEST_CASE("sharp order") {
    CHECK(leq_sharp(diag({1, 0}), diag({1, 5})).holds());
    CHECK(leq_sharp(diag({1, 0}), diag({1, 0})).holds());
    CMat nil(2, 2);
    nil << 0, 1, 0, 0;
    CHECK(leq_sharp(nil, kI2).verdict == Verdict::Inapplicable);
}

TEST_CASE("orthogonality predicate") {
    CHECK(orthogonal(kE11, kE22));
    CHECK(orthogonal(kE11, CMat::Zero(2, 2)));
    CHECK_FALSE(orthogonal(kE11, kI2));
}

TEST_CASE("generated diamond pairs satisfy the predicate") {
    for (Eigen::Index n : {2, 3, 4, 8}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto [a, b] = gen_diamond_pair(n, mix_seed(77, seed * 4 + n));
            CHECK(leq_diamond(a, b).holds());
        }
    }
}

TEST_CASE("dagger duality: diamond(a,b) iff minus(a+, b+)") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Sampler s(seed);
        CMat a, b;
        if (seed % 2) {
            std::tie(a, b) = gen_diamond_pair(3, seed);
        } else {
            a = s.fixed_rank(3, 1 + s.uniform_index(3));
            b = s.fixed_rank(3, 1 + s.uniform_index(3));
        }
        CHECK(leq_diamond(a, b).holds() == leq_minus(pinv(a), pinv(b)).holds());
    }
}

TEST_CASE("hasse diagram") {
    SUBCASE("chain 0 -> E11 -> I") {
        const HasseDiagram h = hasse({CMat::Zero(2, 2), kE11, kI2}, OrderKind::Diamond);
        REQUIRE(h.classes.size() == 3);
        REQUIRE(h.edges.size() == 2);
        // cover edges only: 0 -> E11, E11 -> I
        for (const auto& e : h.edges) {
            const std::size_t from = h.classes[e.from][0];
            const std::size_t to = h.classes[e.to][0];
            CHECK(((from == 0 && to == 1) || (from == 1 && to == 2)));
        }
    }
    SUBCASE("two incomparable projections below the identity") {
        const HasseDiagram h = hasse({kE11, kE22, kI2}, OrderKind::Diamond);
        CHECK(h.edges.size() == 2);
        for (const auto& e : h.edges) CHECK(h.classes[e.to][0] == 2);
    }
    SUBCASE("singleton has no edges") {
        CHECK(hasse({kE11}, OrderKind::Diamond).edges.empty());
    }
    SUBCASE("sharp excludes non group invertible elements") {
        CMat nil(2, 2);
        nil << 0, 1, 0, 0;
        const HasseDiagram h = hasse({nil, kI2}, OrderKind::Sharp);
        REQUIRE(h.excluded.size() == 1);
        CHECK(h.excluded[0] == 0);
    }
    SUBCASE("space pre-order collapses equivalent elements") {
        const HasseDiagram h = hasse({kE11, CMat(2.0 * kE11), kI2}, OrderKind::Space);
        CHECK(h.classes.size() == 2);  // E11 ~ 2 E11
    }
}
