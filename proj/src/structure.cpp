#include "diamondlab/structure.hpp"

#include <cmath>

namespace dlab {

Complex trace_functional(const RankOne& u, const CMat& x) {
    if (x.rows() != u.row.size() || x.cols() != u.column.size())
        throw std::invalid_argument("trace_functional: shape mismatch");
    return u.row.adjoint() * x * u.column;
}

RankOne minimal_below(const CMat& a, const Tol& tol, std::uint64_t seed) {
    require_square(a, "minimal_below");
    const double na = fro(a);
    if (na <= tol.atol)
        throw std::invalid_argument("minimal_below: input is (numerically) zero");

    Sampler s(seed);
    const Eigen::Index n = a.rows();
    for (int attempt = 0; attempt < 100; ++attempt) {
        CVec c(n);
        for (Eigen::Index i = 0; i < n; ++i) c(i) = s.gaussian();
        const CVec ac = a * c;
        if (ac.norm() <= tol.atol + tol.rtol * na * c.norm()) continue;
        // with w = c r*, v = w (a w)† reduces to c (ac)* / |ac|^2 and
        // u = a v a = (ac) (ac)* a / |ac|^2; a v is a rank-one projection
        RankOne u;
        u.column = ac;
        u.row = a.adjoint() * ac / ac.squaredNorm();
        return u;
    }
    throw std::runtime_error("minimal_below: no usable rank-one sample found");
}

bool is_minimal_diamond(const CMat& u, const Tol& tol) {
    if (fro(u) <= tol.atol)
        throw std::invalid_argument("is_minimal_diamond: input is (numerically) zero");
    return rank(u, tol) == 1;
}

MaximalityReport is_maximal_diamond(const CMat& a, const Tol& tol, std::uint64_t seed) {
    require_square(a, "is_maximal_diamond");
    const Eigen::Index n = a.rows();
    if (rank(a, tol) == n) return {true, std::nullopt};
    Sampler s(seed);
    const CMat ad = pinv(a, tol);
    const CMat id = CMat::Identity(n, n);
    const CMat corr = (id - a * ad) * s.ginibre(n) * (id - ad * a);
    return {false, a + corr};
}

bool is_projection(const CMat& p, const Tol& tol) {
    if (p.rows() != p.cols()) return false;
    return approx_eq(p * p, p, tol) && approx_eq(p.adjoint(), p, tol);
}

std::optional<bool> projection_characterization(const CMat& p, const CMat& q, const Tol& tol) {
    require_same_shape(p, q, "projection_characterization");
    if (!is_projection(q, tol)) return std::nullopt;
    return leq_diamond(p, q, tol).holds() && leq_diamond(q - p, q, tol).holds();
}

ProbeReport invertibility_probe(const CMat& a, const Tol& tol) {
    require_square(a, "invertibility_probe");
    const Eigen::Index n = a.rows();
    const CMat ad = pinv(a, tol);
    const CMat col_proj = a * ad;   // projection onto col(a)
    const CMat row_proj = ad * a;   // projection onto col(a*)

    ProbeReport rep{true, {}, ""};
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            // probe u = E_ij: a nonzero x in u A with x ◇≤ a exists iff
            // e_i lies in col(a) (then x = E_ii a works); dually for y.
            const double lres = (col_proj.col(i) - CMat::Identity(n, n).col(i)).norm();
            const double rres = (row_proj.col(j) - CMat::Identity(n, n).col(j)).norm();
            const bool lok = lres <= tol.thr(1.0);
            const bool rok = rres <= tol.thr(1.0);
            rep.transcript.push_back({i, j, lok, rok, lres, rres});
            if (!(lok && rok) && rep.invertible) {
                rep.invertible = false;
                rep.first_failure = "probe E_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                    (lok ? ": col(u) not within col(a*) on the right side"
                                         : ": col(u) not within col(a)");
            }
        }
    return rep;
}

std::optional<double> scalar_multiple_of_identity(const CMat& m, const Tol& tol) {
    if (m.rows() != m.cols()) return std::nullopt;
    const Eigen::Index n = m.rows();
    const double lambda = m.diagonal().real().mean();
    const CMat id = CMat::Identity(n, n);
    const double res = (m - lambda * id).norm();
    if (res <= tol.atol + tol.rtol * std::abs(lambda) * static_cast<double>(n))
        return lambda;
    return std::nullopt;
}

std::optional<bool> unitary_mult_preserves(const CMat& u,
                                           const std::vector<std::pair<CMat, CMat>>& pairs,
                                           const Tol& tol) {
    require_square(u, "unitary_mult_preserves");
    const auto lam_left = scalar_multiple_of_identity(u.adjoint() * u, tol);
    const auto lam_right = scalar_multiple_of_identity(u * u.adjoint(), tol);
    const bool left = lam_left && *lam_left > 0;
    const bool right = lam_right && *lam_right > 0;
    if (!left && !right) return std::nullopt;

    for (const auto& [a, b] : pairs) {
        if (!leq_diamond(a, b, tol).holds()) continue;
        if (left && !leq_diamond(u * a, u * b, tol).holds()) return false;
        if (right && !leq_diamond(a * u, b * u, tol).holds()) return false;
    }
    return true;
}

DefectResult scalar_unitary_defect(const CMat& u, const Tol& tol, std::uint64_t seed,
                                   int budget) {
    require_square(u, "scalar_unitary_defect");
    const Eigen::Index n = u.rows();
    if (auto lam = scalar_multiple_of_identity(u * u.adjoint(), tol); lam && *lam > 0)
        return NoDefect{};

    const CMat ud = pinv(u, tol);

    std::vector<CMat> candidates;
    const CMat id = CMat::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            if (i == j) {
                candidates.push_back(id.col(i) * id.col(i).adjoint());
            } else {
                const CVec w = (id.col(i) + id.col(j)) / std::sqrt(2.0);
                candidates.push_back(w * w.adjoint());
            }
        }
    Sampler s(seed);
    for (int k = 0; k < budget; ++k) {
        const Eigen::Index r = 1 + static_cast<Eigen::Index>(s.uniform_index(n));
        candidates.push_back(s.projection(n, r));
    }

    for (const CMat& p : candidates) {
        // the proof's pairs: u†p ◇≤ u† and u†(1-p) ◇≤ u†; preservation
        // under right multiplication by u must then fail for some p
        for (const CMat& q : {CMat(ud * p), CMat(ud * (id - p))}) {
            if (!leq_diamond(q, ud, tol).holds()) continue;
            if (!leq_diamond(q * u, ud * u, tol).holds())
                return DefectWitness{p, q, ud};
        }
    }
    return Inconclusive{};
}

}  // namespace dlab
