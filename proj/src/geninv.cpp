#include "diamondlab/geninv.hpp"

#include <algorithm>
#include <cmath>

namespace dlab {

double PenroseResiduals::max() const { return std::max({r1, r2, r3, r4}); }

CMat pinv(const CMat& a, const Tol& tol) {
    if (a.size() == 0) return a.adjoint();
    const SvdFactors f = svd(a);
    const double cut = rank_cutoff(f, a.rows(), a.cols(), tol);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(f.sigma.size());
    for (Eigen::Index i = 0; i < f.sigma.size(); ++i)
        if (f.sigma(i) > cut) inv(i) = 1.0 / f.sigma(i);
    const Eigen::Index k = f.sigma.size();
    return f.right.leftCols(k) * inv.asDiagonal() * f.left.leftCols(k).adjoint();
}

std::optional<CMat> group_inverse(const CMat& a, const Tol& tol) {
    require_square(a, "group_inverse");
    const Eigen::Index n = a.rows();
    const SvdFactors f = svd(a);
    const double cut = rank_cutoff(f, n, n, tol);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < f.sigma.size(); ++i)
        if (f.sigma(i) > cut) ++r;
    if (r == 0) return CMat::Zero(n, n);
    if (rank(a * a, tol) != r) return std::nullopt;

    // full-rank factorization a = F G from the SVD
    const CMat F = f.left.leftCols(r) * f.sigma.head(r).asDiagonal();
    const CMat G = f.right.leftCols(r).adjoint();
    const CMat gf = G * F;

    // rank(a^2) = rank(a) makes GF invertible in exact arithmetic; refuse
    // when it is numerically on the edge.
    const SvdFactors gfs = svd(gf);
    const double smin = gfs.sigma(r - 1);
    if (smin <= 0.0 || gfs.sigma(0) / smin > 1.0 / tol.rank_rel) return std::nullopt;

    const CMat gf_inv = gf.partialPivLu().inverse();
    return F * gf_inv * gf_inv * G;
}

CMat inner_inverse(const CMat& b, const CMat& v, const Tol& tol) {
    if (v.rows() != b.cols() || v.cols() != b.rows())
        throw std::invalid_argument("inner_inverse: parameter v must have the shape of b*");
    const CMat bd = pinv(b, tol);
    return bd + v - bd * b * v * b * bd;
}

PenroseResiduals penrose_residuals(const CMat& a, const CMat& g) {
    if (g.rows() != a.cols() || g.cols() != a.rows())
        throw std::invalid_argument("penrose_residuals: g must have the shape of a*");
    const double scale = std::max(1.0, fro(a));
    const CMat ag = a * g;
    const CMat ga = g * a;
    return PenroseResiduals{
        (ag * a - a).norm() / scale,
        (ga * g - g).norm() / scale,
        (ag.adjoint() - ag).norm() / scale,
        (ga.adjoint() - ga).norm() / scale,
    };
}

BlockMat pinv(const BlockMat& a, const Tol& tol) {
    BlockMat out;
    out.blocks.reserve(a.blocks.size());
    for (const auto& blk : a.blocks) out.blocks.push_back(pinv(blk, tol));
    return out;
}

std::optional<BlockMat> group_inverse(const BlockMat& a, const Tol& tol) {
    BlockMat out;
    out.blocks.reserve(a.blocks.size());
    for (const auto& blk : a.blocks) {
        auto g = group_inverse(blk, tol);
        if (!g) return std::nullopt;
        out.blocks.push_back(std::move(*g));
    }
    return out;
}

}  // namespace dlab
