#ifndef DIAMONDLAB_GENINV_HPP
#define DIAMONDLAB_GENINV_HPP

#include <optional>

#include "diamondlab/matcore.hpp"

namespace dlab {

/// Frobenius residuals of the four Penrose equations, each normalized by
/// max(1, |a|_F).
struct PenroseResiduals {
    double r1;  // |a g a - a|
    double r2;  // |g a g - g|
    double r3;  // |(a g)* - a g|
    double r4;  // |(g a)* - g a|

    double max() const;
};

/// Moore-Penrose inverse via SVD; singular values at or below the rank
/// cutoff are zeroed, not inverted.
CMat pinv(const CMat& a, const Tol& tol = {});

/// Group inverse when rank(a^2) = rank(a); nullopt otherwise (also when
/// the full-rank-factor product GF is too ill conditioned to invert
/// meaningfully).
std::optional<CMat> group_inverse(const CMat& a, const Tol& tol = {});

/// Member of the affine family of inner inverses of b parametrized by v:
/// b^- = b† + v - b† b v b b†. v = 0 gives b†.
CMat inner_inverse(const CMat& b, const CMat& v, const Tol& tol = {});

PenroseResiduals penrose_residuals(const CMat& a, const CMat& g);

BlockMat pinv(const BlockMat& a, const Tol& tol = {});
std::optional<BlockMat> group_inverse(const BlockMat& a, const Tol& tol = {});

}  // namespace dlab

#endif
