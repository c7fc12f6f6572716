#ifndef DIAMONDLAB_STRUCTURE_HPP
#define DIAMONDLAB_STRUCTURE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diamondlab/orders.hpp"

namespace dlab {

/// Rank-one element u = column * row^H.
struct RankOne {
    CVec column;
    CVec row;

    CMat dense() const { return column * row.adjoint(); }
};

/// The unique linear functional with u x u = tau_u(x) u; tau_u(1) is the
/// trace of u.
Complex trace_functional(const RankOne& u, const CMat& x);

/// A rank-one element diamond-below a nonzero a, built as u = a v a with
/// v = w (a w)† for a sampled rank-one w with a w != 0.
RankOne minimal_below(const CMat& a, const Tol& tol = {}, std::uint64_t seed = 0);

/// Minimal elements of the diamond order on M_n \ {0} are exactly the
/// rank-one matrices.
bool is_minimal_diamond(const CMat& u, const Tol& tol = {});

struct MaximalityReport {
    bool maximal;
    // for non-maximal a: a strictly diamond-larger element
    // a + (1 - aa†) x (1 - a†a)
    std::optional<CMat> strictly_above;
};

MaximalityReport is_maximal_diamond(const CMat& a, const Tol& tol = {}, std::uint64_t seed = 1);

/// p ◇≤ q and q - p ◇≤ q, for a projection q; true exactly when p is
/// itself a projection. Nullopt when q is not a projection.
std::optional<bool> projection_characterization(const CMat& p, const CMat& q,
                                                const Tol& tol = {});

bool is_projection(const CMat& p, const Tol& tol = {});

struct ProbeRecord {
    Eigen::Index i;
    Eigen::Index j;
    bool left_ok;   // nonzero x in E_ij A with x ◇≤ a exists
    bool right_ok;  // nonzero y in A E_ij with y ◇≤ a exists
    double left_residual;
    double right_residual;
};

/// Invertibility probe over the matrix-unit basis: a is invertible iff
/// every probe admits the nonzero diamond-below elements of the
/// characterization. Transcript names the first failing probe.
struct ProbeReport {
    bool invertible;
    std::vector<ProbeRecord> transcript;
    std::string first_failure;  // empty when invertible
};

ProbeReport invertibility_probe(const CMat& a, const Tol& tol = {});

/// Checks that left multiplication by u (with u*u = lambda 1) maps every
/// diamond pair to a diamond pair; the right-multiplication analogue is
/// checked when uu* = lambda 1. Nullopt when neither precondition holds.
std::optional<bool> unitary_mult_preserves(const CMat& u,
                                           const std::vector<std::pair<CMat, CMat>>& pairs,
                                           const Tol& tol = {});

struct NoDefect {};
struct DefectWitness {
    CMat p;  // projection triggering the defect
    CMat a;  // u† p
    CMat b;  // u†
};
struct Inconclusive {};

using DefectResult = std::variant<NoDefect, DefectWitness, Inconclusive>;

/// For u with uu* not a scalar, searches projections p for which the pair
/// (u†p, u†) breaks right-multiplication preservation (or u†pu fails the
/// projection characterization). NoDefect when uu* = lambda 1;
/// Inconclusive when the search budget is exhausted.
DefectResult scalar_unitary_defect(const CMat& u, const Tol& tol = {}, std::uint64_t seed = 7,
                                   int budget = 50);

/// Least-squares lambda with m ≈ lambda I, plus the residual test.
std::optional<double> scalar_multiple_of_identity(const CMat& m, const Tol& tol = {});

}  // namespace dlab

#endif
