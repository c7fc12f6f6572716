#ifndef DIAMONDLAB_PRESERVERS_HPP
#define DIAMONDLAB_PRESERVERS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "diamondlab/orders.hpp"

namespace dlab {

struct CanonicalTag {
    double lambda;
    CMat left;       // U
    CMat right;      // V
    bool transpose;
};

/// Linear operator on M_n(C) stored as an n^2 x n^2 supermatrix acting on
/// column-major vectorized matrices.
struct LinearMap {
    Eigen::Index dim;
    CMat super;
    std::optional<CanonicalTag> tag;

    static LinearMap identity(Eigen::Index n);
    static LinearMap from_function(Eigen::Index n, const std::function<CMat(const CMat&)>& f);
};

CMat apply(const LinearMap& t, const CMat& a);

/// Commutation matrix: vec(x^T) = K vec(x).
CMat commutation_matrix(Eigen::Index n);

/// x -> lambda U x V, or lambda U x^T V when transpose is set.
LinearMap make_canonical(double lambda, const CMat& u, const CMat& v, bool transpose,
                         const Tol& tol = {});

/// J(a) = blockdiag(a, a^T): a Jordan *-homomorphism into the non-prime
/// algebra M_n ⊕ M_n that is neither a homomorphism nor an
/// anti-homomorphism.
BlockMat jordan_embedding(const CMat& a);

bool jordan_star_check(const LinearMap& t, int samples = 50, std::uint64_t seed = 11,
                       const Tol& tol = {});
bool jordan_star_check(const std::function<BlockMat(const CMat&)>& f, Eigen::Index n,
                       int samples = 50, std::uint64_t seed = 11, const Tol& tol = {});

/// T(a†) = T(a)†, on samples of assorted ranks. Inapplicable (nullopt)
/// when the Jordan *-identities already fail.
std::optional<bool> mp_preservation_check(const LinearMap& t, int samples = 50,
                                          std::uint64_t seed = 13, const Tol& tol = {});
std::optional<bool> mp_preservation_check(const std::function<BlockMat(const CMat&)>& f,
                                          Eigen::Index n, int samples = 50,
                                          std::uint64_t seed = 13, const Tol& tol = {});

struct PreserverVerdict {
    bool forward_ok = true;
    std::optional<bool> backward_ok;  // set when both directions were requested
    int sample_count = 0;
    std::optional<std::pair<CMat, CMat>> counterexample;

    bool ok() const { return forward_ok && backward_ok.value_or(true); }
};

/// Forward: generated diamond pairs map to diamond pairs. Backward:
/// unrelated pairs stay unrelated under T, and image-side diamond pairs
/// pull back through T^{-1} to related pairs (requires invertible super).
PreserverVerdict preserves_diamond(const LinearMap& t, int pairs = 200, std::uint64_t seed = 17,
                                   const Tol& tol = {}, bool both_directions = true);

enum class Flavor { Iso, AntiIso, Neither };

std::string to_string(Flavor f);

struct DecompositionReport {
    CMat h;             // T(1)
    double lambda;      // hh* = lambda 1 (mean diagonal of hh*)
    CMat unitary_part;  // h / sqrt(lambda)
    Flavor flavor = Flavor::Neither;
    double scale = 0;   // canonical multiplier sqrt(lambda)
    CMat left_unitary;  // P with T(x) = scale * P x Q (or P x^T Q)
    CMat right_unitary; // Q
    std::map<std::string, double> residuals;
};

/// Splits an invertible diamond-order preserver as T = h S with
/// hh* = h*h = lambda 1 and S a *-isomorphism x -> UxU* or
/// *-anti-isomorphism x -> U x^T U*. U is reported with its first
/// nonzero entry of column one made real positive.
DecompositionReport decompose_preserver(const LinearMap& t, const Tol& tol = {});

/// If T(1) is a projection and T preserves diamond forward on sampled
/// regular pairs, T must be a Jordan *-homomorphism; returns that check.
/// Nullopt when the preconditions fail.
std::optional<bool> rro_check(const LinearMap& t, const Tol& tol = {}, std::uint64_t seed = 19,
                              int samples = 100);

}  // namespace dlab

#endif
