#include "diamondlab/preservers.hpp"

#include <cmath>

#include "diamondlab/structure.hpp"

namespace dlab {

namespace {

CMat unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
    CMat e = CMat::Zero(n, n);
    e(i, j) = 1.0;
    return e;
}

// assorted test elements for identity sweeps
CMat sweep_sample(Sampler& s, Eigen::Index n, int k) {
    switch (k % 4) {
        case 0: return s.ginibre(n);
        case 1: return s.hermitian(n);
        case 2: return s.projection(n, 1 + s.uniform_index(n));
        default: return s.fixed_rank(n, 1 + s.uniform_index(n));
    }
}

}  // namespace

LinearMap LinearMap::identity(Eigen::Index n) {
    return LinearMap{n, CMat::Identity(n * n, n * n), std::nullopt};
}

LinearMap LinearMap::from_function(Eigen::Index n,
                                   const std::function<CMat(const CMat&)>& f) {
    CMat super(n * n, n * n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            super.col(j * n + i) = vec(f(unit(n, i, j)));
    return LinearMap{n, std::move(super), std::nullopt};
}

CMat apply(const LinearMap& t, const CMat& a) {
    if (a.rows() != t.dim || a.cols() != t.dim)
        throw std::invalid_argument("apply: argument dimension does not match the map");
    return unvec(t.super * vec(a), t.dim, t.dim);
}

CMat commutation_matrix(Eigen::Index n) {
    CMat k = CMat::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) k(i + j * n, j + i * n) = 1.0;
    return k;
}

LinearMap make_canonical(double lambda, const CMat& u, const CMat& v, bool transpose,
                         const Tol& tol) {
    require_square(u, "make_canonical");
    require_square(v, "make_canonical");
    if (u.rows() != v.rows())
        throw std::invalid_argument("make_canonical: U and V dimensions differ");
    if (lambda <= 0) throw std::invalid_argument("make_canonical: lambda must be positive");
    const Eigen::Index n = u.rows();
    const CMat id = CMat::Identity(n, n);
    if (!approx_eq(u.adjoint() * u, id, tol) || !approx_eq(v.adjoint() * v, id, tol))
        throw std::invalid_argument("make_canonical: U and V must be unitary");

    // vec(U x V) = (V^T ⊗ U) vec(x)
    CMat super = lambda * kron(v.transpose(), u);
    if (transpose) super = super * commutation_matrix(n);
    return LinearMap{n, std::move(super), CanonicalTag{lambda, u, v, transpose}};
}

BlockMat jordan_embedding(const CMat& a) {
    require_square(a, "jordan_embedding");
    BlockMat out;
    out.blocks = {a, a.transpose()};
    return out;
}

namespace {

template <class Map, class Eq, class Adj>
bool jordan_star_check_impl(Map&& f, Eigen::Index n, int samples, std::uint64_t seed,
                            const Tol& tol, Eq&& eq, Adj&& adj) {
    Sampler s(seed);
    for (int k = 0; k < samples; ++k) {
        const CMat a = sweep_sample(s, n, k);
        const auto ta = f(a);
        if (!eq(f(CMat(a * a)), ta * ta, tol)) return false;
        if (!eq(f(CMat(a.adjoint())), adj(ta), tol)) return false;
    }
    return true;
}

bool block_eq(const BlockMat& x, const BlockMat& y, const Tol& tol) {
    if (x.blocks.size() != y.blocks.size()) return false;
    for (std::size_t i = 0; i < x.blocks.size(); ++i)
        if (!approx_eq(x.blocks[i], y.blocks[i], tol)) return false;
    return true;
}

}  // namespace

bool jordan_star_check(const LinearMap& t, int samples, std::uint64_t seed, const Tol& tol) {
    return jordan_star_check_impl([&](const CMat& a) { return apply(t, a); }, t.dim, samples,
                                  seed, tol, [](const CMat& x, const CMat& y, const Tol& tl) {
                                      return approx_eq(x, y, tl);
                                  },
                                  [](const CMat& x) { return CMat(x.adjoint()); });
}

bool jordan_star_check(const std::function<BlockMat(const CMat&)>& f, Eigen::Index n,
                       int samples, std::uint64_t seed, const Tol& tol) {
    return jordan_star_check_impl(f, n, samples, seed, tol, block_eq,
                                  [](const BlockMat& x) { return x.adjoint(); });
}

std::optional<bool> mp_preservation_check(const LinearMap& t, int samples, std::uint64_t seed,
                                          const Tol& tol) {
    if (!jordan_star_check(t, samples, seed, tol)) return std::nullopt;
    Sampler s(seed);
    Tol loose = tol;
    loose.atol = std::max(tol.atol, 1e-8);  // pinv of near-degenerate samples is touchy
    for (int k = 0; k < samples; ++k) {
        const CMat a = s.fixed_rank(t.dim, 1 + s.uniform_index(t.dim));
        if (!approx_eq(pinv(apply(t, a), tol), apply(t, pinv(a, tol)), loose)) return false;
    }
    return true;
}

std::optional<bool> mp_preservation_check(const std::function<BlockMat(const CMat&)>& f,
                                          Eigen::Index n, int samples, std::uint64_t seed,
                                          const Tol& tol) {
    if (!jordan_star_check(f, n, samples, seed, tol)) return std::nullopt;
    Sampler s(seed);
    Tol loose = tol;
    loose.atol = std::max(tol.atol, 1e-8);
    for (int k = 0; k < samples; ++k) {
        const CMat a = s.fixed_rank(n, 1 + s.uniform_index(n));
        if (!block_eq(pinv(f(a), tol), f(pinv(a, tol)), loose)) return false;
    }
    return true;
}

PreserverVerdict preserves_diamond(const LinearMap& t, int pairs, std::uint64_t seed,
                                   const Tol& tol, bool both_directions) {
    PreserverVerdict v;
    const Eigen::Index n = t.dim;

    Eigen::FullPivLU<CMat> lu;
    if (both_directions) {
        lu.compute(t.super);
        if (!lu.isInvertible())
            throw std::invalid_argument(
                "preserves_diamond: backward check requested on a singular supermatrix");
        v.backward_ok = true;
    }

    for (int k = 0; k < pairs; ++k) {
        const auto [a, b] = gen_diamond_pair(n, mix_seed(seed, k));
        if (!leq_diamond(a, b, tol).holds()) continue;  // numerically marginal generator output
        ++v.sample_count;
        if (!leq_diamond(apply(t, a), apply(t, b), tol).holds()) {
            v.forward_ok = false;
            v.counterexample = {a, b};
            return v;
        }
    }

    if (!both_directions) return v;

    Sampler s(mix_seed(seed, 0xb4c2));
    for (int k = 0; k < pairs; ++k) {
        // unrelated pairs must stay unrelated
        const CMat a = s.fixed_rank(n, 1 + s.uniform_index(n));
        const CMat b = s.ginibre(n);
        if (leq_diamond(a, b, tol).holds()) continue;
        ++v.sample_count;
        if (leq_diamond(apply(t, a), apply(t, b), tol).holds()) {
            v.backward_ok = false;
            v.counterexample = {a, b};
            return v;
        }
    }
    for (int k = 0; k < pairs; ++k) {
        // image-side diamond pairs must pull back to related pairs
        const auto [c, d] = gen_diamond_pair(n, mix_seed(seed ^ 0x5a5a, k));
        if (!leq_diamond(c, d, tol).holds()) continue;
        const CMat a = unvec(lu.solve(vec(c)), n, n);
        const CMat b = unvec(lu.solve(vec(d)), n, n);
        ++v.sample_count;
        if (!leq_diamond(a, b, tol).holds()) {
            v.backward_ok = false;
            v.counterexample = {c, d};
            return v;
        }
    }
    return v;
}

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::Iso: return "iso";
        case Flavor::AntiIso: return "anti_iso";
        case Flavor::Neither: return "neither";
    }
    return "?";
}

DecompositionReport decompose_preserver(const LinearMap& t, const Tol& tol) {
    const Eigen::Index n = t.dim;
    DecompositionReport rep;
    rep.h = apply(t, CMat::Identity(n, n));

    const CMat hh = rep.h * rep.h.adjoint();
    const CMat hsh = rep.h.adjoint() * rep.h;
    rep.lambda = hh.diagonal().real().mean();
    const CMat id = CMat::Identity(n, n);
    rep.residuals["hh_star_scalar"] = (hh - rep.lambda * id).norm();
    rep.residuals["h_star_h_scalar"] = (hsh - rep.lambda * id).norm();

    const double scalar_thr = tol.atol + tol.rtol * std::abs(rep.lambda) * n;
    if (rep.lambda <= 0 || rep.residuals["hh_star_scalar"] > scalar_thr ||
        rep.residuals["h_star_h_scalar"] > scalar_thr) {
        rep.flavor = Flavor::Neither;
        return rep;
    }

    Eigen::FullPivLU<CMat> lu(t.super);
    if (!lu.isInvertible())
        throw std::invalid_argument("decompose_preserver: supermatrix is singular");

    rep.scale = std::sqrt(rep.lambda);
    rep.unitary_part = rep.h / rep.scale;

    // S = h^{-1} T is a unital Jordan isomorphism; h^{-1} = h*/lambda
    const CMat hinv = rep.h.adjoint() / rep.lambda;
    auto S = [&](const CMat& x) { return CMat(hinv * apply(t, x)); };

    if (n == 1) {
        rep.flavor = Flavor::Iso;
        rep.left_unitary = rep.unitary_part;
        rep.right_unitary = id;
        rep.residuals["reconstruction"] = 0.0;
        return rep;
    }

    // Herstein dichotomy probed on one off-diagonal product
    const CMat s12 = S(unit(n, 0, 1));
    const CMat s21 = S(unit(n, 1, 0));
    const CMat s11 = S(unit(n, 0, 0));
    const double iso_res = (s11 - s12 * s21).norm();
    const double anti_res = (s11 - s21 * s12).norm();
    rep.residuals["iso_probe"] = iso_res;
    rep.residuals["anti_probe"] = anti_res;
    const double probe_thr = tol.atol + tol.rtol + 1e-6;
    const bool iso = iso_res <= probe_thr;
    const bool anti = anti_res <= probe_thr;
    if (iso == anti) {  // ambiguous or neither
        rep.flavor = Flavor::Neither;
        return rep;
    }
    rep.flavor = iso ? Flavor::Iso : Flavor::AntiIso;

    // recover the unitary of S column by column: S(E_i1) = u_i u_1* for an
    // isomorphism, u_1 u_i* for an anti-isomorphism
    CVec u1;
    double best = -1;
    for (Eigen::Index k = 0; k < n; ++k) {
        const CVec cand = s11 * id.col(k);
        if (cand.norm() > best) {  // |S(E11) e_k| = |u1(k)|, the largest is >= 1/sqrt(n)
            best = cand.norm();
            u1 = cand;
        }
    }
    u1 /= u1.norm();
    CMat u(n, n);
    u.col(0) = u1;
    for (Eigen::Index i = 1; i < n; ++i) {
        const CMat si1 = S(unit(n, i, 0));
        u.col(i) = (rep.flavor == Flavor::Iso) ? CVec(si1 * u1) : CVec(si1.adjoint() * u1);
    }

    // phase gauge: first entry of column one with nonnegligible modulus
    // made real positive
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex z = u(i, 0);
        if (std::abs(z) > 1e-8) {
            u *= std::conj(z) / std::abs(z);
            break;
        }
    }

    rep.left_unitary = rep.unitary_part * u;
    rep.right_unitary = u.adjoint();

    CMat rebuilt = rep.scale * kron(rep.right_unitary.transpose(), rep.left_unitary);
    if (rep.flavor == Flavor::AntiIso) rebuilt = rebuilt * commutation_matrix(n);
    rep.residuals["reconstruction"] = (rebuilt - t.super).norm() / std::max(1.0, t.super.norm());
    return rep;
}

std::optional<bool> rro_check(const LinearMap& t, const Tol& tol, std::uint64_t seed,
                              int samples) {
    const Eigen::Index n = t.dim;
    if (!is_projection(apply(t, CMat::Identity(n, n)), tol)) return std::nullopt;
    for (int k = 0; k < samples; ++k) {
        const auto [a, b] = gen_diamond_pair(n, mix_seed(seed, k));
        if (!leq_diamond(a, b, tol).holds()) continue;
        if (!leq_diamond(apply(t, a), apply(t, b), tol).holds()) return std::nullopt;
    }
    return jordan_star_check(t, samples, seed, tol);
}

}  // namespace dlab
