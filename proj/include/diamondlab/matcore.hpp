#ifndef DIAMONDLAB_MATCORE_HPP
#define DIAMONDLAB_MATCORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlab {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Tolerance policy governing all approximate predicates.
/// rank_rel is a singular-value cutoff expressed as a fraction of
/// sigma_max * max(rows, cols).
struct Tol {
    double atol = 1e-9;
    double rtol = 1e-9;
    double rank_rel = 1e-12;

    // threshold for residuals measured against a reference norm
    double thr(double ref_norm) const { return atol + rtol * ref_norm; }
};

/// Element of a block-diagonal algebra; every block is square.
struct BlockMat {
    std::vector<CMat> blocks;

    BlockMat() = default;
    explicit BlockMat(std::vector<CMat> bs);

    std::size_t block_count() const { return blocks.size(); }
    BlockMat adjoint() const;
    BlockMat operator*(const BlockMat& rhs) const;
    BlockMat operator+(const BlockMat& rhs) const;
    BlockMat operator-(const BlockMat& rhs) const;

    /// Dense direct-sum embedding (blockdiag).
    CMat dense() const;
};

struct SvdFactors {
    CMat left;                   // unitary, m x m
    Eigen::VectorXd sigma;       // nonincreasing, length min(m, n)
    CMat right;                  // unitary, n x n

    CMat reconstruct() const;
};

double fro(const CMat& a);

void require_same_shape(const CMat& a, const CMat& b, const char* what);
void require_square(const CMat& a, const char* what);
void require_finite(const CMat& a, const char* what);

SvdFactors svd(const CMat& a);

/// Singular-value cutoff used by rank() and pinv(); degenerates to atol
/// for the zero matrix.
double rank_cutoff(const SvdFactors& f, Eigen::Index rows, Eigen::Index cols,
                   const Tol& tol);

Eigen::Index rank(const CMat& a, const Tol& tol = {});

bool approx_eq(const CMat& a, const CMat& b, const Tol& tol = {});

CMat kron(const CMat& a, const CMat& b);

/// splitmix64 step; decorrelates per-sample seeds derived from one root.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i);

/// Column-major vectorization (stack) and its inverse.
CVec vec(const CMat& a);
CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols);

enum class SampleKind {
    Ginibre,
    Unitary,
    Projection,
    PartialIsometry,
    FixedRank,
    Hermitian,
};

/// Deterministic per (kind, n, r, seed). The generator is mt19937_64
/// seeded directly with `seed`; complex Gaussians come from a Box-Muller
/// transform over its 53-bit uniforms, so streams replay across platforms.
CMat sample(SampleKind kind, Eigen::Index n, std::uint64_t seed,
            Eigen::Index r = -1);

/// Seeded stream of structured matrices, for sweeps that draw many
/// samples from one seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    CMat ginibre(Eigen::Index rows, Eigen::Index cols);
    CMat ginibre(Eigen::Index n) { return ginibre(n, n); }
    CMat unitary(Eigen::Index n);
    CMat projection(Eigen::Index n, Eigen::Index r);
    CMat partial_isometry(Eigen::Index n, Eigen::Index r);
    CMat fixed_rank(Eigen::Index n, Eigen::Index r);
    CMat hermitian(Eigen::Index n);

    Complex gaussian();
    double uniform();                      // [0, 1)
    std::uint64_t uniform_index(std::uint64_t bound);  // [0, bound)

private:
    std::mt19937_64 eng_;
    std::optional<double> spare_;
};

}  // namespace dlab

#endif
