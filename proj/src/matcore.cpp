#include "diamondlab/matcore.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace dlab {

double fro(const CMat& a) { return a.norm(); }

void require_same_shape(const CMat& a, const CMat& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
}

void require_square(const CMat& a, const char* what) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_finite(const CMat& a, const char* what) {
    if (!a.allFinite())
        throw std::invalid_argument(std::string(what) + ": non-finite entries in " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " matrix");
}

BlockMat::BlockMat(std::vector<CMat> bs) : blocks(std::move(bs)) {
    if (blocks.empty())
        throw std::invalid_argument("BlockMat: at least one block required");
    for (const auto& b : blocks) require_square(b, "BlockMat");
}

BlockMat BlockMat::adjoint() const {
    BlockMat out;
    out.blocks.reserve(blocks.size());
    for (const auto& b : blocks) out.blocks.push_back(b.adjoint());
    return out;
}

static void require_compatible(const BlockMat& a, const BlockMat& b) {
    if (a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("BlockMat: block count mismatch");
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        if (a.blocks[i].rows() != b.blocks[i].rows())
            throw std::invalid_argument("BlockMat: block size mismatch at index " +
                                        std::to_string(i));
}

BlockMat BlockMat::operator*(const BlockMat& rhs) const {
    require_compatible(*this, rhs);
    BlockMat out;
    out.blocks.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        out.blocks.push_back(blocks[i] * rhs.blocks[i]);
    return out;
}

BlockMat BlockMat::operator+(const BlockMat& rhs) const {
    require_compatible(*this, rhs);
    BlockMat out;
    out.blocks.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        out.blocks.push_back(blocks[i] + rhs.blocks[i]);
    return out;
}

BlockMat BlockMat::operator-(const BlockMat& rhs) const {
    require_compatible(*this, rhs);
    BlockMat out;
    out.blocks.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        out.blocks.push_back(blocks[i] - rhs.blocks[i]);
    return out;
}

CMat BlockMat::dense() const {
    Eigen::Index n = 0;
    for (const auto& b : blocks) n += b.rows();
    CMat out = CMat::Zero(n, n);
    Eigen::Index off = 0;
    for (const auto& b : blocks) {
        out.block(off, off, b.rows(), b.rows()) = b;
        off += b.rows();
    }
    return out;
}

CMat SvdFactors::reconstruct() const {
    const Eigen::Index m = left.rows(), n = right.rows(), k = sigma.size();
    return left.leftCols(k) * sigma.asDiagonal() * right.leftCols(k).adjoint();
}

SvdFactors svd(const CMat& a) {
    require_finite(a, "svd");
    Eigen::JacobiSVD<CMat> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success)
        throw std::runtime_error("svd: did not converge on " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " input");
    return SvdFactors{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

double rank_cutoff(const SvdFactors& f, Eigen::Index rows, Eigen::Index cols, const Tol& tol) {
    const double smax = f.sigma.size() ? f.sigma(0) : 0.0;
    return tol.rank_rel * smax * static_cast<double>(std::max(rows, cols));
}

Eigen::Index rank(const CMat& a, const Tol& tol) {
    if (a.size() == 0) return 0;
    const SvdFactors f = svd(a);
    const double cut = rank_cutoff(f, a.rows(), a.cols(), tol);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < f.sigma.size(); ++i)
        if (f.sigma(i) > cut) ++r;
    return r;
}

bool approx_eq(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "approx_eq");
    const double ref = std::max(fro(a), fro(b));
    return (a - b).norm() <= tol.thr(ref);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CVec vec(const CMat& a) {
    return Eigen::Map<const CVec>(a.data(), a.size());
}

CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols)
        throw std::invalid_argument("unvec: size mismatch");
    return Eigen::Map<const CMat>(v.data(), rows, cols);
}

double Sampler::uniform() {
    // 53-bit mantissa from the top of the raw stream
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

std::uint64_t Sampler::uniform_index(std::uint64_t bound) {
    return eng_() % bound;
}

Complex Sampler::gaussian() {
    // Box-Muller; one call yields two reals, used as re/im of a standard
    // complex Gaussian (variance 1 total).
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double m = std::sqrt(-2.0 * std::log(u1));
    const double re = m * std::cos(2.0 * M_PI * u2);
    const double im = m * std::sin(2.0 * M_PI * u2);
    return Complex(re * M_SQRT1_2, im * M_SQRT1_2);
}

CMat Sampler::ginibre(Eigen::Index rows, Eigen::Index cols) {
    CMat g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = gaussian();
    return g;
}

CMat Sampler::unitary(Eigen::Index n) {
    // QR of a Ginibre sample with phases fixed so R has positive diagonal;
    // this yields the Haar distribution.
    const CMat g = ginibre(n, n);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = qr.householderQ();
    const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double ad = std::abs(d);
        q.col(j) *= (ad > 0) ? d / ad : Complex(1, 0);
    }
    return q;
}

static CMat orthonormal_frame(Sampler& s, Eigen::Index n, Eigen::Index r) {
    if (r > n) throw std::invalid_argument("sample: rank parameter r exceeds n");
    if (r == 0) return CMat::Zero(n, 0);
    const CMat g = s.ginibre(n, r);
    Eigen::HouseholderQR<CMat> qr(g);
    CMat q = CMat(qr.householderQ());
    return q.leftCols(r);
}

CMat Sampler::projection(Eigen::Index n, Eigen::Index r) {
    const CMat v = orthonormal_frame(*this, n, r);
    return v * v.adjoint();
}

CMat Sampler::partial_isometry(Eigen::Index n, Eigen::Index r) {
    const CMat w1 = orthonormal_frame(*this, n, r);
    const CMat w2 = orthonormal_frame(*this, n, r);
    return w1 * w2.adjoint();
}

CMat Sampler::fixed_rank(Eigen::Index n, Eigen::Index r) {
    if (r > n) throw std::invalid_argument("sample: rank parameter r exceeds n");
    if (r == 0) return CMat::Zero(n, n);
    return ginibre(n, r) * ginibre(r, n);
}

CMat Sampler::hermitian(Eigen::Index n) {
    const CMat g = ginibre(n, n);
    return 0.5 * (g + g.adjoint());
}

CMat sample(SampleKind kind, Eigen::Index n, std::uint64_t seed, Eigen::Index r) {
    Sampler s(seed);
    switch (kind) {
        case SampleKind::Ginibre: return s.ginibre(n);
        case SampleKind::Unitary: return s.unitary(n);
        case SampleKind::Projection: return s.projection(n, r < 0 ? 1 : r);
        case SampleKind::PartialIsometry: return s.partial_isometry(n, r < 0 ? 1 : r);
        case SampleKind::FixedRank: return s.fixed_rank(n, r < 0 ? 1 : r);
        case SampleKind::Hermitian: return s.hermitian(n);
    }
    throw std::invalid_argument("sample: unknown kind");
}

}  // namespace dlab
