#include "diamondlab/orders.hpp"

#include <algorithm>
#include <cmath>

namespace dlab {

std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::Space: return "space";
        case OrderKind::Diamond: return "diamond";
        case OrderKind::Star: return "star";
        case OrderKind::LeftStar: return "left-star";
        case OrderKind::RightStar: return "right-star";
        case OrderKind::Minus: return "minus";
        case OrderKind::Sharp: return "sharp";
    }
    return "?";
}

std::optional<OrderKind> order_kind_from_string(const std::string& s) {
    if (s == "space") return OrderKind::Space;
    if (s == "diamond") return OrderKind::Diamond;
    if (s == "star") return OrderKind::Star;
    if (s == "left-star" || s == "left_star") return OrderKind::LeftStar;
    if (s == "right-star" || s == "right_star") return OrderKind::RightStar;
    if (s == "minus") return OrderKind::Minus;
    if (s == "sharp") return OrderKind::Sharp;
    return std::nullopt;
}

namespace {

// threshold for residuals of degree-2 products like a*a - a*b
double thr2(const CMat& a, const CMat& b, const Tol& tol) {
    return tol.atol + tol.rtol * fro(a) * std::max(fro(a), fro(b));
}

}  // namespace

OrderReport leq_space(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "leq_space");
    require_square(a, "leq_space");
    OrderReport rep{OrderKind::Space};
    const CMat bd = pinv(b, tol);
    const double col = (b * bd * a - a).norm();
    const double row = (a * bd * b - a).norm();
    rep.residuals["col_incl"] = col;
    rep.residuals["row_incl"] = row;
    const double t = tol.thr(fro(a));
    if (col <= t && row <= t) {
        rep.verdict = Verdict::Holds;
        rep.witnesses["x"] = a * bd;  // a = x b
        rep.witnesses["y"] = bd * a;  // a = b y
    }
    return rep;
}

OrderReport leq_diamond(const CMat& a, const CMat& b, const Tol& tol) {
    OrderReport rep = leq_space(a, b, tol);
    rep.kind = OrderKind::Diamond;
    const double na = fro(a);
    const double cubic = (a * a.adjoint() * a - a * b.adjoint() * a).norm();
    rep.residuals["cubic"] = cubic;
    if (cubic > tol.atol + tol.rtol * na * na * na) rep.verdict = Verdict::Fails;
    return rep;
}

OrderReport leq_diamond_dagger(const CMat& a, const CMat& b, const Tol& tol) {
    OrderReport rep = leq_space(a, b, tol);
    rep.kind = OrderKind::Diamond;
    const CMat ad = pinv(a, tol);
    const double dag = (ad * b * ad - ad).norm();
    rep.residuals["dagger"] = dag;
    if (dag > tol.thr(fro(ad))) rep.verdict = Verdict::Fails;
    return rep;
}

OrderReport leq_star(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "leq_star");
    OrderReport rep{OrderKind::Star};
    const double left = (a.adjoint() * a - a.adjoint() * b).norm();
    const double right = (a * a.adjoint() - b * a.adjoint()).norm();
    rep.residuals["star_left"] = left;
    rep.residuals["star_right"] = right;
    const double t = thr2(a, b, tol);
    if (left <= t && right <= t) rep.verdict = Verdict::Holds;
    return rep;
}

OrderReport leq_left_star(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "leq_left_star");
    OrderReport rep{OrderKind::LeftStar};
    const CMat bd = pinv(b, tol);
    const double prod = (a.adjoint() * a - a.adjoint() * b).norm();
    const double col = (b * bd * a - a).norm();
    rep.residuals["star_left"] = prod;
    rep.residuals["col_incl"] = col;
    if (prod <= thr2(a, b, tol) && col <= tol.thr(fro(a))) rep.verdict = Verdict::Holds;
    return rep;
}

OrderReport leq_right_star(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "leq_right_star");
    OrderReport rep{OrderKind::RightStar};
    const CMat bd = pinv(b, tol);
    const double prod = (a * a.adjoint() - b * a.adjoint()).norm();
    const double row = (a * bd * b - a).norm();
    rep.residuals["star_right"] = prod;
    rep.residuals["row_incl"] = row;
    if (prod <= thr2(a, b, tol) && row <= tol.thr(fro(a))) rep.verdict = Verdict::Holds;
    return rep;
}

OrderReport leq_minus(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "leq_minus");
    OrderReport rep{OrderKind::Minus};
    const Eigen::Index ra = rank(a, tol);
    const Eigen::Index rb = rank(b, tol);
    const Eigen::Index rd = rank(b - a, tol);
    rep.residuals["rank_a"] = static_cast<double>(ra);
    rep.residuals["rank_b"] = static_cast<double>(rb);
    rep.residuals["rank_b_minus_a"] = static_cast<double>(rd);
    if (rd == rb - ra) rep.verdict = Verdict::Holds;
    return rep;
}

OrderReport leq_sharp(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "leq_sharp");
    require_square(a, "leq_sharp");
    OrderReport rep{OrderKind::Sharp};
    const auto ash = group_inverse(a, tol);
    const auto bsh = group_inverse(b, tol);
    if (!ash || !bsh) {
        rep.verdict = Verdict::Inapplicable;
        return rep;
    }
    const double left = (*ash * a - *ash * b).norm();
    const double right = (a * *ash - b * *ash).norm();
    rep.residuals["sharp_left"] = left;
    rep.residuals["sharp_right"] = right;
    const double t = tol.atol + tol.rtol * fro(*ash) * std::max(fro(a), fro(b));
    if (left <= t && right <= t) {
        rep.verdict = Verdict::Holds;
        rep.witnesses["a_sharp"] = *ash;
    }
    return rep;
}

OrderReport check_order(OrderKind k, const CMat& a, const CMat& b, const Tol& tol) {
    switch (k) {
        case OrderKind::Space: return leq_space(a, b, tol);
        case OrderKind::Diamond: return leq_diamond(a, b, tol);
        case OrderKind::Star: return leq_star(a, b, tol);
        case OrderKind::LeftStar: return leq_left_star(a, b, tol);
        case OrderKind::RightStar: return leq_right_star(a, b, tol);
        case OrderKind::Minus: return leq_minus(a, b, tol);
        case OrderKind::Sharp: return leq_sharp(a, b, tol);
    }
    throw std::invalid_argument("check_order: unknown kind");
}

OrderReport check_order(OrderKind k, const BlockMat& a, const BlockMat& b, const Tol& tol) {
    if (a.blocks.size() != b.blocks.size())
        throw std::invalid_argument("check_order: block count mismatch");
    OrderReport rep{k};
    rep.verdict = Verdict::Holds;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        OrderReport blk = check_order(k, a.blocks[i], b.blocks[i], tol);
        for (const auto& [name, val] : blk.residuals)
            rep.residuals["block" + std::to_string(i) + "." + name] = val;
        if (blk.verdict == Verdict::Inapplicable) {
            rep.verdict = Verdict::Inapplicable;
            return rep;
        }
        if (blk.verdict == Verdict::Fails) rep.verdict = Verdict::Fails;
    }
    return rep;
}

std::optional<CMat> minus_witness(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "minus_witness");
    const Eigen::Index m = b.rows(), n = b.cols();
    const CMat bd = pinv(b, tol);
    const CMat abdb = a * bd * b;   // a b† b
    const CMat bbda = b * bd * a;   // b b† a

    // Conditions a b^- b = a, b b^- a = a, a b^- a = a are affine in the
    // parameter v of the inner-inverse family; stack them as one least
    // squares problem in vec(v).
    const Eigen::Index nv = n * m;
    CMat K(3 * m * n, nv);
    CVec rhs(3 * m * n);
    K.topRows(m * n) = kron(b.transpose(), a - abdb);
    rhs.head(m * n) = vec(CMat(a - abdb));
    K.middleRows(m * n, m * n) = kron((a - bbda).transpose(), b);
    rhs.segment(m * n, m * n) = vec(CMat(a - bbda));
    K.bottomRows(m * n) = kron(a.transpose(), a) - kron(bbda.transpose(), abdb);
    rhs.tail(m * n) = vec(CMat(a - a * bd * a));

    const CVec v = K.completeOrthogonalDecomposition().solve(rhs);
    const CMat binner = inner_inverse(b, unvec(v, n, m), tol);

    const double t = tol.thr(std::max(1.0, fro(a)));
    if ((a * binner * b - a).norm() <= t && (b * binner * a - a).norm() <= t &&
        (a * binner * a - a).norm() <= t)
        return binner;
    return std::nullopt;
}

bool orthogonal(const CMat& a, const CMat& b, const Tol& tol) {
    require_same_shape(a, b, "orthogonal");
    const double t = thr2(a, b, tol);
    return (a * b.adjoint()).norm() <= t && (b.adjoint() * a).norm() <= t;
}

std::pair<CMat, CMat> gen_diamond_pair(Eigen::Index n, std::uint64_t seed) {
    Sampler s(seed);
    if (seed % 2 == 0) {
        // b = a + (1 - aa†)x(1 - a†a) is always diamond-above a
        const Eigen::Index r = 1 + static_cast<Eigen::Index>(s.uniform_index(n));
        const CMat a = s.fixed_rank(n, r);
        const CMat x = s.ginibre(n);
        const CMat ad = pinv(a);
        const CMat id = CMat::Identity(n, n);
        const CMat b = a + (id - a * ad) * x * (id - ad * a);
        return {a, b};
    }
    // rank-additive minus pair (c, d); daggers are a diamond pair
    const Eigen::Index r1 = 1 + static_cast<Eigen::Index>(s.uniform_index(n));
    const Eigen::Index r2 = static_cast<Eigen::Index>(s.uniform_index(n - r1 + 1));
    const CMat cols = s.ginibre(n, r1 + r2);
    const CMat rows = s.ginibre(r1 + r2, n);
    const CMat c = cols.leftCols(r1) * rows.topRows(r1);
    const CMat d = c + cols.rightCols(r2) * rows.bottomRows(r2);
    return {pinv(c), pinv(d)};
}

std::pair<CMat, CMat> gen_star_pair(Eigen::Index n, std::uint64_t seed) {
    Sampler s(seed);
    const CMat b = s.ginibre(n);
    const SvdFactors f = svd(b);
    const Eigen::Index k = 1 + static_cast<Eigen::Index>(s.uniform_index(n));
    const CMat a =
        f.left.leftCols(k) * f.sigma.head(k).asDiagonal() * f.right.leftCols(k).adjoint();
    return {a, b};
}

HasseDiagram hasse(const std::vector<CMat>& elements, OrderKind kind, const Tol& tol) {
    HasseDiagram out;
    if (elements.empty()) return out;
    for (std::size_t i = 1; i < elements.size(); ++i)
        require_same_shape(elements[0], elements[i], "hasse");

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (kind == OrderKind::Sharp && !group_inverse(elements[i], tol))
            out.excluded.push_back(i);
        else
            kept.push_back(i);
    }

    const std::size_t m = kept.size();
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            rel[i][j] = check_order(kind, elements[kept[i]], elements[kept[j]], tol).holds();

    // collapse two-way related elements (pre-orders; for partial orders
    // these classes are singletons up to tolerance)
    std::vector<int> cls(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<int>(out.classes.size());
        out.classes.push_back({kept[i]});
        for (std::size_t j = i + 1; j < m; ++j)
            if (cls[j] < 0 && rel[i][j] && rel[j][i]) {
                cls[j] = cls[i];
                out.classes.back().push_back(kept[j]);
            }
    }

    const std::size_t c = out.classes.size();
    std::vector<std::vector<bool>> crel(c, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (rel[i][j] && cls[i] != cls[j]) crel[cls[i]][cls[j]] = true;

    // transitive reduction of the strict class relation (a DAG)
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (!crel[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < c && cover; ++k)
                if (k != i && k != j && crel[i][k] && crel[k][j]) cover = false;
            if (cover) out.edges.push_back({i, j});
        }
    return out;
}

}  // namespace dlab
