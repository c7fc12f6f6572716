#ifndef DIAMONDLAB_ORDERS_HPP
#define DIAMONDLAB_ORDERS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamondlab/geninv.hpp"
#include "diamondlab/matcore.hpp"

namespace dlab {

enum class OrderKind {
    Space,
    Diamond,
    Star,
    LeftStar,
    RightStar,
    Minus,
    Sharp,
};

std::string to_string(OrderKind k);
std::optional<OrderKind> order_kind_from_string(const std::string& s);

enum class Verdict { Holds, Fails, Inapplicable };

/// Outcome of an order query: verdict, the residuals that decided it, and
/// (when the relation holds) witnesses reproducing their defining
/// identities. Witnesses x, y satisfy a = xb = by for the space part.
struct OrderReport {
    OrderKind kind;
    Verdict verdict = Verdict::Fails;
    std::map<std::string, double> residuals;
    std::map<std::string, CMat> witnesses;

    bool holds() const { return verdict == Verdict::Holds; }
};

OrderReport leq_space(const CMat& a, const CMat& b, const Tol& tol = {});
OrderReport leq_diamond(const CMat& a, const CMat& b, const Tol& tol = {});
/// Dagger characterization of the diamond order: space order plus
/// a† b a† = a†. Agrees with leq_diamond on all inputs; kept as an
/// independent cross-check route.
OrderReport leq_diamond_dagger(const CMat& a, const CMat& b, const Tol& tol = {});
OrderReport leq_star(const CMat& a, const CMat& b, const Tol& tol = {});
OrderReport leq_left_star(const CMat& a, const CMat& b, const Tol& tol = {});
OrderReport leq_right_star(const CMat& a, const CMat& b, const Tol& tol = {});
OrderReport leq_minus(const CMat& a, const CMat& b, const Tol& tol = {});
OrderReport leq_sharp(const CMat& a, const CMat& b, const Tol& tol = {});

OrderReport check_order(OrderKind k, const CMat& a, const CMat& b, const Tol& tol = {});

/// Blockwise verdict: conjunction over blocks (Inapplicable dominates
/// Fails dominates Holds).
OrderReport check_order(OrderKind k, const BlockMat& a, const BlockMat& b, const Tol& tol = {});

/// Constructive inner-inverse witness for the minus order: solves for v
/// in b^- = b† + v - b†bvbb† by least squares so that
/// a b^- b = b b^- a = a b^- a = a, and accepts on residual.
std::optional<CMat> minus_witness(const CMat& a, const CMat& b, const Tol& tol = {});

/// a ⊥ b in the C*-sense: ab* = 0 and b*a = 0.
bool orthogonal(const CMat& a, const CMat& b, const Tol& tol = {});

/// Generates (a, b) with a diamond-below b. Even seeds take the direct
/// route b = a + (1-aa†)x(1-a†a); odd seeds build a rank-additive minus
/// pair (c, d) and return (c†, d†).
std::pair<CMat, CMat> gen_diamond_pair(Eigen::Index n, std::uint64_t seed);

/// Generates (a, b) with a star-below b by truncating the SVD of b.
std::pair<CMat, CMat> gen_star_pair(Eigen::Index n, std::uint64_t seed);

struct HasseEdge {
    std::size_t from;
    std::size_t to;
};

struct HasseDiagram {
    // classes[i] lists input indices collapsed into node i (size > 1 only
    // for pre-orders with equivalent elements)
    std::vector<std::vector<std::size_t>> classes;
    std::vector<HasseEdge> edges;  // cover relations between class indices
    std::vector<std::size_t> excluded;  // inputs dropped (inapplicable)
};

/// Cover edges of the finite poset on `elements`: equivalence classes are
/// collapsed first (relevant for the space pre-order), then the relation
/// is transitively reduced.
HasseDiagram hasse(const std::vector<CMat>& elements, OrderKind kind, const Tol& tol = {});

}  // namespace dlab

#endif
