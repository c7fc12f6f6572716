#include "diamondlab/suites.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "diamondlab/geninv.hpp"
#include "diamondlab/orders.hpp"
#include "diamondlab/preservers.hpp"
#include "diamondlab/structure.hpp"

namespace dlab {

namespace {

struct Counter {
    SuiteResult res;

    Counter(std::string suite, std::string check) {
        res.suite = std::move(suite);
        res.check = std::move(check);
    }

    void tally(bool ok, const std::string& desc) {
        ++res.checked;
        if (!ok) {
            ++res.violations;
            if (res.first_counterexample.empty()) res.first_counterexample = desc;
        }
    }
};

std::string pair_desc(Eigen::Index n, std::uint64_t seed, const char* what) {
    std::ostringstream ss;
    ss << what << " n=" << n << " seed=" << seed;
    return ss.str();
}

CMat assorted(Sampler& s, Eigen::Index n, int k) {
    switch (k % 5) {
        case 0: return s.ginibre(n);
        case 1: return s.fixed_rank(n, 1 + s.uniform_index(n));
        case 2: return s.hermitian(n);
        case 3: return s.projection(n, 1 + s.uniform_index(n));
        default: return s.partial_isometry(n, 1 + s.uniform_index(n));
    }
}

// mixed corpus for equivalence sweeps: related pairs from both generator
// routes, star pairs, and unrelated random pairs (plain and rank-deficient)
std::pair<CMat, CMat> equivalence_pair(Eigen::Index n, std::uint64_t seed, int k) {
    switch (k % 5) {
        case 0:
        case 1: return gen_diamond_pair(n, mix_seed(seed, k));
        case 2: return gen_star_pair(n, mix_seed(seed, k));
        case 3: {
            Sampler s(mix_seed(seed, k));
            return {s.ginibre(n), s.ginibre(n)};
        }
        default: {
            Sampler s(mix_seed(seed, k));
            return {s.fixed_rank(n, 1 + s.uniform_index(n)),
                    s.fixed_rank(n, 1 + s.uniform_index(n))};
        }
    }
}

std::pair<CMat, CMat> orthogonal_pair(Sampler& s, Eigen::Index n) {
    // a supported on (U1, V1), b on the complementary frames: ab* = b*a = 0
    const Eigen::Index r1 = 1 + s.uniform_index(n - 1);
    const Eigen::Index r2 = 1 + s.uniform_index(n - r1);
    const CMat u = s.unitary(n);
    const CMat v = s.unitary(n);
    const CMat a = u.leftCols(r1) * s.ginibre(r1, r1) * v.leftCols(r1).adjoint();
    const CMat b = u.rightCols(r2) * s.ginibre(r2, r2) * v.rightCols(r2).adjoint();
    return {a, b};
}

// non-selfadjoint idempotent X (Y X)^{-1} Y
CMat skew_idempotent(Sampler& s, Eigen::Index n) {
    const Eigen::Index r = 1 + s.uniform_index(n - 1);
    for (;;) {
        const CMat x = s.ginibre(n, r);
        const CMat y = s.ginibre(r, n);
        const CMat yx = y * x;
        if (svd(yx).sigma(r - 1) < 1e-3) continue;
        return x * yx.partialPivLu().solve(y);
    }
}

}  // namespace

ExamplePair example_pair() {
    const double s = 1.0 / std::sqrt(2.0);
    CMat a(2, 2), u(2, 2);
    a << 1, 0, 0, 0;
    u << 0, s, 0, s;
    return {a, u, a + u};
}

std::vector<SuiteResult> run_orders_suite(const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    const Tol& tol = cfg.tol;

    {
        Counter c("orders", "diamond reflexivity");
        int per_n = cfg.pairs / static_cast<int>(cfg.ns.size()) + 1;
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 100 + n));
            for (int k = 0; k < per_n && c.res.checked < cfg.pairs; ++k) {
                const CMat a = assorted(s, n, k);
                c.tally(leq_diamond(a, a, tol).holds(), pair_desc(n, cfg.seed, "reflexivity"));
            }
        }
        out.push_back(c.res);
    }

    {
        Counter c("orders", "diamond transitivity on generated chains");
        int per_n = cfg.pairs / static_cast<int>(cfg.ns.size()) + 1;
        for (Eigen::Index n : cfg.ns) {
            for (int k = 0; k < per_n && c.res.checked < cfg.pairs; ++k) {
                const std::uint64_t sd = mix_seed(cfg.seed, 200 + k * 17 + n);
                const auto [a, b] = gen_diamond_pair(n, sd);
                Sampler s(mix_seed(sd, 1));
                const CMat bd = pinv(b, tol);
                const CMat id = CMat::Identity(n, n);
                const CMat cc = b + (id - b * bd) * s.ginibre(n) * (id - bd * b);
                if (!(leq_diamond(a, b, tol).holds() && leq_diamond(b, cc, tol).holds()))
                    continue;  // chain construction numerically marginal; skip
                c.tally(leq_diamond(a, cc, tol).holds(), pair_desc(n, sd, "transitivity"));
            }
        }
        out.push_back(c.res);
    }

    {
        Counter c("orders", "diamond antisymmetry bound");
        int per_n = cfg.antisym_pairs / static_cast<int>(cfg.ns.size()) + 1;
        const double unit_tol = std::max(tol.atol, tol.rtol);
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 300 + n));
            for (int k = 0; k < per_n && c.res.checked < cfg.antisym_pairs; ++k) {
                const CMat b = assorted(s, n, k);
                const double scale = 0.05 * unit_tol * std::max(1.0, fro(b));
                const CMat a = b + scale * s.ginibre(n) / std::sqrt(double(n));
                if (!(leq_diamond(a, b, tol).holds() && leq_diamond(b, a, tol).holds()))
                    continue;
                const bool ok = (a - b).norm() <= 100.0 * unit_tol * std::max(1.0, fro(b));
                c.tally(ok, pair_desc(n, cfg.seed, "antisymmetry"));
            }
        }
        out.push_back(c.res);
    }

    Counter dual("orders", "diamond <=> dagger route");
    Counter dagmin("orders", "diamond(a,b) <=> minus(a+,b+)");
    Counter minw("orders", "minus rank route <=> witness route");
    Counter starlr("orders", "star <=> left-star and right-star");
    Counter stardi("orders", "star => diamond");
    for (Eigen::Index n : cfg.ns) {
        for (int k = 0; k < cfg.pairs; ++k) {
            const auto [a, b] = equivalence_pair(n, mix_seed(cfg.seed, 400 + n), k);
            const bool dia = leq_diamond(a, b, tol).holds();
            const bool dag = leq_diamond_dagger(a, b, tol).holds();
            dual.tally(dia == dag, pair_desc(n, cfg.seed, "dual-route"));
            const bool minus_dag = leq_minus(pinv(a, tol), pinv(b, tol), tol).holds();
            dagmin.tally(dia == minus_dag, pair_desc(n, cfg.seed, "dagger-duality"));
            const bool minus_rank = leq_minus(a, b, tol).holds();
            const bool witness = minus_witness(a, b, tol).has_value();
            minw.tally(minus_rank == witness, pair_desc(n, cfg.seed, "minus-witness"));
            const bool star = leq_star(a, b, tol).holds();
            const bool lstar = leq_left_star(a, b, tol).holds();
            const bool rstar = leq_right_star(a, b, tol).holds();
            starlr.tally(star == (lstar && rstar), pair_desc(n, cfg.seed, "star-split"));
            stardi.tally(!star || dia, pair_desc(n, cfg.seed, "star-implies-diamond"));
        }
    }
    out.push_back(dual.res);
    out.push_back(dagmin.res);
    out.push_back(minw.res);
    out.push_back(starlr.res);
    out.push_back(stardi.res);

    {
        Counter c("orders", "orthogonality implies diamond below the sum");
        int per_n = cfg.pairs / static_cast<int>(cfg.ns.size()) + 1;
        for (Eigen::Index n : cfg.ns) {
            if (n < 2) continue;
            Sampler s(mix_seed(cfg.seed, 500 + n));
            for (int k = 0; k < per_n && c.res.checked < cfg.pairs; ++k) {
                const auto [a, b] = orthogonal_pair(s, n);
                const bool ok = orthogonal(a, b, tol) && leq_diamond(a, a + b, tol).holds();
                c.tally(ok, pair_desc(n, cfg.seed, "orthogonality"));
            }
        }
        // fixed converse counterexample: diamond holds, orthogonality fails
        const ExamplePair ex = example_pair();
        c.tally(leq_diamond(ex.a, ex.b, tol).holds() && !orthogonal(ex.a, ex.u, tol),
                "worked 2x2 instance");
        out.push_back(c.res);
    }

    {
        Counter c("orders", "blockwise lifting");
        Sampler s(mix_seed(cfg.seed, 600));
        for (int k = 0; k < 50; ++k) {
            const Eigen::Index n1 = 2 + s.uniform_index(2), n2 = 2 + s.uniform_index(2);
            const auto [a1, b1] = gen_diamond_pair(n1, mix_seed(cfg.seed, 601 + k));
            const auto [a2, b2] = (k % 2) ? gen_diamond_pair(n2, mix_seed(cfg.seed, 700 + k))
                                          : std::pair<CMat, CMat>{s.ginibre(n2), s.ginibre(n2)};
            BlockMat a, b;
            a.blocks = {a1, a2};
            b.blocks = {b1, b2};
            const bool blockwise = check_order(OrderKind::Diamond, a, b, tol).holds();
            const bool expect = leq_diamond(a1, b1, tol).holds() && leq_diamond(a2, b2, tol).holds();
            const bool dense = leq_diamond(a.dense(), b.dense(), tol).holds();
            c.tally(blockwise == expect && dense == expect, pair_desc(n1 + n2, cfg.seed, "block"));
        }
        out.push_back(c.res);
    }

    return out;
}

std::vector<SuiteResult> run_structure_suite(const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    const Tol& tol = cfg.tol;
    const int per_n = std::max(1, cfg.pairs / 2 / static_cast<int>(cfg.ns.size()));

    {
        Counter c("structure", "minimal_below returns a rank-one diamond lower bound");
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 700 + n));
            for (int k = 0; k < per_n; ++k) {
                CMat a = assorted(s, n, k);
                if (fro(a) <= tol.atol) continue;
                const RankOne u = minimal_below(a, tol, mix_seed(cfg.seed, 710 + k));
                const CMat ud = u.dense();
                const bool ok = rank(ud, tol) == 1 && leq_diamond(ud, a, tol).holds();
                c.tally(ok, pair_desc(n, cfg.seed, "minimal_below"));
            }
        }
        out.push_back(c.res);
    }

    {
        Counter c("structure", "rank-one rigidity");
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 720 + n));
            for (int k = 0; k < per_n; ++k) {
                const CMat u = s.fixed_rank(n, 1);
                if (fro(u) <= tol.atol) continue;
                const CMat v = minimal_below(u, tol, mix_seed(cfg.seed, 730 + k)).dense();
                Tol loose = tol;
                loose.atol = 100 * tol.atol;
                loose.rtol = 100 * tol.rtol;
                c.tally(approx_eq(v, u, loose), pair_desc(n, cfg.seed, "rigidity"));
            }
        }
        out.push_back(c.res);
    }

    {
        Counter pos("structure", "projection characterization (positive instances)");
        Counter neg("structure", "projection characterization (negative instances)");
        for (Eigen::Index n : cfg.ns) {
            if (n < 2) continue;
            Sampler s(mix_seed(cfg.seed, 740 + n));
            for (int k = 0; k < per_n; ++k) {
                const CMat id = CMat::Identity(n, n);
                // positive: honest projections against q = 1 and against a
                // larger projection built on the same frame
                const Eigen::Index r = 1 + s.uniform_index(n - 1);
                const CMat frame = s.unitary(n);
                const CMat p = frame.leftCols(r) * frame.leftCols(r).adjoint();
                const Eigen::Index r2 = r + s.uniform_index(n - r + 1);
                const CMat q = frame.leftCols(r2) * frame.leftCols(r2).adjoint();
                auto v1 = projection_characterization(p, id, tol);
                auto v2 = projection_characterization(p, q, tol);
                pos.tally(v1 && *v1 && v2 && *v2, pair_desc(n, cfg.seed, "projection-pos"));

                // negative: non-selfadjoint idempotents and non-idempotent
                // hermitians
                const CMat bad = (k % 2) ? skew_idempotent(s, n) : CMat(0.5 * p + 0.1 * id);
                if (is_projection(bad, tol)) continue;
                auto v3 = projection_characterization(bad, id, tol);
                neg.tally(v3 && !*v3, pair_desc(n, cfg.seed, "projection-neg"));
            }
        }
        out.push_back(pos.res);
        out.push_back(neg.res);
    }

    {
        Counter c("structure", "invertibility probe agrees with numerical rank");
        Counter w("structure", "maximality witness for singular samples");
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 760 + n));
            for (int k = 0; k < per_n; ++k) {
                const CMat a = (k % 2) ? s.ginibre(n) : s.fixed_rank(n, s.uniform_index(n));
                if (fro(a) <= tol.atol) continue;
                const bool invertible = rank(a, tol) == n;
                const ProbeReport probe = invertibility_probe(a, tol);
                c.tally(probe.invertible == invertible, pair_desc(n, cfg.seed, "probe"));

                const MaximalityReport mx = is_maximal_diamond(a, tol, mix_seed(cfg.seed, k));
                if (invertible) {
                    w.tally(mx.maximal, pair_desc(n, cfg.seed, "maximal-invertible"));
                } else {
                    const bool ok = !mx.maximal && mx.strictly_above &&
                                    leq_diamond(a, *mx.strictly_above, tol).holds() &&
                                    !approx_eq(a, *mx.strictly_above, tol);
                    w.tally(ok, pair_desc(n, cfg.seed, "maximal-witness"));
                }
            }
        }
        out.push_back(c.res);
        out.push_back(w.res);
    }

    {
        Counter c("structure", "scaled unitaries preserve; non-scalar multipliers defect");
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 780 + n));
            std::vector<std::pair<CMat, CMat>> pairs;
            for (int k = 0; k < 50; ++k) pairs.push_back(gen_diamond_pair(n, mix_seed(cfg.seed, 790 + k + n)));

            const CMat u = std::sqrt(3.0) * s.unitary(n);
            auto pres = unitary_mult_preserves(u, pairs, tol);
            c.tally(pres && *pres, pair_desc(n, cfg.seed, "scaled-unitary-preserves"));
            c.tally(std::holds_alternative<NoDefect>(scalar_unitary_defect(u, tol)),
                    pair_desc(n, cfg.seed, "scaled-unitary-nodefect"));

            if (n >= 2) {
                CMat d = CMat::Zero(n, n);
                for (Eigen::Index i = 0; i < n; ++i) d(i, i) = 1.0 + double(i);
                const auto defect = scalar_unitary_defect(d, tol, mix_seed(cfg.seed, n));
                c.tally(std::holds_alternative<DefectWitness>(defect),
                        pair_desc(n, cfg.seed, "diagonal-defect"));
                if (auto* wit = std::get_if<DefectWitness>(&defect)) {
                    const bool verified = leq_diamond(wit->a, wit->b, tol).holds() &&
                                          !leq_diamond(wit->a * d, wit->b * d, tol).holds();
                    c.tally(verified, pair_desc(n, cfg.seed, "diagonal-defect-verify"));
                }
            }
        }
        out.push_back(c.res);
    }

    return out;
}

std::vector<SuiteResult> run_preservers_suite(const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    const Tol& tol = cfg.tol;

    {
        Counter c("preservers", "canonical maps preserve in both directions");
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 800 + n));
            int combo = 0;
            for (bool transpose : {false, true})
                for (double lambda : {1.0, 2.5}) {
                    const LinearMap t =
                        make_canonical(lambda, s.unitary(n), s.unitary(n), transpose, tol);
                    const PreserverVerdict v = preserves_diamond(
                        t, cfg.preserver_pairs, mix_seed(cfg.seed, 810 + n + combo), tol, true);
                    c.tally(v.ok(), pair_desc(n, cfg.seed,
                                              transpose ? "canonical-transpose" : "canonical"));
                    ++combo;
                }
        }
        out.push_back(c.res);
    }

    {
        Counter c("preservers", "decompose . make_canonical round-trip");
        for (Eigen::Index n : cfg.ns) {
            Sampler s(mix_seed(cfg.seed, 820 + n));
            for (int k = 0; k < cfg.roundtrips; ++k) {
                const double lambda = 0.5 + 2.0 * s.uniform();
                const bool transpose = (k % 2 == 1);
                const CMat u0 = s.unitary(n), v0 = s.unitary(n);
                const LinearMap t = make_canonical(lambda, u0, v0, transpose, tol);
                const DecompositionReport rep = decompose_preserver(t, tol);
                const bool ok = rep.flavor == (transpose ? Flavor::AntiIso : Flavor::Iso) &&
                                std::abs(rep.scale - lambda) <= 1e-8 * lambda &&
                                rep.residuals.at("reconstruction") <= 1e-8;
                c.tally(ok, pair_desc(n, cfg.seed, "round-trip"));
            }
        }
        out.push_back(c.res);
    }

    {
        long found = 0, falsely_certified = 0;
        const Eigen::Index n = cfg.ns.size() > 1 ? cfg.ns[1] : cfg.ns[0];
        for (int run = 0; run < cfg.negative_runs; ++run) {
            Sampler s(mix_seed(cfg.seed, 830 + run));
            CMat d = CMat::Zero(n, n);
            for (Eigen::Index i = 0; i < n; ++i) d(i, i) = 1.0 + double(i) + s.uniform();
            // left multiplication by d preserves for all pairs iff d*d is
            // scalar; adjoint symmetry turns the right-multiplier search
            // into the left one
            const auto defect = scalar_unitary_defect(d.adjoint(), tol, mix_seed(cfg.seed, run));
            if (auto* wit = std::get_if<DefectWitness>(&defect)) {
                const CMat a = wit->a.adjoint(), b = wit->b.adjoint();
                if (leq_diamond(a, b, tol).holds() && !leq_diamond(d * a, d * b, tol).holds())
                    ++found;
                else
                    ++falsely_certified;
            } else if (std::holds_alternative<NoDefect>(defect)) {
                ++falsely_certified;
            }
        }
        Counter binom("preservers", "negative-control success rate >= 95%");
        binom.tally(found >= (cfg.negative_runs * 95) / 100 && falsely_certified == 0,
                    "found=" + std::to_string(found) + "/" + std::to_string(cfg.negative_runs));
        out.push_back(binom.res);
    }

    {
        Counter c("preservers", "rro: unital *-hom route");
        Sampler s(mix_seed(cfg.seed, 840));
        for (Eigen::Index n : cfg.ns) {
            const CMat u = s.unitary(n);
            const LinearMap t = make_canonical(1.0, u, u.adjoint(), false, tol);
            auto v = rro_check(t, tol, mix_seed(cfg.seed, 841 + n));
            c.tally(v && *v, pair_desc(n, cfg.seed, "rro-star-hom"));

            const LinearMap tt = make_canonical(1.0, u, u.adjoint(), true, tol);
            auto vt = rro_check(tt, tol, mix_seed(cfg.seed, 842 + n));
            c.tally(vt && *vt, pair_desc(n, cfg.seed, "rro-star-antihom"));

            // scaling map: T(1) = 2 is not a projection -> inapplicable
            const LinearMap sc{n, 2.0 * CMat::Identity(n * n, n * n), std::nullopt};
            c.tally(!rro_check(sc, tol, mix_seed(cfg.seed, 843 + n)).has_value(),
                    pair_desc(n, cfg.seed, "rro-inapplicable"));
        }
        out.push_back(c.res);
    }

    return out;
}

std::vector<SuiteResult> run_jordan_suite(const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    const Tol& tol = cfg.tol;

    Counter c("jordan", "jordan_embedding is a Jordan *-homomorphism");
    Counter mp("jordan", "jordan_embedding preserves Moore-Penrose inverses");
    Counter bw("jordan", "jordan_embedding preserves diamond blockwise");
    Counter neg("jordan", "scaling map fails the Jordan *-identities");
    for (Eigen::Index n : cfg.ns) {
        auto j = [](const CMat& x) { return jordan_embedding(x); };
        c.tally(jordan_star_check(j, n, 100, mix_seed(cfg.seed, 900 + n), tol),
                pair_desc(n, cfg.seed, "jordan-star"));
        auto mpv = mp_preservation_check(j, n, 100, mix_seed(cfg.seed, 910 + n), tol);
        mp.tally(mpv && *mpv, pair_desc(n, cfg.seed, "jordan-mp"));

        const int pairs = std::max(1, cfg.preserver_pairs / static_cast<int>(cfg.ns.size()));
        for (int k = 0; k < pairs; ++k) {
            const auto [a, b] = gen_diamond_pair(n, mix_seed(cfg.seed, 920 + k + 31 * n));
            if (!leq_diamond(a, b, tol).holds()) continue;
            bw.tally(check_order(OrderKind::Diamond, jordan_embedding(a), jordan_embedding(b), tol)
                         .holds(),
                     pair_desc(n, cfg.seed, "jordan-blockwise"));
        }

        const LinearMap doubling{n, 2.0 * CMat::Identity(n * n, n * n), std::nullopt};
        neg.tally(!jordan_star_check(doubling, 20, mix_seed(cfg.seed, 930 + n), tol),
                  pair_desc(n, cfg.seed, "scaling-negative"));

        Sampler s(mix_seed(cfg.seed, 940 + n));
        const CMat u = s.unitary(n);
        neg.tally(jordan_star_check(make_canonical(1.0, u, u.adjoint(), false, tol), 20,
                                    mix_seed(cfg.seed, 950 + n), tol),
                  pair_desc(n, cfg.seed, "conjugation-positive"));
    }
    out.push_back(c.res);
    out.push_back(mp.res);
    out.push_back(bw.res);
    out.push_back(neg.res);
    return out;
}

std::vector<SuiteResult> run_example_suite(const SuiteConfig& cfg) {
    const Tol& tol = cfg.tol;
    const ExamplePair ex = example_pair();
    Counter c("example", "worked 2x2 instance");
    c.tally((ex.a * ex.u.adjoint() * ex.a).norm() <= 1e-12, "au*a");
    c.tally(leq_diamond(ex.a, ex.b, tol).holds(), "diamond(a, a+u)");
    c.tally(leq_diamond_dagger(ex.a, ex.b, tol).holds(), "dagger route on (a, a+u)");
    c.tally(leq_space(ex.a, ex.b, tol).holds(), "space(a, a+u)");
    c.tally(!orthogonal(ex.a, ex.u, tol), "a not orthogonal to u");
    c.tally(!leq_star(ex.a, ex.b, tol).holds(), "star(a, a+u) fails");
    return {c.res};
}

std::vector<SuiteResult> run_suites(const std::string& name, const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    auto append = [&](std::vector<SuiteResult> rs) {
        out.insert(out.end(), rs.begin(), rs.end());
    };
    const bool all = (name == "all");
    bool known = all;
    if (all || name == "example") append(run_example_suite(cfg)), known = true;
    if (all || name == "orders") append(run_orders_suite(cfg)), known = true;
    if (all || name == "structure") append(run_structure_suite(cfg)), known = true;
    if (all || name == "preservers") append(run_preservers_suite(cfg)), known = true;
    if (all || name == "jordan") append(run_jordan_suite(cfg)), known = true;
    if (!known) throw std::invalid_argument("unknown suite: " + name);
    return out;
}

std::string format_results(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.pass() ? "PASS" : "FAIL") << "  " << std::left << std::setw(11)
            << r.suite << " " << r.check << "  [" << r.checked - r.violations << "/" << r.checked
            << "]";
        if (!r.pass()) out << "  first counterexample: " << r.first_counterexample;
        out << "\n";
    }
    return out.str();
}

}  // namespace dlab
