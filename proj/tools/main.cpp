#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamondlab/io.hpp"
#include "diamondlab/preservers.hpp"
#include "diamondlab/structure.hpp"
#include "diamondlab/suites.hpp"

namespace {

using namespace dlab;
using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInapplicable = 2;
constexpr int kExitError = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DIAMOND_LAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

json report_to_json(const OrderReport& rep) {
    json doc;
    doc["kind"] = to_string(rep.kind);
    doc["verdict"] = rep.verdict == Verdict::Holds
                         ? "holds"
                         : (rep.verdict == Verdict::Fails ? "fails" : "inapplicable");
    for (const auto& [k, v] : rep.residuals) doc["residuals"][k] = v;
    for (const auto& [k, w] : rep.witnesses) doc["witnesses"][k] = json::parse(io::to_json(w));
    return doc;
}

void print_report(const OrderReport& rep, bool machine) {
    if (machine) {
        std::cout << report_to_json(rep).dump(2) << "\n";
        return;
    }
    std::cout << "kind: " << to_string(rep.kind) << "\n";
    std::cout << "verdict: "
              << (rep.verdict == Verdict::Holds
                      ? "holds"
                      : (rep.verdict == Verdict::Fails ? "fails" : "inapplicable"))
              << "\n";
    for (const auto& [k, v] : rep.residuals) std::cout << "residual." << k << ": " << v << "\n";
    for (const auto& [k, w] : rep.witnesses)
        std::cout << "witness." << k << ".fro_norm: " << fro(w) << "\n";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Holds: return kExitHolds;
        case Verdict::Fails: return kExitFails;
        case Verdict::Inapplicable: return kExitInapplicable;
    }
    return kExitError;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized inverses, matrix partial orders, and diamond-order preservers"};
    app.require_subcommand(1);

    Tol tol;
    std::uint64_t seed = default_seed();
    app.add_option("--tol-abs", tol.atol, "absolute tolerance")->capture_default_str();
    app.add_option("--tol-rel", tol.rtol, "relative tolerance")->capture_default_str();
    app.add_option("--rank-rel", tol.rank_rel, "rank cutoff fraction")->capture_default_str();
    app.add_option("--seed", seed, "random seed (default: DIAMOND_LAB_SEED or 0)");

    // pinv
    auto* cmd_pinv = app.add_subcommand("pinv", "Moore-Penrose inverse of a matrix file");
    std::string pinv_in, pinv_out;
    cmd_pinv->add_option("input", pinv_in, "matrix file")->required();
    cmd_pinv->add_option("-o,--output", pinv_out, "output matrix file (default: stdout)");

    // ginv
    auto* cmd_ginv = app.add_subcommand("ginv", "group inverse of a square matrix file");
    std::string ginv_in, ginv_out;
    cmd_ginv->add_option("input", ginv_in, "matrix file")->required();
    cmd_ginv->add_option("-o,--output", ginv_out, "output matrix file (default: stdout)");

    // order
    auto* cmd_order = app.add_subcommand("order", "decide a partial order between two matrices");
    std::string order_kind = "diamond", order_a, order_b;
    bool order_json = false;
    cmd_order->add_option("--kind", order_kind,
                          "space|diamond|star|left-star|right-star|minus|sharp");
    cmd_order->add_option("a", order_a, "left matrix file")->required();
    cmd_order->add_option("b", order_b, "right matrix file")->required();
    cmd_order->add_flag("--json", order_json, "machine-readable report");

    // hasse
    auto* cmd_hasse = app.add_subcommand("hasse", "Hasse diagram of matrix files as DOT");
    std::string hasse_kind = "diamond", hasse_dir, hasse_out;
    cmd_hasse->add_option("--kind", hasse_kind, "order kind");
    cmd_hasse->add_option("dir", hasse_dir, "directory of .mat files")->required();
    cmd_hasse->add_option("-o,--output", hasse_out, "output DOT file (default: stdout)");

    // preserver-check
    auto* cmd_pc = app.add_subcommand("preserver-check", "diamond-preservation verdict for a map");
    std::string pc_in;
    int pc_pairs = 200;
    bool pc_forward_only = false;
    cmd_pc->add_option("input", pc_in, "linear map file")->required();
    cmd_pc->add_option("--pairs", pc_pairs, "generated pairs per direction");
    cmd_pc->add_flag("--forward-only", pc_forward_only, "skip the backward direction");

    // preserver-decompose
    auto* cmd_pd = app.add_subcommand("preserver-decompose",
                                      "split a preserver as h times a (anti)*-isomorphism");
    std::string pd_in;
    cmd_pd->add_option("input", pd_in, "linear map file")->required();

    // props
    auto* cmd_props = app.add_subcommand("props", "run the seeded property suites");
    std::string props_suite = "all", props_ns = "2,3,4";
    int props_pairs = 1000;
    cmd_props->add_option("--suite", props_suite, "orders|structure|preservers|jordan|example|all");
    cmd_props->add_option("--n", props_ns, "comma list of matrix sizes");
    cmd_props->add_option("--pairs", props_pairs, "pairs per sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_pinv) {
            const CMat a = io::read_mat(pinv_in);
            const CMat g = pinv(a, tol);
            const PenroseResiduals r = penrose_residuals(a, g);
            std::cerr << "penrose residuals: " << r.r1 << " " << r.r2 << " " << r.r3 << " "
                      << r.r4 << "\n";
            emit(pinv_out, io::to_json(g));
            return kExitHolds;
        }

        if (*cmd_ginv) {
            const CMat a = io::read_mat(ginv_in);
            const auto g = group_inverse(a, tol);
            if (!g) {
                std::cout << "verdict: no group inverse (rank(a^2) < rank(a))\n";
                return kExitFails;
            }
            emit(ginv_out, io::to_json(*g));
            return kExitHolds;
        }

        if (*cmd_order) {
            const auto kind = order_kind_from_string(order_kind);
            if (!kind) {
                std::cerr << "error: unknown order kind '" << order_kind << "'\n";
                return kExitError;
            }
            const auto a = io::read_mat_or_block(order_a);
            const auto b = io::read_mat_or_block(order_b);
            OrderReport rep;
            if (std::holds_alternative<BlockMat>(a) || std::holds_alternative<BlockMat>(b)) {
                if (!std::holds_alternative<BlockMat>(a) || !std::holds_alternative<BlockMat>(b)) {
                    std::cerr << "error: " << order_a << " and " << order_b
                              << " must both be block matrices or both dense\n";
                    return kExitError;
                }
                rep = check_order(*kind, std::get<BlockMat>(a), std::get<BlockMat>(b), tol);
            } else {
                rep = check_order(*kind, std::get<CMat>(a), std::get<CMat>(b), tol);
            }
            print_report(rep, order_json);
            return exit_code(rep.verdict);
        }

        if (*cmd_hasse) {
            const auto kind = order_kind_from_string(hasse_kind);
            if (!kind) {
                std::cerr << "error: unknown order kind '" << hasse_kind << "'\n";
                return kExitError;
            }
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(hasse_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".mat")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) {
                std::cerr << "error: no .mat files under " << hasse_dir << "\n";
                return kExitError;
            }
            std::vector<CMat> elements;
            std::vector<std::string> names;
            for (const auto& f : files) {
                elements.push_back(io::read_mat(f.string()));
                names.push_back(f.stem().string());
            }
            const HasseDiagram diagram = hasse(elements, *kind, tol);
            for (std::size_t idx : diagram.excluded)
                std::cerr << "warning: excluding " << names[idx]
                          << " (order inapplicable: no group inverse)\n";
            emit(hasse_out, io::to_dot(diagram, names));
            return kExitHolds;
        }

        if (*cmd_pc) {
            const LinearMap t = io::read_map(pc_in);
            const PreserverVerdict v =
                preserves_diamond(t, pc_pairs, seed, tol, !pc_forward_only);
            std::cout << "forward: " << (v.forward_ok ? "ok" : "fails") << "\n";
            if (v.backward_ok)
                std::cout << "backward: " << (*v.backward_ok ? "ok" : "fails") << "\n";
            std::cout << "pairs_checked: " << v.sample_count << "\n";
            if (v.counterexample) {
                std::cout << "counterexample.a:\n" << io::to_json(v.counterexample->first);
                std::cout << "counterexample.b:\n" << io::to_json(v.counterexample->second);
            }
            return v.ok() ? kExitHolds : kExitFails;
        }

        if (*cmd_pd) {
            const LinearMap t = io::read_map(pd_in);
            const DecompositionReport rep = decompose_preserver(t, tol);
            std::cout << "flavor: " << to_string(rep.flavor) << "\n";
            std::cout << "lambda: " << rep.lambda << "\n";
            std::cout << "scale: " << rep.scale << "\n";
            for (const auto& [k, v] : rep.residuals) std::cout << "residual." << k << ": " << v << "\n";
            if (rep.flavor != Flavor::Neither) {
                std::cout << "h:\n" << io::to_json(rep.h);
                std::cout << "left_unitary:\n" << io::to_json(rep.left_unitary);
                std::cout << "right_unitary:\n" << io::to_json(rep.right_unitary);
            }
            return rep.flavor != Flavor::Neither ? kExitHolds : kExitFails;
        }

        if (*cmd_props) {
            SuiteConfig cfg;
            cfg.tol = tol;
            cfg.seed = seed;
            cfg.pairs = props_pairs;
            cfg.ns.clear();
            std::stringstream ss(props_ns);
            std::string item;
            while (std::getline(ss, item, ',')) cfg.ns.push_back(std::stoll(item));
            if (cfg.ns.empty()) {
                std::cerr << "error: --n needs at least one size\n";
                return kExitError;
            }
            const auto results = run_suites(props_suite, cfg);
            std::cout << format_results(results);
            const bool all_pass =
                std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
            return all_pass ? kExitHolds : kExitFails;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
