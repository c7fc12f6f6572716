#include "diamondlab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dlab {
namespace io {

using nlohmann::json;

namespace {

json mat_to_doc(const CMat& a) {
    json data = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            data.push_back({a(i, j).real(), a(i, j).imag()});
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

CMat mat_from_doc(const json& doc) {
    const Eigen::Index rows = doc.at("rows").get<Eigen::Index>();
    const Eigen::Index cols = doc.at("cols").get<Eigen::Index>();
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix document: non-positive shape");
    const auto& data = doc.at("data");
    if (static_cast<Eigen::Index>(data.size()) != rows * cols)
        throw std::invalid_argument("matrix document: data length " +
                                    std::to_string(data.size()) + " does not match " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
    CMat a(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j, ++k)
            a(i, j) = Complex(data[k].at(0).get<double>(), data[k].at(1).get<double>());
    require_finite(a, "matrix document");
    return a;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace

std::string to_json(const CMat& a) { return mat_to_doc(a).dump(2) + "\n"; }

std::string to_json(const BlockMat& a) {
    json blocks = json::array();
    for (const auto& b : a.blocks) blocks.push_back(mat_to_doc(b));
    return json{{"blocks", std::move(blocks)}}.dump(2) + "\n";
}

CMat mat_from_json(const std::string& text) { return mat_from_doc(json::parse(text)); }

MatOrBlock mat_or_block_from_json(const std::string& text) {
    const json doc = json::parse(text);
    if (doc.contains("blocks")) {
        std::vector<CMat> blocks;
        for (const auto& b : doc.at("blocks")) blocks.push_back(mat_from_doc(b));
        return BlockMat(std::move(blocks));
    }
    return mat_from_doc(doc);
}

CMat read_mat(const std::string& path) {
    try {
        return mat_from_json(slurp(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid matrix file " + path + ": " + e.what());
    }
}

MatOrBlock read_mat_or_block(const std::string& path) {
    try {
        return mat_or_block_from_json(slurp(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid matrix file " + path + ": " + e.what());
    }
}

void write_mat(const std::string& path, const CMat& a) { spit(path, to_json(a)); }

std::string to_json(const LinearMap& t) {
    json doc{{"dim", t.dim}, {"super", mat_to_doc(t.super)}};
    if (t.tag) {
        doc["tag"] = json{{"lambda", t.tag->lambda},
                          {"U", mat_to_doc(t.tag->left)},
                          {"V", mat_to_doc(t.tag->right)},
                          {"transpose", t.tag->transpose}};
    }
    return doc.dump(2) + "\n";
}

LinearMap map_from_json(const std::string& text) {
    const json doc = json::parse(text);
    const Eigen::Index dim = doc.at("dim").get<Eigen::Index>();
    CMat super = mat_from_doc(doc.at("super"));
    if (super.rows() != dim * dim || super.cols() != dim * dim)
        throw std::invalid_argument("map document: super must be dim^2 x dim^2");
    LinearMap t{dim, std::move(super), std::nullopt};
    if (doc.contains("tag")) {
        const auto& tag = doc.at("tag");
        t.tag = CanonicalTag{tag.at("lambda").get<double>(), mat_from_doc(tag.at("U")),
                             mat_from_doc(tag.at("V")), tag.at("transpose").get<bool>()};
    }
    return t;
}

LinearMap read_map(const std::string& path) {
    try {
        return map_from_json(slurp(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid map file " + path + ": " + e.what());
    }
}

void write_map(const std::string& path, const LinearMap& t) { spit(path, to_json(t)); }

std::string to_dot(const HasseDiagram& h, const std::vector<std::string>& names) {
    auto label = [&](std::size_t input_idx) {
        return input_idx < names.size() ? names[input_idx] : std::to_string(input_idx);
    };
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t c = 0; c < h.classes.size(); ++c) {
        out << "  n" << c << " [label=\"";
        for (std::size_t k = 0; k < h.classes[c].size(); ++k) {
            if (k) out << " = ";
            out << label(h.classes[c][k]);
        }
        out << "\"];\n";
    }
    for (const auto& e : h.edges) out << "  n" << e.from << " -> n" << e.to << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace io
}  // namespace dlab
