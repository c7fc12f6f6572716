#ifndef DIAMONDLAB_IO_HPP
#define DIAMONDLAB_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "diamondlab/orders.hpp"
#include "diamondlab/preservers.hpp"

namespace dlab {
namespace io {

// Matrix documents are JSON: {"rows": m, "cols": n, "data": [[re, im], ...]}
// with data flat in row-major order. Block matrices instead carry
// {"blocks": [<matrix doc>, ...]}.

std::string to_json(const CMat& a);
std::string to_json(const BlockMat& a);

using MatOrBlock = std::variant<CMat, BlockMat>;

CMat mat_from_json(const std::string& text);
MatOrBlock mat_or_block_from_json(const std::string& text);
CMat read_mat(const std::string& path);
MatOrBlock read_mat_or_block(const std::string& path);
void write_mat(const std::string& path, const CMat& a);

// Linear map documents: {"dim": n, "super": <matrix doc>} plus an optional
// "tag": {"lambda": l, "U": <matrix doc>, "V": <matrix doc>, "transpose": b}.
std::string to_json(const LinearMap& t);
LinearMap map_from_json(const std::string& text);
LinearMap read_map(const std::string& path);
void write_map(const std::string& path, const LinearMap& t);

/// DOT digraph for a Hasse diagram; `names` labels input indices (falls
/// back to the index itself).
std::string to_dot(const HasseDiagram& h, const std::vector<std::string>& names = {});

}  // namespace io
}  // namespace dlab

#endif
