#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "diamondlab/io.hpp"

using namespace dlab;

namespace {
std::filesystem::path tmp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("matrix json round trip") {
    CMat a(2, 3);
    a << Complex(1, -2), 0, 3, Complex(0, 1), 5, Complex(-1, 0.5);
    const CMat back = io::mat_from_json(io::to_json(a));
    CHECK(approx_eq(back, a, Tol{0, 0, 1e-12}));

    const auto path = tmp_file("dlab_io_mat.json");
    io::write_mat(path.string(), a);
    CHECK(approx_eq(io::read_mat(path.string()), a, Tol{0, 0, 1e-12}));
    std::filesystem::remove(path);
}

TEST_CASE("block matrix json") {
    BlockMat b({CMat::Identity(2, 2), 3.0 * CMat::Identity(1, 1)});
    const std::string text = io::to_json(b);
    const io::MatOrBlock back = io::mat_or_block_from_json(text);
    REQUIRE(std::holds_alternative<BlockMat>(back));
    CHECK(approx_eq(std::get<BlockMat>(back).dense(), b.dense()));

    // a plain matrix document comes back as CMat through the same reader
    const io::MatOrBlock plain = io::mat_or_block_from_json(io::to_json(CMat::Identity(2, 2)));
    CHECK(std::holds_alternative<CMat>(plain));
}

TEST_CASE("linear map json keeps supermatrix and tag") {
    Sampler s(1);
    const LinearMap t = make_canonical(1.5, s.unitary(2), s.unitary(2), true);
    const LinearMap back = io::map_from_json(io::to_json(t));
    CHECK(back.dim == 2);
    CHECK(approx_eq(back.super, t.super, Tol{0, 0, 1e-12}));
    REQUIRE(back.tag.has_value());
    CHECK(back.tag->lambda == doctest::Approx(1.5));
    CHECK(back.tag->transpose);
    CHECK(approx_eq(back.tag->left, t.tag->left, Tol{0, 0, 1e-12}));

    const LinearMap untagged = LinearMap::identity(2);
    CHECK_FALSE(io::map_from_json(io::to_json(untagged)).tag.has_value());

    const auto path = tmp_file("dlab_io_map.json");
    io::write_map(path.string(), t);
    CHECK(approx_eq(io::read_map(path.string()).super, t.super, Tol{0, 0, 1e-12}));
    std::filesystem::remove(path);
}

TEST_CASE("malformed documents raise errors") {
    CHECK_THROWS(io::mat_from_json("not json"));
    CHECK_THROWS(io::mat_from_json(R"({"rows": 2, "cols": 2, "data": [[1, 0]]})"));
    CHECK_THROWS(io::mat_from_json(R"({"cols": 2, "data": []})"));
    CHECK_THROWS(io::read_mat("/nonexistent/path.json"));
}

TEST_CASE("hasse diagrams render as DOT digraphs") {
    CMat e11 = CMat::Zero(2, 2);
    e11(0, 0) = 1;
    const HasseDiagram h = hasse({CMat::Zero(2, 2), e11, CMat::Identity(2, 2)},
                                 OrderKind::Diamond);
    const std::string dot = io::to_dot(h, {"zero", "e11", "id"});
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("zero") != std::string::npos);
    CHECK(dot.find("id") != std::string::npos);

    // unnamed nodes fall back to indices
    const std::string plain = io::to_dot(h);
    CHECK(plain.find("digraph") != std::string::npos);
}
