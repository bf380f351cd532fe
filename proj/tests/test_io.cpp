#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "qlct/image.hpp"
#include "qlct/qfld_io.hpp"
#include "support.hpp"

using namespace qlct;

namespace {
std::string tmp_path(const std::string& name) { return "/tmp/qlct_test_" + name; }
}  // namespace

TEST_CASE("qfld round trip preserves spec and samples exactly") {
    GridSpec2D s(12, 9, 0.25, 0.75, true);
    const Field2D f = random_field(s, 81, FieldKind::Iid);
    const std::string path = tmp_path("roundtrip.qfld");
    write_qfld(path, f);
    const Field2D g = read_qfld(path);
    CHECK(g.spec == f.spec);
    CHECK(rel_frobenius(f, g) == 0.0);
    std::remove(path.c_str());
}

TEST_CASE("qfld header layout") {
    GridSpec2D s(2, 2, 1.0, 1.0, false);
    Field2D f(s);
    f.at(0, 0) = {1, 2, 3, 4};
    const std::string path = tmp_path("header.qfld");
    write_qfld(path, f);
    std::ifstream is(path, std::ios::binary);
    char buf[27];
    is.read(buf, 27);
    CHECK(std::string(buf, 4) == "QFLD");
    CHECK(buf[4] == 1);   // version u16 LE
    CHECK(buf[5] == 0);
    CHECK(buf[6] == 2);   // nx u32 LE
    CHECK(buf[10] == 2);  // ny
    CHECK(buf[26] == 0);  // centered flag
    std::remove(path.c_str());
}

TEST_CASE("qfld rejects bad input") {
    const std::string path = tmp_path("bad.qfld");
    std::ofstream(path) << "NOTQFLDDATA";
    CHECK_THROWS_AS(read_qfld(path), UnsupportedFormat);
    CHECK_THROWS_AS(read_qfld("/nonexistent/x.qfld"), IoError);
    std::remove(path.c_str());
}

TEST_CASE("image to field and back") {
    // 2x2 image with primary colours
    Field2D f(GridSpec2D(2, 2, 1.0, 1.0, true));
    f.at(0, 0) = {0, 1, 0, 0};        // red
    f.at(1, 0) = {0, 0, 1, 0};        // green
    f.at(0, 1) = {0, 0, 0, 1};        // blue
    f.at(1, 1) = {0, 0.5, 0.5, 0.5};  // gray

    for (const char* ext : {"ppm", "png"}) {
        const std::string path = tmp_path(std::string("pix.") + ext);
        field_to_image(f, path);
        const Field2D g = image_to_field(path);
        CHECK(g.spec.nx == 2);
        CHECK(g.spec.ny == 2);
        // pure red pixel maps to quaternion (0,1,0,0)
        CHECK(g.at(0, 0).x == 1.0);
        CHECK(g.at(0, 0).w == 0.0);
        CHECK(modulus(g.at(1, 1) - Quaternion{0, 128.0 / 255, 128.0 / 255, 128.0 / 255}) < 1e-12);
        std::remove(path.c_str());
    }
}

TEST_CASE("image byte round trip is exact per pixel") {
    GridSpec2D s(24, 16, 1.0, 1.0, true);
    Field2D f(s);
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& q : f.samples) q = {0, byte(rng) / 255.0, byte(rng) / 255.0, byte(rng) / 255.0};

    for (const char* ext : {"ppm", "png"}) {
        const std::string path = tmp_path(std::string("rt.") + ext);
        field_to_image(f, path);
        const Field2D g = image_to_field(path);
        CHECK(rel_frobenius(f, g) == 0.0);
        std::remove(path.c_str());
    }
}

TEST_CASE("grayscale image has equal channels") {
    GridSpec2D s(8, 8, 1.0, 1.0, true);
    Field2D f(s);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const double v = (i * 8 + j) / 63.0;
            f.at(i, j) = {0, v, v, v};
        }
    const std::string path = tmp_path("gray.png");
    field_to_image(f, path);
    const Field2D g = image_to_field(path);
    for (const auto& q : g.samples) {
        CHECK(q.x == q.y);
        CHECK(q.y == q.z);
    }
    std::remove(path.c_str());
}

TEST_CASE("unsupported image extensions rejected") {
    Field2D f(GridSpec2D(2, 2, 1.0, 1.0, true));
    CHECK_THROWS_AS(field_to_image(f, tmp_path("x.bmp")), UnsupportedFormat);
    CHECK_THROWS_AS(image_to_field(tmp_path("missing.ppm")), IoError);
}
