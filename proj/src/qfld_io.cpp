#include "qlct/qfld_io.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "qlct/errors.hpp"

namespace qlct {

namespace {

// Little-endian writers; this codebase targets little-endian hosts and the
// format pins LE explicitly.
template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!is) throw IoError("qfld: truncated file");
    return v;
}

}  // namespace

void write_qfld(const std::string& path, const Field2D& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("qfld: cannot open for writing: " + path);
    os.write("QFLD", 4);
    put<std::uint16_t>(os, 1);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.spec.nx));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.spec.ny));
    put<double>(os, f.spec.dx);
    put<double>(os, f.spec.dy);
    put<std::uint8_t>(os, f.spec.centered ? 1 : 0);
    for (const Quaternion& q : f.samples) {
        put<double>(os, q.w);
        put<double>(os, q.x);
        put<double>(os, q.y);
        put<double>(os, q.z);
    }
    if (!os) throw IoError("qfld: write failed: " + path);
}

Field2D read_qfld(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("qfld: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "QFLD", 4) != 0) throw UnsupportedFormat("qfld: bad magic in " + path);
    const auto version = get<std::uint16_t>(is);
    if (version != 1) throw UnsupportedFormat("qfld: unsupported version");
    const auto nx = get<std::uint32_t>(is);
    const auto ny = get<std::uint32_t>(is);
    const double dx = get<double>(is);
    const double dy = get<double>(is);
    const auto centered = get<std::uint8_t>(is);
    Field2D f(GridSpec2D(static_cast<int>(nx), static_cast<int>(ny), dx, dy, centered != 0));
    for (Quaternion& q : f.samples) {
        q.w = get<double>(is);
        q.x = get<double>(is);
        q.y = get<double>(is);
        q.z = get<double>(is);
    }
    return f;
}

}  // namespace qlct
