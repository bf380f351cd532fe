#include "qlct/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "qlct/errors.hpp"

namespace qlct {

TransformSpec qfrft_spec(double alpha, double beta) {
    return TransformSpec::canonical(ParamMatrix::rotation(alpha), ParamMatrix::rotation(beta));
}

static UnitPureImaginary axis_from(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0)) throw Error("transform spec: zero axis vector");
    return UnitPureImaginary({0.0, x / n, y / n, z / n});
}

TransformSpec parse_transform_spec(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == '/' || c == ',') c = ' ';
    std::istringstream is(cleaned);
    std::vector<double> nums;
    double v;
    while (is >> v) nums.push_back(v);
    if (nums.size() != 8 && nums.size() != 14)
        throw Error("transform spec: expected 8 numbers (a1 b1 c1 d1 / a2 b2 c2 d2) "
                    "optionally followed by two 3-vector axes, got " +
                    std::to_string(nums.size()));
    ParamMatrix A1, A2;
    try {
        A1 = ParamMatrix(nums[0], nums[1], nums[2], nums[3]);
    } catch (const Error&) {
        throw Error("transform spec: matrix A1 is not unit-determinant");
    }
    try {
        A2 = ParamMatrix(nums[4], nums[5], nums[6], nums[7]);
    } catch (const Error&) {
        throw Error("transform spec: matrix A2 is not unit-determinant");
    }
    if (nums.size() == 8) return TransformSpec::canonical(A1, A2);
    return {A1, A2, axis_from(nums[8], nums[9], nums[10]), axis_from(nums[11], nums[12], nums[13])};
}

std::string format_transform_spec(const TransformSpec& spec) {
    std::ostringstream os;
    os.precision(17);
    const auto m = spec.mu.vec(), n = spec.nu.vec();
    os << spec.A1.a << " " << spec.A1.b << " " << spec.A1.c << " " << spec.A1.d << " / " << spec.A2.a << " "
       << spec.A2.b << " " << spec.A2.c << " " << spec.A2.d << " / " << m[0] << " " << m[1] << " " << m[2] << " / "
       << n[0] << " " << n[1] << " " << n[2] << "\n";
    return os.str();
}

TransformSpec load_transform_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open transform spec file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_transform_spec(ss.str());
}

}  // namespace qlct
