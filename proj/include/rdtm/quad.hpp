#ifndef RDTM_QUAD_HPP
#define RDTM_QUAD_HPP

// IEEE binary128 support for the verification path (GCC/Clang on x86_64, libquadmath).

#include <quadmath.h>

#include <string>

#include "rdtm/evaluator.hpp"

namespace rdtm {

using quad = __float128;

template <>
struct ScalarOps<quad> {
    static quad from_double(double v) { return v; }
    static double to_double(quad v) { return static_cast<double>(v); }
    static quad pow(quad b, quad e) { return powq(b, e); }
    static quad apply(Function fn, quad v)
    {
        switch (fn) {
        case Function::Sin: return sinq(v);
        case Function::Cos: return cosq(v);
        case Function::Tan: return tanq(v);
        case Function::Sinh: return sinhq(v);
        case Function::Cosh: return coshq(v);
        case Function::Tanh: return tanhq(v);
        case Function::Exp: return expq(v);
        case Function::Ln: return logq(v);
        case Function::Sqrt: return sqrtq(v);
        }
        return v;
    }
};

using QuadEvaluator = BasicEvaluator<quad>;

inline quad abs(quad v) { return fabsq(v); }
inline quad log(quad v) { return logq(v); }

inline std::string to_string(quad v, int digits = 34)
{
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, v);
    return buf;
}

}  // namespace rdtm

#endif  // RDTM_QUAD_HPP
