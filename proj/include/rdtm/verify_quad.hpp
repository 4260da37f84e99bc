#ifndef RDTM_VERIFY_QUAD_HPP
#define RDTM_VERIFY_QUAD_HPP

#include <vector>

#include "rdtm/quad.hpp"
#include "rdtm/verify.hpp"

namespace rdtm {

// Roundoff is ~1e-34 relative, so much smaller steps pay off.
template <>
inline FdSteps<quad> default_fd_steps<quad>()
{
    return {{0.0, 1e-5, 1e-4, 5e-4, 2e-3}, 1e-4};
}

struct SlopeFit {
    double slope = 0.0;
    std::vector<double> ts;
    std::vector<double> residuals;  // |R(x, t)|
};

// Least-squares slope of log|R| against log t for the truncated series
// u_n = sum U_k t^k, with R the finite-difference residual of `model`
// evaluated entirely in binary128. Samples are log-spaced on [t_lo, t_hi].
SlopeFit residual_slope(const SpectrumSeries& series, const PdeModel& model, const Bindings& bindings, double x,
                        double t_lo = 1e-3, double t_hi = 1e-1, int samples = 9);

}  // namespace rdtm

#endif  // RDTM_VERIFY_QUAD_HPP
