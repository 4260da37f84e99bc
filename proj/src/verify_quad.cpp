#include "rdtm/verify_quad.hpp"

#include <cmath>
#include <stdexcept>

namespace rdtm {

SlopeFit residual_slope(const SpectrumSeries& series, const PdeModel& model, const Bindings& bindings, double x,
                        double t_lo, double t_hi, int samples)
{
    if (!(t_lo > 0.0) || !(t_hi > t_lo) || samples < 2) throw std::invalid_argument("residual_slope: bad t range");
    const BasicSeriesEvaluator<quad> u(series, bindings);
    auto fn = [&u](quad xx, quad tt) { return u(xx, tt); };

    SlopeFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < samples; ++i) {
        const double t = t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (samples - 1));
        const double r = std::fabs(static_cast<double>(residual<quad>(fn, model, quad(x), quad(t))));
        fit.ts.push_back(t);
        fit.residuals.push_back(r);
        const double lx = std::log(t);
        const double ly = std::log(r);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = samples;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

}  // namespace rdtm
