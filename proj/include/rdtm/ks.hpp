#ifndef RDTM_KS_HPP
#define RDTM_KS_HPP

#include "rdtm/engine.hpp"
#include "rdtm/expr.hpp"

namespace rdtm {

double default_kappa();

// Traveling-wave parameters: speed c, wave number kappa (nonzero), offset x0.
struct KsParams {
    double c = 0.1;
    double kappa = default_kappa();
    double x0 = -30.0;

    void validate() const;
    // Binds the named constants "c", "kappa", "x0".
    Bindings bindings() const;
};

// c + (5/19) sqrt(11/19) (11 tanh^3(kappa (x - x0)) - 9 tanh(kappa (x - x0)))
// with c, kappa, x0 left as named constants.
Expr ks_initial();
inline Expr ks_initial(const KsParams&) { return ks_initial(); }

// Same profile shifted by c t. Bitwise equal to evaluating ks_initial() at t = 0.
double ks_exact(const KsParams& p, double x, double t);

// u_t + u u_x + gamma u_xx + lambda u_xxxx = 0
PdeModel ks_model(double gamma = 1.0, double lambda = 1.0);

// The recurrence as typeset in the source table's derivation:
// u_t + gamma u_xx + lambda u_xxx + u u_xx = 0.
PdeModel ks_printed_model(double gamma = 1.0, double lambda = 1.0);

// u_t + alpha u^beta u_x + gamma u^tau u_xx + lambda u_xxxx = 0
PdeModel generalized_model(double alpha, int beta, double gamma, int tau, double lambda);

}  // namespace rdtm

#endif  // RDTM_KS_HPP
