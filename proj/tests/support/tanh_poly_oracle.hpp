#ifndef RDTM_TESTS_TANH_POLY_ORACLE_HPP
#define RDTM_TESTS_TANH_POLY_ORACLE_HPP

// Independent route to the spectrum functions for initial data that is a
// polynomial in T = tanh(kappa (x - x0)): since dT/dx = kappa (1 - T^2), every
// U_k stays a polynomial in T, and the recurrence becomes plain polynomial
// arithmetic on coefficient vectors. Shares no code with the Expr engine.
// Run it in binary128: the monomial basis cancels badly where |T| -> 1.

#include <algorithm>
#include <vector>

namespace oracle {

template <class S>
using Poly = std::vector<S>;  // coefficients of T^0, T^1, ...

template <class S>
Poly<S> add(const Poly<S>& a, const Poly<S>& b, S sb = S(1))
{
    Poly<S> r(std::max(a.size(), b.size()), S(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += sb * b[i];
    return r;
}

template <class S>
Poly<S> mul(const Poly<S>& a, const Poly<S>& b)
{
    if (a.empty() || b.empty()) return {};
    Poly<S> r(a.size() + b.size() - 1, S(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <class S>
Poly<S> scale(Poly<S> a, S s)
{
    for (auto& v : a) v = v * s;
    return a;
}

// d/dx of p(T): kappa (1 - T^2) p'(T)
template <class S>
Poly<S> dx(const Poly<S>& p, S kappa, int times = 1)
{
    Poly<S> q = p;
    for (int n = 0; n < times; ++n) {
        Poly<S> d(q.size() > 1 ? q.size() - 1 : 1, S(0));
        for (std::size_t i = 1; i < q.size(); ++i) d[i - 1] = S(static_cast<double>(i)) * q[i];
        q = scale(mul(d, Poly<S>{S(1), S(0), S(-1)}), kappa);
    }
    return q;
}

template <class S>
S eval(const Poly<S>& p, S t)
{
    S acc = S(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

struct Linear {
    double c;
    int order;
};
struct Nonlinear {
    double c;
    int power;
    int order;
};

// U_0..U_n for u_t + sum c d^m u + sum a u^p d^d u = 0.
template <class S>
std::vector<Poly<S>> build(const Poly<S>& f, S kappa, const std::vector<Linear>& lin, const std::vector<Nonlinear>& non,
                           int n)
{
    std::vector<Poly<S>> u{f};
    for (int k = 0; k < n; ++k) {
        Poly<S> s{S(0)};
        for (const auto& t : lin) s = add(s, scale(dx(u[k], kappa, t.order), S(t.c)));
        for (const auto& t : non) {
            // (u^p)_r by repeated convolution of the coefficient sequences.
            std::vector<Poly<S>> pw(k + 1, Poly<S>{S(0)});
            pw[0] = Poly<S>{S(1)};
            for (int j = 0; j < t.power; ++j) {
                std::vector<Poly<S>> next(k + 1, Poly<S>{S(0)});
                for (int r = 0; r <= k; ++r)
                    for (int q = 0; q <= r; ++q) next[r] = add(next[r], mul(pw[q], u[r - q]));
                pw = next;
            }
            for (int r = 0; r <= k; ++r) s = add(s, scale(mul(pw[r], dx(u[k - r], kappa, t.order)), S(t.c)));
        }
        u.push_back(scale(s, S(-1) / S(k + 1)));
    }
    return u;
}

// The KS initial profile as a polynomial in T; sqrt_11_19 = sqrt(11/19) in S.
template <class S>
Poly<S> ks_profile(S c, S sqrt_11_19)
{
    const S a = S(5) / S(19) * sqrt_11_19;
    return {c, S(-9) * a, S(0), S(11) * a};
}

}  // namespace oracle

#endif
