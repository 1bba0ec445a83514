#include "partasym/saddle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "partasym/debye.hpp"
#include "partasym/errors.hpp"

namespace partasym {

namespace {

using std::int64_t;

constexpr double kPi = 3.14159265358979323846;
constexpr double kBracketLo = 1e-8;
constexpr double kBracketHi = 700.0;
constexpr double kBracketLoFloor = 1e-14;
constexpr double kBracketHiCeil = 1e7;
constexpr double kEdgeMargin = 1e-9;      // distinct model: u^2 <= 2 - margin
constexpr double kRadicandMargin = 1e-12; // prefactor validity margin

// log(1 + e^x) without overflow.
double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// log(e^v - 1) for v > 0.
double log_expm1(double v) {
    return v > 33.0 ? v + std::log1p(-std::exp(-v)) : std::log(std::expm1(v));
}

struct BoundedVars {
    double w;    // v(p)
    double s;    // w - v = ln(1 + e^{-alpha - beta B})
    double ln_z; // ln(e^w - 1) = -alpha*
};

// Eliminates w through the alpha-equation closed form
//   e^w - 1 = (e^v - 1) / (1 - e^{v(1-1/p)}),
// and computes s = w - v = log(1 + z e^{-v/p}) directly (stable for tiny s).
BoundedVars bounded_vars(double v, double p) {
    const double denom = -std::expm1(v * (1.0 - 1.0 / p)); // in (0,1) for 0<p<1, v>0
    BoundedVars out;
    if (v > 35.0) {
        out.ln_z = v - std::log(denom);
        out.w = out.ln_z + std::log1p(std::exp(-out.ln_z));
        out.s = std::log1p(std::exp(out.ln_z - v / p));
    } else {
        const double z = std::expm1(v) / denom;
        out.ln_z = std::log(z);
        out.w = std::log1p(z);
        out.s = std::log1p(z * std::exp(-v / p));
    }
    return out;
}

std::string feasibility_msg(ModelKind model, const std::string& detail) {
    return to_string(model) + " model infeasible: " + detail;
}

// Feasibility gate; returns p for the bounded model.
double check_feasible(ModelKind model, int64_t E, int64_t N,
                      const std::optional<int64_t>& B) {
    if (E < 1 || N < 1)
        throw std::invalid_argument("solve_saddle: requires E >= 1 and N >= 1");
    const __int128 e_min = (__int128)N * (N + 1) / 2;
    switch (model) {
    case ModelKind::unrestricted:
        return 0.0;
    case ModelKind::distinct: {
        if ((__int128)E < e_min) {
            std::ostringstream os;
            os << "E = " << E << " below minimum N(N+1)/2 = " << (long long)(__int128)e_min;
            throw feasibility_error(feasibility_msg(model, os.str()));
        }
        const double u2 = double(N) * double(N) / double(E);
        if (u2 > 2.0 - kEdgeMargin) {
            std::ostringstream os;
            os << "u^2 = N^2/E = " << u2 << " at the degenerate edge u^2 -> 2";
            throw feasibility_error(feasibility_msg(model, os.str()));
        }
        return 0.0;
    }
    case ModelKind::bounded_distinct: {
        if (!B)
            throw std::invalid_argument("solve_saddle: bounded model requires B");
        if (*B < 1)
            throw std::invalid_argument("solve_saddle: B must be >= 1");
        if (N >= *B) {
            std::ostringstream os;
            os << "requires N < B, got N = " << N << ", B = " << *B;
            throw feasibility_error(feasibility_msg(model, os.str()));
        }
        if ((__int128)E < e_min) {
            std::ostringstream os;
            os << "E = " << E << " below minimum N(N+1)/2 = " << (long long)e_min;
            throw feasibility_error(feasibility_msg(model, os.str()));
        }
        const __int128 e_max = (__int128)N * *B - (__int128)N * (N - 1) / 2;
        if ((__int128)E > e_max) {
            std::ostringstream os;
            os << "E = " << E << " above maximum NB - N(N-1)/2 = " << (long long)e_max;
            throw feasibility_error(feasibility_msg(model, os.str()));
        }
        // The positive-beta branch only covers energies below the midpoint
        // of the continuum approximation, E < NB/2.
        if ((__int128)2 * E >= (__int128)N * *B) {
            std::ostringstream os;
            os << "E = " << E << " at or above the positive-temperature bound NB/2 = "
               << double(N) * double(*B) / 2.0;
            throw feasibility_error(feasibility_msg(model, os.str()));
        }
        return double(N) / double(*B);
    }
    }
    throw std::logic_error("unreachable");
}

double saddle_g_prime(ModelKind model, double v) {
    return model == ModelKind::unrestricted ? g_minus_prime(v) : g_plus_prime(v);
}

// Root of v^2/u^2 = rhs(v).  G(v) = rhs(v)/v^2 is strictly decreasing, so a
// sign change brackets the unique root.
double solve_v(ModelKind model, double inv_u2, double p) {
    auto G = [&](double v) { return detail::saddle_rhs(model, v, p) / (v * v); };

    // The bounded rhs is a cancelling difference of O(1) terms, so G is
    // noise-dominated below v ~ 1e-6; start that bracket higher.
    double lo = model == ModelKind::bounded_distinct ? 1e-5 : kBracketLo;
    double hi = kBracketHi;
    double g_lo = G(lo), g_hi = G(hi);
    while (g_lo < inv_u2 && lo > kBracketLoFloor) {
        lo *= 1e-2;
        g_lo = G(lo);
    }
    while (g_hi > inv_u2 && hi < kBracketHiCeil) {
        hi *= 2.0;
        g_hi = G(hi);
    }
    if (!(g_lo >= inv_u2 && g_hi <= inv_u2)) {
        std::ostringstream os;
        os << "saddle root not bracketed for " << to_string(model) << ": G(" << lo
           << ") = " << g_lo << ", G(" << hi << ") = " << g_hi
           << ", target 1/u^2 = " << inv_u2;
        throw numerical_error(os.str());
    }

    // Bisection; coarse for the Newton-refined models, full depth otherwise.
    const bool newton = (model != ModelKind::bounded_distinct);
    const double bisect_rel = newton ? 1e-6 : 1e-13;
    for (int it = 0; it < 250 && (hi - lo) > bisect_rel * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (G(mid) >= inv_u2)
            lo = mid;
        else
            hi = mid;
    }
    double v = 0.5 * (lo + hi);
    if (!newton) return v;

    // Newton on F(v) = v^2/u^2 - rhs(v), F' = 2v/u^2 - g'(v); falls back to
    // bisection when a step leaves the bracket.
    for (int it = 0; it < 60; ++it) {
        const double f = v * v * inv_u2 - detail::saddle_rhs(model, v, p);
        const double fp = 2.0 * v * inv_u2 - saddle_g_prime(model, v);
        if (f > 0.0)
            hi = v;
        else
            lo = v;
        double next = (fp != 0.0) ? v - f / fp : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - v) <= 1e-15 * v) return next;
        v = next;
    }
    return v;
}

double alpha_star_of(ModelKind model, double v, double p) {
    switch (model) {
    case ModelKind::unrestricted:
        return -std::log1p(-std::exp(-v)); // e^-a = 1 - e^-v
    case ModelKind::distinct:
        return -log_expm1(v); // e^-a = e^v - 1
    case ModelKind::bounded_distinct:
        return -bounded_vars(v, p).ln_z; // e^-a = e^w - 1
    }
    throw std::logic_error("unreachable");
}

} // namespace

std::string to_string(ModelKind model) {
    switch (model) {
    case ModelKind::unrestricted: return "unrestricted";
    case ModelKind::distinct: return "distinct";
    case ModelKind::bounded_distinct: return "bounded-distinct";
    }
    throw std::logic_error("unreachable");
}

double AsymptoticEstimate::decimal_digits() const { return ln_value / M_LN10; }

double detail::bounded_w(double v, double p) {
    if (!(v > 0.0) || !(p > 0.0 && p < 1.0))
        throw std::invalid_argument("bounded_w: requires v > 0 and 0 < p < 1");
    return bounded_vars(v, p).w;
}

double detail::saddle_rhs(ModelKind model, double v, double p) {
    switch (model) {
    case ModelKind::unrestricted:
        return g_minus(v).value;
    case ModelKind::distinct:
        return g_plus(v).value;
    case ModelKind::bounded_distinct: {
        const BoundedVars bv = bounded_vars(v, p);
        return g_plus(bv.w).value - g_plus(bv.s).value - (v / p) * bv.s;
    }
    }
    throw std::logic_error("unreachable");
}

SaddleSolution solve_saddle(ModelKind model, int64_t E, int64_t N,
                            std::optional<int64_t> B) {
    const double p = check_feasible(model, E, N, B);
    const double u = double(N) / std::sqrt(double(E));
    const double inv_u2 = double(E) / (double(N) * double(N));

    SaddleSolution sol;
    sol.u = u;
    sol.v = solve_v(model, inv_u2, p);
    if (sol.v > kBracketHi) {
        std::ostringstream os;
        os << "solved v = " << sol.v << " exceeds the domain cap " << kBracketHi
           << "; e^-v underflows every alpha* relation there";
        throw validity_error(os.str());
    }
    sol.beta_star = sol.v / double(N);
    sol.alpha_star = alpha_star_of(model, sol.v, p);
    sol.residual = std::fabs(sol.v * sol.v * inv_u2 - detail::saddle_rhs(model, sol.v, p));
    if (model == ModelKind::bounded_distinct) {
        sol.p = p;
        sol.w = bounded_vars(sol.v, p).w;
    }
    sol.entropy = entropy_at(model, sol.alpha_star, sol.beta_star, E, N, B);

    // Solutions with a degenerate Gaussian direction are not returned.
    const double x = model == ModelKind::unrestricted ? std::expm1(sol.v)
                     : model == ModelKind::distinct   ? -std::expm1(-sol.v)
                                                      : -std::expm1(-*sol.w);
    if (!(u * u < 2.0 * x)) {
        std::ostringstream os;
        os << "Gaussian prefactor degenerates: u^2 = " << u * u
           << " >= 2x = " << 2.0 * x << " for " << to_string(model);
        throw validity_error(os.str());
    }
    sol.hessian_det = hessian_det(sol, model, E, N);
    return sol;
}

double entropy_at(ModelKind model, double alpha, double beta, int64_t E,
                  int64_t N, std::optional<int64_t> B) {
    if (!(beta > 0.0))
        throw std::invalid_argument("entropy_at: requires beta > 0");
    const double base = alpha * double(N) + beta * double(E);
    switch (model) {
    case ModelKind::unrestricted: {
        // the k = 0 factor of the product converts exactly-N to at-most-N
        // counts; together with the Euler-Maclaurin boundary term it leaves
        // -1/2 ln(1 - e^-a), i.e. +veff/2.
        const double one_minus_z = -std::expm1(-alpha); // 1 - e^-a, stable near a = 0
        if (!(one_minus_z > 0.0))
            throw std::invalid_argument("entropy_at: unrestricted model requires e^-alpha < 1");
        const double veff = -std::log(one_minus_z);
        return base + g_minus(veff).value / beta + 0.5 * veff;
    }
    case ModelKind::distinct: {
        const double veff = softplus(-alpha);
        return base + g_plus(veff).value / beta - 0.5 * veff;
    }
    case ModelKind::bounded_distinct: {
        if (!B) throw std::invalid_argument("entropy_at: bounded model requires B");
        const double veff = softplus(-alpha);
        const double veff_tail = softplus(-alpha - beta * double(*B));
        return base + (g_plus(veff).value - g_plus(veff_tail).value) / beta -
               0.5 * veff + 0.5 * veff_tail;
    }
    }
    throw std::logic_error("unreachable");
}

double entropy_boundary_term(ModelKind model, double alpha, double beta,
                             std::optional<int64_t> B) {
    switch (model) {
    case ModelKind::unrestricted: {
        const double one_minus_z = -std::expm1(-alpha);
        if (!(one_minus_z > 0.0))
            throw std::invalid_argument("entropy_boundary_term: requires e^-alpha < 1");
        return -0.5 * std::log(one_minus_z);
    }
    case ModelKind::distinct:
        return -0.5 * softplus(-alpha);
    case ModelKind::bounded_distinct:
        if (!B) throw std::invalid_argument("entropy_boundary_term: bounded model requires B");
        return -0.5 * softplus(-alpha) + 0.5 * softplus(-alpha - beta * double(*B));
    }
    throw std::logic_error("unreachable");
}

double hessian_det(const SaddleSolution& sol, ModelKind model, int64_t E, int64_t N) {
    (void)E;
    (void)N;
    const double v = sol.v, b = sol.beta_star, u = sol.u;
    double x = 0.0;
    switch (model) {
    case ModelKind::unrestricted: x = std::expm1(v); break;
    case ModelKind::distinct: x = -std::expm1(-v); break;
    case ModelKind::bounded_distinct:
        if (!sol.w) throw std::invalid_argument("hessian_det: bounded solution lacks w");
        x = -std::expm1(-*sol.w);
        break;
    }
    const double v2_u2 = (v / u) * (v / u);
    const double det = (2.0 * v2_u2 / (b * b * b)) * (x / b) - (v * v) / (b * b * b * b);
    if (!(det > 0.0)) {
        std::ostringstream os;
        os << "closed-form Hessian determinant not positive (" << det
           << "): saddle outside validity region, u^2 = " << u * u << " >= 2x = " << 2.0 * x;
        throw numerical_error(os.str());
    }
    return det;
}

AsymptoticEstimate estimate(ModelKind model, int64_t E, int64_t N,
                            std::optional<int64_t> B) {
    const SaddleSolution sol = solve_saddle(model, E, N, B);
    const double u = sol.u, v = sol.v;
    const double sqrt_e = std::sqrt(double(E));
    const double ln_pref_base = std::log(v) - 1.5 * M_LN2 - std::log(kPi) - std::log(u);

    double g = 0.0, ln_f = 0.0;
    switch (model) {
    case ModelKind::unrestricted: {
        // g = 2v/u - u ln(1-e^-v); f = v/(2^{3/2} pi u) ((1-e^-v) - u^2 e^-v / 2)^{-1/2}
        const double rad = -std::expm1(-v) - 0.5 * u * u * std::exp(-v);
        if (!(rad >= kRadicandMargin))
            throw validity_error("unrestricted prefactor radicand below margin");
        g = 2.0 * v / u - u * std::log1p(-std::exp(-v));
        ln_f = ln_pref_base - 0.5 * std::log(rad);
        break;
    }
    case ModelKind::distinct: {
        // g = 2v/u - u ln(e^v-1); f = v/(2^{3/2} pi u) ((e^v-1) - u^2 e^v / 2)^{-1/2},
        // radicand factored as e^v ((1-e^-v) - u^2/2) to stay in log domain.
        const double rad = -std::expm1(-v) - 0.5 * u * u;
        if (!(rad >= kRadicandMargin))
            throw validity_error("distinct prefactor radicand below margin");
        g = 2.0 * v / u - u * log_expm1(v);
        ln_f = ln_pref_base - 0.5 * (v + std::log(rad));
        break;
    }
    case ModelKind::bounded_distinct: {
        const double w = *sol.w;
        const double s = w - v;
        const double rad = -std::expm1(-w) - 0.5 * u * u;
        if (!(rad >= kRadicandMargin))
            throw validity_error("bounded prefactor radicand below margin");
        // g = 2v/u - u ln(e^w-1) + (u/p)(w-v); ln(e^w-1) = -alpha*.
        g = 2.0 * v / u + u * sol.alpha_star + (u / *sol.p) * s;
        ln_f = ln_pref_base - 0.5 * (w + std::log(rad));
        break;
    }
    }

    AsymptoticEstimate est;
    est.model = model;
    est.E = E;
    est.N = N;
    est.B = B;
    est.g_term = sqrt_e * g;
    est.f_term = ln_f - std::log(double(E));
    est.ln_value = est.g_term + est.f_term;
    return est;
}

} // namespace partasym
