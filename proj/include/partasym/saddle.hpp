#ifndef PARTASYM_SADDLE_HPP
#define PARTASYM_SADDLE_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace partasym {

enum class ModelKind {
    unrestricted,     // P(E,N): at most N parts
    distinct,         // q(E,N): exactly N distinct parts
    bounded_distinct, // q(E,N,B): exactly N distinct parts, each <= B
};

std::string to_string(ModelKind model);

// Solved saddle coordinates for one (E, N[, B]) query, in the scaled
// variables u = N/sqrt(E), v = beta* N, p = N/B, w = v(p).
struct SaddleSolution {
    double u = 0.0;
    std::optional<double> p; // bounded model only
    double v = 0.0;
    std::optional<double> w; // bounded model only
    double alpha_star = 0.0;
    double beta_star = 0.0;
    double entropy = 0.0;     // S(alpha*, beta*)
    double hessian_det = 0.0; // D at the saddle
    double residual = 0.0;    // |v^2/u^2 - rhs(v)| of the scalar saddle equation
};

// Log-domain asymptotic estimate ln q^ = g_term + f_term, with
// g_term = sqrt(E) g(u) and f_term = ln f(u) - ln E.
struct AsymptoticEstimate {
    double ln_value = 0.0;
    double g_term = 0.0;
    double f_term = 0.0;
    ModelKind model = ModelKind::distinct;
    std::int64_t E = 0;
    std::int64_t N = 0;
    std::optional<std::int64_t> B;

    double decimal_digits() const; // ln_value / ln 10
};

// Solves the model's scalar saddle equation for v and fills in all derived
// quantities.  Feasibility violations raise feasibility_error naming the
// bound; a lost root bracket raises numerical_error with diagnostics.
//
// Saddle equations (v^2/u^2 = rhs):
//   unrestricted:  rhs = g_minus(v)
//   distinct:      rhs = g_plus(v)
//   bounded:       rhs = g_plus(w) - g_plus(w - v) - (v/p)(w - v),
//                  with w eliminated through e^w - 1 = (e^v-1)/(1 - e^{v(1-1/p)}).
// The bounded rhs is the exact beta-stationarity of the truncated-integral
// entropy; both correction terms carry a minus sign.
SaddleSolution solve_saddle(ModelKind model, std::int64_t E, std::int64_t N,
                            std::optional<std::int64_t> B = std::nullopt);

// Euler-Maclaurin entropy S(alpha, beta) = alpha N + beta E + ln Z approx:
//   unrestricted: + (1/beta) Li2(e^-a)                 - (1/2) ln(1 - e^-a)
//   distinct:     + (1/beta) (-Li2(-e^-a))             - (1/2) ln(1 + e^-a)
//   bounded:      integral truncated at beta B,
//                 - (1/2) ln(1 + e^-a) + (1/2) ln(1 + e^{-a - beta B})
// Requires beta > 0; the unrestricted model additionally needs e^-alpha < 1.
// The unrestricted sign differs from the naive boundary term: the k = 0
// factor of the generating product (worth -ln(1 - e^-a)) turns exactly-N
// into at-most-N counts and flips it.
double entropy_at(ModelKind model, double alpha, double beta, std::int64_t E,
                  std::int64_t N, std::optional<std::int64_t> B = std::nullopt);

// The +-(1/2) log boundary corrections included in entropy_at.  The
// closed-form second derivatives differentiate only the integral part, so
// finite-difference cross-checks subtract this term first.
double entropy_boundary_term(ModelKind model, double alpha, double beta,
                             std::optional<std::int64_t> B = std::nullopt);

// Closed-form Hessian determinant of the entropy at the saddle:
//   D = (2 v^2 / (u^2 b^3)) * (X / b) - v^2 / b^4,   b = beta*,
// with X = e^v - 1 (unrestricted), 1 - e^-v (distinct), 1 - e^-w (bounded).
// Throws numerical_error when D <= 0 (saddle outside the validity region).
double hessian_det(const SaddleSolution& solution, ModelKind model,
                   std::int64_t E, std::int64_t N);

// Evaluates the asymptotic count entirely in log domain:
//   ln q^ = sqrt(E) g(u) + ln f(u) - ln E.
// Throws validity_error when the prefactor radicand is not safely positive.
AsymptoticEstimate estimate(ModelKind model, std::int64_t E, std::int64_t N,
                            std::optional<std::int64_t> B = std::nullopt);

namespace detail {
// w(v) from the closed form; requires v > 0, 0 < p < 1.
double bounded_w(double v, double p);
// rhs of the scalar saddle equation (see solve_saddle); p ignored unless bounded.
double saddle_rhs(ModelKind model, double v, double p);
} // namespace detail

} // namespace partasym

#endif
