#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

struct EigenvalueGroup {
    std::complex<double> value;
    int multiplicity;
};

struct SpectrumReport {
    std::vector<EigenvalueGroup> eigenvalues;  // sorted by (re, im); closed under conjugation
    bool purely_imaginary;                     // all |Re| <= tol_used
    double generator_norm;                     // ||x||
    double tol_used;                           // grouping / classification tolerance
};

// Default grouping tolerance: 1e-9 * (1 + ||x||). Pass tol <= 0 to use it.
double default_spectral_tol(const Vector& x);

// Eigenvalues of ad(x), grouped within tol.
SpectrumReport spectrum_ad(const AlgebraSpec& alg, const Vector& x, double tol = 0.0);

// ||ad(x)^3 + ||x||^2 ad(x)||_F; the cubic minimal-polynomial identity is
// specific to the octonion builtin, other algebras get UnsupportedAlgebra.
double minpoly_residual(const AlgebraSpec& alg, const Vector& x);

// e^{t ad(x)}. Metric-skew generators take the Hermitian eigendecomposition
// route (exactly orthogonal reconstruction); everything else goes through
// Pade scaling-and-squaring. The two routes agree to 1e-10 on skew inputs.
Matrix exp_ad(const AlgebraSpec& alg, const Vector& x, double t);

namespace detail {
// Exponential of a real skew-symmetric matrix via the Hermitian
// eigendecomposition of i*A.
Matrix exp_skew(const Matrix& a);
// Generic dense matrix exponential (Pade scaling-and-squaring).
Matrix exp_pade(const Matrix& a);
}  // namespace detail

struct OrbitStats {
    double sup_norm;
    double recurrence_epsilon;
    std::optional<double> recurrence_time;  // first sampled t > 0 with ||orbit(t) - y|| < eps
    std::string grid;                       // human-readable sampling description
};

// Samples e^{t ad(x)} y on the uniform grid t_k = t_max * k / steps,
// k = 0..steps (steps >= 2 intervals, steps+1 samples).
OrbitStats orbit_stats(const AlgebraSpec& alg, const Vector& x, const Vector& y, double t_max,
                       int steps, double epsilon);

// Frequency analysis of a dense matrix: if every nonzero |Im(eigenvalue)| is
// an integer multiple of the smallest (within ratio_tol), the flow e^{tA} is
// periodic and the minimal period 2*pi / (omega_min * gcd(ratios)) is
// returned; otherwise nullopt (quasi-periodic). Matrices with no nonzero
// frequencies also return nullopt.
std::optional<double> minimal_period_from_matrix(const Matrix& a, double ratio_tol = 1e-8);

// Minimal period of t -> e^{t ad(x)}; throws ZeroElement when x == 0.
std::optional<double> minimal_period(const AlgebraSpec& alg, const Vector& x,
                                     double ratio_tol = 1e-8);

// f(ad(x)) = sum_i f(lambda_i) P_i over the spectral projectors of ad(x).
// Requires the spectrum purely imaginary within tol (NonImaginarySpectrum)
// and f conjugate-symmetric on it (NonConjugateSymmetricF), which makes the
// result real.
Matrix functional_calculus(const AlgebraSpec& alg, const Vector& x,
                           const std::function<std::complex<double>(std::complex<double>)>& f,
                           double tol = 0.0);

// (lambda I - ad(x))^{-1}. Complex in general; real lambda on a real matrix
// gives a real result (imaginary part below rounding). Throws SpectrumHit
// when dist(lambda, spectrum) <= tol.
Eigen::MatrixXcd resolvent(const AlgebraSpec& alg, const Vector& x, std::complex<double> lambda,
                           double tol = 0.0);

// Composite-Simpson quadrature of int_0^{t_max} e^{-lambda t} e^{t ad(x)} dt
// (intervals must be even and >= 2). For Re(lambda) > 0 and t_max large this
// approximates the resolvent at lambda.
Matrix laplace_resolvent_quadrature(const AlgebraSpec& alg, const Vector& x, double lambda,
                                    double t_max, int intervals);

}  // namespace malcev
