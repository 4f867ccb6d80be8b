#include "malcev/spectral.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

bool metric_skew(const AlgebraSpec& alg, const Matrix& a, double tol) {
    const Matrix g = alg.metric();
    return ((g * a) + (a.transpose() * g)).cwiseAbs().maxCoeff() <= tol;
}

std::vector<std::complex<double>> raw_eigenvalues(const Matrix& a) {
    Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(es.eigenvalues().data(),
                                          es.eigenvalues().data() + es.eigenvalues().size());
    return out;
}

}  // namespace

double default_spectral_tol(const Vector& x) { return 1e-9 * (1.0 + x.norm()); }

SpectrumReport spectrum_ad(const AlgebraSpec& alg, const Vector& x, double tol) {
    if (x.size() != alg.dim()) throw DimensionMismatch("spectrum_ad: x has wrong dimension");
    if (tol <= 0.0) tol = default_spectral_tol(x);

    auto vals = raw_eigenvalues(ad_matrix(alg, x));
    // Cluster along the imaginary axis first (the axis that separates groups
    // for skew generators); rounding noise on the other axis must not drive
    // the ordering, so a second sort + merge pass below canonicalizes.
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });

    SpectrumReport rep;
    rep.generator_norm = x.norm();
    rep.tol_used = tol;
    std::vector<std::complex<double>> sums;
    for (const auto& v : vals) {
        if (!rep.eigenvalues.empty() &&
            std::abs(v - sums.back() / static_cast<double>(rep.eigenvalues.back().multiplicity)) <=
                tol) {
            ++rep.eigenvalues.back().multiplicity;
            sums.back() += v;
        } else {
            rep.eigenvalues.push_back({v, 1});
            sums.push_back(v);
        }
    }
    for (std::size_t k = 0; k < rep.eigenvalues.size(); ++k) {
        auto mean = sums[k] / static_cast<double>(rep.eigenvalues[k].multiplicity);
        if (std::abs(mean.real()) <= tol) mean.real(0.0);
        if (std::abs(mean.imag()) <= tol) mean.imag(0.0);
        rep.eigenvalues[k].value = mean;
    }
    std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), [](const auto& a, const auto& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    // Groups that the noise-order split apart collapse to one entry here.
    std::vector<EigenvalueGroup> merged;
    for (const auto& g : rep.eigenvalues) {
        if (!merged.empty() && std::abs(g.value - merged.back().value) <= tol)
            merged.back().multiplicity += g.multiplicity;
        else
            merged.push_back(g);
    }
    rep.eigenvalues = std::move(merged);
    rep.purely_imaginary = std::all_of(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                                       [&](const auto& g) { return g.value.real() == 0.0; });
    return rep;
}

double minpoly_residual(const AlgebraSpec& alg, const Vector& x) {
    if (alg.name() != "octonion")
        throw UnsupportedAlgebra("minpoly_residual: cubic identity holds for octonion only");
    const Matrix a = ad_matrix(alg, x);
    const double n2 = x.squaredNorm();
    return (a * a * a + n2 * a).norm();
}

namespace detail {

Matrix exp_skew(const Matrix& a) {
    // i*A is Hermitian when A is real skew; exp(A) = V e^{-i diag} V^*.
    const std::complex<double> i(0.0, 1.0);
    Eigen::MatrixXcd h = i * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        phases[k] = std::exp(-i * es.eigenvalues()[k]);
    Eigen::MatrixXcd e =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return e.real();
}

Matrix exp_pade(const Matrix& a) { return a.exp(); }

}  // namespace detail

Matrix exp_ad(const AlgebraSpec& alg, const Vector& x, double t) {
    if (x.size() != alg.dim()) throw DimensionMismatch("exp_ad: x has wrong dimension");
    const Matrix a = t * ad_matrix(alg, x);
    if (metric_skew(alg, ad_matrix(alg, x), 1e-12)) return detail::exp_skew(a);
    return detail::exp_pade(a);
}

OrbitStats orbit_stats(const AlgebraSpec& alg, const Vector& x, const Vector& y, double t_max,
                       int steps, double epsilon) {
    if (steps < 2) throw ParseError("orbit_stats: need at least 2 intervals");
    if (!(t_max > 0.0)) throw ParseError("orbit_stats: t_max must be positive");
    if (y.size() != alg.dim()) throw DimensionMismatch("orbit_stats: y has wrong dimension");

    const double h = t_max / steps;
    const Matrix step = exp_ad(alg, x, h);

    OrbitStats st;
    st.sup_norm = y.norm();
    st.recurrence_epsilon = epsilon;
    std::ostringstream grid;
    grid << "uniform[0," << t_max << "] steps=" << steps;
    st.grid = grid.str();

    Vector cur = y;
    for (int k = 1; k <= steps; ++k) {
        cur = step * cur;
        st.sup_norm = std::max(st.sup_norm, cur.norm());
        if (!st.recurrence_time && (cur - y).norm() < epsilon) st.recurrence_time = k * h;
    }
    return st;
}

std::optional<double> minimal_period_from_matrix(const Matrix& a, double ratio_tol) {
    auto vals = raw_eigenvalues(a);
    std::vector<double> freqs;
    double scale = 0.0;
    for (const auto& v : vals) scale = std::max(scale, std::abs(v));
    const double zero_tol = 1e-12 * (1.0 + scale);
    for (const auto& v : vals) {
        if (std::abs(v.real()) > zero_tol) return std::nullopt;  // not a rotation: no period
        const double w = std::abs(v.imag());
        if (w > zero_tol) freqs.push_back(w);
    }
    if (freqs.empty()) return std::nullopt;  // constant flow

    // Every frequency must be an integer multiple of the smallest; then the
    // flow closes exactly at 2*pi over that base frequency (which is itself
    // in the list, so no shorter period exists).
    const double omega = *std::min_element(freqs.begin(), freqs.end());
    for (double w : freqs) {
        const double r = w / omega;
        if (std::abs(r - std::round(r)) > ratio_tol * r) return std::nullopt;  // incommensurate
    }
    return 2.0 * std::numbers::pi / omega;
}

std::optional<double> minimal_period(const AlgebraSpec& alg, const Vector& x, double ratio_tol) {
    if (x.size() != alg.dim()) throw DimensionMismatch("minimal_period: x has wrong dimension");
    if (x.norm() == 0.0) throw ZeroElement("minimal_period: zero generator has no period");
    return minimal_period_from_matrix(ad_matrix(alg, x), ratio_tol);
}

Matrix functional_calculus(const AlgebraSpec& alg, const Vector& x,
                           const std::function<std::complex<double>(std::complex<double>)>& f,
                           double tol) {
    if (tol <= 0.0) tol = default_spectral_tol(x);
    const Matrix a = ad_matrix(alg, x);
    Eigen::ComplexEigenSolver<Matrix> es(a);
    if (es.info() != Eigen::Success)
        throw Error("functional_calculus: eigendecomposition failed");

    const auto& lam = es.eigenvalues();
    for (Eigen::Index k = 0; k < lam.size(); ++k)
        if (std::abs(lam[k].real()) > tol)
            throw NonImaginarySpectrum("functional_calculus: spectrum not purely imaginary");

    // Conjugate symmetry f(conj(z)) == conj(f(z)) on the spectrum is what
    // makes f(ad x) real; check it on every eigenvalue.
    for (Eigen::Index k = 0; k < lam.size(); ++k) {
        const auto z = lam[k];
        const auto d = f(std::conj(z)) - std::conj(f(z));
        if (std::abs(d) > 1e-10 * (1.0 + std::abs(f(z))))
            throw NonConjugateSymmetricF("functional_calculus: f breaks conjugate symmetry");
    }

    Eigen::VectorXcd fe(lam.size());
    for (Eigen::Index k = 0; k < lam.size(); ++k) fe[k] = f(lam[k]);
    Eigen::MatrixXcd m = es.eigenvectors() * fe.asDiagonal() *
                         es.eigenvectors().fullPivLu().inverse();
    const double imag_residue = m.imag().cwiseAbs().maxCoeff();
    if (imag_residue > 1e-8 * (1.0 + m.real().cwiseAbs().maxCoeff()))
        throw Error("functional_calculus: result failed to be real");
    return m.real();
}

Eigen::MatrixXcd resolvent(const AlgebraSpec& alg, const Vector& x, std::complex<double> lambda,
                           double tol) {
    if (tol <= 0.0) tol = default_spectral_tol(x);
    const Matrix a = ad_matrix(alg, x);
    for (const auto& v : raw_eigenvalues(a))
        if (std::abs(lambda - v) <= tol)
            throw SpectrumHit("resolvent: lambda within tol of the spectrum");
    const auto n = a.rows();
    Eigen::MatrixXcd m = lambda * Eigen::MatrixXcd::Identity(n, n) -
                         a.cast<std::complex<double>>();
    return m.fullPivLu().inverse();
}

Matrix laplace_resolvent_quadrature(const AlgebraSpec& alg, const Vector& x, double lambda,
                                    double t_max, int intervals) {
    if (intervals < 2 || intervals % 2 != 0)
        throw ParseError("laplace_resolvent_quadrature: intervals must be even and >= 2");
    if (!(t_max > 0.0)) throw ParseError("laplace_resolvent_quadrature: t_max must be positive");

    const double h = t_max / intervals;
    const Matrix step = exp_ad(alg, x, h);
    const auto n = step.rows();

    Matrix cur = Matrix::Identity(n, n);  // e^{0 ad x}
    Matrix acc = std::exp(-lambda * 0.0) * cur;
    for (int k = 1; k < intervals; ++k) {
        cur = step * cur;
        acc += ((k % 2 == 1) ? 4.0 : 2.0) * std::exp(-lambda * (k * h)) * cur;
    }
    cur = step * cur;
    acc += std::exp(-lambda * t_max) * cur;
    return (h / 3.0) * acc;
}

}  // namespace malcev
