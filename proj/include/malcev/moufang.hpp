#pragma once

#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/octonion.hpp"

namespace malcev {

enum class Convention { Left, Right };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& s);  // throws ParseError

// Exponential of an imaginary octonion: cos||x|| + sin||x|| * x/||x||.
// Throws NotImaginary when the real part exceeds 1e-12.
Octonion oct_exp(const Octonion& x);

// Inverse of oct_exp on its injectivity domain {||x|| < pi}. Throws NotUnit
// when | ||q|| - 1 | > tol and BranchPoint when q is within tol of -1 (the
// antipode has a 6-sphere of logarithms).
Octonion oct_log(const Octonion& q, double tol = 1e-9);

// Same maps on 7-vectors of imaginary coordinates.
Octonion oct_exp_imag(const Vector& x);
Vector oct_log_imag(const Octonion& q, double tol = 1e-9);

struct Trajectory {
    std::vector<double> times;    // strictly increasing
    std::vector<Octonion> points; // unit norm within 1e-12
    Vector generator;             // 7 imaginary coordinates (zero for synthetic data)
    Convention convention = Convention::Left;
};

// Uniform grid 0 = t_0 < ... < t_steps = t_max with the last point exactly
// t_max (no accumulated rounding).
std::vector<double> make_time_grid(double t_max, int steps);

// Flow of the translation field: left convention p(t) = exp(t x) * p0,
// right convention p(t) = p0 * exp(t x). Exact per sample; no integrator.
Trajectory flow_trajectory(const Vector& x, const Octonion& p0, const std::vector<double>& t_grid,
                           Convention conv = Convention::Left);

// e^{t ad(x)} y realized by conjugation: q y q^{-1} with q = exp(t x / 2).
// The half-angle matches the half-commutator bracket of the octonion algebra.
Vector conj_orbit(const Vector& x, const Vector& y, double t);

// || Phi_t(exp y) - exp(e^{t ad x} y) || for the left-translation flow.
// Diagnostic only: the two sides agree for the conjugation flow but not for
// translation, and this function reports the gap without judging it.
// Throws BranchPoint when e^{t ad x} y leaves the injectivity ball.
double flow_conjugacy_residual(const Vector& x, const Vector& y, double t);

// Dimension of the orbit closure from the sampled point cloud: PCA rank of
// the centered points (singular values above epsilon * largest), mapped to
// the torus dimension rank/2 rounded up. A constant trajectory gives 0, a
// circle 1, a two-frequency torus 2. Throws InsufficientSamples when fewer
// than 8 points are given or (for a nonzero generator) the time span does
// not cover one nominal period 2*pi/||generator||.
int orbit_closure_dim(const Trajectory& traj, double epsilon = 1e-6);

// CSV round-trip; header "t,c0,c1,c2,c3,c4,c5,c6,c7", 17-significant-digit
// doubles. Reading restores times/points only (generator is not stored).
std::string trajectory_to_csv(const Trajectory& traj);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory_csv(const std::string& path);

}  // namespace malcev
