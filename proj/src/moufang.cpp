#include "malcev/moufang.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "malcev/errors.hpp"
#include "malcev/io.hpp"
#include "malcev/spectral.hpp"

namespace malcev {

namespace {

const AlgebraSpec& octonion_algebra() {
    static const AlgebraSpec alg = builtin("octonion");
    return alg;
}

double imag_norm(const Octonion& q) {
    double s = 0.0;
    for (int i = 1; i < 8; ++i) s += q.c[i] * q.c[i];
    return std::sqrt(s);
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::Left ? "left" : "right"; }

Convention convention_from_string(const std::string& s) {
    if (s == "left") return Convention::Left;
    if (s == "right") return Convention::Right;
    throw ParseError("unknown flow convention: " + s);
}

Octonion oct_exp(const Octonion& x) {
    if (std::abs(x.c[0]) > 1e-12)
        throw NotImaginary("oct_exp: argument must be an imaginary octonion");
    const double n = imag_norm(x);
    Octonion out = Octonion::real(std::cos(n));
    if (n > 0.0) {
        const double s = std::sin(n) / n;
        for (int i = 1; i < 8; ++i) out.c[i] = s * x.c[i];
    }
    return out;
}

Octonion oct_log(const Octonion& q, double tol) {
    if (std::abs(oct_norm(q) - 1.0) > tol)
        throw NotUnit("oct_log: argument must be a unit octonion");
    const double v = imag_norm(q);
    if (q.c[0] < 0.0 && v <= tol)
        throw BranchPoint("oct_log: antipode -1 has no preferred logarithm");
    // atan2 keeps the angle in (0, pi) for v > 0, so the result stays inside
    // the injectivity ball.
    Octonion out{};
    if (v > 0.0) {
        const double theta = std::atan2(v, q.c[0]);
        const double s = theta / v;
        for (int i = 1; i < 8; ++i) out.c[i] = s * q.c[i];
    }
    return out;
}

Octonion oct_exp_imag(const Vector& x) { return oct_exp(oct_from_imag(x)); }

Vector oct_log_imag(const Octonion& q, double tol) { return oct_imag(oct_log(q, tol)); }

std::vector<double> make_time_grid(double t_max, int steps) {
    if (steps < 1) throw ParseError("make_time_grid: need at least 1 step");
    if (!(t_max > 0.0)) throw ParseError("make_time_grid: t_max must be positive");
    std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) grid[static_cast<std::size_t>(k)] = t_max * k / steps;
    grid.back() = t_max;
    return grid;
}

Trajectory flow_trajectory(const Vector& x, const Octonion& p0, const std::vector<double>& t_grid,
                           Convention conv) {
    if (x.size() != 7) throw DimensionMismatch("flow_trajectory: generator must have 7 coordinates");
    if (std::abs(oct_norm(p0) - 1.0) > 1e-9)
        throw NotUnit("flow_trajectory: base point must be a unit octonion");
    if (t_grid.empty()) throw ParseError("flow_trajectory: empty time grid");
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1]))
            throw ParseError("flow_trajectory: time grid must be strictly increasing");

    const Octonion gen = oct_from_imag(x);
    Trajectory traj;
    traj.times = t_grid;
    traj.generator = x;
    traj.convention = conv;
    traj.points.reserve(t_grid.size());
    for (double t : t_grid) {
        Octonion scaled{};
        for (int i = 1; i < 8; ++i) scaled.c[i] = t * gen.c[i];
        const Octonion e = oct_exp(scaled);
        traj.points.push_back(conv == Convention::Left ? e * p0 : p0 * e);
    }
    return traj;
}

Vector conj_orbit(const Vector& x, const Vector& y, double t) {
    if (x.size() != 7 || y.size() != 7)
        throw DimensionMismatch("conj_orbit: arguments must have 7 coordinates");
    const Octonion q = oct_exp_imag((t / 2.0) * x);
    const Octonion r = (q * oct_from_imag(y)) * oct_conj(q);
    return oct_imag(r);
}

double flow_conjugacy_residual(const Vector& x, const Vector& y, double t) {
    if (x.size() != 7 || y.size() != 7)
        throw DimensionMismatch("flow_conjugacy_residual: arguments must have 7 coordinates");
    if (y.norm() >= std::numbers::pi)
        throw BranchPoint("flow_conjugacy_residual: ||y|| must stay below pi");
    const Vector w = exp_ad(octonion_algebra(), x, t) * y;
    if (w.norm() >= std::numbers::pi)
        throw BranchPoint("flow_conjugacy_residual: advected vector reached the antipode");
    const Octonion lhs = oct_exp_imag(t * x) * oct_exp_imag(y);
    const Octonion rhs = oct_exp_imag(w);
    return oct_dist(lhs, rhs);
}

int orbit_closure_dim(const Trajectory& traj, double epsilon) {
    const std::size_t n = traj.points.size();
    if (n < 8) throw InsufficientSamples("orbit_closure_dim: need at least 8 samples");
    if (traj.generator.size() > 0 && traj.generator.norm() > 0.0) {
        const double nominal = 2.0 * std::numbers::pi / traj.generator.norm();
        const double span = traj.times.back() - traj.times.front();
        if (span < nominal * (1.0 - 1e-9))
            throw InsufficientSamples("orbit_closure_dim: trajectory shorter than one period");
    }

    Matrix cloud(static_cast<Eigen::Index>(n), 8);
    for (std::size_t k = 0; k < n; ++k)
        for (int i = 0; i < 8; ++i) cloud(static_cast<Eigen::Index>(k), i) = traj.points[k].c[i];
    const Eigen::RowVectorXd mean = cloud.colwise().mean();
    cloud.rowwise() -= mean;

    Eigen::JacobiSVD<Matrix> svd(cloud);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] <= 1e-12) return 0;  // constant trajectory
    int rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > epsilon * sv[0]) ++rank;
    // A d-torus embeds with PCA rank 2d (cos/sin pair per frequency).
    return (rank + 1) / 2;
}

std::string trajectory_to_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "t,c0,c1,c2,c3,c4,c5,c6,c7\n";
    for (std::size_t k = 0; k < traj.points.size(); ++k) {
        out << iofmt::fmt_double(traj.times[k]);
        for (int i = 0; i < 8; ++i)
            out << ',' << iofmt::fmt_double(traj.points[k].c[static_cast<std::size_t>(i)]);
        out << '\n';
    }
    return out.str();
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("write_trajectory_csv: cannot open " + path);
    out << trajectory_to_csv(traj);
    if (!out) throw ParseError("write_trajectory_csv: write failed for " + path);
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("read_trajectory_csv: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("read_trajectory_csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,c0,c1,c2,c3,c4,c5,c6,c7")
        throw ParseError("read_trajectory_csv: bad header: " + line);

    Trajectory traj;
    traj.generator = Vector::Zero(7);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double vals[9];
        for (int i = 0; i < 9; ++i) {
            if (!std::getline(row, cell, ','))
                throw ParseError("read_trajectory_csv: short row at line " +
                                 std::to_string(lineno));
            std::size_t used = 0;
            try {
                vals[i] = std::stod(cell, &used);
            } catch (const std::exception&) {
                throw ParseError("read_trajectory_csv: bad number at line " +
                                 std::to_string(lineno));
            }
            if (used != cell.size())
                throw ParseError("read_trajectory_csv: bad number at line " +
                                 std::to_string(lineno));
        }
        if (std::getline(row, cell, ','))
            throw ParseError("read_trajectory_csv: extra column at line " + std::to_string(lineno));
        traj.times.push_back(vals[0]);
        Octonion p{};
        for (int i = 0; i < 8; ++i) p.c[i] = vals[i + 1];
        traj.points.push_back(p);
    }
    return traj;
}

}  // namespace malcev
