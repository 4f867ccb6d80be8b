#include "malcev/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "malcev/io.hpp"
#include "malcev/rng.hpp"

namespace malcev {

namespace {

void check_dim(const AlgebraSpec& alg, const Vector& v, const char* where) {
    if (v.size() != alg.dim())
        throw DimensionMismatch(std::string(where) + ": vector of size " +
                                std::to_string(v.size()) + " against algebra of dimension " +
                                std::to_string(alg.dim()));
}

// Half-commutator structure constants of a composition-algebra basis, read
// off the octonion multiplication table: [e_i, e_j] = (e_i e_j - e_j e_i)/2,
// which for distinct imaginary units is just e_i e_j.
void fill_half_commutator(AlgebraSpec& alg, int dim) {
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            const BasisProduct p = oct_basis_mul(i + 1, j + 1);
            if (p.index >= 1) alg.set_c(i, j, p.index - 1, p.sign);
        }
    }
}

AlgebraSpec make_sl2(const std::string& name, double scale) {
    AlgebraSpec alg(name, 3);
    // Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    alg.set_c(0, 1, 1, 2.0 * scale);
    alg.set_c(1, 0, 1, -2.0 * scale);
    alg.set_c(0, 2, 2, -2.0 * scale);
    alg.set_c(2, 0, 2, 2.0 * scale);
    alg.set_c(1, 2, 0, 1.0 * scale);
    alg.set_c(2, 1, 0, -1.0 * scale);
    return alg;
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::string name, int dim)
    : name_(std::move(name)), dim_(dim) {
    if (dim < 1 || dim > 64)
        throw ParseError("AlgebraSpec: dimension must be in [1, 64], got " +
                         std::to_string(dim));
    c_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
    metric_ = Matrix::Identity(dim, dim);
}

std::size_t AlgebraSpec::index(int i, int j, int k) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
        throw DimensionMismatch("AlgebraSpec: structure-constant index out of range");
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
}

void AlgebraSpec::set_metric(const Matrix& m) {
    if (m.rows() != dim_ || m.cols() != dim_)
        throw DimensionMismatch("AlgebraSpec: metric shape mismatch");
    metric_ = m;
}

void AlgebraSpec::validate_antisymmetry() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < dim_; ++k) {
                const double cij = c_[index(i, j, k)];
                const double cji = c_[index(j, i, k)];
                if (cij != -cji)
                    throw AntisymmetryViolation(
                        i, j, k,
                        "structure constants violate anti-symmetry at (" + std::to_string(i) +
                            "," + std::to_string(j) + "," + std::to_string(k) + "): c[i][j][k]=" +
                            iofmt::fmt_double(cij) + " but c[j][i][k]=" + iofmt::fmt_double(cji));
            }
}

Vector basis_vector(int dim, int i) {
    if (i < 0 || i >= dim) throw DimensionMismatch("basis_vector: index out of range");
    Vector v = Vector::Zero(dim);
    v[i] = 1.0;
    return v;
}

double operator_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()[0];
}

Vector bracket(const AlgebraSpec& alg, const Vector& x, const Vector& y) {
    check_dim(alg, x, "bracket");
    check_dim(alg, y, "bracket");
    const int n = alg.dim();
    Vector r = Vector::Zero(n);
    for (int i = 0; i < n; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (int j = 0; j < n; ++j) {
            const double yj = y[j];
            if (yj == 0.0) continue;
            for (int k = 0; k < n; ++k) {
                const double cijk = alg.c(i, j, k);
                if (cijk != 0.0) r[k] += cijk * xi * yj;
            }
        }
    }
    return r;
}

Vector jacobian(const AlgebraSpec& alg, const Vector& x, const Vector& y, const Vector& z) {
    return bracket(alg, bracket(alg, x, y), z) + bracket(alg, bracket(alg, y, z), x) +
           bracket(alg, bracket(alg, z, x), y);
}

double malcev_residual(const AlgebraSpec& alg, const Vector& x, const Vector& y,
                       const Vector& z) {
    const Vector lhs = jacobian(alg, x, y, bracket(alg, x, z));
    const Vector rhs = bracket(alg, jacobian(alg, x, y, z), x);
    return (lhs - rhs).norm();
}

Matrix ad_matrix(const AlgebraSpec& alg, const Vector& x) {
    check_dim(alg, x, "ad_matrix");
    const int n = alg.dim();
    Matrix a(n, n);
    for (int j = 0; j < n; ++j) a.col(j) = bracket(alg, x, basis_vector(n, j));
    return a;
}

Matrix defect_S(const AlgebraSpec& alg, const Vector& x, const Vector& y) {
    check_dim(alg, x, "defect_S");
    check_dim(alg, y, "defect_S");
    const int n = alg.dim();
    Matrix s(n, n);
    for (int k = 0; k < n; ++k) s.col(k) = -jacobian(alg, x, y, basis_vector(n, k));
    return s;
}

DefectNorm defect_norm(const AlgebraSpec& alg, int sample_count, std::uint64_t seed) {
    if (sample_count < 1)
        throw DimensionMismatch("defect_norm: sample_count must be >= 1");
    const int n = alg.dim();
    double basis_sup = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            basis_sup = std::max(
                basis_sup, operator_norm(defect_S(alg, basis_vector(n, i), basis_vector(n, j))));
    Rng rng(seed);
    double sampled_sup = 0.0;
    for (int s = 0; s < sample_count; ++s) {
        const Vector x = rng.unit(n);
        const Vector y = rng.unit(n);
        sampled_sup = std::max(sampled_sup, operator_norm(defect_S(alg, x, y)));
    }
    return {basis_sup, sampled_sup};
}

AlgebraSpec builtin(const std::string& name) {
    if (name == "octonion") {
        AlgebraSpec alg("octonion", 7);
        fill_half_commutator(alg, 7);
        return alg;
    }
    if (name == "su2" || name == "im_quaternion") {
        // Both carry [e1,e2] = e3 cyclically: the Levi-Civita constants equal
        // the half-commutator of the imaginary quaternions.  (The quaternion
        // units sit at octonion indices {1,2,4}, so this table cannot be read
        // off a contiguous slice of the octonion product.)
        AlgebraSpec alg(name, 3);
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const int k = (i + 2) % 3;
            alg.set_c(i, j, k, 1.0);
            alg.set_c(j, i, k, -1.0);
        }
        return alg;
    }
    if (name == "m3") return make_sl2("m3", 1.5);
    if (name == "sl2") return make_sl2("sl2", 1.0);
    throw UnsupportedAlgebra("unknown builtin algebra \"" + name + "\"");
}

AlgebraSpec load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("dim") || !j.contains("bracket"))
        throw ParseError(path + ": expected object with \"name\", \"dim\", \"bracket\"");
    if (!j["name"].is_string()) throw ParseError(path + ": \"name\" must be a string");
    if (!j["dim"].is_number_integer()) throw ParseError(path + ": \"dim\" must be an integer");
    const int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 64) throw ParseError(path + ": \"dim\" must be in [1, 64]");
    if (!j["bracket"].is_array()) throw ParseError(path + ": \"bracket\" must be an array");

    AlgebraSpec alg(j["name"].get<std::string>(), dim);
    std::map<std::tuple<int, int, int>, double> entries;
    for (const auto& e : j["bracket"]) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer() || !e[3].is_number())
            throw ParseError(path + ": bracket entries must be [i, j, k, coeff]");
        const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw ParseError(path + ": bracket index out of range in entry [" +
                             std::to_string(i) + "," + std::to_string(jj) + "," +
                             std::to_string(k) + "]");
        const auto key = std::make_tuple(i, jj, k);
        if (entries.count(key))
            throw ParseError(path + ": duplicate bracket entry for (" + std::to_string(i) + "," +
                             std::to_string(jj) + "," + std::to_string(k) + ")");
        entries[key] = e[3].get<double>();
    }
    // Nothing is symmetrized: each (i,j,k) entry must come with its (j,i,k)
    // mirror carrying the negated coefficient (a diagonal entry is its own
    // mirror and must be zero).
    for (const auto& [key, coeff] : entries) {
        const auto [i, jj, k] = key;
        const auto mirror = entries.find(std::make_tuple(jj, i, k));
        if (mirror == entries.end())
            throw AntisymmetryViolation(
                i, jj, k,
                path + ": entry (" + std::to_string(i) + "," + std::to_string(jj) + "," +
                    std::to_string(k) + ") has no matching (" + std::to_string(jj) + "," +
                    std::to_string(i) + "," + std::to_string(k) + ") entry");
        if (mirror->second != -coeff)
            throw AntisymmetryViolation(
                i, jj, k,
                path + ": entries (" + std::to_string(i) + "," + std::to_string(jj) + "," +
                    std::to_string(k) + ") and mirror are not negatives: " +
                    iofmt::fmt_double(coeff) + " vs " + iofmt::fmt_double(mirror->second));
        alg.set_c(i, jj, k, coeff);
    }
    alg.validate_antisymmetry();
    return alg;
}

void save_algebra(const AlgebraSpec& alg, const std::string& path) {
    std::ostringstream out;
    out << "{\"name\":\"" << iofmt::json_escape(alg.name()) << "\",\"dim\":" << alg.dim()
        << ",\"bracket\":[";
    bool first = true;
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            for (int k = 0; k < alg.dim(); ++k) {
                const double v = alg.c(i, j, k);
                if (v == 0.0) continue;
                if (!first) out << ",";
                first = false;
                out << "[" << i << "," << j << "," << k << "," << iofmt::fmt_double(v) << "]";
            }
    out << "]}\n";
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write algebra file " + path);
    f << out.str();
}

}  // namespace malcev
