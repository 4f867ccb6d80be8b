#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "malcev/errors.hpp"
#include "malcev/octonion.hpp"

namespace malcev {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Finite-dimensional anti-commutative algebra given by structure constants
//
//   bracket(e_i, e_j) = sum_k c[i][j][k] e_k,
//
// together with a symmetric positive-definite metric (identity by default).
// Instances are value objects; all operations on them are free functions and
// pure, so concurrent use needs no synchronization.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, int dim);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    double c(int i, int j, int k) const { return c_[index(i, j, k)]; }
    void set_c(int i, int j, int k, double value) { c_[index(i, j, k)] = value; }

    const Matrix& metric() const { return metric_; }
    void set_metric(const Matrix& m);

    // Throws AntisymmetryViolation with the offending indices if any
    // c[i][j][k] != -c[j][i][k].
    void validate_antisymmetry() const;

private:
    std::size_t index(int i, int j, int k) const;

    std::string name_;
    int dim_;
    std::vector<double> c_;
    Matrix metric_;
};

Vector basis_vector(int dim, int i);

// Largest singular value of a dense matrix.
double operator_norm(const Matrix& m);

Vector bracket(const AlgebraSpec& alg, const Vector& x, const Vector& y);

// J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y].
Vector jacobian(const AlgebraSpec& alg, const Vector& x, const Vector& y, const Vector& z);

// Norm of J(x,y,[x,z]) - [J(x,y,z),x]; zero (to rounding) iff the identity
// holds on the triple.
double malcev_residual(const AlgebraSpec& alg, const Vector& x, const Vector& y,
                       const Vector& z);

// Matrix of ad(x): y -> [x,y].
Matrix ad_matrix(const AlgebraSpec& alg, const Vector& x);

// The commutator defect S(x,y) = [ad x, ad y] - ad [x,y], which in every
// anti-commutative algebra equals z -> -J(x,y,z). The matrix is assembled
// column-wise from the Jacobian so that tests can compare it independently
// against the adjoint-commutator expression.
Matrix defect_S(const AlgebraSpec& alg, const Vector& x, const Vector& y);

struct DefectNorm {
    double basis_sup;    // exact max of ||S(e_i,e_j)||_op over basis pairs i<j
    double sampled_sup;  // Monte-Carlo max over random unit pairs
};

DefectNorm defect_norm(const AlgebraSpec& alg, int sample_count, std::uint64_t seed);

// Built-in algebras: "octonion" (Im(O), half-commutator bracket), "su2",
// "im_quaternion" (Im(H), half-commutator), "m3" (sl(2,R) with the bracket
// scaled by 3/2), "sl2". Throws UnsupportedAlgebra for unknown names.
AlgebraSpec builtin(const std::string& name);

// Reads the JSON algebra format {"name", "dim", "bracket": [[i,j,k,coeff],...]}
// with zero-based indices. Entries default to 0; nothing is symmetrized: for
// every (i,j,k) entry the (j,i,k) entry must also be present with the negated
// coefficient. Throws ParseError / AntisymmetryViolation.
AlgebraSpec load_algebra(const std::string& path);

// Writes the same JSON format (both (i,j) and (j,i) entries, sorted,
// full-precision coefficients). Round-trips through load_algebra.
void save_algebra(const AlgebraSpec& alg, const std::string& path);

}  // namespace malcev
