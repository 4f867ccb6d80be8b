#pragma once

#include <functional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

// Two documented realizations of the degree-1 eigenspace action:
//   standard-right : pi(x) = R_x^T (transposed right-translation field) with
//                    the full commutator bracket. The associative calibration
//                    (quaternions) gives T == 0 exactly under this pairing.
//   paper-left     : pi(x) = L_x^T (left-translation fields) with the
//                    half-commutator bracket. The calibration does not vanish;
//                    both conventions report their measured defect norms.
enum class ActionConvention { StandardRight, PaperLeft };

std::string to_label(ActionConvention c);
ActionConvention convention_from_label(const std::string& label);  // throws UnknownConvention

struct EigenspaceAction {
    int ambient_dim = 0;               // 8 (octonion) or 4 (quaternion calibration)
    int num_generators = 0;            // 7 or 3
    std::vector<Matrix> pi;            // generator matrices, exact +-1/0 patterns
    ActionConvention convention = ActionConvention::StandardRight;
    std::string label;                 // convention label in force
    // bracket_table[i] column j = coordinates of [g_i, g_j] under the
    // convention's normalization.
    std::vector<Matrix> bracket_table;
};

// Degree-1 action of the seven tangent generators on ambient linear
// functionals of the 7-sphere (8x8 matrices).
EigenspaceAction build_action(ActionConvention conv = ActionConvention::StandardRight);
EigenspaceAction build_action(const std::string& label);

// Same construction for the unit-quaternion 3-sphere: three generators acting
// on 4-dimensional ambient functionals. This is the associative calibration.
EigenspaceAction build_quaternion_calibration(
    ActionConvention conv = ActionConvention::StandardRight);

// Convention bracket in generator coordinates; pi extended linearly.
Vector action_bracket(const EigenspaceAction& act, const Vector& x, const Vector& y);
Matrix action_pi(const EigenspaceAction& act, const Vector& x);
// Jacobian J(x,y,z) of the action's bracket.
Vector action_jacobian(const EigenspaceAction& act, const Vector& x, const Vector& y,
                       const Vector& z);

// -sum_i pi(g_i)^2; scalar (7 I for the octonion action, 3 I for the
// quaternion calibration) with zero integer residue.
Matrix casimir_check(const EigenspaceAction& act);

// Sphere-Laplacian eigenvalue k(k+6) on degree-k harmonics of S^7.
double laplacian_eigenvalue(int k);  // throws NegativeDegree

// Multiplicity by rank-nullity of the flat Laplacian on homogeneous degree-k
// polynomials in 8 variables (memoized; the authoritative count).
long long multiplicity_oracle(int k);  // throws NegativeDegree

// The binomial expression C(k+6,6) - C(k+4,6); displayed next to the oracle
// with a mismatch flag, never asserted.
long long multiplicity_paper_formula(int k);  // throws NegativeDegree

struct LaplacianRow {
    int k;
    double lambda;
    long long mult_oracle;
    long long mult_paper;
    bool mismatch;
};

struct LaplacianTable {
    std::vector<LaplacianRow> rows;  // k = 0..k_max
};

LaplacianTable laplacian_table(int k_max);  // throws NegativeDegree

// T(x,y) = [pi(x), pi(y)] - pi([x,y]); the operator defect of the action.
Matrix defect_T(const EigenspaceAction& act, const Vector& x, const Vector& y);

// max over basis pairs i<j of ||T(g_i,g_j)|| / ||S(g_i,g_j)|| with S taken
// from the structure-constant algebra. Returns 0 when S vanishes identically
// (Lie calibrations).
double structural_constant(const EigenspaceAction& act);

// (delta T)(x,y,z) = [pi(x),T(y,z)] + [pi(y),T(z,x)] + [pi(z),T(x,y)]
//                    - T([x,y],z) - T([y,z],x) - T([z,x],y);
// equals pi(J(x,y,z)) identically.
Matrix delta_T(const EigenspaceAction& act, const Vector& x, const Vector& y, const Vector& z);

// Truncated heat-trace style invariant: sum_{k<=k_max} f(lambda_k) * mult(k)
// with oracle multiplicities.
double spectral_invariant(const std::function<double(double)>& f, int k_max);

}  // namespace malcev
