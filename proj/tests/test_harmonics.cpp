#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "malcev/algebra.hpp"
#include "malcev/harmonics.hpp"
#include "malcev/rng.hpp"

using namespace malcev;

namespace {

Vector gen(int num, int i) { return basis_vector(num, i); }

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

}  // namespace

TEST_CASE("convention labels round-trip and reject junk") {
    CHECK(to_label(ActionConvention::StandardRight) == "standard-right");
    CHECK(to_label(ActionConvention::PaperLeft) == "paper-left");
    CHECK(convention_from_label("standard-right") == ActionConvention::StandardRight);
    CHECK(convention_from_label("paper-left") == ActionConvention::PaperLeft);
    CHECK_THROWS_AS(convention_from_label("diagonal"), UnknownConvention);
}

TEST_CASE("build_action: seven exact skew integer matrices on the 8-dim ambient space") {
    const EigenspaceAction act = build_action();
    CHECK(act.ambient_dim == 8);
    CHECK(act.num_generators == 7);
    CHECK(act.label == "standard-right");
    REQUIRE(act.pi.size() == 7);

    for (const Matrix& p : act.pi) {
        REQUIRE(p.rows() == 8);
        REQUIRE(p.cols() == 8);
        // Entries are exactly -1, 0, or +1, and the matrix is exactly skew.
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const double v = p(i, j);
                CHECK((v == 0.0 || v == 1.0 || v == -1.0));
                CHECK(p(i, j) == -p(j, i));
            }
    }

    // pi(e1) is invertible (a unit right-translation is an isometry)...
    Eigen::FullPivLU<Matrix> lu(act.pi[0]);
    CHECK(lu.rank() == 8);
    // ...squares to -I, and sends the real functional to -e1.
    CHECK(operator_norm(act.pi[0] * act.pi[0] + Matrix::Identity(8, 8)) == 0.0);
    Vector hat0 = Vector::Zero(8);
    hat0[0] = 1.0;
    Vector expect = Vector::Zero(8);
    expect[1] = -1.0;
    CHECK((act.pi[0] * hat0 - expect).norm() == 0.0);
}

TEST_CASE("casimir_check: exact scalar 7I (octonion) and 3I (quaternion)") {
    const EigenspaceAction oct = build_action();
    const Matrix c7 = casimir_check(oct);
    CHECK(operator_norm(c7 - 7.0 * Matrix::Identity(8, 8)) == 0.0);

    for (const ActionConvention conv :
         {ActionConvention::StandardRight, ActionConvention::PaperLeft}) {
        const EigenspaceAction quat = build_quaternion_calibration(conv);
        CHECK(quat.ambient_dim == 4);
        CHECK(quat.num_generators == 3);
        const Matrix c3 = casimir_check(quat);
        CHECK(operator_norm(c3 - 3.0 * Matrix::Identity(4, 4)) == 0.0);
    }

    // The paper-left octonion action shares the same Casimir.
    const Matrix c7l = casimir_check(build_action(ActionConvention::PaperLeft));
    CHECK(operator_norm(c7l - 7.0 * Matrix::Identity(8, 8)) == 0.0);
}

TEST_CASE("defect_T: calibration vanishes, octonion norms differ by convention") {
    // Associative calibration: T == 0 identically under the standard-right
    // pairing.
    const EigenspaceAction quat = build_quaternion_calibration();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(operator_norm(defect_T(quat, gen(3, i), gen(3, j))) <= 1e-14);

    const EigenspaceAction right = build_action(ActionConvention::StandardRight);
    const EigenspaceAction left = build_action(ActionConvention::PaperLeft);
    const Vector x = gen(7, 0), y = gen(7, 1);

    CHECK(operator_norm(defect_T(right, x, y)) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(operator_norm(defect_T(left, x, y)) == doctest::Approx(3.0).epsilon(1e-12));

    // T(x,x) = 0 and antisymmetry.
    Rng rng(kDefaultSeed);
    for (int s = 0; s < 10; ++s) {
        const Vector a = rng.unit(7), b = rng.unit(7);
        CHECK(operator_norm(defect_T(right, a, a)) <= 1e-13);
        CHECK(operator_norm(defect_T(right, a, b) + defect_T(right, b, a)) <= 1e-13);
    }
}

TEST_CASE("structural_constant: 4/3 standard-right, 1 paper-left, 0 for Lie") {
    CHECK(structural_constant(build_action(ActionConvention::StandardRight)) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(structural_constant(build_action(ActionConvention::PaperLeft)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(structural_constant(build_quaternion_calibration()) == 0.0);
    CHECK(structural_constant(build_quaternion_calibration(ActionConvention::PaperLeft)) == 0.0);
}

TEST_CASE("delta_T equals pi(J) identically") {
    Rng rng(kDefaultSeed);
    for (const ActionConvention conv :
         {ActionConvention::StandardRight, ActionConvention::PaperLeft}) {
        const EigenspaceAction act = build_action(conv);

        // Associative triple: J = 0, so the coboundary vanishes.
        CHECK(operator_norm(delta_T(act, gen(7, 0), gen(7, 1), gen(7, 3))) <= 1e-12);

        for (int s = 0; s < 15; ++s) {
            const Vector x = rng.unit(7), y = rng.unit(7), z = rng.unit(7);
            const Matrix lhs = delta_T(act, x, y, z);
            const Matrix rhs = action_pi(act, action_jacobian(act, x, y, z));
            CHECK(operator_norm(lhs - rhs) <= 1e-12);
        }
    }

    // Lie calibration: J = 0 everywhere, so delta_T is identically zero.
    const EigenspaceAction quat = build_quaternion_calibration();
    Rng rng2(kDefaultSeed);
    for (int s = 0; s < 10; ++s) {
        const Vector x = rng2.unit(3), y = rng2.unit(3), z = rng2.unit(3);
        CHECK(operator_norm(delta_T(quat, x, y, z)) <= 1e-13);
    }
}

TEST_CASE("action_bracket normalization follows the convention") {
    const EigenspaceAction right = build_action(ActionConvention::StandardRight);
    const EigenspaceAction left = build_action(ActionConvention::PaperLeft);
    // [e1, e2] = e4 in the half-commutator table; the full commutator doubles it.
    CHECK((action_bracket(right, gen(7, 0), gen(7, 1)) - 2.0 * gen(7, 3)).norm() == 0.0);
    CHECK((action_bracket(left, gen(7, 0), gen(7, 1)) - gen(7, 3)).norm() == 0.0);
}

TEST_CASE("laplacian_eigenvalue: k(k+6) with the degree guard") {
    CHECK(laplacian_eigenvalue(0) == 0.0);
    CHECK(laplacian_eigenvalue(1) == 7.0);
    CHECK(laplacian_eigenvalue(2) == 16.0);
    CHECK(laplacian_eigenvalue(3) == 27.0);
    CHECK(laplacian_eigenvalue(10) == 160.0);
    CHECK_THROWS_AS(laplacian_eigenvalue(-1), NegativeDegree);
}

TEST_CASE("multiplicity_oracle: rank-nullity values and closed form") {
    const long long expect[6] = {1, 8, 35, 112, 294, 672};
    for (int k = 0; k <= 5; ++k) {
        CHECK(multiplicity_oracle(k) == expect[k]);
        CHECK(multiplicity_oracle(k) == binom(k + 7, 7) - binom(k + 5, 7));
    }
    CHECK_THROWS_AS(multiplicity_oracle(-2), NegativeDegree);
}

TEST_CASE("multiplicity_paper_formula and the mismatch flags") {
    const long long paper[4] = {1, 7, 27, 77};
    for (int k = 0; k <= 3; ++k) {
        CHECK(multiplicity_paper_formula(k) == paper[k]);
        CHECK(multiplicity_paper_formula(k) == binom(k + 6, 6) - binom(k + 4, 6));
    }

    const LaplacianTable table = laplacian_table(4);
    REQUIRE(table.rows.size() == 5);
    for (const LaplacianRow& row : table.rows) {
        CHECK(row.lambda == row.k * (row.k + 6.0));
        CHECK(row.mult_oracle == multiplicity_oracle(row.k));
        CHECK(row.mult_paper == multiplicity_paper_formula(row.k));
        CHECK(row.mismatch == (row.mult_oracle != row.mult_paper));
    }
    CHECK_FALSE(table.rows[0].mismatch);  // both count the constants once
    for (int k = 1; k <= 4; ++k) CHECK(table.rows[static_cast<std::size_t>(k)].mismatch);

    CHECK_THROWS_AS(laplacian_table(-1), NegativeDegree);
}

TEST_CASE("spectral_invariant sums f(lambda_k) against oracle multiplicities") {
    // Indicator of the degree-1 eigenvalue picks out its multiplicity.
    const double pick7 = spectral_invariant(
        [](double lambda) { return lambda == 7.0 ? 1.0 : 0.0; }, 3);
    CHECK(pick7 == 8.0);

    CHECK(spectral_invariant([](double) { return 0.0; }, 5) == 0.0);
    CHECK(spectral_invariant([](double lambda) { return std::exp(-lambda); }, 0) == 1.0);

    // Heat-trace partial sum: explicit sum of the first four terms.
    const double t = 0.1;
    double expect = 0.0;
    const long long mult[4] = {1, 8, 35, 112};
    for (int k = 0; k <= 3; ++k) expect += std::exp(-t * k * (k + 6)) * mult[k];
    const double measured =
        spectral_invariant([t](double lambda) { return std::exp(-t * lambda); }, 3);
    CHECK(measured == doctest::Approx(expect).epsilon(1e-14));
}
