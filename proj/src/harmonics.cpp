#include "malcev/harmonics.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <mutex>

#include "malcev/errors.hpp"
#include "malcev/octonion.hpp"

namespace malcev {

namespace {

// Translation-multiplication matrix of basis unit e_g on the span of the
// ambient indices `amb` (a multiplicatively closed set containing 0).
// side = 'L': column b holds e_g * e_amb[b];  side = 'R': e_amb[b] * e_g.
Matrix translation_matrix(const std::vector<int>& amb, int g, char side) {
    const int n = static_cast<int>(amb.size());
    std::array<int, 8> pos{};
    pos.fill(-1);
    for (int b = 0; b < n; ++b) pos[static_cast<std::size_t>(amb[b])] = b;

    Matrix m = Matrix::Zero(n, n);
    for (int b = 0; b < n; ++b) {
        const BasisProduct p =
            side == 'L' ? oct_basis_mul(g, amb[b]) : oct_basis_mul(amb[b], g);
        const int row = pos[static_cast<std::size_t>(p.index)];
        if (row < 0) throw Error("translation_matrix: ambient index set not closed");
        m(row, b) = p.sign;
    }
    return m;
}

EigenspaceAction build_from_indices(const std::vector<int>& amb, const std::vector<int>& gens,
                                    ActionConvention conv) {
    EigenspaceAction act;
    act.ambient_dim = static_cast<int>(amb.size());
    act.num_generators = static_cast<int>(gens.size());
    act.convention = conv;
    act.label = to_label(conv);

    const char side = conv == ActionConvention::StandardRight ? 'R' : 'L';
    for (int g : gens) act.pi.push_back(translation_matrix(amb, g, side).transpose());

    // Bracket of generators in generator coordinates. The commutator of two
    // distinct Fano units is 2*sign(e_i e_j) times a third unit; the
    // standard-right convention keeps the full commutator, paper-left halves it.
    const double scale = conv == ActionConvention::StandardRight ? 2.0 : 1.0;
    std::array<int, 8> gpos{};
    gpos.fill(-1);
    for (int i = 0; i < act.num_generators; ++i)
        gpos[static_cast<std::size_t>(gens[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < act.num_generators; ++i) {
        Matrix tab = Matrix::Zero(act.num_generators, act.num_generators);
        for (int j = 0; j < act.num_generators; ++j) {
            if (i == j) continue;
            const BasisProduct p = oct_basis_mul(gens[static_cast<std::size_t>(i)],
                                                 gens[static_cast<std::size_t>(j)]);
            const int k = gpos[static_cast<std::size_t>(p.index)];
            if (k < 0) throw Error("build_from_indices: generator set not bracket-closed");
            tab(k, j) = scale * p.sign;
        }
        act.bracket_table.push_back(std::move(tab));
    }
    return act;
}

long long binom(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

using Monomial = std::array<int, 8>;

void enumerate_monomials(int degree, int var, Monomial& cur, std::vector<Monomial>& out) {
    if (var == 7) {
        cur[7] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        enumerate_monomials(degree - e, var + 1, cur, out);
    }
}

std::vector<Monomial> monomials(int degree) {
    std::vector<Monomial> out;
    Monomial cur{};
    enumerate_monomials(degree, 0, cur, out);
    return out;
}

long long harmonic_dimension(int k) {
    if (k <= 1) return binom(k + 7, 7);  // the flat Laplacian is the zero map
    const auto src = monomials(k);
    const auto dst = monomials(k - 2);
    std::map<Monomial, int> dst_index;
    for (std::size_t r = 0; r < dst.size(); ++r) dst_index[dst[r]] = static_cast<int>(r);

    Matrix lap = Matrix::Zero(static_cast<Eigen::Index>(dst.size()),
                              static_cast<Eigen::Index>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (int i = 0; i < 8; ++i) {
            const int a = src[c][static_cast<std::size_t>(i)];
            if (a < 2) continue;
            Monomial t = src[c];
            t[static_cast<std::size_t>(i)] -= 2;
            lap(dst_index.at(t), static_cast<Eigen::Index>(c)) +=
                static_cast<double>(a) * (a - 1);
        }
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(lap);
    return static_cast<long long>(src.size()) - qr.rank();
}

}  // namespace

std::string to_label(ActionConvention c) {
    return c == ActionConvention::StandardRight ? "standard-right" : "paper-left";
}

ActionConvention convention_from_label(const std::string& label) {
    if (label == "standard-right") return ActionConvention::StandardRight;
    if (label == "paper-left") return ActionConvention::PaperLeft;
    throw UnknownConvention("unknown action convention: " + label);
}

EigenspaceAction build_action(ActionConvention conv) {
    return build_from_indices({0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}, conv);
}

EigenspaceAction build_action(const std::string& label) {
    return build_action(convention_from_label(label));
}

EigenspaceAction build_quaternion_calibration(ActionConvention conv) {
    // e1, e2, e4 close under multiplication: the quaternion subalgebra sits on
    // ambient coordinates {1, e1, e2, e4}.
    return build_from_indices({0, 1, 2, 4}, {1, 2, 4}, conv);
}

Vector action_bracket(const EigenspaceAction& act, const Vector& x, const Vector& y) {
    if (x.size() != act.num_generators || y.size() != act.num_generators)
        throw DimensionMismatch("action_bracket: wrong coordinate count");
    Vector out = Vector::Zero(act.num_generators);
    for (int i = 0; i < act.num_generators; ++i)
        if (x[i] != 0.0) out += x[i] * (act.bracket_table[static_cast<std::size_t>(i)] * y);
    return out;
}

Matrix action_pi(const EigenspaceAction& act, const Vector& x) {
    if (x.size() != act.num_generators)
        throw DimensionMismatch("action_pi: wrong coordinate count");
    Matrix out = Matrix::Zero(act.ambient_dim, act.ambient_dim);
    for (int i = 0; i < act.num_generators; ++i)
        if (x[i] != 0.0) out += x[i] * act.pi[static_cast<std::size_t>(i)];
    return out;
}

Vector action_jacobian(const EigenspaceAction& act, const Vector& x, const Vector& y,
                       const Vector& z) {
    return action_bracket(act, action_bracket(act, x, y), z) +
           action_bracket(act, action_bracket(act, y, z), x) +
           action_bracket(act, action_bracket(act, z, x), y);
}

Matrix casimir_check(const EigenspaceAction& act) {
    Matrix out = Matrix::Zero(act.ambient_dim, act.ambient_dim);
    for (const auto& p : act.pi) out -= p * p;
    return out;
}

double laplacian_eigenvalue(int k) {
    if (k < 0) throw NegativeDegree("laplacian_eigenvalue: degree must be nonnegative");
    return static_cast<double>(k) * (k + 6);
}

long long multiplicity_oracle(int k) {
    if (k < 0) throw NegativeDegree("multiplicity_oracle: degree must be nonnegative");
    static std::map<int, long long> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    const long long dim = harmonic_dimension(k);
    std::lock_guard<std::mutex> lock(mtx);
    cache[k] = dim;
    return dim;
}

long long multiplicity_paper_formula(int k) {
    if (k < 0) throw NegativeDegree("multiplicity_paper_formula: degree must be nonnegative");
    return binom(k + 6, 6) - binom(k + 4, 6);
}

LaplacianTable laplacian_table(int k_max) {
    if (k_max < 0) throw NegativeDegree("laplacian_table: k_max must be nonnegative");
    LaplacianTable table;
    for (int k = 0; k <= k_max; ++k) {
        LaplacianRow row;
        row.k = k;
        row.lambda = laplacian_eigenvalue(k);
        row.mult_oracle = multiplicity_oracle(k);
        row.mult_paper = multiplicity_paper_formula(k);
        row.mismatch = row.mult_oracle != row.mult_paper;
        table.rows.push_back(row);
    }
    return table;
}

Matrix defect_T(const EigenspaceAction& act, const Vector& x, const Vector& y) {
    const Matrix a = action_pi(act, x);
    const Matrix b = action_pi(act, y);
    return a * b - b * a - action_pi(act, action_bracket(act, x, y));
}

double structural_constant(const EigenspaceAction& act) {
    const AlgebraSpec alg =
        act.num_generators == 7 ? builtin("octonion") : builtin("im_quaternion");
    double best = 0.0;
    bool any_nonzero_s = false;
    for (int i = 0; i < act.num_generators; ++i) {
        for (int j = i + 1; j < act.num_generators; ++j) {
            const Vector ei = basis_vector(act.num_generators, i);
            const Vector ej = basis_vector(act.num_generators, j);
            const double sn = operator_norm(defect_S(alg, ei, ej));
            if (sn <= 1e-12) continue;  // Lie calibration pair contributes nothing
            any_nonzero_s = true;
            best = std::max(best, operator_norm(defect_T(act, ei, ej)) / sn);
        }
    }
    return any_nonzero_s ? best : 0.0;
}

Matrix delta_T(const EigenspaceAction& act, const Vector& x, const Vector& y, const Vector& z) {
    auto comm = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
    return comm(action_pi(act, x), defect_T(act, y, z)) +
           comm(action_pi(act, y), defect_T(act, z, x)) +
           comm(action_pi(act, z), defect_T(act, x, y)) -
           defect_T(act, action_bracket(act, x, y), z) -
           defect_T(act, action_bracket(act, y, z), x) -
           defect_T(act, action_bracket(act, z, x), y);
}

double spectral_invariant(const std::function<double(double)>& f, int k_max) {
    if (k_max < 0) throw NegativeDegree("spectral_invariant: k_max must be nonnegative");
    double acc = 0.0;
    for (int k = 0; k <= k_max; ++k)
        acc += f(laplacian_eigenvalue(k)) * static_cast<double>(multiplicity_oracle(k));
    return acc;
}

}  // namespace malcev
