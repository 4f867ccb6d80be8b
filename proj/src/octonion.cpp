#include "malcev/octonion.hpp"

namespace malcev {

Octonion oct_mul(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) {
        const double ai = a.c[i];
        if (ai == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            const double bj = b.c[j];
            if (bj == 0.0) continue;
            const BasisProduct p = oct_basis_mul(static_cast<int>(i), static_cast<int>(j));
            r.c[static_cast<std::size_t>(p.index)] += p.sign * ai * bj;
        }
    }
    return r;
}

Octonion oct_conj(const Octonion& a) {
    Octonion r;
    r.c[0] = a.c[0];
    for (std::size_t i = 1; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
}

double oct_norm(const Octonion& a) {
    double s = 0.0;
    for (const double v : a.c) s += v * v;
    return std::sqrt(s);
}

Octonion oct_inverse(const Octonion& a) {
    double s = 0.0;
    for (const double v : a.c) s += v * v;
    if (s == 0.0) throw ZeroDivisor("oct_inverse: zero octonion has no inverse");
    return (1.0 / s) * oct_conj(a);
}

Octonion oct_from_imag(const Eigen::VectorXd& v) {
    if (v.size() != 7)
        throw DimensionMismatch("oct_from_imag: expected 7 coefficients, got " +
                                std::to_string(v.size()));
    Octonion q;
    for (int i = 0; i < 7; ++i) q.c[static_cast<std::size_t>(i + 1)] = v[i];
    return q;
}

Eigen::VectorXd oct_imag(const Octonion& q) {
    Eigen::VectorXd v(7);
    for (int i = 0; i < 7; ++i) v[i] = q.c[static_cast<std::size_t>(i + 1)];
    return v;
}

}  // namespace malcev
