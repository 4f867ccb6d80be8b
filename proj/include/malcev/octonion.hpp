#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "malcev/errors.hpp"

namespace malcev {

// Real octonion with basis 1, e1..e7. Multiplication is fixed by the
// Fano-plane cyclic triples
//
//   {(1,2,4), (2,3,5), (3,4,6), (4,5,7), (5,6,1), (6,7,2), (7,1,3)}
//
// read as e_a e_b = e_c (and cyclic shifts) for each triple (a,b,c), together
// with e_i e_i = -1 and anti-commutativity of distinct imaginary units.
struct Octonion {
    std::array<double, 8> c{};  // c[0] real part, c[1..7] imaginary parts

    static Octonion unit(int i) {
        Octonion q;
        q.c[static_cast<std::size_t>(i)] = 1.0;
        return q;
    }
    static Octonion real(double r) {
        Octonion q;
        q.c[0] = r;
        return q;
    }
};

struct BasisProduct {
    int index;  // 0..7
    int sign;   // +1 or -1
};

namespace detail {

struct MulTables {
    std::array<std::array<int, 8>, 8> idx{};
    std::array<std::array<int, 8>, 8> sgn{};
};

constexpr MulTables make_mul_tables() {
    MulTables t{};
    for (int i = 0; i < 8; ++i) {
        t.idx[0][static_cast<std::size_t>(i)] = i;
        t.sgn[0][static_cast<std::size_t>(i)] = 1;
        t.idx[static_cast<std::size_t>(i)][0] = i;
        t.sgn[static_cast<std::size_t>(i)][0] = 1;
    }
    for (int i = 1; i < 8; ++i) {
        t.idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
        t.sgn[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
    }
    constexpr int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                   {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    for (const auto& tr : triples) {
        const int cyc[3][3] = {{tr[0], tr[1], tr[2]},
                               {tr[1], tr[2], tr[0]},
                               {tr[2], tr[0], tr[1]}};
        for (const auto& p : cyc) {
            t.idx[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] = p[2];
            t.sgn[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] = 1;
            t.idx[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])] = p[2];
            t.sgn[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])] = -1;
        }
    }
    return t;
}

inline constexpr MulTables kMul = make_mul_tables();

}  // namespace detail

// Product of basis units: e_i e_j = sign * e_index (index 0 is the real unit).
constexpr BasisProduct oct_basis_mul(int i, int j) {
    return {detail::kMul.idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            detail::kMul.sgn[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]};
}

Octonion oct_mul(const Octonion& a, const Octonion& b);
Octonion oct_conj(const Octonion& a);
double oct_norm(const Octonion& a);

// Multiplicative inverse; throws ZeroDivisor when norm(a) == 0.
Octonion oct_inverse(const Octonion& a);

inline Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline Octonion operator*(double s, const Octonion& a) {
    Octonion r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
}

inline Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

inline double oct_dist(const Octonion& a, const Octonion& b) { return oct_norm(a - b); }

// Embed a 7-dimensional coefficient vector as a purely imaginary octonion.
Octonion oct_from_imag(const Eigen::VectorXd& v);

// Imaginary part of q as a 7-dimensional coefficient vector.
Eigen::VectorXd oct_imag(const Octonion& q);

}  // namespace malcev
