#pragma once

#include "malcev/algebra.hpp"

namespace malcev {

// The builtin octonion bracket is the half-commutator (xy - yx)/2; the
// classical BCH series for log(e^x e^y) needs the true commutator, so every
// bracket in this module is scaled by this one constant.
inline constexpr double kCommutatorScale = 2.0;

struct BchConfig {
    int order = 6;    // truncation order, 1..6 (hard-coded coefficient tables)
    double B = 2.0;   // bracket continuity constant (sharp for the commutator on Im O)
    double K = 1.0;   // >= 1, bounds the absolute BCH coefficients
};

// [x, y] with the full commutator normalization, in imaginary coordinates.
Vector full_commutator(const Vector& x, const Vector& y);

// Truncated Baker-Campbell-Hausdorff sum through the given order, evaluated
// with the full commutator on the imaginary octonions. Order 1 is x + y;
// higher orders add the classical homogeneous nested-commutator terms.
// Throws UnsupportedOrder outside [1, 6].
Vector bch_truncated(const Vector& x, const Vector& y, int order);

// Strict convergence-radius predicate: B * (||x|| + ||y||) < 1 / (4 K).
bool bch_radius_ok(const BchConfig& cfg, const Vector& x, const Vector& y);

// 1 / (4 K), the right-hand side of the radius predicate.
double bch_radius_bound(const BchConfig& cfg);

// || log(exp(x) exp(y)) - bch_truncated(x, y, order) ||. The logarithm can
// throw BranchPoint when exp(x) exp(y) lands at the antipode.
double bch_error(const Vector& x, const Vector& y, int order);

}  // namespace malcev
