#include "malcev/bch.hpp"

#include <string_view>
#include <vector>

#include "malcev/errors.hpp"
#include "malcev/moufang.hpp"
#include "malcev/octonion.hpp"

namespace malcev {

namespace {

const AlgebraSpec& octonion_algebra() {
    static const AlgebraSpec alg = builtin("octonion");
    return alg;
}

struct BchTerm {
    int degree;
    std::string_view word;  // right-nested: "yxxy" means [y,[x,[x,y]]]
    double coeff;
};

// Classical (Dynkin/Goldberg) expansion through degree 6, reduced to a
// right-nested word basis. Verified term-by-term against an exact
// free-algebra expansion; the scaling tests enforce it at runtime.
constexpr BchTerm kBchTable[] = {
    {2, "xy", 1.0 / 2.0},
    {3, "xxy", 1.0 / 12.0},
    {3, "yyx", 1.0 / 12.0},
    {4, "yxxy", -1.0 / 24.0},
    {5, "yyyyx", -1.0 / 720.0},
    {5, "xxxxy", -1.0 / 720.0},
    {5, "xyyyx", 1.0 / 360.0},
    {5, "yxxxy", 1.0 / 360.0},
    {5, "yxyxy", 1.0 / 120.0},
    {5, "xyxyx", 1.0 / 120.0},
    {6, "xyxyxy", 1.0 / 240.0},
    {6, "xyxxxy", 1.0 / 720.0},
    {6, "xxyyxy", -1.0 / 720.0},
    {6, "xyyyxy", 1.0 / 1440.0},
    {6, "xxyxxy", -1.0 / 1440.0},
};

Vector eval_word(std::string_view word, const Vector& x, const Vector& y) {
    auto letter = [&](char c) -> const Vector& { return c == 'x' ? x : y; };
    Vector acc = letter(word.back());
    for (auto it = word.rbegin() + 1; it != word.rend(); ++it)
        acc = full_commutator(letter(*it), acc);
    return acc;
}

}  // namespace

Vector full_commutator(const Vector& x, const Vector& y) {
    return kCommutatorScale * bracket(octonion_algebra(), x, y);
}

Vector bch_truncated(const Vector& x, const Vector& y, int order) {
    if (order < 1 || order > 6)
        throw UnsupportedOrder("bch_truncated: order must be in [1, 6]");
    if (x.size() != 7 || y.size() != 7)
        throw DimensionMismatch("bch_truncated: arguments must have 7 coordinates");
    Vector acc = x + y;
    for (const auto& term : kBchTable) {
        if (term.degree > order) break;
        acc += term.coeff * eval_word(term.word, x, y);
    }
    return acc;
}

bool bch_radius_ok(const BchConfig& cfg, const Vector& x, const Vector& y) {
    return cfg.B * (x.norm() + y.norm()) < bch_radius_bound(cfg);
}

double bch_radius_bound(const BchConfig& cfg) { return 1.0 / (4.0 * cfg.K); }

double bch_error(const Vector& x, const Vector& y, int order) {
    const Octonion prod = oct_exp_imag(x) * oct_exp_imag(y);
    const Vector z = oct_log_imag(prod);
    return (z - bch_truncated(x, y, order)).norm();
}

}  // namespace malcev
