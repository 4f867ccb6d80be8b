#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/rng.hpp"

namespace malcev {

// One gated (or informational) invariant check: pass iff measured `cmp`
// threshold, where cmp is "<=" or ">=".
struct CheckResult {
    std::string name;
    bool gated;
    bool pass;
    double measured;
    double threshold;
    std::string cmp;
};

// A reported quantity that never gates: measured value, the reference number
// it is conventionally compared against (when one exists), and a note.
struct Diagnostic {
    std::string name;
    double value;
    std::optional<double> reference;
    std::string note;
};

struct VerifyReport {
    std::string algebra;
    int dim = 0;
    std::uint64_t seed = kDefaultSeed;
    double tol = 0.0;
    std::optional<bool> almost_periodic;  // sampled spectral classification
    std::vector<CheckResult> checks;
    std::vector<Diagnostic> diagnostics;
    bool pass = false;  // conjunction of the gated checks
};

// Runs the structural invariant suite on any algebra (anti-symmetry, Malcev
// identity on basis triples, the commutator-defect identity, defect
// anti-symmetry, ad(x)x = 0) and, for the octonion builtin, the full
// analytic battery: composition law, alternativity, minimal polynomial,
// spectrum pattern, strict periodicity with minimality witness, the
// conjugation identity, Casimir, the coboundary identity, in-radius BCH
// error, and the Laplace-quadrature resolvent check. Contested constants
// from the source material are reported as diagnostics and never gate.
VerifyReport run_verify(const AlgebraSpec& alg, std::uint64_t seed = kDefaultSeed,
                        double tol = 1e-9);

}  // namespace malcev
