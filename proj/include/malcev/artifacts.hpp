#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/harmonics.hpp"
#include "malcev/spectral.hpp"
#include "malcev/verify.hpp"

namespace malcev {

// Deterministic artifact emitters: every float goes through the 17-digit
// formatter, keys appear in a fixed order, so identical inputs produce
// identical bytes. Timestamps (where offered) are the only variable field
// and are dropped when with_timestamp is false.

std::string spectrum_to_json(const SpectrumReport& rep);

std::string verify_to_json(const VerifyReport& rep, bool with_timestamp);

struct DefectArtifact {
    std::string algebra;
    DefectNorm norm;
    int sample_count = 0;
    std::uint64_t seed = 0;
};
std::string defect_to_json(const DefectArtifact& art, bool with_timestamp);

struct BchArtifactRow {
    double scale;
    double error;
    bool radius_ok;
};
// Single row: exactly {"order", "error", "radius_ok", "bound"}. Several rows:
// the same four keys (taken from the first row) plus a "results" array.
std::string bch_to_json(int order, double bound, const std::vector<BchArtifactRow>& rows);

std::string laplacian_to_csv(const LaplacianTable& table);

// Companion re-readers for --check: parse and schema-validate an artifact
// written by the matching subcommand; any deviation throws ParseError.
void check_spectrum_json(const std::string& path);
void check_verify_json(const std::string& path);
void check_defect_json(const std::string& path);
void check_bch_json(const std::string& path);
void check_laplacian_csv(const std::string& path);
void check_trajectory_csv(const std::string& path);

}  // namespace malcev
