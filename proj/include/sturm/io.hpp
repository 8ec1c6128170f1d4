#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sturm/grid_function.hpp"
#include "sturm/spectral_data.hpp"

namespace sturm {

// All writers print floating-point values with 17 significant digits so that
// outputs are bit-reproducible across runs and round-trip exactly.
std::string format_g17(double v);

// CSV grid-function format: header "x,re,im", one row per midpoint sample in
// increasing x.  On load the abscissae must match the midpoints of a uniform
// grid on [0,1] or [0,2] to 1e-12; parse diagnostics name the offending line.
void save_csv(const std::string& path, const GridFunction& f);
GridFunction load_csv(const std::string& path, bool require_real = false);

// Spectral-data document: {"s", "lambda", "mu" | null, "alpha" | null,
// "tail": "unperturbed_pad"}.  At least one of mu/alpha must be present; the
// forward solver emits both, and consumers that need exactly one disambiguate
// via an explicit mode.
struct SpectralDocument {
  double s = 0.0;
  Vector lambda;
  std::optional<Vector> mu;
  std::optional<Vector> alpha;
  TailKind tail = TailKind::unperturbed_pad;

  bool has_mu() const { return mu.has_value(); }
  bool has_alpha() const { return alpha.has_value(); }
  TwoSpectra to_two_spectra() const;
  NormingSpectra to_norming_spectra() const;
  static SpectralDocument from(const TwoSpectra& data);
  static SpectralDocument from(const NormingSpectra& data);
};

SpectralDocument load_spectra(const std::string& path);
void save_spectra(const std::string& path, const SpectralDocument& doc);

// Deterministic JSON serialization: keys sorted, two-space indent, numbers
// through format_g17.  Used for every report the tools emit.
std::string dump_json(const nlohmann::json& j);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace sturm
