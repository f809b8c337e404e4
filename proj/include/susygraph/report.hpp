#pragma once

#include "susygraph/cycle_space.hpp"
#include "susygraph/graph.hpp"
#include "susygraph/spectral.hpp"
#include "susygraph/susy_checks.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace susygraph {

inline constexpr std::string_view tool_version = "0.1.0";

enum class Section { algebra, grading, kernel, spectra, pairing, polar, cycles };

std::string_view to_string(Section section);

/// Every section, as run by `report`.
std::set<Section> all_sections();

struct ReportOptions {
  double tol = default_spectral_tol;
  std::uint64_t seed = 1;
};

/// Seeded spot checks of the Laplacian stencil and of orientation invariance.
struct SelfTest {
  std::uint64_t seed = 0;
  double stencil_deviation = 0.0;   ///< max |Lf - stencil(f)| for a random f
  std::size_t reorientations = 0;
  bool laplacian_invariant = false; ///< L identical under every reorientation
  bool pass() const;
};

struct FullReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Mode mode = Mode::oriented;
  std::size_t components = 0;
  SelfTest self_test;

  std::optional<AlgebraReport> algebra;
  std::optional<AlgebraReport> grading;
  std::optional<KernelReport> kernel;
  std::optional<ZeroModeReport> zero_modes;
  std::optional<DiracReport> dirac;
  std::optional<PairingReport> pairing;
  std::optional<PolarResiduals> polar;
  std::optional<std::vector<double>> polar_singular_values;
  std::optional<CycleSpaceReport> cycles;

  std::string input_digest;
  ReportOptions options;

  /// dim Ker H_S equals the number of H_S eigenvalues within tol of zero.
  std::optional<bool> zero_count_consistent;
  /// Cycle count equals the number of fermionic zero modes.
  std::optional<bool> cycle_count_consistent;

  bool all_pass() const;
};

/// 64-bit FNV-1a of the raw input bytes, as 16 hex digits.
std::string input_digest(std::string_view bytes);

FullReport analyze(const DirectedGraph& g, const std::set<Section>& sections, std::string digest,
                   const ReportOptions& options = {});

nlohmann::json to_json(const FullReport& report);

/// Key-sorted JSON with a trailing newline; byte-identical for equal reports.
std::string serialize_json(const FullReport& report);
/// Indented table mirroring the JSON layout.
std::string serialize_text(const FullReport& report);

}  // namespace susygraph
