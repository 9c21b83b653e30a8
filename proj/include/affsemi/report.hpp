#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affsemi/semigroup.hpp"
#include "affsemi/ulrich.hpp"
#include "json.hpp"

// Classification surface used by the command-line tool. Field names in the
// structured output are a public contract, documented in the README.
// Serialized integers are decimal with no size limit: values that fit in 64
// bits are emitted as numbers, anything larger as a decimal string, and the
// parser accepts both forms.

namespace affsemi {

struct D2Report {
  std::vector<IntVector> oriented_rays;  // slope order, a1 then a2
  std::vector<IntVector> h_star_1;
  std::vector<IntVector> h_star_2;
  Int h_star_count_1;
  Int h_star_count_2;
  bool ag1 = false;
  bool ag2 = false;
  SearchResult ulrich_elements;
  bool almost_gorenstein = false;
};

struct ClassificationReport {
  std::vector<IntVector> rays;
  std::vector<IntVector> hilbert_basis;
  std::vector<IntVector> omega_generators;
  bool slim = true;
  std::optional<IntVector> slim_witness;
  std::optional<IntVector> bottom;
  std::vector<IntVector> minimal_omega;
  bool gorenstein = false;
  bool nearly_gorenstein = false;
  std::vector<IntVector> nearly_failing_targets;  // empty when nearly
  std::optional<D2Report> d2;
  double timing_ms = 0.0;  // stderr-only; never serialized, see README
};

ClassificationReport analyze_rays(const std::vector<IntVector>& rays,
                                  const EnumerationBudget& budget = {});

nlohmann::ordered_json report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& doc);
std::string report_to_text(const ClassificationReport& r);

// {"rays": [[...], ...]} with integers as numbers or decimal strings;
// throws InputError on malformed documents
std::vector<IntVector> rays_from_json(const nlohmann::json& doc);

nlohmann::ordered_json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& v);
nlohmann::ordered_json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& v);

}  // namespace affsemi
