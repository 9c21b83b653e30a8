#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "affsemi/semigroup.hpp"
#include "json.hpp"

// Parameter-grid sweeps over all valid oriented coprime ray pairs with
// entries bounded by max. Rows come back ordered by the (x1,y1,x2,y2) tuple
// no matter how many worker threads ran the grid.

namespace affsemi {

struct GridSpec {
  long max = 10;
  bool require_ones_interior = false;
};

struct SurveyRow {
  long x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  bool gorenstein = false;
  bool ag1 = false;
  bool ag2 = false;
  bool bottom_ulrich = false;  // pairwise covering verdict for the bottom
  std::optional<bool> residue_ulrich;  // divisibility rule; bottom (1,1) only
  bool nearly_gorenstein = false;
  bool mismatch = false;  // any disagreement between the routes above
};

std::vector<std::array<long, 4>> enumerate_grid(const GridSpec& spec);

std::vector<SurveyRow> survey_run(const GridSpec& spec,
                                  const EnumerationBudget& budget = {},
                                  unsigned threads = 1);

std::string survey_to_csv(const std::vector<SurveyRow>& rows);
nlohmann::ordered_json survey_to_json(const std::vector<SurveyRow>& rows);
std::string survey_to_text(const std::vector<SurveyRow>& rows);

// One record per disagreement between a fast path and its independent
// reference on the same instance; empty on a correct build.
struct OracleMismatch {
  long x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  std::string check;   // which comparison fired
  std::string fast;    // fast-path answer
  std::string oracle;  // reference answer
};

// mutate_ag1 flips the first residue inequality to prove the harness can
// see an injected bug; production runs leave it false
std::vector<OracleMismatch> oracle_diff_run(const GridSpec& spec,
                                            const EnumerationBudget& budget = {},
                                            bool mutate_ag1 = false,
                                            unsigned threads = 1);

std::string mismatches_to_text(const std::vector<OracleMismatch>& ms);

}  // namespace affsemi
