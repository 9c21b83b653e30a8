#include "affsemi/survey.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "affsemi/oracle.hpp"
#include "affsemi/trace.hpp"
#include "affsemi/ulrich.hpp"

namespace affsemi {

namespace {

// index-sliced work distribution; every slot is written by exactly one
// worker, so the output order is the input order regardless of schedule
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned t = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([=] {
      for (std::size_t i = w; i < n; i += t) fn(i);
    });
  for (std::thread& th : pool) th.join();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string vectors_str(const std::vector<IntVector>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << " ";
    os << vs[i].str();
  }
  return os.str();
}

}  // namespace

std::vector<std::array<long, 4>> enumerate_grid(const GridSpec& spec) {
  std::vector<std::array<long, 4>> out;
  for (long x1 = 0; x1 <= spec.max; ++x1)
    for (long y1 = 0; y1 <= spec.max; ++y1) {
      if (x1 == 0 && y1 == 0) continue;
      if (std::gcd(x1, y1) != 1) continue;
      for (long x2 = 0; x2 <= spec.max; ++x2)
        for (long y2 = 0; y2 <= spec.max; ++y2) {
          if (x2 == 0 && y2 == 0) continue;
          if (std::gcd(x2, y2) != 1) continue;
          if (x1 * y2 - y1 * x2 <= 0) continue;  // oriented pairs only
          if (spec.require_ones_interior && !(y1 < x1 && x2 < y2)) continue;
          out.push_back({x1, y1, x2, y2});
        }
    }
  return out;
}

std::vector<SurveyRow> survey_run(const GridSpec& spec,
                                  const EnumerationBudget& budget,
                                  unsigned threads) {
  std::vector<std::array<long, 4>> grid = enumerate_grid(spec);
  std::vector<SurveyRow> rows(grid.size());
  std::exception_ptr failure;
  std::mutex failure_mu;

  parallel_for(grid.size(), threads, [&](std::size_t i) {
    try {
      const auto& g = grid[i];
      SurveyRow& row = rows[i];
      row.x1 = g[0];
      row.y1 = g[1];
      row.x2 = g[2];
      row.y2 = g[3];
      SemigroupModel m = SemigroupModel::build(
          {IntVector{g[0], g[1]}, IntVector{g[2], g[3]}}, budget);
      OrientedModel om = OrientedModel::orient(std::move(m));
      row.gorenstein = om.base().is_gorenstein();
      row.ag1 = is_ag(om, 1);
      row.ag2 = is_ag(om, 2);
      row.bottom_ulrich = is_ulrich(om, om.bottom()).ulrich;
      if (om.bottom() == IntVector{1, 1})
        row.residue_ulrich = ulrich_one_one(om);
      row.nearly_gorenstein = is_nearly_gorenstein(om.base()).nearly;
      bool sum_free = row.ag1 && row.ag2;
      row.mismatch =
          sum_free != row.bottom_ulrich ||
          (row.residue_ulrich && *row.residue_ulrich != row.bottom_ulrich);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string survey_to_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "x1,y1,x2,y2,gorenstein,ag1,ag2,bottom_ulrich,residue_ulrich,"
        "nearly_gorenstein,mismatch\n";
  for (const SurveyRow& r : rows) {
    os << r.x1 << ',' << r.y1 << ',' << r.x2 << ',' << r.y2 << ','
       << bool_str(r.gorenstein) << ',' << bool_str(r.ag1) << ','
       << bool_str(r.ag2) << ',' << bool_str(r.bottom_ulrich) << ','
       << (r.residue_ulrich ? bool_str(*r.residue_ulrich) : std::string())
       << ',' << bool_str(r.nearly_gorenstein) << ',' << bool_str(r.mismatch)
       << '\n';
  }
  return os.str();
}

nlohmann::ordered_json survey_to_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SurveyRow& r : rows) {
    nlohmann::ordered_json row;
    row["x1"] = r.x1;
    row["y1"] = r.y1;
    row["x2"] = r.x2;
    row["y2"] = r.y2;
    row["gorenstein"] = r.gorenstein;
    row["ag1"] = r.ag1;
    row["ag2"] = r.ag2;
    row["bottom_ulrich"] = r.bottom_ulrich;
    row["residue_ulrich"] =
        r.residue_ulrich ? nlohmann::ordered_json(*r.residue_ulrich)
                         : nlohmann::ordered_json(nullptr);
    row["nearly_gorenstein"] = r.nearly_gorenstein;
    row["mismatch"] = r.mismatch;
    arr.push_back(std::move(row));
  }
  return arr;
}

std::string survey_to_text(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "   x1   y1   x2   y2  gor  ag1  ag2  bot  res  near  mism\n";
  for (const SurveyRow& r : rows) {
    auto flag = [](bool b) { return b ? "  y " : "  . "; };
    os.width(5);
    os << r.x1;
    os.width(5);
    os << r.y1;
    os.width(5);
    os << r.x2;
    os.width(5);
    os << r.y2;
    os << flag(r.gorenstein) << flag(r.ag1) << flag(r.ag2)
       << flag(r.bottom_ulrich)
       << (r.residue_ulrich ? flag(*r.residue_ulrich) : "  - ")
       << flag(r.nearly_gorenstein) << " " << flag(r.mismatch) << "\n";
  }
  return os.str();
}

std::vector<OracleMismatch> oracle_diff_run(const GridSpec& spec,
                                            const EnumerationBudget& budget,
                                            bool mutate_ag1,
                                            unsigned threads) {
  std::vector<std::array<long, 4>> grid = enumerate_grid(spec);
  std::vector<std::vector<OracleMismatch>> found(grid.size());
  std::exception_ptr failure;
  std::mutex failure_mu;

  parallel_for(grid.size(), threads, [&](std::size_t i) {
    try {
      const auto& g = grid[i];
      OrientedModel om = OrientedModel::orient(SemigroupModel::build(
          {IntVector{g[0], g[1]}, IntVector{g[2], g[3]}}, budget));
      auto report = [&](const char* check, std::string fast,
                        std::string oracle_ans) {
        found[i].push_back(OracleMismatch{g[0], g[1], g[2], g[3], check,
                                          std::move(fast),
                                          std::move(oracle_ans)});
      };

      for (int idx : {1, 2}) {
        std::vector<IntVector> fast = h_star(om, idx).points;
        std::vector<IntVector> brute = oracle::h_star_brute(
            om.bottom(), idx == 1 ? om.a1() : om.a2());
        if (fast != brute)
          report(idx == 1 ? "h_star_1" : "h_star_2", vectors_str(fast),
                 vectors_str(brute));
        Int formula = h_star_count(om, idx);
        if (Int(static_cast<long>(brute.size())) != formula)
          report(idx == 1 ? "h_star_count_1" : "h_star_count_2",
                 formula.get_str(), std::to_string(brute.size()));

        bool residue = detail::ag_residue(om, idx, mutate_ag1 && idx == 1);
        bool scan = detail::ag_pair_scan(om, idx);
        if (residue != scan)
          report(idx == 1 ? "ag_residue_1" : "ag_residue_2",
                 bool_str(residue), bool_str(scan));
      }

      const std::vector<IntVector>& basis = om.base().hilbert_basis();
      if (std::binary_search(basis.begin(), basis.end(), om.bottom())) {
        bool fast = is_ulrich(om, om.bottom()).ulrich;
        bool brute = oracle::ulrich_pairwise_brute(om, om.bottom());
        if (fast != brute)
          report("bottom_ulrich", bool_str(fast), bool_str(brute));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  std::vector<OracleMismatch> out;
  for (auto& per : found)
    for (auto& m : per) out.push_back(std::move(m));
  return out;
}

std::string mismatches_to_text(const std::vector<OracleMismatch>& ms) {
  std::ostringstream os;
  for (const OracleMismatch& m : ms)
    os << "(" << m.x1 << "," << m.y1 << "),(" << m.x2 << "," << m.y2 << ") "
       << m.check << ": fast=" << m.fast << " oracle=" << m.oracle << "\n";
  return os.str();
}

}  // namespace affsemi
