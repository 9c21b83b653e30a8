#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "affsemi/errors.hpp"
#include "affsemi/report.hpp"
#include "affsemi/survey.hpp"
#include "affsemi/ulrich.hpp"
#include "json.hpp"

namespace {

using affsemi::EnumerationBudget;
using affsemi::Int;
using affsemi::IntVector;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw affsemi::InputError("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<IntVector> load_rays(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw affsemi::InputError(std::string("cannot parse input document: ") +
                              e.what());
  }
  return affsemi::rays_from_json(doc);
}

IntVector parse_element(const std::string& text) {
  std::vector<Int> entries;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw affsemi::InputError("bad element: " + text);
      for (std::size_t i = cur[0] == '-' ? 1 : 0; i < cur.size(); ++i)
        if (cur[i] < '0' || cur[i] > '9')
          throw affsemi::InputError("bad element: " + text);
      entries.emplace_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (entries.empty()) throw affsemi::InputError("bad element: " + text);
  return IntVector(std::move(entries));
}

struct Options {
  std::string format = "text";
  long budget = 1000000;
  unsigned threads = 1;

  EnumerationBudget make_budget() const {
    if (budget <= 0) throw affsemi::InputError("budget must be positive");
    return EnumerationBudget{Int(budget)};
  }
};

void require_format(const Options& opt,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (opt.format == a) return;
  throw affsemi::InputError("format \"" + opt.format +
                            "\" does not apply to this command");
}

int run(int argc, char** argv) {
  CLI::App app{"normal simplicial affine semigroup classifier"};
  app.require_subcommand(1);
  // global flags stay valid after the subcommand name
  app.fallthrough();

  Options opt;
  app.add_option("--budget", opt.budget,
                 "enumeration limit (cells scale at 16x)")
      ->capture_default_str();
  app.add_option("--format", opt.format, "text, structured or csv")
      ->check(CLI::IsMember({"text", "structured", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "sweep worker threads")
      ->capture_default_str();

  std::string input_path = "-";
  std::string element_text;
  long max_bound = 10;
  bool require_ones = false;
  bool csv_flag = false;
  bool mutate_ag1 = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full classification report for one instance");
  analyze->add_option("input", input_path, "JSON file with \"rays\", or -");

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Hilbert basis for one instance");
  hilbert->add_option("input", input_path, "JSON file with \"rays\", or -");

  CLI::App* check = app.add_subcommand(
      "check-ulrich", "pairwise covering verdict for one element");
  check->add_option("input", input_path, "JSON file with \"rays\", or -");
  check->add_option("--element", element_text, "candidate, e.g. 16,3")
      ->required();

  CLI::App* survey =
      app.add_subcommand("survey", "classification table over a ray grid");
  survey->add_option("--max", max_bound, "entry bound for the grid")
      ->required();
  survey->add_flag("--require-ones-interior", require_ones,
                   "keep only instances whose bottom element is (1,1)");
  survey->add_flag("--csv", csv_flag, "shorthand for --format csv");

  CLI::App* diff = app.add_subcommand(
      "oracle-diff", "compare fast paths against brute-force references");
  diff->add_option("--max", max_bound, "entry bound for the grid")
      ->required();
  diff->add_flag("--mutate-ag1", mutate_ag1)->group("");  // harness-only

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    require_format(opt, {"text", "structured"});
    affsemi::ClassificationReport r =
        affsemi::analyze_rays(load_rays(input_path), opt.make_budget());
    if (opt.format == "structured")
      std::cout << affsemi::report_to_json(r).dump(2) << "\n";
    else
      std::cout << affsemi::report_to_text(r);
    std::cerr << "timing_ms " << r.timing_ms << "\n";
    return 0;
  }

  if (hilbert->parsed()) {
    require_format(opt, {"text", "structured"});
    affsemi::SemigroupModel m = affsemi::SemigroupModel::build(
        load_rays(input_path), opt.make_budget());
    if (opt.format == "structured") {
      nlohmann::ordered_json doc;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const IntVector& c : m.hilbert_basis())
        arr.push_back(affsemi::vector_to_json(c));
      doc["hilbert_basis"] = std::move(arr);
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const IntVector& c : m.hilbert_basis())
        std::cout << c.str() << "\n";
    }
    return 0;
  }

  if (check->parsed()) {
    require_format(opt, {"text", "structured"});
    affsemi::OrientedModel om =
        affsemi::OrientedModel::orient(affsemi::SemigroupModel::build(
            load_rays(input_path), opt.make_budget()));
    affsemi::UlrichVerdict v = affsemi::is_ulrich(om, parse_element(element_text));
    if (opt.format == "structured") {
      nlohmann::ordered_json doc;
      doc["element"] = affsemi::vector_to_json(v.element);
      doc["ulrich"] = v.ulrich;
      if (v.violating_pair) {
        doc["violating_pair"] = nlohmann::ordered_json::array(
            {affsemi::vector_to_json(v.violating_pair->first),
             affsemi::vector_to_json(v.violating_pair->second)});
      }
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "element " << v.element.str() << ": "
                << (v.ulrich ? "ulrich" : "not ulrich");
      if (v.violating_pair)
        std::cout << "  (uncovered sum " << v.violating_pair->first.str()
                  << " + " << v.violating_pair->second.str() << ")";
      std::cout << "\n";
    }
    return 0;
  }

  if (survey->parsed()) {
    if (csv_flag) opt.format = "csv";
    affsemi::GridSpec spec{max_bound, require_ones};
    std::vector<affsemi::SurveyRow> rows =
        affsemi::survey_run(spec, opt.make_budget(), opt.threads);
    if (opt.format == "csv")
      std::cout << affsemi::survey_to_csv(rows);
    else if (opt.format == "structured")
      std::cout << affsemi::survey_to_json(rows).dump(2) << "\n";
    else
      std::cout << affsemi::survey_to_text(rows);
    return 0;
  }

  // oracle-diff
  affsemi::GridSpec spec{max_bound, false};
  std::vector<affsemi::OracleMismatch> ms =
      affsemi::oracle_diff_run(spec, opt.make_budget(), mutate_ag1,
                               opt.threads);
  std::cout << affsemi::mismatches_to_text(ms);
  std::cerr << ms.size() << " mismatch(es) over " << max_bound << "-bounded grid\n";
  return ms.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const affsemi::LimitExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const affsemi::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const affsemi::InvalidRaysError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const affsemi::ZeroVectorError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const affsemi::DimensionMismatchError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const affsemi::NotInOmegaError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const affsemi::InapplicableError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const affsemi::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
