#include "affsemi/report.hpp"

#include <chrono>
#include <sstream>

#include "affsemi/errors.hpp"
#include "affsemi/trace.hpp"

namespace affsemi {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json vectors_to_json(const std::vector<IntVector>& vs) {
  ordered_json arr = ordered_json::array();
  for (const IntVector& v : vs) arr.push_back(vector_to_json(v));
  return arr;
}

std::vector<IntVector> vectors_from_json(const json& arr) {
  if (!arr.is_array()) throw InputError("expected an array of vectors");
  std::vector<IntVector> out;
  for (const auto& v : arr) out.push_back(vector_from_json(v));
  return out;
}

std::string join_vectors(const std::vector<IntVector>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << " ";
    os << vs[i].str();
  }
  return os.str();
}

}  // namespace

ordered_json int_to_json(const Int& v) {
  // losslessly representable in a 64-bit JSON number; otherwise a decimal
  // string, which every parser preserves
  if (v.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(v.get_si()));
  return ordered_json(v.get_str());
}

Int int_from_json(const json& v) {
  if (v.is_number_integer()) {
    std::int64_t raw = v.get<std::int64_t>();
    Int out;
    // mpz has no long long assignment; go through the decimal form
    out = std::to_string(raw);
    return out;
  }
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    if (s.empty()) throw InputError("empty string where an integer belongs");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw InputError("bad integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw InputError("bad integer literal: " + s);
    return Int(s);
  }
  throw InputError("expected an integer (number or decimal string), got " +
                   v.dump());
}

ordered_json vector_to_json(const IntVector& v) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(int_to_json(v[i]));
  return arr;
}

IntVector vector_from_json(const json& v) {
  if (!v.is_array() || v.empty())
    throw InputError("expected a nonempty integer vector, got " + v.dump());
  std::vector<Int> out;
  for (const auto& e : v) out.push_back(int_from_json(e));
  return IntVector(std::move(out));
}

std::vector<IntVector> rays_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("rays"))
    throw InputError("input document must be an object with a \"rays\" key");
  return vectors_from_json(doc["rays"]);
}

ClassificationReport analyze_rays(const std::vector<IntVector>& rays,
                                  const EnumerationBudget& budget) {
  auto start = std::chrono::steady_clock::now();

  SemigroupModel m = SemigroupModel::build(rays, budget);
  ClassificationReport r;
  r.rays = rays;
  r.hilbert_basis = m.hilbert_basis();
  r.omega_generators = m.omega_generators();
  r.slim = m.is_slim().slim;
  r.slim_witness = m.is_slim().witness;
  r.bottom = m.bottom_element();
  r.minimal_omega = m.minimal_omega_elements();
  r.gorenstein = m.is_gorenstein();

  NearlyGorensteinResult ng = is_nearly_gorenstein(m);
  r.nearly_gorenstein = ng.nearly;
  if (!ng.nearly) r.nearly_failing_targets = ng.failing_targets(m);

  if (m.dim() == 2) {
    OrientedModel om = OrientedModel::orient(m);
    D2Report d2;
    d2.oriented_rays = {om.a1(), om.a2()};
    d2.h_star_1 = h_star(om, 1).points;
    d2.h_star_2 = h_star(om, 2).points;
    d2.h_star_count_1 = h_star_count(om, 1);
    d2.h_star_count_2 = h_star_count(om, 2);
    d2.ag1 = is_ag(om, 1);
    d2.ag2 = is_ag(om, 2);
    d2.ulrich_elements = find_ulrich(om);
    d2.almost_gorenstein =
        d2.ulrich_elements.kind == SearchResult::Kind::AllOfOmega ||
        !d2.ulrich_elements.elements.empty();
    r.d2 = std::move(d2);
  }

  r.timing_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return r;
}

ordered_json report_to_json(const ClassificationReport& r) {
  ordered_json doc;
  doc["rays"] = vectors_to_json(r.rays);
  doc["hilbert_basis"] = vectors_to_json(r.hilbert_basis);
  doc["omega_generators"] = vectors_to_json(r.omega_generators);
  doc["slim"] = r.slim;
  if (r.slim_witness) doc["slim_witness"] = vector_to_json(*r.slim_witness);
  doc["bottom"] = r.bottom ? vector_to_json(*r.bottom) : ordered_json(nullptr);
  doc["minimal_omega"] = vectors_to_json(r.minimal_omega);
  doc["gorenstein"] = r.gorenstein;
  doc["nearly_gorenstein"] = r.nearly_gorenstein;
  if (!r.nearly_gorenstein)
    doc["nearly_failing_targets"] = vectors_to_json(r.nearly_failing_targets);
  if (r.d2) {
    ordered_json d2;
    d2["oriented_rays"] = vectors_to_json(r.d2->oriented_rays);
    d2["h_star_1"] = vectors_to_json(r.d2->h_star_1);
    d2["h_star_count_1"] = int_to_json(r.d2->h_star_count_1);
    d2["h_star_2"] = vectors_to_json(r.d2->h_star_2);
    d2["h_star_count_2"] = int_to_json(r.d2->h_star_count_2);
    d2["ag1"] = r.d2->ag1;
    d2["ag2"] = r.d2->ag2;
    ordered_json ul;
    bool all = r.d2->ulrich_elements.kind == SearchResult::Kind::AllOfOmega;
    ul["kind"] = all ? "all_of_omega" : "finite";
    if (!all) ul["elements"] = vectors_to_json(r.d2->ulrich_elements.elements);
    d2["ulrich_elements"] = std::move(ul);
    d2["almost_gorenstein"] = r.d2->almost_gorenstein;
    doc["d2"] = std::move(d2);
  }
  return doc;
}

ClassificationReport report_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("report must be an object");
  ClassificationReport r;
  r.rays = vectors_from_json(doc.at("rays"));
  r.hilbert_basis = vectors_from_json(doc.at("hilbert_basis"));
  r.omega_generators = vectors_from_json(doc.at("omega_generators"));
  r.slim = doc.at("slim").get<bool>();
  if (doc.contains("slim_witness"))
    r.slim_witness = vector_from_json(doc["slim_witness"]);
  if (!doc.at("bottom").is_null())
    r.bottom = vector_from_json(doc["bottom"]);
  r.minimal_omega = vectors_from_json(doc.at("minimal_omega"));
  r.gorenstein = doc.at("gorenstein").get<bool>();
  r.nearly_gorenstein = doc.at("nearly_gorenstein").get<bool>();
  if (doc.contains("nearly_failing_targets"))
    r.nearly_failing_targets = vectors_from_json(doc["nearly_failing_targets"]);
  if (doc.contains("d2")) {
    const json& d = doc["d2"];
    D2Report d2;
    d2.oriented_rays = vectors_from_json(d.at("oriented_rays"));
    d2.h_star_1 = vectors_from_json(d.at("h_star_1"));
    d2.h_star_count_1 = int_from_json(d.at("h_star_count_1"));
    d2.h_star_2 = vectors_from_json(d.at("h_star_2"));
    d2.h_star_count_2 = int_from_json(d.at("h_star_count_2"));
    d2.ag1 = d.at("ag1").get<bool>();
    d2.ag2 = d.at("ag2").get<bool>();
    const json& ul = d.at("ulrich_elements");
    if (ul.at("kind").get<std::string>() == "all_of_omega") {
      d2.ulrich_elements.kind = SearchResult::Kind::AllOfOmega;
    } else {
      d2.ulrich_elements.kind = SearchResult::Kind::FiniteSet;
      d2.ulrich_elements.elements = vectors_from_json(ul.at("elements"));
    }
    d2.almost_gorenstein = d.at("almost_gorenstein").get<bool>();
    r.d2 = std::move(d2);
  }
  return r;
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "rays:              " << join_vectors(r.rays) << "\n";
  os << "hilbert basis:     " << join_vectors(r.hilbert_basis) << "\n";
  os << "omega generators:  " << join_vectors(r.omega_generators) << "\n";
  os << "slim:              " << (r.slim ? "yes" : "no");
  if (r.slim_witness) os << "  (witness " << r.slim_witness->str() << ")";
  os << "\n";
  os << "bottom element:    "
     << (r.bottom ? r.bottom->str() : std::string("absent")) << "\n";
  os << "minimal omega:     " << join_vectors(r.minimal_omega) << "\n";
  os << "gorenstein:        " << (r.gorenstein ? "yes" : "no") << "\n";
  os << "nearly gorenstein: " << (r.nearly_gorenstein ? "yes" : "no");
  if (!r.nearly_gorenstein)
    os << "  (failing: " << join_vectors(r.nearly_failing_targets) << ")";
  os << "\n";
  if (r.d2) {
    os << "oriented rays:     " << join_vectors(r.d2->oriented_rays) << "\n";
    os << "H1*:               " << join_vectors(r.d2->h_star_1) << "  (count "
       << r.d2->h_star_count_1.get_str() << ")\n";
    os << "H2*:               " << join_vectors(r.d2->h_star_2) << "  (count "
       << r.d2->h_star_count_2.get_str() << ")\n";
    os << "AG1 / AG2:         " << (r.d2->ag1 ? "yes" : "no") << " / "
       << (r.d2->ag2 ? "yes" : "no") << "\n";
    os << "ulrich elements:   ";
    if (r.d2->ulrich_elements.kind == SearchResult::Kind::AllOfOmega)
      os << "all of omega";
    else if (r.d2->ulrich_elements.elements.empty())
      os << "none";
    else
      os << join_vectors(r.d2->ulrich_elements.elements);
    os << "\n";
    os << "almost gorenstein: " << (r.d2->almost_gorenstein ? "yes" : "no")
       << "\n";
  }
  return os.str();
}

}  // namespace affsemi
