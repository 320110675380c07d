#include "optb/json_io.hpp"

#include <stdexcept>

namespace optb {

using nlohmann::json;

namespace {

std::int64_t int_entry(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) +
                                ": expected an integer entry");
  }
  return j.get<std::int64_t>();
}

Mat2 raw_matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
      !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
    throw std::invalid_argument(std::string(what) +
                                ": expected [[a, b], [c, d]]");
  }
  return Mat2{int_entry(j[0][0], what), int_entry(j[0][1], what),
              int_entry(j[1][0], what), int_entry(j[1][1], what)};
}

Word word_from_json(const json& j, const char* what) {
  if (!j.is_string()) {
    throw std::invalid_argument(std::string(what) + ": expected a word string");
  }
  return Word::from_string(j.get<std::string>());
}

}  // namespace

json matrix_to_json(const Mat2& m) {
  return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

Mat2 matrix_from_json(const json& j) {
  const Mat2 m = raw_matrix_from_json(j, "matrix");
  if (!is_unimodular(m)) {
    throw std::invalid_argument("matrix: determinant must be +1 or -1");
  }
  return m;
}

json normal_form_to_json(const NormalForm& nf) {
  return json{{"n", matrix_to_json(nf.n)}, {"p", matrix_to_json(nf.p)}};
}

NormalForm normal_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("p")) {
    throw std::invalid_argument("normal_form: expected {\"n\": ..., \"p\": ...}");
  }
  return NormalForm{raw_matrix_from_json(j.at("n"), "normal_form.n"),
                    raw_matrix_from_json(j.at("p"), "normal_form.p")};
}

json certificate_to_json(const Certificate& cert) {
  json terms = json::array();
  for (const CertTerm& t : cert.terms) {
    terms.push_back(json{{"w", t.w.to_string()}, {"N", t.N}});
  }
  return json{{"matrix", matrix_to_json(cert.matrix)},
              {"normal_form", normal_form_to_json(cert.normal)},
              {"g", cert.g.to_string()},
              {"terms", std::move(terms)}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix") || !j.contains("normal_form") ||
      !j.contains("g") || !j.contains("terms")) {
    throw std::invalid_argument(
        "certificate: expected matrix, normal_form, g and terms fields");
  }
  Certificate cert;
  cert.matrix = matrix_from_json(j.at("matrix"));
  cert.normal = normal_form_from_json(j.at("normal_form"));
  cert.g = word_from_json(j.at("g"), "certificate.g");
  if (!j.at("terms").is_array()) {
    throw std::invalid_argument("certificate.terms: expected an array");
  }
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("w") || !t.contains("N")) {
      throw std::invalid_argument(
          "certificate.terms: expected {\"w\": ..., \"N\": ...} entries");
    }
    cert.terms.push_back(CertTerm{word_from_json(t.at("w"), "term.w"),
                                  int_entry(t.at("N"), "term.N")});
  }
  return cert;
}

json tunnel_verdict_to_json(const TunnelVerdict& v) {
  if (const auto* one = std::get_if<TunnelOne>(&v)) {
    return json{{"verdict", "tunnel-one"},
                {"m", one->m},
                {"conjugator", matrix_to_json(one->conjugator)}};
  }
  if (std::holds_alternative<ObstructedMod2>(v)) {
    return json{{"verdict", "obstructed-mod2"}};
  }
  return json{{"verdict", "unknown"},
              {"bound", std::get<TunnelUnknown>(v).bound}};
}

}  // namespace optb
