#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "optb/classify.hpp"
#include "optb/json_io.hpp"
#include "optb/monodromy.hpp"
#include "optb/torsion.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw BadInput("not a signed integer: '" + std::string(text) + "'");
  }
  return value;
}

optb::Mat2 parse_matrix_flag(const std::string& flag) {
  std::vector<std::int64_t> entries;
  std::string_view rest = flag;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    std::string_view field = rest.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    entries.push_back(parse_int(field));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (entries.size() != 4) {
    throw BadInput("matrix flag must be four comma-separated integers "
                   "\"a,b,c,d\"; got '" + flag + "'");
  }
  const optb::Mat2 m{entries[0], entries[1], entries[2], entries[3]};
  if (!optb::is_unimodular(m)) {
    throw BadInput("matrix determinant must be +1 or -1; got " +
                   std::to_string(optb::det(m)));
  }
  return m;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadInput("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

optb::Mat2 matrix_from_inputs(const std::string& flag,
                              const std::string& file) {
  if (flag.empty() == file.empty()) {
    throw BadInput("provide exactly one of --matrix and --file");
  }
  if (!flag.empty()) return parse_matrix_flag(flag);
  const json j = load_json_file(file);
  if (!j.is_object() || !j.contains("matrix")) {
    throw BadInput("matrix file must contain {\"matrix\": [[a,b],[c,d]]}");
  }
  try {
    return optb::matrix_from_json(j.at("matrix"));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw BadInput("cannot write file: " + out_path);
    out << text;
  }
}

void require_monodromy(const optb::Mat2& m) {
  if (optb::det(m) != 1) {
    throw BadInput("monodromy matrix must have determinant +1; got " +
                   std::to_string(optb::det(m)));
  }
}

int run_classify(const optb::Mat2& m, std::int64_t m_bound,
                 std::int64_t p_bound, const std::string& out) {
  require_monodromy(m);
  json j{{"trace", optb::trace(m)},
         {"biorderable", optb::trace(m) >= 2},
         {"geometry", optb::geometry_name(optb::geometry_type(m))},
         {"tunnel", optb::tunnel_verdict_to_json(
                        optb::tunnel_one_test(m, m_bound, p_bound))}};
  emit(j, out);
  return kExitOk;
}

int run_certify(const optb::Mat2& m, const std::string& out) {
  require_monodromy(m);
  const optb::Decision d = optb::decide(m);
  if (std::holds_alternative<optb::Biorderable>(d)) {
    emit(json{{"result", "biorderable"}}, out);
  } else {
    emit(optb::certificate_to_json(std::get<optb::Certificate>(d)), out);
  }
  return kExitOk;
}

int run_verify(const std::string& path) {
  const json j = load_json_file(path);
  optb::Certificate cert;
  try {
    cert = optb::certificate_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  const bool structural = optb::normal_form_consistent(cert);
  const bool fiber = structural && optb::verify_fiber(cert);
  const bool ambient = structural && optb::verify_ambient(cert);
  const bool valid = structural && fiber && ambient;
  json report{{"structural", structural},
              {"fiber", fiber},
              {"ambient", ambient},
              {"valid", valid}};
  emit(report, "");
  return valid ? kExitOk : kExitVerifyFailed;
}

int run_lift(const optb::Mat2& m, const std::string& out) {
  require_monodromy(m);
  const optb::MappingClass mc = optb::lift(m);
  json j{{"img_x", mc.image_x().to_string()},
         {"img_y", mc.image_y().to_string()},
         {"abelianization", optb::matrix_to_json(optb::abelianization(mc))}};
  emit(j, out);
  return kExitOk;
}

int run_normal_form(const optb::Mat2& m, std::int64_t bound,
                    const std::string& out) {
  require_monodromy(m);
  const optb::NormalForm nf = optb::morimoto_normal_form(m, bound);
  json j{{"matrix", optb::matrix_to_json(m)},
         {"normal_form", optb::normal_form_to_json(nf)}};
  emit(j, out);
  return kExitOk;
}

int run_slope_word(std::int64_t p, std::int64_t q) {
  try {
    std::cout << optb::slope_word(p, q).to_string() << "\n";
  } catch (const std::domain_error& e) {
    throw BadInput(e.what());
  }
  return kExitOk;
}

int run_sweep(std::int64_t bound) {
  std::size_t total = 0;
  std::size_t biorderable = 0;
  std::size_t torsion = 0;
  std::size_t failures = 0;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      for (std::int64_t c = -bound; c <= bound; ++c) {
        for (std::int64_t d = -bound; d <= bound; ++d) {
          const optb::Mat2 m{a, b, c, d};
          if (optb::det(m) != 1) continue;
          ++total;
          std::ostringstream line;
          line << a << "," << b << "," << c << "," << d
               << " trace=" << optb::trace(m)
               << " geometry=" << optb::geometry_name(optb::geometry_type(m));
          if (optb::trace(m) >= 2) {
            ++biorderable;
            line << " decision=biorderable";
          } else {
            try {
              const optb::Certificate cert = optb::synthesize(m);
              const bool fiber = optb::verify_fiber(cert);
              const bool ambient = optb::verify_ambient(cert);
              if (fiber && ambient) {
                ++torsion;
              } else {
                ++failures;
              }
              line << " decision=torsion terms=" << cert.terms.size()
                   << " fiber=" << (fiber ? "ok" : "FAIL")
                   << " ambient=" << (ambient ? "ok" : "FAIL");
            } catch (const optb::SynthesisError& e) {
              ++failures;
              line << " decision=torsion synthesis=FAIL (" << e.what() << ")";
            }
          }
          std::cout << line.str() << "\n";
        }
      }
    }
  }
  std::cout << "sweep complete: matrices=" << total
            << " biorderable=" << biorderable << " torsion=" << torsion
            << " failures=" << failures << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-orderability and generalized-torsion certificates for "
               "once-punctured torus bundles"};
  app.set_version_flag("--version", "optb 0.1.0");
  app.require_subcommand(1);

  std::string matrix_flag;
  std::string matrix_file;
  std::string out_path;
  std::string cert_path;
  std::int64_t nf_bound = 5;
  std::int64_t m_bound = 8;
  std::int64_t p_bound = 8;
  std::int64_t sweep_bound = 5;
  std::int64_t slope_p = 0;
  std::int64_t slope_q = 0;

  auto add_matrix_opts = [&](CLI::App* cmd) {
    cmd->add_option("-m,--matrix", matrix_flag,
                    "matrix entries \"a,b,c,d\" (row-major)");
    cmd->add_option("-f,--file", matrix_file,
                    "JSON file containing {\"matrix\": [[a,b],[c,d]]}");
    cmd->add_option("-o,--output", out_path, "write JSON output to this file");
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "trace, bi-orderability, geometry type and tunnel verdict");
  add_matrix_opts(classify);
  classify->add_option("--m-bound", m_bound, "tunnel family trace bound");
  classify->add_option("--p-bound", p_bound, "tunnel conjugator entry bound");

  CLI::App* certify = app.add_subcommand(
      "certify", "emit a generalized-torsion certificate (trace < 2)");
  add_matrix_opts(certify);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a certificate file with both verifiers");
  verify->add_option("certificate", cert_path, "certificate JSON file")
      ->required();

  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "generator images and abelianization of the lifted monodromy");
  add_matrix_opts(lift_cmd);

  CLI::App* normal_form = app.add_subcommand(
      "normal-form", "bounded-search normal form and its conjugator");
  add_matrix_opts(normal_form);
  normal_form->add_option("--bound", nf_bound, "conjugator entry bound");

  CLI::App* slope = app.add_subcommand(
      "slope-word", "cutting-sequence cyclic word of the (p, q) simple loop");
  slope->add_option("-p", slope_p, "x-axis winding")->required();
  slope->add_option("-q", slope_q, "y-axis winding")->required();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "classify, certify and verify every det +1 matrix in a box");
  sweep->add_option("--bound", sweep_bound, "max |entry|");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (classify->parsed()) {
      return run_classify(matrix_from_inputs(matrix_flag, matrix_file),
                          m_bound, p_bound, out_path);
    }
    if (certify->parsed()) {
      return run_certify(matrix_from_inputs(matrix_flag, matrix_file),
                         out_path);
    }
    if (verify->parsed()) return run_verify(cert_path);
    if (lift_cmd->parsed()) {
      return run_lift(matrix_from_inputs(matrix_flag, matrix_file), out_path);
    }
    if (normal_form->parsed()) {
      return run_normal_form(matrix_from_inputs(matrix_flag, matrix_file),
                             nf_bound, out_path);
    }
    if (slope->parsed()) return run_slope_word(slope_p, slope_q);
    if (sweep->parsed()) return run_sweep(sweep_bound);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitBadInput;
}
