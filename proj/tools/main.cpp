// ortho-hecke: command-line front end.
//
// Subcommands:
//   classify  stratum/component data of an eps-stable submodule
//   census    Lagrangian stratum counts over a finite field
//   hecke     one orthogonal Hecke transform, with certificates
//   curve     splitting types along a pencil of Lagrangians over a plane
//   tangent   tangent dimensions (plus skew/duality data when applicable)
//   verify    named invariant suites with seeded randomness
//
// Exit codes: 0 success, 1 check failure, 2 input error.  Matrix and
// submodule files use the JSON shapes produced by the library's serializers;
// pass `-` to read a file argument from stdin.

#include <ortho_hecke/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ortho_hecke;

Json read_json_input(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);
}

// Gram file: either a matrix literal {"field":..., "rows":...} or bare rows.
template <class S>
Mat<S> load_gram(const std::string& path, const FieldSpec& field) {
  const Json doc = read_json_input(path);
  if (doc.is_object()) return matrix_literal_from_json<S>(doc, field);
  return matrix_from_json<S>(doc, field);
}

// Submodule file: the full {"r","field","basis"} shape, or bare basis rows
// when the command line already pins r and the field.
template <class S>
Submodule<S> load_submodule(const Json& doc, int r, const FieldSpec& field) {
  if (doc.is_object()) {
    if (doc.contains("r") && doc.at("r").get<int>() != r)
      throw std::invalid_argument("submodule file disagrees with --r");
    return submodule_from_json<S>(doc, field);
  }
  const Ambient<S> amb{r, field};
  return make_submodule(amb, matrix_from_json<S>(doc, field));
}

FieldSpec field_of_document(const Json& doc, const std::string& fallback) {
  if (doc.is_object() && doc.contains("field"))
    return FieldSpec::parse(doc.at("field").get<std::string>());
  return FieldSpec::parse(fallback);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --- classify ---------------------------------------------------------------

template <class S>
int run_classify(int r, const FieldSpec& field, const Json& doc) {
  const Submodule<S> L = load_submodule<S>(doc, r, field);
  if (L.dim() == r) {
    const auto ef = extend_form(hyperbolic_space<S>(r, field));
    emit(stratum_report_to_json(stratum_data(ef, L)));
  } else {
    emit(stratum_report_to_json(stratum_data(L)));
  }
  return 0;
}

// --- census -----------------------------------------------------------------

int run_census(int r, const FieldSpec& field, const std::string& gram_path, bool brute, bool csv) {
  if (field.kind != FieldSpec::Kind::prime)
    throw std::invalid_argument("census requires a finite field (--field fp:P)");
  const QuadraticSpace<Fp> qs = gram_path.empty()
                                    ? hyperbolic_space<Fp>(r, field)
                                    : make_quadratic_space(r, field, load_gram<Fp>(gram_path, field));
  const auto res = census(extend_form(qs), brute);
  if (csv)
    std::cout << census_to_csv(res);
  else
    emit(census_to_json(res));
  return 0;
}

// --- hecke ------------------------------------------------------------------

template <class S>
int run_hecke(const std::vector<int>& degrees, const std::string& gram_path, const Json& doc,
              const FieldSpec& field) {
  const int r = static_cast<int>(degrees.size());
  const SplitOrthogonalBundle<S> E =
      (gram_path.empty() || gram_path == "hyperbolic")
          ? hyperbolic_bundle<S>(degrees, field)
          : make_split_bundle<S>(degrees, field, load_gram<S>(gram_path, field));
  const Submodule<S> L = load_submodule<S>(doc, r, field);
  emit(hecke_report_to_json(hecke_orthogonal(E, L)));
  return 0;
}

// --- curve ------------------------------------------------------------------

int run_curve(const std::vector<int>& degrees, const Json& plane_doc,
              const std::vector<std::string>& sample_args, const FieldSpec& field) {
  if (field.kind != FieldSpec::Kind::rationals)
    throw std::invalid_argument("curve sampling is implemented over q");
  const auto E = hyperbolic_bundle<Rat>(degrees, field);
  const Mat<Rat> plane = plane_doc.is_object() ? matrix_literal_from_json<Rat>(plane_doc, field)
                                               : matrix_from_json<Rat>(plane_doc, field);
  std::vector<std::optional<Rat>> samples;
  for (const std::string& s : sample_args)
    samples.push_back(s == "inf" ? std::nullopt
                                 : std::optional<Rat>(scalar_from_string<Rat>(s, field)));
  Json out = Json::array();
  for (const auto& type : hecke_curve(E, plane, samples)) out.push_back(splitting_to_json(type));
  emit(out);
  return 0;
}

// --- tangent ----------------------------------------------------------------

template <class S>
int run_tangent(int r, const FieldSpec& field, const Json& doc) {
  const Submodule<S> L = load_submodule<S>(doc, r, field);
  TangentReport rep = tangent_dim(L);
  if (L.dim() == r) {
    const auto ef = extend_form(hyperbolic_space<S>(r, field));
    if (is_lagrangian(ef, L).ok) {
      try {
        rep = duality_check(ef, L);
      } catch (const std::invalid_argument&) {
        // not on a largest stratum: the base dimensions still apply
      }
    }
  }
  emit(tangent_report_to_json(rep));
  return 0;
}

// --- verify -----------------------------------------------------------------

int run_verify(const SuiteConfig& cfg) {
  const SuiteReport rep = run_suite(cfg);
  emit(rep.to_json());
  std::cerr << "suite " << cfg.suite << ": " << rep.checks.size() << " checks, "
            << (rep.all_pass() ? "all passed" : "FAILURES") << " (" << rep.wall_seconds << "s)\n";
  return rep.all_pass() ? 0 : 1;
}

template <class Fn>
int dispatch_field(const FieldSpec& field, Fn&& fn) {
  if (field.kind == FieldSpec::Kind::rationals) return fn.template operator()<Rat>();
  return fn.template operator()<Fp>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lagrangian submodule and orthogonal Hecke calculator"};
  app.require_subcommand(1);

  std::string field_arg = "q";
  std::string basis_path, gram_path, plane_path, lagrangian_path;
  int r = 0;
  bool brute = false, csv = false;
  std::vector<int> degrees;
  std::vector<std::string> sample_args;
  SuiteConfig cfg;

  auto* classify = app.add_subcommand("classify", "stratum data of an eps-stable submodule");
  classify->add_option("--field", field_arg, "q or fp:P")->required();
  classify->add_option("--r", r, "rank of V")->required();
  classify->add_option("--basis", basis_path, "submodule JSON file, or - for stdin")->required();

  auto* census_cmd = app.add_subcommand("census", "Lagrangian stratum counts over fp:P");
  census_cmd->add_option("--field", field_arg, "fp:P")->required();
  census_cmd->add_option("--r", r, "rank of V")->required();
  census_cmd->add_option("--gram", gram_path, "Gram matrix JSON file (default: hyperbolic)");
  census_cmd->add_flag("--brute-force", brute, "also count by scanning all submodules");
  census_cmd->add_flag("--csv", csv, "CSV table instead of JSON");

  auto* hecke_cmd = app.add_subcommand("hecke", "one orthogonal Hecke transform");
  hecke_cmd->add_option("--degrees", degrees, "splitting type a1,...,ar")
      ->required()
      ->delimiter(',');
  hecke_cmd->add_option("--gram", gram_path, "Gram matrix JSON file, or 'hyperbolic'");
  hecke_cmd->add_option("--lagrangian", lagrangian_path, "Lagrangian JSON file, or - for stdin")
      ->required();

  auto* curve_cmd = app.add_subcommand("curve", "types along a pencil over an isotropic plane");
  curve_cmd->add_option("--degrees", degrees, "splitting type a1,...,ar")
      ->required()
      ->delimiter(',');
  curve_cmd->add_option("--plane", plane_path, "r x 2 plane JSON file, or - for stdin")->required();
  curve_cmd->add_option("--samples", sample_args, "pencil parameters c1,c2,...,inf")
      ->required()
      ->delimiter(',');

  auto* tangent_cmd = app.add_subcommand("tangent", "tangent dimensions of a submodule");
  tangent_cmd->add_option("--field", field_arg, "q or fp:P")->required();
  tangent_cmd->add_option("--r", r, "rank of V")->required();
  tangent_cmd->add_option("--basis", basis_path, "submodule JSON file, or - for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
  verify_cmd->add_option("--suite", cfg.suite, "all, or one of the named suites");
  verify_cmd->add_option("--trials", cfg.trials, "random instances per randomized check");
  verify_cmd->add_option("--seed", cfg.seed, "RNG seed");
  verify_cmd->add_option("--max-rank", cfg.max_rank, "rank cap for random instances");
  verify_cmd->add_option("--max-degree", cfg.max_degree, "degree cap for random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      const Json doc = read_json_input(basis_path);
      const FieldSpec field = field_of_document(doc, field_arg);
      if (!(field == FieldSpec::parse(field_arg)))
        throw std::invalid_argument("basis file disagrees with --field");
      return dispatch_field(field, [&]<class S>() { return run_classify<S>(r, field, doc); });
    }
    if (census_cmd->parsed())
      return run_census(r, FieldSpec::parse(field_arg), gram_path, brute, csv);
    if (hecke_cmd->parsed()) {
      const Json doc = read_json_input(lagrangian_path);
      const FieldSpec field = field_of_document(doc, "q");
      return dispatch_field(field,
                            [&]<class S>() { return run_hecke<S>(degrees, gram_path, doc, field); });
    }
    if (curve_cmd->parsed()) {
      const Json plane_doc = read_json_input(plane_path);
      return run_curve(degrees, plane_doc, sample_args, field_of_document(plane_doc, "q"));
    }
    if (tangent_cmd->parsed()) {
      const Json doc = read_json_input(basis_path);
      const FieldSpec field = field_of_document(doc, field_arg);
      if (!(field == FieldSpec::parse(field_arg)))
        throw std::invalid_argument("basis file disagrees with --field");
      return dispatch_field(field, [&]<class S>() { return run_tangent<S>(r, field, doc); });
    }
    if (verify_cmd->parsed()) return run_verify(cfg);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
