#include "fanokit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fanokit/json_io.hpp"

namespace fanokit::cli {

namespace {

constexpr const char* kPrimeFieldNote =
    "prime fields are a verification device; the underlying theorems assume characteristic zero";

struct Options {
  std::string field = "Q";
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000000;
  std::string variant = "paper";
  bool pretty = false;
  bool json = true;

  std::vector<std::string> inputs;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::size_t r = 1;
  std::string chart;
  unsigned m = 0;
  bool model = false;
  bool random = false;
  std::uint64_t iterations = 100000;

  // certify
  unsigned d = 3;
  unsigned base_r = 0;
  long t = -1;
  std::optional<std::string> cert_n;
  std::optional<std::string> cert_k;
  std::string mbar = "1";
  std::string mu = "1";
  std::string base_degree = "1";
  std::string fiber_degree = "1";
  std::optional<std::string> m_cap;
};

std::string read_input(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream file(spec.substr(1));
    if (!file) throw PreconditionError("cannot open input file '" + spec.substr(1) + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
  return spec;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

std::string trimmed(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

mpz_class integer(const std::string& text, const char* what) {
  mpz_class v;
  if (text.empty() || v.set_str(text, 10) != 0) throw ParseError(std::string("malformed integer for ") + what, 0);
  return v;
}

/// The largest x-index used in a polynomial text.
std::size_t infer_ambient(const std::string& text) {
  std::size_t top = 0;
  bool any = false;
  for (const auto& id : scan_identifiers(text)) {
    if (id.size() > 1 && id[0] == 'x' &&
        std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      top = std::max<std::size_t>(top, std::stoul(id.substr(1)));
      any = true;
    }
  }
  if (!any) throw ParseError("the polynomial uses no coordinates x0, x1, ...", 0);
  return top;
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in) : o_(o), in_(in), field_(parse_field_spec(o.field)) {}

  Json dispatch(const std::string& cmd) {
    if (cmd == "plucker") return plucker_from(frame(0));
    if (cmd == "chart") return chart();
    if (cmd == "semple") return to_json(semple_map(semple_point_from_json(json(0), field_)));
    if (cmd == "unproject") return to_json(inverse_projection(plucker_from_json(json(0), field_)));
    if (cmd == "dkn-basis") return dkn_basis();
    if (cmd == "stratum") return Json{{"stratum", secant_stratum(matrix_from_json(json(0), field_))}};
    if (cmd == "osc-dim") return Json{{"k", need_k()}, {"n", need_n()}, {"r", o_.r}, {"dimension", osculating_dimension(need_k(), need_n(), o_.r)}};
    if (cmd == "osc-rank") return Json{{"k", need_k()}, {"n", need_n()}, {"r", o_.r}, {"rank", osculating_rank_empirical(need_k(), need_n(), o_.r)}};
    if (cmd == "osc-hyperplane") return to_json(osculating_hyperplane(frame(0)));
    if (cmd == "rnc") return rnc();
    if (cmd == "fano-eqs") return to_json(fano_equations(hypersurface(0), need_k(), chart_index(hypersurface(0).n())));
    if (cmd == "find-planes") return find_planes();
    if (cmd == "check-plane") return Json{{"contains", contains_plane(hypersurface(0), plucker_from_json(json(1), field_))}};
    if (cmd == "smooth-along") return smooth_along();
    if (cmd == "family-fano") return family_fano();
    if (cmd == "section-system") return to_json(section_system(family(0), need_k(), o_.m));
    if (cmd == "section-search") return section_search();
    if (cmd == "certify") return certify_bundle();
    throw PreconditionError("unknown subcommand '" + cmd + "'");
  }

 private:
  const std::string& input(std::size_t i) const {
    if (i >= o_.inputs.size()) throw PreconditionError("missing input argument " + std::to_string(i + 1));
    return o_.inputs[i];
  }
  std::string text(std::size_t i) const { return trimmed(read_input(input(i), in_)); }
  Json json(std::size_t i) const { return parse_json(text(i)); }
  PlaneFrame frame(std::size_t i) const { return PlaneFrame(matrix_from_json(json(i), field_)); }
  Hypersurface hypersurface(std::size_t i) const {
    const std::string t = text(i);
    return Hypersurface::parse(t, o_.n.value_or(infer_ambient(t)), field_);
  }
  HypersurfaceFamily family(std::size_t i) const { return family_from_json(json(i), field_); }
  std::size_t need_k() const {
    if (!o_.k) throw PreconditionError("--k is required");
    return *o_.k;
  }
  std::size_t need_n() const {
    if (!o_.n) throw PreconditionError("--n is required");
    return *o_.n;
  }
  MultiIndex chart_index(std::size_t n) const {
    return o_.chart.empty() ? MultiIndex::leading(need_k() + 1, n) : MultiIndex::parse(o_.chart, n);
  }
  double budget() const { return static_cast<double>(o_.budget); }

  static Json plucker_from(const PlaneFrame& f) { return to_json(plucker_from_matrix(f)); }

  Json chart() const {
    const PluckerPoint p = plucker_from_json(json(0), field_);
    const MultiIndex index = o_.chart.empty() ? p.leading_index() : MultiIndex::parse(o_.chart, p.n());
    Json out = to_json(chart_normalize(p, index));
    out["chart"] = index.to_string();
    return out;
  }

  Json dkn_basis() const {
    const auto basis = basis_d_kn(need_k(), need_n(), field_);
    return Json{{"k", need_k()}, {"n", need_n()}, {"count", basis.size()}, {"forms", to_json(basis)}};
  }

  Json rnc() const {
    if (o_.model) return to_json(rnc_model(need_k(), o_.r, field_));
    return to_json(rnc_through(frame(0), frame(1)));
  }

  Json find_planes() const {
    const Hypersurface h = hypersurface(0);
    const auto planes = enumerate_planes(h, need_k(), budget());
    Json list = Json::array();
    for (const auto& p : planes) list.push_back(to_json(p));
    return Json{{"k", need_k()},
                {"n", h.n()},
                {"field", to_json(field_)},
                {"work", enumeration_work(h, need_k()).get_str()},
                {"count", planes.size()},
                {"planes", std::move(list)},
                {"note", kPrimeFieldNote}};
  }

  Json smooth_along() const {
    const Hypersurface h = hypersurface(0);
    return to_json(smooth_along_plane(h, plucker_from_json(json(1), field_), budget()));
  }

  Json family_fano() const {
    const HypersurfaceFamily fam = family(0);
    return to_json(relative_fano_equations(fam, need_k(), chart_index(fam.n())));
  }

  Json section_search() const {
    const SectionSystem sys = section_system(family(0), need_k(), o_.m);
    SectionSearchOptions options;
    options.budget = budget();
    options.random = o_.random;
    options.seed = o_.seed;
    options.iterations = o_.iterations;
    Json out = to_json(solve_section_brute(sys, options));
    out["note"] = kPrimeFieldNote;
    return out;
  }

  Json certify_bundle() const {
    CertifyInputs in;
    in.d = o_.d;
    in.r = o_.base_r;
    in.t = o_.t;
    if (o_.cert_n) in.n = integer(*o_.cert_n, "--n");
    if (o_.cert_k) in.k = integer(*o_.cert_k, "--k");
    in.mbar = integer(o_.mbar, "--mbar");
    in.mu = integer(o_.mu, "--mu");
    in.base_degree = integer(o_.base_degree, "--base-degree");
    in.fiber_degree = integer(o_.fiber_degree, "--fiber-degree");
    in.variant = parse_morin_variant(o_.variant);
    if (o_.m_cap) in.m_cap = integer(*o_.m_cap, "--m-cap");
    return to_json(certify(in));
  }

  const Options& o_;
  std::istream& in_;
  Field field_;
};

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Exact computations on Grassmannians, Fano schemes of hypersurfaces and unirationality bounds",
               "fanokit"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--field", o.field, "Q or p=<prime>");
  app.add_option("--seed", o.seed, "seed for randomized choices");
  app.add_option("--budget", o.budget, "work budget for exhaustive searches")->check(CLI::PositiveNumber);
  app.add_option("--variant", o.variant, "Morin bound variant")->check(CLI::IsMember({"paper", "expected_dimension"}));
  app.add_flag("--json", o.json, "emit JSON (default)");
  app.add_flag("--pretty", o.pretty, "indent the JSON output");

  const auto inputs = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("inputs", o.inputs, what + " (inline, @file or - for stdin)")->required()->allow_extra_args(false);
  };
  const auto with_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "plane dimension"); };
  const auto with_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "ambient dimension"); };

  inputs(app.add_subcommand("plucker", "Plucker coordinates of a frame"), "matrix JSON");
  auto* chart = app.add_subcommand("chart", "chart matrix of a Plucker point");
  inputs(chart, "Plucker point JSON");
  chart->add_option("--index", o.chart, "chart multi-index, e.g. 1,2");
  inputs(app.add_subcommand("semple", "image of a chart point under the Semple map"), "Semple point JSON");
  inputs(app.add_subcommand("unproject", "inverse projection of a Plucker point"), "Plucker point JSON");
  auto* dkn = app.add_subcommand("dkn-basis", "basis of the linear system of maximal minors");
  with_k(dkn);
  with_n(dkn);
  inputs(app.add_subcommand("stratum", "secant stratum of an x-block"), "matrix JSON");
  for (const char* name : {"osc-dim", "osc-rank"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "osc-dim" ? "dimension of the osculating space"
                                                                        : "jet rank of the Semple parametrization");
    with_k(sub);
    with_n(sub);
    sub->add_option("--r", o.r, "osculation order");
  }
  inputs(app.add_subcommand("osc-hyperplane", "osculating hyperplane of an (n-k-1)-plane"), "matrix JSON");
  auto* rnc = app.add_subcommand("rnc", "rational normal curve through two planes");
  rnc->add_option("inputs", o.inputs, "two frame matrices")->allow_extra_args(false);
  rnc->add_flag("--model", o.model, "the model curve in G(k, k+r+1)");
  with_k(rnc);
  rnc->add_option("--r", o.r, "model parameter r");
  auto* fano = app.add_subcommand("fano-eqs", "Fano equations on a chart");
  inputs(fano, "polynomial");
  with_k(fano);
  with_n(fano);
  fano->add_option("--chart", o.chart, "chart multi-index");
  auto* find = app.add_subcommand("find-planes", "all F_p-rational k-planes on a hypersurface");
  inputs(find, "polynomial");
  with_k(find);
  with_n(find);
  auto* check = app.add_subcommand("check-plane", "does the hypersurface contain the plane");
  inputs(check, "polynomial and Plucker point JSON");
  with_n(check);
  auto* smooth = app.add_subcommand("smooth-along", "smoothness of a hypersurface along a plane");
  inputs(smooth, "polynomial and Plucker point JSON");
  with_n(smooth);
  auto* ffano = app.add_subcommand("family-fano", "relative Fano equations of a family");
  inputs(ffano, "family JSON");
  with_k(ffano);
  ffano->add_option("--chart", o.chart, "chart multi-index");
  for (const char* name : {"section-system", "section-search"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "section-system" ? "equations of the section ansatz"
                                                                               : "search for a section");
    inputs(sub, "family JSON");
    with_k(sub);
    sub->add_option("--m", o.m, "ansatz degree")->required();
    if (std::string(name) == "section-search") {
      sub->add_flag("--random", o.random, "random sampling instead of exhaustive search");
      sub->add_option("--iterations", o.iterations, "sample count in random mode");
    }
  }
  auto* cert = app.add_subcommand("certify", "all bound certificates for a family");
  cert->add_option("--d", o.d, "degree")->required();
  cert->add_option("--r", o.base_r, "base dimension");
  cert->add_option("--t", o.t, "dimension of the singular locus, -1 for smooth");
  cert->add_option("--n", o.cert_n, "ambient dimension");
  cert->add_option("--k", o.cert_k, "plane dimension");
  cert->add_option("--mbar", o.mbar, "degree of the base hypersurface");
  cert->add_option("--mu", o.mu, "degree of the coefficient forms");
  cert->add_option("--base-degree", o.base_degree, "degree of the base parametrization");
  cert->add_option("--fiber-degree", o.fiber_degree, "degree of the fibre parametrization");
  cert->add_option("--m-cap", o.m_cap, "cap for the ansatz degree search");

  std::vector<std::string> argv_storage{"fanokit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_json("parse", e.what()).dump() << '\n';
    return kParseError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    Runner runner(o, in);
    const Json result = runner.dispatch(cmd);
    out << (o.pretty ? result.dump(2) : result.dump()) << '\n';
    return kOk;
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["position"] = e.position();
    err << j.dump() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& e) {
    Json j = error_json("budget", e.what());
    j["estimate"] = e.estimate();
    err << j.dump() << '\n';
    return kBudgetRefused;
  } catch (const Error& e) {
    err << error_json("precondition", e.what()).dump() << '\n';
    return kPreconditionError;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << '\n';
    return kInternalError;
  }
}

}  // namespace fanokit::cli
