#include "fanokit/json_io.hpp"

#include <algorithm>

namespace fanokit {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError(what, 0); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return std::stoul(s);
    }
  }
  malformed(std::string("expected a nonnegative integer for ") + what);
}

Field field_of(const Json& j, const Field& fallback) {
  return j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : fallback;
}

std::vector<std::size_t> parse_key(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string part = text.substr(start, comma - start);
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed index list '" + text + "'", start);
    }
    out.push_back(std::stoul(part));
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string monomial_key(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out;
}

Json coords_object(const std::vector<Scalar>& coords, std::size_t k, std::size_t n) {
  Json out = Json::object();
  const auto indices = all_multi_indices(k + 1, n);
  for (std::size_t i = 0; i < indices.size(); ++i) out[indices[i].to_string()] = to_json(coords[i]);
  return out;
}

std::string decimal(const mpz_class& v) { return v.get_str(); }

Json witness_value(const WitnessValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, mpz_class>) return x.get_str();
        else if constexpr (std::is_same_v<T, mpq_class>) return x.get_str();
        else return x;
      },
      v);
}

}  // namespace

Field parse_field_spec(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rationals();
  if (text.rfind("p=", 0) == 0) {
    const std::string digits = text.substr(2);
    if (digits.empty() || digits.size() > 19 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed field spec '" + text + "'", 2);
    }
    return Field::prime(std::stoull(digits));
  }
  throw ParseError("field spec must be Q or p=<prime>, got '" + text + "'", 0);
}

Json to_json(const Field& field) {
  if (!field.is_prime()) return "Q";
  return Json{{"p", field.modulus()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_spec(j.get<std::string>());
  if (j.is_object() && j.contains("p")) return Field::prime(count_from_json(j.at("p"), "p"));
  malformed("field must be \"Q\" or {\"p\": prime}");
}

Json to_json(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  return s.to_string();
}

Scalar scalar_from_json(const Json& j, const Field& field) {
  if (j.is_number_integer()) return field.from_int(j.get<long>());
  if (j.is_string()) return field.parse(j.get<std::string>());
  malformed("expected a number or a \"p/q\" string");
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}, {"field", to_json(m.field())}};
}

Matrix matrix_from_json(const Json& j, const Field& fallback) {
  const Field field = field_of(j, fallback);
  const Json& entries = j.is_array() ? j : member(j, "entries");
  if (!entries.is_array()) malformed("matrix entries must be an array of rows");
  const std::size_t rows = entries.size();
  const std::size_t cols = rows ? entries.front().size() : 0;
  if (j.is_object() && j.contains("rows") && count_from_json(j.at("rows"), "rows") != rows) {
    malformed("matrix row count does not match its entries");
  }
  if (j.is_object() && j.contains("cols") && count_from_json(j.at("cols"), "cols") != cols) {
    malformed("matrix column count does not match its entries");
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) malformed("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(entries[i][c], field);
  }
  return m;
}

Json to_json(const PluckerPoint& p) {
  return Json{{"k", p.k()}, {"n", p.n()}, {"field", to_json(p.field())}, {"coords", coords_object(p.coords(), p.k(), p.n())}};
}

PluckerPoint plucker_from_json(const Json& j, const Field& fallback) {
  const Field field = field_of(j, fallback);
  const std::size_t k = count_from_json(member(j, "k"), "k");
  const std::size_t n = count_from_json(member(j, "n"), "n");
  const Json& coords = member(j, "coords");
  if (k >= n) malformed("plucker point needs k < n");
  const auto indices = all_multi_indices(k + 1, n);
  std::vector<Scalar> values(indices.size(), field.zero());
  if (coords.is_array()) {
    if (coords.size() != indices.size()) malformed("plucker coordinate list has the wrong length");
    for (std::size_t i = 0; i < indices.size(); ++i) values[i] = scalar_from_json(coords[i], field);
  } else if (coords.is_object()) {
    for (const auto& [key, value] : coords.items()) {
      const MultiIndex index(parse_key(key), n);
      if (index.size() != k + 1) malformed("plucker index '" + key + "' has the wrong size");
      values[index.lex_position()] = scalar_from_json(value, field);
    }
  } else {
    malformed("plucker coords must be an object or an array");
  }
  return PluckerPoint::from_coordinates(k, n, std::move(values));
}

Json to_json(const DualHyperplane& h) {
  const Field field = h.coeffs.empty() ? Field::rationals() : h.coeffs.front().field();
  return Json{{"k", h.k}, {"n", h.n}, {"field", to_json(field)}, {"coords", coords_object(h.coeffs, h.k, h.n)}};
}

Json to_json(const SempleChartPoint& c) {
  Json x = Json::array();
  for (std::size_t i = 0; i < c.x.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.x.cols(); ++j) row.push_back(to_json(c.x(i, j)));
    x.push_back(std::move(row));
  }
  return Json{{"k", c.k()}, {"n", c.n()}, {"field", to_json(c.x.field())}, {"y", to_json(c.y)}, {"x", std::move(x)}};
}

SempleChartPoint semple_point_from_json(const Json& j, const Field& fallback) {
  const Field field = field_of(j, fallback);
  const Scalar y = scalar_from_json(member(j, "y"), field);
  const Matrix x = matrix_from_json(member(j, "x"), field);
  if (x.rows() == 0 || x.cols() == 0) malformed("semple point needs a nonempty x block");
  if (j.contains("k") && count_from_json(j.at("k"), "k") + 1 != x.rows()) malformed("semple point: k does not match x");
  if (j.contains("n") && count_from_json(j.at("n"), "n") != x.rows() + x.cols() - 1) {
    malformed("semple point: n does not match x");
  }
  return SempleChartPoint{y, x};
}

Json to_json(const std::vector<Polynomial>& polys) {
  Json out = Json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

Json to_json(const FanoSystem& sys) {
  Json labels = Json::array();
  for (const auto& m : sys.s_monomials) labels.push_back(monomial_key(m));
  return Json{{"k", sys.k},
              {"chart", sys.chart.to_string()},
              {"field", to_json(sys.ring.field())},
              {"variables", sys.ring.names()},
              {"count", sys.equations.size()},
              {"s_monomials", std::move(labels)},
              {"equations", to_json(sys.equations)}};
}

Json to_json(const PluckerCurve& curve) {
  Json frame = Json::array();
  for (const auto& row : curve.frame) frame.push_back(to_json(row));
  Json coords = Json::object();
  const auto indices = all_multi_indices(curve.k + 1, curve.n);
  for (std::size_t i = 0; i < indices.size(); ++i) coords[indices[i].to_string()] = curve.coords[i].to_string();
  return Json{{"k", curve.k},
              {"n", curve.n},
              {"field", to_json(curve.ring.field())},
              {"degree", curve.degree},
              {"frame", std::move(frame)},
              {"coords", std::move(coords)}};
}

Json to_json(const SmoothnessVerdict& v) {
  Json out{{"verdict", to_string(v.kind)}};
  if (v.witness) {
    Json w = Json::array();
    for (const auto& s : *v.witness) w.push_back(to_json(s));
    out["witness"] = std::move(w);
  }
  out["reason"] = v.reason;
  return out;
}

HypersurfaceFamily family_from_json(const Json& j, const Field& field) {
  const Json& phi_text = member(j, "phi");
  const Json& coeffs = member(j, "coeffs");
  if (!phi_text.is_string()) malformed("phi must be a polynomial string");
  if (!coeffs.is_object() || coeffs.empty()) malformed("coeffs must be a nonempty object");

  std::size_t top_u = 1;
  const auto note_identifiers = [&](const std::string& text) {
    for (const auto& id : scan_identifiers(text)) {
      if (id.size() > 1 && id[0] == 'u' &&
          std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        top_u = std::max<std::size_t>(top_u, std::stoul(id.substr(1)));
      }
    }
  };
  note_identifiers(phi_text.get<std::string>());
  std::map<HypersurfaceFamily::Key, std::string> texts;
  std::size_t top_x = 0;
  std::size_t degree = 0;
  for (const auto& [key, value] : coeffs.items()) {
    if (!value.is_string()) malformed("coefficient for '" + key + "' must be a polynomial string");
    auto indices = parse_key(key);
    std::sort(indices.begin(), indices.end());
    if (degree == 0) degree = indices.size();
    if (indices.size() != degree) malformed("coefficient keys must all have the same length");
    top_x = std::max(top_x, indices.back());
    note_identifiers(value.get<std::string>());
    if (!texts.emplace(indices, value.get<std::string>()).second) malformed("duplicate coefficient key '" + key + "'");
  }
  const std::size_t r = j.contains("r") ? count_from_json(j.at("r"), "r") : top_u - 1;
  const std::size_t n = j.contains("n") ? count_from_json(j.at("n"), "n") : std::max<std::size_t>(top_x, 1);
  const Ring ring = base_ring(r, field);
  std::map<HypersurfaceFamily::Key, Polynomial> parsed;
  std::optional<unsigned> mu;
  if (j.contains("mu")) mu = static_cast<unsigned>(count_from_json(j.at("mu"), "mu"));
  for (const auto& [key, text] : texts) {
    Polynomial c = parse_polynomial(text, ring);
    if (!mu && !c.is_zero()) {
      const auto h = is_homogeneous(c);
      if (h) mu = *h;
    }
    parsed.emplace(key, std::move(c));
  }
  return HypersurfaceFamily(BaseVariety(parse_polynomial(phi_text.get<std::string>(), ring)), n,
                            static_cast<unsigned>(degree), mu.value_or(0), std::move(parsed));
}

Json to_json(const HypersurfaceFamily& fam) {
  Json coeffs = Json::object();
  for (const auto& [key, c] : fam.coeffs()) coeffs[join(key)] = c.to_string();
  return Json{{"r", fam.base().r()},
              {"n", fam.n()},
              {"d", fam.d()},
              {"field", to_json(fam.base().field())},
              {"phi", fam.base().phi().to_string()},
              {"mu", fam.mu()},
              {"coeffs", std::move(coeffs)}};
}

Json to_json(const SectionSystem& sys) {
  Json basis = Json::array();
  for (const auto& m : sys.basis_psi) basis.push_back(Polynomial::term(sys.working.base().ring(), m, sys.lambda_ring.field().one()).to_string());
  Json shift = Json::array();
  for (const auto& s : sys.change.shift) shift.push_back(to_json(s));
  return Json{{"k", sys.k},
              {"m", sys.m},
              {"field", to_json(sys.lambda_ring.field())},
              {"coordinate_change", {{"shift", std::move(shift)}, {"phi", sys.change.phi.to_string()}}},
              {"basis_psi", std::move(basis)},
              {"lambda_variables", sys.lambda_ring.names()},
              {"counts",
               {{"M", decimal(sys.counts.basis_size)},
                {"lambda_count", decimal(sys.counts.lambda_count)},
                {"alpha_count", decimal(sys.counts.alpha_count)},
                {"equation_count", decimal(sys.counts.equation_count)},
                {"underdetermined", sys.counts.underdetermined},
                {"raw_equation_count", std::to_string(sys.raw_equations.size())}}},
              {"raw_equations", to_json(sys.raw_equations)}};
}

Json to_json(const SectionSearchResult& result) {
  Json out{{"work", decimal(result.work)}, {"candidates", std::to_string(result.candidates)}};
  if (!result.lambda) {
    out["found"] = false;
    return out;
  }
  out["found"] = true;
  Json lambda = Json::array();
  for (const auto& s : *result.lambda) lambda.push_back(to_json(s));
  out["lambda"] = std::move(lambda);
  out["section"] = to_json(result.section);
  const auto& v = result.verification;
  out["verification"] = {{"passed", v.passed},
                         {"prime_points_checked", v.prime_points_checked},
                         {"prime_points_skipped", v.prime_points_skipped},
                         {"extension_points_checked", v.extension_points_checked},
                         {"extension_points_skipped", v.extension_points_skipped}};
  if (!v.passed) out["verification"]["failure"] = v.failure;
  return out;
}

Json to_json(const BoundCertificate& c) {
  Json inputs = Json::object();
  for (const auto& [name, value] : c.inputs) inputs[name] = decimal(value);
  Json witness = Json::object();
  for (const auto& [name, value] : c.witness) witness[name] = witness_value(value);
  return Json{{"name", c.name},
              {"inputs", std::move(inputs)},
              {"threshold", c.threshold.get_str()},
              {"satisfied", c.satisfied},
              {"witness", std::move(witness)},
              {"paper_ref", c.reference}};
}

Json to_json(const CertificateBundle& b) {
  Json inputs = Json::object();
  for (const auto& [name, value] : b.resolved) inputs[name] = decimal(value);
  Json out{{"inputs", std::move(inputs)}};
  for (const auto& [name, value] : b.bounds) out[name] = decimal(value);
  out["notes"] = b.notes;
  Json certs = Json::array();
  for (const auto& c : b.certificates) certs.push_back(to_json(c));
  out["certificates"] = std::move(certs);
  return out;
}

}  // namespace fanokit
