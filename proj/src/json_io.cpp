#include "rankone/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) parse_error(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& v = j.at(key);
  if (!v.is_array()) parse_error(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) parse_error(std::string("field \"") + key + "\" must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Polynomial polynomial(const json& j, const char* re_key, const char* im_key) {
  const auto re = numbers(j, re_key);
  const auto im = numbers(j, im_key);
  Polynomial p;
  p.coeffs.resize(std::max(re.size(), im.size()), 0.0);
  for (std::size_t k = 0; k < re.size(); ++k) p.coeffs[k] += re[k];
  for (std::size_t k = 0; k < im.size(); ++k) p.coeffs[k] += Complex(0.0, im[k]);
  return p;
}

void put_polynomial(json& j, const Polynomial& p, const char* re_key, const char* im_key) {
  json re = json::array(), im = json::array();
  for (const auto& c : p.coeffs) {
    re.push_back(round15(c.real()));
    im.push_back(round15(c.imag()));
  }
  j[re_key] = re;
  j[im_key] = im;
}

}  // namespace

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

json complex_json(Complex c) { return json{{"re", round15(c.real())}, {"im", round15(c.imag())}}; }

json to_json(const HighestWeight& w) { return json{{"n", w.n()}, {"entries", w.entries()}}; }

HighestWeight weight_from_json(const json& j) {
  const auto& n = field(j, "n");
  const auto& e = field(j, "entries");
  if (!n.is_number_integer() || !e.is_array()) parse_error("weight needs integer n and array entries");
  std::vector<std::int64_t> entries;
  for (const auto& v : e) {
    if (!v.is_number_integer()) parse_error("weight entries must be integers");
    entries.push_back(v.get<std::int64_t>());
  }
  return HighestWeight::validate(n.get<int>(), std::move(entries));
}

json to_json(const RealLineMeasure& m) {
  json atoms = json::array(), dens = json::array();
  for (const auto& a : m.atoms())
    atoms.push_back({{"t", round15(a.t)}, {"w_re", round15(a.w.real())}, {"w_im", round15(a.w.imag())}});
  for (const auto& d : m.densities()) {
    json p{{"a", round15(d.a)}, {"b", round15(d.b)}};
    put_polynomial(p, d.rho, "coeffs_re", "coeffs_im");
    dens.push_back(p);
  }
  return json{{"atoms", atoms}, {"densities", dens}};
}

RealLineMeasure measure_from_json(const json& j) {
  if (!j.is_object()) parse_error("measure must be an object");
  std::vector<Atom> atoms;
  std::vector<DensityPiece> dens;
  if (j.contains("atoms")) {
    for (const auto& a : j.at("atoms"))
      atoms.push_back({field(a, "t").get<double>(), Complex(number(a, "w_re", 0.0), number(a, "w_im", 0.0))});
  }
  if (j.contains("densities")) {
    for (const auto& d : j.at("densities"))
      dens.push_back({field(d, "a").get<double>(), field(d, "b").get<double>(),
                      polynomial(d, "coeffs_re", "coeffs_im")});
  }
  return RealLineMeasure(std::move(atoms), std::move(dens));
}

json to_json(const SpectralModel& m) {
  json chans = json::array();
  for (const auto& ch : m.channels) {
    json c{{"sigma", to_json(ch.sigma)}, {"measure", to_json(ch.measure)}};
    put_polynomial(c, ch.coeff, "coeff_re", "coeff_im");
    chans.push_back(c);
  }
  return json{{"schema", kSchema},
              {"d", m.d},
              {"delta", round15(m.delta)},
              {"tempered_amplitude", round15(m.tempered_amplitude)},
              {"channels", chans}};
}

SpectralModel model_from_json(const json& j) {
  SpectralModel m;
  const auto& d = field(j, "d");
  if (!d.is_number_integer()) parse_error("model d must be an integer");
  m.d = d.get<int>();
  m.delta = field(j, "delta").get<double>();
  m.tempered_amplitude = number(j, "tempered_amplitude", 0.0);
  if (j.contains("channels")) {
    for (const auto& c : j.at("channels")) {
      Polynomial coeff = polynomial(c, "coeff_re", "coeff_im");
      if (coeff.coeffs.empty()) coeff.coeffs = {1.0};
      m.channels.push_back({weight_from_json(field(c, "sigma")), measure_from_json(field(c, "measure")),
                            std::move(coeff)});
    }
  }
  return m;
}

json to_json(const Matrix2c& q) {
  json re = json::array(), im = json::array();
  for (const auto& row : q) {
    re.push_back({round15(row[0].real()), round15(row[1].real())});
    im.push_back({round15(row[0].imag()), round15(row[1].imag())});
  }
  return json{{"re", re}, {"im", im}};
}

Matrix2c matrix_from_json(const json& j) {
  const auto& re = field(j, "re");
  if (!re.is_array() || re.size() != 2) parse_error("matrix \"re\" must be 2x2");
  const json im = j.contains("im") ? j.at("im") : json{{0.0, 0.0}, {0.0, 0.0}};
  if (!im.is_array() || im.size() != 2) parse_error("matrix \"im\" must be 2x2");
  Matrix2c q{};
  for (std::size_t r = 0; r < 2; ++r) {
    if (!re[r].is_array() || re[r].size() != 2 || !im[r].is_array() || im[r].size() != 2)
      parse_error("matrix rows must have two entries");
    for (std::size_t c = 0; c < 2; ++c) q[r][c] = Complex(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return q;
}

json to_json(const Rational& r) {
  std::ostringstream os;
  os << r;
  return json{{"exact", os.str()}, {"value", round15(r.convert_to<double>())}};
}

json to_json(const WitnessReport& w) {
  return json{{"schema", kSchema},
              {"sigma", to_json(w.sigma)},
              {"tau", to_json(w.tau)},
              {"lambda", to_json(w.lambda_value)},
              {"contains_sigma", w.contains_sigma},
              {"contains_sigma_dual", w.contains_sigma_dual},
              {"is_minimal_over_bound", w.is_minimal_over_bound},
              {"search_bound", w.search_bound}};
}

json to_json(const GapParameters& p) {
  return json{{"schema", kSchema},
              {"d", p.d},
              {"delta", round15(p.delta)},
              {"kappa_gamma", round15(p.kappa_gamma)},
              {"kappa0", round15(p.kappa0)},
              {"kappa1", round15(p.kappa1)},
              {"eta_delta", round15(p.eta_delta)},
              {"eta0", round15(p.eta0)}};
}

json to_json(const SsgVerdict& v) {
  json j{{"schema", kSchema},
         {"verdict", v.verdict},
         {"atom_condition", v.atom_condition},
         {"gap_condition", v.gap_condition},
         {"kappa_gamma", round15(v.kappa_gamma)},
         {"notes", v.notes}};
  j["params"] = v.params ? to_json(*v.params) : json(nullptr);
  return j;
}

json to_json(const InversionResult& r) {
  json seq = json::array();
  for (std::size_t k = 0; k < r.y.size(); ++k)
    seq.push_back({{"y", round15(r.y[k])}, {"value", round15(r.raw[k])}});
  return json{{"schema", kSchema},
              {"estimate", round15(r.estimate)},
              {"error_estimate", round15(r.error_estimate)},
              {"converged", r.converged},
              {"sequence", seq}};
}

json to_json(const DetectorReport& r) {
  json masses = json::array();
  for (const auto& m : r.masses)
    masses.push_back({{"a", round15(m.a)}, {"b", round15(m.b)}, {"re", round15(m.re)},
                      {"im", round15(m.im)}, {"error", round15(m.error)}, {"converged", m.converged}});
  auto probe = [](const ContinuityProbe& p) {
    json s = json::array();
    for (std::size_t k = 0; k < p.y.size(); ++k)
      s.push_back({{"y", round15(p.y[k])}, {"sup_jump", round15(p.sup_jump[k])}});
    return json{{"decays", p.decays}, {"levels", s}};
  };
  return json{{"schema", kSchema},
              {"verdict", to_string(r.verdict)},
              {"max_abs_mass", round15(r.max_abs_mass)},
              {"continuity_re", probe(r.continuity_re)},
              {"continuity_im", probe(r.continuity_im)},
              {"masses", masses}};
}

json to_json(const CompareReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"z", complex_json(e.z)},
                       {"numeric", complex_json(e.numeric)},
                       {"closed", complex_json(e.closed)},
                       {"error", round15(e.error)},
                       {"truncation_bound", round15(e.truncation_bound)},
                       {"allowed", round15(e.allowed)},
                       {"honest", e.honest}});
  return json{{"schema", kSchema},
              {"pass", r.pass},
              {"all_honest", r.all_honest},
              {"max_error", round15(r.max_error)},
              {"entries", entries}};
}

json to_json(const PoleProbeReport& r) {
  json cells = json::array();
  for (double c : r.singular_cells) cells.push_back(round15(c));
  return json{{"schema", kSchema},
              {"pass", r.pass},
              {"residue", complex_json(r.residue)},
              {"max_abs_g", std::isfinite(r.max_abs_g) ? json(round15(r.max_abs_g)) : json("inf")},
              {"bounded", r.bounded},
              {"contour_sum", std::isfinite(std::abs(r.contour_sum)) ? complex_json(r.contour_sum)
                                                                     : json("inf")},
              {"contour_vanishes", r.contour_vanishes},
              {"singular_cells", cells}};
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

}  // namespace rankone::io
