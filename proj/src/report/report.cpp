#include "jaclab/report/report.hpp"

#include "jaclab/algebra/parser.hpp"
#include "jaclab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace jaclab {

namespace {

std::string fixed(double x, int decimals) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -decimals)) x = 0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string decimal(const Complex& z, int decimals) {
  std::string out = fixed(static_cast<double>(z.real()), decimals);
  double im = static_cast<double>(z.imag());
  if (std::abs(im) >= 0.5 * std::pow(10.0, -decimals))
    out += (im < 0 ? "-" : "+") + fixed(std::abs(im), decimals) + "i";
  return out;
}

Json box(const ComplexBox& b) {
  return Json::array({to_string(b.re_lo), to_string(b.re_hi), to_string(b.im_lo), to_string(b.im_hi)});
}

std::string poly(const BiPoly& p, const char* a = "x", const char* b = "y") { return p.render(a, b); }

BiPoly parse_univariate(const std::string& text, const std::string& var, std::size_t offset) {
  BiPoly p;
  try {
    p = parse_polynomial(text, {var, var + "'"});
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                     offset + e.position());
  }
  if (p.degree(1) > 0) throw ParseError("unexpected second variable", offset);
  return p;
}

std::string trim_copy(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

}  // namespace

Json JsonWriter::value(const Value& v) const {
  Json exact;
  if (v.is_rational()) {
    exact = to_string(v.rational());
  } else {
    exact = Json::object();
    exact["minpoly"] = qp::render(v.minpoly(), "z");
    exact["box"] = box(v.box());
  }
  if (!decimals_) return exact;
  if (v.is_rational()) exact = Json{{"exact", exact}};
  exact["decimal"] = decimal(v.approx(), *decimals_);
  return exact;
}

Json JsonWriter::values(const std::vector<Value>& vs) const {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(value(v));
  return out;
}

Json JsonWriter::number(const Number& a) const {
  Json exact;
  if (a.is_rational()) {
    exact = to_string(a.to_rational());
  } else {
    const FieldPtr& f = a.field();
    exact = Json::object();
    exact["tower_var"] = f->name();
    exact["repr"] = qp::render(a.repr(), f->name());
    exact["minpoly"] = qp::render(f->minpoly(), f->name());
    exact["box"] = box(f->generator_box());
  }
  if (!decimals_) return exact;
  if (a.is_rational()) exact = Json{{"exact", exact}};
  exact["decimal"] = decimal(a.approx(), *decimals_);
  return exact;
}

Json JsonWriter::series(const FractionalSeries& s) const {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back({{"n", t.n}, {"coeff", number(t.a)}});
  Json out{{"m", s.m}, {"terms", terms}};
  out["parameter_exponent"] = s.has_parameter ? Json(s.parameter_exponent) : Json(nullptr);
  out["text"] = s.render();
  return out;
}

Json JsonWriter::change(const LinearChange& c) const {
  Json m = Json::array();
  for (const auto& r : c.m) m.push_back(to_string(r));
  return {{"description", c.describe("x", "y")}, {"matrix", m}};
}

Json JsonWriter::fiber(const FiberReport& f) const {
  Json pts = Json::array();
  for (const auto& p : f.singular_points) pts.push_back({{"x", value(p.x)}, {"y", value(p.y)}, {"mu", p.mu}});
  return {{"c", value(f.c)},         {"chi", f.chi}, {"singular_points", pts}, {"is_reduced", f.is_reduced},
          {"is_atypical", f.is_atypical}};
}

Json JsonWriter::theorem1(const Theorem1Report& r) const {
  Json tangency = Json::array();
  for (const auto& t : r.tangency.values)
    tangency.push_back({{"u0", value(t.u0)}, {"component", t.component}, {"xi0", value(t.xi0)}});
  Json out{{"hypothesis_met", r.hypothesis_met}, {"E_P", values(r.e_p)}, {"tangency", tangency},
           {"vertical_components", values(r.tangency.vertical_components)}};
  out["holds"] = r.hypothesis_met ? Json(r.biconditional_holds) : Json(nullptr);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json JsonWriter::lemma6(const Lemma6Report& r) const {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"type_index", row.type_index},
                    {"series", series(row.series)},
                    {"is_dicritical", row.is_dicritical},
                    {"deg_p", row.deg_p},
                    {"q_const", row.q_const ? value(*row.q_const) : Json("nonconstant")},
                    {"b_exp", row.b_exp},
                    {"passes", row.passes}});
  Json out{{"hypothesis_met", r.hypothesis_met}, {"rows", rows}};
  out["all_pass"] = r.hypothesis_met ? Json(r.all_pass()) : Json(nullptr);
  return out;
}

Json JsonWriter::nonproper(const NonProperSet& np) const {
  Json comps = Json::array();
  for (const auto& c : np.components)
    comps.push_back({{"series", series(c.series)},
                     {"p", c.p_lead.render("s")},
                     {"q", c.q_lead.render("s")},
                     {"implicit", poly(c.implicit, "u", "v")}});
  return {{"components", comps}, {"oracle", poly(np.oracle_polynomial, "u", "v")}, {"agree", np.agree}};
}

Json analyze_poly(const std::string& h_text, const RunConfig& config) {
  JsonWriter w(config.decimals);
  BiPoly h = parse_polynomial(h_text);
  if (h.is_constant()) throw DegenerateInput("constant polynomial");
  ExceptionalSetReport ex = exceptional_set_poly(h, config.tower_depth, config.seed);
  Normalization n = y_normalize({h});
  const BiPoly& hn = n.polys[0];
  int order = config.order.value_or(default_order(hn));

  Json out;
  out["input"] = poly(h);
  out["normalization"] = w.change(ex.normalization);
  out["normalization"]["normalized"] = poly(hn);
  out["order"] = order;
  Json exps = Json::array();
  for (const auto& e : expansions_at_infinity(hn, order, config.tower_depth))
    exps.push_back({{"series", w.series(e.series)},
                    {"multiplicity", e.multiplicity},
                    {"conjugates", e.conjugates},
                    {"exact", e.exact}});
  out["expansions"] = exps;
  Json types = Json::array();
  for (const auto& t : puiseux_types(hn, config.tower_depth))
    types.push_back({{"series", w.series(t.series)},
                     {"h_leading", t.h_leading.render("s")},
                     {"sheet_count", t.sheet_count},
                     {"conjugates", t.conjugates}});
  out["types"] = types;
  CriticalValues cv = critical_values(h);
  out["critical_eliminant"] = qp::render(cv.eliminant, "c");
  out["critical_values"] = w.values(ex.critical_values);
  Json tcv = Json::array();
  for (const auto& t : ex.type_critical_values) tcv.push_back({{"value", w.value(t.value)}, {"type_index", t.type_index}});
  out["type_critical_values"] = tcv;
  out["exceptional_set"] = w.values(ex.union_set);
  SuzukiReport su = suzuki_check(h, config.seed);
  out["generic_chi"] = su.generic_chi;
  Json fibers = Json::array();
  for (const auto& f : su.candidate_values) fibers.push_back(w.fiber(f));
  out["suzuki"] = {{"lhs", su.lhs}, {"rhs", su.rhs}, {"holds", su.holds}, {"fibers", fibers}};
  PrimitivityReport pr = primitivity_check(h, config.seed);
  out["primitivity"] = {{"verdict", to_string(pr.verdict)},
                        {"inner", pr.inner ? Json(poly(*pr.inner)) : Json(nullptr)},
                        {"outer", pr.inner ? Json(qp::render(pr.outer, "t")) : Json(nullptr)},
                        {"detail", pr.detail}};
  out["warnings"] = ex.warnings;
  return out;
}

Json analyze_map(const std::string& p_text, const std::string& q_text, const RunConfig& config) {
  JsonWriter w(config.decimals);
  BiPoly P = parse_polynomial(p_text), Q = parse_polynomial(q_text);
  require_dominant(P, Q);
  MapAnalysis ma = exceptional_set_map(P, Q, config.tower_depth);

  Json out;
  out["input"] = {{"P", poly(P)}, {"Q", poly(Q)}};
  out["jacobian"] = poly(ma.jacobian);
  out["is_const_nonzero"] = ma.is_const_nonzero;
  out["normalization"] = w.change(ma.nonproper.normalization);
  Json dic = Json::array();
  for (const auto& c : dicritical_series(P, Q, config.tower_depth))
    dic.push_back({{"series", w.series(c.series)},
                   {"p", c.p_lead.render("s")},
                   {"q", c.q_lead.render("s")},
                   {"a", c.a_exp},
                   {"b", c.b_exp},
                   {"source", c.source},
                   {"type_index", c.type_index},
                   {"implicit", poly(c.implicit, "u", "v")}});
  out["dicritical_components"] = dic;
  out["nonproper"] = w.nonproper(ma.nonproper);
  Json pts = Json::array();
  for (const auto& [u, v] : ma.critical.points) pts.push_back({{"u", w.value(u)}, {"v", w.value(v)}});
  out["exceptional_set"] = {
      {"critical_curve", ma.critical.curve.is_constant() ? Json(nullptr) : Json(poly(ma.critical.curve, "u", "v"))},
      {"critical_points", pts},
      {"curve", ma.exceptional_curve.is_constant() ? Json(nullptr) : Json(poly(ma.exceptional_curve, "u", "v"))},
      {"description", ma.exceptional_set}};
  out["lemma6"] = w.lemma6(check_lemma6(P, Q, config.tower_depth));
  try {
    out["theorem1"] = w.theorem1(check_theorem1(P, Q, config.tower_depth, config.seed));
  } catch (const DegenerateInput& e) {
    if (ma.is_const_nonzero) throw;
    out["theorem1"] = {{"hypothesis_met", false}, {"E_P", nullptr},         {"tangency", Json::array()},
                       {"vertical_components", Json::array()}, {"holds", nullptr},
                       {"note", std::string("informational; E_P unavailable: ") + e.what()}};
  }
  return out;
}

std::vector<std::pair<QPoly, QPoly>> parse_components(const std::string& text) {
  std::vector<std::pair<QPoly, QPoly>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    if (!trim_copy(piece).empty()) {
      std::size_t bar = piece.find('|');
      if (bar == std::string::npos || piece.find('|', bar + 1) != std::string::npos)
        throw ParseError("expected exactly one '|' in \"p(t)|q(t)\"", start);
      BiPoly p = parse_univariate(piece.substr(0, bar), "t", start);
      BiPoly q = parse_univariate(piece.substr(bar + 1), "t", start + bar + 1);
      out.emplace_back(p.specialize(1, Number(0)).to_rational(), q.specialize(1, Number(0)).to_rational());
    }
    start = end + 1;
  }
  return out;
}

Json theorem2(const std::string& components_text, const RunConfig& config) {
  (void)config;
  auto comps = parse_components(components_text);
  if (comps.empty()) throw ParseError("no components given", 0);
  Theorem2Report r = theorem2_verdict(comps);
  Json cs = Json::array();
  for (const auto& c : r.components)
    cs.push_back({{"p", qp::render(c.p, "t")},
                  {"q", qp::render(c.q, "t")},
                  {"monomial_first", c.monomial_first},
                  {"k", c.monomial_first ? Json(c.k) : Json(nullptr)},
                  {"line_like", c.line_like}});
  return {{"verdict", r.verdict}, {"components", cs}, {"citations", r.citations}};
}

std::vector<CurveSample> sample_curve(const std::string& param_text, const std::vector<Rational>& ts) {
  auto comps = parse_components(param_text);
  if (comps.size() != 1) throw ParseError("expected a single parametrization \"p(t)|q(t)\"", 0);
  const auto& [p, q] = comps[0];
  std::vector<CurveSample> out;
  for (const auto& t : ts) out.push_back({t, qp::eval(p, t), qp::eval(q, t)});
  return out;
}

std::vector<Rational> parameter_grid(const Rational& from, const Rational& to, int count) {
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  if (count == 1) return {from};
  std::vector<Rational> out;
  Rational step = (to - from) / (count - 1);
  for (int i = 0; i < count; ++i) out.push_back(from + step * i);
  return out;
}

std::string samples_csv(const std::vector<CurveSample>& rows) {
  std::ostringstream os;
  os << "t,u,v\n";
  for (const auto& r : rows) os << to_string(r.t) << ',' << to_string(r.u) << ',' << to_string(r.v) << '\n';
  return os.str();
}

Json samples_json(const std::vector<CurveSample>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"t", to_string(r.t)}, {"u", to_string(r.u)}, {"v", to_string(r.v)}});
  return out;
}

}  // namespace jaclab
