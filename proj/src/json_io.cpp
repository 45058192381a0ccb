#include "reglab/json_io.hpp"

namespace reglab {

json to_json(const CZValue& v) { return json{{"re", v.rep().real()}, {"im", v.rep().imag()}}; }

CZValue czvalue_from_json(const json& j) {
  return reduce(cplx(j.at("re").get<double>(), j.at("im").get<double>()));
}

json to_json(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx cplx_from_json(const json& j) {
  return cplx(j.at("re").get<double>(), j.at("im").get<double>());
}

json to_json(const TrigPoly& f) {
  json coeffs = json::array();
  for (const auto& [n, c] : f.coeffs()) {
    cplx v = c * twopii_pow(f.scale());
    json modes = json::array();
    for (int i = 0; i < f.dim(); ++i) modes.push_back(n[i]);
    coeffs.push_back(json{{"n", modes}, {"re", v.real()}, {"im", v.imag()}});
  }
  return json{{"dim", f.dim()}, {"coeffs", coeffs}};
}

TrigPoly trigpoly_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  TrigPoly f(dim);
  for (const auto& entry : j.at("coeffs")) {
    Mode n;
    const auto& modes = entry.at("n");
    require(int(modes.size()) == dim, "BadParams", "mode length does not match dim");
    for (int i = 0; i < dim; ++i) n[i] = modes[std::size_t(i)].get<int>();
    f.add_raw_coeff(n, cplx(entry.at("re").get<double>(), entry.at("im").get<double>()));
  }
  return f;
}

json to_json(const UnitFunction& u) {
  json w = json::array();
  for (int i = 0; i < u.dim(); ++i) w.push_back(u.winding()[std::size_t(i)]);
  return json{{"winding", w}, {"log", to_json(u.logpart())}};
}

UnitFunction unit_from_json(const json& j) {
  TrigPoly g = trigpoly_from_json(j.at("log"));
  std::array<int, 3> w{0, 0, 0};
  const auto& jw = j.at("winding");
  require(int(jw.size()) == g.dim(), "BadParams", "winding length does not match dim");
  for (int i = 0; i < g.dim(); ++i) w[std::size_t(i)] = jw[std::size_t(i)].get<int>();
  return UnitFunction(w, g);
}

json to_json(const Form& f) {
  json comps = json::array();
  for (const auto& [mask, c] : f.components()) {
    json axes = json::array();
    for (int i = 0; i < f.dim(); ++i)
      if (mask & (1u << i)) axes.push_back(i);
    comps.push_back(json{{"axes", axes}, {"poly", to_json(c)}});
  }
  return json{{"dim", f.dim()}, {"degree", f.degree()}, {"components", comps}};
}

Form form_from_json(const json& j) {
  Form f(j.at("dim").get<int>(), j.at("degree").get<int>());
  for (const auto& comp : j.at("components")) {
    std::uint8_t mask = 0;
    for (const auto& a : comp.at("axes")) mask |= std::uint8_t(1u << a.get<int>());
    f.add_component(mask, trigpoly_from_json(comp.at("poly")));
  }
  return f;
}

json to_json(const PeriodicFamily& fam) {
  json entries = json::array();
  for (const auto& [p, forms] : fam.entries()) {
    json jf = json::array();
    for (const auto& f : forms) jf.push_back(to_json(f));
    entries.push_back(json{{"p", p}, {"forms", jf}});
  }
  return json{{"truncation", to_string(fam.truncation())}, {"entries", entries}};
}

PeriodicFamily family_from_json(const json& j) {
  Truncation tr = truncation_from_string(j.at("truncation").get<std::string>());
  int dim = 1;
  for (const auto& e : j.at("entries"))
    for (const auto& f : e.at("forms")) dim = f.at("dim").get<int>();
  PeriodicFamily fam(dim, tr);
  for (const auto& e : j.at("entries")) {
    int p = e.at("p").get<int>();
    for (const auto& f : e.at("forms")) fam.add_form(p, form_from_json(f));
  }
  return fam;
}

json to_json(const ProductClass& x) {
  json units = json::array();
  for (const auto& u : x.units) units.push_back(to_json(u));
  return json{{"f", to_json(x.f)}, {"units", units}};
}

ProductClass product_class_from_json(const json& j) {
  std::vector<UnitFunction> units;
  for (const auto& u : j.at("units")) units.push_back(unit_from_json(u));
  return ProductClass(trigpoly_from_json(j.at("f")), std::move(units));
}

json to_json(const GradedBundle& v) {
  json s = json::array();
  for (const auto& sm : v.summands)
    s.push_back(json{{"v_re", sm.v.real()}, {"v_im", sm.v.imag()}, {"eps", sm.eps}});
  return json{{"summands", s}};
}

GradedBundle bundle_from_json(const json& j) {
  std::vector<GradedBundle::Summand> s;
  for (const auto& sm : j.at("summands"))
    s.push_back({cplx(sm.at("v_re").get<double>(), sm.at("v_im").get<double>()),
                 sm.at("eps").get<int>()});
  return GradedBundle(std::move(s));
}

json to_json(const ArcCover& c) { return json{{"m", c.size()}, {"cuts", c.cuts()}}; }

ArcCover cover_from_json(const json& j) {
  std::vector<double> cuts = j.at("cuts").get<std::vector<double>>();
  require(int(cuts.size()) == j.at("m").get<int>(), "BadParams", "cut count does not match m");
  return ArcCover(std::move(cuts));
}

json to_json(const CyclicChain& c) {
  json terms = json::array();
  for (const auto& t : c.terms()) {
    json word = json::array();
    for (const auto& f : t.word) word.push_back(to_json(f));
    terms.push_back(json{{"k", t.k}, {"word", word}, {"coeff", to_json(t.coeff)}});
  }
  return json{{"n", c.n()}, {"terms", terms}};
}

CyclicChain chain_from_json(const json& j) {
  int n = j.at("n").get<int>();
  int dim = 1;
  for (const auto& t : j.at("terms"))
    for (const auto& f : t.at("word")) dim = f.at("dim").get<int>();
  CyclicChain c(n, dim);
  for (const auto& t : j.at("terms")) {
    std::vector<TrigPoly> word;
    for (const auto& f : t.at("word")) word.push_back(trigpoly_from_json(f));
    c.add_term(t.at("k").get<int>(), std::move(word), cplx_from_json(t.at("coeff")));
  }
  return c;
}

}  // namespace reglab
