#include "uea/json_io.hpp"

namespace uea {

json scalar_to_json(const Scalar& s) {
  return json::array({s.re.get_str(), s.im.get_str()});
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("scalar json must be [re, im]");
  return Scalar(rational_from_string(j[0].get<std::string>()),
                rational_from_string(j[1].get<std::string>()));
}

namespace {

json gen_to_json(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::OffDiag:
      return json::array({"e", g.i, g.j});
    case Generator::Kind::Cartan:
      return json::array({"h", g.i});
    case Generator::Kind::Central:
      return json::array({"c"});
  }
  throw std::logic_error("bad generator kind");
}

json monomial_to_json(const Monomial& m, int d) {
  json out = json::array();
  for (size_t slot = 0; slot < m.exp.size(); ++slot) {
    if (m.exp[slot] == 0) continue;
    out.push_back(json::array(
        {gen_to_json(slot_generator(static_cast<int>(slot), d)), m.exp[slot]}));
  }
  return out;
}

Monomial monomial_from_json(const json& j, int d) {
  Monomial m(d);
  for (const auto& entry : j) {
    const json& g = entry[0];
    const uint32_t exp = entry[1].get<uint32_t>();
    std::string kind = g[0].get<std::string>();
    Generator gen = kind == "e"
                        ? Generator::off_diag(g[1].get<int>(), g[2].get<int>(), d)
                    : kind == "h" ? Generator::cartan(g[1].get<int>(), d)
                    : kind == "c" ? Generator::central(d)
                                  : throw std::invalid_argument(
                                        "unknown generator kind: " + kind);
    m.bump(generator_slot(gen), exp);
  }
  return m;
}

json comm_monomial_to_json(const Monomial& m, int d) {
  json out = json::array();
  for (size_t slot = 0; slot < m.exp.size(); ++slot) {
    if (m.exp[slot] == 0) continue;
    out.push_back(json::array(
        {json::array({"b", static_cast<int>(slot) / d + 1,
                      static_cast<int>(slot) % d + 1}),
         m.exp[slot]}));
  }
  return out;
}

}  // namespace

json element_to_json(const Element& e) {
  json terms = json::array();
  for (const auto& [m, s] : e.terms())
    terms.push_back(
        {{"monomial", monomial_to_json(m, e.rank())}, {"coeff", scalar_to_json(s)}});
  return {{"d", e.rank()}, {"terms", terms}};
}

Element element_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  Element e(d);
  for (const auto& t : j.at("terms"))
    e.add_term(monomial_from_json(t.at("monomial"), d),
               scalar_from_json(t.at("coeff")));
  return e;
}

json tensor_to_json(const TensorElement& t) {
  json terms = json::array();
  for (const auto& [legs, s] : t.terms())
    terms.push_back({{"left", monomial_to_json(legs.first, t.rank())},
                     {"right", monomial_to_json(legs.second, t.rank())},
                     {"coeff", scalar_to_json(s)}});
  return {{"d", t.rank()}, {"terms", terms}};
}

json comm_to_json(const CommPoly& p) {
  json terms = json::array();
  for (const auto& [m, s] : p.terms())
    terms.push_back({{"monomial", comm_monomial_to_json(m, p.rank())},
                     {"coeff", scalar_to_json(s)}});
  return {{"d", p.rank()}, {"mode", "comm"}, {"terms", terms}};
}

CommPoly comm_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  CommPoly p(d);
  for (const auto& t : j.at("terms")) {
    Monomial m(d);
    for (const auto& entry : t.at("monomial")) {
      const json& g = entry[0];
      if (g[0].get<std::string>() != "b")
        throw std::invalid_argument("comm monomial expects b variables");
      m.bump(CommPoly::var_slot(g[1].get<int>(), g[2].get<int>(), d),
             entry[1].get<uint32_t>());
    }
    p.add_term(m, scalar_from_json(t.at("coeff")));
  }
  return p;
}

json membership_to_json(const MembershipResult& r) {
  json out;
  out["verdict"] =
      r.in_span() ? "InSpan" : "NotInSpanUpToBound";
  out["bound"] = r.bound;
  if (r.in_span()) {
    json cert = json::array();
    for (const auto& [word, c] : r.certificate)
      cert.push_back({{"word", word}, {"coeff", scalar_to_json(c)}});
    out["certificate"] = cert;
  }
  return out;
}

json closure_to_json(const ClosureReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je = {{"kind", e.kind},
               {"i", e.i},
               {"verdict", e.result.in_span() ? "InSpan" : "NotInSpanUpToBound"}};
    if (e.kind == "covar") je["j"] = e.j;
    entries.push_back(je);
  }
  return {{"bound", r.bound},
          {"all_in_span", r.all_in_span},
          {"entries", entries}};
}

json spectra_to_json(const SpectraReport& r) {
  json inter = json::array();
  for (const auto& p : r.interlacing)
    inter.push_back({{"size_lo", p.size_lo},
                     {"size_hi", p.size_hi},
                     {"checks", p.checks},
                     {"violations", p.violations},
                     {"worst", p.worst}});
  return {{"sizes", r.sizes},
          {"times", r.times},
          {"paths", r.n_paths},
          {"tolerance", r.tolerance},
          {"interlacing", inter},
          {"interlacing_ok", r.interlacing_ok()}};
}

json markov_diag_to_json(const MarkovDiagReport& r) {
  json bins = json::array();
  for (const auto& b : r.bins)
    bins.push_back({{"count", b.count},
                    {"s2_lo", b.s2_lo},
                    {"s2_hi", b.s2_hi},
                    {"effect", b.effect},
                    {"used", b.used}});
  return {{"statistic", r.statistic},
          {"t1", r.t1},
          {"t2", r.t2},
          {"t3", r.t3},
          {"bins", bins},
          {"effect", r.effect},
          {"ci_lo", r.ci_lo},
          {"ci_hi", r.ci_hi},
          {"bootstrap", r.bootstrap},
          {"used_samples", r.used_samples},
          {"note", r.note}};
}

json factored_word_to_json(const FactoredWord& fw) {
  json arr = json::array();
  for (const auto& f : fw) {
    json jf;
    switch (f.type) {
      case WordFactor::Type::TraceCornerPow:
        jf = {{"type", "trace_corner_pow"}, {"n", f.n}};
        break;
      case WordFactor::Type::TraceLoop1:
        jf = {{"type", "trace_loop1"}, {"i", f.i}, {"n", f.n}};
        break;
      case WordFactor::Type::TraceLoop2:
        jf = {{"type", "trace_loop2"}, {"i", f.i}, {"j", f.j}, {"n", f.n}};
        break;
      case WordFactor::Type::Diag:
        jf = {{"type", "diag"}, {"i", f.i}};
        break;
      case WordFactor::Type::Pair:
        jf = {{"type", "pair"}, {"i", f.i}, {"j", f.j}};
        break;
      case WordFactor::Type::PairInv:
        jf = {{"type", "pair_inv"}, {"i", f.i}, {"j", f.j}};
        break;
      case WordFactor::Type::Triple:
        jf = {{"type", "triple"}, {"i", f.i}, {"j", f.j}, {"k", f.k}};
        break;
    }
    jf["display"] = f.str();
    arr.push_back(jf);
  }
  return arr;
}

}  // namespace uea
