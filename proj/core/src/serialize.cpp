#include "rootchi/serialize.hpp"

#include <json.hpp>

#include "rootchi/errors.hpp"

namespace rootchi {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// Wraps nlohmann type errors so callers see one exception family.
template <class F>
auto reading(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + v.dump());
}

json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

QMatrix matrix_of(const json& rows, std::size_t r, std::size_t c, const std::string& what) {
  if (!rows.is_array() || rows.size() != r) throw ParseError(what + " must have " + std::to_string(r) + " rows");
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c)
      throw ParseError(what + " row " + std::to_string(i) + " must have " + std::to_string(c) + " entries");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rational_of(rows[i][j]);
  }
  return m;
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int half_of(const json& v, bool half) {
  if (v.is_number_integer()) return 2 * v.get<int>();
  if (half && v.is_string()) {
    Rational r = parse_rational(v.get<std::string>());
    Rational d = 2 * r;
    if (d.get_den() != 1) throw ParseError("degree " + v.get<std::string>() + " is not a half-integer");
    return static_cast<int>(d.get_num().get_si());
  }
  throw ParseError("bad degree entry " + v.dump());
}

json half_json(int doubled) {
  if (doubled % 2 == 0) return doubled / 2;
  return std::to_string(doubled) + "/2";
}

json level_table_json(const LevelTable& t) {
  json out = json::array();
  for (const auto& [k, d] : t) out.push_back({{"deg_times_n", k.first}, {"level", k.second}, {"dim", d}});
  return out;
}

json check_json(const Check& c) {
  json j = {{"name", c.name}, {"status", status_name(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  if (!c.lhs_approx.empty()) j["lhs_approx"] = c.lhs_approx;
  if (!c.rhs_approx.empty()) j["rhs_approx"] = c.rhs_approx;
  return j;
}

json report_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return {{"link", r.link}, {"ell", r.ell}, {"n", {r.n_lo, r.n_hi}}, {"checks", checks}, {"ms", r.ms}};
}

Status status_of(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "warn") return Status::warn;
  throw ParseError("unknown status '" + s + "'");
}

}  // namespace

FracComplex complex_from_json(const std::string& text) {
  json j = parse_json(text);
  int n = 0;
  std::vector<Generator> gens;
  QMatrix d;
  reading("complex", [&] {
    n = j.at("n").get<int>();
    for (const auto& g : j.at("generators")) {
      Generator gen;
      gen.name = g.value("name", "g" + std::to_string(gens.size()));
      gen.deg = g.at("deg_times_n").get<int>();
      if (g.contains("filt") && !g["filt"].is_null()) gen.filt = g["filt"].get<int>();
      gens.push_back(std::move(gen));
    }
    const json& rows = j.contains("differential") ? j["differential"] : json::array();
    d = gens.empty() && rows.empty() ? QMatrix() : matrix_of(rows, gens.size(), gens.size(), "differential");
    return 0;
  });
  return FracComplex::build(n, std::move(gens), std::move(d));
}

std::string complex_to_json(const FracComplex& c) {
  json gens = json::array();
  for (const auto& g : c.generators()) {
    json e = {{"name", g.name}, {"deg_times_n", g.deg}};
    if (g.filt) e["filt"] = *g.filt;
    gens.push_back(e);
  }
  json j = {{"n", c.n()}, {"generators", gens}, {"differential", matrix_json(c.differential())}};
  return j.dump();
}

GradedModule module_from_json(const std::string& text) {
  json j = parse_json(text);
  GradedModule m;
  reading("module", [&] {
    m.n = j.at("n").get<int>();
    m.degs = j.at("degs").get<std::vector<int>>();
    if (j.contains("u"))
      for (const auto& u : j["u"]) m.u.push_back(matrix_of(u, m.size(), m.size(), "U"));
    return 0;
  });
  m.validate();
  return m;
}

std::string module_to_json(const GradedModule& m) {
  json us = json::array();
  for (const auto& u : m.u) us.push_back(matrix_json(u));
  return json{{"n", m.n}, {"degs", m.degs}, {"u", us}}.dump();
}

DimTable table_from_json(const std::string& text) {
  json j = parse_json(text);
  return reading("table", [&] {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto half = j.contains("half") ? j["half"].get<std::vector<bool>>() : std::vector<bool>(labels.size(), false);
    DimTable t(labels, half);
    for (const auto& e : j.at("entries")) {
      const json& deg = e.at("deg");
      if (!deg.is_array() || deg.size() != labels.size()) throw ParseError("entry degree has the wrong length");
      DimTable::Key k;
      for (std::size_t i = 0; i < deg.size(); ++i) k.push_back(half_of(deg[i], half[i]));
      t.add(k, e.at("dim").get<long>());
    }
    return t;
  });
}

std::string table_to_json(const DimTable& t) {
  json entries = json::array();
  for (const auto& [k, d] : t.entries()) {
    json deg = json::array();
    for (int v : k) deg.push_back(half_json(v));
    entries.push_back({{"deg", deg}, {"dim", d}});
  }
  return json{{"labels", t.labels()}, {"half", t.half()}, {"entries", entries}}.dump();
}

std::string report_to_json(const VerifyReport& r) { return report_json(r).dump(2); }

std::string reports_to_json(const std::vector<VerifyReport>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(report_json(r));
  return out.dump(2);
}

std::vector<VerifyReport> reports_from_json(const std::string& text) {
  json j = parse_json(text);
  return reading("report", [&] {
    std::vector<VerifyReport> out;
    for (const auto& e : j) {
      VerifyReport r;
      r.link = e.at("link").get<std::string>();
      r.ell = e.at("ell").get<int>();
      r.n_lo = e.at("n").at(0).get<int>();
      r.n_hi = e.at("n").at(1).get<int>();
      r.ms = e.at("ms").get<double>();
      for (const auto& c : e.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), status_of(c.at("status").get<std::string>()),
                            c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>(),
                            c.value("lhs_approx", ""), c.value("rhs_approx", "")});
      out.push_back(std::move(r));
    }
    return out;
  });
}

std::string homology_to_json(const Homology& h) {
  json dims = json::array();
  for (const auto& [deg, d] : h.dims) dims.push_back({{"deg_times_n", deg}, {"dim", d}});
  return json{{"n", h.n}, {"dims", dims}}.dump();
}

std::string spectral_to_json(const SpectralSequence& ss, int n) {
  json pages = json::array();
  for (const auto& p : ss.pages)
    pages.push_back({{"r", p.r}, {"dims", level_table_json(p.dims)}, {"chi", p.chi.to_string()}});
  return json{{"n", n},
              {"stabilization", ss.stabilization},
              {"pages", pages},
              {"e_infinity", level_table_json(ss.e_infinity)}}
      .dump();
}

}  // namespace rootchi
