#include "rootchi/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "rootchi/alexoracle.hpp"
#include "rootchi/cyclo.hpp"
#include "rootchi/errors.hpp"
#include "rootchi/frcomplex.hpp"
#include "rootchi/gradings.hpp"
#include "rootchi/skein.hpp"

namespace rootchi {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::warn:
      return "warn";
  }
  return "fail";
}

bool VerifyReport::ok() const { return count(Status::fail) == 0; }

std::size_t VerifyReport::count(Status s) const {
  std::size_t c = 0;
  for (const auto& ch : checks)
    if (ch.status == s) ++c;
  return c;
}

LinkData analyze(const std::string& name, const LinkDiagram& d) {
  LinkData L;
  L.name = name;
  L.diagram = d;
  L.ell = d.component_count();
  L.unreduced = homfly_unreduced(d);
  return L;
}

LinkData analyze(const CorpusEntry& entry) {
  LinkData L = analyze(entry.name, parse_link(entry.source).with_name(entry.name));
  if (entry.homfly) L.expected_homfly = parse_poly(*entry.homfly, {"a", "z"});
  if (entry.conway) L.expected_conway = parse_poly(*entry.conway, {"z"});
  return L;
}

namespace {

const std::vector<std::string> kAZ{"a", "z"};

LaurentPoly t_half(int doubled, const Rational& c = 1) {
  return LaurentPoly::monomial("t", doubled, c);
}

// t^(1/2) - t^(-1/2)
LaurentPoly zt() { return t_half(1) - t_half(-1); }

// Quantities derived from P; missing ones carry the reason.
struct Derived {
  std::optional<HomflyInvariant> h;
  std::optional<LaurentPoly> delta;
  std::string error;

  explicit Derived(const LinkData& L) {
    try {
      HomflyInvariant inv;
      inv.unreduced_az = L.unreduced.with_vars(kAZ);
      inv.quotient_az = exact_div(inv.unreduced_az, LaurentPoly::monomial(kAZ, {2, 0}) -
                                                        LaurentPoly::monomial(kAZ, {-2, 0}))
                            .with_vars(kAZ);
      h = inv;
      delta = alexander_from(inv);
    } catch (const std::exception& e) {
      error = e.what();
    }
  }
};

Check failed(const std::string& name, const std::string& why) {
  return {name, Status::fail, why, "", "", ""};
}

Check compare(const std::string& name, const RationalPair& lhs, const RationalPair& rhs) {
  return {name, lhs == rhs ? Status::pass : Status::fail, lhs.to_string(), rhs.to_string(), "",
          ""};
}

Check compare(const std::string& name, const CycloNum& lhs, const CycloNum& rhs) {
  return {name, lhs == rhs ? Status::pass : Status::fail, lhs.to_string(), rhs.to_string(), "",
          ""};
}

// Runs body, turning evaluation errors into a failed check.
void guarded(std::vector<Check>& out, const std::string& name,
             const std::function<void()>& body) {
  try {
    body();
  } catch (const ResourceError&) {
    throw;
  } catch (const std::exception& e) {
    out.push_back(failed(name, e.what()));
  }
}

// p(a0, z -> image) as a rational function of t.
RationalPair at(const LaurentPoly& p, int a0, const LaurentPoly& image) {
  LaurentPoly q = substitute(p.with_vars(kAZ), "a", LaurentPoly::constant(a0));
  if (!q.var_index("z")) return RationalPair(q);
  return substitute_pair(q, "z", image);
}

Check parity_check(const std::string& name, const LaurentPoly& p, int want) {
  std::string bad;
  const LaurentPoly q = p.with_vars(kAZ);
  for (const auto& [e, c] : q.terms()) {
    int s = e[0] / 2 + e[1] / 2;
    if ((e[0] % 2) || (e[1] % 2) || ((s % 2 + 2) % 2) != want)
      bad += (bad.empty() ? "" : ", ") + LaurentPoly::monomial(kAZ, e, c).to_string();
  }
  std::string expect = want == 0 ? "every term even" : "every term odd";
  if (bad.empty()) return {name, Status::pass, expect, expect, "", ""};
  return {name, Status::fail, bad, expect, "", ""};
}

std::string fmt_approx(const CycloNum& x) {
  auto z = x.approx();
  char buf[64];
  double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re, im);
  return buf;
}

}  // namespace

Check skein_triple_check(const std::string& name, const LaurentPoly& plus,
                         const LaurentPoly& minus, const LaurentPoly& zero) {
  LaurentPoly a = LaurentPoly::monomial(kAZ, {2, 0});
  LaurentPoly ainv = LaurentPoly::monomial(kAZ, {-2, 0});
  LaurentPoly z = LaurentPoly::monomial(kAZ, {0, 2});
  LaurentPoly lhs = a * plus - ainv * minus;
  LaurentPoly rhs = z * zero;
  return {name, lhs == rhs ? Status::pass : Status::fail, lhs.to_string(), rhs.to_string(), "",
          ""};
}

Check verify_skein_triple(const SkeinSite& site) {
  const std::string name = "skein.site[" + std::to_string(site.crossing_index) + "]";
  auto res = skein_resolve(site);
  bool positive = site.diagram.crossings().at(site.crossing_index).sign > 0;
  LaurentPoly here = homfly_unreduced(site.diagram);
  LaurentPoly other = homfly_unreduced(res.switched);
  LaurentPoly zero = homfly_unreduced(res.smoothed);
  return positive ? skein_triple_check(name, here, other, zero)
                  : skein_triple_check(name, other, here, zero);
}

std::vector<Check> verify_polynomial_identities(const LinkData& L) {
  std::vector<Check> out;
  Derived D(L);
  const LaurentPoly& P = L.unreduced;
  guarded(out, "identity.unreduced_a1",
          [&] { out.push_back(compare("identity.unreduced_a1", at(P, 1, zt()), LaurentPoly())); });
  guarded(out, "identity.unreduced_am1", [&] {
    // q = -t^(-1/2) gives z = t^(1/2) - t^(-1/2).
    out.push_back(compare("identity.unreduced_am1", at(P, -1, zt()), LaurentPoly()));
  });
  const char* names[] = {"identity.reduced_a1", "identity.middle_a1", "identity.reduced_am1",
                         "identity.middle_am1", "parity.reduced", "parity.middle"};
  if (!D.h) {
    for (const char* n : names) out.push_back(failed(n, D.error));
  } else {
    const LaurentPoly reduced = D.h->reduced_az();
    const LaurentPoly middle = D.h->middle_az();
    const LaurentPoly& delta = *D.delta;
    guarded(out, names[0],
            [&] { out.push_back(compare(names[0], at(reduced, 1, zt()), delta)); });
    guarded(out, names[1], [&] {
      out.push_back(compare(names[1], at(middle, 1, zt()), RationalPair(delta, -zt())));
    });
    guarded(out, names[2],
            [&] { out.push_back(compare(names[2], at(reduced, -1, -zt()), delta)); });
    guarded(out, names[3], [&] {
      out.push_back(compare(names[3], at(middle, -1, -zt()), RationalPair(delta, zt())));
    });
    out.push_back(parity_check(names[4], reduced, 0));
    out.push_back(parity_check(names[5], middle, 1));
  }
  out.push_back(parity_check("parity.unreduced", P, 0));
  return out;
}

std::vector<Check> verify_thm_sln(const LinkData& L, int n) {
  std::vector<Check> out;
  const std::string tag = "[n=" + std::to_string(n) + "]";
  Derived D(L);
  if (!D.h) {
    out.push_back(failed("sln.reduced" + tag, D.error));
    out.push_back(failed("sln.unreduced" + tag, D.error));
    return out;
  }
  guarded(out, "sln.reduced" + tag, [&] {
    LaurentPoly pn = sln_from(*D.h, n, true);
    CycloNum lhs = eval_at_root(pn, n, 1);
    CycloNum rhs = n == 1 ? CycloNum(2, 1) : eval_half_at_root(*D.delta, n, n + 1);
    out.push_back(compare("sln.reduced" + tag, lhs, rhs));
  });
  guarded(out, "sln.unreduced" + tag, [&] {
    LaurentPoly pn = sln_from(*D.h, n, false);
    CycloNum lhs = eval_at_root(pn, n, 1);
    CycloNum rhs(2 * n, Rational(n == 1 ? 1 : 0));
    out.push_back(compare("sln.unreduced" + tag, lhs, rhs));
  });
  return out;
}

std::vector<Check> verify_thm_hfk(const LinkData& L, int n) {
  std::vector<Check> out;
  const std::string tag = "[n=" + std::to_string(n) + "]";
  if (n == 1) {
    // HFK-bar_1 and HFK_1 both have homology Q in degree 0.
    FracComplex q = FracComplex::build(1, {{"x", 0, std::nullopt}}, QMatrix(1, 1));
    out.push_back(compare("hfk.n1" + tag, euler_char(q), CycloNum(2, 1)));
    return out;
  }
  Derived D(L);
  if (!D.h) {
    for (const char* c : {"hfk.shift", "hfk.koszul_chain", "hfk.module_chi", "hfk.koszul_module",
                          "hfk.unreduced_zero"})
      out.push_back(failed(c + tag, D.error));
    return out;
  }
  const LaurentPoly& delta = *D.delta;
  const int ell = L.ell;
  CycloNum at_minus = eval_half_at_root(delta, n, n - 1);  // t^(1/2) = -e^{-pi i/n}
  CycloNum chi_unprimed = root(n, 1 - ell) * at_minus;
  CycloNum chi_primed = eval_half_at_root(delta, n, n + 1);
  out.push_back(compare("hfk.shift" + tag, chi_primed,
                        root(n, static_cast<long>(1 - ell) * (n - 1)) * chi_unprimed));

  CycloNum factor = (CycloNum(2 * n, 1) - root(n, 2)).pow(ell - 1);
  CycloNum hat_prediction = root(n, 1 - ell) * factor * at_minus;
  guarded(out, "hfk.koszul_chain" + tag, [&] {
    LaurentPoly hat = (t_half(-1) - t_half(1)).pow(ell - 1) * delta;
    DegreeTable collapsed = collapse_to_frac(table_from_poly(hat), n, Collapse::hfk);
    out.push_back(compare("hfk.koszul_chain" + tag, euler_char(n, collapsed), hat_prediction));
  });
  guarded(out, "hfk.koszul_module" + tag, [&] {
    // HFK-bar realized with trivial U-action, then tensored with K.
    LaurentPoly bar = t_half(ell - 1, (ell - 1) % 2 == 0 ? 1 : -1) * delta;
    DegreeTable collapsed = collapse_to_frac(table_from_poly(bar), n, Collapse::hfk);
    GradedModule m;
    m.n = n;
    for (const auto& [deg, dim] : collapsed)
      for (std::size_t i = 0; i < dim; ++i) m.degs.push_back(deg);
    m.u.assign(ell - 1, QMatrix(m.size(), m.size()));
    out.push_back(compare("hfk.module_chi" + tag, euler_char(m), chi_unprimed));
    out.push_back(
        compare("hfk.koszul_module" + tag, euler_char(koszul_tensor(m)), hat_prediction));
  });
  guarded(out, "hfk.unreduced_zero" + tag, [&] {
    HomflyInvariant with_unknot{D.h->unreduced_az * unknot_value(),
                                D.h->quotient_az * unknot_value()};
    LaurentPoly split = alexander_from(with_unknot);
    CycloNum chi = root(n, -ell) * eval_half_at_root(split, n, n - 1);
    out.push_back(compare("hfk.unreduced_zero" + tag, chi, CycloNum(2 * n)));
  });
  return out;
}

std::vector<Check> verify_square(const LinkData& L, int n) {
  std::vector<Check> out;
  const std::string tag = "[n=" + std::to_string(n) + "]";
  if (n < 2) return out;
  Derived D(L);
  if (!D.h) {
    out.push_back(failed("square.AB" + tag, D.error));
    out.push_back(failed("square.BC" + tag, D.error));
    return out;
  }
  guarded(out, "square.AB" + tag, [&] {
    CycloNum a = eval_at_root(sln_from(*D.h, n, true), n, 1);
    CycloNum b = eval_half_at_root(*D.delta, n, n + 1);
    LaurentPoly at_minus_one = substitute(D.h->reduced_az(), "a", LaurentPoly::constant(-1));
    CycloNum z = root(n, 1) - root(n, -1);
    CycloNum c = eval_poly(at_minus_one, {{"z", z}}, 2 * n);
    out.push_back(compare("square.AB" + tag, a, b));
    out.push_back(compare("square.BC" + tag, b, c));
  });
  return out;
}

Check verify_oracle(const LinkData& L) {
  const std::string name = "oracle.alexander";
  Derived D(L);
  if (!D.h) return failed(name, D.error);
  AlexClass cls = alex_matrix_poly(L.diagram);
  const LaurentPoly& delta = *D.delta;
  if (cls.poly.is_zero())
    return {name, delta.is_zero() ? Status::pass : Status::fail, delta.to_string(), "0", "", ""};
  SymmetricAlex sym;
  try {
    sym = normalize_symmetric(cls);
  } catch (const InvariantError& e) {
    return failed(name, e.what());
  }
  if (sym.poly == delta) return {name, Status::pass, delta.to_string(), sym.poly.to_string(), "", ""};
  if (sym.sign_ambiguous && -sym.poly == delta)
    return {name, Status::warn, delta.to_string(), "-(" + sym.poly.to_string() + ")", "", ""};
  return {name, Status::fail, delta.to_string(), sym.poly.to_string(), "", ""};
}

std::vector<Check> verify_expected(const LinkData& L) {
  std::vector<Check> out;
  if (!L.expected_homfly && !L.expected_conway) return out;
  Derived D(L);
  if (L.expected_homfly) {
    if (!D.h)
      out.push_back(failed("expected.homfly", D.error));
    else
      out.push_back(compare("expected.homfly", D.h->reduced_az(), *L.expected_homfly));
  }
  if (L.expected_conway) {
    if (!D.h)
      out.push_back(failed("expected.conway", D.error));
    else
      out.push_back(compare("expected.conway", conway_from(*D.h), *L.expected_conway));
  }
  return out;
}

VerifyReport verify_link(const LinkData& L, const VerifyOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.link = L.name;
  r.ell = L.ell;
  r.n_lo = opts.n_lo;
  r.n_hi = opts.n_hi;
  auto append = [&](std::vector<Check> cs) {
    for (auto& c : cs) r.checks.push_back(std::move(c));
  };
  if (opts.skein_sites)
    for (std::size_t i = 0; i < L.diagram.crossing_count(); ++i)
      r.checks.push_back(verify_skein_triple({L.diagram, i}));
  append(verify_polynomial_identities(L));
  for (int n = opts.n_lo; n <= opts.n_hi; ++n) {
    append(verify_thm_sln(L, n));
    append(verify_thm_hfk(L, n));
    append(verify_square(L, n));
  }
  r.checks.push_back(verify_oracle(L));
  append(verify_expected(L));
  if (opts.approx)
    for (auto& c : r.checks) {
      try {
        c.lhs_approx = fmt_approx(parse_cyclo(c.lhs));
        c.rhs_approx = fmt_approx(parse_cyclo(c.rhs));
      } catch (const ParseError&) {
      }
    }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerifyReport> verify_corpus(const std::vector<CorpusEntry>& corpus,
                                        const VerifyOptions& opts, int jobs) {
  std::vector<VerifyReport> reports(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        reports[i] = verify_link(analyze(corpus[i]), opts);
      } catch (const std::exception& e) {
        VerifyReport r;
        r.link = corpus[i].name;
        r.n_lo = opts.n_lo;
        r.n_hi = opts.n_hi;
        r.checks.push_back(failed("evaluate", e.what()));
        reports[i] = std::move(r);
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return reports;
}

}  // namespace rootchi
