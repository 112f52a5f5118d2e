#include "rootchi_tools/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rootchi/alexoracle.hpp"
#include "rootchi/corpus.hpp"
#include "rootchi/errors.hpp"
#include "rootchi/frcomplex.hpp"
#include "rootchi/gradings.hpp"
#include "rootchi/serialize.hpp"
#include "rootchi/skein.hpp"
#include "rootchi/verify.hpp"

namespace rootchi::tools {

std::string default_corpus_path() { return ROOTCHI_CORPUS_PATH; }

namespace {

using nlohmann::json;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read " + path);
  ss << f.rdbuf();
  return ss.str();
}

std::string frac(long deg, int n) {
  return to_string(Rational(std::to_string(deg) + "/" + std::to_string(n)));
}

bool inline_spec(const std::string& s) {
  return s.rfind("PD[", 0) == 0 || s.rfind("BR[", 0) == 0 || s == "U" ||
         s.find("⊔") != std::string::npos;
}

LinkDiagram resolve_link(const std::string& spec, const std::string& corpus_path) {
  if (inline_spec(spec)) return parse_link(spec);
  for (const auto& e : load_corpus(corpus_path))
    if (e.name == spec) return parse_link(e.source).with_name(e.name);
  throw ParseError("'" + spec + "' is neither a link specification nor a corpus entry");
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    std::size_t used = 0;
    int a = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(s);
    int b = std::stoi(s.substr(dots + 2), &used);
    if (used != s.size() - dots - 2) throw std::invalid_argument(s);
    if (a < 1 || b < a) throw ParseError("n-range must satisfy 1 <= a <= b");
    return {a, b};
  } catch (const std::logic_error&) {
    throw ParseError("bad n-range '" + s + "', expected a..b");
  }
}

void print_degree_table(std::ostream& out, const DegreeTable& t, int n) {
  for (const auto& [deg, dim] : t) out << frac(deg, n) << ": " << dim << "\n";
}

std::string level_line(const LevelTable& t, int n) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, d] : t) {
    if (!s.empty()) s += "  ";
    s += frac(k.first, n) + "@" + std::to_string(k.second) + "=" + std::to_string(d);
  }
  return s;
}

struct PolyOpts {
  std::string link;
  std::string invariant = "homfly";
  std::string variant = "reduced";
  std::string format = "text";
  std::string vars = "az";
  std::string corpus;
  int n = 0;
};

int cmd_poly(const PolyOpts& o, std::ostream& out) {
  LinkDiagram d = resolve_link(o.link, o.corpus);
  HomflyInvariant h = homfly(d);
  RationalPair value;
  if (o.invariant == "homfly") {
    LaurentPoly p = o.variant == "unreduced" ? h.unreduced_az
                    : o.variant == "middle"  ? h.middle_az()
                                             : h.reduced_az();
    value = o.vars == "aq" ? az_to_aq(p) : RationalPair(p);
  } else if (o.invariant == "alexander") {
    value = alexander_from(h);
  } else if (o.invariant == "conway") {
    value = conway_from(h);
  } else {
    if (o.n < 1) throw ParseError("--invariant sln needs --n >= 1");
    if (o.variant == "middle") throw ParseError("the sl(n) polynomial has reduced and unreduced variants only");
    value = sln_from(h, o.n, o.variant == "reduced");
  }
  if (o.format == "json") {
    json j = {{"link", d.name().empty() ? o.link : d.name()},
              {"invariant", o.invariant},
              {"value", value.to_string()}};
    if (o.invariant == "homfly" || o.invariant == "sln") j["variant"] = o.variant;
    if (o.invariant == "sln") j["n"] = o.n;
    if (!value.is_polynomial()) {
      j["num"] = value.num.to_string();
      j["den"] = value.den.to_string();
    }
    out << j.dump() << "\n";
  } else {
    out << value.to_string() << "\n";
  }
  return ok;
}

struct VerifyCmd {
  std::string corpus;
  std::string range = "1..6";
  std::string report;
  int jobs = 1;
  bool approx = false;
  bool no_skein = false;
};

int cmd_verify(const VerifyCmd& o, std::ostream& out) {
  auto corpus = load_corpus(o.corpus);
  auto [lo, hi] = parse_range(o.range);
  VerifyOptions opts;
  opts.n_lo = lo;
  opts.n_hi = hi;
  opts.approx = o.approx;
  opts.skein_sites = !o.no_skein;
  auto reports = verify_corpus(corpus, opts, o.jobs);
  std::size_t pass = 0, warn = 0, fail = 0;
  for (const auto& r : reports) {
    std::size_t p = r.count(Status::pass), w = r.count(Status::warn), f = r.count(Status::fail);
    pass += p;
    warn += w;
    fail += f;
    out << r.link << ": " << p << " pass, " << w << " warn, " << f << " fail\n";
    for (const auto& c : r.checks)
      if (c.status != Status::pass)
        out << "  " << status_name(c.status) << " " << c.name << ": " << c.lhs << " | " << c.rhs << "\n";
  }
  out << reports.size() << " links, " << pass + warn + fail << " checks: " << pass << " pass, " << warn
      << " warn, " << fail << " fail\n";
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw std::ios_base::failure("cannot write " + o.report);
    f << reports_to_json(reports) << "\n";
    if (!f) throw std::ios_base::failure("write to " + o.report + " failed");
  }
  return fail == 0 ? ok : check_failed;
}

int cmd_complex(const std::string& action, const std::string& file, int n, const std::string& format,
                std::istream& in, std::ostream& out) {
  if (action == "unknot-hfkn") {
    if (n < 1) throw ParseError("unknot-hfkn needs --n >= 1");
    out << complex_to_json(unknot_hfkn(n)) << "\n";
    return ok;
  }
  if (action == "koszul") {
    out << complex_to_json(koszul_tensor(module_from_json(read_input(file, in)))) << "\n";
    return ok;
  }
  FracComplex c = complex_from_json(read_input(file, in));
  if (action == "chi") {
    out << euler_char(c).pretty() << "\n";
  } else if (action == "hom") {
    Homology h = homology(c);
    if (format == "json")
      out << homology_to_json(h) << "\n";
    else
      print_degree_table(out, h.dims, c.n());
  } else {
    SpectralSequence ss = spectral_sequence(c);
    if (format == "json") {
      out << spectral_to_json(ss, c.n()) << "\n";
    } else {
      for (const auto& p : ss.pages)
        out << "E" << p.r << ": " << level_line(p.dims, c.n()) << "  chi=" << p.chi.pretty() << "\n";
      out << "stabilization: " << ss.stabilization << "\n";
      out << "E_inf: " << level_line(ss.e_infinity, c.n()) << "\n";
    }
  }
  return ok;
}

int cmd_stats(const std::string& link, const std::string& corpus, std::ostream& out) {
  LinkDiagram d = resolve_link(link, corpus);
  DiagramStats s = diagram_stats(d);
  out << "components: " << s.components << "\n"
      << "crossings: " << s.crossings << "\n"
      << "writhe: " << s.writhe << "\n"
      << "pd: " << d.to_pd() << "\n";
  return ok;
}

struct TableCmd {
  std::string action;
  std::string file;
  std::string sign = "gr_M";
  std::string var = "gr_T";
  std::string convention = "hfk";
  int n = 0;
  int shift = 0;
};

Collapse collapse_of(const std::string& s) {
  if (s == "hfk") return Collapse::hfk;
  if (s == "hfk_primed") return Collapse::hfk_primed;
  if (s == "sln") return Collapse::sln;
  throw ParseError("unknown convention '" + s + "'");
}

int cmd_table(const TableCmd& o, std::istream& in, std::ostream& out) {
  DimTable t = table_from_json(read_input(o.file, in));
  if (o.action == "chi") {
    out << (t.arity() == 3 ? chi_trigraded(t) : chi_bigraded(t, o.sign, o.var)).to_string() << "\n";
    return ok;
  }
  if (o.n < 1) throw ParseError("--n >= 1 is required");
  if (o.action == "dict") {
    HomflyDictionary d = homfly_grading_dict(t, o.n);
    out << table_to_json(d.hfk) << "\n" << table_to_json(d.sln) << "\n";
    return ok;
  }
  DegreeTable c = collapse_to_frac(t, o.n, collapse_of(o.convention), o.shift);
  print_degree_table(out, c, o.n);
  out << "chi: " << euler_char(o.n, c).pretty() << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact link polynomials, root-of-unity evaluations and fractionally graded complexes", "rootchi"};
  app.require_subcommand(1);

  PolyOpts poly;
  poly.corpus = default_corpus_path();
  auto* p = app.add_subcommand("poly", "Compute a polynomial invariant");
  p->add_option("link", poly.link, "PD[...], BR[...] or a corpus entry name")->required();
  p->add_option("--invariant", poly.invariant)->check(CLI::IsMember({"homfly", "alexander", "sln", "conway"}));
  p->add_option("--n", poly.n, "n for the sl(n) polynomial");
  p->add_option("--variant", poly.variant)->check(CLI::IsMember({"reduced", "middle", "unreduced"}));
  p->add_option("--format", poly.format)->check(CLI::IsMember({"text", "json"}));
  p->add_option("--vars", poly.vars, "HOMFLY-PT variables: az or aq")->check(CLI::IsMember({"az", "aq"}));
  p->add_option("--corpus", poly.corpus, "corpus used for name lookup");

  VerifyCmd ver;
  ver.corpus = default_corpus_path();
  auto* v = app.add_subcommand("verify", "Check every identity over a corpus");
  v->add_option("--corpus", ver.corpus);
  v->add_option("--n-range", ver.range, "a..b");
  v->add_option("--report", ver.report, "write the JSON report here");
  v->add_option("--jobs", ver.jobs)->check(CLI::PositiveNumber);
  v->add_flag("--approx", ver.approx, "add decimal approximations to the report");
  v->add_flag("--no-skein", ver.no_skein, "skip the per-crossing skein checks");

  std::string cx_action, cx_file, cx_format = "text";
  int cx_n = 0;
  auto* cx = app.add_subcommand("complex", "Work with (1/n)Z-graded complexes");
  cx->add_option("action", cx_action)->required()->check(CLI::IsMember({"hom", "chi", "ss", "unknot-hfkn", "koszul"}));
  cx->add_option("file", cx_file, "JSON input (stdin when omitted)");
  cx->add_option("--n", cx_n);
  cx->add_option("--format", cx_format)->check(CLI::IsMember({"text", "json"}));

  std::string st_link, st_corpus = default_corpus_path();
  auto* st = app.add_subcommand("stats", "Diagram statistics");
  st->add_option("link", st_link)->required();
  st->add_option("--corpus", st_corpus);

  TableCmd tab;
  auto* tb = app.add_subcommand("table", "Dimension tables: Euler characteristics and collapses");
  tb->add_option("action", tab.action)->required()->check(CLI::IsMember({"chi", "collapse", "dict"}));
  tb->add_option("file", tab.file);
  tb->add_option("--sign", tab.sign);
  tb->add_option("--var", tab.var);
  tb->add_option("--convention", tab.convention)->check(CLI::IsMember({"hfk", "hfk_primed", "sln"}));
  tb->add_option("--n", tab.n);
  tb->add_option("--shift", tab.shift, "extra shift in units of 1/n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "rootchi: " << e.what() << "\n";
    return invalid_input;
  }

  try {
    if (p->parsed()) return cmd_poly(poly, out);
    if (v->parsed()) return cmd_verify(ver, out);
    if (cx->parsed()) return cmd_complex(cx_action, cx_file, cx_n, cx_format, in, out);
    if (st->parsed()) return cmd_stats(st_link, st_corpus, out);
    return cmd_table(tab, in, out);
  } catch (const ResourceError& e) {
    err << "rootchi: " << e.what() << "\n";
    return resource_limit;
  } catch (const ParseError& e) {
    err << "rootchi: " << e.what() << "\n";
    return invalid_input;
  } catch (const InvariantError& e) {
    err << "rootchi: " << e.what() << "\n";
    return invalid_input;
  } catch (const std::ios_base::failure& e) {
    err << "rootchi: " << e.what() << "\n";
    return io_error;
  }
}

}  // namespace rootchi::tools
