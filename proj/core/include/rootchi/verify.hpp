#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootchi/corpus.hpp"
#include "rootchi/laurent.hpp"
#include "rootchi/linkdiag.hpp"

namespace rootchi {

enum class Status { pass, fail, warn };
const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
  std::string lhs_approx;  // display only, filled when requested
  std::string rhs_approx;
};

struct VerifyReport {
  std::string link;
  int ell = 0;
  int n_lo = 1, n_hi = 6;
  std::vector<Check> checks;
  double ms = 0;

  bool ok() const;  // no failed check
  std::size_t count(Status s) const;
};

// Everything the checks derive from; the unreduced polynomial may be
// replaced to exercise failure paths.
struct LinkData {
  std::string name;
  LinkDiagram diagram;
  int ell = 1;
  LaurentPoly unreduced;  // P(a, z)
  std::optional<LaurentPoly> expected_homfly;
  std::optional<LaurentPoly> expected_conway;
};

LinkData analyze(const std::string& name, const LinkDiagram& d);
LinkData analyze(const CorpusEntry& entry);

// a P(L+) - a^-1 P(L-) against z P(L0) with independently computed values.
Check verify_skein_triple(const SkeinSite& site);
Check skein_triple_check(const std::string& name, const LaurentPoly& plus,
                         const LaurentPoly& minus, const LaurentPoly& zero);

std::vector<Check> verify_polynomial_identities(const LinkData& L);
std::vector<Check> verify_thm_sln(const LinkData& L, int n);
std::vector<Check> verify_thm_hfk(const LinkData& L, int n);
std::vector<Check> verify_square(const LinkData& L, int n);
Check verify_oracle(const LinkData& L);
std::vector<Check> verify_expected(const LinkData& L);

struct VerifyOptions {
  int n_lo = 1;
  int n_hi = 6;
  bool skein_sites = true;
  bool approx = false;
};

VerifyReport verify_link(const LinkData& L, const VerifyOptions& opts);
// Runs entries on a pool of jobs workers; reports keep corpus order.  A
// diagram that cannot be evaluated yields a report with one failed check.
std::vector<VerifyReport> verify_corpus(const std::vector<CorpusEntry>& corpus,
                                        const VerifyOptions& opts, int jobs = 1);

}  // namespace rootchi
