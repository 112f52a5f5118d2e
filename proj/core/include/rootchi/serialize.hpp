#pragma once

#include <string>
#include <vector>

#include "rootchi/frcomplex.hpp"
#include "rootchi/gradings.hpp"
#include "rootchi/verify.hpp"

namespace rootchi {

// {n, generators:[{name, deg_times_n, filt?}], differential:[[...]]}.
// Entries are integers or "p/q" strings.  Parse errors throw ParseError;
// structural violations throw InvariantError from FracComplex::build.
FracComplex complex_from_json(const std::string& text);
std::string complex_to_json(const FracComplex& c);

// {n, degs:[deg_times_n...], u:[[[...]]...]}
GradedModule module_from_json(const std::string& text);
std::string module_to_json(const GradedModule& m);

// {labels:[...], half:[bool...], entries:[{deg:[...], dim}]}; half slots
// accept "p/2" strings or numbers.
DimTable table_from_json(const std::string& text);
std::string table_to_json(const DimTable& t);

std::string report_to_json(const VerifyReport& r);
std::string reports_to_json(const std::vector<VerifyReport>& rs);
std::vector<VerifyReport> reports_from_json(const std::string& text);

std::string homology_to_json(const Homology& h);
std::string spectral_to_json(const SpectralSequence& ss, int n);

}  // namespace rootchi
