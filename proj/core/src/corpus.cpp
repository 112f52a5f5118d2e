#include "rootchi/corpus.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rootchi/errors.hpp"

namespace rootchi {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw ParseError("corpus line " + std::to_string(lineno) + ": expected 'name: diagram'");
    CorpusEntry e;
    e.name = strip(s.substr(0, colon));
    if (e.name.empty()) throw ParseError("corpus line " + std::to_string(lineno) + ": empty name");
    if (!names.insert(e.name).second)
      throw ParseError("corpus line " + std::to_string(lineno) + ": duplicate name " + e.name);
    std::vector<std::string> fields;
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (true) {
      auto bar = rest.find('|', pos);
      fields.push_back(strip(rest.substr(pos, bar == std::string::npos ? bar : bar - pos)));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    e.source = fields[0];
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto eq = fields[i].find('=');
      if (eq == std::string::npos)
        throw ParseError("corpus line " + std::to_string(lineno) + ": expected 'key = value'");
      std::string key = strip(fields[i].substr(0, eq));
      std::string value = strip(fields[i].substr(eq + 1));
      if (key == "homfly")
        e.homfly = value;
      else if (key == "conway")
        e.conway = value;
      else
        throw ParseError("corpus line " + std::to_string(lineno) + ": unknown key " + key);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read corpus file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_corpus(ss.str());
}

}  // namespace rootchi
