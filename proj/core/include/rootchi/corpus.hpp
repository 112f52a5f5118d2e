#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rootchi {

// One corpus line: "name: SPEC | homfly = ... | conway = ...".
struct CorpusEntry {
  std::string name;
  std::string source;
  std::optional<std::string> homfly;  // reduced, in (a, z)
  std::optional<std::string> conway;  // in z
};

// '#' starts a comment line; names must be unique.
std::vector<CorpusEntry> parse_corpus(const std::string& text);
// Throws std::ios_base::failure when the file cannot be read.
std::vector<CorpusEntry> load_corpus(const std::string& path);

}  // namespace rootchi
