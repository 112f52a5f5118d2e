#include "rootchi/linkdiag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "rootchi/errors.hpp"

namespace rootchi {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    int r = find(it->second);
    parent[x] = r;
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

using Occurrences = std::map<int, std::vector<EdgeEnd>>;

Occurrences occurrences(const std::vector<std::array<int, 4>>& pd) {
  Occurrences occ;
  for (int x = 0; x < static_cast<int>(pd.size()); ++x)
    for (int s = 0; s < 4; ++s) {
      if (pd[x][s] <= 0) throw InvariantError("edge labels must be positive integers");
      occ[pd[x][s]].push_back({x, s});
    }
  for (const auto& [label, ends] : occ)
    if (ends.size() != 2)
      throw InvariantError("edge label " + std::to_string(label) + " occurs " +
                           std::to_string(ends.size()) + " times");
  return occ;
}

EdgeEnd partner(const Occurrences& occ, const std::vector<std::array<int, 4>>& pd, EdgeEnd e) {
  const auto& ends = occ.at(pd[e.crossing][e.slot]);
  return (ends[0].crossing == e.crossing && ends[0].slot == e.slot) ? ends[1] : ends[0];
}

// Role of every crossing end (+1 incoming, -1 outgoing) propagated from the
// under-strand constraints.  Undetermined crossings are resolved by the label
// heuristic when fallback is set.
std::vector<std::array<int, 4>> infer_roles(const std::vector<std::array<int, 4>>& pd,
                                            const Occurrences& occ, bool fallback) {
  std::vector<std::array<int, 4>> role(pd.size(), std::array<int, 4>{0, 0, 0, 0});
  std::vector<EdgeEnd> queue;
  auto set = [&](EdgeEnd e, int r) {
    int& cur = role[e.crossing][e.slot];
    if (cur == r) return;
    if (cur != 0) throw InvariantError("inconsistent orientation");
    cur = r;
    queue.push_back(e);
  };
  auto drain = [&]() {
    while (!queue.empty()) {
      EdgeEnd e = queue.back();
      queue.pop_back();
      int r = role[e.crossing][e.slot];
      set(partner(occ, pd, e), -r);
      if (e.slot % 2 == 1) set({e.crossing, 4 - e.slot}, -r);
    }
  };
  for (int x = 0; x < static_cast<int>(pd.size()); ++x) {
    set({x, 0}, 1);
    set({x, 2}, -1);
  }
  drain();
  if (!fallback) return role;
  while (true) {
    std::vector<int> open;
    for (int x = 0; x < static_cast<int>(pd.size()); ++x)
      if (role[x][1] == 0) open.push_back(x);
    if (open.empty()) break;
    std::optional<EdgeEnd> pick;
    for (int x : open)
      if (pd[x][3] == pd[x][1] + 1) {
        pick = EdgeEnd{x, 1};
        break;
      }
    if (!pick)
      for (int x : open)
        if (pd[x][1] == pd[x][3] + 1) {
          pick = EdgeEnd{x, 3};
          break;
        }
    if (!pick) pick = EdgeEnd{open.front(), 1};
    set(*pick, 1);
    drain();
  }
  return role;
}

// Faces of the embedding given by the clockwise slot order.
void check_planar(const std::vector<std::array<int, 4>>& pd, const Occurrences& occ) {
  const int c = static_cast<int>(pd.size());
  if (c == 0) return;
  std::vector<char> seen(4 * c, 0);
  int faces = 0;
  for (int d = 0; d < 4 * c; ++d) {
    if (seen[d]) continue;
    ++faces;
    int cur = d;
    while (!seen[cur]) {
      seen[cur] = 1;
      EdgeEnd p = partner(occ, pd, {cur / 4, cur % 4});
      cur = p.crossing * 4 + (p.slot + 1) % 4;
    }
  }
  UnionFind uf;
  for (int x = 0; x < c; ++x) uf.find(-x - 1);
  for (const auto& [label, ends] : occ) uf.unite(-ends[0].crossing - 1, -ends[1].crossing - 1);
  int pieces = 0;
  for (int x = 0; x < c; ++x)
    if (uf.find(-x - 1) == -x - 1) ++pieces;
  if (faces != c + 2 * pieces) throw InvariantError("diagram is not planar");
}

}  // namespace

void LinkDiagram::build(std::vector<Crossing> crossings, int unknots, bool check_signs) {
  if (unknots < 0) throw InvariantError("negative unknot count");
  std::vector<std::array<int, 4>> pd;
  for (const auto& x : crossings) {
    if (x.sign != 1 && x.sign != -1) throw InvariantError("crossing sign must be +1 or -1");
    pd.push_back(x.e);
  }
  Occurrences occ = occurrences(pd);
  if (check_signs) {
    auto role = infer_roles(pd, occ, false);
    for (std::size_t x = 0; x < crossings.size(); ++x)
      if (role[x][1] != 0 && (role[x][1] > 0 ? 1 : -1) != crossings[x].sign)
        throw InvariantError("stored crossing sign does not match orientation");
  }
  // Each label needs one incoming and one outgoing end.
  std::map<int, EdgeEnd> heads, tails;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x) {
    const auto& cr = crossings[x];
    for (int s = 0; s < 4; ++s) {
      bool in = s == 0 || s == cr.in_over_slot();
      auto& dst = in ? heads : tails;
      if (!dst.emplace(cr.e[s], EdgeEnd{x, s}).second)
        throw InvariantError("inconsistent orientation at edge " + std::to_string(cr.e[s]));
    }
  }
  check_planar(pd, occ);

  // Traverse components in order of their smallest label.
  std::map<int, int> relabel;
  int next = 1;
  for (const auto& [label, ends] : occ) {
    if (relabel.count(label)) continue;
    int l = label;
    do {
      relabel[l] = next++;
      EdgeEnd h = heads.at(l);
      l = crossings[h.crossing].e[(h.slot + 2) % 4];
    } while (l != label);
  }
  crossings_.clear();
  for (const auto& cr : crossings) {
    Crossing n = cr;
    for (auto& v : n.e) v = relabel.at(v);
    crossings_.push_back(n);
  }
  unknots_ = unknots;

  const int edges = 2 * static_cast<int>(crossings_.size());
  head_.assign(edges + 1, EdgeEnd{});
  tail_.assign(edges + 1, EdgeEnd{});
  comp_of_.assign(edges + 1, -1);
  for (int x = 0; x < static_cast<int>(crossings_.size()); ++x) {
    const auto& cr = crossings_[x];
    for (int s = 0; s < 4; ++s) {
      bool in = s == 0 || s == cr.in_over_slot();
      (in ? head_ : tail_)[cr.e[s]] = EdgeEnd{x, s};
    }
  }
  components_.clear();
  for (int l = 1; l <= edges; ++l) {
    if (comp_of_[l] >= 0) continue;
    std::vector<int> comp;
    int cur = l;
    do {
      comp_of_[cur] = static_cast<int>(components_.size());
      comp.push_back(cur);
      EdgeEnd h = head_[cur];
      cur = crossings_[h.crossing].e[(h.slot + 2) % 4];
    } while (cur != l);
    components_.push_back(std::move(comp));
  }
}

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>>& pd, int unknots,
                                 std::string name) {
  Occurrences occ = occurrences(pd);
  auto role = infer_roles(pd, occ, true);
  std::vector<Crossing> crossings;
  for (std::size_t x = 0; x < pd.size(); ++x) crossings.push_back({pd[x], role[x][1] > 0 ? 1 : -1});
  LinkDiagram d;
  d.build(std::move(crossings), unknots, false);
  d.name_ = std::move(name);
  return d;
}

LinkDiagram LinkDiagram::from_signed(std::vector<Crossing> crossings, int unknots,
                                     std::string name) {
  LinkDiagram d;
  d.build(std::move(crossings), unknots, true);
  d.name_ = std::move(name);
  return d;
}

LinkDiagram LinkDiagram::unlink(int components) {
  if (components < 1) throw InvariantError("a link needs at least one component");
  LinkDiagram d;
  d.build({}, components, false);
  return d;
}

LinkDiagram LinkDiagram::with_name(std::string name) const {
  LinkDiagram d = *this;
  d.name_ = std::move(name);
  return d;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

LinkDiagram LinkDiagram::switched(std::size_t i) const {
  if (i >= crossings_.size()) throw InvariantError("crossing index out of range");
  std::vector<Crossing> cs = crossings_;
  Crossing& x = cs[i];
  const auto e = x.e;
  if (x.sign > 0)
    x.e = {e[1], e[2], e[3], e[0]};
  else
    x.e = {e[3], e[0], e[1], e[2]};
  x.sign = -x.sign;
  LinkDiagram d;
  d.build(std::move(cs), unknots_, false);
  return d;
}

namespace {

// Removes crossing i after merging the given label pairs.  Merged classes
// that no longer occur anywhere are closed circles.
LinkDiagram remove_crossing(const std::vector<Crossing>& crossings, int unknots, std::size_t i,
                            const std::vector<std::pair<int, int>>& merges,
                            const std::vector<int>& circle_candidates) {
  UnionFind uf;
  for (auto [a, b] : merges) uf.unite(a, b);
  std::vector<Crossing> rest;
  for (std::size_t j = 0; j < crossings.size(); ++j) {
    if (j == i) continue;
    Crossing c = crossings[j];
    for (auto& v : c.e) v = uf.find(v);
    rest.push_back(c);
  }
  std::vector<int> gone;
  for (int l : circle_candidates) {
    int r = uf.find(l);
    bool present = false;
    for (const auto& c : rest)
      if (std::find(c.e.begin(), c.e.end(), r) != c.e.end()) present = true;
    if (!present && std::find(gone.begin(), gone.end(), r) == gone.end()) gone.push_back(r);
  }
  return LinkDiagram::from_signed(std::move(rest), unknots + static_cast<int>(gone.size()));
}

}  // namespace

LinkDiagram LinkDiagram::smoothed(std::size_t i) const {
  if (i >= crossings_.size()) throw InvariantError("crossing index out of range");
  const Crossing& x = crossings_[i];
  return remove_crossing(crossings_, unknots_, i,
                         {{x.in_under(), x.out_over()}, {x.in_over(), x.out_under()}},
                         {x.e[0], x.e[1], x.e[2], x.e[3]});
}

LinkDiagram LinkDiagram::simplified() const {
  LinkDiagram d = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < d.crossings_.size() && !changed; ++i) {
      const auto& e = d.crossings_[i].e;
      for (int s = 0; s < 4; ++s) {
        if (e[s] != e[(s + 1) % 4]) continue;
        int p = e[(s + 2) % 4], q = e[(s + 3) % 4];
        d = remove_crossing(d.crossings_, d.unknots_, i, {{p, q}}, {p});
        changed = true;
        break;
      }
    }
  }
  d.name_ = name_;
  return d;
}

std::vector<LinkDiagram> LinkDiagram::split_pieces() const {
  UnionFind uf;
  const int c = static_cast<int>(crossings_.size());
  for (int x = 0; x < c; ++x) uf.find(x);
  for (int l = 1; l <= 2 * c; ++l) uf.unite(head_[l].crossing, tail_[l].crossing);
  std::map<int, std::vector<Crossing>> groups;
  for (int x = 0; x < c; ++x) groups[uf.find(x)].push_back(crossings_[x]);
  std::vector<LinkDiagram> out;
  for (auto& [root, cs] : groups) {
    LinkDiagram d;
    d.build(std::move(cs), 0, false);
    out.push_back(std::move(d));
  }
  return out;
}

LinkDiagram LinkDiagram::disjoint_union(const LinkDiagram& other) const {
  std::vector<Crossing> cs = crossings_;
  int offset = 2 * static_cast<int>(crossings_.size());
  for (auto c : other.crossings_) {
    for (auto& v : c.e) v += offset;
    cs.push_back(c);
  }
  LinkDiagram d;
  d.build(std::move(cs), unknots_ + other.unknots_, false);
  d.name_ = name_;
  return d;
}

LinkDiagram LinkDiagram::mirror() const {
  LinkDiagram d = *this;
  for (std::size_t i = 0; i < crossings_.size(); ++i) d = d.switched(i);
  d.name_ = name_;
  return d;
}

std::vector<int> LinkDiagram::key_from(int start) const {
  const int edges = 2 * static_cast<int>(crossings_.size());
  std::vector<int> fresh(edges + 1, 0), old_of(edges + 1, 0);
  int counter = 1;
  auto label_component = [&](int s) {
    int l = s;
    do {
      fresh[l] = counter;
      old_of[counter++] = l;
      EdgeEnd h = head_[l];
      l = crossings_[h.crossing].e[(h.slot + 2) % 4];
    } while (l != s);
  };
  label_component(start);
  for (int k = 1; counter <= edges; ++k) {
    if (k >= counter) {
      for (int l = 1; l <= edges; ++l)
        if (!fresh[l]) {
          label_component(l);
          break;
        }
      continue;
    }
    EdgeEnd h = head_[old_of[k]];
    const Crossing& x = crossings_[h.crossing];
    int other_in = (h.slot % 2 == 0) ? x.in_over() : x.in_under();
    if (!fresh[other_in]) label_component(other_in);
  }
  std::vector<std::array<int, 5>> rows;
  for (const auto& x : crossings_)
    rows.push_back({fresh[x.e[0]], fresh[x.e[1]], fresh[x.e[2]], fresh[x.e[3]], x.sign});
  std::sort(rows.begin(), rows.end());
  std::vector<int> key{static_cast<int>(crossings_.size()), unknots_};
  for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
  return key;
}

std::vector<int> LinkDiagram::canonical_key() const {
  const int edges = 2 * static_cast<int>(crossings_.size());
  if (edges == 0) return {0, unknots_};
  std::vector<int> best;
  for (int s = 1; s <= edges; ++s) {
    auto k = key_from(s);
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream os;
  bool first = true;
  if (!crossings_.empty()) {
    os << "PD[";
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& e = crossings_[i].e;
      os << (i ? "," : "") << "X[" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "]";
    }
    os << "]";
    first = false;
  }
  for (int u = 0; u < unknots_; ++u) {
    os << (first ? "" : " ⊔ ") << "U";
    first = false;
  }
  return os.str();
}

DiagramStats diagram_stats(const LinkDiagram& d) {
  return {d.component_count(), d.writhe(), static_cast<int>(d.crossing_count())};
}

SkeinResolution skein_resolve(const SkeinSite& site) {
  return {site.diagram.switched(site.crossing_index), site.diagram.smoothed(site.crossing_index)};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string without_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty()) throw ParseError("expected integer in '" + context + "'");
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in '" + context + "'");
  }
  if (pos != s.size()) throw ParseError("bad integer '" + s + "' in '" + context + "'");
  return v;
}

std::vector<std::array<int, 4>> parse_pd_tuples(const std::string& text) {
  std::string s = without_spaces(text);
  if (s.rfind("PD[", 0) != 0 || s.back() != ']') throw ParseError("expected PD[...]: '" + text + "'");
  std::string body = s.substr(3, s.size() - 4);
  std::vector<std::array<int, 4>> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body.compare(pos, 2, "X[") != 0) throw ParseError("expected X[...] in '" + text + "'");
    auto close = body.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated X[ in '" + text + "'");
    std::string inner = body.substr(pos + 2, close - pos - 2);
    std::array<int, 4> x{};
    std::stringstream ss(inner);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
      if (k >= 4) throw ParseError("crossing with more than four labels in '" + text + "'");
      x[k++] = parse_int(item, text);
    }
    if (k != 4) throw ParseError("crossing with fewer than four labels in '" + text + "'");
    for (int v : x)
      if (v <= 0) throw ParseError("edge labels must be positive in '" + text + "'");
    out.push_back(x);
    pos = close + 1;
    if (pos < body.size()) {
      if (body[pos] != ',') throw ParseError("expected ',' between crossings in '" + text + "'");
      ++pos;
    }
  }
  return out;
}

std::vector<std::string> split_union(const std::string& text) {
  static const std::string sep = "⊔";
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto p = text.find(sep, start);
    parts.push_back(strip(text.substr(start, p == std::string::npos ? p : p - start)));
    if (p == std::string::npos) break;
    start = p + sep.size();
  }
  return parts;
}

LinkDiagram wrap_errors(const std::string& text, LinkDiagram (*fn)(const std::string&)) {
  try {
    return fn(text);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid diagram '") + text + "': " + e.what());
  }
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  return wrap_errors(text, [](const std::string& t) {
    std::vector<std::array<int, 4>> pd;
    int unknots = 0;
    for (const auto& part : split_union(t)) {
      if (part == "U") {
        ++unknots;
      } else if (part.rfind("PD", 0) == 0) {
        if (!pd.empty()) throw ParseError("only one PD part is allowed: '" + t + "'");
        pd = parse_pd_tuples(part);
      } else {
        throw ParseError("unrecognized diagram part '" + part + "'");
      }
    }
    if (pd.empty() && unknots == 0) throw ParseError("empty diagram");
    return LinkDiagram::from_pd(pd, unknots);
  });
}

LinkDiagram parse_braid(const std::vector<int>& word, int strands) {
  if (strands < 1) throw ParseError("braid needs at least one strand");
  int next = 1;
  std::vector<int> bottom(strands), cur(strands);
  for (int p = 0; p < strands; ++p) bottom[p] = cur[p] = next++;
  std::vector<Crossing> cs;
  for (int g : word) {
    int i = std::abs(g);
    if (g == 0 || i >= strands)
      throw ParseError("braid generator " + std::to_string(g) + " out of range for " +
                       std::to_string(strands) + " strands");
    int a = cur[i - 1], b = cur[i];
    int c = next++, d = next++;
    if (g > 0)
      cs.push_back({{b, a, c, d}, 1});
    else
      cs.push_back({{a, c, d, b}, -1});
    cur[i - 1] = c;
    cur[i] = d;
  }
  UnionFind uf;
  int unknots = 0;
  for (int p = 0; p < strands; ++p) {
    if (cur[p] == bottom[p])
      ++unknots;
    else
      uf.unite(cur[p], bottom[p]);
  }
  for (auto& x : cs)
    for (auto& v : x.e) v = uf.find(v);
  return LinkDiagram::from_signed(std::move(cs), unknots);
}

LinkDiagram parse_braid(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("BR[", 0) != 0 || s.back() != ']') throw ParseError("expected BR[...]: '" + text + "'");
  std::string body = s.substr(3, s.size() - 4);
  auto semi = body.find(';');
  if (semi == std::string::npos) throw ParseError("expected ';' in '" + text + "'");
  int strands = parse_int(strip(body.substr(0, semi)), text);
  std::string rest = body.substr(semi + 1);
  for (char& c : rest)
    if (c == ',') c = ' ';
  std::vector<int> word;
  std::stringstream ss(rest);
  std::string tok;
  while (ss >> tok) word.push_back(parse_int(tok, text));
  try {
    return parse_braid(word, strands);
  } catch (const InvariantError& e) {
    throw ParseError(std::string("invalid braid '") + text + "': " + e.what());
  }
}

LinkDiagram parse_link(const std::string& text) {
  auto parts = split_union(text);
  std::optional<LinkDiagram> acc;
  int unknots = 0;
  for (const auto& part : parts) {
    if (part == "U") {
      ++unknots;
      continue;
    }
    LinkDiagram d;
    if (part.rfind("PD", 0) == 0)
      d = parse_pd(part);
    else if (part.rfind("BR", 0) == 0)
      d = parse_braid(part);
    else
      throw ParseError("unrecognized link specification '" + part + "'");
    acc = acc ? acc->disjoint_union(d) : d;
  }
  if (!acc && unknots == 0) throw ParseError("empty link specification");
  if (!acc) return LinkDiagram::unlink(unknots);
  if (unknots) acc = acc->disjoint_union(LinkDiagram::unlink(unknots));
  return *acc;
}

}  // namespace rootchi
