#pragma once

#include <array>
#include <string>
#include <vector>

namespace rootchi {

// Edge labels listed clockwise, starting from the incoming under-strand.  A
// crossing is positive when its over-strand runs from slot 1 to slot 3.
struct Crossing {
  std::array<int, 4> e{};
  int sign = 1;

  int in_under() const { return e[0]; }
  int out_under() const { return e[2]; }
  int in_over() const { return sign > 0 ? e[1] : e[3]; }
  int out_over() const { return sign > 0 ? e[3] : e[1]; }
  int in_over_slot() const { return sign > 0 ? 1 : 3; }

  friend bool operator==(const Crossing& x, const Crossing& y) {
    return x.e == y.e && x.sign == y.sign;
  }
};

struct EdgeEnd {
  int crossing = -1;
  int slot = -1;
};

// Oriented link diagram.  Labels are normalized to 1..2c: components are
// numbered consecutively along their orientation.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Infers orientation and signs from unsigned PD tuples.
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>>& pd, int unknots = 0,
                             std::string name = {});
  // Validates the given signs against the recomputed orientation.
  static LinkDiagram from_signed(std::vector<Crossing> crossings, int unknots = 0,
                                 std::string name = {});
  static LinkDiagram unlink(int components);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int unknot_count() const { return unknots_; }
  const std::string& name() const { return name_; }
  LinkDiagram with_name(std::string name) const;

  int writhe() const;
  // Components with crossings plus crossingless unknots.
  int component_count() const { return static_cast<int>(components_.size()) + unknots_; }
  // Edge labels of each component in traversal order.
  const std::vector<std::vector<int>>& components() const { return components_; }
  // Component index of an edge label.
  int component_of(int label) const { return comp_of_[label]; }
  EdgeEnd head(int label) const { return head_[label]; }
  EdgeEnd tail(int label) const { return tail_[label]; }

  LinkDiagram switched(std::size_t i) const;
  // Oriented resolution; crossingless circles become unknots.
  LinkDiagram smoothed(std::size_t i) const;
  // Removes first Reidemeister kinks.
  LinkDiagram simplified() const;
  // Connected pieces of the crossing graph, without unknots.
  std::vector<LinkDiagram> split_pieces() const;
  LinkDiagram disjoint_union(const LinkDiagram& other) const;
  LinkDiagram mirror() const;

  // Relabeling-invariant encoding of a diagram.
  std::vector<int> canonical_key() const;

  std::string to_pd() const;

  friend bool operator==(const LinkDiagram& x, const LinkDiagram& y) {
    return x.crossings_ == y.crossings_ && x.unknots_ == y.unknots_;
  }

 private:
  void build(std::vector<Crossing> crossings, int unknots, bool check_signs);
  std::vector<int> key_from(int start) const;

  std::vector<Crossing> crossings_;
  int unknots_ = 0;
  std::string name_;
  std::vector<std::vector<int>> components_;
  std::vector<int> comp_of_;
  std::vector<EdgeEnd> head_, tail_;
};

struct DiagramStats {
  int components = 0;
  int writhe = 0;
  int crossings = 0;
};

DiagramStats diagram_stats(const LinkDiagram& d);

struct SkeinSite {
  LinkDiagram diagram;
  std::size_t crossing_index = 0;
};

struct SkeinResolution {
  LinkDiagram switched;
  LinkDiagram smoothed;
};

SkeinResolution skein_resolve(const SkeinSite& site);

// "PD[X[1,4,2,5],...]"
LinkDiagram parse_pd(const std::string& text);
// Closure of a braid word on the given number of strands.
LinkDiagram parse_braid(const std::vector<int>& word, int strands);
// "BR[strands; g1 g2 ...]"
LinkDiagram parse_braid(const std::string& text);
// PD, BR or U parts joined by the disjoint union sign.
LinkDiagram parse_link(const std::string& text);

}  // namespace rootchi
