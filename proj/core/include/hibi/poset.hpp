#pragma once

#include "hibi/numeric.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hibi {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Sorted list of element indices; the canonical key for subsets of a poset.
using ElementSet = std::vector<int>;

ElementSet normalized(ElementSet s);

/// Opaque element identifier: either a free-form name or an integer tuple
/// (elements of I_{d,n} are strictly increasing tuples).
class Label {
 public:
  Label() = default;
  Label(std::string name) : value_(std::move(name)) {}
  Label(const char* name) : value_(std::string(name)) {}
  Label(std::vector<int> tuple) : value_(std::move(tuple)) {}

  bool is_tuple() const { return std::holds_alternative<std::vector<int>>(value_); }
  const std::vector<int>& tuple() const { return std::get<std::vector<int>>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }

  /// "(1,3,4)" for tuples, the name otherwise.
  std::string str() const;

  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;

 private:
  std::variant<std::string, std::vector<int>> value_;
};

/// Finite poset given by its Hasse diagram. Immutable after construction.
///
/// Elements are addressed by dense indices in declaration order. Covers are
/// validated on construction: the cover graph must be acyclic and no pair may
/// be implied by transitivity.
class Poset {
 public:
  Poset() = default;

  /// Covers are (upper, lower) pairs of labels.
  static Poset from_labels(std::vector<Label> elements,
                           const std::vector<std::pair<Label, Label>>& covers);
  /// Covers are (upper, lower) pairs of indices into `elements`.
  static Poset from_indices(std::vector<Label> elements,
                            const std::vector<std::pair<int, int>>& covers);

  std::size_t size() const { return labels_.size(); }
  const Label& label(int x) const { return labels_[x]; }
  const std::vector<Label>& labels() const { return labels_; }
  std::optional<int> find(const Label& l) const;
  int index_of(const Label& l) const;  // throws UnknownElement

  bool leq(int a, int b) const { return up_[a][b]; }
  bool less(int a, int b) const { return a != b && up_[a][b]; }
  bool comparable(int a, int b) const { return up_[a][b] || up_[b][a]; }

  /// Elements >= x (including x), as a bitset over element indices.
  const Bits& up_set(int x) const { return up_[x]; }
  const Bits& down_set(int x) const { return down_[x]; }

  const std::vector<int>& lower_covers(int x) const { return lower_[x]; }
  const std::vector<int>& upper_covers(int x) const { return upper_[x]; }
  bool is_cover(int upper, int lower) const;
  /// All (upper, lower) cover pairs, sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Deterministic linear extension: Kahn's algorithm, smallest index first.
  const std::vector<int>& linear_extension() const { return topo_; }
  /// Position of each element in linear_extension().
  int topo_position(int x) const { return topo_pos_[x]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  /// Induced subposet on `subset` (indices in the result follow the sorted
  /// order of `subset`). Covers of the result are computed within the subset.
  Poset induced(std::span<const int> subset) const;

 private:
  void finalize();

  std::vector<Label> labels_;
  std::map<Label, int> index_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
  std::vector<int> topo_;
  std::vector<int> topo_pos_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

struct Grading {
  bool graded = false;
  int rank = -1;
  std::string reason;
};

/// Graded(r) iff the poset is bounded and every maximal chain has length r.
Grading grading(const Poset& p);

/// Exact number of maximal chains from the bottom to the top element.
/// Throws Unbounded when the poset lacks a unique minimum or maximum.
BigInt maximal_chain_count(const Poset& p);

/// Induced subposet {x | mu <= x <= lambda}. Throws NotComparable.
Poset interval(const Poset& p, int mu, int lambda);

/// Every downward-closed subset, empty set included, sorted
/// lexicographically by their sorted index lists. Throws SizeLimitExceeded
/// once more than `limit` ideals exist.
std::vector<ElementSet> order_ideals(const Poset& p, std::size_t limit = std::size_t{1} << 24);

// Small constructors used across tests, benchmarks and the CLI.
Poset chain_poset(int k);
Poset antichain_poset(int k);

}  // namespace hibi
