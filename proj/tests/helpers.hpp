#pragma once

#include "hibi/error.hpp"
#include "hibi/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace hibi::test {

inline std::optional<Errc> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline int at(const DistributiveLattice& L, std::vector<int> t) {
  return L.poset().index_of(Label(std::move(t)));
}

inline ElementSet tuples(const DistributiveLattice& L, const std::vector<std::vector<int>>& ts) {
  ElementSet s;
  for (const auto& t : ts) s.push_back(at(L, t));
  std::sort(s.begin(), s.end());
  return s;
}

inline std::vector<std::vector<int>> labels_of(const DistributiveLattice& L, const ElementSet& s) {
  std::vector<std::vector<int>> out;
  for (int x : s) out.push_back(L.poset().label(x).tuple());
  std::sort(out.begin(), out.end());
  return out;
}

inline Poset diamond_poset() {
  return Poset::from_labels({"0", "a", "b", "1"}, {{"a", "0"}, {"b", "0"}, {"1", "a"}, {"1", "b"}});
}

}  // namespace hibi::test
