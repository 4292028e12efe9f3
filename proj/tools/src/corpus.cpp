#include "hibi/corpus.hpp"

#include "hibi/error.hpp"
#include "hibi/grassmann.hpp"
#include "hibi/multiplicity.hpp"

#include <set>

namespace hibi {

DistributiveLattice chain_product(const std::vector<int>& sizes) {
  if (sizes.empty()) throw Error(Errc::BadParameters, "at least one chain is required");
  std::vector<std::vector<int>> points{{}};
  for (int s : sizes) {
    if (s < 1) throw Error(Errc::BadParameters, "chain sizes must be positive");
    std::vector<std::vector<int>> next;
    for (const auto& p : points) {
      for (int v = 0; v < s; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  std::map<std::vector<int>, int> index;
  std::vector<Label> labels;
  for (std::size_t k = 0; k < points.size(); ++k) {
    index[points[k]] = static_cast<int>(k);
    std::string name;
    for (int v : points[k]) name += std::to_string(v);
    labels.emplace_back(name);
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& p : points) {
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (p[c] + 1 >= sizes[c]) continue;
      auto q = p;
      ++q[c];
      covers.emplace_back(index[q], index[p]);
    }
  }
  return lattice_from_poset(Poset::from_indices(std::move(labels), covers));
}

std::vector<NamedLattice> lattice_corpus(std::size_t max_size) {
  std::vector<NamedLattice> out;
  auto add = [&](std::string name, auto make, std::size_t size) {
    if (size <= max_size) out.push_back({std::move(name), make()});
  };
  for (int k = 1; k <= 5; ++k) add("chain" + std::to_string(k), [k] { return chain_lattice(k); }, k);
  add("diamond", [] { return diamond_lattice(); }, 4);
  add("chains2x3", [] { return chain_product({2, 3}); }, 6);
  add("boolean3", [] { return chain_product({2, 2, 2}); }, 8);
  add("chains3x3", [] { return chain_product({3, 3}); }, 9);
  add("chains2x2x3", [] { return chain_product({2, 2, 3}); }, 12);
  add("I_2_4", [] { return idn(2, 4); }, 6);
  add("I_2_5", [] { return idn(2, 5); }, 10);
  add("I_3_5", [] { return idn(3, 5); }, 10);
  add("counterexample", [] { return counterexample_lattice(); }, 12);
  add("I_2_6", [] { return idn(2, 6); }, 15);
  add("I_3_6", [] { return idn(3, 6); }, 20);

  // Proper sub-intervals of the counterexample lattice with >= 4 elements,
  // deduplicated by their element sets.
  const auto C = counterexample_lattice();
  const auto& P = C.poset();
  std::set<std::vector<int>> seen;
  for (int lo = 0; lo < static_cast<int>(C.size()); ++lo) {
    for (int hi = 0; hi < static_cast<int>(C.size()); ++hi) {
      if (!P.less(lo, hi) || (lo == C.bottom() && hi == C.top())) continue;
      std::vector<int> members;
      for (int x = 0; x < static_cast<int>(C.size()); ++x)
        if (P.leq(lo, x) && P.leq(x, hi)) members.push_back(x);
      if (members.size() < 4 || members.size() > max_size || !seen.insert(members).second) continue;
      out.push_back({"counterexample[" + P.label(lo).str() + "," + P.label(hi).str() + "]",
                     lattice_from_poset(interval(P, lo, hi))});
    }
  }
  return out;
}

}  // namespace hibi
