#include "hibi/poset.hpp"

#include "hibi/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace hibi {

ElementSet normalized(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string Label::str() const {
  if (!is_tuple()) return name();
  std::string out = "(";
  const auto& t = tuple();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ")";
}

Poset Poset::from_labels(std::vector<Label> elements,
                         const std::vector<std::pair<Label, Label>>& covers) {
  std::map<Label, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!idx.emplace(elements[i], static_cast<int>(i)).second) {
      throw Error(Errc::BadParameters, "duplicate element " + elements[i].str());
    }
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [u, l] : covers) {
    auto iu = idx.find(u);
    auto il = idx.find(l);
    if (iu == idx.end()) throw Error(Errc::UnknownElement, u.str());
    if (il == idx.end()) throw Error(Errc::UnknownElement, l.str());
    pairs.emplace_back(iu->second, il->second);
  }
  return from_indices(std::move(elements), pairs);
}

Poset Poset::from_indices(std::vector<Label> elements,
                          const std::vector<std::pair<int, int>>& covers) {
  Poset p;
  const int n = static_cast<int>(elements.size());
  p.labels_ = std::move(elements);
  for (int i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.labels_[i], i).second) {
      throw Error(Errc::BadParameters, "duplicate element " + p.labels_[i].str());
    }
  }
  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, l] : covers) {
    if (u < 0 || u >= n || l < 0 || l >= n) {
      throw Error(Errc::UnknownElement, "cover index out of range");
    }
    if (u == l) throw Error(Errc::CycleDetected, "self-cover at " + p.labels_[u].str());
    if (!seen.emplace(u, l).second) {
      throw Error(Errc::RedundantCover,
                  "duplicate cover (" + p.labels_[u].str() + ", " + p.labels_[l].str() + ")");
    }
    p.upper_[l].push_back(u);
    p.lower_[u].push_back(l);
  }
  for (int i = 0; i < n; ++i) {
    std::sort(p.lower_[i].begin(), p.lower_[i].end());
    std::sort(p.upper_[i].begin(), p.upper_[i].end());
  }
  p.finalize();

  // (u, l) is implied by transitivity iff another upper cover u' of l lies strictly below u.
  for (int l = 0; l < n; ++l) {
    for (int u : p.upper_[l]) {
      for (int u2 : p.upper_[l]) {
        if (u2 != u && p.up_[u2][u]) {
          throw Error(Errc::RedundantCover, "(" + p.labels_[u].str() + ", " + p.labels_[l].str() +
                                                ") is implied via " + p.labels_[u2].str());
        }
      }
    }
  }
  return p;
}

void Poset::finalize() {
  const int n = static_cast<int>(labels_.size());
  std::vector<int> indeg(n);
  for (int i = 0; i < n; ++i) indeg[i] = static_cast<int>(lower_[i].size());
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push(i);
  }
  topo_.clear();
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    topo_.push_back(x);
    for (int u : upper_[x]) {
      if (--indeg[u] == 0) ready.push(u);
    }
  }
  if (static_cast<int>(topo_.size()) != n) {
    throw Error(Errc::CycleDetected, "cover relation contains a directed cycle");
  }
  topo_pos_.assign(n, 0);
  for (int i = 0; i < n; ++i) topo_pos_[topo_[i]] = i;

  up_.assign(n, Bits(n));
  down_.assign(n, Bits(n));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int x = *it;
    up_[x].set(x);
    for (int u : upper_[x]) up_[x] |= up_[u];
  }
  for (int x : topo_) {
    down_[x].set(x);
    for (int l : lower_[x]) down_[x] |= down_[l];
  }
}

std::optional<int> Poset::find(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Poset::index_of(const Label& l) const {
  auto i = find(l);
  if (!i) throw Error(Errc::UnknownElement, l.str());
  return *i;
}

bool Poset::is_cover(int upper, int lower) const {
  const auto& lc = lower_[upper];
  return std::binary_search(lc.begin(), lc.end(), lower);
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(size()); ++u) {
    for (int l : lower_[u]) out.emplace_back(u, l);
  }
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i) {
    if (lower_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(size()); ++i) {
    if (upper_[i].empty()) out.push_back(i);
  }
  return out;
}

std::optional<int> Poset::bottom() const {
  auto m = minimal_elements();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::optional<int> Poset::top() const {
  auto m = maximal_elements();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

Poset Poset::induced(std::span<const int> subset) const {
  ElementSet sub = normalized(ElementSet(subset.begin(), subset.end()));
  const int k = static_cast<int>(sub.size());
  std::vector<Label> labels;
  labels.reserve(k);
  for (int x : sub) labels.push_back(labels_[x]);
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (!less(sub[b], sub[a])) continue;
      bool direct = true;
      for (int c = 0; c < k && direct; ++c) {
        if (less(sub[b], sub[c]) && less(sub[c], sub[a])) direct = false;
      }
      if (direct) covers.emplace_back(a, b);
    }
  }
  return from_indices(std::move(labels), covers);
}

Grading grading(const Poset& p) {
  Grading g;
  auto lo = p.bottom();
  auto hi = p.top();
  if (!lo || !hi) {
    g.reason = !lo ? "no unique minimal element" : "no unique maximal element";
    return g;
  }
  const int n = static_cast<int>(p.size());
  std::vector<int> shortest(n, 0), longest(n, 0);
  for (int x : p.linear_extension()) {
    if (p.lower_covers(x).empty()) continue;
    int s = n + 1, l = -1;
    for (int y : p.lower_covers(x)) {
      s = std::min(s, shortest[y] + 1);
      l = std::max(l, longest[y] + 1);
    }
    shortest[x] = s;
    longest[x] = l;
  }
  for (int x = 0; x < n; ++x) {
    if (shortest[x] != longest[x]) {
      g.reason = "maximal chains below " + p.label(x).str() + " have lengths " +
                 std::to_string(shortest[x]) + " and " + std::to_string(longest[x]);
      return g;
    }
  }
  g.graded = true;
  g.rank = longest[*hi];
  return g;
}

BigInt maximal_chain_count(const Poset& p) {
  auto lo = p.bottom();
  auto hi = p.top();
  if (!lo || !hi) throw Error(Errc::Unbounded, "maximal chain count needs a bounded poset");
  std::vector<BigInt> count(p.size());
  for (int x : p.linear_extension()) {
    if (p.lower_covers(x).empty()) {
      count[x] = 1;
      continue;
    }
    for (int y : p.lower_covers(x)) count[x] += count[y];
  }
  return count[*hi];
}

Poset interval(const Poset& p, int mu, int lambda) {
  if (!p.leq(mu, lambda)) {
    throw Error(Errc::NotComparable, p.label(mu).str() + " is not below " + p.label(lambda).str());
  }
  Bits members = p.up_set(mu) & p.down_set(lambda);
  ElementSet sub;
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i)) {
    sub.push_back(static_cast<int>(i));
  }
  // Intervals are convex, so their covers are exactly the covers of p inside them.
  std::vector<int> pos(p.size(), -1);
  for (int i = 0; i < static_cast<int>(sub.size()); ++i) pos[sub[i]] = i;
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> covers;
  for (int x : sub) {
    labels.push_back(p.label(x));
    for (int y : p.lower_covers(x)) {
      if (pos[y] >= 0) covers.emplace_back(pos[x], pos[y]);
    }
  }
  return Poset::from_indices(std::move(labels), covers);
}

std::vector<ElementSet> order_ideals(const Poset& p, std::size_t limit) {
  const auto& order = p.linear_extension();
  const int n = static_cast<int>(p.size());
  std::vector<ElementSet> out;
  std::vector<char> in(n, 0);

  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (out.size() >= limit) {
        throw Error(Errc::SizeLimitExceeded,
                    "order_ideals: more than " + std::to_string(limit) + " ideals");
      }
      ElementSet s;
      for (int i = 0; i < n; ++i) {
        if (in[i]) s.push_back(i);
      }
      out.push_back(std::move(s));
      return;
    }
    int x = order[pos];
    rec(pos + 1);
    bool allowed = std::all_of(p.lower_covers(x).begin(), p.lower_covers(x).end(),
                               [&](int y) { return in[y] != 0; });
    if (allowed) {
      in[x] = 1;
      rec(pos + 1);
      in[x] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Poset chain_poset(int k) {
  std::vector<Label> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i) {
    labels.emplace_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(i, i - 1);
  }
  return Poset::from_indices(std::move(labels), covers);
}

Poset antichain_poset(int k) {
  std::vector<Label> labels;
  for (int i = 0; i < k; ++i) labels.emplace_back("a" + std::to_string(i));
  return Poset::from_indices(std::move(labels), {});
}

}  // namespace hibi
