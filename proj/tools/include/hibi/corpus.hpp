#pragma once

#include "hibi/dlattice.hpp"

#include <string>
#include <vector>

namespace hibi {

struct NamedLattice {
  std::string name;
  DistributiveLattice lattice;
};

/// Product of chains with the given numbers of elements.
DistributiveLattice chain_product(const std::vector<int>& sizes);

/// Chains, the diamond, chain products, small I_{d,n}, the 12-element
/// interval of I_{3,6} and its proper sub-intervals of size >= 4; only
/// members with at most `max_size` elements. Order is fixed.
std::vector<NamedLattice> lattice_corpus(std::size_t max_size);

}  // namespace hibi
