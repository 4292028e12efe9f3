#pragma once

#include "hibi/dlattice.hpp"
#include "hibi/hilbert.hpp"

#include <json.hpp>

#include <string>

namespace hibi::io {

using Json = nlohmann::ordered_json;

/// Lattice from JSON. Accepted forms:
///   {"elements": [...], "covers": [[upper, lower], ...]}  labels are strings or int arrays
///   {"type": "idn", "d": 2, "n": 5}
///   {"type": "interval", "d": 3, "n": 6, "from": [1,3,4], "to": [2,5,6]}
///   {"type": "chain", "k": 4}
///   {"type": "diamond"}
/// Throws ParseError on malformed input; lattice errors propagate.
DistributiveLattice lattice_from_json(const Json& j);

/// {"n_vars": k, "generators": [[...], ...]}
SqFreeIdeal ideal_from_json(const Json& j);

Json read_json_file(const std::string& path);

Json label_json(const Label& l);
Json lattice_json(const DistributiveLattice& L);
Json elements_json(const DistributiveLattice& L, std::span<const int> xs);

}  // namespace hibi::io
