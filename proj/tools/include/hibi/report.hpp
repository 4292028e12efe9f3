#pragma once

#include "hibi/harness.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/io.hpp"
#include "hibi/smoothness.hpp"

#include <string>

namespace hibi::report {

using io::Json;

/// "e_(1,3,5) - e_(1,3,6)" or "e_(2,3,4)".
std::string generator_string(const DistributiveLattice& L, const Generator& g);

Json generators_json(const DistributiveLattice& L, std::span<const Generator> gens);
Json verdict_json(const DistributiveLattice& L, const SmoothnessVerdict& v);
Json geometry_json(const FaceGeometry& g);
Json h_poset_json(const DistributiveLattice& L, const HPoset& h);
Json face_json(const DistributiveLattice& L, std::span<const int> D);
Json lattice_summary_json(const DistributiveLattice& L);
Json singular_locus_json(const GrassmannLattice& G, const SingularLocusReport& r);
Json hilbert_json(const HilbertData& h, unsigned m_max);
Json crosscheck_json(const std::vector<CrosscheckRow>& rows);
Json harness_json(const DistributiveLattice& L, const HarnessReport& r);

/// Markdown rendering of any report. Purely structural: objects become
/// headed sections or bullet lists, arrays of flat objects become tables.
std::string render_markdown(const Json& j);

}  // namespace hibi::report
