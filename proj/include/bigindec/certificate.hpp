#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigindec/pipeline.hpp"

namespace bigindec {

using Json = nlohmann::json;

/// Matrices are stored row-major as polynomial strings in the canonical term
/// order together with their row and column degrees; keys are sorted, so
/// equal certificates serialize to equal bytes.
Json matrix_json(const GradedRing& ring, const PolyMatrix& m);
PolyMatrix matrix_from_json(const GradedRing& ring, const Json& j);
Json module_json(const GradedModule& m);
GradedModule module_from_json(const RingPtr& ring, const Json& j);
Json ring_json(const GradedRing& ring);
RingPtr ring_from_json(const Json& j);

/// Timings are left out unless asked for, keeping the output reproducible.
Json certificate_json(const ConstructionCertificate& c, bool timings = false);
std::string certificate_text(const ConstructionCertificate& c, bool timings = false);

struct VerifyReport {
  bool ok = false;
  std::string failing;  // name of the first failed check
  std::string detail;
  std::vector<std::pair<std::string, bool>> checks;
};

/// Rebuilds everything from the certificate's own data and re-runs every
/// check; stored verdicts must match the recomputed ones.
VerifyReport verify_certificate(const Json& cert);

}  // namespace bigindec
