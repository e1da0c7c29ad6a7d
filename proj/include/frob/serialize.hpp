#pragma once

// JSON views of library results. Every integer that can grow beyond 64 bits
// is emitted as a decimal string; step counts are plain numbers.

#include "json.hpp"

#include "frob/bench.hpp"
#include "frob/solver.hpp"
#include "frob/walk.hpp"

namespace frob {

nlohmann::json certificate_json(const MultipleCertificate& cert);
nlohmann::json trace_json(const WalkTrace& trace);
nlohmann::json result_json(const FrobeniusResult& result);
nlohmann::json summary_json(const BenchReport& report);

}  // namespace frob
