#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmf/expansions.hpp"
#include "dmf/serialize.hpp"

namespace dmf {

/// Outcome of one theorem check.  pass is decided by the recorded bound N;
/// residual_order is the measured order of the residual (nullopt = no
/// nonzero term below residual_prec).  note carries per-check detail such
/// as counts or first deviation exponents.
struct VerificationReport {
    std::string theorem;
    std::vector<std::pair<std::string, long long>> params;
    long long N = 0;
    std::optional<long long> residual_order;
    long long residual_prec = 0;
    bool pass = false;
    double ms = 0.0;
    std::string note;
};

using VerifyParams = std::vector<std::pair<std::string, long long>>;

/// single check by theorem id; throws std::invalid_argument on unknown ids
/// or unsupported parameters
VerificationReport verify_one(const GenericModule& mod, const std::string& id,
                              const VerifyParams& params, int threads = 1);

/// the (id, params) list verify_all runs at this (q, r): every supported
/// theorem instance whose bound fits the precision budget
std::vector<std::pair<std::string, VerifyParams>> verify_suite(const GenericModule& mod);

std::vector<VerificationReport> verify_all(const GenericModule& mod, int threads = 1);

/// deterministic text line (excludes wall time, so reports are byte-stable
/// across thread counts and runs)
std::string report_line(const VerificationReport& r);

/// JSON form per the report schema (includes ms)
json report_to_json(const VerificationReport& r);

}  // namespace dmf
