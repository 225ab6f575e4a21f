#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pirlab/foasc/engine.hpp"
#include "pirlab/foasc/oa.hpp"
#include "pirlab/foasc/report.hpp"
#include "pirlab/sim/transcript.hpp"

namespace pirlab::verify {

using foasc::FoascInstance;

inline constexpr std::uint64_t kDefaultRoundTripBudget = 256ull * 8 * 100'000;
inline constexpr std::uint64_t kDefaultRowCap = 1'000'000;

// Called on every answer before reconstruction; may modify it.
using AnswerTamper = std::function<void(std::size_t server, foasc::RingVec& answer)>;

struct CorrectnessOptions {
  std::uint64_t budget = kDefaultRoundTripBudget;  // 2^n * n * N
  AnswerTamper tamper;
  // Run only x = 0 and the n unit vectors; the output is a linear function of x, so
  // these cover {0,1}^n when n is too large to enumerate.
  bool unit_basis = false;
};

struct CorrectnessReport {
  std::string protocol;
  bool unit_basis = false;
  std::uint64_t databases = 0;
  std::uint64_t pairs = 0;  // (i, l)
  std::uint64_t round_trips = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // first few, in enumeration order

  bool pass() const { return failure_count == 0; }
  std::string to_text() const;
  foasc::ParamReport to_kv() const;
};

// Every database x in {0,1}^n (or the unit basis), index i and row l; l is forced, not
// sampled. Throws BudgetExceeded when databases * n * N exceeds the budget.
CorrectnessReport exhaustive_correctness(const FoascInstance& inst, const CorrectnessOptions& opt = {});

struct SubsetVerdict {
  std::vector<std::size_t> servers;  // T, zero-based
  bool equal = false;
  bool uniform = false;
};

struct PrivacyCounterexample {
  std::vector<std::size_t> servers;
  std::size_t i1 = 0, i2 = 0;
  std::vector<foasc::LevelPoint> projected;  // a row seen with different multiplicity
  std::uint64_t count1 = 0, count2 = 0;
};

struct PrivacyReport {
  std::string protocol;
  std::size_t t = 0;
  std::vector<SubsetVerdict> subsets;
  std::optional<PrivacyCounterexample> counterexample;

  bool pass() const;
  bool uniform() const;
  std::string to_text() const;
  foasc::ParamReport to_kv() const;
};

// Compares the multisets of T-projected rows of Q^(i) for all i and every |T| = t.
// Throws ParamError unless t < k, CapExceeded when N exceeds the cap.
PrivacyReport exhaustive_privacy(const FoascInstance& inst, std::size_t t, std::uint64_t cap = kDefaultRowCap);

struct OaFamilyReport {
  std::string protocol;
  std::vector<foasc::OAResult> arrays;  // one per index

  bool pass() const;
  std::string to_text() const;
};

// Each Q^(i) must be an OA(N, k, |S|, t).
OaFamilyReport oa_family_check(const FoascInstance& inst, std::uint64_t cap = kDefaultRowCap);

struct SpanSweepReport {
  std::string protocol;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  bool pass() const { return checked > 0 && failed == 0; }
  std::string to_text() const;
};

// span_check on every (i, l).
SpanSweepReport span_sweep(const FoascInstance& inst, std::uint64_t cap = kDefaultRowCap);

struct CommAudit {
  std::string protocol;
  double raw_bits = 0;  // comm_cost total
  std::size_t expected_payload_bytes = 0;
  std::size_t measured_payload_bytes = 0;
  std::size_t framing_bytes = 0;
  std::string mismatch;  // empty when consistent

  bool pass() const { return mismatch.empty(); }
  std::string to_text() const;
};

// Measured per-server payload sizes against the codec widths behind comm_cost.
CommAudit comm_audit(const FoascInstance& inst, const sim::Transcript& transcript);

}  // namespace pirlab::verify
