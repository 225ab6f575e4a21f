#include "pirlab/verify/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pirlab/errors.hpp"

namespace pirlab::verify {

using namespace foasc;

namespace {

constexpr std::size_t kKeptFailures = 8;

u64 require_rows(const FoascInstance& inst, std::uint64_t cap) {
  const auto n_rows = inst.randomness().size();
  if (!n_rows || *n_rows > cap) {
    throw PirError(ErrorCode::CapExceeded, "N exceeds the row cap " + std::to_string(cap));
  }
  return *n_rows;
}

std::string point_text(const LevelPoint& z) {
  std::string s = "(";
  for (std::size_t c = 0; c < z.size(); ++c) s += (c ? "," : "") + std::to_string(z[c]);
  return s + ")";
}

std::string db_text(const Database& x) {
  std::string s;
  for (std::size_t c = 0; c < x.size(); ++c) s += static_cast<char>('0' + x[c]);
  return s;
}

std::string servers_text(const std::vector<std::size_t>& t) {
  std::string s = "{";
  for (std::size_t c = 0; c < t.size(); ++c) s += (c ? "," : "") + std::to_string(t[c] + 1);
  return s + "}";
}

// All size-t subsets of [k] in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t k, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s(t);
  for (std::size_t c = 0; c < t; ++c) s[c] = c;
  while (true) {
    out.push_back(s);
    std::size_t j = t;
    while (j > 0 && s[j - 1] == k - t + (j - 1)) --j;
    if (j == 0) break;
    ++s[j - 1];
    for (std::size_t q = j; q < t; ++q) s[q] = s[q - 1] + 1;
  }
  return out;
}

}  // namespace

CorrectnessReport exhaustive_correctness(const FoascInstance& inst, const CorrectnessOptions& opt) {
  const std::size_t n = inst.n();
  const auto n_rows = inst.randomness().size();
  if (n >= 40 || !n_rows) throw PirError(ErrorCode::BudgetExceeded, "instance too large for exhaustive correctness");
  const unsigned __int128 db_count = opt.unit_basis ? n + 1 : static_cast<unsigned __int128>(1) << n;
  if (db_count * n * *n_rows > opt.budget) {
    throw PirError(ErrorCode::BudgetExceeded, "databases * n * N exceeds the budget " + std::to_string(opt.budget));
  }
  // Unit basis: 0 and e_1..e_n; y is linear in x, so these determine every other database.
  auto database = [&](u64 d) {
    if (!opt.unit_basis) return Database::from_mask(n, d);
    return d == 0 ? Database::zeros(n) : Database::from_mask(n, u64{1} << (d - 1));
  };

  CorrectnessReport rep;
  rep.protocol = inst.protocol_id();
  rep.unit_basis = opt.unit_basis;
  rep.databases = static_cast<u64>(db_count);
  for (std::size_t i = 0; i < n; ++i) {
    for (u64 li = 0; li < *n_rows; ++li) {
      const Query q = query_for(inst, i, inst.randomness().at(li));
      ++rep.pairs;
      for (u64 d = 0; d < rep.databases; ++d) {
        const Database x = database(d);
        std::vector<RingVec> answers;
        for (std::size_t j = 0; j < q.queries.size(); ++j) {
          answers.push_back(answer(inst, x, q.queries[j]));
          if (opt.tamper) opt.tamper(j, answers.back());
        }
        ++rep.round_trips;
        std::string problem;
        try {
          const int bit = reconstruct(inst, q.aux, answers);
          if (bit != x[i]) problem = "output " + std::to_string(bit);
        } catch (const PirError& e) {
          if (e.code() != ErrorCode::InconsistentAnswer) throw;
          problem = "inconsistent answers";
        }
        if (!problem.empty()) {
          ++rep.failure_count;
          if (rep.failures.size() < kKeptFailures) {
            rep.failures.push_back("x=" + db_text(x) + " i=" + std::to_string(i + 1) +
                                   " l=" + std::to_string(li) + ": " + problem + ", expected " +
                                   std::to_string(x[i]));
          }
        }
      }
    }
  }
  return rep;
}

std::string CorrectnessReport::to_text() const {
  std::ostringstream os;
  os << "correctness " << (pass() ? "PASS" : "FAIL") << " protocol=" << protocol << " databases=" << databases
     << (unit_basis ? " (unit basis)" : "")
     << " pairs=" << pairs << " round_trips=" << round_trips << " failures=" << failure_count << "\n";
  for (const auto& f : failures) os << "  " << f << "\n";
  return os.str();
}

ParamReport CorrectnessReport::to_kv() const {
  ParamReport r;
  r.set("suite", "correctness");
  r.set("protocol", protocol);
  r.set("verdict", pass() ? "pass" : "fail");
  r.set("databases", databases);
  r.set("database_set", unit_basis ? "unit basis" : "all");
  r.set("pairs", pairs);
  r.set("round_trips", round_trips);
  r.set("failures", failure_count);
  if (!failures.empty()) r.set("first_failure", failures.front());
  return r;
}

PrivacyReport exhaustive_privacy(const FoascInstance& inst, std::size_t t, std::uint64_t cap) {
  if (t >= inst.k()) throw PirError(ErrorCode::ParamError, "privacy threshold must satisfy t < k");
  const u64 n_rows = require_rows(inst, cap);
  PrivacyReport rep;
  rep.protocol = inst.protocol_id();
  rep.t = t;

  // Rows of every Q^(i), materialized once.
  std::vector<std::vector<std::vector<LevelPoint>>> q(inst.n());
  for (std::size_t i = 0; i < inst.n(); ++i) {
    q[i].reserve(n_rows);
    for (u64 li = 0; li < n_rows; ++li) q[i].push_back(inst.row(i, inst.randomness().at(li)));
  }

  // s^t and N / s^t for the uniformity test.
  const unsigned __int128 s = inst.level_codec().cardinality();
  unsigned __int128 s_t = 1;
  for (std::size_t c = 0; c < t && s_t <= n_rows; ++c) s_t *= s;

  for (const auto& servers : subsets(inst.k(), t)) {
    using Multiset = std::map<std::vector<LevelPoint>, u64>;
    auto project = [&](std::size_t i) {
      Multiset ms;
      for (const auto& row : q[i]) {
        std::vector<LevelPoint> key;
        for (std::size_t j : servers) key.push_back(row[j]);
        ++ms[key];
      }
      return ms;
    };
    const Multiset ref = project(0);
    SubsetVerdict v{servers, true, false};
    for (std::size_t i = 1; i < inst.n() && v.equal; ++i) {
      const Multiset other = project(i);
      if (other == ref) continue;
      v.equal = false;
      if (!rep.counterexample) {
        PrivacyCounterexample ce{servers, 0, i, {}, 0, 0};
        for (const auto& [key, cnt] : ref) {
          auto it = other.find(key);
          const u64 c2 = it == other.end() ? 0 : it->second;
          if (c2 != cnt) {
            ce.projected = key;
            ce.count1 = cnt;
            ce.count2 = c2;
            break;
          }
        }
        if (ce.projected.empty()) {
          for (const auto& [key, cnt] : other) {
            if (!ref.contains(key)) {
              ce.projected = key;
              ce.count2 = cnt;
              break;
            }
          }
        }
        rep.counterexample = ce;
      }
    }
    if (s_t <= n_rows && n_rows % static_cast<u64>(s_t) == 0 && ref.size() == static_cast<u64>(s_t)) {
      const u64 each = n_rows / static_cast<u64>(s_t);
      v.uniform = std::all_of(ref.begin(), ref.end(), [&](const auto& kv) { return kv.second == each; });
    }
    v.uniform = v.uniform && v.equal;
    rep.subsets.push_back(std::move(v));
  }
  return rep;
}

bool PrivacyReport::pass() const {
  return !subsets.empty() && std::all_of(subsets.begin(), subsets.end(), [](const auto& v) { return v.equal; });
}

bool PrivacyReport::uniform() const {
  return !subsets.empty() && std::all_of(subsets.begin(), subsets.end(), [](const auto& v) { return v.uniform; });
}

std::string PrivacyReport::to_text() const {
  std::ostringstream os;
  os << "privacy " << (pass() ? "PASS" : "FAIL") << " protocol=" << protocol << " t=" << t
     << " subsets=" << subsets.size() << " uniform=" << (uniform() ? "yes" : "no") << "\n";
  if (counterexample) {
    const auto& ce = *counterexample;
    os << "  T=" << servers_text(ce.servers) << " i=" << ce.i1 + 1 << " vs i=" << ce.i2 + 1 << ": row";
    for (const auto& z : ce.projected) os << " " << point_text(z);
    os << " occurs " << ce.count1 << " vs " << ce.count2 << " times\n";
  }
  return os.str();
}

ParamReport PrivacyReport::to_kv() const {
  ParamReport r;
  r.set("suite", "privacy");
  r.set("protocol", protocol);
  r.set("verdict", pass() ? "pass" : "fail");
  r.set("t", t);
  r.set("subsets", subsets.size());
  r.set("uniform", uniform() ? "yes" : "no");
  if (counterexample) {
    r.set("counterexample_servers", servers_text(counterexample->servers));
    r.set("counterexample_indices", std::to_string(counterexample->i1 + 1) + "," + std::to_string(counterexample->i2 + 1));
  }
  return r;
}

OaFamilyReport oa_family_check(const FoascInstance& inst, std::uint64_t cap) {
  require_rows(inst, cap);
  OaFamilyReport rep;
  rep.protocol = inst.protocol_id();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (inst.t() == 0) {
      rep.arrays.push_back(OAResult{true, *inst.randomness().size(), {}, {}, 0, "strength 0"});
      continue;
    }
    rep.arrays.push_back(oa_strength_check(materialize_oa(inst, i, cap), inst.level_codec().cardinality(), inst.t(), cap));
  }
  return rep;
}

bool OaFamilyReport::pass() const {
  return !arrays.empty() && std::all_of(arrays.begin(), arrays.end(), [](const auto& a) { return a.ok; });
}

std::string OaFamilyReport::to_text() const {
  std::ostringstream os;
  os << "oa " << (pass() ? "PASS" : "FAIL") << " protocol=" << protocol << " arrays=" << arrays.size() << "\n";
  for (std::size_t i = 0; i < arrays.size(); ++i) {
    if (!arrays[i].ok) os << "  Q^(" << i + 1 << "): " << arrays[i].detail << "\n";
  }
  return os.str();
}

SpanSweepReport span_sweep(const FoascInstance& inst, std::uint64_t cap) {
  const u64 n_rows = require_rows(inst, cap);
  SpanSweepReport rep;
  rep.protocol = inst.protocol_id();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    for (u64 li = 0; li < n_rows; ++li) {
      ++rep.checked;
      const auto res = span_check(inst, i, inst.randomness().at(li));
      if (!res.pass) {
        if (rep.failed++ == 0) {
          rep.first_failure = "i=" + std::to_string(i + 1) + " l=" + std::to_string(li) + ": " + res.detail;
        }
      }
    }
  }
  return rep;
}

std::string SpanSweepReport::to_text() const {
  std::ostringstream os;
  os << "span " << (pass() ? "PASS" : "FAIL") << " protocol=" << protocol << " checked=" << checked
     << " failed=" << failed << "\n";
  if (failed) os << "  " << first_failure << "\n";
  return os.str();
}

CommAudit comm_audit(const FoascInstance& inst, const sim::Transcript& transcript) {
  const CommCost cost = comm_cost(inst);
  CommAudit a;
  a.protocol = inst.protocol_id();
  a.raw_bits = cost.total_bits;
  a.expected_payload_bytes = cost.total_bytes;
  a.measured_payload_bytes = transcript.payload_bytes();
  a.framing_bytes = transcript.framing_bytes();
  if (transcript.servers.size() != inst.k()) {
    a.mismatch = "transcript has " + std::to_string(transcript.servers.size()) + " servers, expected " +
                 std::to_string(inst.k());
    return a;
  }
  for (std::size_t j = 0; j < inst.k() && a.mismatch.empty(); ++j) {
    const auto& s = transcript.servers[j];
    if (s.query_payload != cost.query_bytes) {
      a.mismatch = "query to server " + std::to_string(j + 1) + ": " + std::to_string(s.query_payload) +
                   " bytes, expected " + std::to_string(cost.query_bytes);
    } else if (s.answer_payload != cost.answer_bytes) {
      a.mismatch = "answer from server " + std::to_string(j + 1) + ": " + std::to_string(s.answer_payload) +
                   " bytes, expected " + std::to_string(cost.answer_bytes);
    }
  }
  return a;
}

std::string CommAudit::to_text() const {
  std::ostringstream os;
  os << "comm " << (pass() ? "PASS" : "FAIL") << " protocol=" << protocol << " raw_bits=" << format_bits(raw_bits)
     << " payload_bytes=" << measured_payload_bytes << " expected_bytes=" << expected_payload_bytes
     << " framing_bytes=" << framing_bytes << "\n";
  if (!pass()) os << "  " << mismatch << "\n";
  return os.str();
}

}  // namespace pirlab::verify
