#include "pirlab/foasc/oa.hpp"

#include <map>
#include <sstream>

#include "pirlab/errors.hpp"
#include "pirlab/foasc/engine.hpp"

namespace pirlab::foasc {
namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t c = 0; c < v.size(); ++c) os << (c ? "," : "") << v[c];
  os << ')';
  return os.str();
}

bool next_subset(std::vector<std::size_t>& cols, std::size_t k) {
  const std::size_t t = cols.size();
  for (std::size_t pos = t; pos-- > 0;) {
    if (cols[pos] < k - t + pos) {
      ++cols[pos];
      for (std::size_t q = pos + 1; q < t; ++q) cols[q] = cols[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

OAResult oa_strength_check(const OAMatrix& a, std::uint64_t s, std::size_t t, std::uint64_t cap) {
  const std::uint64_t n_rows = a.rows.size();
  if (n_rows > cap) {
    throw PirError(ErrorCode::CapExceeded, std::to_string(n_rows) + " rows exceed cap " + std::to_string(cap));
  }
  if (t == 0 || t > a.columns) throw PirError(ErrorCode::ParamError, "strength must lie in [1, k]");
  for (const auto& row : a.rows) {
    if (row.size() != a.columns) throw PirError(ErrorCode::DimensionMismatch, "ragged array");
    for (auto v : row) {
      if (v >= s) throw PirError(ErrorCode::ParamError, "entry outside the level set");
    }
  }
  unsigned __int128 tuples = 1;
  for (std::size_t c = 0; c < t; ++c) tuples *= s;

  OAResult res;
  const bool divisible = tuples <= n_rows && n_rows % static_cast<std::uint64_t>(tuples) == 0;
  const std::uint64_t lambda = divisible ? n_rows / static_cast<std::uint64_t>(tuples) : 0;

  std::vector<std::size_t> cols(t);
  for (std::size_t c = 0; c < t; ++c) cols[c] = c;
  do {
    std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
    for (const auto& row : a.rows) {
      std::vector<std::uint64_t> key(t);
      for (std::size_t c = 0; c < t; ++c) key[c] = row[cols[c]];
      ++counts[key];
    }
    auto fail = [&](std::vector<std::uint64_t> tuple, std::uint64_t count) {
      res.ok = false;
      res.columns = cols;
      res.tuple = std::move(tuple);
      res.count = count;
      std::ostringstream os;
      os << "columns " << join({cols.begin(), cols.end()}) << ": tuple " << join(res.tuple) << " occurs "
         << count << " times";
      if (divisible) os << ", expected " << lambda;
      else os << "; " << n_rows << " rows cannot cover " << static_cast<std::uint64_t>(tuples) << " tuples evenly";
      res.detail = os.str();
      return res;
    };
    // Lexicographic scan so the reported tuple is the first offender.
    if (tuples <= cap) {
      std::vector<std::uint64_t> tup(t, 0);
      for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(tuples); ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t c = t; c-- > 0;) {
          tup[c] = rest % s;
          rest /= s;
        }
        auto it = counts.find(tup);
        const std::uint64_t got = it == counts.end() ? 0 : it->second;
        if (!divisible || got != lambda) return fail(tup, got);
      }
    } else {
      if (!divisible) return fail({}, 0);
      for (const auto& [tup, got] : counts) {
        if (got != lambda) return fail(tup, got);
      }
      if (counts.size() != static_cast<std::uint64_t>(tuples)) return fail({}, 0);
    }
  } while (next_subset(cols, a.columns));
  res.ok = true;
  res.index = lambda;
  return res;
}

OAMatrix materialize_oa(const FoascInstance& inst, std::size_t i, std::uint64_t cap) {
  const auto n_rows = inst.randomness().size();
  if (!n_rows || *n_rows > cap) {
    throw PirError(ErrorCode::CapExceeded, "randomness space of " + inst.protocol_id() + " exceeds cap");
  }
  std::vector<std::vector<LevelPoint>> raw;
  raw.reserve(*n_rows);
  std::map<LevelPoint, std::uint64_t> ids;
  for (std::uint64_t l = 0; l < *n_rows; ++l) {
    raw.push_back(query_for(inst, i, inst.randomness().at(l)).queries);
    for (const auto& z : raw.back()) ids.emplace(z, 0);
  }
  if (ids.size() > inst.level_codec().cardinality()) {
    throw PirError(ErrorCode::ParamError, "rows use more points than the level set holds");
  }
  std::uint64_t next = 0;
  for (auto& [z, id] : ids) id = next++;
  OAMatrix a;
  a.columns = inst.k();
  a.rows.reserve(raw.size());
  for (const auto& r : raw) {
    std::vector<std::uint64_t> row;
    row.reserve(r.size());
    for (const auto& z : r) row.push_back(ids.at(z));
    a.rows.push_back(std::move(row));
  }
  return a;
}

}  // namespace pirlab::foasc
