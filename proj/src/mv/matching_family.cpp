#include "pirlab/mv/matching_family.hpp"

#include <algorithm>

#include "pirlab/errors.hpp"

namespace pirlab::mv {

u64 inner_mod(const Vec& a, const Vec& b, u64 m) {
  if (a.size() != b.size()) throw PirError(ErrorCode::DimensionMismatch, "inner product lengths differ");
  u64 acc = 0;
  for (std::size_t c = 0; c < a.size(); ++c) acc = algebra::add_mod(acc, algebra::mul_mod(a[c] % m, b[c] % m, m), m);
  return acc;
}

std::optional<std::string> check_matching_family(const MatchingFamily& fam, bool ones_nonzero) {
  const std::size_t n = fam.u.size();
  if (fam.v.size() != n) return "u and v lists differ in length";
  for (u64 s : fam.target) {
    if (s == 0 || s >= fam.m) return "target set must lie in Z_m \\ {0}";
  }
  auto in_target = [&](u64 x) {
    return std::find(fam.target.begin(), fam.target.end(), x) != fam.target.end();
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (fam.u[i].size() != fam.h || fam.v[i].size() != fam.h) {
      return "vector " + std::to_string(i) + " has wrong dimension";
    }
    for (std::size_t c = 0; c < fam.h; ++c) {
      if (fam.u[i][c] >= fam.m || fam.v[i][c] >= fam.m) return "entry out of range";
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const u64 ip = inner_mod(fam.u[i], fam.v[j], fam.m);
      if (i == j && ip != 0) return "<u_" + std::to_string(i) + ", v_" + std::to_string(i) + "> != 0";
      if (i != j && !in_target(ip)) {
        return "<u_" + std::to_string(i) + ", v_" + std::to_string(j) + "> = " + std::to_string(ip) +
               " not in S";
      }
    }
    if (ones_nonzero) {
      u64 s = 0;
      for (u64 x : fam.u[i]) s = (s + x) % fam.m;
      if (s == 0) return "<u_" + std::to_string(i) + ", 1> = 0";
    }
  }
  return std::nullopt;
}

namespace {

struct Search {
  u64 m;
  std::size_t h;
  u64 count;  // m^h
  std::vector<bool> in_s;
  std::size_t n_target;
  const FamilySearchOptions& opt;
  u64 nodes = 0;

  std::vector<Vec> us, vs;

  Vec vec_at(u64 idx) const {
    Vec x(h);
    for (std::size_t c = h; c-- > 0;) {
      x[c] = idx % m;
      idx /= m;
    }
    return x;
  }

  u64 ip(const Vec& a, const Vec& b) const {
    u64 acc = 0;
    for (std::size_t c = 0; c < h; ++c) acc += a[c] * b[c];
    return acc % m;
  }

  bool u_ok(const Vec& u) const {
    if (opt.ones_nonzero) {
      u64 s = 0;
      for (u64 x : u) s += x;
      if (s % m == 0) return false;
    }
    for (const Vec& v : vs) {
      if (!in_s[ip(u, v)]) return false;
    }
    return true;
  }

  bool v_ok(const Vec& u, const Vec& v) const {
    if (ip(u, v) != 0) return false;
    for (const Vec& x : us) {
      if (!in_s[ip(x, v)]) return false;
    }
    return true;
  }

  // Pairs strictly after (u_from, v_from) in lexicographic order.
  bool dfs(u64 u_from, u64 v_from) {
    if (us.size() == n_target) return true;
    for (u64 ui = u_from; ui < count; ++ui) {
      const Vec u = vec_at(ui);
      if (ui == 0 || !u_ok(u)) continue;
      for (u64 vi = (ui == u_from ? v_from : 1); vi < count; ++vi) {
        if (++nodes > opt.node_budget) {
          throw PirError(ErrorCode::BudgetExceeded, "matching family search node budget exhausted");
        }
        const Vec v = vec_at(vi);
        if (!v_ok(u, v)) continue;
        us.push_back(u);
        vs.push_back(v);
        if (dfs(ui, vi + 1)) return true;
        us.pop_back();
        vs.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

MatchingFamily search_matching_family(u64 m, std::size_t h, const std::vector<u64>& target,
                                      std::size_t n_target, const FamilySearchOptions& opt) {
  if (m < 2 || h == 0) throw PirError(ErrorCode::ParamError, "need m >= 2 and h >= 1");
  u64 count = 1;
  for (std::size_t c = 0; c < h; ++c) {
    if (count > opt.vector_cap / m) throw PirError(ErrorCode::ParamError, "m^h exceeds the vector cap");
    count *= m;
  }
  Search s{m, h, count, std::vector<bool>(m, false), n_target, opt, 0, {}, {}};
  for (u64 x : target) {
    if (x == 0 || x >= m) throw PirError(ErrorCode::ParamError, "target set must lie in Z_m \\ {0}");
    s.in_s[x] = true;
  }
  if (!s.dfs(0, 1)) {
    throw PirError(ErrorCode::Exhausted, "no S-matching family of size " + std::to_string(n_target) +
                                             " in Z_" + std::to_string(m) + "^" + std::to_string(h));
  }
  MatchingFamily fam{m, h, s.us, s.vs, target};
  std::sort(fam.target.begin(), fam.target.end());
  return fam;
}

}  // namespace pirlab::mv
