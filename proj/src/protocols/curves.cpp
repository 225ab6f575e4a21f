#include <algorithm>
#include <numeric>

#include "common.hpp"
#include "pirlab/algebra/hasse.hpp"
#include "pirlab/foasc/report.hpp"
#include "pirlab/protocols/interpolation.hpp"
#include "pirlab/protocols/protocols.hpp"

namespace pirlab::protocols {

using namespace foasc;
using algebra::PrimeField;

std::size_t curve_dimension(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0) throw PirError(ErrorCode::ParamError, "need n >= 1 and d >= 1");
  std::size_t h = d;
  while (algebra::binomial(h, d) < n) ++h;
  return h;
}

std::vector<std::vector<u64>> curve_exponents(std::size_t n, std::size_t h, std::size_t d) {
  if (algebra::binomial(h, d) < n) throw PirError(ErrorCode::ParamError, "C(h, d) < n");
  // Colex: supports ordered by their largest element, then the next largest, and so on.
  std::vector<std::vector<u64>> out;
  std::vector<std::size_t> s(d);
  std::iota(s.begin(), s.end(), 0);
  while (out.size() < n) {
    std::vector<u64> u(h, 0);
    for (std::size_t c : s) u[c] = 1;
    out.push_back(std::move(u));
    std::size_t j = 0;
    while (j + 1 < d && s[j] + 1 == s[j + 1]) ++j;
    ++s[j];
    for (std::size_t q = 0; q < j; ++q) s[q] = q;
  }
  return out;
}

namespace {

struct CurveShape {
  std::size_t n, t, k, d, h;
  u64 p;
};

CurveShape shape(std::size_t n, std::size_t t, std::size_t k, u64 p, std::size_t numerator) {
  if (t == 0 || t >= k) throw PirError(ErrorCode::ParamError, "need 1 <= t < k");
  if (!algebra::is_prime(p) || p <= k) throw PirError(ErrorCode::ParamError, "p must be a prime > k");
  const std::size_t d = numerator / t;
  if (d < 1) throw PirError(ErrorCode::ParamError, "degree bound d must be >= 1");
  return {n, t, k, d, curve_dimension(n, d), p};
}

// Rows lie on the curve theta -> u_i + R (theta, ..., theta^t) at theta = 1..k,
// with R an h x t matrix stored row-major in l.
class CurveInstance : public FoascInstance {
 public:
  CurveInstance(std::string id, const CurveShape& s, std::size_t dim)
      : FoascInstance(std::move(id), s.n, s.k, s.t, RandomnessSpace(detail::repeat(s.p, s.h * s.t)),
                      LevelCodec::box(detail::repeat(s.p, s.h), detail::power_name("F_" + std::to_string(s.p), s.h)),
                      detail::prime_ring(s.p), dim),
        s_(s),
        f_(s.p),
        u_(curve_exponents(s.n, s.h, s.d)) {}

  std::vector<LevelPoint> row(std::size_t i, const Randomness& ell) const override {
    std::vector<LevelPoint> rows;
    for (std::size_t j = 1; j <= s_.k; ++j) {
      LevelPoint q(u_[i]);
      for (std::size_t c = 0; c < s_.h; ++c) {
        u64 theta_pow = 1;
        for (std::size_t e = 0; e < s_.t; ++e) {
          theta_pow = f_.mul(theta_pow, j % s_.p);
          q[c] = f_.add(q[c], f_.mul(ell[c * s_.t + e], theta_pow));
        }
      }
      rows.push_back(std::move(q));
    }
    return rows;
  }

 protected:
  // z^{u_tau} for a 0/1 exponent vector.
  u64 monomial(std::size_t tau, const LevelPoint& z) const {
    u64 acc = 1;
    for (std::size_t c = 0; c < s_.h; ++c) {
      if (u_[tau][c]) acc = f_.mul(acc, z[c]);
    }
    return acc;
  }

  void describe_curve(ParamReport& r) const {
    r.set("p", s_.p);
    r.set("d", s_.d);
    r.set("h", s_.h);
    r.set("points", "1.." + std::to_string(s_.k));
  }

  CurveShape s_;
  PrimeField f_;
  std::vector<std::vector<u64>> u_;
};

class Lagrange final : public CurveInstance {
 public:
  explicit Lagrange(const CurveShape& s) : CurveInstance("lagrange", s, 1) {
    for (u64 j = 1; j <= s.k; ++j) {
      u64 l = 1;
      for (u64 jj = 1; jj <= s.k; ++jj) {
        if (jj != j) l = f_.mul(l, f_.div(jj, f_.sub(jj, j)));
      }
      lambda_.push_back(RingVec{{l}});
    }
  }

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override { return RingVec{{monomial(tau, z)}}; }

  ReconCoeff recon(std::size_t, const Randomness&) const override { return ReconCoeff{lambda_, 1}; }

 protected:
  void describe(ParamReport& r) const override {
    describe_curve(r);
    std::vector<u64> l;
    for (const auto& v : lambda_) l.push_back(v.entries[0]);
    r.set("lambda", detail::vec_text(l));
  }

 private:
  std::vector<RingVec> lambda_;
};

class Hermite final : public CurveInstance {
 public:
  explicit Hermite(const CurveShape& s) : CurveInstance("wy-hermite", s, s.h + 1), mu_(hermite_mu(f_, s.k)) {}

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    RingVec out{{monomial(tau, z)}};
    for (std::size_t c = 0; c < s_.h; ++c) {
      u64 acc = u_[tau][c];
      for (std::size_t cc = 0; cc < s_.h && acc != 0; ++cc) {
        if (cc != c && u_[tau][cc]) acc = f_.mul(acc, z[cc]);
      }
      out.entries.push_back(acc);
    }
    return out;
  }

  // Block j: (mu_value, mu_derivative * q'(j)), so the pairing with the gradient gives
  // the derivative of the curve restriction at theta = j.
  ReconCoeff recon(std::size_t, const Randomness& ell) const override {
    ReconCoeff rc;
    for (std::size_t j = 1; j <= s_.k; ++j) {
      RingVec block{{mu_[2 * (j - 1)]}};
      const u64 md = mu_[2 * (j - 1) + 1];
      for (std::size_t c = 0; c < s_.h; ++c) {
        u64 tangent = 0, theta_pow = 1;
        for (std::size_t e = 0; e < s_.t; ++e) {
          tangent = f_.add(tangent, f_.mul(f_.mul(ell[c * s_.t + e], (e + 1) % s_.p), theta_pow));
          theta_pow = f_.mul(theta_pow, j % s_.p);
        }
        block.entries.push_back(f_.mul(md, tangent));
      }
      rc.lambda.push_back(std::move(block));
    }
    return rc;
  }

 protected:
  void describe(ParamReport& r) const override {
    describe_curve(r);
    r.set("mu", detail::vec_text(mu_));
  }

 private:
  std::vector<u64> mu_;
};

}  // namespace

InstancePtr build_lagrange(std::size_t n, std::size_t t, std::size_t k, u64 p) {
  return std::make_shared<Lagrange>(shape(n, t, k, p, k - 1));
}

InstancePtr build_wy_hermite(std::size_t n, std::size_t t, std::size_t k, u64 p) {
  if (p <= 2 * k - 1) throw PirError(ErrorCode::ParamError, "Hermite interpolation needs p > 2k - 1");
  return std::make_shared<Hermite>(shape(n, t, k, p, 2 * k - 1));
}

}  // namespace pirlab::protocols
