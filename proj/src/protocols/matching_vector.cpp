#include <algorithm>
#include <cmath>

#include "pirlab/algebra/hasse.hpp"
#include "pirlab/algebra/int_ring.hpp"
#include "pirlab/algebra/linalg.hpp"
#include "pirlab/mv/canonical.hpp"
#include "pirlab/protocols/interpolation.hpp"
#include "pirlab/protocols/protocols.hpp"
#include "shift_rows.hpp"

namespace pirlab::protocols {

using namespace foasc;
using algebra::GroupRing;
using algebra::GroupRingElement;
using algebra::PrimeField;

namespace {

class Efremenko final : public detail::ShiftRows {
 public:
  Efremenko(const mv::MatchingFamily& fam, const mv::DecodingPoly& poly)
      : ShiftRows("efremenko", fam, poly.exponents(), detail::prime_ring(poly.p), 1),
        poly_(poly),
        f_(poly.p) {}

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    return RingVec{{f_.pow(poly_.g, u_dot(tau, z))}};
  }

  ReconCoeff recon(std::size_t i, const Randomness& ell) const override {
    const u64 s = f_.pow(poly_.g, (fam_.m - u_dot(i, ell)) % fam_.m);
    ReconCoeff rc;
    for (u64 rho : poly_.coefficients()) rc.lambda.push_back(RingVec{{f_.mul(s, rho)}});
    return rc;
  }

 protected:
  void describe(ParamReport& r) const override {
    describe_family(r);
    r.set("p", poly_.p);
    r.set("g", poly_.g);
    r.set("decoding_poly_exponents", detail::vec_text(poly_.exponents()));
    r.set("decoding_poly_coefficients", detail::vec_text(poly_.coefficients()));
  }

 private:
  mv::DecodingPoly poly_;
  PrimeField f_;
};

class DvirGopi final : public detail::ShiftRows {
 public:
  DvirGopi(const mv::MatchingFamily& fam, DvirGopiCoeffs coeffs, std::vector<u64> d)
      : ShiftRows("dvir-gopi", fam, std::move(d), std::make_shared<algebra::GroupRingScalars>(GroupRing(fam.m)),
                  fam.h + 1),
        r_(fam.m),
        c_(std::move(coeffs)) {}

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    const GroupRingElement gz = r_.monomial(u_dot(tau, z));
    RingVec out{{r_.pack(gz)}};
    for (u64 uc : fam_.u[tau]) out.entries.push_back(r_.pack(r_.scale(uc, gz)));
    return out;
  }

  ReconCoeff recon(std::size_t i, const Randomness& ell) const override {
    ReconCoeff rc;
    for (std::size_t j = 0; j < k(); ++j) {
      RingVec block{{r_.pack(c_.mu[2 * j])}};
      for (u64 vc : fam_.v[i]) block.entries.push_back(r_.pack(r_.scale(vc, c_.mu[2 * j + 1])));
      rc.lambda.push_back(std::move(block));
    }
    rc.omega = r_.pack(r_.mul(r_.monomial(u_dot(i, ell)), c_.nu));
    return rc;
  }

 protected:
  void describe(ParamReport& r) const override {
    describe_family(r);
    r.set("nu", detail::vec_text(c_.nu.coeffs));
    for (std::size_t j = 0; j < c_.mu.size(); ++j) r.set("mu_" + std::to_string(j + 1), detail::vec_text(c_.mu[j].coeffs));
  }

 private:
  GroupRing r_;
  DvirGopiCoeffs c_;
};

// Level points live in H_m^h inside F_p^h; l holds the exponents of g_l.
class Gks final : public FoascInstance {
 public:
  Gks(u64 m, u64 p, u64 g, const mv::MatchingFamily& fam, std::vector<u64> points, std::vector<u64> mu)
      : FoascInstance("gks", fam.size(), points.size(), 1, RandomnessSpace(detail::repeat(m, fam.h)),
                      level_codec(m, p, fam.h), detail::prime_ring(p), fam.h + 1),
        m_(m),
        f_(p),
        g_(g),
        fam_(fam),
        b_(std::move(points)),
        mu_(std::move(mu)),
        indices_(algebra::multi_indices_below(fam.h, 2)) {}

  std::vector<LevelPoint> row(std::size_t i, const Randomness& ell) const override {
    std::vector<LevelPoint> rows;
    for (u64 b : b_) {
      LevelPoint q(fam_.h);
      for (std::size_t c = 0; c < fam_.h; ++c) q[c] = f_.mul(f_.pow(g_, ell[c]), f_.pow(b, fam_.v[i][c]));
      rows.push_back(std::move(q));
    }
    return rows;
  }

  RingVec alpha(std::size_t tau, const LevelPoint& z) const override {
    RingVec out;
    for (const auto& idx : indices_) out.entries.push_back(algebra::hasse_of_monomial(f_, fam_.u[tau], idx, z));
    return out;
  }

  ReconCoeff recon(std::size_t i, const Randomness& ell) const override {
    u64 e = 0;
    for (std::size_t c = 0; c < fam_.h; ++c) e = (e + ell[c] * (fam_.u[i][c] % m_)) % m_;
    const u64 s = f_.pow(g_, (m_ - e) % m_);
    const auto q = row(i, ell);
    ReconCoeff rc;
    for (std::size_t j = 0; j < b_.size(); ++j) {
      RingVec block{{f_.mul(s, mu_[2 * j])}};
      const u64 md = f_.div(f_.mul(s, mu_[2 * j + 1]), b_[j]);
      for (std::size_t c = 0; c < fam_.h; ++c) {
        block.entries.push_back(f_.mul(md, f_.mul(f_.from_u64(fam_.v[i][c]), q[j][c])));
      }
      rc.lambda.push_back(std::move(block));
    }
    return rc;
  }

 protected:
  void describe(ParamReport& r) const override {
    r.set("m", m_);
    r.set("p", f_.modulus());
    r.set("m_prime", fam_.m);
    r.set("g", g_);
    r.set("h", fam_.h);
    r.set("points", detail::vec_text(b_));
    r.set("mu", detail::vec_text(mu_));
    r.set("family_size", fam_.size());
    r.set("family", detail::family_text(fam_));
    const double stated = static_cast<double>(k()) *
                          (static_cast<double>(fam_.h) * std::log2(static_cast<double>(m_)) +
                           std::log2(static_cast<double>(f_.modulus())));
    r.set("stated_comm_bits", format_bits(stated));
    r.set("comm_note", "answers carry h+1 field elements; stated cost counts one");
  }

 private:
  static LevelCodec level_codec(u64 m, u64 p, std::size_t h) {
    const PrimeField f(p);
    u64 card = 1;
    for (std::size_t c = 0; c < h; ++c) card *= m;
    return LevelCodec(detail::repeat(p, h), card,
                      detail::power_name("H_" + std::to_string(m) + " in F_" + std::to_string(p), h),
                      [f, m](const LevelPoint& z) {
                        return std::all_of(z.begin(), z.end(), [&](u64 x) { return x != 0 && f.pow(x, m) == 1; });
                      });
  }

  u64 m_;
  PrimeField f_;
  u64 g_;
  mv::MatchingFamily fam_;
  std::vector<u64> b_;
  std::vector<u64> mu_;
  std::vector<algebra::MultiIndex> indices_;
};

}  // namespace

InstancePtr build_efremenko(const mv::MatchingFamily& family, const mv::DecodingPoly& poly) {
  if (auto err = mv::check_decoding_poly(poly)) throw PirError(ErrorCode::DecodingPolyInvalid, *err);
  if (family.m != poly.m || family.target != mv::canonical_set(poly.m)) {
    throw PirError(ErrorCode::ParamError, "family must be S_m-matching over Z_m");
  }
  detail::require_family(family, false);
  return std::make_shared<Efremenko>(family, poly);
}

DvirGopiCoeffs dvir_gopi_coefficients(u64 m) {
  const algebra::IntRing zm(m);
  const auto& primes = zm.prime_factors();
  const std::size_t k = std::size_t{1} << (primes.size() - 1);
  const auto s = mv::canonical_set(m);
  const std::size_t vars = 2 * k * m;

  // Per prime: flatten mu into 2k blocks of m coefficients and take the kernel of the
  // delta in S_m identities; keep a kernel vector whose nu = sum_j mu_{2j} is nonzero.
  std::vector<std::vector<u64>> parts;
  for (u64 q : primes) {
    const PrimeField f(q);
    algebra::Matrix a;
    for (u64 delta : s) {
      for (u64 out = 0; out < m; ++out) {
        std::vector<u64> row(vars, 0);
        for (std::size_t j = 0; j < k; ++j) {
          const u64 shift = delta * j % m;
          const u64 src = (out + m - shift) % m;
          row[(2 * j) * m + src] = f.add(row[(2 * j) * m + src], 1);
          row[(2 * j + 1) * m + src] = f.add(row[(2 * j + 1) * m + src], delta % q);
        }
        a.push_back(std::move(row));
      }
    }
    const auto kernel = algebra::nullspace(f, a, vars);
    const std::vector<u64>* pick = nullptr;
    for (const auto& x : kernel) {
      for (u64 c = 0; c < m && !pick; ++c) {
        u64 nu = 0;
        for (std::size_t j = 0; j < k; ++j) nu = f.add(nu, x[(2 * j) * m + c]);
        if (nu != 0) pick = &x;
      }
      if (pick) break;
    }
    if (!pick) throw PirError(ErrorCode::NoMuNu, "no (mu, nu) with nu nonzero mod " + std::to_string(q));
    parts.push_back(*pick);
  }

  const GroupRing ring(m);
  DvirGopiCoeffs out{m, k, {}, ring.zero()};
  std::vector<u64> residues(primes.size());
  for (std::size_t b = 0; b < 2 * k; ++b) {
    GroupRingElement e = ring.zero();
    for (u64 c = 0; c < m; ++c) {
      for (std::size_t r = 0; r < primes.size(); ++r) residues[r] = parts[r][b * m + c];
      e.coeffs[c] = zm.crt_combine(residues);
    }
    out.mu.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < k; ++j) out.nu = ring.add(out.nu, out.mu[2 * j]);
  if (auto err = check_dvir_gopi(out)) throw PirError(ErrorCode::NoMuNu, *err);
  return out;
}

std::optional<std::string> check_dvir_gopi(const DvirGopiCoeffs& c) {
  const GroupRing ring(c.m);
  if (c.mu.size() != 2 * c.k) return "mu must have 2k entries";
  for (u64 delta : mv::canonical_set_with_zero(c.m)) {
    GroupRingElement acc = ring.zero();
    for (std::size_t j = 0; j < c.k; ++j) {
      const auto coef = ring.add(c.mu[2 * j], ring.scale(delta, c.mu[2 * j + 1]));
      acc = ring.add(acc, ring.mul(coef, ring.monomial(delta * j % c.m)));
    }
    const auto want = delta == 0 ? c.nu : ring.zero();
    if (acc != want) return "identity fails at delta = " + std::to_string(delta);
  }
  for (u64 q : ring.base().prime_factors()) {
    const auto red = ring.reduce_mod(c.nu, q);
    if (std::all_of(red.begin(), red.end(), [](u64 x) { return x == 0; })) {
      return "nu vanishes modulo " + std::to_string(q);
    }
  }
  return std::nullopt;
}

InstancePtr build_dvir_gopi(const mv::MatchingFamily& family) {
  if (family.target != mv::canonical_set(family.m)) throw PirError(ErrorCode::ParamError, "family must be S_m-matching");
  detail::require_family(family, false);
  if (!GroupRing(family.m).packable()) throw PirError(ErrorCode::ParamError, "m^m must fit in 64 bits");
  auto coeffs = dvir_gopi_coefficients(family.m);
  std::vector<u64> d;
  for (std::size_t j = 0; j < coeffs.k; ++j) d.push_back(j);
  return std::make_shared<DvirGopi>(family, std::move(coeffs), std::move(d));
}

std::vector<u64> gks_support(u64 m, u64 p) {
  if (algebra::gcd(m, p) != 1) throw PirError(ErrorCode::ParamError, "m and p must be coprime");
  std::vector<u64> out;
  const u64 moduli[2] = {m, p};
  for (u64 a : mv::canonical_set_with_zero(m)) {
    for (u64 b : {u64{0}, u64{1}}) {
      const u64 res[2] = {a, b};
      out.push_back(algebra::crt_combine(res, moduli));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InstancePtr build_gks(u64 m, u64 p, const mv::MatchingFamily& family, const std::vector<u64>& points) {
  if (!algebra::is_prime(p) || (p - 1) % m != 0) throw PirError(ErrorCode::ParamError, "need prime p with m | p - 1");
  const PrimeField f(p);
  const u64 g = f.find_order_element(m);
  const u64 mp = m * p;
  if (family.m != mp || family.target != mv::canonical_set(mp)) {
    throw PirError(ErrorCode::ParamError, "family must be S_{mp}-matching over Z_{mp}");
  }
  detail::require_family(family, false);
  if (points.empty()) throw PirError(ErrorCode::InterpolationSetInvalid, "no evaluation points");
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j] == 0 || points[j] >= p || f.pow(points[j], m) != 1) {
      throw PirError(ErrorCode::InterpolationSetInvalid, "points must lie in H_m");
    }
    for (std::size_t jj = 0; jj < j; ++jj) {
      if (points[jj] == points[j]) throw PirError(ErrorCode::InterpolationSetInvalid, "points must be distinct");
    }
  }
  if (!constant_term_weights(f, points, mv::canonical_set_with_zero(m), 1)) {
    throw PirError(ErrorCode::InterpolationSetInvalid, "not a 0-interpolation set");
  }
  auto mu = constant_term_weights(f, points, gks_support(m, p), 2);
  if (!mu) throw PirError(ErrorCode::InterpolationSetInvalid, "not a 0-interpolation set of multiplicity 2");
  return std::make_shared<Gks>(m, p, g, family, points, std::move(*mu));
}

}  // namespace pirlab::protocols
