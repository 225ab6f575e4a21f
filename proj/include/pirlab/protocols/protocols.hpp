#pragma once

#include <cstddef>
#include <vector>

#include "pirlab/algebra/group_ring.hpp"
#include "pirlab/foasc/instance.hpp"
#include "pirlab/mv/decoding_poly.hpp"
#include "pirlab/mv/matching_family.hpp"
#include "pirlab/mv/nice_sets.hpp"

namespace pirlab::protocols {

using algebra::u64;
using foasc::InstancePtr;

// Least h with h^3 >= n.
std::size_t cgks_side(std::size_t n);

// 2 servers, t = 1, over F_2 on a cube of side h.
InstancePtr build_cgks(std::size_t n);

// Least h with C(h, d) >= n.
std::size_t curve_dimension(std::size_t n, std::size_t d);

// The first n weight-d vectors of {0,1}^h, by colexicographic order of their supports.
std::vector<std::vector<u64>> curve_exponents(std::size_t n, std::size_t h, std::size_t d);

// Degree-t curve through u_i with Lagrange weights at 1..k; d = (k-1)/t.
InstancePtr build_lagrange(std::size_t n, std::size_t t, std::size_t k, u64 p);

// As Lagrange with answers carrying the gradient; d = (2k-1)/t, needs p > 2k-1.
InstancePtr build_wy_hermite(std::size_t n, std::size_t t, std::size_t k, u64 p);

// 3 servers over F_2 with answers in F_2^p, p = 2^r - 1. The family must be <2>-matching
// in F_p^h with <u_i, 1> != 0.
InstancePtr build_yekhanin(const mv::MatchingFamily& family, const mv::NiceSets& nice);

// Same rows as build_yekhanin; answers in F_{2^r} with P = 1 + theta + theta^gamma.
InstancePtr build_raghavendra(const mv::MatchingFamily& family, unsigned r);

// k = monomial count of P, answers in F_p.
InstancePtr build_efremenko(const mv::MatchingFamily& family, const mv::DecodingPoly& poly);

struct DvirGopiCoeffs {
  u64 m = 0;
  std::size_t k = 0;
  std::vector<algebra::GroupRingElement> mu;  // 2k entries: value, derivative per server
  algebra::GroupRingElement nu;
};

// Solves sum_j (mu_{2j} + delta mu_{2j+1}) g^{delta (j-1)} = nu [delta = 0] over
// Z_m[g]/(g^m - 1) for delta in {0} cup S_m with nu nonzero modulo every prime of m.
// Throws NoMuNu.
DvirGopiCoeffs dvir_gopi_coefficients(u64 m);

// Residual of the defining identities; nullopt when they hold.
std::optional<std::string> check_dvir_gopi(const DvirGopiCoeffs& c);

// 2^{r-1} servers, answers in (Z_m[g]/(g^m - 1))^{h+1}; the one protocol with omega != 1.
InstancePtr build_dvir_gopi(const mv::MatchingFamily& family);

// {0} cup S_{m'} for m' = m p, computed as the CRT image of ({0} cup S_m) x {0, 1}.
std::vector<u64> gks_support(u64 m, u64 p);

// k = |points| servers over F_p with answers in F_p^{h+1}; family over Z_{mp}.
InstancePtr build_gks(u64 m, u64 p, const mv::MatchingFamily& family, const std::vector<u64>& points);

}  // namespace pirlab::protocols
