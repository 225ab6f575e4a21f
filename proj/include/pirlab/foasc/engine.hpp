#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pirlab/foasc/instance.hpp"

namespace pirlab::foasc {

struct Query {
  std::vector<LevelPoint> queries;
  Aux aux;
};

// Queries for a fixed row l of Q^(i); used by the exhaustive verifiers.
Query query_for(const FoascInstance& inst, std::size_t i, const Randomness& ell);

// Draws l uniformly from a generator seeded with seed; deterministic in (inst, i, seed).
Query query_gen(const FoascInstance& inst, std::size_t i, std::uint64_t seed);

// F_x(q) = sum over tau with x_tau = 1 of alpha_tau(q).
RingVec answer(const FoascInstance& inst, const Database& x, const LevelPoint& q);

// Server-side wire form: decode q, answer, encode. Throws PirError(MalformedQuery).
std::vector<std::uint8_t> answer_encoded(const FoascInstance& inst, const Database& x,
                                         std::span<const std::uint8_t> query);

// y = sum_j <lambda_j, a_j>; returns 1 if y == omega, 0 if y == 0, and throws
// PirError(InconsistentAnswer) otherwise.
int reconstruct(const FoascInstance& inst, const Aux& aux, std::span<const RingVec> answers);

struct CommCost {
  std::size_t k = 0;
  double query_bits = 0;   // per server, log2 |S|
  double answer_bits = 0;  // per server, log2 |R|
  double total_bits = 0;   // k (log2 |S| + log2 |R|)
  std::size_t query_bytes = 0;
  std::size_t answer_bytes = 0;
  std::size_t total_bytes = 0;
};

CommCost comm_cost(const FoascInstance& inst);

struct SpanResult {
  bool pass = false;
  std::string detail;
};

// Verifies alpha(Q^(i)_l) * lambda = omega * e_i row by row, with omega != 0.
SpanResult span_check(const FoascInstance& inst, std::size_t i, const Randomness& ell);

// Same check against caller-supplied coefficients.
SpanResult span_check(const FoascInstance& inst, std::size_t i, const Randomness& ell,
                      const ReconCoeff& coeff);

}  // namespace pirlab::foasc
