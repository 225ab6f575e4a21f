#include "pirlab/foasc/engine.hpp"

#include <random>
#include <sstream>

#include "pirlab/errors.hpp"

namespace pirlab::foasc {
namespace {

void check_index(const FoascInstance& inst, std::size_t i) {
  if (i >= inst.n()) {
    throw PirError(ErrorCode::ParamError,
                   "index " + std::to_string(i) + " outside [0, " + std::to_string(inst.n()) + ")");
  }
}

}  // namespace

Query query_for(const FoascInstance& inst, std::size_t i, const Randomness& ell) {
  check_index(inst, i);
  if (!inst.randomness().contains(ell)) throw PirError(ErrorCode::ParamError, "randomness outside its space");
  Query q{inst.row(i, ell), Aux{i, ell}};
  if (q.queries.size() != inst.k()) throw PirError(ErrorCode::DimensionMismatch, "row length differs from k");
  return q;
}

Query query_gen(const FoascInstance& inst, std::size_t i, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return query_for(inst, i, inst.randomness().sample(rng));
}

RingVec answer(const FoascInstance& inst, const Database& x, const LevelPoint& q) {
  if (x.size() != inst.n()) throw PirError(ErrorCode::DimensionMismatch, "database length differs from n");
  if (!inst.level_codec().contains(q)) throw PirError(ErrorCode::MalformedQuery, "query outside the level set");
  const auto& ring = inst.ring();
  RingVec acc{std::vector<Elem>(inst.ring_dim(), ring.zero())};
  for (std::size_t tau = 0; tau < inst.n(); ++tau) {
    if (x[tau] == 0) continue;
    const RingVec a = inst.alpha(tau, q);
    for (std::size_t d = 0; d < acc.entries.size(); ++d) acc.entries[d] = ring.add(acc.entries[d], a.entries[d]);
  }
  return acc;
}

std::vector<std::uint8_t> answer_encoded(const FoascInstance& inst, const Database& x,
                                         std::span<const std::uint8_t> query) {
  auto q = inst.level_codec().decode(query);
  if (!q) {
    throw PirError(ErrorCode::MalformedQuery,
                   "query of " + std::to_string(query.size()) + " bytes does not decode");
  }
  std::vector<std::uint8_t> out;
  out.reserve(inst.ring_bytes());
  encode_ring_vec(inst.ring(), answer(inst, x, *q), out);
  return out;
}

int reconstruct(const FoascInstance& inst, const Aux& aux, std::span<const RingVec> answers) {
  if (answers.size() != inst.k()) throw PirError(ErrorCode::DimensionMismatch, "need exactly k answers");
  const ReconCoeff c = inst.recon(aux.i, aux.ell);
  const auto& ring = inst.ring();
  Elem y = ring.zero();
  for (std::size_t j = 0; j < answers.size(); ++j) y = ring.add(y, pair(ring, c.lambda[j], answers[j]));
  if (y == c.omega) return 1;
  if (y == ring.zero()) return 0;
  throw PirError(ErrorCode::InconsistentAnswer, "reconstructed value is neither 0 nor omega");
}

CommCost comm_cost(const FoascInstance& inst) {
  CommCost c;
  c.k = inst.k();
  c.query_bits = inst.level_codec().bits();
  c.answer_bits = inst.ring_bits();
  c.total_bits = static_cast<double>(c.k) * (c.query_bits + c.answer_bits);
  c.query_bytes = inst.level_codec().bytes();
  c.answer_bytes = inst.ring_bytes();
  c.total_bytes = c.k * (c.query_bytes + c.answer_bytes);
  return c;
}

SpanResult span_check(const FoascInstance& inst, std::size_t i, const Randomness& ell) {
  return span_check(inst, i, ell, inst.recon(i, ell));
}

SpanResult span_check(const FoascInstance& inst, std::size_t i, const Randomness& ell,
                      const ReconCoeff& coeff) {
  const auto& ring = inst.ring();
  const auto row = query_for(inst, i, ell).queries;
  if (coeff.omega == ring.zero()) return {false, "omega is zero"};
  if (coeff.lambda.size() != inst.k()) return {false, "lambda has wrong number of blocks"};
  for (std::size_t tau = 0; tau < inst.n(); ++tau) {
    Elem acc = ring.zero();
    for (std::size_t j = 0; j < inst.k(); ++j) acc = ring.add(acc, pair(ring, inst.alpha(tau, row[j]), coeff.lambda[j]));
    const Elem want = tau == i ? coeff.omega : ring.zero();
    if (acc != want) {
      std::ostringstream os;
      os << "row tau=" << tau << " pairs to " << acc << ", expected " << want;
      return {false, os.str()};
    }
  }
  return {true, {}};
}

}  // namespace pirlab::foasc
