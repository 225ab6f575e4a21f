#include "pirlab/foasc/instance.hpp"

#include "pirlab/errors.hpp"

namespace pirlab::foasc {

FoascInstance::FoascInstance(std::string id, std::size_t n, std::size_t k, std::size_t t,
                             RandomnessSpace space, LevelCodec codec,
                             std::shared_ptr<const algebra::ScalarRing> ring, std::size_t dim)
    : id_(std::move(id)),
      n_(n),
      k_(k),
      t_(t),
      space_(std::move(space)),
      codec_(std::move(codec)),
      ring_(std::move(ring)),
      dim_(dim) {
  if (n_ == 0 || k_ == 0) throw PirError(ErrorCode::ParamError, "n and k must be positive");
  if (!ring_) throw PirError(ErrorCode::ParamError, "missing answer ring");
}

ParamReport FoascInstance::report() const {
  ParamReport r;
  r.set("protocol", id_);
  r.set("n", n_);
  r.set("k", k_);
  r.set("t", t_);
  r.set("N", space_.size() ? std::to_string(*space_.size()) : "2^" + format_bits(space_.log2_size()));
  r.set("randomness", space_.describe());
  r.set("level_set", codec_.description());
  r.set("level_set_size", codec_.cardinality());
  r.set("ring", ring_->name() + (dim_ > 1 ? "^" + std::to_string(dim_) : ""));
  r.set("ring_dim", dim_);
  r.set("query_bits", format_bits(codec_.bits()));
  r.set("answer_bits", format_bits(ring_bits()));
  r.set("comm_bits", format_bits(static_cast<double>(k_) * (codec_.bits() + ring_bits())));
  r.set("query_bytes", codec_.bytes());
  r.set("answer_bytes", ring_bytes());
  r.set("comm_bytes", k_ * (codec_.bytes() + ring_bytes()));
  describe(r);
  return r;
}

u64 FoascInstance::digest() const { return fnv1a(report().to_kv()); }

u64 fnv1a(std::string_view bytes) {
  u64 h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace pirlab::foasc
