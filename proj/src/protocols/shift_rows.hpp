#pragma once

#include "common.hpp"
#include "pirlab/foasc/instance.hpp"
#include "pirlab/foasc/report.hpp"

namespace pirlab::protocols::detail {

// Rows q_j = w + d_j v_i over Z_m with w uniform in Z_m^h.
class ShiftRows : public foasc::FoascInstance {
 public:
  ShiftRows(std::string id, const mv::MatchingFamily& fam, std::vector<u64> d,
            std::shared_ptr<const algebra::ScalarRing> ring, std::size_t dim)
      : FoascInstance(std::move(id), fam.size(), d.size(), 1, foasc::RandomnessSpace(repeat(fam.m, fam.h)),
                      foasc::LevelCodec::box(repeat(fam.m, fam.h), power_name("Z_" + std::to_string(fam.m), fam.h)),
                      std::move(ring), dim),
        fam_(fam),
        d_(std::move(d)) {}

  std::vector<foasc::LevelPoint> row(std::size_t i, const foasc::Randomness& ell) const override {
    std::vector<foasc::LevelPoint> rows;
    for (u64 dj : d_) rows.push_back(shifted(ell, dj, fam_.v[i], fam_.m));
    return rows;
  }

 protected:
  u64 u_dot(std::size_t tau, const std::vector<u64>& z) const { return mv::inner_mod(fam_.u[tau], z, fam_.m); }

  void describe_family(foasc::ParamReport& r) const {
    r.set("m", fam_.m);
    r.set("h", fam_.h);
    r.set("d", vec_text(d_));
    r.set("family_size", fam_.size());
    r.set("family", family_text(fam_));
  }

  mv::MatchingFamily fam_;
  std::vector<u64> d_;
};

}  // namespace pirlab::protocols::detail
