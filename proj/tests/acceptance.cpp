// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "pirlab/algebra/ext_field.hpp"
#include "pirlab/algebra/linalg.hpp"
#include "pirlab/algebra/prime_field.hpp"
#include "pirlab/errors.hpp"
#include "pirlab/foasc/engine.hpp"
#include "pirlab/foasc/oa.hpp"
#include "pirlab/foasc/toy_instances.hpp"
#include "pirlab/mv/canonical.hpp"
#include "pirlab/mv/decoding_poly.hpp"
#include "pirlab/mv/nice_sets.hpp"
#include "pirlab/protocols/interpolation.hpp"
#include "pirlab/protocols/protocols.hpp"
#include "pirlab/registry.hpp"
#include "pirlab/sim/inprocess.hpp"
#include "pirlab/sim/tcp.hpp"
#include "pirlab/verify/suites.hpp"

using namespace pirlab;
using foasc::Database;
using foasc::u64;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, double limit_s, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.pass = false;
    o.note << " [over time limit]";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d  %s:%s (%.2f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.note.str().c_str(), s, limit_s);
  std::fflush(stdout);
}

// Correctness, t-privacy, OA strength and span over the whole (i, l) grid.
void full_suites(Outcome& o, const foasc::FoascInstance& inst, bool unit_basis = false) {
  verify::CorrectnessOptions opt;
  opt.unit_basis = unit_basis;
  const auto c = verify::exhaustive_correctness(inst, opt);
  const auto p = verify::exhaustive_privacy(inst, inst.t());
  const auto oa = verify::oa_family_check(inst);
  const auto sp = verify::span_sweep(inst);
  o.require(c.pass(), "correctness");
  o.require(p.pass(), "privacy");
  o.require(oa.pass(), "oa");
  o.require(sp.pass(), "span");
  o.note << " " << inst.protocol_id() << " n=" << inst.n() << " k=" << inst.k() << " N="
         << *inst.randomness().size() << " dbs=" << c.databases << (unit_basis ? " (zero + unit basis)" : "")
         << " round_trips=" << c.round_trips << " uniform=" << (p.uniform() ? "yes" : "no");
}

}  // namespace

int main() {
  criterion(1, 1, "binary 8x4 even-weight array is OA of strength 3, index 1, not 4", [](Outcome& o) {
    foasc::OAMatrix a;
    a.columns = 4;
    a.rows = {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0},
              {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}};
    const auto r3 = foasc::oa_strength_check(a, 2, 3);
    const auto r4 = foasc::oa_strength_check(a, 2, 4);
    o.require(r3.ok && r3.index == 1, "t=3 accepted with index 1");
    o.require(!r4.ok, "t=4 rejected");
    o.note << " t=3 index " << r3.index << "; t=4: " << r4.detail;
  });

  criterion(2, 1, "toy F_3 instance: span with lambda=(2,2), correctness, 1-privacy", [](Outcome& o) {
    const auto inst = foasc::make_toy_f3();
    unsigned spans = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      for (u64 l = 0; l < 9; ++l) {
        const auto rc = inst->recon(i, {l});
        o.require(rc.lambda[0].entries == std::vector<u64>{2} && rc.lambda[1].entries == std::vector<u64>{2},
                  "lambda = (2,2)");
        spans += foasc::span_check(*inst, i, {l}).pass;
      }
    }
    o.require(spans == 18, "span on all 18 (i, l)");
    const auto c = verify::exhaustive_correctness(*inst);
    o.require(c.pass() && c.round_trips == 72, "correctness 4 x 2 x 9");
    o.require(verify::exhaustive_privacy(*inst, 1).pass(), "1-privacy");
    o.note << " span " << spans << "/18, round_trips=" << c.round_trips;
  });

  criterion(3, 120, "CGKS n in {1,8,27}: correctness, 1-privacy, raw bits 12h+2", [](Outcome& o) {
    for (std::size_t n : {1, 8, 27}) {
      const auto inst = protocols::build_cgks(n);
      const double h = static_cast<double>(protocols::cgks_side(n));
      const bool unit = n == 27;  // 2^27 databases: linear answers make zero + unit basis sufficient
      full_suites(o, *inst, unit);
      const double bits = foasc::comm_cost(*inst).total_bits;
      o.require(bits == 12 * h + 2, "raw bits 12h+2 at n=" + std::to_string(n));
      o.note << " bits=" << bits << ";";
    }
  });

  criterion(4, 60, "Lagrange t=1 k=3 p=5 n=3: suites and k(h+1)log2(5) bits", [](Outcome& o) {
    const auto inst = protocols::build_lagrange(3, 1, 3, 5);
    o.require(*inst->report().get("h") == "3", "h = 3");
    o.require(*inst->randomness().size() == 125, "N = 125");
    full_suites(o, *inst);
    const double bits = foasc::comm_cost(*inst).total_bits;
    const double want = 3 * 4 * std::log2(5.0);
    o.require(std::abs(bits - want) < 1e-9, "payload bits");
    o.note << " bits=" << bits;
  });

  criterion(5, 300, "WY Hermite k=2 t=1 p=7 h=4 n=4: M nonsingular, suites", [](Outcome& o) {
    const algebra::PrimeField f7(7);
    const auto m = protocols::interpolation_matrix(f7, {1, 2}, {0, 1, 2, 3}, 2);
    const u64 det = algebra::determinant(f7, m);
    o.require(det != 0, "M nonsingular");
    const auto inst = protocols::build_wy_hermite(4, 1, 2, 7);
    o.require(*inst->report().get("h") == "4", "h = 4");
    o.require(*inst->randomness().size() == 2401, "N = 7^4");
    full_suites(o, *inst);
    o.note << " det M=" << det;
  });

  criterion(6, 300, "Yekhanin/Raghavendra p=7: gamma, P, nice-set parity, suites", [](Outcome& o) {
    const auto ns = mv::yekhanin_nice_sets(3);
    o.require(ns.gamma == 3, "gamma = 3");
    const auto f8 = algebra::ExtField::standard(2, 3);
    const u64 g = f8.x();
    auto p_of = [&](u64 th) { return f8.add(f8.add(1, th), f8.pow(th, 3)); };
    for (u64 e : {1, 2, 4}) o.require(p_of(f8.pow(g, e)) == 0, "P(g^" + std::to_string(e) + ") = 0");
    o.require(p_of(1) == 1, "P(1) = 1");
    unsigned pairs = 0, even = 0;
    for (u64 sigma = 0; sigma < 7; ++sigma) {
      for (u64 delta : {1, 2, 4}) {
        unsigned hits = 0;
        for (u64 s : ns.s1) hits += std::count(ns.s0.begin(), ns.s0.end(), (sigma + delta * s) % 7);
        ++pairs;
        even += hits % 2 == 0;
      }
    }
    o.require(pairs == 21 && even == 21, "parity on 21 pairs");
    o.note << " S0={";
    for (u64 s : ns.s0) o.note << s << (s == ns.s0.back() ? "}" : ",");
    o.note << " parity " << even << "/21;";
    for (const char* name : {"yekhanin", "raghavendra"}) {
      const auto b = build_instance(name, {{"r", "3"}, {"h", "3"}, {"n", "4"}});
      full_suites(o, *b.inst);
      o.note << ";";
    }
  });

  criterion(7, 120, "Efremenko m=6 p=7: canonical set, trivial polynomial, suites", [](Outcome& o) {
    o.require(mv::canonical_set(6) == std::vector<u64>{1, 3, 4}, "S_6 = {1,3,4}");
    const algebra::PrimeField f(7);
    const u64 g = f.find_order_element(6);
    const auto dp = mv::trivial_decoding_poly(6, 7, g);
    o.require(dp.monomial_count() <= 4, "at most 4 monomials");
    for (u64 s : {1, 3, 4}) o.require(algebra::poly_eval(f, dp.poly, f.pow(g, s)) == 0, "root at g^s");
    o.require(algebra::poly_eval(f, dp.poly, 1) == 1, "P(1) = 1");
    const auto b = build_instance("efremenko", {{"m", "6"}, {"p", "7"}, {"h", "3"}, {"n", "4"}});
    o.require(*b.inst->randomness().size() == 216, "N = 216");
    full_suites(o, *b.inst);
    o.note << " monomials=" << dp.monomial_count();
  });

  criterion(8, 1800, "sparse search m=511: 3-monomial decoding polynomial", [](Outcome& o) {
    const u64 p = mv::prime_one_mod(511);
    const algebra::PrimeField f(p);
    const u64 g = f.find_order_element(511);
    mv::SparseSearchStats stats;
    const auto dp = mv::sparse_decoding_poly_search(511, p, g, 3, {}, &stats);
    o.require(dp.monomial_count() == 3, "3 monomials");
    o.require(!mv::check_decoding_poly(dp).has_value(), "decoding identities");
    unsigned roots = 0;
    for (u64 s : mv::canonical_set(511)) roots += algebra::poly_eval(f, dp.poly, f.pow(g, s)) == 0;
    o.require(roots == mv::canonical_set(511).size(), "roots on S_511");
    o.note << " p=" << p << " exponents={";
    for (u64 e : dp.exponents()) o.note << e << (e == dp.exponents().back() ? "}" : ",");
    o.note << " sets examined=" << stats.examined;
  });

  criterion(9, 300, "Dvir-Gopi m=6: (mu, nu) valid, omega != 1 path, suites", [](Outcome& o) {
    const auto c = protocols::dvir_gopi_coefficients(6);
    o.require(!protocols::check_dvir_gopi(c).has_value(), "M mu = (nu, 0, ...)");
    const algebra::GroupRing r(6);
    for (u64 q : {2, 3}) {
      const auto red = r.reduce_mod(c.nu, q);
      o.require(std::any_of(red.begin(), red.end(), [](u64 x) { return x != 0; }),
                "nu nonzero mod " + std::to_string(q));
    }
    const auto b = build_instance("dvir-gopi", {{"m", "6"}, {"h", "3"}, {"n", "4"}});
    std::size_t non_unit_omega = 0;
    for (std::size_t i = 0; i < b.inst->n(); ++i)
      for (u64 l = 0; l < *b.inst->randomness().size(); ++l)
        non_unit_omega += b.inst->recon(i, b.inst->randomness().at(l)).omega != b.inst->ring().one();
    o.require(non_unit_omega > 0, "omega != 1 exercised");
    full_suites(o, *b.inst);
    o.note << " pairs with omega != 1: " << non_unit_omega;
  });

  criterion(10, 300, "GKS m=2 p=3: CRT support, interpolation checks, suites", [](Outcome& o) {
    std::vector<u64> crt;
    for (u64 x = 0; x < 6; ++x)
      if (x % 2 <= 1 && x % 3 <= 1) crt.push_back(x);
    const auto sbar = protocols::gks_support(2, 3);
    o.require(sbar == crt && sbar == mv::canonical_set_with_zero(6), "support {0,1,3,4}");
    const algebra::PrimeField f(3);
    const std::vector<u64> pts{1, 2};
    // Plain: constant term of polynomials on {0,1} from values at B (9 polynomials).
    const auto mu1 = protocols::constant_term_weights(f, pts, {0, 1}, 1);
    o.require(mu1.has_value(), "plain weights exist");
    unsigned plain_ok = 0;
    for (u64 c0 = 0; c0 < 3; ++c0)
      for (u64 c1 = 0; c1 < 3; ++c1) {
        u64 acc = 0;
        for (std::size_t j = 0; j < 2; ++j) acc = f.add(acc, f.mul((*mu1)[j], f.add(c0, f.mul(c1, pts[j]))));
        plain_ok += acc == c0;
      }
    // Multiplicity 2: values and first derivatives at B on support {0,1,3,4} (81 polynomials).
    const auto mu2 = protocols::constant_term_weights(f, pts, sbar, 2);
    o.require(mu2.has_value(), "multiplicity-2 weights exist");
    unsigned mult_ok = 0;
    for (u64 code = 0; code < 81; ++code) {
      std::vector<u64> c(4);
      for (std::size_t s = 0, rest = code; s < 4; ++s, rest /= 3) c[s] = rest % 3;
      u64 acc = 0;
      for (std::size_t j = 0; j < 2; ++j) {
        u64 val = 0, der = 0;
        for (std::size_t s = 0; s < 4; ++s) {
          val = f.add(val, f.mul(c[s], f.pow(pts[j], sbar[s])));
          if (sbar[s] > 0) der = f.add(der, f.mul(f.mul(c[s], f.from_u64(sbar[s])), f.pow(pts[j], sbar[s] - 1)));
        }
        acc = f.add(acc, f.add(f.mul((*mu2)[2 * j], val), f.mul((*mu2)[2 * j + 1], der)));
      }
      mult_ok += acc == c[0];
    }
    o.require(plain_ok == 9, "plain on 9 polynomials");
    o.require(mult_ok == 81, "multiplicity 2 on 81 polynomials");
    const bool plain_on_sbar = protocols::constant_term_weights(f, pts, sbar, 1).has_value();
    o.note << " plain " << plain_ok << "/9 on {0,1}, mult-2 " << mult_ok
           << "/81 on {0,1,3,4}, plain on {0,1,3,4} solvable=" << (plain_on_sbar ? "yes" : "no") << ";";
    const auto b = build_instance("gks", {{"m", "2"}, {"p", "3"}, {"h", "3"}, {"n", "4"}, {"points", "1,2"}});
    full_suites(o, *b.inst);
  });

  criterion(11, 300, "span on every registered protocol; TCP bytes equal in-process bytes", [](Outcome& o) {
    std::uint64_t grid = 0;
    for (const auto& name : protocol_names()) {
      if (name == "broken-demo") continue;  // negative control, see 12
      const auto b = build_instance(name, {});
      const auto s = verify::span_sweep(*b.inst);
      o.require(s.pass(), "span " + name);
      grid += s.checked;
    }
    o.note << " (i,l) pairs checked=" << grid << ";";
    const auto inst = protocols::build_cgks(8);
    const auto x = Database::from_mask(8, 0xb4);
    std::vector<std::unique_ptr<sim::TcpServer>> servers;
    std::vector<sim::Endpoint> eps;
    for (std::size_t j = 0; j < inst->k(); ++j) {
      servers.push_back(std::make_unique<sim::TcpServer>(sim::ServerNode(j, inst, x), 0));
      servers.back()->start();
      eps.push_back({"127.0.0.1", servers.back()->port()});
    }
    unsigned equal = 0, correct = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      const auto tcp = sim::client_retrieve(eps, inst, i, 500 + i);
      const auto local = sim::run_inprocess(inst, x, i, 500 + i);
      equal += tcp.transcript.payload_bytes() == local.transcript.payload_bytes() &&
               verify::comm_audit(*inst, tcp.transcript).pass();
      correct += tcp.bit == x[i];
    }
    for (auto& s : servers) s->stop();
    o.require(equal == 8, "payload bytes");
    o.require(correct == 8, "retrieved bits");
    o.note << " loopback CGKS n=8: " << equal << "/8 byte counts equal, " << correct << "/8 bits correct";
  });

  criterion(12, 60, "negative controls and fault injection", [](Outcome& o) {
    const auto ignores = foasc::make_broken(foasc::Defect::IgnoresRandomness);
    const auto wrong = foasc::make_broken(foasc::Defect::WrongLambda);
    o.require(!verify::exhaustive_correctness(*wrong).pass(), "correctness fails");
    o.require(!verify::exhaustive_privacy(*ignores, 1).pass(), "privacy fails");
    o.require(!verify::oa_family_check(*ignores).pass(), "oa fails");
    o.require(!verify::span_sweep(*wrong).pass(), "span fails");
    const auto inst = protocols::build_cgks(8);
    auto tr = sim::run_inprocess(inst, Database::from_mask(8, 1), 0, 1).transcript;
    tr.servers[1].query_payload += 2;
    o.require(!verify::comm_audit(*inst, tr).pass(), "comm audit fails");

    verify::CorrectnessOptions tamper;
    tamper.tamper = [](std::size_t server, foasc::RingVec& a) {
      if (server == 0) a.entries.back() ^= 1;
    };
    const auto c = verify::exhaustive_correctness(*inst, tamper);
    o.require(!c.pass(), "tampered answers detected");

    unsigned silent = 0, runs = 0;
    sim::InprocessOptions mut;
    mut.assert_correct = true;
    mut.mutate_answers = [](std::vector<foasc::RingVec>& a) { a[1].entries[0] ^= 1; };
    for (u64 mask = 0; mask < 256; mask += 17) {
      for (std::size_t i = 0; i < 8; ++i, ++runs) {
        try {
          (void)sim::run_inprocess(inst, Database::from_mask(8, mask), i, mask + i, mut);
          ++silent;
        } catch (const PirError&) {
        }
      }
    }
    o.require(silent == 0, "mutated answers never pass");
    o.note << " tampered failures " << c.failure_count << "/" << c.round_trips << ", mutated runs caught "
           << runs - silent << "/" << runs;
  });

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
