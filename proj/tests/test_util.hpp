#pragma once

// Shared helpers for the unit and acceptance tests.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ddc/codeprops.hpp"
#include "ddc/ddc_code.hpp"
#include "ddc/gf.hpp"
#include "ddc/splitting.hpp"

namespace ddc::testutil {

inline CirculantSpec make_spec(int q, long n, std::vector<long> s1, int r, int s, int t,
                               std::optional<long> base = std::nullopt) {
  const Field& f = Field::of(q);
  Splitting sp = verify_splitting(n, s1, sorted_complement(n, s1));
  sp.base = base;
  CirculantSpec spec;
  spec.field = &f;
  spec.splitting = std::move(sp);
  spec.r = element(f, static_cast<uint8_t>(r));
  spec.s = element(f, static_cast<uint8_t>(s));
  spec.t = element(f, static_cast<uint8_t>(t));
  return spec;
}

inline DdcCode make_pure(int q, long n, std::vector<long> s1, int r, int s, int t,
                         std::optional<long> base = std::nullopt) {
  return build_pure(make_spec(q, n, std::move(s1), r, s, t, base));
}

inline DdcCode make_bordered(int q, long n, std::vector<long> s1, int alpha, int beta, int gamma,
                             int r, int s, int t, std::optional<long> base = std::nullopt) {
  CirculantSpec spec = make_spec(q, n, std::move(s1), r, s, t, base);
  const Field& f = *spec.field;
  BorderSpec border{element(f, static_cast<uint8_t>(alpha)), element(f, static_cast<uint8_t>(beta)),
                    element(f, static_cast<uint8_t>(gamma))};
  return build_bordered(spec, border);
}

// q^k as a saturating 64-bit value (so budget comparisons are safe).
inline uint64_t message_count(int q, long k) {
  uint64_t total = 1;
  for (long i = 0; i < k; ++i) {
    if (total > (uint64_t{1} << 62) / static_cast<uint64_t>(q)) return ~uint64_t{0};
    total *= static_cast<uint64_t>(q);
  }
  return total;
}

// Uniformly draws a base-4 DDC code whose message space fits in `cap`
// (so exhaustive analysis stays cheap). Splitting, parameters and kind are
// all randomized; the construction is always valid.
inline DdcCode random_ddc(std::mt19937& rng, uint64_t cap = uint64_t{1} << 20) {
  struct Combo {
    int q;
    long n;
    CodeKind kind;
  };
  static const std::vector<Combo> combos = [] {
    std::vector<Combo> out;
    for (int q : {2, 3, 4, 5, 7})
      for (long n = 3; n <= 19; n += 2)
        for (CodeKind kind : {CodeKind::pure, CodeKind::bordered}) {
          long dim = kind == CodeKind::pure ? n : n + 1;
          if (message_count(q, dim) <= (uint64_t{1} << 20)) out.push_back({q, n, kind});
        }
    return out;
  }();

  for (;;) {
    const Combo& combo = combos[std::uniform_int_distribution<std::size_t>(
        0, combos.size() - 1)(rng)];
    long dim = combo.kind == CodeKind::pure ? combo.n : combo.n + 1;
    if (message_count(combo.q, dim) > cap) continue;
    std::vector<Splitting> sps = enumerate_coset_splittings(combo.n, 4);
    const Splitting& sp =
        sps[std::uniform_int_distribution<std::size_t>(0, sps.size() - 1)(rng)];
    const Field& f = Field::of(combo.q);
    std::uniform_int_distribution<int> elem(0, combo.q - 1);
    CirculantSpec spec;
    spec.field = &f;
    spec.splitting = sp;
    spec.r = element(f, static_cast<uint8_t>(elem(rng)));
    spec.s = element(f, static_cast<uint8_t>(elem(rng)));
    spec.t = element(f, static_cast<uint8_t>(elem(rng)));
    if (combo.kind == CodeKind::pure) return build_pure(spec);
    BorderSpec border{element(f, static_cast<uint8_t>(elem(rng))),
                      element(f, static_cast<uint8_t>(elem(rng))),
                      element(f, static_cast<uint8_t>(elem(rng)))};
    return build_bordered(spec, border);
  }
}

}  // namespace ddc::testutil
