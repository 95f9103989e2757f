#include <doctest.h>

#include <stdexcept>
#include <string>

#include "ddc/gf.hpp"

using namespace ddc;

TEST_SUITE("gf") {
  TEST_CASE("field axioms hold exhaustively in every supported field") {
    for (int q : {2, 3, 4, 5, 7}) {
      CAPTURE(q);
      const Field& f = Field::of(q);
      CHECK(f.q() == q);
      CHECK(f.characteristic() == (q == 4 ? 2 : q));
      for (int a = 0; a < q; ++a) {
        auto ua = static_cast<uint8_t>(a);
        CHECK(f.add(ua, 0) == ua);
        CHECK(f.mul(ua, 1) == ua);
        CHECK(f.mul(ua, 0) == 0);
        CHECK(f.add(ua, f.neg(ua)) == 0);
        if (a != 0) {
          CHECK(f.mul(ua, f.inv(ua)) == 1);
          CHECK(f.pow(ua, static_cast<unsigned long>(q - 1)) == 1);
        }
        for (int b = 0; b < q; ++b) {
          auto ub = static_cast<uint8_t>(b);
          CHECK(f.add(ua, ub) == f.add(ub, ua));
          CHECK(f.mul(ua, ub) == f.mul(ub, ua));
          CHECK(f.add(f.sub(ua, ub), ub) == ua);
          for (int c = 0; c < q; ++c) {
            auto uc = static_cast<uint8_t>(c);
            CHECK(f.add(f.add(ua, ub), uc) == f.add(ua, f.add(ub, uc)));
            CHECK(f.mul(f.mul(ua, ub), uc) == f.mul(ua, f.mul(ub, uc)));
            CHECK(f.mul(ua, f.add(ub, uc)) == f.add(f.mul(ua, ub), f.mul(ua, uc)));
          }
        }
      }
    }
  }

  TEST_CASE("GF(4) structure: w^2 = w + 1, conjugation is the Frobenius") {
    const Field& f = Field::of(4);
    // codes: 0, 1, w = 2, w2 = 3
    CHECK(f.mul(2, 2) == 3);   // w * w = w^2
    CHECK(f.mul(2, 3) == 1);   // w * w^2 = 1
    CHECK(f.mul(3, 3) == 2);   // w^2 * w^2 = w
    CHECK(f.add(2, 3) == 1);   // w + w^2 = 1
    CHECK(f.add(1, 2) == 3);   // 1 + w = w^2
    CHECK(f.conj(0) == 0);
    CHECK(f.conj(1) == 1);
    CHECK(f.conj(2) == 3);
    CHECK(f.conj(3) == 2);
    // Addition has characteristic 2.
    for (int a = 0; a < 4; ++a) {
      CHECK(f.add(static_cast<uint8_t>(a), static_cast<uint8_t>(a)) == 0);
      CHECK(f.neg(static_cast<uint8_t>(a)) == a);
    }
  }

  TEST_CASE("symbols round-trip and reject junk") {
    for (int q : {2, 3, 5, 7}) {
      const Field& f = Field::of(q);
      for (int a = 0; a < q; ++a) {
        auto ua = static_cast<uint8_t>(a);
        CHECK(f.symbol(ua) == std::to_string(a));
        CHECK(f.parse_symbol(f.symbol(ua)) == ua);
      }
      CHECK_THROWS_AS((void)f.parse_symbol(std::to_string(q)), std::invalid_argument);
      CHECK_THROWS_AS((void)f.parse_symbol("w"), std::invalid_argument);
    }
    const Field& f4 = Field::of(4);
    CHECK(f4.symbol(2) == "w");
    CHECK(f4.symbol(3) == "w2");
    for (int a = 0; a < 4; ++a)
      CHECK(f4.parse_symbol(f4.symbol(static_cast<uint8_t>(a))) == a);
    CHECK_THROWS_AS((void)f4.parse_symbol("2"), std::invalid_argument);
    CHECK_THROWS_AS((void)f4.parse_symbol("w3"), std::invalid_argument);
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS((void)Field::of(6), std::invalid_argument);
    CHECK_THROWS_AS((void)Field::of(4).inv(0), std::domain_error);
    CHECK_THROWS_AS((void)Field::of(3).conj(1), std::invalid_argument);
    CHECK_THROWS_AS((void)element(Field::of(3), 3), std::invalid_argument);
  }

  TEST_CASE("tagged elements refuse cross-field arithmetic") {
    FieldElement a = element(Field::of(2), 1);
    FieldElement b = element(Field::of(3), 1);
    CHECK_THROWS_AS((void)add(a, b), std::invalid_argument);
    CHECK(add(a, a).value == 0);
    CHECK(mul(element(Field::of(4), 2), element(Field::of(4), 2)).value == 3);
    CHECK(conjugate(element(Field::of(4), 2)).value == 3);
  }
}
