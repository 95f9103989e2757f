#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ddc {

// Arithmetic for the small fields used by the double circulant constructions:
// GF(2), GF(3), GF(5), GF(7) as prime residues, and GF(4) = GF(2)[x]/(x^2+x+1)
// with symbols 0, 1, w, w2 coded as 0, 1, 2, 3 (addition = XOR of bit pairs).
// All operations are table lookups on uint8_t codes in [0, q).
class Field {
 public:
  enum class Kind { prime, gf4 };

  static const Field& of(int q);  // q in {2,3,4,5,7}; throws otherwise

  int q() const { return q_; }
  int characteristic() const { return char_; }
  Kind kind() const { return kind_; }

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;   // throws std::domain_error on 0
  uint8_t conj(uint8_t a) const;  // Frobenius a^2; GF(4) only
  uint8_t pow(uint8_t a, unsigned long e) const;

  std::string symbol(uint8_t a) const;
  uint8_t parse_symbol(std::string_view s) const;

  bool operator==(const Field& o) const { return this == &o; }
  bool operator!=(const Field& o) const { return this != &o; }

 private:
  explicit Field(int q);

  int q_ = 0;
  int char_ = 0;
  Kind kind_ = Kind::prime;
  uint8_t add_[7][7] = {};
  uint8_t mul_[7][7] = {};
  uint8_t neg_[7] = {};
  uint8_t inv_[7] = {};
  uint8_t conj_[7] = {};
};

// An element tagged with its field for API-level checks. Hot loops work on raw
// uint8_t codes against a Field instead.
struct FieldElement {
  const Field* field = nullptr;
  uint8_t value = 0;
};

FieldElement element(const Field& f, uint8_t value);  // validates value < q
FieldElement add(FieldElement a, FieldElement b);
FieldElement sub(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);
FieldElement conjugate(FieldElement a);
bool operator==(FieldElement a, FieldElement b);
bool operator!=(FieldElement a, FieldElement b);

}  // namespace ddc
