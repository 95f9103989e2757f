#include "ddc/gf.hpp"

#include <stdexcept>

namespace ddc {
namespace {

bool is_supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7; }

// GF(4) codes are bit pairs over GF(2); multiply as polynomials mod x^2+x+1.
uint8_t gf4_mul(uint8_t a, uint8_t b) {
  uint8_t prod = 0;  // coefficients of 1, x, x^2
  uint8_t wide[3] = {0, 0, 0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (((a >> i) & 1) && ((b >> j) & 1)) wide[i + j] ^= 1;
  // reduce: x^2 = x + 1
  prod = static_cast<uint8_t>((wide[0] ^ wide[2]) | ((wide[1] ^ wide[2]) << 1));
  return prod;
}

}  // namespace

Field::Field(int q) : q_(q) {
  if (q == 4) {
    kind_ = Kind::gf4;
    char_ = 2;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        add_[a][b] = static_cast<uint8_t>(a ^ b);
        mul_[a][b] = gf4_mul(static_cast<uint8_t>(a), static_cast<uint8_t>(b));
      }
      neg_[a] = static_cast<uint8_t>(a);
      conj_[a] = gf4_mul(static_cast<uint8_t>(a), static_cast<uint8_t>(a));
    }
  } else {
    kind_ = Kind::prime;
    char_ = q;
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_[a][b] = static_cast<uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<uint8_t>((a * b) % q);
      }
      neg_[a] = static_cast<uint8_t>((q - a) % q);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a][b] == 1) inv_[a] = static_cast<uint8_t>(b);
}

const Field& Field::of(int q) {
  if (!is_supported(q)) throw std::invalid_argument("unsupported field order " + std::to_string(q));
  static const Field f2(2), f3(3), f4(4), f5(5), f7(7);
  switch (q) {
    case 2: return f2;
    case 3: return f3;
    case 4: return f4;
    case 5: return f5;
    default: return f7;
  }
}

uint8_t Field::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return inv_[a];
}

uint8_t Field::conj(uint8_t a) const {
  if (kind_ != Kind::gf4) throw std::invalid_argument("conjugation is only defined over GF(4)");
  return conj_[a];
}

uint8_t Field::pow(uint8_t a, unsigned long e) const {
  uint8_t acc = 1;
  for (unsigned long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

std::string Field::symbol(uint8_t a) const {
  if (a >= q_) throw std::invalid_argument("symbol code out of range");
  if (kind_ == Kind::gf4) {
    static const char* names[4] = {"0", "1", "w", "w2"};
    return names[a];
  }
  return std::to_string(static_cast<int>(a));
}

uint8_t Field::parse_symbol(std::string_view s) const {
  if (kind_ == Kind::gf4) {
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "w") return 2;
    if (s == "w2") return 3;
    throw std::invalid_argument("bad GF(4) symbol '" + std::string(s) + "' (expected 0, 1, w, w2)");
  }
  if (s.size() == 1 && s[0] >= '0' && s[0] < '0' + q_) return static_cast<uint8_t>(s[0] - '0');
  throw std::invalid_argument("bad GF(" + std::to_string(q_) + ") symbol '" + std::string(s) + "'");
}

FieldElement element(const Field& f, uint8_t value) {
  if (value >= f.q()) throw std::invalid_argument("element value out of range for GF(" + std::to_string(f.q()) + ")");
  return {&f, value};
}

namespace {
void require_same_field(FieldElement a, FieldElement b) {
  if (a.field == nullptr || b.field == nullptr || *a.field != *b.field)
    throw std::invalid_argument("field elements belong to different fields");
}
}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return {a.field, a.field->add(a.value, b.value)};
}

FieldElement sub(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return {a.field, a.field->sub(a.value, b.value)};
}

FieldElement mul(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return {a.field, a.field->mul(a.value, b.value)};
}

FieldElement neg(FieldElement a) { return {a.field, a.field->neg(a.value)}; }

FieldElement inv(FieldElement a) { return {a.field, a.field->inv(a.value)}; }

FieldElement conjugate(FieldElement a) { return {a.field, a.field->conj(a.value)}; }

bool operator==(FieldElement a, FieldElement b) {
  require_same_field(a, b);
  return a.value == b.value;
}

bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

}  // namespace ddc
