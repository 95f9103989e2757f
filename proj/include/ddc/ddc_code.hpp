#pragma once

#include <optional>

#include "ddc/gf.hpp"
#include "ddc/linalg.hpp"
#include "ddc/splitting.hpp"

namespace ddc {

enum class CodeKind { pure, bordered };

// Parameters of the circulant block D_n(r,s,t,S1,S2): first row has a_0 = r,
// a_i = s for i in S1, a_i = t for i in S2.
struct CirculantSpec {
  const Field* field = nullptr;
  Splitting splitting;
  FieldElement r, s, t;
};

// Border parameters of B_n(alpha,beta,gamma,r,s,t,S1,S2).
struct BorderSpec {
  FieldElement alpha, beta, gamma;
};

// A duadic double circulant code together with the spec it was built from.
// The generator's left block is an identity, so rank always equals dimension.
struct DdcCode {
  CodeKind kind = CodeKind::pure;
  CirculantSpec circulant;
  std::optional<BorderSpec> border;  // engaged iff kind == bordered

  Matrix generator;

  long length() const { return static_cast<long>(generator.cols()); }
  long dimension() const { return static_cast<long>(generator.rows()); }
};

// First row of D_n per the a_0/a_i rule above.
Vec circulant_row(const CirculantSpec& c);

// Circulant matrix from its first row: row i is the first row cyclically
// right-shifted by i, i.e. entry (i, j) = row[(j - i) mod n].
Matrix circulant_matrix(const Vec& row);

// P_n(r,s,t,S1,S2) = (I | D_n): a [2n, n] code.
DdcCode build_pure(const CirculantSpec& c);

// B_n(alpha,beta,gamma,r,s,t,S1,S2): a [2n+2, n+1] code with block layout
//   row 0:      ( 1 | 0 ... 0 | alpha | beta ... beta )
//   row 1..n:   ( 0 |   I_n   | gamma |      D_n      )
DdcCode build_bordered(const CirculantSpec& c, const BorderSpec& b);

}  // namespace ddc
