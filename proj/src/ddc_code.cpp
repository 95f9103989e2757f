#include "ddc/ddc_code.hpp"

#include <stdexcept>

namespace ddc {
namespace {

void require_valid(const CirculantSpec& c) {
  if (!c.field) throw std::invalid_argument("circulant spec has no field");
  if (c.r.field != c.field || c.s.field != c.field || c.t.field != c.field)
    throw std::invalid_argument("r, s, t must belong to the spec's field");
  if (c.splitting.n < 3 || c.splitting.n % 2 == 0)
    throw std::invalid_argument("splitting length must be odd and >= 3");
}

void require_valid(const CirculantSpec& c, const BorderSpec& b) {
  require_valid(c);
  if (b.alpha.field != c.field || b.beta.field != c.field || b.gamma.field != c.field)
    throw std::invalid_argument("alpha, beta, gamma must belong to the spec's field");
}

}  // namespace

Vec circulant_row(const CirculantSpec& c) {
  require_valid(c);
  const long n = c.splitting.n;
  Vec row(*c.field, static_cast<std::size_t>(n));
  row.set(0, c.r.value);
  for (long i : c.splitting.s1) row.set(static_cast<std::size_t>(i), c.s.value);
  for (long i : c.splitting.s2) row.set(static_cast<std::size_t>(i), c.t.value);
  return row;
}

Matrix circulant_matrix(const Vec& row) {
  const std::size_t n = row.size();
  Matrix m(row.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, row[(j + n - i) % n]);
  return m;
}

DdcCode build_pure(const CirculantSpec& c) {
  require_valid(c);
  const std::size_t n = static_cast<std::size_t>(c.splitting.n);
  Matrix d = circulant_matrix(circulant_row(c));
  Matrix g(*c.field, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i, i, 1);
    for (std::size_t j = 0; j < n; ++j) g.set(i, n + j, d(i, j));
  }
  return {CodeKind::pure, c, std::nullopt, std::move(g)};
}

DdcCode build_bordered(const CirculantSpec& c, const BorderSpec& b) {
  require_valid(c, b);
  const std::size_t n = static_cast<std::size_t>(c.splitting.n);
  Matrix d = circulant_matrix(circulant_row(c));
  Matrix g(*c.field, n + 1, 2 * n + 2);
  g.set(0, 0, 1);
  g.set(0, n + 1, b.alpha.value);
  for (std::size_t j = 0; j < n; ++j) g.set(0, n + 2 + j, b.beta.value);
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i + 1, i + 1, 1);
    g.set(i + 1, n + 1, b.gamma.value);
    for (std::size_t j = 0; j < n; ++j) g.set(i + 1, n + 2 + j, d(i, j));
  }
  return {CodeKind::bordered, c, b, std::move(g)};
}

}  // namespace ddc
