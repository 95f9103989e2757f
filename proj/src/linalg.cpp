#include "ddc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ddc {

Vec::Vec(const Field& f, std::vector<uint8_t> values) : field_(&f), v_(std::move(values)) {
  for (uint8_t x : v_)
    if (x >= f.q()) throw std::invalid_argument("vector entry out of field range");
}

void Vec::set(std::size_t i, uint8_t value) {
  if (value >= field_->q()) throw std::invalid_argument("vector entry out of field range");
  v_[i] = value;
}

std::size_t Vec::weight() const {
  std::size_t w = 0;
  for (uint8_t x : v_) w += x != 0;
  return w;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, uint8_t value) {
  if (value >= field_->q()) throw std::invalid_argument("matrix entry out of field range");
  a_[r * cols_ + c] = value;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(*field_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.set(c, (*this)(r, c));
  return v;
}

Matrix rref_in_column_order(const Matrix& m, const std::vector<std::size_t>& order,
                            std::vector<std::size_t>* pivot_cols) {
  if (order.size() != m.cols()) throw std::invalid_argument("column order must be a permutation of all columns");
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col : order) {
    if (col >= m.cols()) throw std::invalid_argument("column index out of range");
    if (next_row == r.rows()) break;
    std::size_t pivot_row = next_row;
    while (pivot_row < r.rows() && r(pivot_row, col) == 0) ++pivot_row;
    if (pivot_row == r.rows()) continue;
    if (pivot_row != next_row) {
      for (std::size_t c = 0; c < r.cols(); ++c) {
        uint8_t tmp = r(next_row, c);
        r.set(next_row, c, r(pivot_row, c));
        r.set(pivot_row, c, tmp);
      }
    }
    uint8_t scale = f.inv(r(next_row, col));
    if (scale != 1)
      for (std::size_t c = 0; c < r.cols(); ++c) r.set(next_row, c, f.mul(scale, r(next_row, c)));
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == next_row) continue;
      uint8_t factor = r(row, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < r.cols(); ++c)
        r.set(row, c, f.sub(r(row, c), f.mul(factor, r(next_row, c))));
    }
    pivots.push_back(col);
    ++next_row;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return r;
}

Matrix rref(const Matrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref_in_column_order(m, order);
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> pivots;
  rref_in_column_order(m, order, &pivots);
  return pivots.size();
}

FieldElement inner_product(const Vec& u, const Vec& v, bool hermitian) {
  if (u.field() != v.field()) throw std::invalid_argument("inner product requires a common field");
  if (u.size() != v.size()) throw std::invalid_argument("inner product requires equal lengths");
  const Field& f = u.field();
  if (hermitian && f.kind() != Field::Kind::gf4)
    throw std::invalid_argument("hermitian inner product is only defined over GF(4)");
  uint8_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    uint8_t rhs = hermitian ? f.conj(v[i]) : v[i];
    acc = f.add(acc, f.mul(u[i], rhs));
  }
  return {&f, acc};
}

Matrix dual_basis(const Matrix& g) {
  const Field& f = g.field();
  std::vector<std::size_t> order(g.cols());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> pivots;
  Matrix r = rref_in_column_order(g, order, &pivots);
  if (pivots.size() != g.rows()) throw std::domain_error("dual_basis requires full row rank");

  std::vector<char> is_pivot(g.cols(), 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < g.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix d(f, free_cols.size(), g.cols());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    d.set(j, free_cols[j], 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) d.set(j, pivots[i], f.neg(r(i, free_cols[j])));
  }
  return d;
}

std::string to_text(const Matrix& m) {
  std::ostringstream out;
  out << "q=" << m.field().q() << " rows=" << m.rows() << " cols=" << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.field().symbol(m(r, c));
    }
    out << "\n";
  }
  return out.str();
}

Matrix matrix_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("empty matrix text");
  int q = 0;
  std::size_t rows = 0, cols = 0;
  if (std::sscanf(header.c_str(), "q=%d rows=%zu cols=%zu", &q, &rows, &cols) != 3)
    throw std::invalid_argument("bad matrix header: " + header);
  const Field& f = Field::of(q);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("matrix text has too few rows");
    std::istringstream ls(line);
    std::string tok;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(ls >> tok)) throw std::invalid_argument("matrix row has too few entries");
      m.set(r, c, f.parse_symbol(tok));
    }
    if (ls >> tok) throw std::invalid_argument("matrix row has too many entries");
  }
  return m;
}

}  // namespace ddc
