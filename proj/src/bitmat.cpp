#include "lpp/bitmat.hpp"

#include "lpp/errors.hpp"

namespace lpp {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

BitMatrix::BitMatrix(std::size_t n)
    : n_(n),
      words_(words_for(n)),
      rows_(n * words_, 0),
      cols_(n * words_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::ones(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  return m;
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
  return (rows_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1u;
}

void BitMatrix::set(std::size_t i, std::size_t j) {
  rows_[i * words_ + j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
  cols_[j * words_ + i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

std::span<const std::uint64_t> BitMatrix::row_bits(std::size_t i) const {
  return {rows_.data() + i * words_, words_};
}

std::span<const std::uint64_t> BitMatrix::col_bits(std::size_t j) const {
  return {cols_.data() + j * words_, words_};
}

BitMatrix booleanize(const std::vector<std::vector<std::uint64_t>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("booleanize requires a square matrix");
  BitMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != 0) b.set(i, j);
  return b;
}

BitMatrix bool_product(const BitMatrix& x, const BitMatrix& y) {
  if (x.dim() != y.dim())
    throw DimensionError("bool_product operands must have equal dimension");
  const std::size_t n = x.dim();
  BitMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = x.row_bits(i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = y.col_bits(j);
      for (std::size_t w = 0; w < row.size(); ++w) {
        if (row[w] & col[w]) {
          r.set(i, j);
          break;
        }
      }
    }
  }
  return r;
}

BitMatrix bool_power(const BitMatrix& a, unsigned k) {
  BitMatrix result = BitMatrix::identity(a.dim());
  BitMatrix base = a;
  while (k > 0) {
    if (k & 1u) result = bool_product(result, base);
    k >>= 1u;
    if (k > 0) base = bool_product(base, base);
  }
  return result;
}

bool is_all_ones(const BitMatrix& x) {
  const std::size_t n = x.dim();
  const std::size_t full = n / kWordBits;
  const std::size_t rem = n % kWordBits;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = x.row_bits(i);
    for (std::size_t w = 0; w < full; ++w)
      if (row[w] != ~std::uint64_t{0}) return false;
    if (rem && row[full] != ((std::uint64_t{1} << rem) - 1)) return false;
  }
  return true;
}

bool is_zero(const BitMatrix& x) {
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::uint64_t w : x.row_bits(i))
      if (w != 0) return false;
  return true;
}

}  // namespace lpp
