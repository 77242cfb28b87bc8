#ifndef LPP_BITMAT_HPP_
#define LPP_BITMAT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lpp {

// Square (0,1)-matrix stored twice: as packed row bit vectors and as the
// transposed column mirror. Keeping both orientations lets bool_product
// probe "row of x AND column of y" with straight word-wise ANDs and no
// transposition. set() updates both mirrors, so they never diverge.
// Treat instances as immutable once built.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);
  static BitMatrix ones(std::size_t n);

  std::size_t dim() const { return n_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j);

  std::span<const std::uint64_t> row_bits(std::size_t i) const;
  std::span<const std::uint64_t> col_bits(std::size_t j) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;            // 64-bit words per row/column line
  std::vector<std::uint64_t> rows_;  // n_ lines of words_ words each
  std::vector<std::uint64_t> cols_;  // transposed mirror of rows_
};

// Entrywise reduction of a nonnegative integer matrix to 0/1.
BitMatrix booleanize(const std::vector<std::vector<std::uint64_t>>& m);

// Booleanized product: result(i,j) = 1 iff row i of x and column j of y
// share a set bit.
BitMatrix bool_product(const BitMatrix& x, const BitMatrix& y);

// Booleanized power by repeated squaring; k = 0 yields the identity.
BitMatrix bool_power(const BitMatrix& a, unsigned k);

bool is_all_ones(const BitMatrix& x);
bool is_zero(const BitMatrix& x);

}  // namespace lpp

#endif  // LPP_BITMAT_HPP_
