#ifndef HOPFCYC_SPARSE_HPP
#define HOPFCYC_SPARSE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Sorted (index, value) pairs with no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  /// Accepts unsorted entries with duplicates; sums them and drops zeros.
  static SparseVector from_entries(std::vector<Entry> entries);
  static SparseVector unit(std::size_t index, Scalar value = Scalar(1));

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  /// Value at index (zero when absent).
  Scalar at(std::size_t index) const;

  /// this += factor * other
  void axpy(const Scalar& factor, const SparseVector& other);
  SparseVector scaled(const Scalar& factor) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  friend class VectorAccumulator;
  std::vector<Entry> entries_;
};

/// Accumulates entries for a SparseVector; cheaper than repeated axpy.
class VectorAccumulator {
 public:
  void add(std::size_t index, const Scalar& value);
  SparseVector finish();

 private:
  std::vector<SparseVector::Entry> pending_;
};

/// Exact sparse matrix, stored by columns.
///
/// Column j is the image of the j-th source basis vector, so operator
/// assembly fills one column per basis tuple.
class SparseMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t nrows, std::size_t ncols);
  SparseMatrix(std::size_t nrows, std::vector<SparseVector> columns);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix zero(std::size_t nrows, std::size_t ncols) { return {nrows, ncols}; }
  static SparseMatrix from_triplets(std::size_t nrows, std::size_t ncols,
                                    std::vector<Triplet> triplets);
  /// Row-major dense input; zeros are dropped.
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Scalar at(std::size_t row, std::size_t col) const { return columns_.at(col).at(row); }
  void set_column(std::size_t j, SparseVector v);

  /// Adds block into this matrix with its (0,0) entry at (row_offset, col_offset).
  void add_block(const SparseMatrix& block, std::size_t row_offset, std::size_t col_offset);

  SparseMatrix transpose() const;
  SparseMatrix scaled(const Scalar& factor) const;
  SparseVector apply(const SparseVector& v) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  SparseMatrix& operator+=(const SparseMatrix& rhs);
  SparseMatrix& operator-=(const SparseMatrix& rhs);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  /// First column where the two matrices differ, if any.
  friend std::optional<std::size_t> first_difference(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t nrows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Product a*b. Columns are computed in parallel when OpenMP is enabled.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
/// Single-threaded reference product.
SparseMatrix multiply_serial(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
/// m^k for square m.
SparseMatrix power(const SparseMatrix& m, unsigned k);

struct EliminationOptions {
  /// Matrices with at most this many columns are reduced densely.
  std::size_t dense_column_threshold = 512;
};

/// Exact rank.
std::size_t rank(const SparseMatrix& m, const EliminationOptions& options = {});
/// Exact basis of ker(m); each vector v satisfies m*v == 0.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m,
                                       const EliminationOptions& options = {});
/// Columns of the returned matrix form a basis of ker(m).
SparseMatrix kernel_matrix(const SparseMatrix& m, const EliminationOptions& options = {});

namespace detail {
std::size_t rank_sparse(const SparseMatrix& m);
std::size_t rank_dense(const SparseMatrix& m);
std::vector<SparseVector> kernel_sparse(const SparseMatrix& m);
std::vector<SparseVector> kernel_dense(const SparseMatrix& m);
}  // namespace detail

std::string to_string(const SparseVector& v);

}  // namespace hopfcyc

#endif  // HOPFCYC_SPARSE_HPP
