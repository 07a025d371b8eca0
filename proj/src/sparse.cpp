#include "hopfcyc/sparse.hpp"

#include <algorithm>

namespace hopfcyc {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  VectorAccumulator acc;
  for (auto& [i, v] : entries) acc.add(i, v);
  return acc.finish();
}

SparseVector SparseVector::unit(std::size_t index, Scalar value) {
  SparseVector v;
  if (!value.is_zero()) {
    v.entries_.emplace_back(index, std::move(value));
  }
  return v;
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    return it->second;
  }
  return Scalar();
}

void SparseVector::axpy(const Scalar& factor, const SparseVector& other) {
  if (factor.is_zero() || other.empty()) {
    return;
  }
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar sum = std::move(a->second);
      sum += factor * b->second;
      if (!sum.is_zero()) {
        merged.emplace_back(a->first, std::move(sum));
      }
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Scalar& factor) const {
  SparseVector out;
  if (factor.is_zero()) {
    return out;
  }
  out.entries_.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.entries_.emplace_back(i, v * factor);
  return out;
}

void VectorAccumulator::add(std::size_t index, const Scalar& value) {
  if (!value.is_zero()) {
    pending_.emplace_back(index, value);
  }
}

SparseVector VectorAccumulator::finish() {
  std::stable_sort(pending_.begin(), pending_.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SparseVector::Entry> merged;
  for (auto& entry : pending_) {
    if (!merged.empty() && merged.back().first == entry.first) {
      merged.back().second += entry.second;
    } else {
      if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
      merged.push_back(std::move(entry));
    }
  }
  if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
  pending_.clear();
  SparseVector v;
  v.entries_ = std::move(merged);
  return v;
}

SparseMatrix::SparseMatrix(std::size_t nrows, std::size_t ncols) : nrows_(nrows), columns_(ncols) {}

SparseMatrix::SparseMatrix(std::size_t nrows, std::vector<SparseVector> columns)
    : nrows_(nrows), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (!c.empty() && c.entries().back().first >= nrows_) {
      throw DimensionMismatch("column entry outside row range");
    }
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t nrows, std::size_t ncols,
                                         std::vector<Triplet> triplets) {
  std::vector<VectorAccumulator> acc(ncols);
  for (auto& t : triplets) {
    if (t.row >= nrows || t.col >= ncols) {
      throw DimensionMismatch("triplet (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                              ") outside " + std::to_string(nrows) + "x" + std::to_string(ncols));
    }
    acc[t.col].add(t.row, t.value);
  }
  SparseMatrix m(nrows, ncols);
  for (std::size_t j = 0; j < ncols; ++j) m.columns_[j] = acc[j].finish();
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t const nrows = rows.size();
  std::size_t const ncols = nrows == 0 ? 0 : rows[0].size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (rows[i].size() != ncols) {
      throw DimensionMismatch("ragged dense matrix");
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!rows[i][j].is_zero()) t.push_back({i, j, rows[i][j]});
    }
  }
  return from_triplets(nrows, ncols, std::move(t));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
  if (!v.empty() && v.entries().back().first >= nrows_) {
    throw DimensionMismatch("column entry outside row range");
  }
  columns_.at(j) = std::move(v);
}

void SparseMatrix::add_block(const SparseMatrix& block, std::size_t row_offset,
                             std::size_t col_offset) {
  if (row_offset + block.rows() > nrows_ || col_offset + block.cols() > cols()) {
    throw DimensionMismatch("block does not fit");
  }
  for (std::size_t j = 0; j < block.cols(); ++j) {
    std::vector<SparseVector::Entry> shifted;
    for (const auto& [i, v] : block.column(j)) shifted.emplace_back(i + row_offset, v);
    columns_[col_offset + j].axpy(Scalar(1), SparseVector::from_entries(std::move(shifted)));
  }
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseMatrix::Triplet> t;
  t.reserve(nnz());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) t.push_back({j, i, v});
  }
  return from_triplets(cols(), nrows_, std::move(t));
}

SparseMatrix SparseMatrix::scaled(const Scalar& factor) const {
  SparseMatrix out(nrows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j] = columns_[j].scaled(factor);
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) {
    if (j >= cols()) {
      throw DimensionMismatch("vector index outside column range");
    }
    out.axpy(x, columns_[j]);
  }
  return out;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> out(nrows_, std::vector<Scalar>(cols()));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [i, v] : columns_[j]) out[i][j] = v;
  }
  return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& rhs) {
  if (rhs.rows() != rows() || rhs.cols() != cols()) {
    throw DimensionMismatch("matrix sum shape mismatch");
  }
  for (std::size_t j = 0; j < cols(); ++j) columns_[j].axpy(Scalar(1), rhs.columns_[j]);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& rhs) {
  if (rhs.rows() != rows() || rhs.cols() != cols()) {
    throw DimensionMismatch("matrix difference shape mismatch");
  }
  for (std::size_t j = 0; j < cols(); ++j) columns_[j].axpy(Scalar(-1), rhs.columns_[j]);
  return *this;
}

std::optional<std::size_t> first_difference(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("comparing matrices of different shapes");
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!(a.columns_[j] == b.columns_[j])) {
      return j;
    }
  }
  return std::nullopt;
}

namespace {

SparseVector product_column(const SparseMatrix& a, const SparseVector& bcol) {
  VectorAccumulator acc;
  for (const auto& [k, x] : bcol) {
    for (const auto& [i, y] : a.column(k)) acc.add(i, y * x);
  }
  return acc.finish();
}

void check_product_shape(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("product of " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_product_shape(a, b);
  std::vector<SparseVector> cols(b.cols());
  auto const n = static_cast<std::ptrdiff_t>(b.cols());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    cols[j] = product_column(a, b.column(j));
  }
  return {a.rows(), std::move(cols)};
}

SparseMatrix multiply_serial(const SparseMatrix& a, const SparseMatrix& b) {
  check_product_shape(a, b);
  std::vector<SparseVector> cols(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) cols[j] = product_column(a, b.column(j));
  return {a.rows(), std::move(cols)};
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) { return multiply(a, b); }

SparseMatrix power(const SparseMatrix& m, unsigned k) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("power of a non-square matrix");
  }
  SparseMatrix out = SparseMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = multiply(m, out);
  return out;
}

namespace detail {

namespace {

// Incremental row echelon form over sparse vectors. Vectors are reduced in
// the order given; the first vector whose leading index is new becomes the
// pivot for that index.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t length) : pivots_(length) {}

  bool insert(SparseVector v) {
    while (!v.empty()) {
      auto const& [lead, coef] = v.entries().front();
      auto& pivot = pivots_[lead];
      if (!pivot) {
        pivot = v.scaled(coef.inverse());
        ++rank_;
        return true;
      }
      Scalar const factor = -coef;
      v.axpy(factor, *pivot);
    }
    return false;
  }

  std::size_t rank() const { return rank_; }
  std::vector<std::optional<SparseVector>>& pivots() { return pivots_; }

 private:
  std::vector<std::optional<SparseVector>> pivots_;
  std::size_t rank_ = 0;
};

std::vector<std::vector<Scalar>> dense_rows(const SparseMatrix& m) { return m.to_dense(); }

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> dense_rref(std::vector<std::vector<Scalar>>& a, std::size_t ncols,
                                    bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) {
      continue;
    }
    std::swap(a[p], a[r]);
    Scalar const inv = a[r][c].inverse();
    for (std::size_t k = c; k < ncols; ++k) {
      if (!a[r][k].is_zero()) a[r][k] *= inv;
    }
    for (std::size_t i = reduce_above ? 0 : r + 1; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) {
        continue;
      }
      Scalar const f = a[i][c];
      for (std::size_t k = c; k < ncols; ++k) {
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_sparse(const SparseMatrix& m) {
  // Reduce whichever family (columns or rows) has fewer members.
  if (m.cols() <= m.rows()) {
    SparseEchelon ech(m.rows());
    for (const auto& c : m.columns()) ech.insert(c);
    return ech.rank();
  }
  SparseMatrix const t = m.transpose();
  SparseEchelon ech(t.rows());
  for (const auto& c : t.columns()) ech.insert(c);
  return ech.rank();
}

std::size_t rank_dense(const SparseMatrix& m) {
  auto a = dense_rows(m);
  return dense_rref(a, m.cols(), false).size();
}

std::vector<SparseVector> kernel_sparse(const SparseMatrix& m) {
  SparseMatrix const rows = m.transpose();  // columns of `rows` are rows of m
  SparseEchelon ech(m.cols());
  for (const auto& r : rows.columns()) ech.insert(r);
  auto& piv = ech.pivots();
  // Back substitution to reduced form, highest pivot first.
  for (std::size_t l = piv.size(); l-- > 0;) {
    if (!piv[l]) {
      continue;
    }
    for (std::size_t k = 0; k < l; ++k) {
      if (!piv[k]) {
        continue;
      }
      Scalar const f = piv[k]->at(l);
      if (!f.is_zero()) {
        piv[k]->axpy(-f, *piv[l]);
      }
    }
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < piv.size(); ++f) {
    if (piv[f]) {
      continue;
    }
    std::vector<SparseVector::Entry> e;
    e.emplace_back(f, Scalar(1));
    for (std::size_t l = 0; l < piv.size(); ++l) {
      if (!piv[l]) {
        continue;
      }
      Scalar const x = piv[l]->at(f);
      if (!x.is_zero()) e.emplace_back(l, -x);
    }
    basis.push_back(SparseVector::from_entries(std::move(e)));
  }
  return basis;
}

std::vector<SparseVector> kernel_dense(const SparseMatrix& m) {
  auto a = dense_rows(m);
  auto const pivots = dense_rref(a, m.cols(), true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    std::vector<SparseVector::Entry> e;
    e.emplace_back(f, Scalar(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!a[r][f].is_zero()) e.emplace_back(pivots[r], -a[r][f]);
    }
    basis.push_back(SparseVector::from_entries(std::move(e)));
  }
  return basis;
}

}  // namespace detail

std::size_t rank(const SparseMatrix& m, const EliminationOptions& options) {
  if (m.rows() == 0 || m.cols() == 0) {
    return 0;
  }
  if (m.cols() <= options.dense_column_threshold &&
      m.rows() <= 4 * options.dense_column_threshold) {
    return detail::rank_dense(m);
  }
  return detail::rank_sparse(m);
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m, const EliminationOptions& options) {
  if (m.cols() <= options.dense_column_threshold &&
      m.rows() <= 4 * options.dense_column_threshold) {
    return detail::kernel_dense(m);
  }
  return detail::kernel_sparse(m);
}

SparseMatrix kernel_matrix(const SparseMatrix& m, const EliminationOptions& options) {
  return {m.cols(), kernel_basis(m, options)};
}

std::string to_string(const SparseVector& v) {
  if (v.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [i, x] : v) {
    if (!out.empty()) out += ", ";
    out += std::to_string(i) + ":" + x.to_string();
  }
  return "{" + out + "}";
}

}  // namespace hopfcyc
