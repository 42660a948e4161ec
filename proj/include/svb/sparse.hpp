#ifndef SVB_SPARSE_HPP
#define SVB_SPARSE_HPP

#include <utility>
#include <vector>

#include "svb/scalar.hpp"

namespace svb {

/// Sparse vector: (index, value) entries sorted by index, no stored zeros.
struct SparseVector {
  int dim = 0;
  std::vector<std::pair<int, Scalar>> entries;

  bool is_zero() const { return entries.empty(); }
  bool operator==(const SparseVector&) const = default;
};

/// Sparse row-major rational matrix; each row sorted by column, no zeros.
class SparseMatrix {
public:
  using Row = std::vector<std::pair<int, Scalar>>;

  SparseMatrix(int rows, int cols) : cols_(cols), rows_(rows) {}

  int rows() const { return int(rows_.size()); }
  int cols() const { return cols_; }
  const Row& row(int r) const { return rows_[size_t(r)]; }

  /// Sets an entry; row must be filled left to right (builder use).
  void push_entry(int r, int c, const Scalar& v);

  /// Replaces a whole row (entries sorted, nonzero).
  void set_row(int r, Row row) { rows_[size_t(r)] = std::move(row); }

  long entry_count() const;

  bool operator==(const SparseMatrix& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }

private:
  int cols_;
  std::vector<Row> rows_;

  struct FromRows {};
  SparseMatrix(int cols, std::vector<Row> rows)
      : cols_(cols), rows_(std::move(rows)) {}

  friend SparseMatrix matrix_from_rows(int cols, std::vector<Row> rows);
};

SparseMatrix matrix_from_rows(int cols, std::vector<SparseMatrix::Row> rows);

struct RrefResult {
  SparseMatrix matrix;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form over ℚ: pivots 1, rows sorted by pivot column,
/// zero rows dropped. RREF is unique, so the result is deterministic.
RrefResult rref(const SparseMatrix& m);

/// Canonical nullspace basis from the rref free-column parametrization:
/// one vector per free column (ascending), with a 1 in its free column and
/// zeros in all other free columns.
std::vector<SparseVector> nullspace(const SparseMatrix& m);

/// m · v, exact.
SparseVector apply(const SparseMatrix& m, const SparseVector& v);

/// Row arithmetic helper: dst += c * src (sorted sparse rows).
SparseMatrix::Row row_axpy(const SparseMatrix::Row& dst, const Scalar& c,
                           const SparseMatrix::Row& src);

/// Dimension of the span of the given vectors.
int span_dim(const std::vector<SparseVector>& vecs, int dim);

}  // namespace svb

#endif
