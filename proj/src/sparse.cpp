#include "svb/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace svb {

void SparseMatrix::push_entry(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows() || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (v.is_zero()) return;
  Row& row = rows_[size_t(r)];
  if (!row.empty() && row.back().first >= c)
    throw std::invalid_argument("entries must be pushed in column order");
  row.emplace_back(c, v);
}

long SparseMatrix::entry_count() const {
  long n = 0;
  for (const auto& r : rows_) n += long(r.size());
  return n;
}

SparseMatrix matrix_from_rows(int cols, std::vector<SparseMatrix::Row> rows) {
  return SparseMatrix(cols, std::move(rows));
}

SparseMatrix::Row row_axpy(const SparseMatrix::Row& dst, const Scalar& c,
                           const SparseMatrix::Row& src) {
  SparseMatrix::Row out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Scalar v = c * src[j].second;
      if (!v.is_zero()) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      Scalar v = dst[i].second + c * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

SparseMatrix::Row row_scale(const SparseMatrix::Row& r, const Scalar& c) {
  SparseMatrix::Row out;
  out.reserve(r.size());
  for (const auto& [col, v] : r) out.emplace_back(col, c * v);
  return out;
}

const Scalar* row_at(const SparseMatrix::Row& r, int col) {
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == col) return &it->second;
  return nullptr;
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
  // Incremental echelon: pivot column -> fully reduced row with pivot 1.
  std::map<int, SparseMatrix::Row> pivots;
  for (int r = 0; r < m.rows(); ++r) {
    SparseMatrix::Row row = m.row(r);
    // Forward-reduce against existing pivot rows.
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = row_axpy(row, -row.front().second, it->second);
    }
    if (row.empty()) continue;
    int pc = row.front().first;
    row = row_scale(row, row.front().second.inverse());
    // Clear remaining entries at existing pivot columns. Pivot rows carry
    // no other pivot-column support, so each subtraction strictly reduces
    // the set of pivot columns present in the row.
    for (bool again = true; again;) {
      again = false;
      for (size_t k = 1; k < row.size(); ++k) {
        auto it = pivots.find(row[k].first);
        if (it == pivots.end()) continue;
        row = row_axpy(row, -row[k].second, it->second);
        again = true;
        break;
      }
    }
    // Back-substitute the new pivot into earlier rows.
    for (auto& [c, prow] : pivots) {
      if (const Scalar* v = row_at(prow, pc)) prow = row_axpy(prow, -*v, row);
    }
    pivots.emplace(pc, std::move(row));
  }

  std::vector<SparseMatrix::Row> rows;
  std::vector<int> pivot_cols;
  rows.reserve(pivots.size());
  for (auto& [c, prow] : pivots) {
    pivot_cols.push_back(c);
    rows.push_back(std::move(prow));
  }
  return RrefResult{matrix_from_rows(m.cols(), std::move(rows)),
                    std::move(pivot_cols)};
}

std::vector<SparseVector> nullspace(const SparseMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(size_t(m.cols()), false);
  for (int c : r.pivot_cols) is_pivot[size_t(c)] = true;

  std::vector<SparseVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[size_t(f)]) continue;
    SparseVector v;
    v.dim = m.cols();
    for (int i = 0; i < r.matrix.rows(); ++i) {
      if (const Scalar* c = row_at(r.matrix.row(i), f))
        v.entries.emplace_back(r.pivot_cols[size_t(i)], -*c);
    }
    v.entries.emplace_back(f, Scalar(1));
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseVector apply(const SparseMatrix& m, const SparseVector& v) {
  if (v.dim != m.cols()) throw std::invalid_argument("dimension mismatch");
  SparseVector out;
  out.dim = m.rows();
  for (int r = 0; r < m.rows(); ++r) {
    Scalar acc;
    size_t i = 0, j = 0;
    const auto& row = m.row(r);
    while (i < row.size() && j < v.entries.size()) {
      if (row[i].first < v.entries[j].first)
        ++i;
      else if (v.entries[j].first < row[i].first)
        ++j;
      else
        acc += row[i++].second * v.entries[j++].second;
    }
    if (!acc.is_zero()) out.entries.emplace_back(r, acc);
  }
  return out;
}

int span_dim(const std::vector<SparseVector>& vecs, int dim) {
  std::vector<SparseMatrix::Row> rows;
  for (const auto& v : vecs)
    if (!v.entries.empty()) rows.push_back(v.entries);
  SparseMatrix m = matrix_from_rows(dim, std::move(rows));
  return int(rref(m).pivot_cols.size());
}

}  // namespace svb
