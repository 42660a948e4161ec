#include "svb/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

namespace svb {

UnknownIndex::UnknownIndex(const AlgebraSpec& alg, const Window& window,
                           Parity gamma, HalfInt shift)
    : alg_(&alg), window_(window), gamma_(gamma), shift_(shift) {
  std::vector<BasisVector> basis = alg.basis_in_window(window.n);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = a; b < basis.size(); ++b) {
      const BasisVector &i = basis[a], &j = basis[b];
      if (i == j && alg.parity_of(i) == Parity::even) continue;
      HalfInt out_deg = i.degree + j.degree + shift;
      if (!window.contains(out_deg)) continue;
      Parity out_par = alg.parity_of(i) + alg.parity_of(j) + gamma;
      for (const Family& f : alg.families()) {
        if (f.parity != out_par) continue;
        if ((((out_deg.doubled - f.offset.doubled) % 2) + 2) % 2 != 0)
          continue;
        list_.push_back(Unknown{{i, j}, BasisVector{f.symbol, out_deg}});
      }
    }
  }
  std::sort(list_.begin(), list_.end(), [](const Unknown& a, const Unknown& b) {
    return std::tie(a.pair.first, a.pair.second, a.out) <
           std::tie(b.pair.first, b.pair.second, b.out);
  });
  for (size_t k = 0; k < list_.size(); ++k) {
    by_pair_[list_[k].pair].push_back(int(k));
    lookup_[{list_[k].pair, list_[k].out}] = int(k);
  }
}

const std::vector<int>* UnknownIndex::pair_unknowns(const BasisPair& p) const {
  auto it = by_pair_.find(p);
  return it == by_pair_.end() ? nullptr : &it->second;
}

std::optional<UnknownIndex::Ref> UnknownIndex::resolve(
    const BasisVector& a, const BasisVector& b, const BasisVector& out) const {
  if (a == b && alg_->parity_of(a) == Parity::even) return std::nullopt;
  BasisPair p{a, b};
  int sign = 1;
  if (!is_canonical_pair(a, b)) {
    p = {b, a};
    sign = -parity_sign(alg_->parity_of(a), alg_->parity_of(b));
  }
  auto it = lookup_.find({p, out});
  if (it == lookup_.end()) return std::nullopt;
  return Ref{it->second, sign};
}

std::vector<UnknownIndex::Ref> UnknownIndex::resolve_pair(
    const BasisVector& a, const BasisVector& b, int* sign_out) const {
  std::vector<Ref> out;
  if (a == b && alg_->parity_of(a) == Parity::even) return out;
  BasisPair p{a, b};
  int sign = 1;
  if (!is_canonical_pair(a, b)) {
    p = {b, a};
    sign = -parity_sign(alg_->parity_of(a), alg_->parity_of(b));
  }
  if (sign_out) *sign_out = sign;
  if (const std::vector<int>* ids = pair_unknowns(p))
    for (int k : *ids) out.push_back(Ref{k, sign});
  return out;
}

bool UnknownIndex::is_interior(int i) const {
  const Unknown& u = list_[size_t(i)];
  return window_.interior(u.pair.first.degree) &&
         window_.interior(u.pair.second.degree) &&
         window_.interior(u.out.degree);
}

namespace {

using Row = SparseMatrix::Row;
using Acc = std::map<BasisVector, std::map<int, Scalar>>;

void emit_rows(const Acc& acc, std::vector<Row>& rows) {
  for (const auto& [out, coeffs] : acc) {
    Row row;
    for (const auto& [col, v] : coeffs)
      if (!v.is_zero()) row.emplace_back(col, v);
    if (!row.empty()) rows.push_back(std::move(row));
  }
}

std::vector<Row> bider_rows_for_triple(const AlgebraSpec& alg,
                                       const UnknownIndex& index,
                                       const BasisVector& x,
                                       const BasisVector& y,
                                       const BasisVector& z) {
  Parity px = alg.parity_of(x), py = alg.parity_of(y), pz = alg.parity_of(z);
  Parity gamma = index.gamma();
  std::vector<Row> rows;

  // Eq: phi([x,y],z) = (-1)^{|phi||x|}[x,phi(y,z)] + (-1)^{|y||z|}[phi(x,z),y]
  {
    Acc acc;
    Element bxy = alg.bracket_basis(x, y);
    for (const auto& [w, c] : bxy.terms())
      for (const auto& r : index.resolve_pair(w, z))
        acc[index.at(r.index).out][r.index] += c * Scalar(r.sign);
    int s1 = (is_odd(gamma) && is_odd(px)) ? -1 : 1;
    for (const auto& r : index.resolve_pair(y, z)) {
      Element bk = alg.bracket_basis(x, index.at(r.index).out);
      for (const auto& [k2, c2] : bk.terms())
        acc[k2][r.index] -= Scalar(s1 * r.sign) * c2;
    }
    int s2 = parity_sign(py, pz);
    for (const auto& r : index.resolve_pair(x, z)) {
      Element bk = alg.bracket_basis(index.at(r.index).out, y);
      for (const auto& [k2, c2] : bk.terms())
        acc[k2][r.index] -= Scalar(s2 * r.sign) * c2;
    }
    emit_rows(acc, rows);
  }

  // Eq: phi(x,[y,z]) = [phi(x,y),z] + (-1)^{(|phi|+|x|)|y|}[y,phi(x,z)]
  {
    Acc acc;
    Element byz = alg.bracket_basis(y, z);
    for (const auto& [w, c] : byz.terms())
      for (const auto& r : index.resolve_pair(x, w))
        acc[index.at(r.index).out][r.index] += c * Scalar(r.sign);
    for (const auto& r : index.resolve_pair(x, y)) {
      Element bk = alg.bracket_basis(index.at(r.index).out, z);
      for (const auto& [k2, c2] : bk.terms())
        acc[k2][r.index] -= Scalar(r.sign) * c2;
    }
    int s = (is_odd(gamma + px) && is_odd(py)) ? -1 : 1;
    for (const auto& r : index.resolve_pair(x, z)) {
      Element bk = alg.bracket_basis(y, index.at(r.index).out);
      for (const auto& [k2, c2] : bk.terms())
        acc[k2][r.index] -= Scalar(s * r.sign) * c2;
    }
    emit_rows(acc, rows);
  }

  return rows;
}

}  // namespace

SparseMatrix build_bider_system(const AlgebraSpec& alg,
                                const UnknownIndex& index, bool parallel) {
  const Window& w = index.window();
  std::vector<BasisVector> basis = alg.basis_in_window(w.n);
  long n = long(basis.size());

  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (admissible_triple(w, basis[size_t(x)].degree,
                              basis[size_t(y)].degree, basis[size_t(z)].degree,
                              index.shift()))
          triples.push_back({x, y, z});

  std::vector<std::vector<Row>> per_triple(triples.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (long t = 0; t < long(triples.size()); ++t) {
      const auto& tr = triples[size_t(t)];
      per_triple[size_t(t)] = bider_rows_for_triple(
          alg, index, basis[size_t(tr[0])], basis[size_t(tr[1])],
          basis[size_t(tr[2])]);
    }
  } else {
    for (size_t t = 0; t < triples.size(); ++t) {
      const auto& tr = triples[t];
      per_triple[t] = bider_rows_for_triple(alg, index, basis[size_t(tr[0])],
                                            basis[size_t(tr[1])],
                                            basis[size_t(tr[2])]);
    }
  }

  std::vector<Row> rows;
  for (auto& block : per_triple)
    for (auto& r : block) rows.push_back(std::move(r));
  return matrix_from_rows(index.size(), std::move(rows));
}

SparseVector inner_vector(const AlgebraSpec& alg, const UnknownIndex& index) {
  SparseVector v;
  v.dim = index.size();
  if (index.gamma() != Parity::even || index.shift() != HalfInt::whole(0))
    return v;
  for (int i = 0; i < index.size(); ++i) {
    const Unknown& u = index.at(i);
    Element b = alg.bracket_basis(u.pair.first, u.pair.second);
    auto it = b.terms().find(u.out);
    if (it != b.terms().end()) v.entries.emplace_back(i, it->second);
  }
  return v;
}

namespace {

SparseVector restrict_interior(const SparseVector& v,
                               const std::vector<bool>& interior) {
  SparseVector out;
  out.dim = v.dim;
  for (const auto& [i, c] : v.entries)
    if (interior[size_t(i)]) out.entries.emplace_back(i, c);
  return out;
}

/// Shared interior-restriction certification for both solvers.
void certify(SolverRun& run, const std::vector<SparseVector>& ns,
             const std::vector<bool>& interior,
             const SparseVector& reference) {
  int dim = int(interior.size());
  std::vector<Row> restricted;
  for (const SparseVector& v : ns) {
    SparseVector r = restrict_interior(v, interior);
    if (!r.entries.empty()) restricted.push_back(r.entries);
  }
  RrefResult rr = rref(matrix_from_rows(dim, std::move(restricted)));
  run.interior_dim = rr.matrix.rows();
  for (int i = 0; i < rr.matrix.rows(); ++i)
    run.interior_basis.push_back(SparseVector{dim, rr.matrix.row(i)});

  SparseVector ref = restrict_interior(reference, interior);
  int ref_span = ref.entries.empty() ? 0 : 1;
  bool match = run.interior_dim == ref_span;
  if (match && ref_span == 1) {
    std::vector<SparseVector> all = run.interior_basis;
    all.push_back(ref);
    match = span_dim(all, dim) == run.interior_dim;
  }
  run.is_inner = match;
  if (run.is_inner && ref_span == 1) {
    for (const SparseVector& b : run.interior_basis) {
      // b = c * ref; read c off the first entry of ref.
      const auto& [idx, rv] = ref.entries.front();
      Scalar c;
      for (const auto& [i, v] : b.entries)
        if (i == idx) c = v / rv;
      run.inner_coordinates.push_back(c);
    }
  }
}

}  // namespace

SolverRun solve_bider(const AlgebraSpec& alg, const Window& window,
                      Parity gamma, HalfInt shift, bool parallel) {
  UnknownIndex index(alg, window, gamma, shift);
  SparseMatrix m = build_bider_system(alg, index, parallel);

  SolverRun run;
  run.algebra = alg.name();
  run.window = window;
  run.gamma = gamma;
  run.shift = shift;
  run.unknowns = index.size();
  run.constraints = m.rows();
  run.degenerate = m.rows() == 0;
  run.nullspace_basis = nullspace(m);
  run.nullspace_dim = int(run.nullspace_basis.size());

  std::vector<bool> interior(size_t(index.size()));
  for (int i = 0; i < index.size(); ++i) interior[size_t(i)] = index.is_interior(i);
  certify(run, run.nullspace_basis, interior, inner_vector(alg, index));
  return run;
}

LinearUnknownIndex::LinearUnknownIndex(const AlgebraSpec& alg,
                                       const Window& window, Parity sector,
                                       HalfInt shift)
    : alg_(&alg), window_(window), sector_(sector), shift_(shift) {
  for (const BasisVector& b : alg.basis_in_window(window.n)) {
    HalfInt out_deg = b.degree + shift;
    if (!window.contains(out_deg)) continue;
    Parity out_par = alg.parity_of(b) + sector;
    for (const Family& f : alg.families()) {
      if (f.parity != out_par) continue;
      if ((((out_deg.doubled - f.offset.doubled) % 2) + 2) % 2 != 0) continue;
      list_.push_back(LinearUnknown{b, BasisVector{f.symbol, out_deg}});
    }
  }
  std::sort(list_.begin(), list_.end(),
            [](const LinearUnknown& a, const LinearUnknown& b) {
              return std::tie(a.in, a.out) < std::tie(b.in, b.out);
            });
  for (size_t k = 0; k < list_.size(); ++k)
    by_input_[list_[k].in].push_back(int(k));
}

const std::vector<int>* LinearUnknownIndex::input_unknowns(
    const BasisVector& in) const {
  auto it = by_input_.find(in);
  return it == by_input_.end() ? nullptr : &it->second;
}

bool LinearUnknownIndex::is_interior(int i) const {
  const LinearUnknown& u = list_[size_t(i)];
  return window_.interior(u.in.degree) && window_.interior(u.out.degree);
}

SparseMatrix build_commuting_system(const AlgebraSpec& alg,
                                    const LinearUnknownIndex& index,
                                    bool parallel) {
  const Window& w = index.window();
  std::vector<BasisVector> basis = alg.basis_in_window(w.n);
  long n = long(basis.size());
  int s2 = index.shift().doubled;

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int dx = basis[size_t(x)].degree.doubled, dy = basis[size_t(y)].degree.doubled;
      if (std::abs(dx + s2) <= 2 * w.n && std::abs(dy + s2) <= 2 * w.n &&
          std::abs(dx + dy + s2) <= 2 * w.n)
        pairs.push_back({x, y});
    }
  }

  std::vector<std::vector<Row>> per_pair(pairs.size());
  auto body = [&](size_t t) {
    const BasisVector &x = basis[size_t(pairs[t].first)],
                      &y = basis[size_t(pairs[t].second)];
    Acc acc;
    if (const auto* ids = index.input_unknowns(x))
      for (int u : *ids) {
        Element bk = alg.bracket_basis(index.at(u).out, y);
        for (const auto& [k2, c2] : bk.terms()) acc[k2][u] += c2;
      }
    int sg = (is_odd(index.sector()) && is_odd(alg.parity_of(x))) ? -1 : 1;
    if (const auto* ids = index.input_unknowns(y))
      for (int u : *ids) {
        Element bk = alg.bracket_basis(x, index.at(u).out);
        for (const auto& [k2, c2] : bk.terms()) acc[k2][u] -= Scalar(sg) * c2;
      }
    emit_rows(acc, per_pair[t]);
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long t = 0; t < long(pairs.size()); ++t) body(size_t(t));
  } else {
    for (size_t t = 0; t < pairs.size(); ++t) body(t);
  }

  std::vector<Row> rows;
  for (auto& block : per_pair)
    for (auto& r : block) rows.push_back(std::move(r));
  return matrix_from_rows(index.size(), std::move(rows));
}

SparseVector identity_vector(const LinearUnknownIndex& index) {
  SparseVector v;
  v.dim = index.size();
  if (index.sector() != Parity::even || index.shift() != HalfInt::whole(0))
    return v;
  for (int i = 0; i < index.size(); ++i)
    if (index.at(i).in == index.at(i).out) v.entries.emplace_back(i, Scalar(1));
  return v;
}

SolverRun solve_commuting(const AlgebraSpec& alg, const Window& window,
                          Parity sector, HalfInt shift, bool parallel) {
  LinearUnknownIndex index(alg, window, sector, shift);
  SparseMatrix m = build_commuting_system(alg, index, parallel);

  SolverRun run;
  run.algebra = alg.name();
  run.window = window;
  run.gamma = sector;
  run.shift = shift;
  run.unknowns = index.size();
  run.constraints = m.rows();
  run.commuting = true;
  run.degenerate = m.rows() == 0;
  run.nullspace_basis = nullspace(m);
  run.nullspace_dim = int(run.nullspace_basis.size());

  std::vector<bool> interior(size_t(index.size()));
  for (int i = 0; i < index.size(); ++i) interior[size_t(i)] = index.is_interior(i);
  certify(run, run.nullspace_basis, interior, identity_vector(index));
  return run;
}

BilinearMapCoeffs map_from_vector(const AlgebraSpec& alg,
                                  const UnknownIndex& index,
                                  const SparseVector& v) {
  if (v.dim != index.size()) throw std::invalid_argument("dimension mismatch");
  BilinearMapCoeffs phi(alg, index.window(), index.gamma(), index.shift());
  std::map<BasisPair, Element> acc;
  for (const auto& [i, c] : v.entries) {
    const Unknown& u = index.at(i);
    acc[u.pair].add_term(u.out, c);
  }
  for (auto& [pair, val] : acc)
    phi.set_coeff(pair.first, pair.second, std::move(val));
  return phi;
}

LinearMapCoeffs linear_map_from_vector(const AlgebraSpec& alg,
                                       const LinearUnknownIndex& index,
                                       const SparseVector& v) {
  if (v.dim != index.size()) throw std::invalid_argument("dimension mismatch");
  LinearMapCoeffs f(alg, index.window(), index.sector(), index.shift());
  std::map<BasisVector, Element> acc;
  for (const auto& [i, c] : v.entries) {
    const LinearUnknown& u = index.at(i);
    acc[u.in].add_term(u.out, c);
  }
  for (auto& [in, val] : acc) f.set_coeff(in, std::move(val));
  return f;
}

BilinearMapCoeffs psi_from_linear(const LinearMapCoeffs& f) {
  const AlgebraSpec& alg = f.algebra();
  const Window& w = f.window();
  BilinearMapCoeffs psi(alg, w, f.sector(), f.shift());
  std::vector<BasisVector> basis = alg.basis_in_window(w.n);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = a; b < basis.size(); ++b) {
      const BasisVector &i = basis[a], &j = basis[b];
      if (i == j && alg.parity_of(i) == Parity::even) continue;
      if (!w.contains(i.degree + j.degree + f.shift())) continue;
      Element v = alg.bracket(f.coeff(i), Element(j));
      if (!v.is_zero()) psi.set_coeff(i, j, std::move(v));
    }
  }
  return psi;
}

std::vector<BilinearMapCoeffs> interior_basis_maps(const AlgebraSpec& alg,
                                                   const SolverRun& run) {
  UnknownIndex index(alg, run.window, run.gamma, run.shift);
  // Interior restrictions are biderivations on the interior window; that is
  // the window they are handed out with.
  Window interior(run.window.n - run.window.b, 0);
  std::vector<BilinearMapCoeffs> out;
  for (const SparseVector& v : run.interior_basis) {
    BilinearMapCoeffs phi(alg, interior, run.gamma, run.shift);
    std::map<BasisPair, Element> acc;
    for (const auto& [i, c] : v.entries) {
      const Unknown& u = index.at(i);
      acc[u.pair].add_term(u.out, c);
    }
    for (auto& [pair, val] : acc)
      phi.set_coeff(pair.first, pair.second, std::move(val));
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace svb
