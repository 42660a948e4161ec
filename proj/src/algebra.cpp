#include "svb/algebra.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "svb/sparse.hpp"

namespace svb {

void Element::add_term(const BasisVector& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [b, v] : terms_) r.terms_.emplace(b, c * v);
  return r;
}

std::optional<HalfInt> Element::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  HalfInt d = terms_.begin()->first.degree;
  for (const auto& [b, c] : terms_)
    if (b.degree != d) return std::nullopt;
  return d;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << "*" << b.str();
    first = false;
  }
  return os.str();
}

AlgebraSpec::AlgebraSpec(std::string name, std::vector<Family> families,
                         std::vector<BracketRule> rules)
    : name_(std::move(name)),
      families_(std::move(families)),
      rules_(std::move(rules)) {
  for (size_t i = 0; i < families_.size(); ++i) {
    if (!family_index_.emplace(families_[i].symbol, i).second)
      throw std::invalid_argument("duplicate family symbol: " +
                                  families_[i].symbol);
  }
  for (size_t i = 0; i < rules_.size(); ++i) {
    auto key = std::make_pair(rules_[i].left, rules_[i].right);
    if (!rule_index_.emplace(key, i).second)
      throw std::invalid_argument("duplicate bracket rule for (" +
                                  rules_[i].left + "," + rules_[i].right + ")");
  }
  validate();
}

void AlgebraSpec::validate() const {
  for (const auto& r : rules_) {
    const Family* fl = find_family(r.left);
    const Family* fr = find_family(r.right);
    const Family* fo = find_family(r.result);
    if (!fl || !fr || !fo)
      throw std::invalid_argument("rule (" + r.left + "," + r.right + ") -> " +
                                  r.result + " names an unknown family");
    if (fo->parity != fl->parity + fr->parity)
      throw std::invalid_argument("rule (" + r.left + "," + r.right + ") -> " +
                                  r.result + ": parity mismatch");
    int off = fl->offset.doubled + fr->offset.doubled - fo->offset.doubled;
    if (((off % 2) + 2) % 2 != 0)
      throw std::invalid_argument("rule (" + r.left + "," + r.right + ") -> " +
                                  r.result + ": degree lattice mismatch");
  }
}

const Family* AlgebraSpec::find_family(const std::string& symbol) const {
  auto it = family_index_.find(symbol);
  return it == family_index_.end() ? nullptr : &families_[it->second];
}

bool AlgebraSpec::contains(const BasisVector& b) const {
  const Family* f = find_family(b.family);
  if (!f) return false;
  return (((b.degree.doubled - f->offset.doubled) % 2) + 2) % 2 == 0;
}

Parity AlgebraSpec::parity_of(const BasisVector& b) const {
  const Family* f = find_family(b.family);
  if (!f) throw std::invalid_argument("basis vector not in algebra");
  return f->parity;
}

bool AlgebraSpec::is_parity_homogeneous(const Element& x) const {
  if (x.is_zero()) return true;
  Parity p = parity_of(x.terms().begin()->first);
  for (const auto& [b, c] : x.terms())
    if (parity_of(b) != p) return false;
  return true;
}

Parity AlgebraSpec::parity_of(const Element& x) const {
  if (x.is_zero()) return Parity::even;
  Parity p = parity_of(x.terms().begin()->first);
  for (const auto& [b, c] : x.terms())
    if (parity_of(b) != p)
      throw std::invalid_argument("parity-inhomogeneous element");
  return p;
}

namespace {

Scalar eval_poly(const std::vector<PolyTerm>& poly, const Scalar& m,
                 const Scalar& n) {
  Scalar acc;
  for (const auto& t : poly) {
    Scalar v = t.coeff;
    for (int i = 0; i < t.pow_m; ++i) v *= m;
    for (int i = 0; i < t.pow_n; ++i) v *= n;
    acc += v;
  }
  return acc;
}

}  // namespace

Element AlgebraSpec::bracket_basis(const BasisVector& a,
                                   const BasisVector& b) const {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("basis vector not in algebra");
  Element out;
  auto direct = rule_index_.find({a.family, b.family});
  if (direct != rule_index_.end()) {
    const BracketRule& r = rules_[direct->second];
    Scalar c = eval_poly(r.poly, a.degree.as_scalar(), b.degree.as_scalar());
    out.add_term(BasisVector{r.result, a.degree + b.degree}, c);
    return out;
  }
  auto rev = rule_index_.find({b.family, a.family});
  if (rev != rule_index_.end()) {
    const BracketRule& r = rules_[rev->second];
    Scalar c = eval_poly(r.poly, b.degree.as_scalar(), a.degree.as_scalar());
    int sign = -parity_sign(parity_of(a), parity_of(b));
    out.add_term(BasisVector{r.result, a.degree + b.degree},
                 c * Scalar(sign));
  }
  return out;
}

Element AlgebraSpec::bracket(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out += bracket_basis(a, b).scaled(ca * cb);
  return out;
}

std::vector<BasisVector> AlgebraSpec::basis_in_window(int bound) const {
  std::vector<BasisVector> out;
  for (const Family& f : families_) {
    int off = ((f.offset.doubled % 2) + 2) % 2;
    for (int d2 = -2 * bound; d2 <= 2 * bound; ++d2)
      if ((((d2 - off) % 2) + 2) % 2 == 0)
        out.push_back(BasisVector{f.symbol, HalfInt::from_doubled(d2)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool AlgebraSpec::same_structure(const AlgebraSpec& o) const {
  if (families_.size() != o.families_.size() ||
      rules_.size() != o.rules_.size())
    return false;
  for (size_t i = 0; i < families_.size(); ++i) {
    const Family &a = families_[i], &b = o.families_[i];
    if (a.symbol != b.symbol || a.parity != b.parity || a.offset != b.offset)
      return false;
  }
  for (size_t i = 0; i < rules_.size(); ++i) {
    const BracketRule &a = rules_[i], &b = o.rules_[i];
    if (a.left != b.left || a.right != b.right || a.result != b.result)
      return false;
    if (a.poly.size() != b.poly.size()) return false;
    for (size_t j = 0; j < a.poly.size(); ++j)
      if (a.poly[j].coeff != b.poly[j].coeff ||
          a.poly[j].pow_m != b.poly[j].pow_m ||
          a.poly[j].pow_n != b.poly[j].pow_n)
        return false;
  }
  return true;
}

Element skew_residual(const AlgebraSpec& alg, const Element& x,
                      const Element& y) {
  Parity px = alg.parity_of(x), py = alg.parity_of(y);
  return alg.bracket(x, y) +
         alg.bracket(y, x).scaled(Scalar(parity_sign(px, py)));
}

Element super_jacobi_residual(const AlgebraSpec& alg, const Element& x,
                              const Element& y, const Element& z) {
  Parity px = alg.parity_of(x), py = alg.parity_of(y);
  alg.parity_of(z);
  Element r = alg.bracket(x, alg.bracket(y, z));
  r += alg.bracket(alg.bracket(x, y), z).scaled(Scalar(-1));
  r += alg.bracket(y, alg.bracket(x, z)).scaled(Scalar(-parity_sign(px, py)));
  return r;
}

std::vector<Element> center_of_derived(const AlgebraSpec& alg, int window_n,
                                       int buffer_b) {
  if (window_n < 1 || buffer_b < 0 || buffer_b >= window_n)
    throw std::invalid_argument("invalid window");
  std::vector<BasisVector> interior = alg.basis_in_window(window_n - buffer_b);
  std::vector<BasisVector> window = alg.basis_in_window(window_n);

  std::map<BasisVector, int> col_of;
  for (size_t i = 0; i < interior.size(); ++i) col_of[interior[i]] = int(i);

  std::vector<SparseMatrix::Row> rows;
  for (const BasisVector& w : window) {
    // Row block indexed by output basis vector, columns by interior unknowns.
    std::map<BasisVector, std::map<int, Scalar>> acc;
    for (size_t i = 0; i < interior.size(); ++i) {
      const BasisVector& c = interior[i];
      if (std::abs(c.degree.doubled + w.degree.doubled) > 2 * window_n)
        continue;
      Element bcw = alg.bracket_basis(c, w);
      for (const auto& [out, v] : bcw.terms()) acc[out][int(i)] += v;
    }
    for (const auto& [out, coeffs] : acc) {
      SparseMatrix::Row row;
      for (const auto& [col, v] : coeffs)
        if (!v.is_zero()) row.emplace_back(col, v);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }

  SparseMatrix m = matrix_from_rows(int(interior.size()), std::move(rows));
  std::vector<Element> basis;
  for (const SparseVector& v : nullspace(m)) {
    Element e;
    for (const auto& [idx, c] : v.entries) e.add_term(interior[size_t(idx)], c);
    basis.push_back(std::move(e));
  }
  return basis;
}

namespace {

SweepResult run_sweep(long count, bool parallel,
                      const std::function<std::optional<std::string>(long)>& check) {
  std::vector<char> bad(size_t(count), 0);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < count; ++i)
      if (check(i)) bad[size_t(i)] = 1;
  } else {
    for (long i = 0; i < count; ++i)
      if (check(i)) bad[size_t(i)] = 1;
  }
  SweepResult res;
  res.checked = count;
  for (long i = 0; i < count; ++i) {
    if (!bad[size_t(i)]) continue;
    ++res.violations;
    if (res.samples.size() < 8) res.samples.push_back(*check(i));
  }
  return res;
}

}  // namespace

SweepResult skew_sweep(const AlgebraSpec& alg, int max_degree, bool parallel) {
  std::vector<BasisVector> basis = alg.basis_in_window(max_degree);
  long n = long(basis.size());
  return run_sweep(n * n, parallel, [&](long idx) -> std::optional<std::string> {
    const BasisVector& x = basis[size_t(idx / n)];
    const BasisVector& y = basis[size_t(idx % n)];
    Element r = skew_residual(alg, Element(x), Element(y));
    if (r.is_zero()) return std::nullopt;
    return "skew(" + x.str() + "," + y.str() + ") = " + r.str();
  });
}

SweepResult jacobi_sweep(const AlgebraSpec& alg, int max_degree,
                         bool parallel) {
  std::vector<BasisVector> basis = alg.basis_in_window(max_degree);
  long n = long(basis.size());
  return run_sweep(n * n * n, parallel,
                   [&](long idx) -> std::optional<std::string> {
    const BasisVector& x = basis[size_t(idx / (n * n))];
    const BasisVector& y = basis[size_t((idx / n) % n)];
    const BasisVector& z = basis[size_t(idx % n)];
    Element r = super_jacobi_residual(alg, Element(x), Element(y), Element(z));
    if (r.is_zero()) return std::nullopt;
    return "jacobi(" + x.str() + "," + y.str() + "," + z.str() + ") = " +
           r.str();
  });
}

}  // namespace svb
