#include "svb/bimaps.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace svb {

bool admissible_triple(const Window& w, HalfInt dx, HalfInt dy, HalfInt dz,
                       HalfInt shift) {
  auto ok = [&](int d2) { return std::abs(d2) <= 2 * w.n; };
  int x = dx.doubled, y = dy.doubled, z = dz.doubled, d = shift.doubled;
  return ok(x + y) && ok(y + z) && ok(x + z) && ok(x + y + d) &&
         ok(y + z + d) && ok(x + z + d) && ok(x + y + z + d);
}

bool admissible_quadruple(const Window& w, HalfInt dx, HalfInt dy, HalfInt du,
                          HalfInt dv, HalfInt shift) {
  auto ok = [&](int d2) { return std::abs(d2) <= 2 * w.n; };
  int x = dx.doubled, y = dy.doubled, u = du.doubled, v = dv.doubled,
      d = shift.doubled;
  return ok(x + y) && ok(u + v) && ok(x + y + d) && ok(u + v + d) &&
         ok(x + y + u + v + d);
}

void BilinearMapCoeffs::set_coeff(const BasisVector& i, const BasisVector& j,
                                  Element value) {
  if (!is_canonical_pair(i, j))
    throw std::invalid_argument("non-canonical pair order");
  if (!alg_->contains(i) || !alg_->contains(j))
    throw std::invalid_argument("basis vector not in algebra");
  if (!window_.contains(i.degree) || !window_.contains(j.degree))
    throw std::invalid_argument("outside window");
  bool even_self = i == j && alg_->parity_of(i) == Parity::even;
  if (even_self) {
    if (!value.is_zero())
      throw std::invalid_argument("even self-pair coefficient must be zero");
    return;
  }
  HalfInt want_deg = i.degree + j.degree + shift_;
  Parity want_par = alg_->parity_of(i) + alg_->parity_of(j) + gamma_;
  for (const auto& [out, c] : value.terms()) {
    if (out.degree != want_deg || alg_->parity_of(out) != want_par)
      throw std::invalid_argument("coefficient not homogeneous as declared");
    if (!window_.contains(out.degree))
      throw std::invalid_argument("outside window");
  }
  if (value.is_zero())
    coeffs_.erase({i, j});
  else
    coeffs_[{i, j}] = std::move(value);
}

Element BilinearMapCoeffs::coeff(const BasisVector& a,
                                 const BasisVector& b) const {
  if (!window_.contains(a.degree) || !window_.contains(b.degree))
    throw std::invalid_argument("outside window");
  if (a == b && alg_->parity_of(a) == Parity::even) return Element();
  if (is_canonical_pair(a, b)) {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? Element() : it->second;
  }
  auto it = coeffs_.find({b, a});
  if (it == coeffs_.end()) return Element();
  int sign = -parity_sign(alg_->parity_of(a), alg_->parity_of(b));
  return it->second.scaled(Scalar(sign));
}

void LinearMapCoeffs::set_coeff(const BasisVector& i, Element value) {
  if (!alg_->contains(i))
    throw std::invalid_argument("basis vector not in algebra");
  if (!window_.contains(i.degree))
    throw std::invalid_argument("outside window");
  HalfInt want_deg = i.degree + shift_;
  Parity want_par = alg_->parity_of(i) + sector_;
  for (const auto& [out, c] : value.terms()) {
    if (out.degree != want_deg || alg_->parity_of(out) != want_par)
      throw std::invalid_argument("coefficient not homogeneous as declared");
    if (!window_.contains(out.degree))
      throw std::invalid_argument("outside window");
  }
  if (value.is_zero())
    coeffs_.erase(i);
  else
    coeffs_[i] = std::move(value);
}

Element LinearMapCoeffs::coeff(const BasisVector& i) const {
  if (!window_.contains(i.degree))
    throw std::invalid_argument("outside window");
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Element() : it->second;
}

BilinearMapCoeffs inner_map(const AlgebraSpec& alg, const Window& window,
                            const Scalar& lambda) {
  BilinearMapCoeffs phi(alg, window, Parity::even, HalfInt::whole(0));
  if (lambda.is_zero()) return phi;
  std::vector<BasisVector> basis = alg.basis_in_window(window.n);
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = a; b < basis.size(); ++b) {
      const BasisVector &i = basis[a], &j = basis[b];
      if (!window.contains(i.degree + j.degree)) continue;
      if (i == j && alg.parity_of(i) == Parity::even) continue;
      Element v = alg.bracket_basis(i, j).scaled(lambda);
      if (!v.is_zero()) phi.set_coeff(i, j, std::move(v));
    }
  }
  return phi;
}

LinearMapCoeffs identity_map(const AlgebraSpec& alg, const Window& window) {
  LinearMapCoeffs f(alg, window, Parity::even, HalfInt::whole(0));
  for (const BasisVector& b : alg.basis_in_window(window.n))
    f.set_coeff(b, Element(b));
  return f;
}

Element eval_bimap(const BilinearMapCoeffs& phi, const Element& x,
                   const Element& y) {
  Element out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      out += phi.coeff(a, b).scaled(ca * cb);
  return out;
}

Element eval_linear(const LinearMapCoeffs& f, const Element& x) {
  Element out;
  for (const auto& [a, ca] : x.terms()) out += f.coeff(a).scaled(ca);
  return out;
}

Element residual_skew(const BilinearMapCoeffs& phi, const Element& x,
                      const Element& y) {
  const AlgebraSpec& alg = phi.algebra();
  int sign = parity_sign(alg.parity_of(x), alg.parity_of(y));
  return eval_bimap(phi, x, y) + eval_bimap(phi, y, x).scaled(Scalar(sign));
}

namespace {

void require_in_window(const Window& w, const Element& x) {
  for (const auto& [b, c] : x.terms())
    if (!w.contains(b.degree))
      throw std::invalid_argument("outside window");
}

}  // namespace

Element residual_left_leibniz(const BilinearMapCoeffs& phi, const Element& x,
                              const Element& y, const Element& z) {
  const AlgebraSpec& alg = phi.algebra();
  alg.parity_of(x);
  alg.parity_of(y);
  alg.parity_of(z);
  require_in_window(phi.window(), x);
  require_in_window(phi.window(), y);
  require_in_window(phi.window(), z);
  Element out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      for (const auto& [c, cc] : z.terms()) {
        if (!admissible_triple(phi.window(), a.degree, b.degree, c.degree,
                               phi.shift()))
          throw std::runtime_error("inadmissible triple");
        Parity pa = alg.parity_of(a), pb = alg.parity_of(b),
               pc = alg.parity_of(c);
        Element r = eval_bimap(phi, alg.bracket_basis(a, b), Element(c));
        int s1 = is_odd(phi.gamma()) && is_odd(pa) ? -1 : 1;
        r += alg.bracket(Element(a), eval_bimap(phi, Element(b), Element(c)))
                 .scaled(Scalar(-s1));
        int s2 = parity_sign(pb, pc);
        r += alg.bracket(eval_bimap(phi, Element(a), Element(c)), Element(b))
                 .scaled(Scalar(-s2));
        out += r.scaled(ca * cb * cc);
      }
    }
  }
  return out;
}

Element residual_right_leibniz(const BilinearMapCoeffs& phi, const Element& x,
                               const Element& y, const Element& z) {
  const AlgebraSpec& alg = phi.algebra();
  alg.parity_of(x);
  alg.parity_of(y);
  alg.parity_of(z);
  require_in_window(phi.window(), x);
  require_in_window(phi.window(), y);
  require_in_window(phi.window(), z);
  Element out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      for (const auto& [c, cc] : z.terms()) {
        if (!admissible_triple(phi.window(), a.degree, b.degree, c.degree,
                               phi.shift()))
          throw std::runtime_error("inadmissible triple");
        Parity pa = alg.parity_of(a), pb = alg.parity_of(b);
        Element r = eval_bimap(phi, Element(a), alg.bracket_basis(b, c));
        r += alg.bracket(eval_bimap(phi, Element(a), Element(b)), Element(c))
                 .scaled(Scalar(-1));
        int s = is_odd(phi.gamma() + pa) && is_odd(pb) ? -1 : 1;
        r += alg.bracket(Element(b), eval_bimap(phi, Element(a), Element(c)))
                 .scaled(Scalar(-s));
        out += r.scaled(ca * cb * cc);
      }
    }
  }
  return out;
}

Element quad_residual(const BilinearMapCoeffs& phi, const Element& x,
                      const Element& y, const Element& u, const Element& v) {
  const AlgebraSpec& alg = phi.algebra();
  alg.parity_of(x);
  alg.parity_of(y);
  alg.parity_of(u);
  alg.parity_of(v);
  Element out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      for (const auto& [c, cc] : u.terms()) {
        for (const auto& [d, cd] : v.terms()) {
          if (!admissible_quadruple(phi.window(), a.degree, b.degree, c.degree,
                                    d.degree, phi.shift()))
            throw std::runtime_error("inadmissible quadruple");
          Parity pab = alg.parity_of(a) + alg.parity_of(b);
          Element r = alg.bracket(eval_bimap(phi, Element(a), Element(b)),
                                  alg.bracket_basis(c, d));
          int s = is_odd(phi.gamma()) && is_odd(pab) ? -1 : 1;
          r += alg.bracket(alg.bracket_basis(a, b),
                           eval_bimap(phi, Element(c), Element(d)))
                   .scaled(Scalar(-s));
          out += r.scaled(ca * cb * cc * cd);
        }
      }
    }
  }
  return out;
}

LemmaReport check_lemma_selfbracket(
    const BilinearMapCoeffs& phi,
    const std::vector<std::pair<Element, Element>>& pairs) {
  const AlgebraSpec& alg = phi.algebra();
  LemmaReport rep;
  for (const auto& [x, y] : pairs) {
    ++rep.checked;
    Parity px = alg.parity_of(x), py = alg.parity_of(y);
    std::string label = "(" + x.str() + ", " + y.str() + ")";
    if (px + py == Parity::odd) {
      ++rep.flagged;
      rep.items.push_back({label, true, true, "hypothesis not met"});
      continue;
    }
    Element r = alg.bracket(eval_bimap(phi, x, y), alg.bracket(x, y));
    if (!r.is_zero()) {
      ++rep.failures;
      rep.items.push_back({label, false, false, r.str()});
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

LemmaReport check_lemma_commutant(const BilinearMapCoeffs& phi,
                                  const AlgebraSpec& alg,
                                  const Window& window) {
  LemmaReport rep;
  std::vector<BasisVector> interior = alg.basis_in_window(window.n - window.b);
  for (size_t a = 0; a < interior.size(); ++a) {
    for (size_t b = a; b < interior.size(); ++b) {
      const BasisVector &i = interior[a], &j = interior[b];
      if (!alg.bracket_basis(i, j).is_zero()) continue;
      ++rep.checked;
      Element p = phi.coeff(i, j);
      if (p.is_zero()) continue;
      HalfInt dp = *p.homogeneous_degree();
      bool ok = true;
      std::string bad;
      for (const BasisVector& w : interior) {
        if (!window.contains(dp + w.degree)) continue;
        Element r = alg.bracket(p, Element(w));
        if (!r.is_zero()) {
          ok = false;
          bad = "[phi(" + i.str() + "," + j.str() + "), " + w.str() +
                "] = " + r.str();
          break;
        }
      }
      if (!ok) {
        ++rep.failures;
        rep.items.push_back(
            {"(" + i.str() + ", " + j.str() + ")", false, false, bad});
      }
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

LemmaReport leibniz_sweep(const BilinearMapCoeffs& phi, bool parallel) {
  const AlgebraSpec& alg = phi.algebra();
  std::vector<BasisVector> basis = alg.basis_in_window(phi.window().n);
  long n = long(basis.size());

  struct Triple {
    int x, y, z;
  };
  std::vector<Triple> triples;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (admissible_triple(phi.window(), basis[size_t(x)].degree,
                              basis[size_t(y)].degree, basis[size_t(z)].degree,
                              phi.shift()))
          triples.push_back({x, y, z});

  std::vector<char> bad(triples.size(), 0);
  auto body = [&](size_t t) {
    const Triple& tr = triples[t];
    Element ex(basis[size_t(tr.x)]), ey(basis[size_t(tr.y)]),
        ez(basis[size_t(tr.z)]);
    if (!residual_left_leibniz(phi, ex, ey, ez).is_zero() ||
        !residual_right_leibniz(phi, ex, ey, ez).is_zero())
      bad[t] = 1;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long t = 0; t < long(triples.size()); ++t) body(size_t(t));
  } else {
    for (size_t t = 0; t < triples.size(); ++t) body(t);
  }

  LemmaReport rep;
  rep.checked = long(triples.size());
  for (size_t t = 0; t < triples.size(); ++t) {
    if (!bad[t]) continue;
    ++rep.failures;
    if (rep.items.size() < 8) {
      const Triple& tr = triples[t];
      rep.items.push_back({"(" + basis[size_t(tr.x)].str() + ", " +
                               basis[size_t(tr.y)].str() + ", " +
                               basis[size_t(tr.z)].str() + ")",
                           false, false, "leibniz residual nonzero"});
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

LemmaReport quad_sweep(const BilinearMapCoeffs& phi, int count,
                       unsigned long seed) {
  const AlgebraSpec& alg = phi.algebra();
  std::vector<BasisVector> basis = alg.basis_in_window(phi.window().n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);

  LemmaReport rep;
  long attempts = 0;
  const long max_attempts = 200L * count + 10000;
  while (rep.checked < count && attempts < max_attempts) {
    ++attempts;
    const BasisVector &x = basis[pick(rng)], &y = basis[pick(rng)],
                      &u = basis[pick(rng)], &v = basis[pick(rng)];
    if (!admissible_quadruple(phi.window(), x.degree, y.degree, u.degree,
                              v.degree, phi.shift()))
      continue;
    ++rep.checked;
    Element r = quad_residual(phi, Element(x), Element(y), Element(u),
                              Element(v));
    if (!r.is_zero()) {
      ++rep.failures;
      if (rep.items.size() < 8)
        rep.items.push_back({"(" + x.str() + ", " + y.str() + "; " + u.str() +
                                 ", " + v.str() + ")",
                             false, false, r.str()});
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

using nlohmann::json;

namespace {

mpz_class table_bigint(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("coefficient table: integer or string expected");
}

json scalar_part(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

BilinearMapCoeffs load_bimap_table(const json& doc, const AlgebraSpec& alg,
                                   const Window& window) {
  if (!doc.is_object() || !doc.contains("gamma") || !doc.contains("shift2") ||
      !doc.contains("entries"))
    throw std::invalid_argument(
        "coefficient table: needs 'gamma', 'shift2', 'entries'");
  int g = doc["gamma"].get<int>();
  if (g != 0 && g != 1)
    throw std::invalid_argument("coefficient table: gamma must be 0 or 1");
  BilinearMapCoeffs phi(alg, window, g == 0 ? Parity::even : Parity::odd,
                        HalfInt::from_doubled(doc["shift2"].get<int>()));
  for (const auto& e : doc["entries"]) {
    if (!e.contains("i") || !e.contains("j") || !e.contains("out"))
      throw std::invalid_argument(
          "coefficient table: entry needs 'i', 'j', 'out'");
    BasisVector i{e["i"][0].get<std::string>(),
                  HalfInt::from_doubled(e["i"][1].get<int>())};
    BasisVector j{e["j"][0].get<std::string>(),
                  HalfInt::from_doubled(e["j"][1].get<int>())};
    if (!is_canonical_pair(i, j))
      throw std::invalid_argument("coefficient table: non-canonical pair (" +
                                  i.str() + ", " + j.str() + ")");
    Element val;
    for (const auto& t : e["out"]) {
      if (!t.is_array() || t.size() != 4)
        throw std::invalid_argument(
            "coefficient table: out term must be [family,deg2,numer,denom]");
      val.add_term(BasisVector{t[0].get<std::string>(),
                               HalfInt::from_doubled(t[1].get<int>())},
                   Scalar(table_bigint(t[2]), table_bigint(t[3])));
    }
    phi.set_coeff(i, j, std::move(val));
  }
  return phi;
}

json serialize_bimap_table(const BilinearMapCoeffs& phi) {
  json doc;
  doc["gamma"] = int(phi.gamma());
  doc["shift2"] = phi.shift().doubled;
  doc["entries"] = json::array();
  for (const auto& [pair, val] : phi.coeffs()) {
    json out = json::array();
    for (const auto& [b, c] : val.terms())
      out.push_back({b.family, b.degree.doubled, scalar_part(c.num()),
                     scalar_part(c.den())});
    doc["entries"].push_back(
        {{"i", {pair.first.family, pair.first.degree.doubled}},
         {"j", {pair.second.family, pair.second.degree.doubled}},
         {"out", out}});
  }
  return doc;
}

}  // namespace svb
