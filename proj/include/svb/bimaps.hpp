#ifndef SVB_BIMAPS_HPP
#define SVB_BIMAPS_HPP

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "svb/algebra.hpp"

namespace svb {

/// Finite truncation window: unknowns live on |degree| <= n; claims are made
/// only about the interior |degree| <= n - b.
struct Window {
  int n = 1;
  int b = 0;

  Window() = default;
  Window(int n_, int b_) : n(n_), b(b_) {
    if (n < 1 || b < 0 || b >= n) throw std::invalid_argument("invalid window");
  }

  bool contains(HalfInt d) const { return std::abs(d.doubled) <= 2 * n; }
  bool interior(HalfInt d) const { return std::abs(d.doubled) <= 2 * (n - b); }

  bool operator==(const Window&) const = default;
};

using BasisPair = std::pair<BasisVector, BasisVector>;

/// True if (i,j) is in canonical order: i <= j under (family, degree).
inline bool is_canonical_pair(const BasisVector& i, const BasisVector& j) {
  return !(j < i);
}

/// A triple of basis degrees is admissible iff every intermediate bracket
/// and map output stays inside the window (shift = the map's degree shift).
bool admissible_triple(const Window& w, HalfInt dx, HalfInt dy, HalfInt dz,
                       HalfInt shift);

bool admissible_quadruple(const Window& w, HalfInt dx, HalfInt dy, HalfInt du,
                          HalfInt dv, HalfInt shift);

/// Parity- and degree-homogeneous bilinear map on a window, stored as sparse
/// output Elements per canonical basis pair. Values on the opposite order
/// are derived by the skew-supersymmetry sign rule, and even self-pairs are
/// structurally zero.
class BilinearMapCoeffs {
public:
  BilinearMapCoeffs(const AlgebraSpec& alg, Window window, Parity gamma,
                    HalfInt shift)
      : alg_(&alg), window_(window), gamma_(gamma), shift_(shift) {}

  const AlgebraSpec& algebra() const { return *alg_; }
  const Window& window() const { return window_; }
  Parity gamma() const { return gamma_; }
  HalfInt shift() const { return shift_; }
  const std::map<BasisPair, Element>& coeffs() const { return coeffs_; }

  /// Stores phi(i,j) for a canonical pair; checks homogeneity and window.
  void set_coeff(const BasisVector& i, const BasisVector& j, Element value);

  /// phi(a,b) for basis vectors in any order (sign rule applied).
  Element coeff(const BasisVector& a, const BasisVector& b) const;

  bool operator==(const BilinearMapCoeffs&) const = default;

private:
  const AlgebraSpec* alg_;
  Window window_;
  Parity gamma_;
  HalfInt shift_;
  std::map<BasisPair, Element> coeffs_;
};

/// Degree- and parity-homogeneous linear map on a window.
class LinearMapCoeffs {
public:
  LinearMapCoeffs(const AlgebraSpec& alg, Window window, Parity sector,
                  HalfInt shift)
      : alg_(&alg), window_(window), sector_(sector), shift_(shift) {}

  const AlgebraSpec& algebra() const { return *alg_; }
  const Window& window() const { return window_; }
  Parity sector() const { return sector_; }
  HalfInt shift() const { return shift_; }
  const std::map<BasisVector, Element>& coeffs() const { return coeffs_; }

  void set_coeff(const BasisVector& i, Element value);
  Element coeff(const BasisVector& i) const;

private:
  const AlgebraSpec* alg_;
  Window window_;
  Parity sector_;
  HalfInt shift_;
  std::map<BasisVector, Element> coeffs_;
};

/// phi_lambda(x,y) = lambda [x,y] on all canonical pairs whose output fits
/// in the window; gamma = even, shift = 0.
BilinearMapCoeffs inner_map(const AlgebraSpec& alg, const Window& window,
                            const Scalar& lambda);

/// f(x) = x on the window; even sector, shift 0.
LinearMapCoeffs identity_map(const AlgebraSpec& alg, const Window& window);

Element eval_bimap(const BilinearMapCoeffs& phi, const Element& x,
                   const Element& y);
Element eval_linear(const LinearMapCoeffs& f, const Element& x);

/// phi(x,y) + (-1)^{|x||y|} phi(y,x).
Element residual_skew(const BilinearMapCoeffs& phi, const Element& x,
                      const Element& y);

/// phi([x,y],z) - (-1)^{|phi||x|}[x,phi(y,z)] - (-1)^{|y||z|}[phi(x,z),y].
Element residual_left_leibniz(const BilinearMapCoeffs& phi, const Element& x,
                              const Element& y, const Element& z);

/// phi(x,[y,z]) - [phi(x,y),z] - (-1)^{(|phi|+|x|)|y|}[y,phi(x,z)].
Element residual_right_leibniz(const BilinearMapCoeffs& phi, const Element& x,
                               const Element& y, const Element& z);

/// [phi(x,y),[u,v]] - (-1)^{|phi|(|x|+|y|)}[[x,y],phi(u,v)]; vanishes for
/// every super-biderivation.
Element quad_residual(const BilinearMapCoeffs& phi, const Element& x,
                      const Element& y, const Element& u, const Element& v);

struct LemmaItem {
  std::string label;
  bool flagged = false;  // hypothesis not met, skipped
  bool pass = true;
  std::string residual;
};

struct LemmaReport {
  bool pass = true;
  long checked = 0;
  long failures = 0;
  long flagged = 0;
  std::vector<LemmaItem> items;  // failing or flagged items only
};

/// [phi(x,y),[x,y]] = 0 for pairs with even total parity; odd-total pairs
/// are flagged "hypothesis not met" and skipped.
LemmaReport check_lemma_selfbracket(
    const BilinearMapCoeffs& phi,
    const std::vector<std::pair<Element, Element>>& pairs);

/// For every interior canonical basis pair with [x,y] = 0: phi(x,y) commutes
/// with every interior basis vector (within the window).
LemmaReport check_lemma_commutant(const BilinearMapCoeffs& phi,
                                  const AlgebraSpec& alg,
                                  const Window& window);

/// Both Leibniz residuals over all admissible basis triples in the window.
LemmaReport leibniz_sweep(const BilinearMapCoeffs& phi, bool parallel = true);

/// Quad residual on `count` deterministically seeded random admissible
/// quadruples.
LemmaReport quad_sweep(const BilinearMapCoeffs& phi, int count,
                       unsigned long seed = 20230815);

/// Coefficient-table file: { "gamma":0|1, "shift2":int, "entries":[ ... ] }.
/// Rejects non-canonical pair order.
BilinearMapCoeffs load_bimap_table(const nlohmann::json& doc,
                                   const AlgebraSpec& alg,
                                   const Window& window);
nlohmann::json serialize_bimap_table(const BilinearMapCoeffs& phi);

}  // namespace svb

#endif
