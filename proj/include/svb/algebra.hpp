#ifndef SVB_ALGEBRA_HPP
#define SVB_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svb/grading.hpp"
#include "svb/scalar.hpp"

namespace svb {

/// One basis symbol of a graded family, e.g. L_3 or G_{-1/2}.
struct BasisVector {
  std::string family;
  HalfInt degree;

  auto operator<=>(const BasisVector&) const = default;

  std::string str() const { return family + "_" + degree.str(); }
};

/// Finite sparse linear combination of basis symbols, terms ordered by
/// (family, degree), no zero coefficients.
class Element {
public:
  Element() = default;
  explicit Element(const BasisVector& b, const Scalar& c = Scalar(1)) {
    add_term(b, c);
  }

  void add_term(const BasisVector& b, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisVector, Scalar>& terms() const { return terms_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const { return scaled(Scalar(-1)); }
  Element scaled(const Scalar& c) const;
  Element& operator+=(const Element& o);

  /// The common degree of all terms, if terms share one (zero -> nullopt).
  std::optional<HalfInt> homogeneous_degree() const;

  bool operator==(const Element&) const = default;

  std::string str() const;

private:
  std::map<BasisVector, Scalar> terms_;
};

/// Monomial c · m^powM · n^powN of a structure-constant polynomial in the
/// two degree variables.
struct PolyTerm {
  Scalar coeff;
  int pow_m = 0;
  int pow_n = 0;
};

struct BracketRule {
  std::string left;
  std::string right;
  std::string result;
  std::vector<PolyTerm> poly;
};

struct Family {
  std::string symbol;
  Parity parity = Parity::even;
  HalfInt offset;  // degree lattice is offset + ℤ
};

/// A graded Lie superalgebra given by family metadata and polynomial
/// structure-constant rules. Ordered family pairs without a listed rule are
/// derived from the opposite order by skew-supersymmetry; pairs listed in
/// neither order bracket to zero.
class AlgebraSpec {
public:
  AlgebraSpec(std::string name, std::vector<Family> families,
              std::vector<BracketRule> rules);

  const std::string& name() const { return name_; }
  const std::vector<Family>& families() const { return families_; }
  const std::vector<BracketRule>& rules() const { return rules_; }

  const Family* find_family(const std::string& symbol) const;
  bool contains(const BasisVector& b) const;
  Parity parity_of(const BasisVector& b) const;

  /// Common parity of all terms; throws on mixed parity, even for zero.
  Parity parity_of(const Element& x) const;
  bool is_parity_homogeneous(const Element& x) const;

  Element bracket_basis(const BasisVector& a, const BasisVector& b) const;
  Element bracket(const Element& x, const Element& y) const;

  /// All basis vectors with |degree| <= bound, sorted by (family, degree).
  std::vector<BasisVector> basis_in_window(int bound) const;

  bool operator==(const AlgebraSpec& o) const {
    return name_ == o.name_ && same_structure(o);
  }
  bool same_structure(const AlgebraSpec& o) const;

private:
  std::string name_;
  std::vector<Family> families_;
  std::vector<BracketRule> rules_;
  std::map<std::string, size_t> family_index_;
  std::map<std::pair<std::string, std::string>, size_t> rule_index_;

  void validate() const;
};

/// [x,y] + (-1)^{|x||y|}[y,x]; zero certifies skew-supersymmetry.
Element skew_residual(const AlgebraSpec& alg, const Element& x,
                      const Element& y);

/// [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]; zero certifies the super
/// Jacobi identity on this triple.
Element super_jacobi_residual(const AlgebraSpec& alg, const Element& x,
                              const Element& y, const Element& z);

/// Basis of {c supported on |deg| <= N-B : [c,w] = 0 for all basis w with
/// |deg w| <= N and |deg c + deg w| <= N}.
std::vector<Element> center_of_derived(const AlgebraSpec& alg, int window_n,
                                       int buffer_b);

struct SweepResult {
  long checked = 0;
  long violations = 0;
  std::vector<std::string> samples;  // first few violating tuples
};

/// Skew-supersymmetry residual over all homogeneous basis pairs with
/// |degree| <= max_degree.
SweepResult skew_sweep(const AlgebraSpec& alg, int max_degree,
                       bool parallel = true);

/// Super Jacobi residual over all homogeneous basis triples with
/// |degree| <= max_degree.
SweepResult jacobi_sweep(const AlgebraSpec& alg, int max_degree,
                         bool parallel = true);

}  // namespace svb

#endif
