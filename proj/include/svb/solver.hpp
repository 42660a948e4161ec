#ifndef SVB_SOLVER_HPP
#define SVB_SOLVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svb/bimaps.hpp"
#include "svb/sparse.hpp"

namespace svb {

/// One unknown of the biderivation system: the coefficient of `out` in
/// phi(pair.first, pair.second), canonical pair order.
struct Unknown {
  BasisPair pair;
  BasisVector out;
};

/// Deterministic lexicographic enumeration of all unknowns for a given
/// window, parity sector and degree shift. Even self-pairs are excluded
/// (their coefficient is forced to zero by skew-supersymmetry).
class UnknownIndex {
public:
  UnknownIndex(const AlgebraSpec& alg, const Window& window, Parity gamma,
               HalfInt shift);

  int size() const { return int(list_.size()); }
  const Unknown& at(int i) const { return list_[size_t(i)]; }
  const Window& window() const { return window_; }
  Parity gamma() const { return gamma_; }
  HalfInt shift() const { return shift_; }

  /// Unknowns stored for a canonical pair (indices into the list).
  const std::vector<int>* pair_unknowns(const BasisPair& p) const;

  struct Ref {
    int index;
    int sign;
  };
  /// Resolves phi(a,b) projected on `out` for basis vectors in any order;
  /// nullopt when the coefficient is structurally or trivially zero.
  std::optional<Ref> resolve(const BasisVector& a, const BasisVector& b,
                             const BasisVector& out) const;

  /// All unknowns of phi(a,b) with the sign of the reordering.
  std::vector<Ref> resolve_pair(const BasisVector& a, const BasisVector& b,
                                int* sign_out = nullptr) const;

  bool is_interior(int i) const;

private:
  const AlgebraSpec* alg_;
  Window window_;
  Parity gamma_;
  HalfInt shift_;
  std::vector<Unknown> list_;
  std::map<BasisPair, std::vector<int>> by_pair_;
  std::map<std::pair<BasisPair, BasisVector>, int> lookup_;
};

/// Result of one (gamma, shift) solver run.
struct SolverRun {
  std::string algebra;
  Window window;
  Parity gamma = Parity::even;
  HalfInt shift;
  int unknowns = 0;
  int constraints = 0;
  int nullspace_dim = 0;
  int interior_dim = 0;
  bool is_inner = false;
  bool commuting = false;   // run of the commuting-map solver
  bool degenerate = false;  // no constraints emitted
  std::vector<Scalar> inner_coordinates;       // present iff is_inner
  std::vector<SparseVector> interior_basis;    // canonical rref rows
  std::vector<SparseVector> nullspace_basis;   // full nullspace
};

/// Assembles the Leibniz constraint rows (one block per admissible
/// homogeneous basis triple, per equation, one row per output basis vector).
/// Skew-supersymmetry is enforced structurally by the unknown index, not by
/// rows.
SparseMatrix build_bider_system(const AlgebraSpec& alg,
                                const UnknownIndex& index,
                                bool parallel = true);

SolverRun solve_bider(const AlgebraSpec& alg, const Window& window,
                      Parity gamma, HalfInt shift, bool parallel = true);

/// Unknowns of the commuting-map system: coefficient of `out` in f(in).
struct LinearUnknown {
  BasisVector in;
  BasisVector out;
};

class LinearUnknownIndex {
public:
  LinearUnknownIndex(const AlgebraSpec& alg, const Window& window,
                     Parity sector, HalfInt shift);

  int size() const { return int(list_.size()); }
  const LinearUnknown& at(int i) const { return list_[size_t(i)]; }
  const Window& window() const { return window_; }
  Parity sector() const { return sector_; }
  HalfInt shift() const { return shift_; }

  const std::vector<int>* input_unknowns(const BasisVector& in) const;
  bool is_interior(int i) const;

private:
  const AlgebraSpec* alg_;
  Window window_;
  Parity sector_;
  HalfInt shift_;
  std::vector<LinearUnknown> list_;
  std::map<BasisVector, std::vector<int>> by_input_;
};

/// Rows of [f(x),y] = (-1)^{|f||x|}[x,f(y)] over all admissible ordered
/// basis pairs.
SparseMatrix build_commuting_system(const AlgebraSpec& alg,
                                    const LinearUnknownIndex& index,
                                    bool parallel = true);

SolverRun solve_commuting(const AlgebraSpec& alg, const Window& window,
                          Parity sector,
                          HalfInt shift = HalfInt::whole(0),
                          bool parallel = true);

/// Coefficient vector of the inner map phi_lambda=1 in the unknown index
/// (zero unless gamma = even, shift = 0).
SparseVector inner_vector(const AlgebraSpec& alg, const UnknownIndex& index);

/// Coefficient vector of the identity map (zero unless sector = even,
/// shift = 0).
SparseVector identity_vector(const LinearUnknownIndex& index);

/// Materializes a nullspace vector as a bilinear map.
BilinearMapCoeffs map_from_vector(const AlgebraSpec& alg,
                                  const UnknownIndex& index,
                                  const SparseVector& v);

LinearMapCoeffs linear_map_from_vector(const AlgebraSpec& alg,
                                       const LinearUnknownIndex& index,
                                       const SparseVector& v);

/// Psi(x,y) = [f(x),y] on canonical pairs; a super-biderivation whenever f
/// is a super commuting map.
BilinearMapCoeffs psi_from_linear(const LinearMapCoeffs& f);

/// Interior basis maps of a biderivation run.
std::vector<BilinearMapCoeffs> interior_basis_maps(const AlgebraSpec& alg,
                                                   const SolverRun& run);

}  // namespace svb

#endif
