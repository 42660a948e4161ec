#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "svb/catalog.hpp"
#include "svb/solver.hpp"

using namespace svb;

namespace {

BasisVector L(int m) { return {"L", HalfInt::whole(m)}; }
BasisVector G2(int k2) { return {"G", HalfInt::from_doubled(k2)}; }

AlgebraSpec abelian_algebra() {
  return AlgebraSpec("abelian", {{"L", Parity::even, HalfInt::whole(0)}}, {});
}

}  // namespace

TEST_CASE("unknown index excludes even self-pairs and resolves signs") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  UnknownIndex idx(sv0, Window(3, 1), Parity::even, HalfInt::whole(0));
  REQUIRE(idx.size() > 0);
  for (int i = 0; i < idx.size(); ++i) {
    const Unknown& u = idx.at(i);
    CHECK(is_canonical_pair(u.pair.first, u.pair.second));
    // even self-pairs carry no unknown
    if (u.pair.first == u.pair.second)
      CHECK(sv0.parity_of(u.pair.first) == Parity::odd);
    // degree bookkeeping: out = deg i + deg j + shift
    CHECK(u.out.degree == u.pair.first.degree + u.pair.second.degree);
  }
  // swapped even-even arguments resolve with sign -1
  auto fwd = idx.resolve(L(1), L(2), L(3));
  auto rev = idx.resolve(L(2), L(1), L(3));
  REQUIRE(fwd.has_value());
  REQUIRE(rev.has_value());
  CHECK(fwd->index == rev->index);
  CHECK(fwd->sign == -rev->sign);
  // swapped odd-odd arguments resolve with sign +1
  auto f2 = idx.resolve(G2(2), G2(4), L(3));
  auto r2 = idx.resolve(G2(4), G2(2), L(3));
  REQUIRE(f2.has_value());
  CHECK(f2->sign == r2->sign);
}

TEST_CASE("inner map solves the assembled system") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  for (int n = 3; n <= 5; ++n) {
    UnknownIndex idx(sv0, Window(n, 2), Parity::even, HalfInt::whole(0));
    auto m = build_bider_system(sv0, idx);
    CHECK(apply(m, inner_vector(sv0, idx)).is_zero());
  }
}

TEST_CASE("system ranks agree with the dense fraction-free oracle") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  auto sv05 = make_super_virasoro(HalfInt::from_doubled(1));
  for (const AlgebraSpec* alg : {&sv0, &sv05}) {
    for (int n = 3; n <= 5; ++n) {
      for (Parity gamma : {Parity::even, Parity::odd}) {
        for (int s2 : {-2, 0, 2}) {
          UnknownIndex idx(*alg, Window(n, 2), gamma,
                           HalfInt::from_doubled(s2));
          if (idx.size() == 0) continue;
          auto m = build_bider_system(*alg, idx);
          auto r = rref(m);
          CHECK(int(r.pivot_cols.size()) == oracle::dense_rank(m));
          CHECK(int(nullspace(m).size()) == oracle::dense_nullity(m));
        }
      }
    }
  }
}

TEST_CASE("serial and parallel assembly build the same matrix") {
  auto sv05 = make_super_virasoro(HalfInt::from_doubled(1));
  UnknownIndex idx(sv05, Window(4, 2), Parity::even, HalfInt::whole(0));
  CHECK(build_bider_system(sv05, idx, true) ==
        build_bider_system(sv05, idx, false));
}

TEST_CASE("even zero-shift biderivations are inner on small windows") {
  for (const char* name : {"sv0", "sv0.5"}) {
    auto alg = resolve_algebra(name);
    auto run = solve_bider(alg, Window(5, 2), Parity::even, HalfInt::whole(0));
    CHECK(run.interior_dim == 1);
    CHECK(run.is_inner);
    REQUIRE(run.inner_coordinates.size() == 1);
    CHECK(!run.inner_coordinates[0].is_zero());
    CHECK(run.nullspace_dim == int(run.nullspace_basis.size()));
    CHECK(run.interior_dim == int(run.interior_basis.size()));
    // the interior basis really spans the restricted inner map
    UnknownIndex idx(alg, run.window, run.gamma, run.shift);
    SparseVector inner = inner_vector(alg, idx);
    SparseVector restricted{inner.dim, {}};
    for (auto& [i, c] : inner.entries)
      if (idx.is_interior(i)) restricted.entries.emplace_back(i, c);
    auto joined = run.interior_basis;
    joined.push_back(restricted);
    CHECK(span_dim(joined, inner.dim) == run.interior_dim);
  }
}

TEST_CASE("odd sector and shifted sectors have empty interiors") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  auto odd = solve_bider(sv0, Window(5, 2), Parity::odd, HalfInt::whole(0));
  CHECK(odd.interior_dim == 0);
  // vacuously inner: the zero interior space equals the zero inner span
  CHECK(odd.is_inner);
  CHECK(odd.inner_coordinates.empty());
  for (int s2 : {-2, 2, 4}) {
    auto run = solve_bider(sv0, Window(5, 2), Parity::even,
                           HalfInt::from_doubled(s2));
    CHECK(run.interior_dim == 0);
  }
}

TEST_CASE("an abelian algebra gives a degenerate unconstrained run") {
  auto ab = abelian_algebra();
  auto run = solve_bider(ab, Window(4, 2), Parity::even, HalfInt::whole(0));
  CHECK(run.degenerate);
  CHECK(run.constraints == 0);
  CHECK(run.nullspace_dim == run.unknowns);
  CHECK(run.unknowns > 0);
}

TEST_CASE("interior basis maps come out on the interior window") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  auto run = solve_bider(sv0, Window(6, 2), Parity::even, HalfInt::whole(0));
  auto maps = interior_basis_maps(sv0, run);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0].window().n == 4);
  for (auto& [pair, val] : maps[0].coeffs()) {
    CHECK(std::abs(pair.first.degree.doubled) <= 8);
    CHECK(std::abs(pair.second.degree.doubled) <= 8);
  }
  CHECK(leibniz_sweep(maps[0]).pass);
}

TEST_CASE("identity solves the commuting system") {
  auto sv05 = make_super_virasoro(HalfInt::from_doubled(1));
  LinearUnknownIndex idx(sv05, Window(5, 2), Parity::even, HalfInt::whole(0));
  auto m = build_commuting_system(sv05, idx);
  CHECK(apply(m, identity_vector(idx)).is_zero());
}

TEST_CASE("commuting maps are scalars in the even sector, zero in the odd") {
  for (const char* name : {"sv0", "sv0.5"}) {
    auto alg = resolve_algebra(name);
    auto even = solve_commuting(alg, Window(6, 2), Parity::even);
    CHECK(even.commuting);
    CHECK(even.interior_dim == 1);
    CHECK(even.is_inner);
    REQUIRE(even.inner_coordinates.size() == 1);
    CHECK(even.inner_coordinates[0] == Scalar(1));
    auto odd = solve_commuting(alg, Window(6, 2), Parity::odd);
    CHECK(odd.interior_dim == 0);
  }
}

TEST_CASE("commuting system rank agrees with the oracle") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  for (int n = 3; n <= 5; ++n) {
    LinearUnknownIndex idx(sv0, Window(n, 2), Parity::even, HalfInt::whole(0));
    auto m = build_commuting_system(sv0, idx);
    CHECK(int(nullspace(m).size()) == oracle::dense_nullity(m));
  }
}

TEST_CASE("a scaled identity induces the matching inner biderivation") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(4, 0);
  LinearMapCoeffs f(sv0, w, Parity::even, HalfInt::whole(0));
  for (const BasisVector& b : sv0.basis_in_window(w.n))
    f.set_coeff(b, Element(b, Scalar(3)));
  auto psi = psi_from_linear(f);
  auto inner = inner_map(sv0, w, Scalar(3));
  CHECK(psi.coeffs() == inner.coeffs());
  CHECK(leibniz_sweep(psi).pass);
}
