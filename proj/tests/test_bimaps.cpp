#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svb/bimaps.hpp"
#include "svb/catalog.hpp"

using namespace svb;

namespace {

BasisVector L(int m) { return {"L", HalfInt::whole(m)}; }
BasisVector G2(int k2) { return {"G", HalfInt::from_doubled(k2)}; }

// Not a biderivation: phi(L_i, L_j) = L_{i+j} on canonical non-self pairs.
BilinearMapCoeffs bad_table(const AlgebraSpec& alg, const Window& w) {
  BilinearMapCoeffs phi(alg, w, Parity::even, HalfInt::whole(0));
  for (int i = -w.n; i <= w.n; ++i)
    for (int j = i + 1; j <= w.n; ++j) {
      if (std::abs(i + j) > w.n) continue;
      phi.set_coeff(L(i), L(j), Element(L(i + j)));
    }
  return phi;
}

}  // namespace

TEST_CASE("window invariants") {
  CHECK_THROWS_AS(Window(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Window(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Window(3, -1), std::invalid_argument);
  Window w(6, 2);
  CHECK(w.contains(HalfInt::whole(6)));
  CHECK(!w.contains(HalfInt::from_doubled(13)));
  CHECK(w.interior(HalfInt::whole(-4)));
  CHECK(!w.interior(HalfInt::whole(5)));
}

TEST_CASE("triple and quadruple admissibility") {
  Window w(4, 0);
  HalfInt z = HalfInt::whole(0);
  CHECK(admissible_triple(w, HalfInt::whole(1), HalfInt::whole(1),
                          HalfInt::whole(1), z));
  // total degree 5 escapes the window
  CHECK(!admissible_triple(w, HalfInt::whole(2), HalfInt::whole(2),
                           HalfInt::whole(1), z));
  // a nonzero shift can push the image out even when brackets stay inside
  CHECK(!admissible_triple(w, HalfInt::whole(1), HalfInt::whole(1),
                           HalfInt::whole(1), HalfInt::whole(2)));
  CHECK(admissible_quadruple(w, HalfInt::whole(1), HalfInt::whole(1),
                             HalfInt::whole(1), HalfInt::whole(1), z));
  CHECK(!admissible_quadruple(w, HalfInt::whole(2), HalfInt::whole(2),
                              HalfInt::whole(2), HalfInt::whole(2), z));
}

TEST_CASE("inner map evaluates to lambda times the bracket") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(6, 0);
  auto phi = inner_map(sv0, w, Scalar(2));
  CHECK(eval_bimap(phi, Element(L(0)), Element(G2(6))) ==
        Element(G2(6), Scalar(6)));
  CHECK(eval_bimap(phi, Element(L(1)), Element(L(2))) ==
        Element(L(3), Scalar(2)));
  // swapped even-even arguments flip the sign
  CHECK(eval_bimap(phi, Element(L(2)), Element(L(1))) ==
        Element(L(3), Scalar(-2)));
  // odd-odd arguments are symmetric
  CHECK(phi.coeff(G2(4), G2(2)) == phi.coeff(G2(2), G2(4)));
  // even self-pairs are structurally zero
  CHECK(phi.coeff(L(3), L(3)).is_zero());
}

TEST_CASE("set_coeff validates its inputs") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(4, 0);
  BilinearMapCoeffs phi(sv0, w, Parity::even, HalfInt::whole(0));
  // non-canonical order
  CHECK_THROWS_AS(phi.set_coeff(L(2), L(1), Element(L(3))),
                  std::invalid_argument);
  // wrong output degree (1 + 2 + 0 != 4)
  CHECK_THROWS_AS(phi.set_coeff(L(1), L(2), Element(L(4))),
                  std::invalid_argument);
  // wrong output parity for an even-sector map on an even pair
  CHECK_THROWS_AS(phi.set_coeff(L(1), L(2), Element(G2(6))),
                  std::invalid_argument);
  // nonzero value on an even self-pair
  CHECK_THROWS_AS(phi.set_coeff(L(2), L(2), Element(L(4))),
                  std::invalid_argument);
  // outside the window
  CHECK_THROWS_AS(phi.set_coeff(L(5), L(-2), Element(L(3))),
                  std::invalid_argument);
  phi.set_coeff(L(1), L(2), Element(L(3), Scalar(7)));
  CHECK(phi.coeff(L(1), L(2)) == Element(L(3), Scalar(7)));
}

TEST_CASE("skew residual vanishes structurally") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(6, 0);
  auto phi = bad_table(sv0, w);
  // even the non-biderivation table is skew by construction
  CHECK(residual_skew(phi, Element(L(1)), Element(L(2))).is_zero());
  auto inner = inner_map(sv0, w, Scalar(1));
  CHECK(residual_skew(inner, Element(G2(2)), Element(G2(4))).is_zero());
  CHECK(residual_skew(inner, Element(L(1)), Element(G2(4))).is_zero());
}

TEST_CASE("Leibniz residuals vanish for inner maps") {
  for (auto& alg : {make_super_virasoro(HalfInt::whole(0)),
                    make_super_virasoro(HalfInt::from_doubled(1))}) {
    Window w(5, 0);
    auto phi = inner_map(alg, w, Scalar(-3, 2));
    auto rep = leibniz_sweep(phi);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
    CHECK(rep.failures == 0);
  }
}

TEST_CASE("Leibniz residuals catch a non-biderivation table") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(6, 0);
  auto phi = bad_table(sv0, w);
  // hand value on (L_1,L_2,L_3):
  //   phi([L_1,L_2],L_3) = phi(L_3,L_3) = 0
  //   [L_1,phi(L_2,L_3)] = [L_1,L_5] = 4 L_6
  //   [phi(L_1,L_3),L_2] = [L_4,L_2] = -2 L_6
  Element r = residual_left_leibniz(phi, Element(L(1)), Element(L(2)),
                                    Element(L(3)));
  CHECK(r == Element(L(6), Scalar(-2)));
  auto rep = leibniz_sweep(phi);
  CHECK(!rep.pass);
  CHECK(rep.failures > 0);
}

TEST_CASE("quad residual separates inner maps from the bad table") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(8, 0);
  auto inner = inner_map(sv0, w, Scalar(4));
  CHECK(quad_residual(inner, Element(L(1)), Element(L(2)), Element(L(1)),
                      Element(L(3)))
            .is_zero());
  auto phi = bad_table(sv0, w);
  // hand value: [L_3,[L_1,L_3]] - [[L_1,L_2],L_4] = 2 L_7 - L_7
  Element r = quad_residual(phi, Element(L(1)), Element(L(2)), Element(L(1)),
                            Element(L(3)));
  CHECK(r == Element(L(7), Scalar(1)));
}

TEST_CASE("quad sweep is deterministic and passes for inner maps") {
  auto sv05 = make_super_virasoro(HalfInt::from_doubled(1));
  Window w(6, 0);
  auto phi = inner_map(sv05, w, Scalar(1));
  auto a = quad_sweep(phi, 50);
  auto b = quad_sweep(phi, 50);
  CHECK(a.pass);
  CHECK(a.checked == 50);
  CHECK(b.checked == a.checked);
  CHECK(b.failures == a.failures);
}

TEST_CASE("self-bracket check flags odd-total pairs") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(6, 0);
  auto phi = inner_map(sv0, w, Scalar(3));
  std::vector<std::pair<Element, Element>> pairs{
      {Element(L(1)), Element(L(2))},   // even total: checked
      {Element(G2(2)), Element(G2(4))}, // even total: checked
      {Element(L(1)), Element(G2(2))},  // odd total: hypothesis not met
  };
  auto rep = check_lemma_selfbracket(phi, pairs);
  CHECK(rep.pass);
  CHECK(rep.checked == 3);
  CHECK(rep.flagged == 1);
  CHECK(rep.failures == 0);
  REQUIRE(rep.items.size() == 1);
  CHECK(rep.items[0].flagged);
}

TEST_CASE("commutant check passes for inner maps") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(6, 2);
  auto phi = inner_map(sv0, w, Scalar(5));
  auto rep = check_lemma_commutant(phi, sv0, w);
  CHECK(rep.pass);
  CHECK(rep.failures == 0);
}

TEST_CASE("coefficient tables round-trip through json") {
  auto sv05 = make_super_virasoro(HalfInt::from_doubled(1));
  Window w(4, 0);
  auto phi = inner_map(sv05, w, Scalar(-7, 3));
  auto doc = serialize_bimap_table(phi);
  auto back = load_bimap_table(doc, sv05, w);
  CHECK(back == phi);
  CHECK(serialize_bimap_table(back) == doc);
}

TEST_CASE("table loader rejects non-canonical pair order") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(4, 0);
  auto doc = nlohmann::json::parse(R"({
    "gamma": 0, "shift2": 0,
    "entries": [ { "i": ["L", 4], "j": ["L", 2],
                   "out": [["L", 6, "1", "1"]] } ]
  })");
  CHECK_THROWS_AS(load_bimap_table(doc, sv0, w), std::invalid_argument);
}

TEST_CASE("table loader rejects inhomogeneous entries") {
  auto sv0 = make_super_virasoro(HalfInt::whole(0));
  Window w(4, 0);
  auto doc = nlohmann::json::parse(R"({
    "gamma": 0, "shift2": 0,
    "entries": [ { "i": ["L", 2], "j": ["L", 4],
                   "out": [["L", 8, "1", "1"]] } ]
  })");
  CHECK_THROWS_AS(load_bimap_table(doc, sv0, w), std::invalid_argument);
}
