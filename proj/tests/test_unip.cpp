#include <algorithm>

#include "doctest.h"
#include "unipot/unip.hpp"

using namespace unipot;

namespace {

Rat q(long long n, long long d = 1) { return Rat(n, d); }

RatVec amb(std::initializer_list<Rat> xs) { return RatVec(xs); }

// checks lambda list against printed ambient values, in order
void check_ambient(Type t, const UnipFamily& fam, const std::vector<RatVec>& expect) {
  const RootSystem& rs = root_system(t);
  REQUIRE(fam.lambdas.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(dynkin_to_ambient(rs, fam.lambdas[i]) == expect[i]);
  }
}

}  // namespace

TEST_CASE("lambda_from_dual examples") {
  Catalog g2 = load_catalog(Type::G2);
  // d(G2(a1)) = G2(a1), catalog wdd (2,0), dual-group reading (0,2), halved
  CHECK(lambda_from_dual(g2, "G2(a1)") == weight_from_dynkin(2, {0, 1}));
  // zero orbit: dual regular, lambda = rho
  CHECK(lambda_from_dual(g2, "0") == weight_from_dynkin(2, {1, 1}));

  Catalog f4 = load_catalog(Type::F4);
  // d(F4(a1)) = ~A1, wdd (0,0,0,1), reversed (1,0,0,0), halved
  CHECK(lambda_from_dual(f4, "F4(a1)") == weight_from_dynkin(4, {1, 0, 0, 0}, 2));
}

TEST_CASE("G2 golden families") {
  Catalog cat = load_catalog(Type::G2);

  UnipFamily sub = compute_punip(cat, "G2(a1)");
  CHECK(sub.pis == std::vector<std::string>{"<3>", "<2,1>", "<1,1,1>"});
  CHECK(sub.lambdas[0] == weight_from_dynkin(2, {0, 1}));
  CHECK(sub.lambdas[1] == weight_from_dynkin(2, {-1, 2}));
  CHECK(sub.lambdas[2] == weight_from_dynkin(2, {-1, 1}));
  check_ambient(Type::G2, sub,
                {amb({q(0), q(-1), q(1)}), amb({q(1), q(-1), q(0)}), amb({q(1), q(0), q(-1)})});

  PsiValue p1 = psi(cat, sub, 1);
  CHECK(p1.diagram.labels == std::vector<int>{0, 1});
  CHECK(p1.dual_orbit == "A1");
  PsiValue p2 = psi(cat, sub, 2);
  CHECK(p2.diagram.labels == std::vector<int>{1, 0});
  CHECK(p2.dual_orbit == "~A1");
  PsiValue p3 = psi(cat, sub, 3);
  CHECK(p3.diagram.labels == std::vector<int>{0, 2});
  CHECK(p3.dual_orbit == "G2(a1)");

  UnipFamily zero = compute_punip(cat, "0");
  CHECK(zero.lambdas.size() == 1);
  check_ambient(Type::G2, zero, {amb({q(-1), q(-2), q(3)})});
  PsiValue pz = psi(cat, zero, 1);
  CHECK(pz.diagram.labels == std::vector<int>{2, 2});
  CHECK(pz.dual_orbit == "G2");

  UnipFamily reg = compute_punip(cat, "G2");
  CHECK(reg.lambdas.size() == 1);
  CHECK(reg.lambdas[0].is_zero());
  CHECK(psi(cat, reg, 1).dual_orbit == "0");
}

TEST_CASE("character_formula examples") {
  Catalog cat = load_catalog(Type::G2);
  UnipFamily sub = compute_punip(cat, "G2(a1)");
  CharFormula cf = character_formula(sub, 1);
  REQUIRE(cf.terms.size() == 2);
  // terms: (+1, 0) and (-1, alpha_2)
  std::vector<std::pair<int, Weight>> terms = cf.terms;
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  CHECK(terms[0].first == 1);
  CHECK(terms[0].second.is_zero());
  CHECK(terms[1].first == -1);
  CHECK(terms[1].second == weight_from_dynkin(2, {-1, 2}));

  UnipFamily reg = compute_punip(cat, "G2");
  CharFormula cfr = character_formula(reg, 1);
  REQUIRE(cfr.terms.size() == 1);
  CHECK(cfr.terms[0].first == 1);
  CHECK(cfr.terms[0].second.is_zero());

  // signs sum to zero if W_J nontrivial
  int s = 0;
  for (auto& [sgn, w] : cf.terms) s += sgn;
  CHECK(s == 0);
}

TEST_CASE("F4 golden families (all nine rows)") {
  Catalog cat = load_catalog(Type::F4);

  struct Row {
    const char* orbit;
    std::vector<RatVec> lambdas;
    std::vector<std::vector<int>> psis;
    std::vector<const char*> duals;
  };
  const Rat h(1, 2), th(3, 2), fh(5, 2), eh(11, 2);
  std::vector<Row> table = {
      {"F4", {amb({q(0), q(0), q(0), q(0)})}, {{0, 0, 0, 0}}, {"0"}},
      {"F4(a1)",
       {amb({h, q(0), q(0), h}), amb({-h, q(0), q(0), h})},
       {{0, 0, 0, 1}, {1, 0, 0, 0}},
       {"A1", "~A1"}},
      {"F4(a2)", {amb({q(0), h, -h, h})}, {{0, 0, 1, 0}}, {"A1+~A1"}},
      {"B3", {amb({h, -h, -h, h})}, {{0, 0, 0, 2}}, {"A2"}},
      {"C3", {amb({q(0), q(1), q(0), q(-1)})}, {{2, 0, 0, 0}}, {"~A2"}},
      {"F4(a3)",
       {amb({th, h, -h, h}), amb({q(1), q(0), q(-1), q(1)}), amb({h, h, -th, h}),
        amb({h, -h, -th, h}), amb({-h, -h, -th, h})},
       {{0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 2}, {0, 1, 0, 1}, {0, 0, 2, 0}},
       {"A2+~A1", "~A2+A1", "B2", "C3(a1)", "F4(a3)"}},
      {"A2", {amb({th, -th, th, h})}, {{0, 0, 2, 2}}, {"B3"}},
      {"~A2", {amb({q(0), fh, th, h})}, {{2, 1, 0, 1}}, {"C3"}},
      {"0", {amb({eh, fh, th, h})}, {{2, 2, 2, 2}}, {"F4"}},
  };

  for (const auto& row : table) {
    CAPTURE(row.orbit);
    UnipFamily fam = compute_punip(cat, row.orbit);
    check_ambient(Type::F4, fam, row.lambdas);
    for (size_t i = 0; i < row.psis.size(); ++i) {
      PsiValue pv = psi(cat, fam, static_cast<int>(i) + 1);
      CHECK(pv.diagram.labels == row.psis[i]);
      CHECK(pv.dual_orbit == row.duals[i]);
    }
  }
}

TEST_CASE("family invariants for computed types") {
  for (Type t : {Type::G2, Type::F4, Type::E6}) {
    Catalog cat = load_catalog(t);
    const RootSystem& rs = root_system(t);
    for (const auto* rec : cat.richardson_orbits()) {
      const LeviEntry* levi = rec->preferred_levi();
      if (!levi->birational) continue;
      CAPTURE(rec->label);
      UnipFamily fam = compute_punip(cat, rec->label);
      // |P| = #classes(Abar)
      CHECK(static_cast<int>(fam.lambdas.size()) == quotient_class_count(rec->abar));
      // lambda_1 pairs to 1 on J
      for (int i : fam.levi.nodes) CHECK(fam.lambdas[0].twice(i) == 2);
      // infinitesimal character identity
      CHECK(dominant_conjugate(rs, fam.lambdas[0]).first == lambda_from_dual(cat, rec->label));
      // strictly increasing distances (enforced in compute_punip, re-check)
      for (size_t i = 0; i + 1 < fam.dist_sq.size(); ++i)
        CHECK(fam.dist_sq[i] < fam.dist_sq[i + 1]);
      // psi values are valid diagrams
      for (int i = 1; i <= static_cast<int>(fam.lambdas.size()); ++i)
        CHECK(!psi(cat, fam, i).dual_orbit.empty());
    }
  }
}

TEST_CASE("non-birational special table verified at load") {
  Catalog e7 = load_catalog(Type::E7);
  const SpecialPsiEntry* entry = find_special_psi(e7, "A4+A1");
  REQUIRE(entry != nullptr);
  CHECK(entry->rows.size() == 2);
  CHECK(entry->rows[0].diagram == std::vector<int>{0, 1, 0, 1, 0, 0, 1});

  // compute_punip refuses the non-birational case by default
  CHECK_THROWS_AS(compute_punip(e7, "A4+A1"), ComputeError);
}

TEST_CASE("achar-sommers image check on table types") {
  Catalog g2 = load_catalog(Type::G2);
  auto rep = verify_achar_sommers(g2, "G2(a1)");
  CHECK(rep.passed());
  REQUIRE(rep.rows.size() == 3);
  // piece of d(G2(a1)) = {G2(a1), ~A1, A1}, matched by <1,1,1>, <2,1>, <3>
  for (const auto& row : rep.rows) {
    if (row.piece_orbit == "A1") CHECK(row.matched_pi == "<3>");
    if (row.piece_orbit == "~A1") CHECK(row.matched_pi == "<2,1>");
    if (row.piece_orbit == "G2(a1)") CHECK(row.matched_pi == "<1,1,1>");
  }
  CHECK(rep.unmatched_psis.empty());

  Catalog f4 = load_catalog(Type::F4);
  for (const auto* rec : f4.richardson_orbits()) {
    CAPTURE(rec->label);
    auto r = verify_achar_sommers(f4, rec->label);
    CHECK(r.passed());
    CHECK(r.unmatched_psis.empty());
  }
}
