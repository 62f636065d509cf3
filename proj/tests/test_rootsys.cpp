#include <random>

#include "doctest.h"
#include "unipot/rootsys.hpp"

using namespace unipot;

namespace {

Rat q(long long n, long long d = 1) { return Rat(n, d); }

// Independent oracle: pairings of an ambient vector against a locally
// hard-coded copy of the printed simple roots.
Weight oracle_pairings(Type t, const RatVec& v) {
  std::vector<RatVec> simples;
  const Rat h(1, 2);
  if (t == Type::G2)
    simples = {{q(-2), q(1), q(1)}, {q(1), q(-1), q(0)}};
  else if (t == Type::F4)
    simples = {{q(0), q(1), q(-1), q(0)},
               {q(0), q(0), q(1), q(-1)},
               {q(0), q(0), q(0), q(1)},
               {h, -h, -h, -h}};
  else
    REQUIRE(false);
  const RootSystem& rs = root_system(t);
  Weight w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rat p = Rat(2) * dot(v, simples[i]) / dot(simples[i], simples[i]);
    Rat twice = p * Rat(2);
    REQUIRE(twice.is_integer());
    w.set_twice(i, static_cast<int>(twice.num));
  }
  return w;
}

Weight random_weight(const RootSystem& rs, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-6, 6);
  Weight w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) w.set_twice(i, 2 * dist(rng));
  return w;
}

}  // namespace

TEST_CASE("positive root counts and Cartan conventions") {
  CHECK(root_system(Type::G2).pos_roots.size() == 6);
  CHECK(root_system(Type::F4).pos_roots.size() == 24);
  CHECK(root_system(Type::E6).pos_roots.size() == 36);
  CHECK(root_system(Type::E7).pos_roots.size() == 63);
  CHECK(root_system(Type::E8).pos_roots.size() == 120);

  const RootSystem& g2 = root_system(Type::G2);
  // a[i][j] = <alpha_j, alpha_i^vee>
  CHECK(g2.cartan[0][0] == 2);
  CHECK(g2.cartan[0][1] == -1);
  CHECK(g2.cartan[1][0] == -3);
  CHECK(g2.cartan[1][1] == 2);

  for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (int j = 0; j < rs.rank; ++j) {
        if (i == j) continue;
        CHECK(rs.cartan[i][j] <= 0);
        int prod = rs.cartan[i][j] * rs.cartan[j][i];
        CHECK(prod >= 0);
        CHECK(prod <= 3);
      }
    }
  }
}

TEST_CASE("F4 root length multiset") {
  const RootSystem& rs = root_system(Type::F4);
  int long_roots = 0, short_roots = 0;
  for (const auto& n2 : rs.pos_root_norm2) {
    if (n2 == Rat(2)) ++long_roots;
    else if (n2 == Rat(1)) ++short_roots;
    else CHECK(false);
  }
  CHECK(long_roots == 12);   // 24 counting both signs
  CHECK(short_roots == 12);
}

TEST_CASE("pairings from ambient simple roots reproduce the Cartan matrix") {
  for (Type t : {Type::G2, Type::F4, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (int i = 0; i < rs.rank; ++i) {
      Weight col = ambient_to_dynkin(t, rs.ambient_simple[i]);
      for (int j = 0; j < rs.rank; ++j) CHECK(col.twice(j) == 2 * rs.cartan[j][i]);
    }
  }
}

TEST_CASE("ambient_to_dynkin examples") {
  // G2 table entry lambda_1 of the subregular family
  Weight w = ambient_to_dynkin(Type::G2, {q(0), q(-1), q(1)});
  CHECK(w == oracle_pairings(Type::G2, {q(0), q(-1), q(1)}));
  CHECK(w.twice(0) == 0);
  CHECK(w.twice(1) == 2);

  // zero vector
  CHECK(ambient_to_dynkin(Type::G2, {q(0), q(0), q(0)}).is_zero());

  // F4 table entry (1/2,0,0,1/2): oracle gives (0,-1/2,1,0)
  RatVec v{Rat(1, 2), q(0), q(0), Rat(1, 2)};
  Weight f = ambient_to_dynkin(Type::F4, v);
  CHECK(f == oracle_pairings(Type::F4, v));
  CHECK(f.twice(0) == 0);
  CHECK(f.twice(1) == -1);
  CHECK(f.twice(2) == 2);
  CHECK(f.twice(3) == 0);

  CHECK_THROWS(ambient_to_dynkin(Type::G2, {q(1), q(0)}));          // dimension
  CHECK_THROWS(ambient_to_dynkin(Type::E6, RatVec(6, q(0))));       // unsupported
}

TEST_CASE("dynkin_to_root_coords examples") {
  const RootSystem& g2 = root_system(Type::G2);
  Weight alpha2 = weight_from_dynkin(2, {-1, 2});
  RatVec c = dynkin_to_root_coords(g2, alpha2);
  CHECK(c[0] == q(0));
  CHECK(c[1] == q(1));

  Weight theta = weight_from_dynkin(2, {1, 0});
  c = dynkin_to_root_coords(g2, theta);
  CHECK(c[0] == q(2));
  CHECK(c[1] == q(3));

  c = dynkin_to_root_coords(g2, Weight(2));
  CHECK(c[0] == q(0));
  CHECK(c[1] == q(0));
}

TEST_CASE("invariant norm matches ambient arithmetic") {
  // differences of the G2 table rows
  Weight a = ambient_to_dynkin(Type::G2, {q(1), q(0), q(-1)});
  CHECK(invariant_norm_sq(root_system(Type::G2), a) == q(2));
  Weight b = ambient_to_dynkin(Type::G2, {q(1), q(1), q(-2)});
  CHECK(invariant_norm_sq(root_system(Type::G2), b) == q(6));
  CHECK(invariant_norm_sq(root_system(Type::G2), Weight(2)) == q(0));

  std::mt19937 rng(7);
  for (Type t : {Type::G2, Type::F4, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (int it = 0; it < 50; ++it) {
      Weight w = random_weight(rs, rng);
      RatVec amb = dynkin_to_ambient(rs, w);
      CHECK(invariant_norm_sq(rs, w) == dot(amb, amb));
    }
  }
}

TEST_CASE("roots as weights: reflection and coroot pairing") {
  for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (size_t r = 0; r < rs.pos_roots.size(); ++r) {
      CHECK(pairing_with_coroot(rs, rs.pos_root_wts[r], static_cast<int>(r)) == q(2));
    }
  }
}

TEST_CASE("norm invariance under simple reflections") {
  std::mt19937 rng(11);
  for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (int it = 0; it < 1000; ++it) {
      Weight w = random_weight(rs, rng);
      int i = static_cast<int>(rng() % rs.rank);
      CHECK(invariant_norm_sq(rs, reflect(rs, w, i)) == invariant_norm_sq(rs, w));
    }
  }
}

TEST_CASE("root coordinates reconstruct pairings") {
  std::mt19937 rng(13);
  for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (int it = 0; it < 1000; ++it) {
      Weight w = random_weight(rs, rng);
      RatVec c = dynkin_to_root_coords(rs, w);
      for (int j = 0; j < rs.rank; ++j) {
        Rat p;
        for (int k = 0; k < rs.rank; ++k) p += c[k] * Rat(rs.cartan[j][k]);
        CHECK(p == Rat(w.twice(j), 2));
      }
    }
  }
}

TEST_CASE("unknown type label rejected") {
  CHECK_THROWS_AS(type_from_string("X9"), std::invalid_argument);
}
