#include <random>
#include <set>

#include "doctest.h"
#include "unipot/weyl.hpp"

using namespace unipot;

namespace {

Rat q(long long n, long long d = 1) { return Rat(n, d); }

Weight random_weight(const RootSystem& rs, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-6, 6);
  Weight w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) w.set_twice(i, 2 * dist(rng));
  return w;
}

}  // namespace

TEST_CASE("reflect: pinned cases and involution") {
  const RootSystem& g2 = root_system(Type::G2);
  // s_2(alpha_2) = -alpha_2
  Weight a2 = weight_from_dynkin(2, {-1, 2});
  CHECK(reflect(g2, a2, 1) == weight_from_dynkin(2, {1, -2}));

  const RootSystem& f4 = root_system(Type::F4);
  CHECK(reflect(f4, weight_from_dynkin(4, {0, 0, 1, 0}), 2) ==
        weight_from_dynkin(4, {0, 1, -1, 1}));

  std::mt19937 rng(3);
  for (Type t : {Type::G2, Type::F4, Type::E6, Type::E7, Type::E8}) {
    const RootSystem& rs = root_system(t);
    for (int it = 0; it < 1000; ++it) {
      Weight w = random_weight(rs, rng);
      int i = static_cast<int>(rng() % rs.rank);
      CHECK(reflect(rs, reflect(rs, w, i), i) == w);
    }
  }
  CHECK_THROWS(reflect(g2, a2, 5));
}

TEST_CASE("dominant_conjugate: pinned cases") {
  const RootSystem& g2 = root_system(Type::G2);
  auto [dom, word] = dominant_conjugate(g2, weight_from_dynkin(2, {-1, 2}));
  CHECK(dom == weight_from_dynkin(2, {0, 1}));
  CHECK(apply_word(g2, word, weight_from_dynkin(2, {-1, 2})) == dom);

  // printed equivalence for E7 (section with the non-birational orbits)
  Weight pre = ambient_to_dynkin(Type::E7, {q(1), q(1), q(-1), q(-1), q(-3), q(-3), q(3), q(3)});
  Weight target =
      ambient_to_dynkin(Type::E7, {q(1), q(1), q(-1), q(-1), q(-1), q(-1), q(-3), q(5)});
  CHECK(dominant_conjugate(root_system(Type::E7), pre).first == target);

  // dominant input: empty word
  auto [d2, w2] = dominant_conjugate(g2, weight_from_dynkin(2, {1, 1}));
  CHECK(d2 == weight_from_dynkin(2, {1, 1}));
  CHECK(w2.letters.empty());
}

TEST_CASE("dominant_conjugate independent of reflection strategy") {
  std::mt19937 rng(17);
  for (Type t : {Type::G2, Type::F4, Type::E6}) {
    const RootSystem& rs = root_system(t);
    LeviDatum full = LeviDatum::full(rs);
    for (int it = 0; it < 1000; ++it) {
      Weight w = random_weight(rs, rng);
      Weight dom = dominant_conjugate(rs, w).first;
      // random-negative strategy
      Weight v = w;
      while (true) {
        std::vector<int> neg;
        for (int i = 0; i < rs.rank; ++i)
          if (v.twice(i) < 0) neg.push_back(i);
        if (neg.empty()) break;
        v = reflect(rs, v, neg[rng() % neg.size()]);
      }
      CHECK(v == dom);
    }
  }
}

TEST_CASE("weyl_orbit sizes") {
  const RootSystem& g2 = root_system(Type::G2);
  CHECK(weyl_orbit(g2, weight_from_dynkin(2, {1, 1})).size() == 12);
  CHECK(weyl_orbit(g2, weight_from_dynkin(2, {0, 1})).size() == 6);
  CHECK(weyl_orbit(g2, Weight(2)).size() == 1);
  CHECK_THROWS_AS(weyl_orbit(g2, weight_from_dynkin(2, {1, 1}), 5), ResourceLimitError);
}

TEST_CASE("stabilizer_order") {
  const RootSystem& g2 = root_system(Type::G2);
  CHECK(stabilizer_order(g2, weight_from_dynkin(2, {0, 1})) == 2);
  CHECK(stabilizer_order(g2, weight_from_dynkin(2, {1, 1})) == 1);

  const RootSystem& f4 = root_system(Type::F4);
  // dominant (0,0,1,0): vanishing nodes {1,2,4} give A2+A1
  CHECK(stabilizer_order(f4, weight_from_dynkin(4, {0, 0, 1, 0})) == 12);
}

TEST_CASE("orbit size times stabilizer equals |W|") {
  std::mt19937 rng(23);
  for (Type t : {Type::G2, Type::F4, Type::E6}) {
    const RootSystem& rs = root_system(t);
    for (int it = 0; it < 100; ++it) {
      Weight w(rs.rank);
      std::uniform_int_distribution<int> dist(0, 2);
      for (int i = 0; i < rs.rank; ++i) w.set_twice(i, 2 * dist(rng));
      long long orbit = static_cast<long long>(weyl_orbit(rs, w).size());
      CHECK(orbit * stabilizer_order(rs, w) == rs.weyl_order);
    }
  }
}

TEST_CASE("longest_element lengths and action") {
  const RootSystem& g2 = root_system(Type::G2);
  WeylWord w = longest_element(g2, LeviDatum::of({1}));
  CHECK(w.letters.size() == 1);
  CHECK(w.sign() == -1);
  CHECK(longest_element(g2, LeviDatum::of({})).letters.empty());

  const RootSystem& f4 = root_system(Type::F4);
  CHECK(longest_element(f4, LeviDatum::of({0, 1})).letters.size() == 3);

  // negates J-coordinates of J-dominant weights; involution on the J-span
  std::mt19937 rng(5);
  for (Type t : {Type::F4, Type::E6}) {
    const RootSystem& rs = root_system(t);
    for (int it = 0; it < 50; ++it) {
      std::vector<int> nodes;
      for (int i = 0; i < rs.rank; ++i)
        if (rng() % 2) nodes.push_back(i);
      LeviDatum J = LeviDatum::of(nodes);
      WeylWord w0 = longest_element(rs, J);
      Weight v(rs.rank);
      for (int i : J.nodes) v.set_twice(i, 2 * (1 + (int)(rng() % 3)));
      Weight u = apply_word(rs, w0, v);
      for (size_t k = 0; k < J.nodes.size(); ++k) {
        // w0 maps the J-dominant chamber to the J-antidominant one
        CHECK(u.twice(J.nodes[k]) <= 0);
      }
      CHECK(apply_word(rs, w0, apply_word(rs, w0, v)) == v);
    }
  }
}

TEST_CASE("orbit_quotient_bfs") {
  const RootSystem& g2 = root_system(Type::G2);
  LeviDatum J = LeviDatum::of({1});
  auto jregdom = [&](const Weight& w) {
    for (int i : J.nodes)
      if (w.twice(i) <= 0) return false;
    return true;
  };
  auto kept = orbit_quotient_bfs(g2, weight_from_dynkin(2, {0, 1}), J, jregdom);
  CHECK(kept.size() == 3);

  // J = empty degenerates to the full orbit
  LeviDatum empty = LeviDatum::of({});
  auto all = orbit_quotient_bfs(g2, weight_from_dynkin(2, {0, 1}), empty,
                                [](const Weight&) { return true; });
  auto orbit = weyl_orbit(g2, weight_from_dynkin(2, {0, 1}));
  CHECK(all == orbit);

  // members belong to the true orbit (checked on small types)
  const RootSystem& f4 = root_system(Type::F4);
  Weight v = weight_from_dynkin(4, {0, 0, 1, 0});
  LeviDatum J2 = LeviDatum::of({2});
  auto kept2 = orbit_quotient_bfs(f4, v, J2, [&](const Weight& w) {
    return w.twice(2) > 0;
  });
  auto orb2 = weyl_orbit(f4, v);
  std::set<Weight> orb2set(orb2.begin(), orb2.end());
  for (const auto& w : kept2) CHECK(orb2set.count(w) == 1);
}

TEST_CASE("enumerate_levi_group") {
  const RootSystem& f4 = root_system(Type::F4);
  CHECK(enumerate_levi_group(f4, LeviDatum::of({0, 2, 3})).size() == 12);
  CHECK(enumerate_levi_group(f4, LeviDatum::of({1, 2, 3})).size() == 48);
  CHECK_THROWS_AS(enumerate_levi_group(f4, LeviDatum::full(f4), 100), ResourceLimitError);
  // signs sum to zero over a nontrivial group
  int sum = 0;
  for (const auto& w : enumerate_levi_group(f4, LeviDatum::of({0, 2, 3}))) sum += w.sign();
  CHECK(sum == 0);
}

TEST_CASE("levi_order component classification") {
  const RootSystem& e8 = root_system(Type::E8);
  // chain 1-2-3-4-5-7-8 with 6 on 5 (0-based below)
  CHECK(levi_order(e8, LeviDatum::of({0, 1, 2, 3})) == 120);                 // A4
  CHECK(levi_order(e8, LeviDatum::of({3, 4, 5, 6})) == 192);                 // D4
  CHECK(levi_order(e8, LeviDatum::of({2, 3, 4, 5, 6})) == 1920);             // D5
  CHECK(levi_order(e8, LeviDatum::of({1, 2, 3, 4, 5, 6, 7})) == 2903040);    // E7
  CHECK(levi_order(e8, LeviDatum::of({2, 3, 4, 5, 6, 7})) == 51840);         // E6
  CHECK(levi_order(e8, LeviDatum::full(e8)) == 696729600);
  const RootSystem& f4 = root_system(Type::F4);
  CHECK(levi_order(f4, LeviDatum::of({1, 2})) == 8);     // B2
  CHECK(levi_order(f4, LeviDatum::of({1, 2, 3})) == 48); // C3
  CHECK(levi_order(f4, LeviDatum::full(f4)) == 1152);
}
