#ifndef UNIPOT_WEYL_HPP
#define UNIPOT_WEYL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unipot/rootsys.hpp"

namespace unipot {

// Word in the simple reflections, letters applied left-to-right:
// apply(w, v) = s_{letters.back()} ( ... s_{letters.front()}(v) ... ).
struct WeylWord {
  std::vector<int> letters;
  int sign() const { return letters.size() % 2 ? -1 : 1; }
  size_t length() const { return letters.size(); }
};

Weight apply_word(const RootSystem& rs, const WeylWord& w, Weight v);
Weight apply_word_inverse(const RootSystem& rs, const WeylWord& w, Weight v);

// Subset of simple nodes (0-based, sorted) defining a Levi subsystem.
struct LeviDatum {
  std::vector<int> nodes;
  bool contains(int i) const;
  static LeviDatum full(const RootSystem& rs);
  static LeviDatum of(std::vector<int> nodes0);
  std::string str_1based() const;
};

// Order of W_J (product over connected components of J).
long long levi_order(const RootSystem& rs, const LeviDatum& J);
// Number of positive roots supported on J.
int levi_pos_roots(const RootSystem& rs, const LeviDatum& J);

// Repeatedly reflects at the leftmost J-negative coordinate; the result has
// all J-pairings >= 0 and the returned word maps the input to the result.
std::pair<Weight, WeylWord> dominant_conjugate(const RootSystem& rs, Weight v,
                                               const LeviDatum& J);
std::pair<Weight, WeylWord> dominant_conjugate(const RootSystem& rs, Weight v);

// Order of the stabilizer of v in W: the parabolic fixed by the zero
// coordinates of the dominant representative.
long long stabilizer_order(const RootSystem& rs, const Weight& v);

struct ResourceLimitError : std::runtime_error {
  long long predicted;
  explicit ResourceLimitError(const std::string& msg, long long pred)
      : std::runtime_error(msg), predicted(pred) {}
};

// Full W-orbit of v, exact dedup; throws ResourceLimitError if the predicted
// size exceeds `limit`.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v,
                               long long limit = 10'000'000);

// Longest element of W_J as a word (length == #pos roots of J).
WeylWord longest_element(const RootSystem& rs, const LeviDatum& J);

// Walks the quotient W_J \ W v: every node is the J-dominant normal form of
// a W_J-orbit on Wv, visited exactly once.  Nodes passing `keep` are
// returned (sorted, deterministic).  `visited` reports the node count.
std::vector<Weight> orbit_quotient_bfs(
    const RootSystem& rs, const Weight& v, const LeviDatum& J,
    const std::function<bool(const Weight&)>& keep, long long limit = 10'000'000,
    long long* visited = nullptr);

// All elements of W_J as words (BFS over the orbit of a J-regular vector, so
// every word is reduced).  Throws if |W_J| > bound.
std::vector<WeylWord> enumerate_levi_group(const RootSystem& rs,
                                           const LeviDatum& J,
                                           long long bound = 1'000'000);

}  // namespace unipot

#endif
