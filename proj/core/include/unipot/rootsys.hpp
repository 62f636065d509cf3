#ifndef UNIPOT_ROOTSYS_HPP
#define UNIPOT_ROOTSYS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unipot/rational.hpp"

namespace unipot {

enum class Type : uint8_t { G2, F4, E6, E7, E8 };

Type type_from_string(const std::string& s);      // throws on unknown label
std::string type_to_string(Type t);
int type_rank(Type t);
long long weyl_order_of(Type t);

// A weight stored by twice its pairings with the simple coroots:
// twice(i) = 2 * <v, alpha_i^vee>.  Every weight this engine touches is
// integral or half-integral in Dynkin coordinates, so this keeps all
// arithmetic in plain integers.
struct Weight {
  std::array<int16_t, 8> t{};
  uint8_t rank{0};

  Weight() = default;
  explicit Weight(int r) : rank(static_cast<uint8_t>(r)) { t.fill(0); }

  int16_t twice(int i) const { return t[i]; }
  void set_twice(int i, int v) { t[i] = static_cast<int16_t>(v); }

  // denom per the canonical form: 2 if any pairing is half-integral.
  int denom() const {
    for (int i = 0; i < rank; ++i)
      if (t[i] & 1) return 2;
    return 1;
  }
  // numerator of coordinate i over denom()
  long long numer(int i) const { return denom() == 2 ? t[i] : t[i] / 2; }

  bool is_integral() const { return denom() == 1; }
  bool is_zero() const {
    for (int i = 0; i < rank; ++i)
      if (t[i]) return false;
    return true;
  }
  bool dominant() const {
    for (int i = 0; i < rank; ++i)
      if (t[i] < 0) return false;
    return true;
  }
  bool regular() const {
    for (int i = 0; i < rank; ++i)
      if (t[i] == 0) return false;
    return true;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.rank == b.rank && a.t == b.t;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.t < b.t; }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a.rank);
    for (int i = 0; i < a.rank; ++i) r.t[i] = a.t[i] + b.t[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a.rank);
    for (int i = 0; i < a.rank; ++i) r.t[i] = a.t[i] - b.t[i];
    return r;
  }
  Weight operator-() const {
    Weight r(rank);
    for (int i = 0; i < rank; ++i) r.t[i] = -t[i];
    return r;
  }

  std::string str() const;  // "(0,1)" or "(1/2,0,0,1/2)" style

  struct Hash {
    size_t operator()(const Weight& w) const {
      uint64_t h = 0x9e3779b97f4a7c15ull ^ w.rank;
      for (int i = 0; i < w.rank; ++i) {
        h ^= static_cast<uint64_t>(static_cast<uint16_t>(w.t[i]));
        h *= 0x100000001b3ull;
        h ^= h >> 29;
      }
      return static_cast<size_t>(h);
    }
  };
};

// Weight from integral Dynkin coordinates.
Weight weight_from_dynkin(int rank, const std::vector<long long>& coords);
// Weight from coords/denom (denom 1 or 2).
Weight weight_from_dynkin(int rank, const std::vector<long long>& coords, int denom);

struct RootSystem {
  Type type;
  int rank;
  int ambient_dim;                     // 0 when no exact ambient embedding
  int cartan[8][8]{};                  // a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::array<int8_t, 8>> pos_roots;  // simple-root coordinates
  std::vector<Weight> pos_root_wts;              // same roots as weights
  std::vector<Rat> pos_root_norm2;               // (alpha, alpha)
  std::vector<Rat> simple_norm2;                 // (alpha_i, alpha_i)
  std::vector<RatVec> ambient_simple;            // paper's ambient simple roots
  std::vector<std::vector<Rat>> inv_cartan;      // A^{-1}
  std::vector<std::vector<Rat>> gram_alpha;      // (alpha_i, alpha_j)
  long long weyl_order;

  // root alpha_k as a weight (column k of pairings)
  const Weight& simple_root_wt(int k) const { return simple_wts_[k]; }

  std::vector<Weight> simple_wts_;
  std::string signature;  // cache key: Cartan matrix + symmetrizer

  // Integer form of the inverse Cartan matrix: inv_cartan = inv_int / det.
  long long cartan_det{1};
  long long inv_int[8][8]{};

  // c_int[i] = 2*det * (root coordinate i of v); exact in integers.
  void root_coords_int(const Weight& v, long long out[8]) const {
    for (int i = 0; i < rank; ++i) {
      long long s = 0;
      for (int j = 0; j < rank; ++j) s += inv_int[i][j] * v.t[j];
      out[i] = s;
    }
  }
};

const RootSystem& root_system(Type t);            // cached, immutable
const RootSystem& root_system(const std::string& label);

// Root system spanned by a subset of simple nodes (any union of components);
// inherits the parent's invariant form.  Node k of the result is nodes[k].
RootSystem sub_root_system(const RootSystem& parent, const std::vector<int>& nodes);

// s_i(v), exact involution on twice-coordinates.
Weight reflect(const RootSystem& rs, const Weight& v, int i);

// <v, alpha^vee> for a positive root given by index into pos_roots; exact.
Rat pairing_with_coroot(const RootSystem& rs, const Weight& v, int root_idx);

// W-invariant form, normalized to the paper's ambient lengths.
Rat inner(const RootSystem& rs, const Weight& a, const Weight& b);
Rat invariant_norm_sq(const RootSystem& rs, const Weight& v);

// coefficients c with v = sum c_i alpha_i (exact rationals)
RatVec dynkin_to_root_coords(const RootSystem& rs, const Weight& v);

// Conversions against the paper's ambient embeddings (G2, F4, E7, E8).
// E6 is rejected: its printed ambient basis has an irrational coordinate.
Weight ambient_to_dynkin(Type t, const RatVec& ambient);
RatVec dynkin_to_ambient(const RootSystem& rs, const Weight& v);

std::string ambient_str(const RatVec& v);

}  // namespace unipot

#endif
