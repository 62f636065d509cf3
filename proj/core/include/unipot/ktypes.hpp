#ifndef UNIPOT_KTYPES_HPP
#define UNIPOT_KTYPES_HPP

#include <map>
#include <memory>
#include <vector>

#include "unipot/unip.hpp"

namespace unipot {

// Weights of the irreducible V_mu: dominant representatives with exact
// multiplicities (Freudenthal), plus the total dimension.
struct WeightSystem {
  Weight mu;
  std::vector<std::pair<Weight, long long>> dominant;
  long long dim{0};
  long long mult_of_dominant(const Weight& nu) const;
};

// Cached per (root system, mu); mu must be dominant and integral.
std::shared_ptr<const WeightSystem> weight_system(const RootSystem& rs, const Weight& mu);

// dim of the nu-weight space of V_mu (0 off-lattice / outside the hull).
long long weight_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& nu);

// Highest-weight decomposition of V_mu as a module over the Levi of J.
// Keys are J-dominant weights carrying all rank coordinates.
std::map<Weight, long long> branch_to_levi(const RootSystem& rs, const Weight& mu,
                                           const LeviDatum& J);

// Multiplicity of V_mu in the signed induced-character sum of the family row.
long long unip_ktype_mult(const RootSystem& rs, const CharFormula& cf, const Weight& mu);

// Dominant integral weights with coefficient sum <= cutoff, sorted.
std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int cutoff);

struct KMultiplicityReport {
  std::string orbit, pi;
  int cutoff{0};
  struct Row {
    Weight mu;
    long long mult_formula{0};
    long long mult_branch{0};
    bool equal() const { return mult_formula == mult_branch; }
  };
  std::vector<Row> rows;
  bool passed() const {
    for (const auto& r : rows)
      if (!r.equal()) return false;
    return true;
  }
  int mismatches() const {
    int n = 0;
    for (const auto& r : rows)
      if (!r.equal()) ++n;
    return n;
  }
};

// Two-sided K-spectrum check for family row i (1-based): the signed
// Freudenthal sums against the independent branching computation.
KMultiplicityReport vogan_check(const Catalog& cat, const UnipFamily& fam, int i,
                                int cutoff);

}  // namespace unipot

#endif
