#ifndef UNIPOT_UNIP_HPP
#define UNIPOT_UNIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "unipot/catalog.hpp"
#include "unipot/weyl.hpp"

namespace unipot {

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Infinitesimal-character representative: half the Dynkin element of the
// dual orbit, read through the dual-group convention of the catalog.
Weight lambda_from_dual(const Catalog& cat, const std::string& orbit);

struct UnipFamily {
  Type type;
  std::string orbit;
  LeviDatum levi;
  std::vector<Weight> lambdas;      // lambda_1 .. lambda_r, paper order
  std::vector<std::string> pis;     // "<3>", "<2,1>", ... or "<1>"
  std::vector<Rat> dist_sq;         // |lambda_i - lambda_1|^2
};

struct PunipOptions {
  std::optional<LeviDatum> levi;    // defaults to the catalog's preferred Levi
  long long orbit_limit = 10'000'000;
  bool allow_nonbirational = false; // P is combinatorially defined regardless
};

// The set P(O) of J-dominant-regular conjugates of lambda in the lattice
// slice of lambda_1, ordered by increasing distance from lambda_1.
UnipFamily compute_punip(const Catalog& cat, const std::string& orbit,
                         const PunipOptions& opts = {});

// Catalog-free core of the P(O) computation: enumerates the J-dominant
// regular part of W.lambda, selects lambda_1 (pairs to 1 on J, dominates its
// lattice slice in the positive root cone, and dominates all other such
// candidates rationally), and returns its slice.  Empty when no candidate
// qualifies.
struct SliceFamily {
  Weight lambda1;
  std::vector<Weight> slice;  // unordered
};
std::optional<SliceFamily> punip_slice(const RootSystem& rs, const Weight& lam_dom,
                                       const LeviDatum& J, long long limit = 10'000'000);

struct CharFormula {
  std::string orbit, pi;
  std::vector<std::pair<int, Weight>> terms;  // (sign, lambda_1 - w lambda_i)
};

// Terms of the virtual-character expansion over W_J; i is 1-based.
CharFormula character_formula(const UnipFamily& fam, int i,
                              long long group_bound = 1'000'000);

struct PsiValue {
  Weight weight;                  // dominant conjugate of lambda_1 - w0(lambda_i)
  WeightedDiagram diagram;        // dual-group convention labels
  std::string dual_orbit;         // catalog label hit by the diagram
};

PsiValue psi(const Catalog& cat, const UnipFamily& fam, int i);

// Psi rows for the four non-birational orbits, served from packaged data
// transcribed from the source analysis; conjugation identities are
// re-verified against dominant_conjugate at load time.
struct SpecialPsiRow {
  std::string pi;
  std::vector<int> diagram;
  RatVec pre_ambient;        // may be empty (no ambient data)
  RatVec dominant_ambient;   // may be empty
};
struct SpecialPsiEntry {
  Type type;
  std::string orbit;
  std::vector<int> levi_nodes;  // 0-based
  std::vector<SpecialPsiRow> rows;
};

const std::vector<SpecialPsiEntry>& special_psi_table(const Catalog& cat);
const SpecialPsiEntry* find_special_psi(const Catalog& cat, const std::string& orbit);

struct AcharSommersReport {
  std::string orbit;
  std::string dual;
  struct Row {
    std::string piece_orbit;   // member of the special piece of d(O)
    std::string matched_pi;    // pi hitting its Dynkin element ("" = miss)
  };
  std::vector<Row> rows;
  std::vector<std::string> unmatched_psis;  // pi values hitting nothing
  bool passed() const {
    for (const auto& r : rows)
      if (r.matched_pi.empty()) return false;
    return true;
  }
};

AcharSommersReport verify_achar_sommers(const Catalog& cat, const std::string& orbit,
                                        const PunipOptions& opts = {});

}  // namespace unipot

#endif
