#ifndef UNIPOT_SPRINGER_HPP
#define UNIPOT_SPRINGER_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unipot/catalog.hpp"
#include "unipot/weyl.hpp"

namespace unipot {

// Character table of W computed from the explicit matrix group (exact
// integer character values; Weyl group tables are rational).
struct CharTable {
  Type type;
  long long group_order{0};
  int num_classes{0};
  std::vector<long long> class_size;
  std::vector<int> class_order;      // element order per class
  std::vector<int> inverse_class;
  std::vector<int> class_sign;       // sgn character
  int identity_class{0};
  std::vector<std::vector<long long>> chars;  // chars[irrep][class]
  std::vector<long long> degrees;
  std::vector<int> b_value;          // minimal k with <chi, Sym^k(refl)> > 0

  int class_of_simple_reflection(int node) const;  // set up by the builder
  std::vector<int> simple_reflection_class;
};

// Builds the table by full enumeration of W (intended for G2/F4; E6 works
// but takes a few seconds).  Cached per type.
std::shared_ptr<const CharTable> char_table(Type t);

// Reference to a computed irreducible: degree and b-invariant, optionally
// pinned by character values on the classes of a long/short simple
// reflection when (dim, b) alone is ambiguous.
struct IrrepRef {
  long long dim{0};
  int b{0};
  std::optional<long long> on_long;
  std::optional<long long> on_short;
};

// Index of the unique irreducible matching the reference.
int resolve_irrep(const RootSystem& rs, const CharTable& table, const IrrepRef& ref);

// Multiplicity of every irreducible in Ind_{W_J}^W(sgn); exact.
std::vector<long long> induced_sign_multiplicities(const RootSystem& rs,
                                                   const CharTable& table,
                                                   const LeviDatum& J);

// The j-induced sign representation of W_J: the unique constituent of
// Ind_{W_J}^W(sgn) with b = #pos roots of J.
int j_induced_sign(const RootSystem& rs, const CharTable& table, const LeviDatum& J);

// Springer-correspondence data ingested from packaged/user files.
struct SpringerRow {
  std::string psi;             // label of the A(e)-irreducible
  long long dim_vpsi{1};
  bool in_image{true};
  IrrepRef irrep;              // computed mode; ignored when !in_image
  bool irrep_is_j_induced{false};  // sigma(O,triv) = j-induction, computed
  std::string irrep_name;      // assisted mode key into induced_sign maps
};

struct SpringerData {
  Type type;
  bool assisted{false};
  std::map<std::string, std::vector<SpringerRow>> orbits;
  // assisted mode: levi key "1,2,3" -> irrep name -> multiplicity
  std::map<std::string, std::map<std::string, long long>> induced_sign;
};

SpringerData load_springer_data(Type t, const std::string& path_override = "");

struct UnavailableDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of irreducible components of a generic moment-map fiber for the
// parabolic of J over the orbit: sum over psi of dim V_psi times the
// multiplicity of sigma(O,psi) in Ind_{W_J}^W(sgn).  Birational iff 1.
long long component_count(const Catalog& cat, const SpringerData& data,
                          const std::string& orbit, const LeviDatum& J);

}  // namespace unipot

#endif
