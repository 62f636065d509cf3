#ifndef UNIPOT_CATALOG_HPP
#define UNIPOT_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unipot/rootsys.hpp"
#include "unipot/weyl.hpp"

namespace unipot {

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LeviEntry {
  std::vector<int> nodes;  // 0-based, sorted
  bool preferred{false};
  bool birational{true};
};

struct OrbitRecord {
  std::string label;
  std::vector<int> wdd;     // weighted Dynkin diagram, paper node order
  int dim{0};
  bool special{false};
  bool even{false};
  std::string dual_label;
  std::string abar;     // "1","S2".."S5"; "" when not recorded (non-special)
  std::string a_group;  // component group A(O) tag, informational
  std::vector<LeviEntry> richardson_levis;
  std::vector<std::string> closure_covers;

  bool richardson() const { return !richardson_levis.empty(); }
  const LeviEntry* preferred_levi() const;
};

// Number of conjugacy classes of the tagged group ("1", "S2".."S5").
int quotient_class_count(const std::string& tag);

// Partition labels of S_k in descending dominance order; "<1>" for trivial.
std::vector<std::string> partition_labels(const std::string& tag);

struct Catalog {
  Type type;
  std::vector<OrbitRecord> orbits;
  bool has_closure{false};

  const OrbitRecord& at(const std::string& label) const;
  const OrbitRecord* find(const std::string& label) const;
  const OrbitRecord& dual_of(const OrbitRecord& rec) const;

  // Orbits below `label` in the closure order (closure data required).
  std::vector<std::string> closure_below(const std::string& label) const;

  std::vector<const OrbitRecord*> richardson_orbits() const;

 private:
  friend Catalog load_catalog(Type, const std::string&);
  std::map<std::string, int> index_;
};

// Loads and validates the orbit table; path empty = packaged data file.
Catalog load_catalog(Type t, const std::string& path_override = "");

// Orbits of the special piece S_{label}: contained in the closure of the
// special orbit `label` but in no smaller special orbit closure.  Uses the
// closure order when the table carries covers, and the d^2 characterization
// (x in S_O iff d(d(x)) == O) otherwise.
std::vector<std::string> special_piece(const Catalog& cat, const std::string& label);

enum class DiagramConvention { Self, DualGroup };

struct WeightedDiagram {
  std::vector<int> labels;
  DiagramConvention convention{DiagramConvention::Self};
};

// Unique orbit whose (possibly dual-convention) diagram matches. For G2/F4
// the dual group's diagram is the catalog diagram with node order reversed;
// for the self-dual E types the convention flag is a no-op.
std::string orbit_by_wdd(const Catalog& cat, const WeightedDiagram& diagram);

// Catalog wdd read as a weight of g (twice-pairings = labels when read in
// the dual convention); used for h^vee of dual orbits.
Weight wdd_as_dual_group_weight(const Catalog& cat, const OrbitRecord& rec);

// Directory containing the packaged data files (compile-time default,
// overridable with the UNIPOT_DATA environment variable).
std::string default_data_dir();

}  // namespace unipot

#endif
