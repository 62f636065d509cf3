#include "unipot/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace unipot {

using nlohmann::json;

const LeviEntry* OrbitRecord::preferred_levi() const {
  for (const auto& l : richardson_levis)
    if (l.preferred) return &l;
  return richardson_levis.empty() ? nullptr : &richardson_levis.front();
}

int quotient_class_count(const std::string& tag) {
  if (tag == "1" || tag.empty()) return 1;
  if (tag == "S2") return 2;
  if (tag == "S3") return 3;
  if (tag == "S4") return 5;
  if (tag == "S5") return 7;
  throw IngestError("unknown quotient tag: " + tag);
}

namespace {

// Partitions of k in descending dominance order (total for k <= 5).
std::vector<std::vector<int>> partitions_desc(int k) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      all.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  auto partial_sums_ge = [](const std::vector<int>& a, const std::vector<int>& b) {
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      sa += i < a.size() ? a[i] : 0;
      sb += i < b.size() ? b[i] : 0;
      if (sa < sb) return false;
    }
    return true;
  };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    if (a == b) return false;
    return partial_sums_ge(a, b);
  });
  return all;
}

}  // namespace

std::vector<std::string> partition_labels(const std::string& tag) {
  if (tag == "1" || tag.empty()) return {"<1>"};
  int k = tag[1] - '0';
  std::vector<std::string> out;
  for (const auto& p : partitions_desc(k)) {
    std::string s = "<";
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p[i]);
    }
    s += ">";
    out.push_back(s);
  }
  return out;
}

const OrbitRecord& Catalog::at(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw IngestError("no orbit labeled '" + label + "' in " + type_to_string(type));
  return orbits[it->second];
}

const OrbitRecord* Catalog::find(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? nullptr : &orbits[it->second];
}

const OrbitRecord& Catalog::dual_of(const OrbitRecord& rec) const {
  return at(rec.dual_label);
}

std::vector<std::string> Catalog::closure_below(const std::string& label) const {
  if (!has_closure) throw IngestError("no closure data for " + type_to_string(type));
  std::vector<std::string> out;
  std::set<std::string> seen{label};
  std::vector<std::string> stack{label};
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (const auto& cov : at(cur).closure_covers)
      if (seen.insert(cov).second) stack.push_back(cov);
  }
  return out;
}

std::vector<const OrbitRecord*> Catalog::richardson_orbits() const {
  std::vector<const OrbitRecord*> out;
  for (const auto& o : orbits)
    if (o.richardson()) out.push_back(&o);
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("UNIPOT_DATA")) return env;
#ifdef UNIPOT_DATA_DIR
  return UNIPOT_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

std::vector<int> nodes_from_json(const json& j, const std::string& where, int rank) {
  std::vector<int> nodes;
  for (const auto& v : j) {
    int n = v.get<int>();
    if (n < 1 || n > rank)
      throw IngestError(where + ": node index " + std::to_string(n) + " out of range");
    nodes.push_back(n - 1);  // data files use the paper's 1-based numbering
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

void validate(const Catalog& cat);

}  // namespace

Catalog load_catalog(Type t, const std::string& path_override) {
  std::string path = path_override;
  if (path.empty()) {
    std::string fname = type_to_string(t);
    std::transform(fname.begin(), fname.end(), fname.begin(), ::tolower);
    path = default_data_dir() + "/orbits_" + fname + ".json";
  }
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open catalog file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw IngestError("catalog parse error in " + path + ": " + e.what());
  }

  static const std::set<std::string> record_keys = {
      "label", "wdd", "dim", "special", "even", "dual_label",
      "abar",  "a_group", "richardson_levis", "closure_covers"};

  Catalog cat;
  if (!j.contains("type") || !j.contains("orbits"))
    throw IngestError(path + ": expected top-level keys 'type' and 'orbits'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "type" && it.key() != "orbits")
      throw IngestError(path + ": unknown top-level key '" + it.key() + "'");
  cat.type = type_from_string(j["type"].get<std::string>());
  if (cat.type != t) throw IngestError(path + ": file is for " + j["type"].get<std::string>());
  const RootSystem& rs = root_system(t);

  for (const auto& rec : j["orbits"]) {
    OrbitRecord o;
    for (auto it = rec.begin(); it != rec.end(); ++it)
      if (!record_keys.count(it.key()))
        throw IngestError(path + ": unknown field '" + it.key() + "'");
    o.label = rec.at("label").get<std::string>();
    const std::string where = type_to_string(t) + " orbit '" + o.label + "'";
    for (const auto& v : rec.at("wdd")) o.wdd.push_back(v.get<int>());
    if (static_cast<int>(o.wdd.size()) != rs.rank)
      throw IngestError(where + ": wdd has wrong length");
    o.dim = rec.at("dim").get<int>();
    o.special = rec.at("special").get<bool>();
    o.even = rec.at("even").get<bool>();
    o.dual_label = rec.at("dual_label").get<std::string>();
    o.abar = rec.value("abar", json()) .is_null() ? "" : rec.value("abar", "");
    o.a_group = rec.value("a_group", json()).is_null() ? "" : rec.value("a_group", "");
    if (rec.contains("richardson_levis")) {
      for (const auto& lv : rec.at("richardson_levis")) {
        LeviEntry e;
        if (lv.is_array()) {
          e.nodes = nodes_from_json(lv, where, rs.rank);
        } else {
          e.nodes = nodes_from_json(lv.at("nodes"), where, rs.rank);
          e.preferred = lv.value("preferred", false);
          e.birational = lv.value("birational", true);
        }
        o.richardson_levis.push_back(std::move(e));
      }
      if (!o.richardson_levis.empty() &&
          std::none_of(o.richardson_levis.begin(), o.richardson_levis.end(),
                       [](const LeviEntry& e) { return e.preferred; }))
        o.richardson_levis.front().preferred = true;
    }
    if (rec.contains("closure_covers"))
      for (const auto& c : rec.at("closure_covers"))
        o.closure_covers.push_back(c.get<std::string>());
    cat.orbits.push_back(std::move(o));
  }
  for (size_t i = 0; i < cat.orbits.size(); ++i) {
    if (!cat.index_.emplace(cat.orbits[i].label, static_cast<int>(i)).second)
      throw IngestError(path + ": duplicate label '" + cat.orbits[i].label + "'");
  }
  cat.has_closure = std::any_of(cat.orbits.begin(), cat.orbits.end(),
                                [](const OrbitRecord& o) { return !o.closure_covers.empty(); });
  validate(cat);
  return cat;
}

namespace {

// dim of the orbit determined by its weighted diagram:
// dim g - dim g_0(h) - dim g_1(h).
int dim_from_wdd(const RootSystem& rs, const std::vector<int>& wdd) {
  int n0 = 0, n1 = 0;
  for (const auto& r : rs.pos_roots) {
    int e = 0;
    for (int i = 0; i < rs.rank; ++i) e += r[i] * wdd[i];
    if (e == 0) n0 += 2;
    if (e == 1 || e == -1) n1 += 1;
  }
  return 2 * static_cast<int>(rs.pos_roots.size()) - n0 - n1;
}

void validate(const Catalog& cat) {
  const RootSystem& rs = root_system(cat.type);
  const int npos = static_cast<int>(rs.pos_roots.size());

  for (const auto& o : cat.orbits) {
    const std::string where = type_to_string(cat.type) + " orbit '" + o.label + "'";
    bool even = true;
    for (int v : o.wdd) {
      if (v < 0 || v > 2) throw IngestError(where + ": wdd label out of {0,1,2}");
      if (v == 1) even = false;
    }
    if (even != o.even) throw IngestError(where + ": even flag contradicts wdd");
    if (dim_from_wdd(rs, o.wdd) != o.dim)
      throw IngestError(where + ": dim " + std::to_string(o.dim) +
                        " contradicts wdd (expected " +
                        std::to_string(dim_from_wdd(rs, o.wdd)) + ")");
    const OrbitRecord* dual = cat.find(o.dual_label);
    if (!dual) throw IngestError(where + ": dual_label '" + o.dual_label + "' not found");
    if (!dual->special) throw IngestError(where + ": dual orbit is not special");
    if (o.special) {
      const OrbitRecord& dd = cat.at(dual->dual_label);
      if (dd.label != o.label)
        throw IngestError(where + ": duality is not an involution on specials");
      if (o.abar.empty()) throw IngestError(where + ": special orbit lacks abar");
    }
    for (const auto& levi : o.richardson_levis) {
      LeviDatum J = LeviDatum::of(levi.nodes);
      int expect = 2 * (npos - levi_pos_roots(rs, J));
      if (expect != o.dim)
        throw IngestError(where + ": Richardson Levi " + J.str_1based() +
                          " gives dim " + std::to_string(expect));
    }
    if (o.even) {
      // McGovern: the zero-labeled nodes of an even orbit form a Richardson
      // Levi for it.
      std::vector<int> zeros;
      for (int i = 0; i < rs.rank; ++i)
        if (o.wdd[i] == 0) zeros.push_back(i);
      bool listed = false;
      for (const auto& levi : o.richardson_levis)
        if (levi.nodes == zeros) listed = true;
      if (!listed)
        throw IngestError(where + ": zero-node Levi of even orbit not listed");
    }
  }

  // wdd values must be distinct (they classify orbits).
  {
    std::set<std::vector<int>> seen;
    for (const auto& o : cat.orbits)
      if (!seen.insert(o.wdd).second)
        throw IngestError(type_to_string(cat.type) + ": duplicate wdd for '" + o.label + "'");
  }

  // Special piece sizes: |S_{d(O)}| = #classes(Abar(O)) for special O.
  for (const auto& o : cat.orbits) {
    if (!o.special) continue;
    auto piece = special_piece(cat, o.dual_label);
    int expect = quotient_class_count(o.abar);
    if (static_cast<int>(piece.size()) != expect)
      throw IngestError(type_to_string(cat.type) + " orbit '" + o.label +
                        "': special piece of dual has " + std::to_string(piece.size()) +
                        " orbits, abar=" + o.abar + " expects " + std::to_string(expect));
  }

  // Every orbit belongs to exactly one special piece (fibers of d^2).
  {
    size_t total = 0;
    for (const auto& o : cat.orbits) {
      if (!o.special) continue;
      total += special_piece(cat, o.label).size();
    }
    if (total != cat.orbits.size())
      throw IngestError(type_to_string(cat.type) +
                        ": special pieces do not partition the orbit set");
  }

  if (cat.has_closure) {
    for (const auto& o : cat.orbits)
      for (const auto& c : o.closure_covers)
        if (!cat.find(c))
          throw IngestError("closure cover '" + c + "' of '" + o.label + "' not found");
    // duality reverses the closure order on special pairs
    for (const auto& a : cat.orbits) {
      if (!a.special) continue;
      auto below = cat.closure_below(a.label);
      for (const auto& bl : below) {
        const auto& b = cat.at(bl);
        if (!b.special) continue;
        auto below_db = cat.closure_below(cat.at(b.dual_label).label);
        if (std::find(below_db.begin(), below_db.end(), a.dual_label) == below_db.end())
          throw IngestError(type_to_string(cat.type) + ": duality not order-reversing on (" +
                            a.label + ", " + b.label + ")");
      }
    }
    // d^2 characterization must agree with the closure-based pieces
    for (const auto& o : cat.orbits) {
      const auto& d2 = cat.at(cat.at(o.dual_label).dual_label);
      auto below = cat.closure_below(d2.label);
      if (std::find(below.begin(), below.end(), o.label) == below.end())
        throw IngestError(type_to_string(cat.type) + " orbit '" + o.label +
                          "' not below its special closure " + d2.label);
    }
  }
}

}  // namespace

std::vector<std::string> special_piece(const Catalog& cat, const std::string& label) {
  const OrbitRecord& base = cat.at(label);
  if (!base.special)
    throw IngestError("special_piece: orbit '" + label + "' is not special");
  std::vector<std::string> piece;
  if (cat.has_closure) {
    auto below = cat.closure_below(label);
    std::set<std::string> smaller;  // union of closures of smaller specials
    for (const auto& bl : below) {
      if (bl == label || !cat.at(bl).special) continue;
      for (const auto& x : cat.closure_below(bl)) smaller.insert(x);
    }
    for (const auto& bl : below)
      if (!smaller.count(bl)) piece.push_back(bl);
  } else {
    for (const auto& o : cat.orbits) {
      const auto& d2 = cat.at(cat.at(o.dual_label).dual_label);
      if (d2.label == label) piece.push_back(o.label);
    }
  }
  std::sort(piece.begin(), piece.end(), [&](const std::string& a, const std::string& b) {
    if (cat.at(a).dim != cat.at(b).dim) return cat.at(a).dim > cat.at(b).dim;
    return a < b;
  });
  return piece;
}

std::string orbit_by_wdd(const Catalog& cat, const WeightedDiagram& diagram) {
  const RootSystem& rs = root_system(cat.type);
  if (static_cast<int>(diagram.labels.size()) != rs.rank)
    throw IngestError("orbit_by_wdd: diagram has wrong length");
  std::vector<int> key = diagram.labels;
  if (diagram.convention == DiagramConvention::DualGroup &&
      (cat.type == Type::G2 || cat.type == Type::F4))
    std::reverse(key.begin(), key.end());
  std::vector<std::string> hits;
  for (const auto& o : cat.orbits)
    if (o.wdd == key) hits.push_back(o.label);
  if (hits.empty())
    throw IngestError("orbit_by_wdd: no orbit in " + type_to_string(cat.type) +
                      " matches the given diagram");
  if (hits.size() > 1) throw IngestError("orbit_by_wdd: diagram matches several orbits");
  return hits.front();
}

Weight wdd_as_dual_group_weight(const Catalog& cat, const OrbitRecord& rec) {
  const RootSystem& rs = root_system(cat.type);
  std::vector<int> labels = rec.wdd;
  if (cat.type == Type::G2 || cat.type == Type::F4)
    std::reverse(labels.begin(), labels.end());
  Weight w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) w.t[i] = static_cast<int16_t>(2 * labels[i]);
  return w;
}

}  // namespace unipot
