#include "unipot/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace unipot {

Weight apply_word(const RootSystem& rs, const WeylWord& w, Weight v) {
  for (int i : w.letters) v = reflect(rs, v, i);
  return v;
}

Weight apply_word_inverse(const RootSystem& rs, const WeylWord& w, Weight v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = reflect(rs, v, *it);
  return v;
}

bool LeviDatum::contains(int i) const {
  return std::binary_search(nodes.begin(), nodes.end(), i);
}

LeviDatum LeviDatum::full(const RootSystem& rs) {
  LeviDatum J;
  for (int i = 0; i < rs.rank; ++i) J.nodes.push_back(i);
  return J;
}

LeviDatum LeviDatum::of(std::vector<int> nodes0) {
  std::sort(nodes0.begin(), nodes0.end());
  nodes0.erase(std::unique(nodes0.begin(), nodes0.end()), nodes0.end());
  LeviDatum J;
  J.nodes = std::move(nodes0);
  return J;
}

std::string LeviDatum::str_1based() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << ",";
    os << nodes[i] + 1;
  }
  os << "}";
  return os.str();
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Weyl order of a connected diagram given its node count and edge data.
long long component_order(const RootSystem& rs, const std::vector<int>& comp) {
  int n = static_cast<int>(comp.size());
  int max_bond = 1, branch = 0;
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int prod = rs.cartan[comp[a]][comp[b]] * rs.cartan[comp[b]][comp[a]];
      if (prod > 0) {
        max_bond = std::max(max_bond, prod);
        ++degree[a];
        ++degree[b];
      }
    }
  for (int a = 0; a < n; ++a)
    if (degree[a] == 3) ++branch;
  if (max_bond == 3) return 12;  // G2
  if (max_bond == 2) {
    if (n == 2) return 8;
    if (n == 3) return 48;
    if (n == 4) return 1152;      // F4
    return (1LL << n) * factorial(n);  // Bn/Cn chains inside F4 only (n<=3)
  }
  if (branch == 0) return factorial(n + 1);  // An
  // one branch node: D or E
  if (n == 6) {
    // D6 or E6: E6 has legs (1,2,2); D6 legs (1,1,3)
    // distinguish by leg multiset: count leaves adjacent to branch node
    int bnode = -1;
    for (int a = 0; a < n; ++a)
      if (degree[a] == 3) bnode = a;
    int adj_leaves = 0;
    for (int b = 0; b < n; ++b) {
      if (b == bnode) continue;
      int prod = rs.cartan[comp[bnode]][comp[b]] * rs.cartan[comp[b]][comp[bnode]];
      if (prod > 0 && degree[b] == 1) ++adj_leaves;
    }
    if (adj_leaves >= 2) return (1LL << (n - 1)) * factorial(n);  // D6
    // legs from branch: if exactly one leaf neighbor -> E6 (legs 1,2,2)
    return 51840;
  }
  if (n == 7) {
    // D7 vs E7: same leaf-neighbor test
    int bnode = -1;
    for (int a = 0; a < n; ++a)
      if (degree[a] == 3) bnode = a;
    int adj_leaves = 0;
    for (int b = 0; b < n; ++b) {
      if (b == bnode) continue;
      int prod = rs.cartan[comp[bnode]][comp[b]] * rs.cartan[comp[b]][comp[bnode]];
      if (prod > 0 && degree[b] == 1) ++adj_leaves;
    }
    if (adj_leaves >= 2) return (1LL << (n - 1)) * factorial(n);
    return 2903040;
  }
  if (n == 8) {
    int bnode = -1;
    for (int a = 0; a < n; ++a)
      if (degree[a] == 3) bnode = a;
    int adj_leaves = 0;
    for (int b = 0; b < n; ++b) {
      if (b == bnode) continue;
      int prod = rs.cartan[comp[bnode]][comp[b]] * rs.cartan[comp[b]][comp[bnode]];
      if (prod > 0 && degree[b] == 1) ++adj_leaves;
    }
    if (adj_leaves >= 2) return (1LL << (n - 1)) * factorial(n);
    return 696729600;
  }
  return (1LL << (n - 1)) * factorial(n);  // Dn, n in {4,5}
}

std::vector<std::vector<int>> components(const RootSystem& rs, const LeviDatum& J) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(J.nodes.size(), false);
  for (size_t s = 0; s < J.nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp;
    std::deque<size_t> q{s};
    used[s] = true;
    while (!q.empty()) {
      size_t a = q.front();
      q.pop_front();
      comp.push_back(J.nodes[a]);
      for (size_t b = 0; b < J.nodes.size(); ++b) {
        if (used[b]) continue;
        if (rs.cartan[J.nodes[a]][J.nodes[b]] != 0) {
          used[b] = true;
          q.push_back(b);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace

long long levi_order(const RootSystem& rs, const LeviDatum& J) {
  long long order = 1;
  for (const auto& comp : components(rs, J)) order *= component_order(rs, comp);
  return order;
}

int levi_pos_roots(const RootSystem& rs, const LeviDatum& J) {
  int count = 0;
  for (const auto& r : rs.pos_roots) {
    bool inside = true;
    for (int i = 0; i < rs.rank && inside; ++i)
      if (r[i] != 0 && !J.contains(i)) inside = false;
    if (inside) ++count;
  }
  return count;
}

std::pair<Weight, WeylWord> dominant_conjugate(const RootSystem& rs, Weight v,
                                               const LeviDatum& J) {
  WeylWord w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J.nodes) {
      if (v.t[i] < 0) {
        v = reflect(rs, v, i);
        w.letters.push_back(i);
        moved = true;
        break;
      }
    }
  }
  return {v, w};
}

std::pair<Weight, WeylWord> dominant_conjugate(const RootSystem& rs, Weight v) {
  return dominant_conjugate(rs, std::move(v), LeviDatum::full(rs));
}

long long stabilizer_order(const RootSystem& rs, const Weight& v) {
  Weight dom = dominant_conjugate(rs, v).first;
  std::vector<int> zero;
  for (int i = 0; i < rs.rank; ++i)
    if (dom.t[i] == 0) zero.push_back(i);
  return levi_order(rs, LeviDatum::of(zero));
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& v, long long limit) {
  long long predicted = rs.weyl_order / stabilizer_order(rs, v);
  if (predicted > limit)
    throw ResourceLimitError("weyl_orbit: predicted orbit size " +
                                 std::to_string(predicted) + " exceeds limit " +
                                 std::to_string(limit),
                             predicted);
  std::unordered_set<Weight, Weight::Hash> seen;
  std::deque<Weight> q{v};
  seen.insert(v);
  while (!q.empty()) {
    Weight w = q.front();
    q.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight u = reflect(rs, w, i);
      if (seen.insert(u).second) q.push_back(u);
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

WeylWord longest_element(const RootSystem& rs, const LeviDatum& J) {
  Weight v(rs.rank);
  for (int i : J.nodes) v.t[i] = 2;  // J-regular dominant
  WeylWord w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : J.nodes) {
      if (v.t[i] > 0) {
        v = reflect(rs, v, i);
        w.letters.push_back(i);
        moved = true;
        break;
      }
    }
  }
  int expect = levi_pos_roots(rs, J);
  if (static_cast<int>(w.letters.size()) != expect)
    throw std::logic_error("longest_element: word length mismatch");
  return w;
}

std::vector<Weight> orbit_quotient_bfs(const RootSystem& rs, const Weight& v,
                                       const LeviDatum& J,
                                       const std::function<bool(const Weight&)>& keep,
                                       long long limit, long long* visited) {
  auto normal = [&](Weight w) { return dominant_conjugate(rs, std::move(w), J).first; };

  // Full Levi: one W_J-orbit, the dominant representative.
  if (static_cast<int>(J.nodes.size()) == rs.rank) {
    Weight dom = normal(v);
    if (visited) *visited = 1;
    return keep(dom) ? std::vector<Weight>{dom} : std::vector<Weight>{};
  }

  // Node = J-dominant normal form of a W_J-orbit on Wv.  Edges must be taken
  // from every member of the node's W_J-orbit (a simple reflection applied
  // to the normal form alone does not connect all W_J \ W / W_v cosets), so
  // each node walks its own orbit locally; total work is linear in |Wv|.
  Weight start = normal(v);
  std::unordered_set<Weight, Weight::Hash> seen{start};
  std::deque<Weight> q{start};
  std::vector<Weight> kept;
  long long count = 0;
  std::vector<int> outside;
  for (int i = 0; i < rs.rank; ++i)
    if (!J.contains(i)) outside.push_back(i);
  while (!q.empty()) {
    Weight node = q.front();
    q.pop_front();
    ++count;
    if (keep(node)) kept.push_back(node);

    std::unordered_set<Weight, Weight::Hash> local{node};
    std::deque<Weight> lq{node};
    while (!lq.empty()) {
      Weight u = lq.front();
      lq.pop_front();
      for (int i : J.nodes) {
        Weight x = reflect(rs, u, i);
        if (local.insert(x).second) lq.push_back(x);
      }
      for (int i : outside) {
        Weight x = reflect(rs, u, i);
        if (local.count(x)) continue;  // stayed inside this W_J-orbit
        Weight nf = normal(std::move(x));
        if (seen.insert(nf).second) {
          if (static_cast<long long>(seen.size()) > limit)
            throw ResourceLimitError(
                "orbit_quotient_bfs: node count exceeded limit " + std::to_string(limit),
                static_cast<long long>(seen.size()));
          q.push_back(nf);
        }
      }
    }
  }
  if (visited) *visited = count;
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<WeylWord> enumerate_levi_group(const RootSystem& rs, const LeviDatum& J,
                                           long long bound) {
  long long order = levi_order(rs, J);
  if (order > bound)
    throw ResourceLimitError("enumerate_levi_group: |W_J| = " + std::to_string(order) +
                                 " exceeds bound " + std::to_string(bound),
                             order);
  Weight rhoJ(rs.rank);
  for (int i : J.nodes) rhoJ.t[i] = 2;
  std::unordered_map<Weight, int, Weight::Hash> index{{rhoJ, 0}};
  std::vector<WeylWord> words{{}};
  std::vector<Weight> images{rhoJ};
  std::deque<int> q{0};
  while (!q.empty()) {
    int at = q.front();
    q.pop_front();
    for (int i : J.nodes) {
      Weight u = reflect(rs, images[at], i);
      if (!index.count(u)) {
        index.emplace(u, static_cast<int>(words.size()));
        WeylWord w = words[at];
        w.letters.push_back(i);
        words.push_back(std::move(w));
        images.push_back(u);
        q.push_back(static_cast<int>(index.at(u)));
      }
    }
  }
  if (static_cast<long long>(words.size()) != order)
    throw std::logic_error("enumerate_levi_group: enumeration does not match |W_J|");
  return words;
}

}  // namespace unipot
