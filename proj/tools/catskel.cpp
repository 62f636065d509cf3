// Regenerates the mechanical part of the orbit tables: Bala-Carter labels,
// weighted diagrams and dimensions, by enumerating node subsets and the
// distinguished diagrams of each component (even diagrams with
// dim g_0 = dim g_2).  Also lists, for every node subset J, the dimension of
// the orbit induced from the zero orbit of the Levi of J, which is how the
// richardson_levis fields of the shipped tables were assembled and are
// cross-checked.

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unipot/rootsys.hpp"
#include "unipot/weyl.hpp"
#include "unipot/unip.hpp"

using namespace unipot;

namespace {

// Labels L_j = (alpha_j, h) of a Cartan element; reflections act by
// L_j -= 2 L_i / (a_i,a_i) * (a_j,a_i).
using Labels = RatVec;

Labels reflect_labels(const RootSystem& rs, Labels L, int i) {
  Rat f = Rat(2) * L[i] / rs.simple_norm2[i];
  for (int j = 0; j < rs.rank; ++j) L[j] -= f * rs.gram_alpha[j][i];
  return L;
}

Labels dominant_labels(const RootSystem& rs, Labels L) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank; ++i)
      if (L[i] < Rat(0)) {
        L = reflect_labels(rs, L, i);
        moved = true;
        break;
      }
  }
  return L;
}

long long root_eval(const RootSystem& rs, const std::array<int8_t, 8>& r,
                    const std::vector<long long>& labels) {
  long long e = 0;
  for (int i = 0; i < rs.rank; ++i) e += r[i] * labels[i];
  return e;
}

int dim_from_labels(const RootSystem& rs, const std::vector<long long>& labels) {
  int n0 = 0, n1 = 0;
  for (const auto& r : rs.pos_roots) {
    long long e = root_eval(rs, r, labels);
    if (e == 0) n0 += 2;
    if (e == 1 || e == -1) n1 += 1;
  }
  return 2 * static_cast<int>(rs.pos_roots.size()) - n0 - n1;
}

// Distinguished diagrams of a (sub) root system: even label vectors with
// dim g_0 = dim g_2, sorted by orbit dimension descending.
std::vector<std::vector<long long>> distinguished_diagrams(const RootSystem& rs) {
  std::vector<std::vector<long long>> out;
  for (int mask = 0; mask < (1 << rs.rank); ++mask) {
    std::vector<long long> d(rs.rank);
    for (int i = 0; i < rs.rank; ++i) d[i] = (mask >> i & 1) ? 2 : 0;
    long long n0 = 0, n2 = 0;
    for (const auto& r : rs.pos_roots) {
      long long e = root_eval(rs, r, d);
      if (e == 0) ++n0;
      if (e == 2) ++n2;
    }
    if (rs.rank + 2 * n0 == n2) out.push_back(d);
  }
  std::sort(out.begin(), out.end(),
            [&](const std::vector<long long>& a, const std::vector<long long>& b) {
              return dim_from_labels(rs, a) > dim_from_labels(rs, b);
            });
  return out;
}

struct Component {
  std::vector<int> nodes;   // parent node indices
  std::string type_name;    // "A2", "~A1", "D4", "B3", ...
  int rank() const { return static_cast<int>(nodes.size()); }
};

std::string classify_component(const RootSystem& rs, const std::vector<int>& nodes) {
  int n = static_cast<int>(nodes.size());
  int max_bond = 1, branch_node = -1;
  std::vector<int> deg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int prod = rs.cartan[nodes[a]][nodes[b]] * rs.cartan[nodes[b]][nodes[a]];
      if (prod) {
        max_bond = std::max(max_bond, prod);
        ++deg[a];
        ++deg[b];
      }
    }
  for (int a = 0; a < n; ++a)
    if (deg[a] == 3) branch_node = a;
  bool has_long = false, has_short = false;
  Rat longest = rs.simple_norm2[nodes[0]];
  for (int a = 1; a < n; ++a) longest = std::max(longest, rs.simple_norm2[nodes[a]], [](const Rat& x, const Rat& y){return x < y;});
  for (int a = 0; a < n; ++a) {
    if (rs.simple_norm2[nodes[a]] == longest) has_long = true;
    else has_short = true;
  }
  // lengths relative to the PARENT's long roots
  Rat parent_long = rs.simple_norm2[0];
  for (int i = 1; i < rs.rank; ++i)
    parent_long = parent_long < rs.simple_norm2[i] ? rs.simple_norm2[i] : parent_long;
  bool all_short = true;
  for (int a = 0; a < n; ++a)
    if (rs.simple_norm2[nodes[a]] == parent_long) all_short = false;

  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (n == 2) return "B2";
    if (n == 4) return "F4";
    // n == 3: B3 = long,long,short; C3 = long,short,short
    int nlong = 0;
    for (int a = 0; a < n; ++a)
      if (rs.simple_norm2[nodes[a]] == parent_long) ++nlong;
    return nlong == 2 ? "B3" : "C3";
  }
  std::string base;
  if (branch_node < 0) base = "A" + std::to_string(n);
  else {
    int adj_leaves = 0;
    for (int b = 0; b < n; ++b) {
      if (b == branch_node) continue;
      if (rs.cartan[nodes[branch_node]][nodes[b]] && deg[b] == 1) ++adj_leaves;
    }
    if (n == 4 || adj_leaves >= 2) base = "D" + std::to_string(n);
    else base = "E" + std::to_string(n);
  }
  if (all_short && (rs.type == Type::G2 || rs.type == Type::F4)) base = "~" + base;
  return base;
}

// Literature suffixes for the non-regular distinguished diagrams, in
// descending dimension order.
std::vector<std::string> suffix_sequence(const std::string& type_name, int count) {
  if (count == 0) return {};
  if (type_name == "E6" && count == 2) return {"(a1)", "(a3)"};
  if (type_name == "E8" && count == 10)
    return {"(a1)", "(a2)", "(a3)", "(a4)", "(b4)", "(a5)", "(b5)", "(a6)", "(b6)", "(a7)"};
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back("(a" + std::to_string(i) + ")");
  return out;
}

struct OrbitInfo {
  std::string label;
  std::vector<long long> wdd;
  int dim;
};

std::vector<OrbitInfo> enumerate_orbits(const RootSystem& rs) {
  std::map<std::vector<long long>, std::string> by_wdd;
  std::map<std::string, int> label_multiplicity;

  for (int mask = 0; mask < (1 << rs.rank); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < rs.rank; ++i)
      if (mask >> i & 1) nodes.push_back(i);
    // connected components
    std::vector<Component> comps;
    {
      std::vector<int> left = nodes;
      while (!left.empty()) {
        std::vector<int> comp{left.front()};
        left.erase(left.begin());
        bool grew = true;
        while (grew) {
          grew = false;
          for (auto it = left.begin(); it != left.end(); ++it) {
            bool adj = false;
            for (int c : comp)
              if (rs.cartan[c][*it]) adj = true;
            if (adj) {
              comp.push_back(*it);
              left.erase(it);
              grew = true;
              break;
            }
          }
        }
        std::sort(comp.begin(), comp.end());
        Component C;
        C.nodes = comp;
        C.type_name = classify_component(rs, comp);
        comps.push_back(C);
      }
    }

    // distinguished choices per component
    std::vector<std::vector<std::pair<std::string, std::vector<long long>>>> choices;
    for (const auto& C : comps) {
      RootSystem sub = sub_root_system(rs, C.nodes);
      auto diags = distinguished_diagrams(sub);
      auto suffixes = suffix_sequence(C.type_name, static_cast<int>(diags.size()) - 1);
      std::vector<std::pair<std::string, std::vector<long long>>> list;
      for (size_t k = 0; k < diags.size(); ++k) {
        std::string name = C.type_name + (k == 0 ? "" : suffixes[k - 1]);
        list.emplace_back(name, diags[k]);
      }
      choices.push_back(std::move(list));
    }

    // all combinations
    std::vector<int> pick(comps.size(), 0);
    while (true) {
      // assemble h: solve (alpha_{n_i}, h) = d_i within each component span
      RatVec L(rs.rank, Rat(0));  // labels on all simple roots
      for (size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& C = comps[ci];
        const auto& d = choices[ci][pick[ci]].second;
        int m = C.rank();
        // solve G y = d with G[i][k] = (alpha_{n_i}, alpha_{n_k})
        std::vector<RatVec> G(m, RatVec(m));
        for (int i = 0; i < m; ++i)
          for (int k = 0; k < m; ++k) G[i][k] = rs.gram_alpha[C.nodes[i]][C.nodes[k]];
        RatVec y(m);
        {
          std::vector<RatVec> aug = G;
          for (int i = 0; i < m; ++i) aug[i].push_back(Rat(d[i]));
          for (int col = 0; col < m; ++col) {
            int piv = -1;
            for (int r2 = col; r2 < m; ++r2)
              if (!aug[r2][col].is_zero()) { piv = r2; break; }
            std::swap(aug[piv], aug[col]);
            Rat pv = aug[col][col];
            for (int j = 0; j <= m; ++j) aug[col][j] = aug[col][j] / pv;
            for (int r2 = 0; r2 < m; ++r2) {
              if (r2 == col || aug[r2][col].is_zero()) continue;
              Rat f = aug[r2][col];
              for (int j = 0; j <= m; ++j) aug[r2][j] -= f * aug[col][j];
            }
          }
          for (int i = 0; i < m; ++i) y[i] = aug[i][m];
        }
        // add labels of h_comp = sum y_k alpha_{n_k} on every simple root
        for (int j = 0; j < rs.rank; ++j)
          for (int k = 0; k < m; ++k) L[j] += y[k] * rs.gram_alpha[j][C.nodes[k]];
      }

      Labels dom = dominant_labels(rs, L);
      std::vector<long long> wdd(rs.rank);
      for (int j = 0; j < rs.rank; ++j) {
        if (!dom[j].is_integer()) throw std::logic_error("non-integral diagram label");
        wdd[j] = dom[j].num;
      }

      // combined label: components sorted by (rank desc, name), grouped
      std::vector<std::string> parts;
      for (size_t ci = 0; ci < comps.size(); ++ci) parts.push_back(choices[ci][pick[ci]].first);
      std::sort(parts.begin(), parts.end(), [](const std::string& a, const std::string& b) {
        auto rank_of = [](const std::string& s) {
          for (char ch : s)
            if (isdigit(ch)) return ch - '0';
          return 0;
        };
        if (rank_of(a) != rank_of(b)) return rank_of(a) > rank_of(b);
        return a < b;
      });
      std::string label;
      for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!label.empty()) label += "+";
        if (j - i > 1) label += std::to_string(j - i);
        label += parts[i];
        i = j;
      }
      if (label.empty()) label = "0";

      auto it = by_wdd.find(wdd);
      if (it == by_wdd.end()) by_wdd.emplace(wdd, label);

      int ci = static_cast<int>(pick.size()) - 1;
      while (ci >= 0) {
        if (++pick[ci] < static_cast<int>(choices[ci].size())) break;
        pick[ci] = 0;
        --ci;
      }
      if (ci < 0) break;
      if (pick.empty()) break;
    }
    if (comps.empty()) {
      std::vector<long long> zero(rs.rank, 0);
      by_wdd.emplace(zero, "0");
    }
  }

  // disambiguate duplicate labels with primes (wdd-lex order)
  std::map<std::string, std::vector<std::vector<long long>>> groups;
  for (const auto& [wdd, label] : by_wdd) groups[label].push_back(wdd);
  std::vector<OrbitInfo> out;
  for (auto& [label, wdds] : groups) {
    std::sort(wdds.begin(), wdds.end());
    for (size_t k = 0; k < wdds.size(); ++k) {
      OrbitInfo o;
      o.label = label + (wdds.size() == 1 ? "" : std::string(k + 1, '\''));
      o.wdd = wdds[k];
      o.dim = dim_from_labels(rs, wdds[k]);
      out.push_back(o);
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitInfo& a, const OrbitInfo& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label < b.label;
  });
  return out;
}

}  // namespace

// BC label of the saturation of the regular nilpotent of the Levi of
// `nodes`: dominant labels of sum of positive-root coroots of the subsystem.
std::string sat_label(const RootSystem& rs, const std::vector<int>& nodes,
                      const std::vector<OrbitInfo>& orbits) {
  RatVec L(rs.rank, Rat(0));
  RootSystem sub = sub_root_system(rs, nodes);
  for (size_t r = 0; r < sub.pos_roots.size(); ++r) {
    // coroot of the subsystem root, as an element: 2 root / (root,root)
    for (int k = 0; k < sub.rank; ++k) {
      if (!sub.pos_roots[r][k]) continue;
      Rat coef = Rat(2 * sub.pos_roots[r][k]) / sub.pos_root_norm2[r];
      for (int j = 0; j < rs.rank; ++j) L[j] += coef * rs.gram_alpha[j][nodes[k]];
    }
  }
  Labels dom = dominant_labels(rs, L);
  std::vector<long long> wdd(rs.rank);
  for (int j = 0; j < rs.rank; ++j) wdd[j] = dom[j].num;
  for (const auto& o : orbits)
    if (o.wdd == wdd) return o.label;
  return "?";
}

// Infinitesimal-character test: does W.(wdd(Y)/2) contain an element pairing
// exactly 1 on every node of J?  If so, reports r = size of the lattice
// slice through that element (= |P(O)| when Y = d(O)).
struct DualProbe {
  bool ok{false};
  int r{0};
  bool overflow{false};
};

DualProbe probe_dual(const RootSystem& rs, const std::vector<long long>& wddY,
                     const std::vector<int>& Jnodes, long long limit) {
  DualProbe res;
  std::vector<long long> labels = wddY;
  if (rs.type == Type::G2 || rs.type == Type::F4)
    std::reverse(labels.begin(), labels.end());  // dual-group node order
  Weight lam(rs.rank);
  for (int i = 0; i < rs.rank; ++i) lam.t[i] = static_cast<int16_t>(labels[i]);
  try {
    auto fam = punip_slice(rs, lam, LeviDatum::of(Jnodes), limit);
    if (fam) {
      res.ok = true;
      res.r = static_cast<int>(fam->slice.size());
    }
  } catch (const ResourceLimitError&) {
    res.overflow = true;
  }
  return res;
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: catskel <type> [--levis] [--facts] [--duals]\n";
    return 2;
  }
  const RootSystem& rs = root_system(std::string(argv[1]));
  bool levis = false, facts = false, duals = false, psi_mode = false;
  for (int a = 2; a < argc; ++a) {
    if (std::string(argv[a]) == "--levis") levis = true;
    if (std::string(argv[a]) == "--facts") facts = true;
    if (std::string(argv[a]) == "--duals") duals = true;
    if (std::string(argv[a]) == "--psi") psi_mode = true;
  }

  auto orbits = enumerate_orbits(rs);
  std::cout << "# " << type_to_string(rs.type) << ": " << orbits.size() << " orbits\n";
  for (const auto& o : orbits) {
    std::cout << o.label << "  wdd=[";
    for (int i = 0; i < rs.rank; ++i) std::cout << (i ? "," : "") << o.wdd[i];
    std::cout << "]  dim=" << o.dim << "\n";
  }

  if (levis) {
    std::cout << "\n# induced-from-zero dimensions per node subset\n";
    int npos = static_cast<int>(rs.pos_roots.size());
    for (int mask = 0; mask < (1 << rs.rank); ++mask) {
      std::vector<int> nodes;
      for (int i = 0; i < rs.rank; ++i)
        if (mask >> i & 1) nodes.push_back(i);
      LeviDatum J = LeviDatum::of(nodes);
      int d = 2 * (npos - levi_pos_roots(rs, J));
      std::cout << J.str_1based() << "  dim=" << d << "  sat=" << sat_label(rs, nodes, orbits)
                << "  candidates:";
      for (const auto& o : orbits)
        if (o.dim == d) std::cout << " " << o.label;
      std::cout << "\n";
    }
  }

  // targeted probe: --probe 1,2,3 [maxpred]
  for (int a = 2; a < argc; ++a) {
    if (std::string(argv[a]) == "--probe" && a + 1 < argc) {
      std::vector<int> nodes;
      std::string spec = argv[a + 1];
      for (size_t i = 0; i < spec.size();) {
        size_t j = spec.find(',', i);
        if (j == std::string::npos) j = spec.size();
        nodes.push_back(std::stoi(spec.substr(i, j - i)) - 1);
        i = j + 1;
      }
      long long maxpred = a + 2 < argc ? std::stoll(argv[a + 2]) : 40'000'000;
      std::cout << "# probing J=" << LeviDatum::of(nodes).str_1based() << "\n";
      for (const auto& y : orbits) {
        std::vector<long long> labels = y.wdd;
        if (rs.type == Type::G2 || rs.type == Type::F4)
          std::reverse(labels.begin(), labels.end());
        Weight lam(rs.rank);
        for (int i = 0; i < rs.rank; ++i) lam.t[i] = static_cast<int16_t>(labels[i]);
        long long pred = rs.weyl_order / stabilizer_order(rs, lam);
        if (pred > maxpred) continue;
        std::optional<SliceFamily> fam;
        try {
          fam = punip_slice(rs, lam, LeviDatum::of(nodes), maxpred);
        } catch (const ResourceLimitError&) { continue; }
        if (!fam) continue;
        int r = static_cast<int>(fam->slice.size());
        if (!(r == 1 || r == 2 || r == 3 || r == 5 || r == 7)) continue;
        std::sort(fam->slice.begin(), fam->slice.end(), [&](const Weight& p, const Weight& q) {
          return invariant_norm_sq(rs, p - fam->lambda1) < invariant_norm_sq(rs, q - fam->lambda1);
        });
        WeylWord w0 = longest_element(rs, LeviDatum::of(nodes));
        std::cout << "  d=" << y.label << " r=" << r << " psi:";
        for (const auto& li : fam->slice) {
          Weight v = fam->lambda1 - apply_word(rs, w0, li);
          Weight dom = dominant_conjugate(rs, v).first;
          std::string hit = "?";
          bool integral = true;
          std::vector<long long> diag(rs.rank);
          for (int k = 0; k < rs.rank; ++k) {
            if (dom.t[k] % 2) integral = false;
            diag[k] = dom.t[k] / 2;
          }
          if (integral) {
            std::vector<long long> key = diag;
            if (rs.type == Type::G2 || rs.type == Type::F4)
              std::reverse(key.begin(), key.end());
            for (const auto& cand : orbits)
              if (cand.wdd == key) hit = cand.label;
          }
          std::cout << " " << hit;
        }
        std::cout << "\n" << std::flush;
      }
    }
  }

  if (duals) {
    // For every W-class of Levi subsets J (dedup by saturation label), list
    // the orbits Y passing the infinitesimal-character probe: the Richardson
    // orbit of J has dim 2(N - N_J) and its dual must be a survivor, with
    // slice size r = #classes of its Lusztig quotient.
    std::cout << "\n# dual candidates per Levi class\n";
    int npos = static_cast<int>(rs.pos_roots.size());
    std::set<std::string> seen_levi;
    for (int mask = 1; mask < (1 << rs.rank); ++mask) {
      std::vector<int> nodes;
      for (int i = 0; i < rs.rank; ++i)
        if (mask >> i & 1) nodes.push_back(i);
      std::string sat = sat_label(rs, nodes, orbits);
      if (!seen_levi.insert(sat).second) continue;
      int d = 2 * (npos - levi_pos_roots(rs, LeviDatum::of(nodes)));
      std::cout << "J~" << sat << " " << LeviDatum::of(nodes).str_1based() << " dim=" << d
                << " ind-candidates:";
      for (const auto& o : orbits)
        if (o.dim == d) std::cout << " " << o.label;
      std::cout << "\n  duals:";
      for (const auto& y : orbits) {
        // predicted orbit size of lambda = wdd(Y)/2
        std::vector<long long> labels = y.wdd;
        if (rs.type == Type::G2 || rs.type == Type::F4)
          std::reverse(labels.begin(), labels.end());
        Weight lam(rs.rank);
        for (int i = 0; i < rs.rank; ++i) lam.t[i] = static_cast<int16_t>(labels[i]);
        long long pred = rs.weyl_order / stabilizer_order(rs, lam);
        if (pred > 40'000'000) { continue; }
        DualProbe p = probe_dual(rs, y.wdd, nodes, 4'000'000);
        if (p.overflow) std::cout << "  " << y.label << "[big]";
        else if (p.ok && (p.r == 1 || p.r == 2 || p.r == 3 || p.r == 5 || p.r == 7))
          std::cout << "  " << y.label << "[r=" << p.r << "]";
      }
      std::cout << "\n" << std::flush;
    }
  }

  if (psi_mode) {
    // For each even orbit O (J = zero nodes) and each dual candidate passing
    // the probe, compute the family and its Psi diagrams; the diagrams are
    // the Dynkin elements of the special piece of d(O), so candidates whose
    // diagrams are not all orbit diagrams are spurious.
    std::cout << "\n# psi images for even (zero-node) families\n";
    for (const auto& o : orbits) {
      bool even = true;
      for (long long v : o.wdd)
        if (v == 1) even = false;
      if (!even) continue;
      std::vector<int> zeros;
      for (int i = 0; i < rs.rank; ++i)
        if (o.wdd[i] == 0) zeros.push_back(i);
      LeviDatum J = LeviDatum::of(zeros);
      std::cout << o.label << ":\n" << std::flush;
      for (const auto& y : orbits) {
        std::vector<long long> labels = y.wdd;
        if (rs.type == Type::G2 || rs.type == Type::F4)
          std::reverse(labels.begin(), labels.end());
        Weight lam(rs.rank);
        for (int i = 0; i < rs.rank; ++i) lam.t[i] = static_cast<int16_t>(labels[i]);
        long long pred = rs.weyl_order / stabilizer_order(rs, lam);
        if (pred > 1'500'000) continue;
        std::optional<SliceFamily> fam;
        try {
          fam = punip_slice(rs, lam, J, 1'000'000);
        } catch (const ResourceLimitError&) { continue; }
        if (!fam) continue;
        int r = static_cast<int>(fam->slice.size());
        if (!(r == 1 || r == 2 || r == 3 || r == 5 || r == 7)) continue;
        // sort slice by distance from lambda1
        std::sort(fam->slice.begin(), fam->slice.end(), [&](const Weight& a, const Weight& b) {
          return invariant_norm_sq(rs, a - fam->lambda1) < invariant_norm_sq(rs, b - fam->lambda1);
        });
        WeylWord w0 = longest_element(rs, J);
        std::cout << "  d=" << y.label << " r=" << r << " psi:";
        bool all_valid = true;
        for (const auto& li : fam->slice) {
          Weight v = fam->lambda1 - apply_word(rs, w0, li);
          Weight dom = dominant_conjugate(rs, v).first;
          std::vector<long long> diag(rs.rank);
          bool integral = true;
          for (int k = 0; k < rs.rank; ++k) {
            if (dom.t[k] % 2) integral = false;
            diag[k] = dom.t[k] / 2;
          }
          std::string hit = "?";
          if (integral) {
            std::vector<long long> key = diag;
            if (rs.type == Type::G2 || rs.type == Type::F4)
              std::reverse(key.begin(), key.end());
            for (const auto& cand : orbits)
              if (cand.wdd == key) hit = cand.label;
          }
          if (hit == "?") all_valid = false;
          std::cout << " " << hit;
        }
        std::cout << (all_valid ? "" : "  [INVALID]") << "\n" << std::flush;
      }
    }
  }

  if (facts) {
    // d(satBC(J)) = Ind_J(0): collect dim constraints per saturation label,
    // seeded by the even-orbit rule Ind_{zero nodes}(0) = O.
    std::cout << "\n# duality facts\n";
    int npos = static_cast<int>(rs.pos_roots.size());
    std::map<std::string, std::set<std::string>> cand;  // sat label -> targets
    std::map<std::string, std::string> pinned;
    for (const auto& o : orbits) {
      bool even = true;
      for (long long v : o.wdd)
        if (v == 1) even = false;
      if (!even) continue;
      std::vector<int> zeros;
      for (int i = 0; i < rs.rank; ++i)
        if (o.wdd[i] == 0) zeros.push_back(i);
      std::string sat = sat_label(rs, zeros, orbits);
      pinned["d(" + sat + ")"] = o.label;
      std::cout << "even: d(" << sat << ") = " << o.label << "\n";
    }
    for (int mask = 0; mask < (1 << rs.rank); ++mask) {
      std::vector<int> nodes;
      for (int i = 0; i < rs.rank; ++i)
        if (mask >> i & 1) nodes.push_back(i);
      LeviDatum J = LeviDatum::of(nodes);
      int d = 2 * (npos - levi_pos_roots(rs, J));
      std::string sat = sat_label(rs, nodes, orbits);
      for (const auto& o : orbits)
        if (o.dim == d) cand[sat].insert(o.label);
    }
    for (const auto& [sat, targets] : cand) {
      std::cout << "d(" << sat << ") in {";
      bool first = true;
      for (const auto& t : targets) {
        std::cout << (first ? "" : ", ") << t;
        first = false;
      }
      std::cout << "}\n";
    }
  }
  return 0;
}
