#include "unipot/ktypes.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <unordered_map>

namespace unipot {

namespace {

Weight rho(const RootSystem& rs) {
  Weight r(rs.rank);
  for (int i = 0; i < rs.rank; ++i) r.t[i] = 2;
  return r;
}

bool below_in_root_cone(const RootSystem& rs, const Weight& lo, const Weight& hi) {
  for (const Rat& c : dynkin_to_root_coords(rs, hi - lo))
    if (!c.is_integer() || c.num < 0) return false;
  return true;
}

std::shared_ptr<const WeightSystem> compute_weight_system(const RootSystem& rs,
                                                          const Weight& mu) {
  if (!mu.dominant() || !mu.is_integral())
    throw ComputeError("weight_system: mu must be dominant integral, got " + mu.str());
  auto ws = std::make_shared<WeightSystem>();
  ws->mu = mu;

  // Dominant weights below mu: closure under "subtract a positive root,
  // re-dominate" starting from mu.
  std::unordered_map<Weight, long long, Weight::Hash> mult;
  std::vector<Weight> order{mu};
  mult[mu] = 0;
  for (size_t at = 0; at < order.size(); ++at) {
    Weight nu = order[at];
    for (const auto& beta : rs.pos_root_wts) {
      Weight x = dominant_conjugate(rs, nu - beta).first;
      if (mult.count(x)) continue;
      if (!below_in_root_cone(rs, x, mu)) continue;
      mult.emplace(x, 0);
      order.push_back(x);
    }
  }
  auto height = [&](const Weight& nu) {
    Rat h;
    for (const Rat& c : dynkin_to_root_coords(rs, mu - nu)) h += c;
    return h.num;  // integer by construction
  };
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const Weight r = rho(rs);
  const Rat top = inner(rs, mu + r, mu + r);
  mult[mu] = 1;
  for (size_t at = 1; at < order.size(); ++at) {
    const Weight& nu = order[at];
    Rat acc;
    for (const auto& beta : rs.pos_root_wts) {
      for (int k = 1;; ++k) {
        Weight x = nu;
        for (int i = 0; i < rs.rank; ++i)
          x.t[i] = static_cast<int16_t>(x.t[i] + k * beta.t[i]);
        Weight dom = dominant_conjugate(rs, x).first;
        auto it = mult.find(dom);
        if (it == mult.end() || it->second == 0) break;
        acc += Rat(it->second) * inner(rs, x, beta);
      }
    }
    Rat denom = top - inner(rs, nu + r, nu + r);
    Rat m = Rat(2) * acc / denom;
    if (!m.is_integer() || m.num <= 0)
      throw ComputeError("Freudenthal produced a non-positive multiplicity at " + nu.str());
    mult[nu] = m.num;
  }

  for (const auto& nu : order) {
    long long m = mult.at(nu);
    ws->dominant.emplace_back(nu, m);
    ws->dim += m * (rs.weyl_order ? rs.weyl_order / stabilizer_order(rs, nu)
                                  : static_cast<long long>(weyl_orbit(rs, nu).size()));
  }
  return ws;
}

}  // namespace

long long WeightSystem::mult_of_dominant(const Weight& nu) const {
  for (const auto& [w, m] : dominant)
    if (w == nu) return m;
  return 0;
}

std::shared_ptr<const WeightSystem> weight_system(const RootSystem& rs, const Weight& mu) {
  static std::mutex mu_lock;
  static std::map<std::pair<std::string, Weight>, std::shared_ptr<const WeightSystem>> cache;
  std::lock_guard<std::mutex> lock(mu_lock);
  auto key = std::make_pair(rs.signature, mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_weight_system(rs, mu)).first;
  return it->second;
}

long long weight_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  if (!nu.is_integral()) return 0;
  Weight dom = dominant_conjugate(rs, nu).first;
  if (!below_in_root_cone(rs, dom, mu)) return 0;
  return weight_system(rs, mu)->mult_of_dominant(dom);
}

std::map<Weight, long long> branch_to_levi(const RootSystem& rs, const Weight& mu,
                                           const LeviDatum& J) {
  auto ws = weight_system(rs, mu);

  // Full weight multiset with a J-height key for peeling order.
  std::vector<Rat> jh(rs.rank);  // functional: sum of pairings with J-coroots
  for (size_t r = 0; r < rs.pos_roots.size(); ++r) {
    bool inside = true;
    for (int i = 0; i < rs.rank && inside; ++i)
      if (rs.pos_roots[r][i] && !J.contains(i)) inside = false;
    if (!inside) continue;
    for (int i = 0; i < rs.rank; ++i) {
      Weight e(rs.rank);
      e.t[i] = 2;  // pairing 1 at node i
      jh[i] += pairing_with_coroot(rs, e, static_cast<int>(r));
    }
  }
  long long scale = 1;
  for (const auto& c : jh) scale = std::lcm(scale, c.den);
  auto jheight = [&](const Weight& w) {
    long long s = 0;
    for (int i = 0; i < rs.rank; ++i) s += (scale * jh[i].num / jh[i].den) * w.t[i];
    return s;
  };

  std::unordered_map<Weight, long long, Weight::Hash> remaining;
  std::priority_queue<std::pair<long long, Weight>> heap;
  for (const auto& [nu, m] : ws->dominant)
    for (const auto& w : weyl_orbit(rs, nu)) {
      remaining[w] += m;
      heap.emplace(jheight(w), w);
    }

  // Per-component weight systems assembled in full coordinates.
  std::vector<std::vector<int>> comps;
  {
    std::vector<int> left = J.nodes;
    while (!left.empty()) {
      std::vector<int> comp{left.front()};
      left.erase(left.begin());
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto it = left.begin(); it != left.end(); ++it) {
          bool adj = false;
          for (int c : comp)
            if (rs.cartan[c][*it] != 0) adj = true;
          if (adj) {
            comp.push_back(*it);
            left.erase(it);
            grew = true;
            break;
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(comp);
    }
  }
  static std::mutex sub_lock;
  static std::map<std::pair<std::string, std::vector<int>>, std::shared_ptr<RootSystem>>
      sub_cache;
  std::vector<std::shared_ptr<RootSystem>> subs;
  {
    std::lock_guard<std::mutex> lock(sub_lock);
    for (const auto& comp : comps) {
      auto key = std::make_pair(rs.signature, comp);
      auto it = sub_cache.find(key);
      if (it == sub_cache.end())
        it = sub_cache.emplace(key, std::make_shared<RootSystem>(sub_root_system(rs, comp)))
                 .first;
      subs.push_back(it->second);
    }
  }

  std::map<Weight, long long> out;
  while (!heap.empty()) {
    auto [h, hw] = heap.top();
    heap.pop();
    auto it = remaining.find(hw);
    if (it == remaining.end() || it->second == 0) continue;
    long long m = it->second;

    for (int i : J.nodes)
      if (hw.t[i] < 0)
        throw ComputeError("branch_to_levi: peeled weight is not J-dominant");

    // L-character of the constituent with highest weight hw: convolve the
    // component weight systems, carried back to full coordinates.
    std::vector<std::pair<Weight, long long>> lweights{{hw, 1}};
    for (size_t c = 0; c < comps.size(); ++c) {
      const auto& comp = comps[c];
      const RootSystem& sub = *subs[c];
      Weight muC(static_cast<int>(comp.size()));
      for (size_t k = 0; k < comp.size(); ++k) muC.t[k] = hw.t[comp[k]];
      auto wsC = weight_system(sub, muC);
      std::vector<std::pair<Weight, long long>> deltas;  // full-coordinate shifts
      for (const auto& [nuC, mC] : wsC->dominant)
        for (const auto& wC : weyl_orbit(sub, nuC)) {
          RatVec cc = dynkin_to_root_coords(sub, muC - wC);
          Weight delta(rs.rank);
          for (size_t k = 0; k < comp.size(); ++k) {
            if (!cc[k].is_integer())
              throw ComputeError("branch_to_levi: non-integral component shift");
            for (int j = 0; j < rs.rank; ++j)
              delta.t[j] = static_cast<int16_t>(
                  delta.t[j] + cc[k].num * rs.simple_root_wt(comp[k]).t[j]);
          }
          deltas.emplace_back(delta, mC);
        }
      std::vector<std::pair<Weight, long long>> next;
      next.reserve(lweights.size() * deltas.size());
      for (const auto& [v, mv] : lweights)
        for (const auto& [d, md] : deltas) next.emplace_back(v - d, mv * md);
      lweights = std::move(next);
    }

    for (const auto& [w, mw] : lweights) {
      auto rit = remaining.find(w);
      if (rit == remaining.end() || rit->second < m * mw)
        throw ComputeError("branch_to_levi: inconsistent peel at " + w.str());
      rit->second -= m * mw;
    }
    out[hw] += m;
  }
  for (const auto& [w, cnt] : remaining)
    if (cnt != 0) throw ComputeError("branch_to_levi: leftover weights");
  return out;
}

long long unip_ktype_mult(const RootSystem& rs, const CharFormula& cf, const Weight& mu) {
  long long total = 0;
  for (const auto& [sign, nu] : cf.terms)
    total += sign * weight_multiplicity(rs, mu, nu);
  return total;
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, int cutoff) {
  std::vector<Weight> out;
  Weight w(rs.rank);
  std::function<void(int, int)> rec = [&](int node, int left) {
    if (node == rs.rank) {
      out.push_back(w);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      w.t[node] = static_cast<int16_t>(2 * c);
      rec(node + 1, left - c);
    }
    w.t[node] = 0;
  };
  rec(0, cutoff);
  std::sort(out.begin(), out.end());
  return out;
}

KMultiplicityReport vogan_check(const Catalog& cat, const UnipFamily& fam, int i,
                                int cutoff) {
  const RootSystem& rs = root_system(cat.type);
  KMultiplicityReport rep;
  rep.orbit = fam.orbit;
  rep.pi = fam.pis[i - 1];
  rep.cutoff = cutoff;
  CharFormula cf = character_formula(fam, i);
  Weight key = dominant_conjugate(rs, fam.lambdas[0] - fam.lambdas[i - 1], fam.levi).first;
  for (const auto& mu : dominant_weights_up_to(rs, cutoff)) {
    KMultiplicityReport::Row row;
    row.mu = mu;
    row.mult_formula = unip_ktype_mult(rs, cf, mu);
    if (row.mult_formula < 0)
      throw ComputeError("vogan_check: negative formula multiplicity at " + mu.str());
    auto branch = branch_to_levi(rs, mu, fam.levi);
    auto it = branch.find(key);
    row.mult_branch = it == branch.end() ? 0 : it->second;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace unipot
