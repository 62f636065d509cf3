#include "unipot/unip.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace unipot {

using nlohmann::json;

Weight lambda_from_dual(const Catalog& cat, const std::string& orbit) {
  const OrbitRecord& rec = cat.at(orbit);
  const OrbitRecord& dual = cat.dual_of(rec);
  Weight hvee = wdd_as_dual_group_weight(cat, dual);
  Weight lam(root_system(cat.type).rank);
  for (int i = 0; i < lam.rank; ++i) lam.t[i] = hvee.t[i] / 2;
  return lam;
}

std::optional<SliceFamily> punip_slice(const RootSystem& rs, const Weight& lam_dom,
                                       const LeviDatum& J, long long limit) {
  auto keep = [&](const Weight& w) {
    for (int i : J.nodes)
      if (w.t[i] <= 0) return false;
    return true;
  };
  std::vector<Weight> K = orbit_quotient_bfs(rs, lam_dom, J, keep, limit, nullptr);
  if (K.empty()) return std::nullopt;

  const long long mod = 2 * rs.cartan_det;
  // scaled root coordinates and lattice-coset key per element
  struct Entry {
    std::array<long long, 8> c{};
    std::array<int8_t, 8> key{};
    bool ones{false};
  };
  std::vector<Entry> entries(K.size());
  for (size_t k = 0; k < K.size(); ++k) {
    long long c[8];
    rs.root_coords_int(K[k], c);
    for (int i = 0; i < rs.rank; ++i) {
      entries[k].c[i] = c[i];
      entries[k].key[i] = static_cast<int8_t>(((c[i] % mod) + mod) % mod);
    }
    bool ones = true;
    for (int i : J.nodes)
      if (K[k].t[i] != 2) ones = false;
    entries[k].ones = ones;
  }

  // Per lattice coset: a candidate is viable if its scaled root coordinates
  // dominate every member of the coset.
  std::map<std::array<int8_t, 8>, std::vector<size_t>> cosets;
  for (size_t k = 0; k < K.size(); ++k) cosets[entries[k].key].push_back(k);

  std::vector<size_t> viable;
  for (const auto& [key, members] : cosets) {
    for (size_t c : members) {
      if (!entries[c].ones) continue;
      bool top = true;
      for (size_t m : members) {
        for (int i = 0; i < rs.rank && top; ++i)
          if (entries[c].c[i] < entries[m].c[i]) top = false;
        if (!top) break;
      }
      if (top) viable.push_back(c);
    }
  }
  if (viable.empty()) return std::nullopt;

  // lambda_1 dominates every viable candidate across cosets.
  std::optional<size_t> best;
  for (size_t c : viable) {
    bool top = true;
    for (size_t other : viable) {
      for (int i = 0; i < rs.rank && top; ++i)
        if (entries[c].c[i] < entries[other].c[i]) top = false;
      if (!top) break;
    }
    if (top) {
      if (best) return std::nullopt;  // not unique
      best = c;
    }
  }
  if (!best) return std::nullopt;

  SliceFamily out;
  out.lambda1 = K[*best];
  for (size_t k = 0; k < K.size(); ++k)
    if (entries[k].key == entries[*best].key) out.slice.push_back(K[k]);
  return out;
}

UnipFamily compute_punip(const Catalog& cat, const std::string& orbit,
                         const PunipOptions& opts) {
  const RootSystem& rs = root_system(cat.type);
  const OrbitRecord& rec = cat.at(orbit);
  if (!rec.richardson())
    throw ComputeError("orbit '" + orbit + "' has no Richardson Levi in the catalog");

  LeviDatum J;
  if (opts.levi) {
    J = *opts.levi;
  } else {
    const LeviEntry* levi = rec.preferred_levi();
    if (!levi->birational && !opts.allow_nonbirational)
      throw ComputeError("orbit '" + orbit +
                         "': preferred moment map is not birational; P(O) data is "
                         "served from the packaged table (see psi)");
    J = LeviDatum::of(levi->nodes);
  }

  Weight lam_dom = lambda_from_dual(cat, orbit);
  auto fam_opt = punip_slice(rs, lam_dom, J, opts.orbit_limit);
  if (!fam_opt)
    throw ComputeError("orbit '" + orbit + "': no unique lambda_1 pairing to 1 on " +
                       J.str_1based() + " dominates the family");
  const Weight lam1 = fam_opt->lambda1;

  UnipFamily fam;
  fam.type = cat.type;
  fam.orbit = orbit;
  fam.levi = J;
  fam.lambdas = fam_opt->slice;

  std::stable_sort(fam.lambdas.begin(), fam.lambdas.end(),
                   [&](const Weight& a, const Weight& b) {
                     return invariant_norm_sq(rs, a - lam1) < invariant_norm_sq(rs, b - lam1);
                   });
  for (const auto& mu : fam.lambdas)
    fam.dist_sq.push_back(invariant_norm_sq(rs, mu - lam1));
  for (size_t i = 0; i + 1 < fam.dist_sq.size(); ++i)
    if (!(fam.dist_sq[i] < fam.dist_sq[i + 1]))
      throw ComputeError("orbit '" + orbit + "': tie in |lambda_i - lambda_1|; the " +
                         "strict ordering fails (distance " + fam.dist_sq[i].str() + ")");

  int expect = quotient_class_count(rec.abar);
  if (static_cast<int>(fam.lambdas.size()) != expect)
    throw ComputeError("orbit '" + orbit + "': |P(O)| = " +
                       std::to_string(fam.lambdas.size()) + " but Abar=" + rec.abar +
                       " has " + std::to_string(expect) + " classes");

  const long long mod = 2 * rs.cartan_det;
  for (size_t i = 0; i < fam.lambdas.size(); ++i) {
    long long c[8];
    rs.root_coords_int(lam1 - fam.lambdas[i], c);
    for (int k = 0; k < rs.rank; ++k)
      if (c[k] < 0 || c[k] % mod)
        throw ComputeError("orbit '" + orbit +
                           "': lambda_1 - lambda_i is not a nonnegative root sum");
  }

  fam.pis = partition_labels(rec.abar);
  return fam;
}

CharFormula character_formula(const UnipFamily& fam, int i, long long group_bound) {
  if (i < 1 || i > static_cast<int>(fam.lambdas.size()))
    throw ComputeError("character_formula: index out of range");
  const RootSystem& rs = root_system(fam.type);
  CharFormula cf;
  cf.orbit = fam.orbit;
  cf.pi = fam.pis[i - 1];
  for (const auto& w : enumerate_levi_group(rs, fam.levi, group_bound)) {
    Weight term = fam.lambdas[0] - apply_word(rs, w, fam.lambdas[i - 1]);
    if (!term.is_integral())
      throw ComputeError("character_formula: non-integral term weight for " + fam.orbit);
    cf.terms.emplace_back(w.sign(), term);
  }
  return cf;
}

PsiValue psi(const Catalog& cat, const UnipFamily& fam, int i) {
  if (i < 1 || i > static_cast<int>(fam.lambdas.size()))
    throw ComputeError("psi: index out of range");
  const RootSystem& rs = root_system(fam.type);
  WeylWord w0 = longest_element(rs, fam.levi);
  Weight v = fam.lambdas[0] - apply_word(rs, w0, fam.lambdas[i - 1]);
  PsiValue out;
  out.weight = dominant_conjugate(rs, v).first;
  out.diagram.convention = DiagramConvention::DualGroup;
  for (int k = 0; k < rs.rank; ++k) {
    if (out.weight.t[k] % 2)
      throw ComputeError("psi: non-integral diagram label for " + fam.orbit);
    out.diagram.labels.push_back(out.weight.t[k] / 2);
  }
  out.dual_orbit = orbit_by_wdd(cat, out.diagram);
  return out;
}

namespace {

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::vector<SpecialPsiEntry> load_special_psi(const Catalog& cat7or8) {
  std::string path = default_data_dir() + "/psi_special.json";
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path);
  json j;
  in >> j;
  std::vector<SpecialPsiEntry> out;
  for (const auto& e : j.at("orbits")) {
    SpecialPsiEntry entry;
    entry.type = type_from_string(e.at("type").get<std::string>());
    entry.orbit = e.at("orbit").get<std::string>();
    for (const auto& n : e.at("levi")) entry.levi_nodes.push_back(n.get<int>() - 1);
    std::sort(entry.levi_nodes.begin(), entry.levi_nodes.end());
    for (const auto& r : e.at("rows")) {
      SpecialPsiRow row;
      row.pi = r.at("pi").get<std::string>();
      for (const auto& d : r.at("diagram")) row.diagram.push_back(d.get<int>());
      if (r.contains("pre_ambient"))
        for (const auto& x : r.at("pre_ambient"))
          row.pre_ambient.push_back(rat_from_string(x.get<std::string>()));
      if (r.contains("dominant_ambient"))
        for (const auto& x : r.at("dominant_ambient"))
          row.dominant_ambient.push_back(rat_from_string(x.get<std::string>()));
      entry.rows.push_back(std::move(row));
    }
    out.push_back(std::move(entry));
  }

  // Re-verify the printed conjugation identities where ambient data exists,
  // and check the first diagram against the catalog's dual Dynkin element.
  for (const auto& entry : out) {
    if (entry.type != cat7or8.type) continue;
    const RootSystem& rs = root_system(entry.type);
    for (const auto& row : entry.rows) {
      if (!row.pre_ambient.empty()) {
        Weight pre = ambient_to_dynkin(entry.type, row.pre_ambient);
        Weight dom = ambient_to_dynkin(entry.type, row.dominant_ambient);
        if (!dom.dominant())
          throw IngestError("psi_special: stated dominant vector is not dominant for " +
                            entry.orbit + " " + row.pi);
        if (dominant_conjugate(rs, pre).first != dom)
          throw IngestError("psi_special: conjugation identity fails for " + entry.orbit +
                            " " + row.pi);
        for (int k = 0; k < rs.rank; ++k)
          if (dom.t[k] != 2 * row.diagram[k])
            throw IngestError("psi_special: diagram does not match ambient data for " +
                              entry.orbit + " " + row.pi);
      }
    }
    const OrbitRecord& rec = cat7or8.at(entry.orbit);
    Weight hvee = wdd_as_dual_group_weight(cat7or8, cat7or8.dual_of(rec));
    for (int k = 0; k < rs.rank; ++k)
      if (hvee.t[k] != 2 * entry.rows.front().diagram[k])
        throw IngestError("psi_special: <2> diagram of " + entry.orbit +
                          " is not the Dynkin element of its dual");
  }
  return out;
}

}  // namespace

const std::vector<SpecialPsiEntry>& special_psi_table(const Catalog& cat) {
  static std::mutex mu;
  static std::map<Type, std::vector<SpecialPsiEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cat.type);
  if (it == cache.end()) it = cache.emplace(cat.type, load_special_psi(cat)).first;
  return it->second;
}

const SpecialPsiEntry* find_special_psi(const Catalog& cat, const std::string& orbit) {
  for (const auto& e : special_psi_table(cat))
    if (e.type == cat.type && e.orbit == orbit) return &e;
  return nullptr;
}

AcharSommersReport verify_achar_sommers(const Catalog& cat, const std::string& orbit,
                                        const PunipOptions& opts) {
  const RootSystem& rs = root_system(cat.type);
  const OrbitRecord& rec = cat.at(orbit);
  AcharSommersReport rep;
  rep.orbit = orbit;
  rep.dual = rec.dual_label;

  // Psi values, either computed or from the packaged non-birational table.
  std::vector<std::pair<std::string, Weight>> psis;  // (pi, Psi weight)
  const LeviEntry* levi = rec.preferred_levi();
  if (levi && !levi->birational && !opts.allow_nonbirational) {
    const SpecialPsiEntry* entry = find_special_psi(cat, orbit);
    if (!entry)
      throw ComputeError("orbit '" + orbit + "': no packaged Psi data for the "
                         "non-birational case");
    for (const auto& row : entry->rows) {
      Weight w(rs.rank);
      for (int k = 0; k < rs.rank; ++k) w.t[k] = static_cast<int16_t>(2 * row.diagram[k]);
      psis.emplace_back(row.pi, w);
    }
  } else {
    UnipFamily fam = compute_punip(cat, orbit, opts);
    for (int i = 1; i <= static_cast<int>(fam.lambdas.size()); ++i)
      psis.emplace_back(fam.pis[i - 1], psi(cat, fam, i).weight);
  }

  std::vector<bool> used(psis.size(), false);
  for (const auto& member : special_piece(cat, rec.dual_label)) {
    Weight target = wdd_as_dual_group_weight(cat, cat.at(member));
    AcharSommersReport::Row row;
    row.piece_orbit = member;
    for (size_t i = 0; i < psis.size(); ++i) {
      if (psis[i].second == target) {
        row.matched_pi = psis[i].first;
        used[i] = true;
        break;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < psis.size(); ++i)
    if (!used[i]) rep.unmatched_psis.push_back(psis[i].first);
  return rep;
}

}  // namespace unipot
