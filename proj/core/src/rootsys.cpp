#include "unipot/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace unipot {

Type type_from_string(const std::string& s) {
  if (s == "G2") return Type::G2;
  if (s == "F4") return Type::F4;
  if (s == "E6") return Type::E6;
  if (s == "E7") return Type::E7;
  if (s == "E8") return Type::E8;
  throw std::invalid_argument("unknown type label: " + s);
}

std::string type_to_string(Type t) {
  switch (t) {
    case Type::G2: return "G2";
    case Type::F4: return "F4";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
    case Type::E8: return "E8";
  }
  return "?";
}

int type_rank(Type t) {
  switch (t) {
    case Type::G2: return 2;
    case Type::F4: return 4;
    case Type::E6: return 6;
    case Type::E7: return 7;
    case Type::E8: return 8;
  }
  return 0;
}

long long weyl_order_of(Type t) {
  switch (t) {
    case Type::G2: return 12;
    case Type::F4: return 1152;
    case Type::E6: return 51840;
    case Type::E7: return 2903040;
    case Type::E8: return 696729600;
  }
  return 0;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  int d = denom();
  for (int i = 0; i < rank; ++i) {
    if (i) os << ",";
    if (d == 1) {
      os << t[i] / 2;
    } else {
      if (t[i] % 2 == 0) os << t[i] / 2;
      else os << t[i] << "/2";
    }
  }
  os << ")";
  return os.str();
}

Weight weight_from_dynkin(int rank, const std::vector<long long>& coords) {
  return weight_from_dynkin(rank, coords, 1);
}

Weight weight_from_dynkin(int rank, const std::vector<long long>& coords, int denom) {
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("weight coordinate count does not match rank");
  if (denom != 1 && denom != 2)
    throw std::invalid_argument("weight denominator must be 1 or 2");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) {
    long long v = denom == 1 ? 2 * coords[i] : coords[i];
    if (v < INT16_MIN || v > INT16_MAX)
      throw std::overflow_error("weight coordinate out of range");
    w.t[i] = static_cast<int16_t>(v);
  }
  return w;
}

namespace {

struct Builder {
  Type type;
  int rank;
  int cartan[8][8]{};
  std::vector<RatVec> ambient;

  void edge(int i, int j, int aij, int aji) {
    // a[i][j] = <alpha_j, alpha_i^vee>
    cartan[i][j] = aij;
    cartan[j][i] = aji;
  }
  void simply_laced_chain(const std::vector<int>& chain) {
    for (size_t k = 0; k + 1 < chain.size(); ++k)
      edge(chain[k], chain[k + 1], -1, -1);
  }
};

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

Builder make_builder(Type t) {
  Builder b;
  b.type = t;
  b.rank = type_rank(t);
  for (int i = 0; i < b.rank; ++i) b.cartan[i][i] = 2;
  const Rat h(1, 2);
  switch (t) {
    case Type::G2:
      // node 1 long (-2,1,1), node 2 short (1,-1,0)
      b.edge(0, 1, -1, -3);
      b.ambient = {rv({-2, 1, 1}), rv({1, -1, 0})};
      break;
    case Type::F4:
      // nodes 1,2 long; 3,4 short; double bond between 2 and 3
      b.edge(0, 1, -1, -1);
      b.edge(1, 2, -1, -2);  // a[2][3]=-1, a[3][2]=-2
      b.edge(2, 3, -1, -1);
      b.ambient = {rv({0, 1, -1, 0}), rv({0, 0, 1, -1}), rv({0, 0, 0, 1}),
                   rv({h, -h, -h, -h})};
      break;
    case Type::E6:
      // chain 1-2-3-5-6 with 4 attached to 3 (paper numbering); ambient
      // embedding not modeled (irrational coordinate in the source table).
      b.simply_laced_chain({0, 1, 2, 4, 5});
      b.edge(2, 3, -1, -1);
      break;
    case Type::E7:
      // chain 1-2-3-4-6-7 with 5 attached to 4
      b.simply_laced_chain({0, 1, 2, 3, 5, 6});
      b.edge(3, 4, -1, -1);
      b.ambient = {rv({1, -1, 0, 0, 0, 0, 0, 0}), rv({0, 1, -1, 0, 0, 0, 0, 0}),
                   rv({0, 0, 1, -1, 0, 0, 0, 0}), rv({0, 0, 0, 1, -1, 0, 0, 0}),
                   rv({-h, -h, -h, -h, h, h, h, h}),
                   rv({0, 0, 0, 0, 1, -1, 0, 0}), rv({0, 0, 0, 0, 0, 1, -1, 0})};
      break;
    case Type::E8:
      // chain 1-2-3-4-5-7-8 with 6 attached to 5
      b.simply_laced_chain({0, 1, 2, 3, 4, 6, 7});
      b.edge(4, 5, -1, -1);
      b.ambient = {rv({1, -1, 0, 0, 0, 0, 0, 0}), rv({0, 1, -1, 0, 0, 0, 0, 0}),
                   rv({0, 0, 1, -1, 0, 0, 0, 0}), rv({0, 0, 0, 1, -1, 0, 0, 0}),
                   rv({0, 0, 0, 0, 1, -1, 0, 0}), rv({0, 0, 0, 0, 0, 1, -1, 0}),
                   rv({0, 0, 0, 0, 0, 1, 1, 0}),
                   rv({-h, -h, -h, -h, -h, -h, -h, -h})};
      break;
  }
  return b;
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(m), inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (int c = 0; c < n; ++c) { a[col][c] = a[col][c] / p; inv[col][c] = inv[col][c] / p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// Positive-root closure via root strings (needs cartan/rank/gram set).
void enumerate_roots(RootSystem& rs) {
  const int n = rs.rank;
  std::vector<std::array<int8_t, 8>> roots;
  std::map<std::array<int8_t, 8>, int> seen;
  for (int i = 0; i < n; ++i) {
    std::array<int8_t, 8> r{};
    r[i] = 1;
    seen[r] = static_cast<int>(roots.size());
    roots.push_back(r);
  }
  auto pairing_i = [&](const std::array<int8_t, 8>& r, int i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += r[j] * rs.cartan[i][j];
    return s;
  };
  for (size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      auto r = roots[k];
      // p = how far the string extends downwards from r along alpha_i
      int p = 0;
      {
        auto rr = r;
        while (true) {
          rr[i] = static_cast<int8_t>(rr[i] - 1);
          bool nonneg = true, zero = true;
          for (int j = 0; j < n; ++j) {
            if (rr[j] < 0) nonneg = false;
            if (rr[j] != 0) zero = false;
          }
          if (zero || (nonneg && seen.count(rr))) { ++p; continue; }
          break;
        }
      }
      int q = p - pairing_i(r, i);
      if (q > 0) {
        r[i] = static_cast<int8_t>(r[i] + 1);
        if (!seen.count(r)) {
          seen[r] = static_cast<int>(roots.size());
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [&](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int j = 0; j < n; ++j) { hx += x[j]; hy += y[j]; }
    if (hx != hy) return hx < hy;
    return x < y;
  });
  rs.pos_roots = roots;

  rs.simple_wts_.resize(n);
  for (int i = 0; i < n; ++i) {
    Weight w(n);
    for (int j = 0; j < n; ++j) w.t[j] = static_cast<int16_t>(2 * rs.cartan[j][i]);
    rs.simple_wts_[i] = w;
  }
  rs.pos_root_wts.clear();
  rs.pos_root_norm2.clear();
  for (const auto& r : roots) {
    Weight w(n);
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k2 = 0; k2 < n; ++k2) s += r[k2] * rs.cartan[j][k2];
      w.t[j] = static_cast<int16_t>(2 * s);
    }
    rs.pos_root_wts.push_back(w);
    Rat n2;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        n2 += Rat(r[i]) * Rat(r[j]) * rs.gram_alpha[i][j];
    rs.pos_root_norm2.push_back(n2);
  }
}

// Fills gram, inverse Cartan, roots, signature from type/rank/cartan/norms.
void complete_system(RootSystem& rs) {
  const int n = rs.rank;
  rs.gram_alpha.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.gram_alpha[i][j] = rs.simple_norm2[j] * Rat(rs.cartan[j][i], 2);

  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Rat(rs.cartan[i][j]);
  rs.inv_cartan = invert(A);

  // integer inverse-Cartan: common denominator of the rational inverse
  long long det = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) det = std::lcm(det, rs.inv_cartan[i][j].den);
  rs.cartan_det = det;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.inv_int[i][j] = rs.inv_cartan[i][j].num * (det / rs.inv_cartan[i][j].den);

  std::ostringstream sig;
  sig << n << ":";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sig << rs.cartan[i][j] << ",";
  for (int i = 0; i < n; ++i) sig << rs.simple_norm2[i].str() << ";";
  rs.signature = sig.str();
}

std::unique_ptr<RootSystem> build(Type t) {
  auto b = make_builder(t);
  auto rs = std::make_unique<RootSystem>();
  rs->type = t;
  rs->rank = b.rank;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rs->cartan[i][j] = b.cartan[i][j];
  rs->weyl_order = weyl_order_of(t);
  rs->ambient_simple = b.ambient;
  rs->ambient_dim = b.ambient.empty() ? 0 : static_cast<int>(b.ambient[0].size());

  // Symmetrizer d_i with d_i * a[i][j] = d_j * a[j][i]; normalized so the
  // lengths match the paper's ambient vectors (long roots: 6 in G2, 2 else).
  std::vector<Rat> d(b.rank, Rat(0));
  d[0] = (t == Type::G2) ? Rat(3) : Rat(1);
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < b.rank; ++j) {
      if (i == j || b.cartan[i][j] == 0 || !d[j].is_zero()) continue;
      d[j] = d[i] * Rat(b.cartan[i][j], b.cartan[j][i]);
      todo.push_back(j);
    }
  }
  rs->simple_norm2.resize(b.rank);
  for (int i = 0; i < b.rank; ++i) rs->simple_norm2[i] = d[i] * Rat(2);
  complete_system(*rs);

  enumerate_roots(*rs);

  const size_t expected =
      t == Type::G2 ? 6 : t == Type::F4 ? 24 : t == Type::E6 ? 36 : t == Type::E7 ? 63 : 120;
  if (rs->pos_roots.size() != expected)
    throw std::logic_error("root closure produced wrong count for " + type_to_string(t));
  return rs;
}

}  // namespace

const RootSystem& root_system(Type t) {
  static std::mutex mu;
  static std::map<Type, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build(t)).first;
  return *it->second;
}

const RootSystem& root_system(const std::string& label) {
  return root_system(type_from_string(label));
}

RootSystem sub_root_system(const RootSystem& parent, const std::vector<int>& nodes) {
  RootSystem rs;
  rs.type = parent.type;
  rs.rank = static_cast<int>(nodes.size());
  rs.ambient_dim = 0;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) rs.cartan[i][j] = parent.cartan[nodes[i]][nodes[j]];
  rs.simple_norm2.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i) rs.simple_norm2[i] = parent.simple_norm2[nodes[i]];
  complete_system(rs);
  enumerate_roots(rs);
  rs.weyl_order = 0;  // not meaningful for generic subsystems
  return rs;
}

Weight reflect(const RootSystem& rs, const Weight& v, int i) {
  if (i < 0 || i >= rs.rank) throw std::out_of_range("reflect: node index out of range");
  Weight r = v;
  int16_t vi = v.t[i];
  for (int j = 0; j < rs.rank; ++j)
    r.t[j] = static_cast<int16_t>(v.t[j] - vi * rs.cartan[j][i]);
  return r;
}

Rat pairing_with_coroot(const RootSystem& rs, const Weight& v, int root_idx) {
  // <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha)
  const auto& r = rs.pos_roots[root_idx];
  Rat va;  // (v, alpha) = sum_i rc_i (v, alpha_i); use pairings instead:
  // (v, alpha) = sum_i c_i * <v, alpha_i^vee> * (alpha_i,alpha_i)/2
  for (int i = 0; i < rs.rank; ++i) {
    if (!r[i]) continue;
    va += Rat(r[i]) * Rat(v.t[i], 2) * rs.simple_norm2[i] * Rat(1, 2);
  }
  return Rat(2) * va / rs.pos_root_norm2[root_idx];
}

RatVec dynkin_to_root_coords(const RootSystem& rs, const Weight& v) {
  RatVec c(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rat s;
    for (int j = 0; j < rs.rank; ++j) s += rs.inv_cartan[i][j] * Rat(v.t[j], 2);
    c[i] = s;
  }
  // c solves A^T? -- pairings: <v,alpha_i^vee> = sum_k c_k a[i][k]; inv_cartan
  // is A^{-1} with A[i][k] = a[i][k], so c = A^{-1} * coords is as computed.
  return c;
}

Rat inner(const RootSystem& rs, const Weight& a, const Weight& b) {
  RatVec ra = dynkin_to_root_coords(rs, a), rb = dynkin_to_root_coords(rs, b);
  Rat s;
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) s += ra[i] * rb[j] * rs.gram_alpha[i][j];
  return s;
}

Rat invariant_norm_sq(const RootSystem& rs, const Weight& v) {
  return inner(rs, v, v);
}

Weight ambient_to_dynkin(Type t, const RatVec& ambient) {
  if (t == Type::E6)
    throw std::invalid_argument(
        "E6 ambient coordinates are not supported (irrational basis); use Dynkin coordinates");
  const RootSystem& rs = root_system(t);
  if (static_cast<int>(ambient.size()) != rs.ambient_dim)
    throw std::invalid_argument("ambient vector has dimension " +
                                std::to_string(ambient.size()) + ", expected " +
                                std::to_string(rs.ambient_dim));
  Weight w(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rat p = Rat(2) * dot(ambient, rs.ambient_simple[i]) / rs.simple_norm2[i];
    Rat tw = p * Rat(2);
    if (!tw.is_integer())
      throw std::invalid_argument("ambient vector is not half-integral in Dynkin coordinates");
    if (tw.num < INT16_MIN || tw.num > INT16_MAX)
      throw std::overflow_error("ambient vector out of supported range");
    w.t[i] = static_cast<int16_t>(tw.num);
  }
  return w;
}

RatVec dynkin_to_ambient(const RootSystem& rs, const Weight& v) {
  if (rs.ambient_dim == 0)
    throw std::invalid_argument("no exact ambient embedding for " + type_to_string(rs.type));
  RatVec c = dynkin_to_root_coords(rs, v);
  RatVec out(rs.ambient_dim, Rat(0));
  for (int k = 0; k < rs.rank; ++k)
    for (int d = 0; d < rs.ambient_dim; ++d) out[d] += c[k] * rs.ambient_simple[k][d];
  return out;
}

std::string ambient_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

}  // namespace unipot
