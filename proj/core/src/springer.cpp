#include "unipot/springer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <deque>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace unipot {

using nlohmann::json;

namespace {

using Mat = std::array<int16_t, 64>;

struct MatHash {
  size_t operator()(const Mat& m) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int16_t v : m) {
      h ^= static_cast<uint64_t>(static_cast<uint16_t>(v));
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

Mat identity_mat(int n) {
  Mat m{};
  for (int i = 0; i < n; ++i) m[i * 8 + i] = 1;
  return m;
}

Mat multiply(const Mat& a, const Mat& b, int n) {
  Mat c{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int16_t aik = a[i * 8 + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j)
        c[i * 8 + j] = static_cast<int16_t>(c[i * 8 + j] + aik * b[k * 8 + j]);
    }
  return c;
}

Mat simple_reflection_mat(const RootSystem& rs, int i) {
  // (s_i v)_j = v_j - v_i a[j][i]
  Mat m = identity_mat(rs.rank);
  for (int j = 0; j < rs.rank; ++j)
    m[j * 8 + i] = static_cast<int16_t>(m[j * 8 + i] - rs.cartan[j][i]);
  return m;
}

struct WGroup {
  const RootSystem* rs;
  std::vector<Mat> elems;
  std::unordered_map<Mat, int, MatHash> index;
  std::vector<int8_t> parity;     // sgn
  std::vector<int> inverse;       // element id of inverse
  std::vector<int> cls;           // class index per element
  std::vector<int> class_rep;     // element id
  std::vector<long long> class_size;
};

WGroup enumerate_group(const RootSystem& rs) {
  WGroup g;
  g.rs = &rs;
  Mat id = identity_mat(rs.rank);
  g.elems.push_back(id);
  g.index.emplace(id, 0);
  g.parity.push_back(1);
  std::vector<Mat> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_mat(rs, i));
  for (size_t at = 0; at < g.elems.size(); ++at) {
    Mat cur = g.elems[at];
    for (const auto& s : gens) {
      Mat nxt = multiply(s, cur, rs.rank);
      if (g.index.emplace(nxt, static_cast<int>(g.elems.size())).second) {
        g.elems.push_back(nxt);
        g.parity.push_back(static_cast<int8_t>(-g.parity[at]));
      }
    }
  }
  if (static_cast<long long>(g.elems.size()) != rs.weyl_order)
    throw std::logic_error("Weyl group enumeration size mismatch");

  // inverses by powering (element orders are small)
  g.inverse.resize(g.elems.size());
  for (size_t e = 0; e < g.elems.size(); ++e) {
    Mat p = g.elems[e], prev = id;
    while (p != id) {
      prev = p;
      p = multiply(p, g.elems[e], rs.rank);
    }
    g.inverse[e] = g.elems[e] == id ? 0 : g.index.at(prev);
  }

  // conjugacy classes via closure under conjugation by generators
  g.cls.assign(g.elems.size(), -1);
  for (size_t e = 0; e < g.elems.size(); ++e) {
    if (g.cls[e] >= 0) continue;
    int c = static_cast<int>(g.class_rep.size());
    g.class_rep.push_back(static_cast<int>(e));
    std::deque<int> q{static_cast<int>(e)};
    g.cls[e] = c;
    long long size = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int i = 0; i < rs.rank; ++i) {
        Mat y = multiply(gens[i], multiply(g.elems[x], gens[i], rs.rank), rs.rank);
        int yi = g.index.at(y);
        if (g.cls[yi] < 0) {
          g.cls[yi] = c;
          ++size;
          q.push_back(yi);
        }
      }
    }
    g.class_size.push_back(size);
  }
  return g;
}

// ---- modular arithmetic for Dixon-Schneider ----

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ModVec = std::vector<long long>;
using ModMat = std::vector<ModVec>;

// Solve B * R = N for R where B is c x d with full column rank (mod p).
ModMat solve_in_basis(const ModMat& B, const ModMat& N, long long p) {
  int c = static_cast<int>(B.size()), d = static_cast<int>(B[0].size());
  int w = static_cast<int>(N[0].size());
  ModMat aug(c, ModVec(d + w));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < d; ++j) aug[i][j] = B[i][j];
    for (int j = 0; j < w; ++j) aug[i][d + j] = N[i][j];
  }
  int row = 0;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = row; r < c; ++r)
      if (aug[r][col]) { piv = r; break; }
    if (piv < 0) throw std::logic_error("solve_in_basis: rank deficiency");
    std::swap(aug[piv], aug[row]);
    long long inv = mod_inv(aug[row][col], p);
    for (int j = 0; j < d + w; ++j) aug[row][j] = aug[row][j] * inv % p;
    for (int r = 0; r < c; ++r) {
      if (r == row || !aug[r][col]) continue;
      long long f = aug[r][col];
      for (int j = 0; j < d + w; ++j)
        aug[r][j] = ((aug[r][j] - f * aug[row][j]) % p + p) % p;
    }
    ++row;
  }
  // consistency: rows beyond must be zero in N-part
  for (int r = row; r < c; ++r)
    for (int j = 0; j < w; ++j)
      if (aug[r][d + j]) throw std::logic_error("solve_in_basis: inconsistent system");
  ModMat R(d, ModVec(w));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < w; ++j) R[i][j] = aug[i][d + j];
  return R;
}

// Characteristic polynomial mod p by interpolation on d+1 points.
ModVec char_poly(const ModMat& R, long long p) {
  int d = static_cast<int>(R.size());
  auto det_at = [&](long long lam) {
    ModMat m = R;
    for (int i = 0; i < d; ++i) m[i][i] = ((m[i][i] - lam) % p + p) % p;
    long long det = 1;
    for (int col = 0; col < d; ++col) {
      int piv = -1;
      for (int r = col; r < d; ++r)
        if (m[r][col]) { piv = r; break; }
      if (piv < 0) return 0LL;
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = p - det;
      }
      det = det * m[col][col] % p;
      long long inv = mod_inv(m[col][col], p);
      for (int r = col + 1; r < d; ++r) {
        if (!m[r][col]) continue;
        long long f = m[r][col] * inv % p;
        for (int j = col; j < d; ++j) m[r][j] = ((m[r][j] - f * m[col][j]) % p + p) % p;
      }
    }
    return det;
  };
  // Lagrange interpolation of det(R - lam I) at points 0..d
  std::vector<long long> xs(d + 1), ys(d + 1);
  for (int k = 0; k <= d; ++k) {
    xs[k] = k;
    ys[k] = det_at(k);
  }
  ModVec poly(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    ModVec basis{1};
    long long denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == k) continue;
      // basis *= (x - xs[j])
      ModVec nb(basis.size() + 1, 0);
      for (size_t t = 0; t < basis.size(); ++t) {
        nb[t + 1] = (nb[t + 1] + basis[t]) % p;
        nb[t] = (nb[t] + basis[t] * ((p - xs[j]) % p)) % p;
      }
      basis = nb;
      denom = denom * (((xs[k] - xs[j]) % p + p) % p) % p;
    }
    long long f = ys[k] * mod_inv(denom, p) % p;
    for (size_t t = 0; t < basis.size(); ++t)
      poly[t] = (poly[t] + f * basis[t]) % p;
  }
  return poly;
}

ModMat kernel_basis(ModMat m, long long p) {
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    long long inv = mod_inv(m[row][col], p);
    for (int j = 0; j < cols; ++j) m[row][j] = m[row][j] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == row || !m[r][col]) continue;
      long long f = m[r][col];
      for (int j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[row][j]) % p + p) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  ModMat ker;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModVec v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = (p - m[r][free]) % p;
    ker.push_back(v);
  }
  return ker;  // rows are kernel vectors
}

std::shared_ptr<const CharTable> build_char_table(Type t) {
  const RootSystem& rs = root_system(t);
  WGroup g = enumerate_group(rs);
  const int c = static_cast<int>(g.class_rep.size());
  const long long n = rs.weyl_order;

  auto table = std::make_shared<CharTable>();
  table->type = t;
  table->group_order = n;
  table->num_classes = c;
  table->class_size = g.class_size;
  table->simple_reflection_class.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    table->simple_reflection_class[i] = g.cls[g.index.at(simple_reflection_mat(rs, i))];

  table->class_order.resize(c);
  table->inverse_class.resize(c);
  table->class_sign.resize(c);
  Mat id = identity_mat(rs.rank);
  for (int k = 0; k < c; ++k) {
    int e = g.class_rep[k];
    Mat p = g.elems[e];
    int ord = 1;
    while (p != id) {
      p = multiply(p, g.elems[e], rs.rank);
      ++ord;
    }
    table->class_order[k] = ord;
    table->inverse_class[k] = g.cls[g.inverse[e]];
    table->class_sign[k] = g.parity[e];
    if (g.elems[e] == id) table->identity_class = k;
  }

  long long exponent = 1;
  for (int k = 0; k < c; ++k) exponent = std::lcm(exponent, (long long)table->class_order[k]);
  long long maxc = *std::max_element(g.class_size.begin(), g.class_size.end());
  long long p = exponent + 1;
  while (!(is_prime(p) && p > 2 * maxc + 1)) p += exponent;

  // class-algebra matrices A_r[j][k] = #{x in C_r : cls(x^-1 z_k) = j}
  std::vector<ModMat> A(c, ModMat(c, ModVec(c, 0)));
  for (int k = 0; k < c; ++k) {
    const Mat& zk = g.elems[g.class_rep[k]];
    for (size_t x = 0; x < g.elems.size(); ++x) {
      Mat y = multiply(g.elems[g.inverse[x]], zk, rs.rank);
      A[g.cls[x]][g.cls[g.index.at(y)]][k] += 1;
    }
  }

  // split the class-function space into common eigenspaces
  std::vector<ModMat> spaces;
  {
    ModMat full(c, ModVec(c, 0));
    for (int i = 0; i < c; ++i) full[i][i] = 1;  // columns are basis vectors
    spaces.push_back(full);
  }
  for (int r = 0; r < c; ++r) {
    std::vector<ModMat> next;
    for (auto& B : spaces) {
      int d = static_cast<int>(B[0].size());
      if (d == 1) {
        next.push_back(B);
        continue;
      }
      // N = A_r * B
      ModMat N(c, ModVec(d, 0));
      for (int i = 0; i < c; ++i)
        for (int kk = 0; kk < c; ++kk) {
          if (!A[r][i][kk]) continue;
          long long f = A[r][i][kk] % p;
          for (int j = 0; j < d; ++j) N[i][j] = (N[i][j] + f * B[kk][j]) % p;
        }
      // hm: A_r acts on vectors v via (A_r v)_j = sum_k A_r[j][k] v_k
      // recompute properly:
      for (int i = 0; i < c; ++i) std::fill(N[i].begin(), N[i].end(), 0);
      for (int j = 0; j < c; ++j)
        for (int kk = 0; kk < c; ++kk) {
          long long f = A[r][j][kk] % p;
          if (!f) continue;
          for (int col = 0; col < d; ++col) N[j][col] = (N[j][col] + f * B[kk][col]) % p;
        }
      ModMat R = solve_in_basis(B, N, p);
      ModVec poly = char_poly(R, p);
      std::vector<long long> roots;
      for (long long lam = 0; lam < p; ++lam) {
        long long v = 0;
        for (int deg = static_cast<int>(poly.size()) - 1; deg >= 0; --deg)
          v = (v * lam + poly[deg]) % p;
        if (v == 0) roots.push_back(lam);
      }
      for (long long lam : roots) {
        ModMat RmL = R;
        for (int i = 0; i < d; ++i) RmL[i][i] = ((RmL[i][i] - lam) % p + p) % p;
        ModMat ker = kernel_basis(RmL, p);
        if (ker.empty()) continue;
        ModMat sub(c, ModVec(ker.size(), 0));
        for (size_t kv = 0; kv < ker.size(); ++kv)
          for (int i = 0; i < c; ++i) {
            long long s = 0;
            for (int j = 0; j < d; ++j) s = (s + B[i][j] * ker[kv][j]) % p;
            sub[i][kv] = s;
          }
        next.push_back(sub);
      }
    }
    spaces = std::move(next);
    bool all1 = std::all_of(spaces.begin(), spaces.end(),
                            [](const ModMat& B) { return B[0].size() == 1; });
    if (all1) break;
  }
  if (static_cast<int>(spaces.size()) != c)
    throw std::logic_error("character table: eigenspace splitting incomplete");

  // each 1-dim space -> omega vector -> character values
  for (auto& B : spaces) {
    ModVec omega(c);
    long long at_id = B[table->identity_class][0];
    if (!at_id) throw std::logic_error("character table: eigenvector vanishes at identity");
    long long scale = mod_inv(at_id, p);
    for (int j = 0; j < c; ++j) omega[j] = B[j][0] * scale % p;
    // lift centered
    std::vector<long long> om(c);
    for (int j = 0; j < c; ++j) om[j] = omega[j] <= p / 2 ? omega[j] : omega[j] - p;
    // 1/deg^2 = (1/n) sum_j om_j om_{j*} / |C_j|
    Rat s;
    for (int j = 0; j < c; ++j)
      s += Rat(om[j] * om[table->inverse_class[j]], table->class_size[j]);
    Rat deg_sq = Rat(n) / s;
    if (!deg_sq.is_integer() || deg_sq.num <= 0)
      throw std::logic_error("character table: non-integral degree^2");
    long long deg = std::llround(std::sqrt(static_cast<double>(deg_sq.num)));
    while (deg * deg < deg_sq.num) ++deg;
    while (deg * deg > deg_sq.num) --deg;
    if (deg * deg != deg_sq.num)
      throw std::logic_error("character table: degree is not a perfect square root");
    std::vector<long long> chi(c);
    for (int j = 0; j < c; ++j) {
      Rat v = Rat(om[j] * deg, table->class_size[j]);
      if (!v.is_integer())
        throw std::logic_error("character table: non-integral character value");
      chi[j] = v.num;
    }
    table->degrees.push_back(deg);
    table->chars.push_back(std::move(chi));
  }

  // orthogonality validation
  {
    long long sumsq = 0;
    for (long long d : table->degrees) sumsq += d * d;
    if (sumsq != n) throw std::logic_error("character table: sum of squares != |W|");
    for (size_t a = 0; a < table->chars.size(); ++a)
      for (size_t b = a; b < table->chars.size(); ++b) {
        long long s = 0;
        for (int j = 0; j < c; ++j)
          s += table->class_size[j] * table->chars[a][j] *
               table->chars[b][table->inverse_class[j]];
        if (s != (a == b ? n : 0))
          throw std::logic_error("character table: orthogonality fails");
      }
  }

  // b-invariants via power sums of the reflection representation
  {
    const int maxk = static_cast<int>(rs.pos_roots.size()) + 1;
    std::vector<std::vector<Rat>> h(c, std::vector<Rat>(maxk + 1));
    for (int k = 0; k < c; ++k) {
      // power sums p_m = trace(g^m)
      std::vector<Rat> ps(maxk + 1);
      Mat pw = g.elems[g.class_rep[k]];
      for (int m2 = 1; m2 <= maxk; ++m2) {
        int tr = 0;
        for (int i = 0; i < rs.rank; ++i) tr += pw[i * 8 + i];
        ps[m2] = Rat(tr);
        pw = multiply(pw, g.elems[g.class_rep[k]], rs.rank);
      }
      h[k][0] = Rat(1);
      for (int m2 = 1; m2 <= maxk; ++m2) {
        Rat acc;
        for (int i2 = 1; i2 <= m2; ++i2) acc += ps[i2] * h[k][m2 - i2];
        h[k][m2] = acc / Rat(m2);
      }
    }
    for (size_t a = 0; a < table->chars.size(); ++a) {
      int b = -1;
      for (int k2 = 0; k2 <= maxk && b < 0; ++k2) {
        Rat ip;
        for (int j = 0; j < c; ++j)
          ip += Rat(table->class_size[j] * table->chars[a][j]) * h[j][k2];
        ip = ip / Rat(n);
        if (!ip.is_integer()) throw std::logic_error("b-invariant: non-integral multiplicity");
        if (ip.num > 0) b = k2;
      }
      if (b < 0) throw std::logic_error("b-invariant not found");
      table->b_value.push_back(b);
    }
  }

  return table;
}

// element ids of W_J inside the enumerated group (for induced sign)
struct SubgroupScan {
  std::vector<long long> class_hits;  // signed count per class
  long long order{0};
};

SubgroupScan scan_levi(const RootSystem& rs, const WGroup& g, const CharTable& table,
                       const LeviDatum& J) {
  SubgroupScan sc;
  sc.class_hits.assign(table.num_classes, 0);
  std::unordered_map<Mat, int8_t, MatHash> seen;
  Mat id = identity_mat(rs.rank);
  seen.emplace(id, 1);
  std::deque<Mat> q{id};
  std::vector<Mat> gens;
  for (int i : J.nodes) gens.push_back(simple_reflection_mat(rs, i));
  sc.class_hits[table.identity_class] += 1;
  sc.order = 1;
  while (!q.empty()) {
    Mat cur = q.front();
    q.pop_front();
    int8_t par = seen.at(cur);
    for (const auto& s : gens) {
      Mat nxt = multiply(s, cur, rs.rank);
      if (seen.emplace(nxt, static_cast<int8_t>(-par)).second) {
        q.push_back(nxt);
        sc.class_hits[g.cls.at(g.index.at(nxt))] += -par;
        ++sc.order;
      }
    }
  }
  return sc;
}

const WGroup& cached_group(Type t) {
  static std::mutex mu;
  static std::map<Type, std::unique_ptr<WGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<WGroup>(enumerate_group(root_system(t)))).first;
  return *it->second;
}

}  // namespace

int CharTable::class_of_simple_reflection(int node) const {
  return simple_reflection_class.at(node);
}

std::shared_ptr<const CharTable> char_table(Type t) {
  static std::mutex mu;
  static std::map<Type, std::shared_ptr<const CharTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_char_table(t)).first;
  return it->second;
}

int resolve_irrep(const RootSystem& rs, const CharTable& table, const IrrepRef& ref) {
  // classes of a long and a short simple reflection, when both lengths occur
  int long_node = 0, short_node = -1;
  for (int i = 1; i < rs.rank; ++i) {
    if (rs.simple_norm2[i] > rs.simple_norm2[long_node]) long_node = i;
  }
  for (int i = 0; i < rs.rank; ++i)
    if (rs.simple_norm2[i] < rs.simple_norm2[long_node]) { short_node = i; break; }
  std::vector<int> hits;
  for (size_t a = 0; a < table.chars.size(); ++a) {
    if (table.degrees[a] != ref.dim || table.b_value[a] != ref.b) continue;
    if (ref.on_long &&
        table.chars[a][table.class_of_simple_reflection(long_node)] != *ref.on_long)
      continue;
    if (ref.on_short) {
      if (short_node < 0) continue;
      if (table.chars[a][table.class_of_simple_reflection(short_node)] != *ref.on_short)
        continue;
    }
    hits.push_back(static_cast<int>(a));
  }
  if (hits.size() != 1) {
    std::ostringstream os;
    os << "irrep reference (dim=" << ref.dim << ", b=" << ref.b << ") matches "
       << hits.size() << " irreducibles";
    throw IngestError(os.str());
  }
  return hits.front();
}

std::vector<long long> induced_sign_multiplicities(const RootSystem& rs,
                                                   const CharTable& table,
                                                   const LeviDatum& J) {
  const WGroup& g = cached_group(table.type);
  SubgroupScan sc = scan_levi(rs, g, table, J);
  std::vector<long long> mult(table.chars.size());
  for (size_t a = 0; a < table.chars.size(); ++a) {
    long long s = 0;
    for (int j = 0; j < table.num_classes; ++j)
      s += sc.class_hits[j] * table.chars[a][j];
    if (s % sc.order) throw std::logic_error("induced sign: non-integral multiplicity");
    mult[a] = s / sc.order;
  }
  return mult;
}

int j_induced_sign(const RootSystem& rs, const CharTable& table, const LeviDatum& J) {
  auto mult = induced_sign_multiplicities(rs, table, J);
  int want_b = levi_pos_roots(rs, J);
  int found = -1;
  for (size_t a = 0; a < mult.size(); ++a) {
    if (mult[a] <= 0 || table.b_value[a] != want_b) continue;
    if (found >= 0) throw std::logic_error("j-induction: not unique");
    if (mult[a] != 1) throw std::logic_error("j-induction: multiplicity != 1");
    found = static_cast<int>(a);
  }
  if (found < 0) throw std::logic_error("j-induction: no constituent with the right b");
  return found;
}

SpringerData load_springer_data(Type t, const std::string& path_override) {
  std::string path = path_override;
  if (path.empty()) {
    std::string fname = type_to_string(t);
    std::transform(fname.begin(), fname.end(), fname.begin(), ::tolower);
    path = default_data_dir() + "/springer_" + fname + ".json";
  }
  std::ifstream in(path);
  if (!in) throw UnavailableDataError("cannot open Springer data file: " + path);
  json j;
  in >> j;
  SpringerData data;
  data.type = type_from_string(j.at("group").get<std::string>());
  if (data.type != t) throw IngestError(path + ": wrong group");
  data.assisted = j.value("mode", "computed") == std::string("assisted");
  for (const auto& row : j.at("springer")) {
    SpringerRow r;
    std::string orbit = row.at("orbit").get<std::string>();
    r.psi = row.at("psi").get<std::string>();
    r.dim_vpsi = row.value("dim", 1);
    if (row.at("irrep").is_null()) {
      r.in_image = false;
    } else if (row.at("irrep").is_string()) {
      r.irrep_name = row.at("irrep").get<std::string>();
      if (r.irrep_name == "j_induced") r.irrep_is_j_induced = true;
    } else {
      const auto& ir = row.at("irrep");
      r.irrep.dim = ir.at("dim").get<long long>();
      r.irrep.b = ir.at("b").get<int>();
      if (ir.contains("on_long")) r.irrep.on_long = ir.at("on_long").get<long long>();
      if (ir.contains("on_short")) r.irrep.on_short = ir.at("on_short").get<long long>();
    }
    data.orbits[orbit].push_back(std::move(r));
  }
  if (j.contains("induced_sign"))
    for (auto it = j.at("induced_sign").begin(); it != j.at("induced_sign").end(); ++it)
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
        data.induced_sign[it.key()][jt.key()] = jt.value().get<long long>();
  return data;
}

namespace {

std::string levi_key(const LeviDatum& J) {
  std::string s;
  for (size_t i = 0; i < J.nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J.nodes[i] + 1);
  }
  return s;
}

}  // namespace

long long component_count(const Catalog& cat, const SpringerData& data,
                          const std::string& orbit, const LeviDatum& J) {
  const RootSystem& rs = root_system(cat.type);
  auto it = data.orbits.find(orbit);
  if (it == data.orbits.end())
    throw UnavailableDataError("no Springer rows for orbit '" + orbit + "'");

  if (data.assisted) {
    auto lt = data.induced_sign.find(levi_key(J));
    if (lt == data.induced_sign.end())
      throw UnavailableDataError("no induced-sign data for Levi " + J.str_1based());
    long long total = 0;
    for (const auto& row : it->second) {
      if (!row.in_image) continue;
      auto mt = lt->second.find(row.irrep_name);
      if (mt == lt->second.end())
        throw UnavailableDataError("no induced-sign entry for " + row.irrep_name);
      total += row.dim_vpsi * mt->second;
    }
    return total;
  }

  auto table = char_table(cat.type);
  auto mult = induced_sign_multiplicities(rs, *table, J);
  long long total = 0;
  for (const auto& row : it->second) {
    if (!row.in_image) continue;
    int idx = row.irrep_is_j_induced ? j_induced_sign(rs, *table, J)
                                     : resolve_irrep(rs, *table, row.irrep);
    total += row.dim_vpsi * mult[idx];
  }
  return total;
}

}  // namespace unipot
