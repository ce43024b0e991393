#include "wrc/towers.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wrc {

namespace {

long long isqrt_ll(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square_ll(long long n, long long* root = nullptr) {
  if (n < 0) return false;
  long long r = isqrt_ll(n);
  if (root) *root = r;
  return r * r == n;
}

int v2(long long n) {
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

// signed squarefree core
long long squarefree_part(long long n) {
  if (n == 0) return 0;
  long long sign = n < 0 ? -1 : 1;
  n = std::llabs(n);
  long long core = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    if (v & 1) core *= p;
  }
  return sign * core * n;
}

long long fund_disc_of_core(long long m) {
  long long r = ((m % 4) + 4) % 4;
  return r == 1 ? m : 4 * m;
}

}  // namespace

const char* to_string(GaloisType t) {
  switch (t) {
    case GaloisType::kD4: return "D4";
    case GaloisType::kC4: return "C4";
    case GaloisType::kV4: return "V4";
  }
  return "?";
}

std::vector<QuadElt> unit_square_classes(const QuadraticField& k) {
  long long d = k.discriminant();
  if (d == -4) return {QuadElt{1, 0}, QuadElt{0, 1}};  // {1, i}
  if (d < 0) return {QuadElt{1, 0}, QuadElt{-1, 0}};   // {1, -1}
  QuadElt eps = k.unit_elt();
  return {QuadElt{1, 0}, QuadElt{-1, 0}, eps, k.neg(eps)};
}

// ---------------------------------------------------------------------------
// 2-adic discriminant exponents by explicit solvability of a^2 = delta
// ---------------------------------------------------------------------------

namespace {

struct TwoPrime {
  int e;     // ramification index of q over 2
  int f;     // residue degree
  int kind;  // 0 ramified, 1 inert, 2 split (two entries share kind 2)
  long long root;  // split: omega = root (mod 8) in this completion
};

std::vector<TwoPrime> factor_two(const QuadraticField& k) {
  long long d = k.discriminant();
  if (d % 2 == 0) return {TwoPrime{2, 1, 0, 0}};
  long long r8 = ((d % 8) + 8) % 8;
  if (r8 == 5) return {TwoPrime{1, 2, 1, 0}};
  // split: roots of x^2 - t x - n mod 8 (t, n from omega^2 = t omega + n)
  std::vector<TwoPrime> out;
  for (long long r = 0; r < 8; ++r) {
    long long val = r * r - k.omega_trace() * r + k.omega_norm();
    if (((val % 8) + 8) % 8 == 0) out.push_back(TwoPrime{1, 1, 2, r});
  }
  if (out.size() != 2)
    throw std::logic_error("expected two roots mod 8 over a split prime");
  return out;
}

// min(v_q(x), cap) for small-coordinate x
int vq_capped(const QuadraticField& k, const TwoPrime& q, const QuadElt& x,
              int cap) {
  if (x.a == 0 && x.b == 0) return cap;
  if (q.kind == 0) {  // ramified: v_q = v_2(N(x))
    long long n = k.norm(x);
    if (n == 0) return cap;
    return std::min(v2(std::llabs(n)), cap);
  }
  if (q.kind == 1) {  // inert: v_q = min over coordinates
    int va = x.a == 0 ? cap : v2(std::llabs(x.a));
    int vb = x.b == 0 ? cap : v2(std::llabs(x.b));
    return std::min(std::min(va, vb), cap);
  }
  // split: image a + b*root in Z/8
  long long img = ((x.a + x.b * q.root) % 8 + 8) % 8;
  if (img == 0) return cap;
  return std::min(v2(img), cap);
}

}  // namespace

TwoAdicTable::TwoAdicTable(const QuadraticField& k) {
  auto qs = factor_two(k);
  for (int a0 = 0; a0 < 8; ++a0) {
    for (int b0 = 0; b0 < 8; ++b0) {
      QuadElt delta{a0, b0};
      long long norm_factor = 1;
      for (const auto& q : qs) {
        int twoe = 2 * q.e;
        int w = vq_capped(k, q, delta, 1);
        int vd;
        if (w == 1) {
          // Eisenstein case: the different is (2 sqrt(delta)) exactly
          vd = twoe + 1;
        } else {
          int m = 0;
          for (int c0 = 0; c0 < 4 && m < twoe; ++c0)
            for (int c1 = 0; c1 < 4 && m < twoe; ++c1) {
              QuadElt a{c0, c1};
              QuadElt diff = k.mul(a, a);
              diff.a -= delta.a;
              diff.b -= delta.b;
              m = std::max(m, vq_capped(k, q, diff, twoe));
            }
          vd = (m >= twoe) ? 0 : twoe + 1 - m;
        }
        for (int i = 0; i < q.f * vd; ++i) norm_factor *= 2;
      }
      table_[a0 * 8 + b0] = norm_factor;
    }
  }
}

long long TwoAdicTable::two_part_norm(const QuadElt& delta) const {
  int a = static_cast<int>(((delta.a % 8) + 8) % 8);
  int b = static_cast<int>(((delta.b % 8) + 8) % 8);
  return table_[a * 8 + b];
}

// ---------------------------------------------------------------------------
// per-class invariants
// ---------------------------------------------------------------------------

namespace {

void validate_kummer_rep(const QuadraticField& k, const QuadElt& delta) {
  if (delta.a == 0 && delta.b == 0)
    throw std::invalid_argument("delta must be nonzero");
  if (k.is_square_elt(delta))
    throw std::invalid_argument("delta is a square; L would not be a field");
  long long n = std::llabs(k.norm(delta));
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    // valuation 2 is fine only for p exactly dividing delta at an unramified p
    bool ok = v == 1 ||
              (v == 2 && delta.a % p == 0 && delta.b % p == 0 &&
               kronecker(k.discriminant(), p) != 0);
    if (!ok)
      throw std::invalid_argument(
          "delta is not squarefree at p = " + std::to_string(p));
  }
}

long long odd_part(long long n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

}  // namespace

long long relative_discriminant(const QuadraticField& k, const QuadElt& delta) {
  validate_kummer_rep(k, delta);
  TwoAdicTable table(k);
  return odd_part(std::llabs(k.norm(delta))) * table.two_part_norm(delta);
}

GaloisType galois_type(const QuadraticField& k, const QuadElt& delta) {
  long long n = k.norm(delta);
  if (is_square_ll(n)) return GaloisType::kV4;
  __int128 mn = static_cast<__int128>(k.core()) * n;
  if (mn > 0 && mn < static_cast<__int128>(INT64_MAX) &&
      is_square_ll(static_cast<long long>(mn)))
    return GaloisType::kC4;
  return GaloisType::kD4;
}

std::optional<long long> lemma_tower_witness(const QuadraticField& k,
                                             const QuadElt& delta) {
  long long rel = relative_discriminant(k, delta);
  for (long long p = 2; p * p <= rel; ++p) {
    if (rel % p) continue;
    int v = 0;
    long long r = rel;
    while (r % p == 0) {
      r /= p;
      ++v;
    }
    if (v == 1 && kronecker(k.discriminant(), p) != 0) return p;
    while (rel % p == 0) rel /= p;
  }
  if (rel > 1 && kronecker(k.discriminant(), rel) != 0) return rel;
  return std::nullopt;
}

long long coprime_part(long long a, const std::vector<long long>& s) {
  if (a < 1) throw std::invalid_argument("coprime_part needs a >= 1");
  for (long long p : s)
    while (a % p == 0) a /= p;
  return a;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

namespace {

struct Enumerator {
  const QuadraticField& k;
  long long norm_bound;                // cap on the odd part of N(d_{L/K})
  std::optional<long long> rel_bound;  // if set, keep only rel <= rel_bound
  TwoAdicTable table;
  std::vector<PrimeElement> odd_primes, two_primes;
  std::vector<QuadElt> units;
  QuadElt eps2{1, 0}, eps2_inv{1, 0};
  bool real;
  std::vector<KummerClass> out;

  Enumerator(const QuadraticField& field, long long bound,
             std::optional<long long> rel_cap)
      : k(field), norm_bound(bound), rel_bound(rel_cap), table(field) {
    real = k.discriminant() > 0;
    for (auto& pe : k.prime_elements(bound)) {
      if (pe.p == 2)
        two_primes.push_back(pe);
      else
        odd_primes.push_back(pe);
    }
    units = unit_square_classes(k);
    if (real) {
      QuadElt eps = k.unit_elt();
      eps2 = k.mul(eps, eps);
      // norm(eps^2) = 1, so its inverse is its conjugate
      eps2_inv = k.conj(eps2);
    }
  }

  QuadElt balance(QuadElt x) const {
    if (!real) return x;
    auto size = [](const QuadElt& q) {
      return std::max(std::llabs(q.a), std::llabs(q.b));
    };
    for (;;) {
      QuadElt y1 = k.mul(x, eps2);
      if (size(y1) < size(x)) {
        x = y1;
        continue;
      }
      QuadElt y2 = k.mul(x, eps2_inv);
      if (size(y2) < size(x)) {
        x = y2;
        continue;
      }
      return x;
    }
  }

  void emit(const QuadElt& core, const std::vector<int>& odd_sel,
            long long odd_norm) {
    int m2 = static_cast<int>(two_primes.size());
    for (int mask = 0; mask < (1 << m2); ++mask) {
      QuadElt with_two = core;
      for (int j = 0; j < m2; ++j)
        if (mask & (1 << j)) with_two = balance(k.mul(with_two, two_primes[j].elt));
      for (int u = 0; u < static_cast<int>(units.size()); ++u) {
        if (u == 0 && mask == 0 && odd_sel.empty()) continue;  // trivial class
        QuadElt delta = balance(k.mul(units[u], with_two));
        long long rel =
            odd_part(odd_norm) * table.two_part_norm(delta);
        if (rel_bound && rel > *rel_bound) continue;
        KummerClass cls;
        cls.d_k = k.discriminant();
        cls.delta = delta;
        cls.id.unit_idx = u;
        for (int idx : odd_sel)
          cls.id.primes.emplace_back(odd_primes[idx].p, odd_primes[idx].conj);
        for (int j = 0; j < m2; ++j)
          if (mask & (1 << j))
            cls.id.primes.emplace_back(two_primes[j].p, two_primes[j].conj);
        std::sort(cls.id.primes.begin(), cls.id.primes.end());
        cls.rel_disc_norm = rel;
        cls.tower_disc = cls.d_k * cls.d_k * rel;
        classify(cls);
        out.push_back(std::move(cls));
      }
    }
  }

  void classify(KummerClass& cls) const {
    long long n = k.norm(cls.delta);
    long long root = 0;
    if (is_square_ll(n, &root)) {
      cls.type = GaloisType::kV4;
      fill_v4_subfields(cls, root);
    } else {
      __int128 mn = static_cast<__int128>(k.core()) * n;
      long long mn64 = (mn > 0 && mn < static_cast<__int128>(INT64_MAX))
                           ? static_cast<long long>(mn)
                           : -1;
      if (mn64 > 0 && is_square_ll(mn64)) {
        cls.type = GaloisType::kC4;
        long long f2 = std::llabs(cls.d_k) * cls.rel_disc_norm;
        long long f = 0;
        if (is_square_ll(f2, &f)) cls.c4_conductor = f;
      } else {
        cls.type = GaloisType::kD4;
      }
    }
    // witness: smallest split prime appearing on exactly one side
    std::map<long long, int> split_count;
    for (auto& [p, conj] : cls.id.primes)
      if (kronecker(cls.d_k, p) == 1) split_count[p] += 1;
    for (auto& [p, c] : split_count)
      if (c == 1 && p != 2) {
        cls.witness = p;
        break;
      }
  }

  void fill_v4_subfields(KummerClass& cls, long long norm_root) const {
    long long tr = k.trace(cls.delta);
    long long m = k.core();
    long long u2 = tr + 2 * norm_root;
    long long v2s = tr - 2 * norm_root;
    long long su = u2 != 0 ? squarefree_part(u2) : 0;
    long long sv = v2s != 0 ? squarefree_part(v2s) : 0;
    if (su == 0 && sv == 0)
      throw std::logic_error("degenerate V4 subfield computation");
    if (su == 0) su = squarefree_part(m * sv);
    if (sv == 0) sv = squarefree_part(m * su);
    std::array<long long, 3> discs = {fund_disc_of_core(m),
                                      fund_disc_of_core(su),
                                      fund_disc_of_core(sv)};
    std::sort(discs.begin(), discs.end());
    cls.subfield_discs = discs;
  }

  void dfs(size_t idx, long long odd_norm, const QuadElt& elt,
           std::vector<int>& sel) {
    if (idx == odd_primes.size()) {
      emit(elt, sel, odd_norm);
      return;
    }
    dfs(idx + 1, odd_norm, elt, sel);
    long long an = std::llabs(odd_primes[idx].norm);
    if (odd_norm <= norm_bound / an) {
      sel.push_back(static_cast<int>(idx));
      dfs(idx + 1, odd_norm * an, balance(k.mul(elt, odd_primes[idx].elt)), sel);
      sel.pop_back();
    }
  }

  std::vector<KummerClass> run() {
    std::vector<int> sel;
    dfs(0, 1, QuadElt{1, 0}, sel);
    std::sort(out.begin(), out.end(),
              [](const KummerClass& a, const KummerClass& b) {
                return std::tie(a.tower_disc, a.d_k, a.id) <
                       std::tie(b.tower_disc, b.d_k, b.id);
              });
    return std::move(out);
  }
};

}  // namespace

std::vector<KummerClass> squarefree_elements(const QuadraticField& k,
                                             long long norm_bound) {
  Enumerator e(k, norm_bound, std::nullopt);
  return e.run();
}

std::vector<KummerClass> enumerate_towers(const QuadraticField& k,
                                          long long rel_bound) {
  if (rel_bound < 1) return {};
  Enumerator e(k, rel_bound, rel_bound);
  return e.run();
}

long long count_quadratic_ext(const QuadraticField& k, long long x) {
  return static_cast<long long>(enumerate_towers(k, x).size());
}

namespace {

std::vector<KummerClass> enumerate_parallel(
    const std::vector<long long>& field_discs, long long x, unsigned workers) {
  std::vector<long long> discs = field_discs;
  std::sort(discs.begin(), discs.end());
  discs.erase(std::unique(discs.begin(), discs.end()), discs.end());
  // validate up front so errors name the field
  for (long long d : discs) {
    QuadraticField k(d);
    if (k.class_number() != 1)
      throw std::runtime_error("field d = " + std::to_string(d) +
                               " has class number " +
                               std::to_string(k.class_number()) +
                               "; tower enumeration needs h = 1");
  }
  auto job = [x](long long d) -> std::vector<KummerClass> {
    QuadraticField k(d);
    long long rel_cap = x / (d * d);
    if (rel_cap < 1) return {};
    return enumerate_towers(k, rel_cap);
  };
  std::vector<std::vector<KummerClass>> per_field(discs.size());
  if (workers <= 1) {
    for (size_t i = 0; i < discs.size(); ++i) per_field[i] = job(discs[i]);
  } else {
    std::vector<std::future<std::vector<KummerClass>>> futs;
    for (long long d : discs)
      futs.push_back(std::async(std::launch::async, job, d));
    for (size_t i = 0; i < discs.size(); ++i) per_field[i] = futs[i].get();
  }
  std::vector<KummerClass> all;
  for (auto& v : per_field)
    all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(),
            [](const KummerClass& a, const KummerClass& b) {
              return std::tie(a.tower_disc, a.d_k, a.id) <
                     std::tie(b.tower_disc, b.d_k, b.id);
            });
  return all;
}

}  // namespace

std::vector<KummerClass> enumerate_tower_set(
    const std::vector<long long>& field_discs, long long x, unsigned workers) {
  return enumerate_parallel(field_discs, x, workers);
}

TowerCount aggregate_towers(const std::vector<KummerClass>& classes,
                            long long x, CountMode mode,
                            const std::vector<long long>& sample_points) {
  std::vector<long long> samples = sample_points;
  samples.push_back(x);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  TowerCount tc;
  tc.x = x;
  tc.mode = mode;
  for (long long s : samples) tc.samples.push_back(TowerSample{s, 0, 0, 0});

  std::set<std::array<long long, 3>> v4_seen;  // field mode dedup
  for (const auto& cls : classes) {
    if (cls.tower_disc > x) continue;
    if (mode == CountMode::kField && cls.type == GaloisType::kV4) {
      if (!v4_seen.insert(cls.subfield_discs).second) continue;
    }
    for (auto& s : tc.samples) {
      if (cls.tower_disc > s.x) continue;
      s.z_tilde += 1;
      if (cls.type == GaloisType::kD4)
        s.z_d4 += 1;
      else
        s.y += 1;
    }
  }
  const TowerSample& last = tc.samples.back();
  tc.z_tilde = last.z_tilde;
  tc.z_d4 = last.z_d4;
  tc.y = last.y;
  return tc;
}

TowerCount count_towers(const std::vector<long long>& field_discs, long long x,
                        CountMode mode,
                        const std::vector<long long>& sample_points,
                        unsigned workers) {
  auto all = enumerate_parallel(field_discs, x, workers);
  return aggregate_towers(all, x, mode, sample_points);
}

}  // namespace wrc
