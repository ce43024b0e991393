#include "wrc/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "wrc/asymptotics.hpp"
#include "wrc/perm_group.hpp"
#include "wrc/quad_field.hpp"
#include "wrc/towers.hpp"

namespace wrc {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

PermGroup named(const std::string& gens, int degree) {
  std::vector<Permutation> list;
  size_t pos = 0;
  while (pos < gens.size()) {
    size_t semi = gens.find(';', pos);
    std::string part =
        semi == std::string::npos ? gens.substr(pos) : gens.substr(pos, semi - pos);
    list.push_back(Permutation::parse(part, degree));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return PermGroup::generate(std::move(list));
}

struct Catalog {
  std::vector<std::pair<std::string, PermGroup>> groups;
  void add(const std::string& name, PermGroup g) {
    groups.emplace_back(name, std::move(g));
  }
};

Catalog build_catalog() {
  Catalog c;
  c.add("S2", PermGroup::symmetric(2));
  c.add("S3", PermGroup::symmetric(3));
  c.add("S4", PermGroup::symmetric(4));
  c.add("S5", PermGroup::symmetric(5));
  c.add("S6", PermGroup::symmetric(6));
  c.add("C3", PermGroup::cyclic(3));
  c.add("C4", PermGroup::cyclic(4));
  c.add("C5", PermGroup::cyclic(5));
  c.add("C6", PermGroup::cyclic(6));
  c.add("C8", PermGroup::cyclic(8));
  c.add("V4", named("(1,2)(3,4);(1,3)(2,4)", 4));
  c.add("D4", named("(1,2,3,4);(1,3)", 4));
  c.add("D5", named("(1,2,3,4,5);(2,5)(3,4)", 5));
  c.add("D6", named("(1,2,3,4,5,6);(2,6)(3,5)", 6));
  c.add("A4", named("(1,2,3);(2,3,4)", 4));
  c.add("A5", named("(1,2,3);(3,4,5)", 5));
  c.add("C2wrC2", wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(2)));
  c.add("C2wrC3", wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(3)));
  c.add("C3wrC2", wreath_product(PermGroup::cyclic(3), PermGroup::cyclic(2)));
  c.add("S3wrC2", wreath_product(PermGroup::symmetric(3), PermGroup::cyclic(2)));
  c.add("C2wrS3", wreath_product(PermGroup::cyclic(2), PermGroup::symmetric(3)));
  c.add("C2wrC4", wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(4)));
  c.add("C4wrC2", wreath_product(PermGroup::cyclic(4), PermGroup::cyclic(2)));
  c.add("C2wrC2wrC2",
        wreath_product(PermGroup::cyclic(2),
                       wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(2))));
  return c;
}

std::vector<long long> h1_fields(long long bound) {
  std::vector<long long> f;
  for (long long d : fundamental_discs(bound))
    if (QuadraticField(d).class_number() == 1) f.push_back(d);
  return f;
}

struct Runner {
  AcceptanceOptions opt;
  std::vector<CriterionResult> results;
  std::ostream* live = nullptr;
  // shared between tower criteria
  std::optional<std::vector<KummerClass>> tower_cache;
  std::optional<std::vector<long long>> f_cache;

  const std::vector<long long>& field_set() {
    if (!f_cache) f_cache = h1_fields(50);
    return *f_cache;
  }

  const std::vector<KummerClass>& towers_to_1e6() {
    if (!tower_cache)
      tower_cache = enumerate_tower_set(field_set(), 1000000, opt.workers);
    return *tower_cache;
  }

  bool selected(int id) const {
    return opt.only.empty() ||
           std::find(opt.only.begin(), opt.only.end(), id) != opt.only.end();
  }

  void run(int id, const std::string& name, double time_limit_s,
           const std::function<std::pair<bool, std::string>()>& body) {
    if (!selected(id)) return;
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto t0 = Clock::now();
    try {
      auto [ok, details] = body();
      r.pass = ok;
      r.details = details;
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (time_limit_s > 0 && r.seconds > time_limit_s) {
      r.pass = false;
      r.details += " [exceeded " + fmt(time_limit_s, 3) + " s limit]";
    }
    if (live) {
      (*live) << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name
              << "  (" << fmt(r.seconds, 3) << " s)  " << r.details << "\n";
      live->flush();
    }
    results.push_back(std::move(r));
  }
};

std::pair<bool, std::string> criterion_invariant_catalog() {
  struct Expect {
    const char* name;
    PermGroup g;
    long long a_num, a_den;
    int b;
  };
  std::vector<Expect> table;
  table.push_back({"S3", PermGroup::symmetric(3), 1, 1, 1});
  table.push_back({"C3", PermGroup::cyclic(3), 1, 2, 1});
  table.push_back({"C4", PermGroup::cyclic(4), 1, 2, 1});
  table.push_back({"D4", named("(1,2,3,4);(1,3)", 4), 1, 1, 1});
  table.push_back(
      {"C2wrC3", wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(3)), 1,
       1, 1});
  table.push_back(
      {"C2wrC2wrC2",
       wreath_product(PermGroup::cyclic(2),
                      wreath_product(PermGroup::cyclic(2), PermGroup::cyclic(2))),
       1, 1, 1});
  std::ostringstream os;
  bool ok = true;
  for (auto& e : table) {
    Rational a = a_invariant(e.g);
    int b = b_invariant_q(e.g);
    bool good = a.num == e.a_num && a.den == e.a_den && b == e.b;
    ok = ok && good;
    os << e.name << ":a=" << a.num << "/" << a.den << ",b=" << b
       << (good ? " " : "(MISMATCH) ");
  }
  return {ok, os.str()};
}

std::pair<bool, std::string> criterion_wreath_property() {
  std::mt19937_64 rng(202608);
  std::vector<PermGroup> pool;
  Catalog cat = build_catalog();
  for (auto& [name, g] : cat.groups)
    if (g.transitive() && g.order() <= 5000) pool.push_back(g);
  // add randomly generated transitive groups on 3..6 points
  for (int tries = 0; tries < 200 && pool.size() < 40; ++tries) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<uint16_t> p1(n), p2(n);
    for (int i = 0; i < n; ++i) p1[i] = p2[i] = static_cast<uint16_t>(i);
    std::shuffle(p1.begin(), p1.end(), rng);
    std::shuffle(p2.begin(), p2.end(), rng);
    try {
      PermGroup g = PermGroup::generate(
          {Permutation(std::move(p1)), Permutation(std::move(p2))}, 5000);
      if (g.transitive() && g.order() > 1) pool.push_back(std::move(g));
    } catch (const std::runtime_error&) {
      // closure above the small cap; skip
    }
  }
  int done = 0, failures = 0;
  for (int attempt = 0; attempt < 10000 && done < 50; ++attempt) {
    const PermGroup& h1 = pool[rng() % pool.size()];
    const PermGroup& h2 = pool[rng() % pool.size()];
    double size = std::pow(static_cast<double>(h1.order()), h2.degree()) *
                  static_cast<double>(h2.order());
    if (size > 100000.0) continue;
    PermGroup w = wreath_product(h1, h2);
    Rational a1 = a_invariant(h1), aw = a_invariant(w);
    int b1 = b_invariant_q(h1), bw = b_invariant_q(w);
    if (!(a1 == aw) || b1 != bw) ++failures;
    ++done;
  }
  std::ostringstream os;
  os << done << " random pairs, " << failures << " failures";
  return {done >= 50 && failures == 0, os.str()};
}

std::pair<bool, std::string> criterion_transposition_lemma() {
  Catalog cat = build_catalog();
  int checked = 0, failures = 0;
  std::ostringstream os;
  for (auto& [name, g] : cat.groups) {
    if (!g.transitive() || !g.has_transposition()) continue;
    ++checked;
    ClassTable table(g);
    long long transpositions = 0;
    int classes_with_transposition = 0;
    long long class_size = 0;
    for (const auto& e : g.elements())
      if (e.is_transposition()) ++transpositions;
    for (const auto& c : table.classes())
      if (c.rep.is_transposition()) {
        ++classes_with_transposition;
        class_size = c.size;
      }
    bool conjugate_ok =
        classes_with_transposition == 1 && class_size == transpositions;
    bool decomposed = false;
    try {
      auto dec = wreath_decompose(g);
      decomposed = dec.has_value();
    } catch (const std::exception& e) {
      os << name << ": " << e.what() << "; ";
    }
    if (!conjugate_ok || !decomposed) {
      ++failures;
      os << name << " failed; ";
    }
  }
  os << checked << " groups with transpositions checked, " << failures
     << " failures";
  return {checked >= 8 && failures == 0, os.str()};
}

std::pair<bool, std::string> criterion_count_c2() {
  long long x = 1000000;
  long long count = count_quadratic_q(x);
  double ratio = static_cast<double>(count) / static_cast<double>(x);
  double target = 0.607927;  // 1/zeta(2)
  double err = std::fabs(ratio - target);
  std::ostringstream os;
  os << "count=" << count << " ratio=" << fmt(ratio) << " |ratio-1/zeta(2)|="
     << fmt(err);
  return {err <= 0.01, os.str()};
}

std::pair<bool, std::string> criterion_per_field_counting() {
  QuadraticField k(-4);
  double r = k.ext_count_constant(1e-7).mid();
  auto classes = enumerate_towers(k, 10000);
  std::vector<double> discrepancy;
  std::ostringstream os;
  os << "R(Q(i))=" << fmt(r) << " ";
  for (long long x : {100LL, 1000LL, 10000LL}) {
    long long count = 0;
    for (const auto& c : classes)
      if (c.rel_disc_norm <= x) ++count;
    double ratio = static_cast<double>(count) / static_cast<double>(x);
    double disc = std::fabs(ratio - r) / r;
    discrepancy.push_back(disc);
    os << "x=" << x << ":count=" << count << ",disc=" << fmt(disc, 4) << " ";
  }
  bool decreasing = discrepancy[0] > discrepancy[1] &&
                    discrepancy[1] > discrepancy[2];
  bool close = discrepancy[2] <= 0.15;
  if (!decreasing) os << "(not strictly decreasing) ";
  return {decreasing && close, os.str()};
}

std::pair<bool, std::string> criterion_restricted_linear_growth(Runner& r) {
  const auto& fields = r.field_set();
  const auto& all = r.towers_to_1e6();
  std::vector<long long> samples = {10000, 31623, 100000, 316228, 1000000};
  TowerCount tc = aggregate_towers(all, 1000000, CountMode::kField, samples);
  std::vector<std::pair<double, double>> zd4;
  for (auto& s : tc.samples)
    zd4.emplace_back(static_cast<double>(s.x), static_cast<double>(s.z_d4));
  SlopeFit fit = slope_fit(zd4);
  Interval target_sum = restricted_residue_sum(fields);
  double target = target_sum.mid();
  double ratio = static_cast<double>(tc.z_d4) / 1e6;
  double rel_err = std::fabs(ratio - target) / target;
  std::ostringstream os;
  os << "|F|=" << fields.size() << " zd4(1e6)=" << tc.z_d4 << " slope="
     << fmt(fit.exponent, 4) << " ratio=" << fmt(ratio) << " target="
     << fmt(target) << " rel_err=" << fmt(rel_err, 4);
  bool ok = fit.exponent >= 0.9 && fit.exponent <= 1.1 && rel_err <= 0.15;
  return {ok, os.str()};
}

std::pair<bool, std::string> criterion_degenerate_towers(Runner& r) {
  const auto& all = r.towers_to_1e6();
  std::vector<long long> samples = {1000,   3163,   10000,  31623,
                                    100000, 316228, 1000000};
  TowerCount tc = aggregate_towers(all, 1000000, CountMode::kTower, samples);
  std::vector<std::pair<double, double>> y, zd4;
  bool identity_ok = true;
  for (auto& s : tc.samples) {
    identity_ok = identity_ok && (s.z_tilde == s.z_d4 + s.y);
    if (s.y > 0) y.emplace_back(static_cast<double>(s.x), static_cast<double>(s.y));
    zd4.emplace_back(static_cast<double>(s.x), static_cast<double>(s.z_d4));
  }
  SlopeFit yfit = slope_fit(y);
  double y_fraction =
      static_cast<double>(tc.y) / static_cast<double>(tc.z_tilde);
  std::ostringstream os;
  os << "y(1e6)=" << tc.y << " z~(1e6)=" << tc.z_tilde << " y_slope="
     << fmt(yfit.exponent, 4) << " y/z~=" << fmt(y_fraction, 4)
     << (identity_ok ? "" : " (z~ != zd4 + y!)");
  bool ok = identity_ok && yfit.exponent <= 0.85 && y_fraction <= 0.2;
  return {ok, os.str()};
}

std::pair<bool, std::string> criterion_disc_identities(Runner& r) {
  const auto& all = r.towers_to_1e6();
  long long checked = 0, failures = 0, abelian = 0;
  for (const auto& c : all) {
    ++checked;
    if (c.tower_disc != c.d_k * c.d_k * c.rel_disc_norm) ++failures;
    if (c.type == GaloisType::kV4) {
      ++abelian;
      long long prod = 1;
      for (long long d : c.subfield_discs) prod *= std::llabs(d);
      if (prod != c.tower_disc) ++failures;
    } else if (c.type == GaloisType::kC4) {
      ++abelian;
      long long f = c.c4_conductor;
      bool good = f > 0 && f * f * std::llabs(c.d_k) == c.tower_disc &&
                  f % std::llabs(c.d_k) == 0;
      if (!good) ++failures;
    }
  }
  // independent recomputation on the small towers
  long long revalidated = 0;
  for (const auto& c : all) {
    if (c.tower_disc > 10000) continue;
    QuadraticField k(c.d_k);
    if (relative_discriminant(k, c.delta) != c.rel_disc_norm) ++failures;
    if (galois_type(k, c.delta) != c.type) ++failures;
    ++revalidated;
  }
  std::ostringstream os;
  os << checked << " towers, " << abelian << " abelian, " << revalidated
     << " revalidated, " << failures << " failures";
  return {failures == 0 && checked > 0, os.str()};
}

std::pair<bool, std::string> criterion_witness_soundness(Runner& r) {
  const auto& all = r.towers_to_1e6();
  long long with_witness = 0, violations = 0;
  for (const auto& c : all) {
    if (!c.witness) continue;
    ++with_witness;
    if (c.type != GaloisType::kD4) ++violations;
  }
  std::ostringstream os;
  os << with_witness << " towers with witness, " << violations << " violations";
  return {violations == 0 && with_witness > 0, os.str()};
}

std::pair<bool, std::string> criterion_rank_bound() {
  std::mt19937_64 rng(414243);
  std::vector<long long> first20 = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  long long violations = 0;
  int sieve_checked = 0;
  for (int it = 0; it < 100; ++it) {
    size_t size = rng() % 7;
    std::set<long long> chosen;
    while (chosen.size() < size) chosen.insert(first20[rng() % first20.size()]);
    std::vector<long long> s(chosen.begin(), chosen.end());
    long long exact = exact_quadratic_ramified_count(s);
    long long products = exact_quadratic_ramified_count_products(s);
    RankBound rb = ell_rank_bound(RankBoundQuery{std::nullopt, 2, s});
    if (exact != products) ++violations;
    if (exact > rb.bound) ++violations;
    __int128 max_disc = 1;
    for (long long p : s) max_disc *= p;
    max_disc *= 8;
    if (max_disc <= 2000000) {
      ++sieve_checked;
      long long sieved = exact_quadratic_ramified_count_sieve(
          s, static_cast<long long>(max_disc));
      if (sieved != exact) ++violations;
    }
  }
  std::ostringstream os;
  os << "100 random sets, " << sieve_checked << " sieve-checked, " << violations
     << " violations";
  return {violations == 0 && sieve_checked > 10, os.str()};
}

std::pair<bool, std::string> criterion_analytic_consistency(Runner& r) {
  auto discs = fundamental_discs(10000);
  std::atomic<long long> failures{0};
  std::atomic<long long> done{0};
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      long long d = discs[i];
      try {
        QuadraticField k(d);
        Interval l1 = l_value(d, 1).value;
        Interval h_analytic(k.precision());
        if (d < 0) {
          Interval num = Interval::exact(k.roots_of_unity()) *
                         Interval::exact(std::llabs(d)).sqrt() * l1;
          h_analytic = num / (Interval::exact(2) * Interval::pi());
        } else {
          h_analytic = Interval::exact(d).sqrt() * l1 /
                       (Interval::exact(2) * k.regulator());
        }
        long long h = k.class_number();
        bool ok = h_analytic.width() < 1.0 && h_analytic.contains(
                      static_cast<double>(h));
        ok = ok && std::llround(h_analytic.mid()) == h;
        k.residue_zeta();  // throws when the two routes disagree
        for (double eps : {0.25, 0.5, 1.0})
          ok = ok && k.residuum_check(eps).ok;
        if (!ok) ++failures;
      } catch (const std::exception&) {
        ++failures;
      }
      ++done;
    }
  };
  unsigned workers = std::max(1u, r.opt.workers);
  if (workers <= 1) {
    work(0, discs.size());
  } else {
    std::vector<std::future<void>> futs;
    size_t chunk = (discs.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      size_t lo = w * chunk, hi = std::min(discs.size(), lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, work, lo, hi));
    }
    for (auto& f : futs) f.get();
  }
  std::ostringstream os;
  os << done.load() << " fields checked, " << failures.load() << " failures";
  return {failures == 0, os.str()};
}

std::pair<bool, std::string> criterion_residue_series(Runner& r) {
  ResidueSeries s1 = residue_series(1000, 0.5, r.opt.workers);
  ResidueSeries s2 = residue_series(4000, 0.5, r.opt.workers);
  ResidueSeries s3 = residue_series(16000, 0.5, r.opt.workers);
  bool monotone = s1.partial_sum.lo() <= s2.partial_sum.lo() &&
                  s2.partial_sum.lo() <= s3.partial_sum.lo() &&
                  s1.partial_sum.hi() <= s2.partial_sum.hi() &&
                  s2.partial_sum.hi() <= s3.partial_sum.hi();
  bool tails_shrink = tail_bound(1000) > tail_bound(4000) &&
                      tail_bound(4000) > tail_bound(16000);
  // restricted sum = the per-field term sum, to interval equality
  const auto& fields = r.field_set();
  Interval restricted = restricted_residue_sum(fields);
  Interval manual(restricted.precision());
  std::vector<long long> ordered = fields;
  std::sort(ordered.begin(), ordered.end(), [](long long a, long long b) {
    if (std::llabs(a) != std::llabs(b)) return std::llabs(a) < std::llabs(b);
    return a > b;
  });
  for (long long d : ordered) manual += residue_series_term(d);
  bool equal = restricted.lo() == manual.lo() && restricted.hi() == manual.hi();
  std::ostringstream os;
  os << "partial(1e3)=" << s1.partial_sum.str(6) << " partial(16e3)="
     << s3.partial_sum.str(6) << " restricted=" << restricted.str(8)
     << (monotone ? "" : " (not monotone!)")
     << (equal ? "" : " (restricted != term sum!)");
  return {monotone && tails_shrink && equal, os.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream* live) {
  Runner r;
  r.opt = opt;
  r.live = live;
  r.run(1, "invariant catalog (a, b) exact values", 5.0,
        criterion_invariant_catalog);
  r.run(2, "wreath lemma on random pairs", 120.0, criterion_wreath_property);
  r.run(3, "transposition conjugacy and wreath decomposition", 0,
        criterion_transposition_lemma);
  r.run(4, "Z(Q,C2;x)/x vs 1/zeta(2) at x=1e6", 10.0, criterion_count_c2);
  r.run(5, "quadratic extensions of Q(i) approach R(Q(i))", 300.0,
        criterion_per_field_counting);
  r.run(6, "restricted linear growth of Z_D4", 1800.0,
        [&] { return criterion_restricted_linear_growth(r); });
  r.run(7, "degenerate towers are negligible", 0,
        [&] { return criterion_degenerate_towers(r); });
  r.run(8, "discriminant identities", 0, [&] { return criterion_disc_identities(r); });
  r.run(9, "witness soundness", 0, [&] { return criterion_witness_soundness(r); });
  r.run(10, "2-rank bound vs exact ramified counts", 60.0, criterion_rank_bound);
  r.run(11, "analytic class data consistency to 1e4", 600.0,
        [&] { return criterion_analytic_consistency(r); });
  r.run(12, "residue series monotone and restricted-sum equality", 0,
        [&] { return criterion_residue_series(r); });
  return r.results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace wrc
