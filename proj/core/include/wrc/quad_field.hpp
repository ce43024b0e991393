#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "wrc/interval.hpp"

namespace wrc {

// Kronecker symbol (a/n), completely multiplicative in n.
int kronecker(long long a, long long n);

bool is_squarefree(long long n);
bool is_fundamental_discriminant(long long d);

// All fundamental discriminants with 1 < |d| <= x, ascending |d|,
// positive sign first at equal magnitude.
std::vector<long long> fundamental_discs(long long x);

// #{fundamental d : |d| <= x}, by squarefree sieve. This is Z(Q, C2; x).
long long count_quadratic_q(long long x);

/// Element a + b*omega of the ring of integers, where omega = (1+sqrt(m))/2
/// for m = 1 mod 4 and sqrt(m) otherwise.
struct QuadElt {
  long long a = 0;
  long long b = 0;
  bool operator==(const QuadElt&) const = default;
};

struct FundamentalUnit {
  mpz_class t, u;  // unit = (t + u*sqrt(m))/2 with t^2 - m u^2 = +-4
  int norm = 0;    // +1 or -1
};

struct PrimeElement {
  long long p = 0;     // rational prime below
  int conj = 0;        // 0/1 distinguishes the two primes over a split p
  long long norm = 0;  // signed field norm of elt
  QuadElt elt;
  bool over_two() const { return p == 2; }
};

struct ResiduumReport {
  double lhs = 0, rhs = 0;
  bool ok = false;
};

/// A quadratic field given by its fundamental discriminant. Exact data
/// (class number, fundamental unit) is computed at construction; analytic
/// quantities are certified enclosures.
class QuadraticField {
 public:
  // Throws std::invalid_argument unless d is a fundamental discriminant.
  explicit QuadraticField(long long d, int prec = Interval::kDefaultPrec);

  long long discriminant() const { return d_; }
  long long core() const { return m_; }  // squarefree core
  int r1() const { return d_ > 0 ? 2 : 0; }
  int r2() const { return d_ > 0 ? 0 : 1; }
  int complex_places() const { return r2(); }  // i(K)
  int roots_of_unity() const { return w_; }
  long long class_number() const { return h_; }
  long long narrow_class_number() const { return h_narrow_; }
  const FundamentalUnit& fundamental_unit() const;  // d > 0 only
  Interval regulator() const;  // log of the fundamental unit; 0 for d < 0

  // res_{s=1} zeta_K, as the intersection of the L-value route and the
  // class-number-formula route; throws on disjoint enclosures.
  Interval residue_zeta() const;
  Interval zeta2(double tol = 1e-6) const;         // zeta_K(2)
  Interval ext_count_constant(double tol = 1e-6) const;  // R(K)

  // res zeta_K <= 2^3 |d|^eps / eps  (degree-2 instance)
  ResiduumReport residuum_check(double eps) const;

  // --- exact arithmetic in O_K, basis (1, omega) ---
  long long omega_trace() const { return om_t_; }   // omega + conj(omega)
  long long omega_norm() const { return -om_n_; }   // omega * conj(omega)
  QuadElt mul(const QuadElt& x, const QuadElt& y) const;
  QuadElt conj(const QuadElt& x) const;
  long long norm(const QuadElt& x) const;   // throws on int64 overflow
  long long trace(const QuadElt& x) const;
  bool is_square_elt(const QuadElt& x) const;
  // embeddings as doubles (real fields), for balancing only
  double embed(const QuadElt& x, bool second) const;
  QuadElt unit_elt() const;       // fundamental unit in (1, omega) coords
  QuadElt neg(const QuadElt& x) const { return {-x.a, -x.b}; }

  // One representative per associate class of prime elements with
  // |norm| <= bound; requires h = 1.
  std::vector<PrimeElement> prime_elements(long long bound) const;

  int precision() const { return prec_; }

 private:
  long long d_, m_;
  int w_;
  long long h_ = 0, h_narrow_ = 0;
  FundamentalUnit unit_;
  bool has_unit_ = false;
  long long om_t_, om_n_;  // omega^2 = om_t*omega + om_n
  int prec_;
};

struct LValue {
  int s = 0;
  long long chi_discriminant = 0;
  Interval value;
  long long truncation_n = 0;
};

// L(s, chi_d) for s in {1, 2}. s=1 uses the exact finite character sum over
// one period (no truncation error); s=2 sums directly with tail <= 1/N.
// Throws when tol would need more than the term budget.
LValue l_value(long long d, int s, double tol = 1e-6,
               int prec = Interval::kDefaultPrec);

// h / (sqrt|d| * log|d|), the degree-2 class-number-bound ratio.
double class_bound_ratio(long long d);

// Exact class number / fundamental unit without keeping the field around.
long long class_number(long long d);
FundamentalUnit fundamental_unit(long long d);

}  // namespace wrc
