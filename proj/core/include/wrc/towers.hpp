#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrc/quad_field.hpp"

namespace wrc {

enum class GaloisType { kD4, kC4, kV4 };
const char* to_string(GaloisType t);

/// Canonical name of a square class of K*: a unit-class index together with
/// the sorted list of prime divisors of delta. Two classes over the same K
/// define equal fields iff their ids match.
struct SquareClassId {
  int unit_idx = 0;
  std::vector<std::pair<long long, int>> primes;  // (p, conj), sorted
  auto operator<=>(const SquareClassId&) const = default;
};

/// A quadratic extension L = K(sqrt(delta)) of a class-number-one quadratic
/// field, with its exact relative and absolute discriminant data.
struct KummerClass {
  long long d_k = 0;
  QuadElt delta;
  SquareClassId id;
  long long rel_disc_norm = 0;  // N(d_{L/K})
  long long tower_disc = 0;     // = d_k^2 * rel_disc_norm = |d_L|
  GaloisType type = GaloisType::kD4;
  std::optional<long long> witness;  // smallest unramified p with p || N(d_{L/K})
  // for V4: fundamental discriminants of the three quadratic subfields
  std::array<long long, 3> subfield_discs{0, 0, 0};
  long long c4_conductor = 0;  // for C4: f with f^2 * |d_K| = tower_disc
};

// Unit square class representatives of O_K^* (first entry is 1).
std::vector<QuadElt> unit_square_classes(const QuadraticField& k);

// 2-adic part of N(d_{L/K}) as a function of delta mod 8.
class TwoAdicTable {
 public:
  explicit TwoAdicTable(const QuadraticField& k);
  long long two_part_norm(const QuadElt& delta) const;

 private:
  std::array<long long, 64> table_;
};

// N(d_{L/K}) for L = K(sqrt(delta)); validates that delta is a squarefree
// non-square representative.
long long relative_discriminant(const QuadraticField& k, const QuadElt& delta);

GaloisType galois_type(const QuadraticField& k, const QuadElt& delta);

// Smallest rational prime unramified in K/Q that exactly divides
// N(d_{L/K}), if any.
std::optional<long long> lemma_tower_witness(const QuadraticField& k,
                                             const QuadElt& delta);

// Largest divisor of a coprime to every prime in s.
long long coprime_part(long long a, const std::vector<long long>& s);

// One representative per square class of K* built from prime elements with
// odd-part norm <= norm_bound; every L with N(d_{L/K}) <= norm_bound arises.
// Requires h(K) = 1.
std::vector<KummerClass> squarefree_elements(const QuadraticField& k,
                                             long long norm_bound);

// The classes with rel_disc_norm <= rel_bound, fully annotated and sorted by
// (tower_disc, square class).
std::vector<KummerClass> enumerate_towers(const QuadraticField& k,
                                          long long rel_bound);

// #{L/K quadratic : N(d_{L/K}) <= x}  (Z(K, C2; x))
long long count_quadratic_ext(const QuadraticField& k, long long x);

enum class CountMode { kTower, kField };

struct TowerSample {
  long long x = 0;
  long long z_tilde = 0;
  long long z_d4 = 0;
  long long y = 0;
};

struct TowerCount {
  long long x = 0;
  CountMode mode = CountMode::kTower;
  long long z_tilde = 0;
  long long z_d4 = 0;
  long long y = 0;
  std::vector<TowerSample> samples;
};

// Enumerates all towers over the given fields with tower_disc <= x and counts
// them, in tower mode (pairs L/K) or field mode (distinct L; V4 fields reached
// through several K in the set collapse to one). sample_points must be
// ascending; x itself is always appended. Fields with h != 1 raise an error
// naming the field. `workers` parallelises over the field set; the result is
// independent of it.
TowerCount count_towers(const std::vector<long long>& field_discs, long long x,
                        CountMode mode,
                        const std::vector<long long>& sample_points = {},
                        unsigned workers = 1);

// Aggregation of an already enumerated class list into counters.
TowerCount aggregate_towers(const std::vector<KummerClass>& classes,
                            long long x, CountMode mode,
                            const std::vector<long long>& sample_points = {});

// Tower dump for reporting: every class over the field set, ascending
// (tower_disc, d_k, square class).
std::vector<KummerClass> enumerate_tower_set(
    const std::vector<long long>& field_discs, long long x,
    unsigned workers = 1);

}  // namespace wrc
