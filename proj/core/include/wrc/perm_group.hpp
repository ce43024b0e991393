#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wrc/permutation.hpp"

namespace wrc {

struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};

/// Finitely generated permutation group with a fully enumerated element set.
/// Enumeration (rather than a stabilizer chain) is the point here: everything
/// downstream needs class structure over all elements, and the groups are
/// desk-scale. A hard order cap guards against runaway closures.
class PermGroup {
 public:
  static constexpr long long kDefaultOrderCap = 1000000;

  // Throws std::invalid_argument on mixed degrees, std::runtime_error
  // ("group too large") when closure exceeds the cap.
  static PermGroup generate(std::vector<Permutation> gens,
                            long long order_cap = kDefaultOrderCap);

  static PermGroup symmetric(int n, long long order_cap = kDefaultOrderCap);
  static PermGroup cyclic(int n, long long order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  bool transitive() const { return transitive_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;
  // lcm of element orders
  long long exponent() const;
  bool has_transposition() const;

  std::string describe() const;

 private:
  int degree_ = 0;
  bool transitive_ = false;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, uint32_t, PermHash> index_;
  friend class ClassTable;
  friend struct WreathOps;
};

/// Conjugacy classes of an enumerated group, each annotated with the common
/// index of its elements, plus an optional merge into k-classes.
class ClassTable {
 public:
  struct ClassInfo {
    Permutation rep;
    long long size = 0;
    long long element_order = 0;
    int ind = 0;
  };

  explicit ClassTable(const PermGroup& g);

  const PermGroup& group() const { return *group_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  int class_of(const Permutation& p) const;
  // class index of rep^a
  int power_class(int cls, long long a) const;

 private:
  const PermGroup* group_;
  std::vector<ClassInfo> classes_;
  std::vector<uint32_t> class_of_element_;
};

/// Which power maps g -> g^a identify conjugacy classes over the base field:
/// a unit subgroup U of (Z/NZ)*. U = (Z/NZ)* encodes k = Q; U = {1} encodes
/// a base field containing the N-th roots of unity.
class CyclotomicAction {
 public:
  static CyclotomicAction rationals(long long modulus);
  static CyclotomicAction cyclotomic(long long modulus);  // U = {1}
  // Validates closure under multiplication mod N and membership of 1.
  static CyclotomicAction custom(long long modulus,
                                 std::vector<long long> units);

  long long modulus() const { return modulus_; }
  const std::vector<long long>& units() const { return units_; }

 private:
  long long modulus_ = 1;
  std::vector<long long> units_;
};

struct KClassResult {
  // merged_of[i] = id of the merged class containing conjugacy class i
  std::vector<int> merged_of;
  int merged_count = 0;
};

/// Partition of {1..n} into equal blocks permuted by the group.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // 1-based points, each block sorted,
                                         // blocks sorted by first element
  int block_size() const { return static_cast<int>(blocks.front().size()); }
};

int ind_group(const PermGroup& g);               // error on trivial group
Rational a_invariant(const PermGroup& g);        // 1/ind(G)
ClassTable conjugacy_classes(const PermGroup& g);
// Merge classes under g -> g^a for a in U; modulus must be a multiple of the
// group exponent.
KClassResult k_classes(const ClassTable& table, const CyclotomicAction& act);
int b_invariant(const PermGroup& g, const CyclotomicAction& act);
int b_invariant_q(const PermGroup& g);  // U = (Z/NZ)*, N = exponent

// All minimal nontrivial block systems, sorted by block size then
// lexicographic blocks. Empty iff primitive.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);
bool is_primitive(const PermGroup& g);

// Imprimitive product: inner copies of h1 on d blocks of size e, h2 on the
// blocks; |result| = |h1|^d * |h2|.
PermGroup wreath_product(const PermGroup& h1, const PermGroup& h2,
                         long long order_cap = PermGroup::kDefaultOrderCap);

struct WreathDecomposition {
  int block_size = 0;   // e with G = S_e wr H
  PermGroup quotient;   // H acting on the blocks
};

// For transitive G containing a transposition: G = S_e wr H, verified by
// element-set equality after relabeling blocks canonically. Primitive case
// yields (n, trivial H). No transposition -> nullopt.
std::optional<WreathDecomposition> wreath_decompose(const PermGroup& g);

struct InvariantReport {
  int degree;
  long long order;
  int ind;
  Rational a;
  int b_q;
  bool primitive;
  std::vector<int> block_sizes;  // sizes of minimal systems
};

InvariantReport invariant_report(const PermGroup& g);

}  // namespace wrc

template <>
struct std::hash<wrc::Permutation> {
  size_t operator()(const wrc::Permutation& p) const {
    return wrc::PermHash{}(p);
  }
};
