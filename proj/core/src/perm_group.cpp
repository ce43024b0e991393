#include "wrc/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wrc {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

// disjoint-set over points
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

PermGroup PermGroup::generate(std::vector<Permutation> gens,
                              long long order_cap) {
  if (gens.empty()) throw std::invalid_argument("no generators given");
  int n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n)
      throw std::invalid_argument("generators have mixed degrees");

  PermGroup grp;
  grp.degree_ = n;
  grp.gens_ = std::move(gens);

  Permutation id = Permutation::identity(n);
  grp.elements_.push_back(id);
  grp.index_.emplace(id, 0);
  std::deque<uint32_t> queue{0};
  while (!queue.empty()) {
    uint32_t i = queue.front();
    queue.pop_front();
    for (const auto& g : grp.gens_) {
      Permutation next = grp.elements_[i] * g;
      auto [it, fresh] =
          grp.index_.emplace(next, static_cast<uint32_t>(grp.elements_.size()));
      if (fresh) {
        if (static_cast<long long>(grp.elements_.size()) >= order_cap)
          throw std::runtime_error(
              "group too large: closure exceeds order cap " +
              std::to_string(order_cap));
        grp.elements_.push_back(std::move(next));
        queue.push_back(it->second);
      }
    }
  }

  // transitivity: orbit of point 0 under the generators
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<uint16_t> pts{0};
  int reached = 1;
  while (!pts.empty()) {
    uint16_t x = pts.front();
    pts.pop_front();
    for (const auto& g : grp.gens_) {
      uint16_t y = g.apply(x);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        pts.push_back(y);
      }
    }
  }
  grp.transitive_ = (reached == n);
  return grp;
}

PermGroup PermGroup::symmetric(int n, long long order_cap) {
  if (n == 1) return generate({Permutation::identity(1)}, order_cap);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::parse("(1,2)", n));
  if (n > 2) {
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << i;
    os << ')';
    gens.push_back(Permutation::parse(os.str(), n));
  }
  return generate(std::move(gens), order_cap);
}

PermGroup PermGroup::cyclic(int n, long long order_cap) {
  if (n == 1) return generate({Permutation::identity(1)}, order_cap);
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << i;
  os << ')';
  return generate({Permutation::parse(os.str(), n)}, order_cap);
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && index_.count(p) > 0;
}

long long PermGroup::exponent() const {
  long long e = 1;
  for (const auto& g : elements_) e = std::lcm(e, g.order());
  return e;
}

bool PermGroup::has_transposition() const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [](const Permutation& p) { return p.is_transposition(); });
}

std::string PermGroup::describe() const {
  std::ostringstream os;
  os << "<degree " << degree_ << ", order " << order() << ", "
     << (transitive_ ? "transitive" : "intransitive") << ">";
  return os.str();
}

ClassTable::ClassTable(const PermGroup& g) : group_(&g) {
  const auto& elems = g.elements();
  class_of_element_.assign(elems.size(), UINT32_MAX);
  std::vector<Permutation> gen_inv;
  for (const auto& x : g.generators()) gen_inv.push_back(x.inverse());

  for (uint32_t start = 0; start < elems.size(); ++start) {
    if (class_of_element_[start] != UINT32_MAX) continue;
    uint32_t cls = static_cast<uint32_t>(classes_.size());
    long long size = 0;
    std::deque<uint32_t> queue{start};
    class_of_element_[start] = cls;
    while (!queue.empty()) {
      uint32_t i = queue.front();
      queue.pop_front();
      ++size;
      for (size_t k = 0; k < g.generators().size(); ++k) {
        Permutation c = gen_inv[k] * elems[i] * g.generators()[k];
        uint32_t j = g.index_.at(c);
        if (class_of_element_[j] == UINT32_MAX) {
          class_of_element_[j] = cls;
          queue.push_back(j);
        }
      }
    }
    ClassInfo info;
    info.rep = elems[start];
    info.size = size;
    info.element_order = elems[start].order();
    info.ind = elems[start].ind();
    classes_.push_back(std::move(info));
  }
}

int ClassTable::class_of(const Permutation& p) const {
  return static_cast<int>(class_of_element_.at(group_->index_.at(p)));
}

int ClassTable::power_class(int cls, long long a) const {
  return class_of(classes_[cls].rep.power(a));
}

CyclotomicAction CyclotomicAction::rationals(long long modulus) {
  std::vector<long long> units;
  for (long long a = 1; a < modulus; ++a)
    if (gcd_ll(a, modulus) == 1) units.push_back(a);
  if (modulus == 1) units.push_back(0);  // degenerate N=1: unit group trivial
  CyclotomicAction act;
  act.modulus_ = modulus;
  act.units_ = std::move(units);
  return act;
}

CyclotomicAction CyclotomicAction::cyclotomic(long long modulus) {
  CyclotomicAction act;
  act.modulus_ = modulus;
  act.units_ = {modulus == 1 ? 0 : 1};
  return act;
}

CyclotomicAction CyclotomicAction::custom(long long modulus,
                                          std::vector<long long> units) {
  std::set<long long> set(units.begin(), units.end());
  bool has_one = set.count(1 % modulus) > 0;
  for (long long a : set) {
    if (gcd_ll(a, modulus) != 1)
      throw std::invalid_argument("unit " + std::to_string(a) +
                                  " not coprime to modulus");
    for (long long b : set)
      if (!set.count(a * b % modulus))
        throw std::invalid_argument("unit set not closed under multiplication");
  }
  if (!has_one) throw std::invalid_argument("unit set must contain 1");
  CyclotomicAction act;
  act.modulus_ = modulus;
  act.units_.assign(set.begin(), set.end());
  return act;
}

int ind_group(const PermGroup& g) {
  int best = -1;
  for (const auto& e : g.elements()) {
    if (e.is_identity()) continue;
    int v = e.ind();
    if (best < 0 || v < best) best = v;
  }
  if (best < 0) throw std::runtime_error("ind of the trivial group is undefined");
  return best;
}

Rational a_invariant(const PermGroup& g) { return Rational{1, ind_group(g)}; }

ClassTable conjugacy_classes(const PermGroup& g) { return ClassTable(g); }

KClassResult k_classes(const ClassTable& table, const CyclotomicAction& act) {
  long long n = act.modulus();
  long long exp = table.group().exponent();
  if (n % exp != 0)
    throw std::invalid_argument(
        "cyclotomic modulus " + std::to_string(n) +
        " is not a multiple of the group exponent " + std::to_string(exp));
  int k = static_cast<int>(table.classes().size());
  UnionFind uf(k);
  for (int c = 0; c < k; ++c)
    for (long long a : act.units()) uf.unite(c, table.power_class(c, a));
  KClassResult res;
  res.merged_of.resize(k);
  std::vector<int> relabel(k, -1);
  int next = 0;
  for (int c = 0; c < k; ++c) {
    int root = uf.find(c);
    if (relabel[root] < 0) relabel[root] = next++;
    res.merged_of[c] = relabel[root];
  }
  res.merged_count = next;
  return res;
}

int b_invariant(const PermGroup& g, const CyclotomicAction& act) {
  int min_ind = ind_group(g);
  ClassTable table(g);
  KClassResult merged = k_classes(table, act);
  std::set<int> hit;
  for (size_t c = 0; c < table.classes().size(); ++c)
    if (table.classes()[c].ind == min_ind) hit.insert(merged.merged_of[c]);
  return static_cast<int>(hit.size());
}

int b_invariant_q(const PermGroup& g) {
  return b_invariant(g, CyclotomicAction::rationals(g.exponent()));
}

namespace {

// finest G-congruence identifying points a and b (0-based), as block id per
// point; returns empty when it degenerates to the full set
std::vector<int> joined_partition(const PermGroup& g, int a, int b) {
  int n = g.degree();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> todo{{a, b}};
  uf.unite(a, b);
  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop_front();
    for (const auto& gen : g.generators()) {
      int gx = gen.apply(static_cast<uint16_t>(x));
      int gy = gen.apply(static_cast<uint16_t>(y));
      if (uf.unite(gx, gy)) todo.emplace_back(gx, gy);
    }
    // keep the congruence transitive: nothing else needed, union-find closes it
  }
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = uf.find(i);
  return id;
}

BlockSystem partition_to_system(const std::vector<int>& id) {
  std::unordered_map<int, std::vector<int>> by_root;
  for (size_t i = 0; i < id.size(); ++i)
    by_root[id[i]].push_back(static_cast<int>(i) + 1);
  BlockSystem bs;
  for (auto& [root, pts] : by_root) {
    std::sort(pts.begin(), pts.end());
    bs.blocks.push_back(std::move(pts));
  }
  std::sort(bs.blocks.begin(), bs.blocks.end());
  return bs;
}

bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  // every fine block inside some coarse block
  int n = 0;
  for (const auto& blk : coarse.blocks) n += static_cast<int>(blk.size());
  std::vector<int> owner(n + 1, -1);
  for (size_t j = 0; j < coarse.blocks.size(); ++j)
    for (int p : coarse.blocks[j]) owner[p] = static_cast<int>(j);
  for (const auto& blk : fine.blocks) {
    int o = owner[blk.front()];
    for (int p : blk)
      if (owner[p] != o) return false;
  }
  return true;
}

}  // namespace

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  if (!g.transitive())
    throw std::invalid_argument("block systems need a transitive group");
  int n = g.degree();
  std::vector<BlockSystem> candidates;
  std::set<std::vector<std::vector<int>>> seen;
  for (int w = 1; w < n; ++w) {
    auto id = joined_partition(g, 0, w);
    auto bs = partition_to_system(id);
    if (static_cast<int>(bs.blocks.size()) <= 1) continue;           // full join
    if (static_cast<int>(bs.blocks.size()) == n) continue;           // discrete
    if (seen.insert(bs.blocks).second) candidates.push_back(std::move(bs));
  }
  // minimal = no other candidate strictly finer
  std::vector<BlockSystem> result;
  for (size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < candidates.size() && minimal; ++j) {
      if (i == j) continue;
      if (refines(candidates[j], candidates[i]) &&
          candidates[j].blocks != candidates[i].blocks)
        minimal = false;
    }
    if (minimal) result.push_back(candidates[i]);
  }
  std::sort(result.begin(), result.end(),
            [](const BlockSystem& a, const BlockSystem& b) {
              if (a.block_size() != b.block_size())
                return a.block_size() < b.block_size();
              return a.blocks < b.blocks;
            });
  return result;
}

bool is_primitive(const PermGroup& g) {
  return minimal_block_systems(g).empty();
}

PermGroup wreath_product(const PermGroup& h1, const PermGroup& h2,
                         long long order_cap) {
  if (!h1.transitive() || !h2.transitive())
    throw std::invalid_argument("wreath product needs transitive factors");
  int e = h1.degree();
  int d = h2.degree();
  int n = e * d;
  if (n > 65535) throw std::invalid_argument("wreath degree too large");
  std::vector<Permutation> gens;
  // h1 acting on the first block
  for (const auto& g : h1.generators()) {
    std::vector<uint16_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (int j = 0; j < e; ++j) img[j] = g.apply(static_cast<uint16_t>(j));
    gens.emplace_back(std::move(img));
  }
  // h2 permuting the blocks
  for (const auto& g : h2.generators()) {
    std::vector<uint16_t> img(n);
    for (int i = 0; i < d; ++i) {
      int ti = g.apply(static_cast<uint16_t>(i));
      for (int j = 0; j < e; ++j)
        img[i * e + j] = static_cast<uint16_t>(ti * e + j);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup::generate(std::move(gens), order_cap);
}

std::optional<WreathDecomposition> wreath_decompose(const PermGroup& g) {
  if (!g.transitive())
    throw std::invalid_argument("wreath decomposition needs a transitive group");
  if (!g.has_transposition()) return std::nullopt;
  int n = g.degree();

  auto systems = minimal_block_systems(g);
  if (systems.empty()) {
    // primitive with a transposition: the full symmetric group
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (g.order() != fact)
      throw std::logic_error(
          "primitive group with transposition is not symmetric");
    WreathDecomposition dec;
    dec.block_size = n;
    dec.quotient = PermGroup::generate({Permutation::identity(1)});
    return dec;
  }

  const BlockSystem& bs = systems.front();  // smallest block size
  int e = bs.block_size();
  int d = static_cast<int>(bs.blocks.size());
  // canonical relabeling: blocks ordered by minimum element (they are, after
  // sorting), points within a block in increasing order
  std::vector<int> newpos(n);  // old 0-based -> new 0-based
  for (int bi = 0; bi < d; ++bi)
    for (int j = 0; j < e; ++j) newpos[bs.blocks[bi][j] - 1] = bi * e + j;

  // quotient action on blocks
  std::vector<int> block_of(n);
  for (int bi = 0; bi < d; ++bi)
    for (int p : bs.blocks[bi]) block_of[p - 1] = bi;
  std::vector<Permutation> qgens;
  for (const auto& gen : g.generators()) {
    std::vector<uint16_t> img(d);
    for (int bi = 0; bi < d; ++bi)
      img[bi] =
          static_cast<uint16_t>(block_of[gen.apply(
              static_cast<uint16_t>(bs.blocks[bi][0] - 1))]);
    qgens.emplace_back(std::move(img));
  }
  PermGroup quotient = PermGroup::generate(std::move(qgens));

  // verify G = S_e wr H as a set in the relabeled coordinates
  PermGroup model = wreath_product(PermGroup::symmetric(e), quotient,
                                   g.order() + 1);
  if (model.order() != g.order())
    throw std::logic_error("wreath decomposition failed: order mismatch");
  for (const auto& el : g.elements()) {
    std::vector<uint16_t> img(n);
    for (int x = 0; x < n; ++x)
      img[newpos[x]] =
          static_cast<uint16_t>(newpos[el.apply(static_cast<uint16_t>(x))]);
    if (!model.contains(Permutation(std::move(img))))
      throw std::logic_error("wreath decomposition failed: set mismatch");
  }

  WreathDecomposition dec;
  dec.block_size = e;
  dec.quotient = std::move(quotient);
  return dec;
}

InvariantReport invariant_report(const PermGroup& g) {
  if (!g.transitive())
    throw std::invalid_argument("invariants need a transitive group");
  InvariantReport rep;
  rep.degree = g.degree();
  rep.order = g.order();
  rep.ind = ind_group(g);
  rep.a = a_invariant(g);
  rep.b_q = b_invariant_q(g);
  auto systems = minimal_block_systems(g);
  rep.primitive = systems.empty();
  for (const auto& s : systems) rep.block_sizes.push_back(s.block_size());
  return rep;
}

}  // namespace wrc
