// Loop-theoretic machinery on Q_n: commutators, associators, generated
// subloops, the classical invariant subloops, normality, and the subloop
// lattice.

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdloops/element.hpp"

namespace cdloops {

enum class Sign : int { kPlus = 1, kMinus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPlus : Sign::kMinus;
}
constexpr Sign operator-(Sign a) { return a * Sign::kMinus; }
constexpr int value(Sign s) { return static_cast<int>(s); }

// Applies a sign to an element: kMinus negates.
inline LoopElement operator*(Sign s, const LoopElement& a) {
  return s == Sign::kPlus ? a : -a;
}

struct Triple {
  LoopElement x, y, z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// A multiplicatively closed subset of Q_n, stored in canonical element order.
class Subloop {
 public:
  // Sorts and deduplicates; throws std::invalid_argument if 1 is missing,
  // the set is not closed, or the levels differ.
  static Subloop from_elements(int level, std::vector<LoopElement> elements);
  // All of Q_level.
  static Subloop whole(int level);

  int level() const { return level_; }
  std::size_t size() const { return elements_.size(); }
  std::span<const LoopElement> elements() const { return elements_; }
  bool contains(const LoopElement& a) const;

  friend bool operator==(const Subloop&, const Subloop&) = default;
  // Canonical subloop order: by size, then lexicographically by elements.
  friend std::strong_ordering operator<=>(const Subloop& a, const Subloop& b);

 private:
  Subloop(int level, std::vector<LoopElement> sorted)
      : level_(level), elements_(std::move(sorted)) {}

  friend Subloop closure(std::span<const LoopElement>, int);

  int level_ = 0;
  std::vector<LoopElement> elements_;
};

// Elements in canonical order, comma-separated, e.g. "1,-1,i1,-i1".
std::string format_subloop(const Subloop& s);

// [x,y] defined by xy = (yx)[x,y].
Sign commutator(const LoopElement& x, const LoopElement& y);
// [x,y,z] defined by (xy)z = (x(yz))[x,y,z].
Sign associator(const LoopElement& x, const LoopElement& y,
                const LoopElement& z);

// Smallest multiplicatively closed set containing gens and 1.
Subloop closure(std::span<const LoopElement> gens, int level);
Subloop closure(std::initializer_list<LoopElement> gens, int level);

enum class PairClass { kReal, kComplex, kQuaternion };
std::string to_string(PairClass c);

// Isomorphism class of <x,y> read off from x and y alone.
PairClass pair_class(const LoopElement& x, const LoopElement& y);

Subloop commutant(const Subloop& s);
Subloop nucleus(const Subloop& s);
Subloop center(const Subloop& s);
// Generated by all associator values in s.
Subloop associator_subloop(const Subloop& s);
// Generated by all commutator and associator values in s.
Subloop derived_subloop(const Subloop& s);

// Checks xS = Sx, (xS)y = x(Sy) and x(yS) = (xy)S for all x, y in Q_n.
// Requires level <= 6.
bool is_normal(const Subloop& s);

// Every subloop of Q_n in canonical order: {1} plus the preimages of the
// subspaces of (Z_2)^n. Requires level <= 6.
std::vector<Subloop> all_subloops(int level);
// The subloops of size 2^n (index 2). Requires 1 <= level <= 6.
std::vector<Subloop> index2_subloops(int level);

// Every subloop normal. Requires level <= 5.
bool is_hamiltonian(int level);

std::optional<Triple> moufang_counterexample(const Subloop& s);
// (xy)(zx) = (x(yz))x for all x, y, z in s.
bool is_moufang(const Subloop& s);
std::optional<Triple> associativity_counterexample(const Subloop& s);
bool is_group(const Subloop& s);
bool is_commutative(const Subloop& s);
// Order 8, associative, non-commutative, and a unique element of order 2.
bool is_quaternion_group(const Subloop& s);
// Every 2-generated subloop of Q_n is a group (exhaustive).
bool is_diassociative(int level);

// The four hypotheses of Norton's theorem on diassociative Hamiltonian
// loops, evaluated with K = Q_n.
struct NortonReport {
  int level = 0;
  bool orders_in_1_2_4 = false;
  std::optional<std::pair<LoopElement, LoopElement>> quaternion_pair;
  bool order_two_central = false;
  bool order_four_relations = false;
  std::optional<Triple> order_four_counterexample;

  bool all() const {
    return orders_in_1_2_4 && quaternion_pair.has_value() &&
           order_two_central && order_four_relations;
  }
};

// Requires level <= 5.
NortonReport norton_conditions(int level);

}  // namespace cdloops
