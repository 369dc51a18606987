// Automorphism groups of Cayley-Dickson loops.
//
// Up to Q_3 the groups are found by backtracking over images of the
// canonical generators. From Q_4 on every automorphism fixes e = i_n up to
// sign and preserves Q_(n-1), so Aut(Q_n) is built from Aut(Q_(n-1)) and
// the sign of the image of e.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdloops/element.hpp"
#include "cdloops/loopops.hpp"

namespace cdloops {

// Stored as the image of each positive basis element +e_v.
class Automorphism;

namespace detail {
// extend_aut without the multiplicativity check.
Automorphism extend_unchecked(const Automorphism& psi, Sign sign);
}  // namespace detail

class Automorphism {
 public:
  static Automorphism identity(int level);

  // Extends images of i_1..i_n through left-to-right products.
  // Throws std::invalid_argument if the result is not an automorphism.
  static Automorphism from_generator_images(int level,
                                            std::span<const LoopElement> gens);
  // table[a.index()] is the image of a, for every a in Q_n.
  // Throws std::invalid_argument if the table is not an automorphism.
  static Automorphism from_table(int level, std::span<const LoopElement> table);

  int level() const { return level_; }
  LoopElement operator()(const LoopElement& x) const;
  std::span<const LoopElement> positive_images() const { return images_; }
  std::vector<LoopElement> generator_images() const;
  // Image of every element, indexed by LoopElement::index().
  std::vector<LoopElement> table() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend std::strong_ordering operator<=>(const Automorphism& a,
                                          const Automorphism& b);

 private:
  Automorphism(int level, std::vector<LoopElement> images)
      : level_(level), images_(std::move(images)) {}

  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism inverse(const Automorphism&);
  friend std::vector<Automorphism> search_automorphisms(int);
  friend Automorphism detail::extend_unchecked(const Automorphism&, Sign);
  friend std::optional<Automorphism> restrict_aut(const Automorphism&);

  int level_ = 0;
  std::vector<LoopElement> images_;
};

// outer after inner.
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism inverse(const Automorphism& a);

// Bijective and multiplicative on all |Q_n|^2 pairs. The table is indexed
// by LoopElement::index() and must have 2^(n+1) entries.
bool is_automorphism(std::span<const LoopElement> table, int level);

// "i1->i2, i2->i1, i3->-i3"; "id" at level 0.
std::string format_automorphism(const Automorphism& a);

class AutGroup {
 public:
  // Elements are sorted; generators must generate exactly the element set,
  // otherwise std::logic_error.
  AutGroup(int level, std::vector<Automorphism> elements,
           std::vector<Automorphism> generators);

  int level() const { return level_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Automorphism> elements() const { return elements_; }
  std::span<const Automorphism> generators() const { return generators_; }
  bool contains(const Automorphism& a) const;

 private:
  int level_ = 0;
  std::vector<Automorphism> elements_;
  std::vector<Automorphism> generators_;
};

// Closure of gens under composition, sorted.
std::vector<Automorphism> generate_group(std::span<const Automorphism> gens,
                                         int level);

// Greedy generating set: walks the sorted elements and keeps each one not
// yet generated.
std::vector<Automorphism> greedy_generators(std::span<const Automorphism> group,
                                            int level);

// Every automorphism of Q_n by backtracking over generator images, pruning
// as soon as a product among assigned images fails. Sorted. Parallel over
// the image of i_1.
std::vector<Automorphism> search_automorphisms(int level);

// Requires level <= 3.
AutGroup brute_force_aut(int level);

// phi((x,0)) = (psi(x),0), phi((x,1)) = psi(x)(sign e). Requires
// psi.level() >= 3.
Automorphism extend_aut(const Automorphism& psi, Sign sign);

// The restriction to Q_(n-1) if phi maps Q_(n-1) into itself.
std::optional<Automorphism> restrict_aut(const Automorphism& phi);

// Brute force up to level 3, then the doubling construction. Results are
// cached per level. Requires level <= 6.
const AutGroup& aut_group(int level);

// Orbit of i_k under the pointwise stabilizer of i_1..i_(k-1), k = 1..n.
std::vector<std::size_t> orbit_stabilizer_factors(const AutGroup& g);

// The structure theorem for Aut(Q_n), n >= 4, checked on every element.
struct AutTheoremReport {
  int level = 0;
  std::size_t order = 0;
  bool fixes_plus_minus_one = true;
  bool e_to_plus_minus_e = true;
  bool preserves_lower_half = true;
  bool restriction_in_lower_group = true;
  bool upper_half_rule = true;
  // Restriction and the sign of phi(e) give an isomorphism onto
  // Aut(Q_(n-1)) x Z_2.
  bool direct_product = true;
  std::optional<std::size_t> brute_force_order;
  bool brute_force_matches = true;

  bool all() const {
    return fixes_plus_minus_one && e_to_plus_minus_e && preserves_lower_half &&
           restriction_in_lower_group && upper_half_rule && direct_product &&
           brute_force_matches;
  }
};

// Requires 4 <= level <= 5. The brute-force search is slow at level 5.
AutTheoremReport verify_aut_theorem(int level, bool brute_force);

// Label for group orders above level 5, which come from the doubling
// construction rather than the published list.
bool aut_order_is_extrapolated(int level);

}  // namespace cdloops
