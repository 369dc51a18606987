#include "cdloops/loopops.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>

#include "cdloops/parallel.hpp"

namespace cdloops {

namespace {

constexpr int kMaxEnumerationLevel = 6;
using Mask = std::bitset<std::size_t{1} << (kMaxEnumerationLevel + 1)>;

void require_level_at_most(int level, int bound, const char* what) {
  if (level < 0 || level > bound) {
    throw std::invalid_argument(std::string(what) + ": level " +
                                std::to_string(level) + " exceeds bound " +
                                std::to_string(bound));
  }
}

// Compares two products that agree up to sign and returns the relating sign.
Sign relative_sign(const LoopElement& lhs, const LoopElement& rhs) {
  if (lhs == rhs) return Sign::kPlus;
  if (lhs == -rhs) return Sign::kMinus;
  throw std::logic_error("products differ by more than a sign: " +
                         format_element(lhs) + " vs " + format_element(rhs));
}

std::vector<LoopElement> sorted_unique(std::vector<LoopElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Preimage of a subspace of (Z_2)^n given by its vectors.
std::vector<LoopElement> signed_preimage(int level,
                                         std::span<const Bits> vectors) {
  std::vector<LoopElement> out;
  out.reserve(vectors.size() * 2);
  for (Bits v : vectors) {
    out.emplace_back(level, false, v);
    out.emplace_back(level, true, v);
  }
  return out;
}

std::vector<Bits> span_of(std::span<const Bits> rows) {
  std::vector<Bits> out{0};
  for (Bits r : rows) {
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) out.push_back(out[k] ^ r);
  }
  return out;
}

// Enumerates subspaces of (Z_2)^n through their reduced row echelon bases.
// A row's pivot is its lowest set bit; other rows vanish there, and the
// free entries sit on non-pivot positions above the pivot.
void enumerate_subspaces(int n, std::vector<std::vector<Bits>>& out) {
  for (Bits pivots = 0; pivots < (Bits{1} << n); ++pivots) {
    std::vector<int> pivot_list;
    for (int p = 0; p < n; ++p) {
      if ((pivots >> p) & 1U) pivot_list.push_back(p);
    }
    std::vector<std::vector<int>> free_slots(pivot_list.size());
    int total_free = 0;
    for (std::size_t r = 0; r < pivot_list.size(); ++r) {
      for (int q = pivot_list[r] + 1; q < n; ++q) {
        if (((pivots >> q) & 1U) == 0) free_slots[r].push_back(q);
      }
      total_free += static_cast<int>(free_slots[r].size());
    }
    for (Bits fill = 0; fill < (Bits{1} << total_free); ++fill) {
      std::vector<Bits> rows;
      int used = 0;
      for (std::size_t r = 0; r < pivot_list.size(); ++r) {
        Bits row = Bits{1} << pivot_list[r];
        for (int q : free_slots[r]) {
          if ((fill >> used++) & 1U) row |= Bits{1} << q;
        }
        rows.push_back(row);
      }
      out.push_back(span_of(rows));
    }
  }
}

}  // namespace

Subloop Subloop::from_elements(int level, std::vector<LoopElement> elements) {
  for (const auto& a : elements) {
    if (a.level() != level) {
      throw std::invalid_argument("subloop element " + format_element(a) +
                                  " has level " + std::to_string(a.level()) +
                                  ", expected " + std::to_string(level));
    }
  }
  Subloop s(level, sorted_unique(std::move(elements)));
  if (!s.contains(LoopElement::identity(level))) {
    throw std::invalid_argument("subloop must contain 1");
  }
  for (const auto& a : s.elements_) {
    for (const auto& b : s.elements_) {
      if (!s.contains(a * b)) {
        throw std::invalid_argument("set is not closed: " + format_element(a) +
                                    " * " + format_element(b));
      }
    }
  }
  return s;
}

Subloop Subloop::whole(int level) { return {level, loop_elements(level)}; }

bool Subloop::contains(const LoopElement& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::strong_ordering operator<=>(const Subloop& a, const Subloop& b) {
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
      b.elements_.end());
}

std::string format_subloop(const Subloop& s) {
  std::string out;
  for (const auto& a : s.elements()) {
    if (!out.empty()) out += ',';
    out += format_element(a);
  }
  return out;
}

Sign commutator(const LoopElement& x, const LoopElement& y) {
  return relative_sign(x * y, y * x);
}

Sign associator(const LoopElement& x, const LoopElement& y,
                const LoopElement& z) {
  return relative_sign((x * y) * z, x * (y * z));
}

Subloop closure(std::span<const LoopElement> gens, int level) {
  std::set<LoopElement> seen{LoopElement::identity(level)};
  std::vector<LoopElement> elems{LoopElement::identity(level)};
  for (const auto& g : gens) {
    if (g.level() != level) {
      throw std::invalid_argument("generator " + format_element(g) +
                                  " not at level " + std::to_string(level));
    }
    if (seen.insert(g).second) elems.push_back(g);
  }
  // Every pair (i, j) is multiplied once both are known.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const auto& p : {elems[i] * elems[j], elems[j] * elems[i]}) {
        if (seen.insert(p).second) elems.push_back(p);
      }
    }
  }
  return Subloop(level, {seen.begin(), seen.end()});
}

Subloop closure(std::initializer_list<LoopElement> gens, int level) {
  return closure(std::span<const LoopElement>(gens.begin(), gens.size()),
                 level);
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::kReal:
      return "real";
    case PairClass::kComplex:
      return "complex";
    case PairClass::kQuaternion:
      return "quaternion";
  }
  return "unknown";
}

PairClass pair_class(const LoopElement& x, const LoopElement& y) {
  if (x.level() != y.level()) {
    throw std::invalid_argument("pair_class: level mismatch");
  }
  if (x.is_real() && y.is_real()) return PairClass::kReal;
  if (x.is_real() || y.is_real() || x.bits() == y.bits()) {
    return PairClass::kComplex;
  }
  return PairClass::kQuaternion;
}

Subloop commutant(const Subloop& s) {
  std::vector<LoopElement> out;
  for (const auto& a : s.elements()) {
    const bool central = std::all_of(
        s.elements().begin(), s.elements().end(),
        [&](const LoopElement& x) { return a * x == x * a; });
    if (central) out.push_back(a);
  }
  return Subloop::from_elements(s.level(), std::move(out));
}

Subloop nucleus(const Subloop& s) {
  std::vector<LoopElement> out;
  const auto elems = s.elements();
  for (const auto& a : elems) {
    bool in = true;
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        if (a * (x * y) != (a * x) * y || (x * a) * y != x * (a * y) ||
            (x * y) * a != x * (y * a)) {
          in = false;
          break;
        }
      }
      if (!in) break;
    }
    if (in) out.push_back(a);
  }
  return Subloop::from_elements(s.level(), std::move(out));
}

Subloop center(const Subloop& s) {
  const Subloop c = commutant(s);
  const Subloop n = nucleus(s);
  std::vector<LoopElement> out;
  std::set_intersection(c.elements().begin(), c.elements().end(),
                        n.elements().begin(), n.elements().end(),
                        std::back_inserter(out));
  return Subloop::from_elements(s.level(), std::move(out));
}

Subloop associator_subloop(const Subloop& s) {
  const auto one = LoopElement::identity(s.level());
  std::vector<LoopElement> values;
  for (const auto& x : s.elements()) {
    for (const auto& y : s.elements()) {
      for (const auto& z : s.elements()) {
        values.push_back(associator(x, y, z) * one);
      }
    }
  }
  return closure(sorted_unique(std::move(values)), s.level());
}

Subloop derived_subloop(const Subloop& s) {
  const auto one = LoopElement::identity(s.level());
  const Subloop assoc = associator_subloop(s);
  std::vector<LoopElement> values(assoc.elements().begin(),
                                  assoc.elements().end());
  for (const auto& x : s.elements()) {
    for (const auto& y : s.elements()) {
      values.push_back(commutator(x, y) * one);
    }
  }
  return closure(sorted_unique(std::move(values)), s.level());
}

bool is_normal(const Subloop& s) {
  require_level_at_most(s.level(), kMaxEnumerationLevel, "is_normal");
  const auto all = loop_elements(s.level());
  const auto elems = s.elements();

  auto left_coset = [&](const LoopElement& x) {
    Mask m;
    for (const auto& a : elems) m.set((x * a).index());
    return m;
  };
  auto right_coset = [&](const LoopElement& y) {
    Mask m;
    for (const auto& a : elems) m.set((a * y).index());
    return m;
  };

  std::vector<Mask> x_s, s_y;
  x_s.reserve(all.size());
  s_y.reserve(all.size());
  for (const auto& x : all) {
    x_s.push_back(left_coset(x));
    s_y.push_back(right_coset(x));
    if (x_s.back() != s_y.back()) return false;
  }
  for (const auto& x : all) {
    for (const auto& y : all) {
      Mask lhs, rhs;
      // (xS)y = x(Sy)
      for (const auto& a : elems) {
        lhs.set(((x * a) * y).index());
        rhs.set((x * (a * y)).index());
      }
      if (lhs != rhs) return false;
      // x(yS) = (xy)S
      lhs.reset();
      for (const auto& a : elems) lhs.set((x * (y * a)).index());
      if (lhs != x_s[(x * y).index()]) return false;
    }
  }
  return true;
}

std::vector<Subloop> all_subloops(int level) {
  require_level_at_most(level, kMaxEnumerationLevel, "all_subloops");
  std::vector<std::vector<Bits>> subspaces;
  enumerate_subspaces(level, subspaces);
  std::vector<Subloop> out;
  out.reserve(subspaces.size() + 1);
  out.push_back(Subloop::from_elements(level, {LoopElement::identity(level)}));
  for (const auto& space : subspaces) {
    out.push_back(Subloop::from_elements(level, signed_preimage(level, space)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subloop> index2_subloops(int level) {
  require_level_at_most(level, kMaxEnumerationLevel, "index2_subloops");
  if (level < 1) {
    throw std::invalid_argument("index2_subloops: level must be at least 1");
  }
  std::vector<Subloop> out;
  // Each hyperplane is the kernel of a nonzero functional.
  for (Bits functional = 1; functional < (Bits{1} << level); ++functional) {
    std::vector<Bits> kernel;
    for (Bits v = 0; v < (Bits{1} << level); ++v) {
      if (std::popcount(v & functional) % 2 == 0) kernel.push_back(v);
    }
    out.push_back(Subloop::from_elements(level, signed_preimage(level, kernel)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_hamiltonian(int level) {
  require_level_at_most(level, 5, "is_hamiltonian");
  const auto subloops = all_subloops(level);
  std::vector<char> normal(subloops.size(), 0);
  parallel_for(subloops.size(),
               [&](std::size_t k) { normal[k] = is_normal(subloops[k]); });
  return std::all_of(normal.begin(), normal.end(),
                     [](char b) { return b != 0; });
}

std::optional<Triple> moufang_counterexample(const Subloop& s) {
  for (const auto& x : s.elements()) {
    for (const auto& y : s.elements()) {
      for (const auto& z : s.elements()) {
        if ((x * y) * (z * x) != (x * (y * z)) * x) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool is_moufang(const Subloop& s) { return !moufang_counterexample(s); }

std::optional<Triple> associativity_counterexample(const Subloop& s) {
  for (const auto& x : s.elements()) {
    for (const auto& y : s.elements()) {
      for (const auto& z : s.elements()) {
        if ((x * y) * z != x * (y * z)) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool is_group(const Subloop& s) { return !associativity_counterexample(s); }

bool is_commutative(const Subloop& s) {
  for (const auto& x : s.elements()) {
    for (const auto& y : s.elements()) {
      if (x * y != y * x) return false;
    }
  }
  return true;
}

bool is_quaternion_group(const Subloop& s) {
  if (s.size() != 8 || !is_group(s) || is_commutative(s)) return false;
  return std::count_if(s.elements().begin(), s.elements().end(),
                       [](const LoopElement& a) { return a.order() == 2; }) ==
         1;
}

bool is_diassociative(int level) {
  const auto all = loop_elements(level);
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (!is_group(closure({x, y}, level))) return false;
    }
  }
  return true;
}

NortonReport norton_conditions(int level) {
  require_level_at_most(level, 5, "norton_conditions");
  NortonReport r;
  r.level = level;
  const auto all = loop_elements(level);

  r.orders_in_1_2_4 = std::all_of(all.begin(), all.end(), [](const auto& a) {
    const int o = a.order();
    return o == 1 || o == 2 || o == 4;
  });

  for (const auto& x : all) {
    for (const auto& y : all) {
      if (!r.quaternion_pair && is_quaternion_group(closure({x, y}, level))) {
        r.quaternion_pair = std::pair{x, y};
      }
    }
    if (r.quaternion_pair) break;
  }

  const Subloop z = center(Subloop::whole(level));
  r.order_two_central = std::all_of(all.begin(), all.end(), [&](const auto& a) {
    return a.order() != 2 || z.contains(a);
  });

  std::vector<LoopElement> order_four;
  std::copy_if(all.begin(), all.end(), std::back_inserter(order_four),
               [](const auto& a) { return a.order() == 4; });
  const auto one = LoopElement::identity(level);
  r.order_four_relations = true;
  for (const auto& x : order_four) {
    const LoopElement x2 = x * x;
    auto allowed = [&](const LoopElement& d) { return d == one || d == x2; };
    for (const auto& y : order_four) {
      // xy = d(yx) and xy.z = h(x.yz) with d, h in {1, x^2}.
      const bool comm_ok = y * y == x2 && allowed(commutator(x, y) * one);
      for (const auto& z : order_four) {
        const bool assoc_ok =
            z * z == x2 && allowed(associator(x, y, z) * one);
        if (!comm_ok || !assoc_ok) {
          r.order_four_relations = false;
          r.order_four_counterexample = Triple{x, y, z};
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace cdloops
