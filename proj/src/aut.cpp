#include "cdloops/aut.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

#include "cdloops/parallel.hpp"

namespace cdloops {

namespace {

constexpr int kMaxAutLevel = 6;

int highest_bit(Bits v) { return 63 - std::countl_zero(v); }

void require_valid(const std::vector<LoopElement>& table, int level,
                   const char* what) {
  if (!is_automorphism(table, level)) {
    throw std::invalid_argument(std::string(what) +
                                ": map is not an automorphism");
  }
}

Sign e_sign(const Automorphism& phi) {
  const auto e = LoopElement::generator(phi.level(), phi.level());
  return phi(e) == e ? Sign::kPlus : Sign::kMinus;
}

}  // namespace

Automorphism Automorphism::identity(int level) {
  std::vector<LoopElement> images;
  const Bits dim = Bits{1} << level;
  images.reserve(dim);
  for (Bits v = 0; v < dim; ++v) images.emplace_back(level, false, v);
  return {level, std::move(images)};
}

Automorphism Automorphism::from_generator_images(
    int level, std::span<const LoopElement> gens) {
  if (static_cast<int>(gens.size()) != level) {
    throw std::invalid_argument("expected " + std::to_string(level) +
                                " generator images, got " +
                                std::to_string(gens.size()));
  }
  for (const auto& g : gens) {
    if (g.level() != level) {
      throw std::invalid_argument("generator image " + format_element(g) +
                                  " not at level " + std::to_string(level));
    }
  }
  const Bits dim = Bits{1} << level;
  std::vector<LoopElement> images(dim, LoopElement::identity(level));
  for (Bits v = 1; v < dim; ++v) {
    const int j = highest_bit(v);
    images[v] = images[v ^ (Bits{1} << j)] * gens[static_cast<std::size_t>(j)];
  }
  Automorphism a(level, std::move(images));
  require_valid(a.table(), level, "from_generator_images");
  return a;
}

Automorphism Automorphism::from_table(int level,
                                      std::span<const LoopElement> table) {
  std::vector<LoopElement> copy(table.begin(), table.end());
  require_valid(copy, level, "from_table");
  const Bits dim = Bits{1} << level;
  std::vector<LoopElement> images;
  images.reserve(dim);
  for (Bits v = 0; v < dim; ++v) images.push_back(copy[v << 1]);
  return {level, std::move(images)};
}

LoopElement Automorphism::operator()(const LoopElement& x) const {
  if (x.level() != level_) {
    throw std::invalid_argument("automorphism applied across levels");
  }
  const LoopElement& image = images_[x.bits()];
  return x.negative() ? -image : image;
}

std::vector<LoopElement> Automorphism::generator_images() const {
  std::vector<LoopElement> out;
  for (int j = 0; j < level_; ++j) out.push_back(images_[Bits{1} << j]);
  return out;
}

std::vector<LoopElement> Automorphism::table() const {
  std::vector<LoopElement> out;
  out.reserve(images_.size() * 2);
  for (const auto& image : images_) {
    out.push_back(image);
    out.push_back(-image);
  }
  return out;
}

std::strong_ordering operator<=>(const Automorphism& a, const Automorphism& b) {
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.level_ != inner.level_) {
    throw std::invalid_argument("compose: level mismatch");
  }
  std::vector<LoopElement> images;
  images.reserve(inner.images_.size());
  for (const auto& y : inner.images_) images.push_back(outer(y));
  return {outer.level_, std::move(images)};
}

Automorphism inverse(const Automorphism& a) {
  std::vector<LoopElement> images(a.images_.size());
  for (Bits v = 0; v < a.images_.size(); ++v) {
    const LoopElement& y = a.images_[v];
    images[y.bits()] = LoopElement(a.level_, y.negative(), v);
  }
  return {a.level_, std::move(images)};
}

bool is_automorphism(std::span<const LoopElement> table, int level) {
  const std::size_t size = loop_size(level);
  if (table.size() != size) return false;
  std::vector<char> hit(size, 0);
  for (const auto& y : table) {
    if (y.level() != level || hit[y.index()]) return false;
    hit[y.index()] = 1;
  }
  const auto all = loop_elements(level);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (table[(a * b).index()] != table[a.index()] * table[b.index()]) {
        return false;
      }
    }
  }
  return true;
}

std::string format_automorphism(const Automorphism& a) {
  if (a.level() == 0) return "id";
  std::string out;
  const auto gens = a.generator_images();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j > 0) out += ", ";
    out += "i" + std::to_string(j + 1) + "->" + format_element(gens[j]);
  }
  return out;
}

AutGroup::AutGroup(int level, std::vector<Automorphism> elements,
                   std::vector<Automorphism> generators)
    : level_(level),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
  if (generate_group(generators_, level_) != elements_) {
    throw std::logic_error("generators do not generate the element set at level " +
                           std::to_string(level_));
  }
}

bool AutGroup::contains(const Automorphism& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::vector<Automorphism> generate_group(std::span<const Automorphism> gens,
                                         int level) {
  std::set<Automorphism> seen{Automorphism::identity(level)};
  std::deque<Automorphism> queue{Automorphism::identity(level)};
  while (!queue.empty()) {
    const Automorphism a = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Automorphism b = compose(g, a);
      if (seen.insert(b).second) queue.push_back(std::move(b));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Automorphism> greedy_generators(std::span<const Automorphism> group,
                                            int level) {
  std::vector<Automorphism> gens;
  std::vector<Automorphism> generated{Automorphism::identity(level)};
  for (const auto& a : group) {
    if (std::binary_search(generated.begin(), generated.end(), a)) continue;
    gens.push_back(a);
    generated = generate_group(gens, level);
  }
  return gens;
}

std::vector<Automorphism> search_automorphisms(int level) {
  if (level < 0 || level > kMaxAutLevel) {
    throw std::invalid_argument("search_automorphisms: level out of range");
  }
  if (level == 0) return {Automorphism::identity(0)};

  const Bits dim = Bits{1} << level;
  std::vector<LoopElement> candidates;
  for (const auto& a : loop_elements(level)) {
    if (!a.is_real()) candidates.push_back(a);
  }

  std::vector<std::vector<Automorphism>> found(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t first) {
    std::vector<LoopElement> images(dim, LoopElement::identity(level));
    std::vector<char> used(dim, 0);
    used[0] = 1;
    auto& out = found[first];

    // Assigns the image of i_(k+1); images of e_v for v < 2^k are fixed.
    auto assign = [&](auto&& self, int k, const LoopElement& g) -> void {
      const Bits half = Bits{1} << k;
      if (used[g.bits()]) return;
      for (Bits v = 0; v < half; ++v) images[v | half] = images[v] * g;
      for (Bits a = 0; a < 2 * half; ++a) {
        for (Bits b = (a & half) ? 0 : half; b < 2 * half; ++b) {
          const LoopElement expected =
              (twist_cached(a, b, level) < 0 ? Sign::kMinus : Sign::kPlus) *
              images[a ^ b];
          if (images[a] * images[b] != expected) return;
        }
      }
      for (Bits v = 0; v < half; ++v) used[images[v | half].bits()] = 1;
      if (k + 1 == level) {
        out.push_back(Automorphism(level, images));
      } else {
        for (const auto& next : candidates) self(self, k + 1, next);
      }
      for (Bits v = 0; v < half; ++v) used[images[v | half].bits()] = 0;
    };
    assign(assign, 0, candidates[first]);
  });

  std::vector<Automorphism> all;
  for (auto& branch : found) {
    all.insert(all.end(), std::make_move_iterator(branch.begin()),
               std::make_move_iterator(branch.end()));
  }
  std::sort(all.begin(), all.end());
  return all;
}

AutGroup brute_force_aut(int level) {
  if (level < 0 || level > 3) {
    throw std::invalid_argument("brute_force_aut supports levels 0..3");
  }
  auto elements = search_automorphisms(level);
  auto gens = greedy_generators(elements, level);
  return {level, std::move(elements), std::move(gens)};
}

Automorphism detail::extend_unchecked(const Automorphism& psi, Sign sign) {
  if (psi.level() < 3 || psi.level() >= kMaxAutLevel) {
    throw std::invalid_argument("extend_aut needs 3 <= level(psi) < 6");
  }
  const int n = psi.level() + 1;
  const LoopElement se = sign * LoopElement::generator(n, n);
  const Bits half = Bits{1} << psi.level();
  std::vector<LoopElement> images(2 * half, LoopElement::identity(n));
  for (Bits v = 0; v < half; ++v) {
    images[v] = embed(psi.images_[v], n);
    images[v | half] = images[v] * se;
  }
  return Automorphism(n, std::move(images));
}

Automorphism extend_aut(const Automorphism& psi, Sign sign) {
  Automorphism phi = detail::extend_unchecked(psi, sign);
  require_valid(phi.table(), phi.level(), "extend_aut");
  return phi;
}

std::optional<Automorphism> restrict_aut(const Automorphism& phi) {
  if (phi.level() < 1) return std::nullopt;
  const int m = phi.level() - 1;
  const Bits half = Bits{1} << m;
  std::vector<LoopElement> images;
  images.reserve(half);
  for (Bits v = 0; v < half; ++v) {
    const LoopElement& y = phi.images_[v];
    if (y.top_bit()) return std::nullopt;
    images.emplace_back(m, y.negative(), y.bits());
  }
  Automorphism psi(m, std::move(images));
  if (!is_automorphism(psi.table(), m)) return std::nullopt;
  return psi;
}

const AutGroup& aut_group(int level) {
  if (level < 0 || level > kMaxAutLevel) {
    throw std::invalid_argument("aut_group supports levels 0..6");
  }
  static std::array<std::once_flag, kMaxAutLevel + 1> once;
  static std::array<std::optional<AutGroup>, kMaxAutLevel + 1> cache;
  std::call_once(once[level], [level] {
    if (level <= 3) {
      cache[level] = brute_force_aut(level);
      return;
    }
    const AutGroup& lower = aut_group(level - 1);
    std::vector<Automorphism> elements;
    elements.reserve(lower.order() * 2);
    // Only the generators are checked for multiplicativity; the AutGroup
    // constructor then requires them to generate exactly these elements.
    for (const auto& psi : lower.elements()) {
      elements.push_back(detail::extend_unchecked(psi, Sign::kPlus));
      elements.push_back(detail::extend_unchecked(psi, Sign::kMinus));
    }
    std::vector<Automorphism> gens;
    for (const auto& g : lower.generators()) {
      gens.push_back(extend_aut(g, Sign::kPlus));
    }
    gens.push_back(extend_aut(Automorphism::identity(level - 1), Sign::kMinus));
    cache[level].emplace(level, std::move(elements), std::move(gens));
  });
  return *cache[level];
}

std::vector<std::size_t> orbit_stabilizer_factors(const AutGroup& g) {
  std::vector<Automorphism> stabilizer(g.elements().begin(),
                                       g.elements().end());
  std::vector<std::size_t> factors;
  for (int k = 1; k <= g.level(); ++k) {
    const auto gen = LoopElement::generator(g.level(), k);
    std::set<LoopElement> orbit;
    for (const auto& phi : stabilizer) orbit.insert(phi(gen));
    factors.push_back(orbit.size());
    std::erase_if(stabilizer,
                  [&](const Automorphism& phi) { return phi(gen) != gen; });
  }
  return factors;
}

AutTheoremReport verify_aut_theorem(int level, bool brute_force) {
  if (level < 4 || level > 5) {
    throw std::invalid_argument("verify_aut_theorem needs level 4 or 5");
  }
  const AutGroup& g = aut_group(level);
  const AutGroup& lower = aut_group(level - 1);
  AutTheoremReport r;
  r.level = level;
  r.order = g.order();

  const auto one = LoopElement::identity(level);
  const auto e = LoopElement::generator(level, level);
  const auto lower_elements = loop_elements(level - 1);

  std::set<std::pair<Automorphism, Sign>> images;
  for (const auto& phi : g.elements()) {
    if (phi(one) != one || phi(-one) != -one) r.fixes_plus_minus_one = false;
    if (phi(e) != e && phi(e) != -e) r.e_to_plus_minus_e = false;
    const auto psi = restrict_aut(phi);
    if (!psi) {
      r.preserves_lower_half = false;
      continue;
    }
    if (!lower.contains(*psi)) r.restriction_in_lower_group = false;
    for (const auto& x : lower_elements) {
      if (phi(lift(x, 1)) != embed((*psi)(x), level) * phi(e)) {
        r.upper_half_rule = false;
      }
    }
    images.emplace(*psi, e_sign(phi));
  }

  // Bijective onto Aut(Q_(n-1)) x Z_2 and multiplicative against generators.
  r.direct_product = images.size() == g.order() &&
                     g.order() == 2 * lower.order();
  for (const auto& gen : g.generators()) {
    const auto rg = restrict_aut(gen);
    for (const auto& phi : g.elements()) {
      const auto rp = restrict_aut(phi);
      const auto rc = restrict_aut(compose(gen, phi));
      if (!rg || !rp || !rc || *rc != compose(*rg, *rp) ||
          e_sign(compose(gen, phi)) != e_sign(gen) * e_sign(phi)) {
        r.direct_product = false;
      }
    }
  }

  if (brute_force) {
    const auto found = search_automorphisms(level);
    r.brute_force_order = found.size();
    r.brute_force_matches = std::equal(found.begin(), found.end(),
                                       g.elements().begin(),
                                       g.elements().end());
  }
  return r;
}

bool aut_order_is_extrapolated(int level) { return level > 5; }

}  // namespace cdloops
