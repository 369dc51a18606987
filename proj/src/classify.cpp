#include "cdloops/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cdloops {

namespace {

TripleSignature signature_unchecked(const LoopElement& x, const LoopElement& y,
                                    const LoopElement& z) {
  return {associator(x, y, z), associator(x, z, y), associator(x, y, x * z)};
}

SixteenClass classify_triple(const LoopElement& x, const LoopElement& y,
                             const LoopElement& z) {
  return class_of_signature(signature_unchecked(x, y, z));
}

// The words 1, a, b, ab, c, ac, bc, (ab)c in table header order.
std::array<LoopElement, 8> words(const LoopElement& a, const LoopElement& b,
                                 const LoopElement& c) {
  const LoopElement ab = a * b;
  return {LoopElement::identity(a.level()), a, b, ab, c, a * c, b * c, ab * c};
}

LoopElement strip_top(const LoopElement& a) {
  const int m = a.level() - 1;
  return {m, a.negative(), a.bits() & ((Bits{1} << m) - 1)};
}

constexpr SymbolicEntry E(int sign, Word w) { return {sign, false, false, false, w}; }
constexpr SymbolicEntry A1(int sign, Word w) { return {sign, true, false, false, w}; }
constexpr SymbolicEntry A12(int sign, Word w) { return {sign, true, true, false, w}; }
constexpr SymbolicEntry A23(int sign, Word w) { return {sign, false, true, true, w}; }

}  // namespace

std::string to_string(SixteenClass c) {
  return c == SixteenClass::kOctonion ? "octonion" : "quasioctonion";
}

bool generates_sixteen(const LoopElement& x, const LoopElement& y,
                       const LoopElement& z) {
  const Bits a = x.bits(), b = y.bits(), c = z.bits();
  return a != 0 && b != 0 && a != b && c != 0 && c != a && c != b &&
         c != (a ^ b);
}

TripleSignature triple_signature(const LoopElement& x, const LoopElement& y,
                                 const LoopElement& z) {
  const std::size_t size = closure({x, y, z}, x.level()).size();
  if (size != 16) {
    throw std::invalid_argument("triple generates a subloop of size " +
                                std::to_string(size) + ", expected 16");
  }
  return signature_unchecked(x, y, z);
}

SixteenClass class_of_signature(const TripleSignature& s) {
  const bool all_minus = s.xyz == Sign::kMinus && s.xzy == Sign::kMinus &&
                         s.xy_xz == Sign::kMinus;
  return all_minus ? SixteenClass::kOctonion : SixteenClass::kQuasiOctonion;
}

Classification classify16(const Subloop& s) {
  if (s.size() != 16) {
    throw std::invalid_argument("classify16 needs 16 elements, got " +
                                std::to_string(s.size()));
  }
  const auto elems = s.elements();
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      for (const auto& z : elems) {
        if (!generates_sixteen(x, y, z)) continue;
        Classification c;
        c.generators = {x, y, z};
        c.signature = triple_signature(x, y, z);
        c.cls = class_of_signature(c.signature);
        const bool moufang = is_moufang(s);
        if (moufang != (c.cls == SixteenClass::kOctonion)) {
          throw std::logic_error("signature and Moufang classifiers disagree on " +
                                 format_subloop(s));
        }
        return c;
      }
    }
  }
  throw std::logic_error("no generating triple in " + format_subloop(s));
}

WordMap case_isomorphism(const Triple& t) {
  const auto& [x, y, z] = t;
  const int target_level = std::max(x.level(), 4);
  const auto i1 = LoopElement::generator(target_level, 1);
  const auto i2 = LoopElement::generator(target_level, 2);
  const auto i3 = LoopElement::generator(target_level, 3);
  const auto i3i4 = i3 * LoopElement::generator(target_level, 4);

  const TripleSignature s = triple_signature(x, y, z);
  const bool a1 = s.xyz == Sign::kMinus;
  const bool a2 = s.xzy == Sign::kMinus;
  const bool a3 = s.xy_xz == Sign::kMinus;

  const std::array<LoopElement, 3> quasi{i1, i2, i3i4};
  if (a1 && a2 && a3) return {{x, y, z}, {i1, i2, i3}};
  if (a1 && a2) return {{x * z, y * z, z}, quasi};
  if (a1 && a3) return {{x, z, y}, quasi};
  if (a1) return {{y, -(x * z), x}, quasi};
  if (a2 && a3) return {{-(x * y), z, x}, quasi};
  if (a2) return {{x, y, z}, quasi};
  if (a3) return {{y, z, x}, quasi};
  return {{x, -(y * z), y}, quasi};
}

std::optional<std::vector<std::pair<LoopElement, LoopElement>>>
verify_word_map(const WordMap& m) {
  const auto src = words(m.source[0], m.source[1], m.source[2]);
  const auto dst = words(m.target[0], m.target[1], m.target[2]);
  std::map<LoopElement, LoopElement> f;
  for (std::size_t k = 0; k < src.size(); ++k) {
    f.emplace(src[k], dst[k]);
    f.emplace(-src[k], -dst[k]);
  }
  if (f.size() != 16) return std::nullopt;
  std::set<LoopElement> image;
  for (const auto& [a, b] : f) image.insert(b);
  if (image.size() != 16) return std::nullopt;
  for (const auto& [a, fa] : f) {
    for (const auto& [b, fb] : f) {
      const auto it = f.find(a * b);
      if (it == f.end() || it->second != fa * fb) return std::nullopt;
    }
  }
  return std::vector<std::pair<LoopElement, LoopElement>>(f.begin(), f.end());
}

std::string word_name(Word w) {
  switch (w) {
    case Word::kOne:
      return "1";
    case Word::kX:
      return "x";
    case Word::kY:
      return "y";
    case Word::kXY:
      return "xy";
    case Word::kZ:
      return "z";
    case Word::kXZ:
      return "xz";
    case Word::kYZ:
      return "yz";
    case Word::kXYZ:
      return "(xy)z";
  }
  return "?";
}

const SymbolicTable& symbolic_triple_table() {
  using enum Word;
  static const SymbolicTable table{{
      {E(1, kOne), E(1, kX), E(1, kY), E(1, kXY), E(1, kZ), E(1, kXZ),
       E(1, kYZ), E(1, kXYZ)},
      {E(1, kX), E(-1, kOne), E(1, kXY), E(-1, kY), E(1, kXZ), E(-1, kZ),
       A1(1, kXYZ), A1(-1, kYZ)},
      {E(1, kY), E(-1, kXY), E(-1, kOne), E(1, kX), E(1, kYZ), A12(1, kXYZ),
       E(-1, kZ), A12(-1, kXZ)},
      {E(1, kXY), E(1, kY), E(-1, kX), E(-1, kOne), E(1, kXYZ), A23(-1, kYZ),
       A23(1, kXZ), E(-1, kZ)},
      {E(1, kZ), E(-1, kXZ), E(-1, kYZ), E(-1, kXYZ), E(-1, kOne), E(1, kX),
       E(1, kY), E(1, kXY)},
      {E(1, kXZ), E(1, kZ), A12(-1, kXYZ), A23(1, kYZ), E(-1, kX),
       E(-1, kOne), A23(-1, kXY), A12(1, kY)},
      {E(1, kYZ), A1(-1, kXYZ), E(1, kZ), A23(-1, kXZ), E(-1, kY),
       A23(1, kXY), E(-1, kOne), A1(1, kX)},
      {E(1, kXYZ), A1(1, kYZ), A12(1, kXZ), E(1, kZ), E(-1, kXY),
       A12(-1, kY), A1(-1, kX), E(-1, kOne)},
  }};
  return table;
}

std::string format_symbolic(const SymbolicEntry& e) {
  std::string out = e.sign < 0 ? "-" : "";
  if (e.a1) out += "[x,y,z]";
  if (e.a2) out += "[x,z,y]";
  if (e.a3) out += "[x,y,xz]";
  return out + word_name(e.word);
}

TripleTable triple_table(const LoopElement& x, const LoopElement& y, const LoopElement& z) {
  TripleTable t;
  t.signature = triple_signature(x, y, z);
  t.header = words(x, y, z);
  const auto& sym = symbolic_triple_table();
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const SymbolicEntry& e = sym[r][c];
      Sign s = e.sign < 0 ? Sign::kMinus : Sign::kPlus;
      if (e.a1) s = s * t.signature.xyz;
      if (e.a2) s = s * t.signature.xzy;
      if (e.a3) s = s * t.signature.xy_xz;
      t.entries[r][c] = s * t.header[static_cast<std::size_t>(e.word)];
      t.resolved[r][c] = (s == Sign::kMinus ? "-" : "") + word_name(e.word);
    }
  }
  return t;
}

std::size_t triple_table_mismatches(const TripleTable& t) {
  std::size_t bad = 0;
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      if (t.header[r] * t.header[c] != t.entries[r][c]) ++bad;
    }
  }
  return bad;
}

std::array<DoublingIdentity, 7> doubling_associators(const LoopElement& x,
                                                     const LoopElement& y,
                                                     const LoopElement& z) {
  auto lhs = [&](int p0, int p1, int p2) {
    return associator(lift(x, p0), lift(y, p1), lift(z, p2));
  };
  const auto c = [](const LoopElement& a, const LoopElement& b) {
    return commutator(a, b);
  };
  const auto a = [](const LoopElement& p, const LoopElement& q,
                    const LoopElement& r) { return associator(p, q, r); };

  return {{
      {'a', {0, 0, 1}, lhs(0, 0, 1), c(x, y) * a(z, y, x)},
      {'b', {0, 1, 0}, lhs(0, 1, 0), c(x, z) * a(y, x, z) * a(y, z, x)},
      {'c', {0, 1, 1}, lhs(0, 1, 1),
       c(x, y) * c(x, z) * a(z, x, y) * a(x, z, y)},
      {'d', {1, 0, 0}, lhs(1, 0, 0), c(y, z) * a(x, y, z)},
      {'e', {1, 0, 1}, lhs(1, 0, 1), c(y, x) * c(y, z) * a(z, y, x)},
      {'f', {1, 1, 0}, lhs(1, 1, 0),
       c(z, x) * c(z, y) * a(y, x, z) * a(y, z, x)},
      {'g', {1, 1, 1}, lhs(1, 1, 1),
       c(x, y) * c(x, z) * c(y, z) * a(z, x, y) * a(x, z, y)},
  }};
}

std::array<SixteenClass, 8> doubled_classes(const Triple& base) {
  // Validates the base triple.
  triple_signature(base.x, base.y, base.z);
  std::array<SixteenClass, 8> out{};
  for (int p = 0; p < 8; ++p) {
    const auto x = lift(base.x, p & 1);
    const auto y = lift(base.y, (p >> 1) & 1);
    const auto z = lift(base.z, (p >> 2) & 1);
    out[static_cast<std::size_t>(p)] = classify16(closure({x, y, z}, x.level())).cls;
  }
  return out;
}

std::string to_string(Index2Tag t) {
  switch (t) {
    case Index2Tag::kFirst:
      return "first";
    case Index2Tag::kSecond:
      return "second";
    case Index2Tag::kThird:
      return "third";
  }
  return "unknown";
}

Index2Type index2_type(const Subloop& b) {
  const int n = b.level();
  if (n < 1 || n >= 63 || b.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("subloop of size " + std::to_string(b.size()) +
                                " does not have index 2 in level " +
                                std::to_string(n));
  }
  std::vector<LoopElement> low, high;
  for (const auto& a : b.elements()) {
    (a.top_bit() ? high : low).push_back(strip_top(a));
  }
  if (high.empty()) return {Index2Tag::kFirst, std::nullopt};

  std::optional<Subloop> d;
  try {
    d = Subloop::from_elements(n - 1, low);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("bottom half is not a subloop: ") +
                           e.what());
  }
  if (d->size() * 2 != b.size()) {
    throw std::logic_error("bottom half is not of index 2 in Q_(n-1)");
  }
  std::sort(high.begin(), high.end());
  if (std::equal(high.begin(), high.end(), d->elements().begin(),
                 d->elements().end())) {
    return {Index2Tag::kSecond, d};
  }
  std::vector<LoopElement> complement;
  for (const auto& a : loop_elements(n - 1)) {
    if (!d->contains(a)) complement.push_back(a);
  }
  if (high == complement) return {Index2Tag::kThird, d};
  throw std::logic_error("index-2 subloop fits none of the three types: " +
                         format_subloop(b));
}

RigidityReport e_rigidity_check(int level) {
  if (level < 4 || level > 5) {
    throw std::invalid_argument("e_rigidity_check needs level 4 or 5");
  }
  RigidityReport r;
  r.level = level;
  const auto all = loop_elements(level);
  const auto e = LoopElement::generator(level, level);

  std::set<Subloop> seen;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (!generates_sixteen(x, y, e)) continue;
      Subloop s = closure({x, y, e}, level);
      if (!seen.insert(s).second) continue;
      if (classify16(s).cls != SixteenClass::kOctonion) {
        r.e_subloops_octonion = false;
        if (!r.e_counterexample) r.e_counterexample = Triple{x, y, e};
      }
    }
  }
  r.e_subloops = seen.size();

  auto find_quasi = [](const LoopElement& x, std::span<const LoopElement> pool)
      -> std::optional<Triple> {
    for (const auto& y : pool) {
      for (const auto& z : pool) {
        if (generates_sixteen(x, y, z) &&
            classify_triple(x, y, z) == SixteenClass::kQuasiOctonion) {
          return Triple{x, y, z};
        }
      }
    }
    return std::nullopt;
  };

  for (const auto& x : all) {
    if (x.bits() == 0 || x.bits() == e.bits()) continue;
    auto w = find_quasi(x, all);
    if (!w) r.every_other_element_has_witness = false;
    r.quasi_witnesses.emplace_back(x, w);
  }

  for (const auto& b : index2_subloops(level)) {
    if (index2_type(b).tag != Index2Tag::kThird) continue;
    ++r.third_type_subloops;
    for (const auto& x : b.elements()) {
      if (x.is_real()) continue;
      if (!find_quasi(x, b.elements())) r.third_type_has_no_rigid_element = false;
    }
  }
  return r;
}

}  // namespace cdloops
