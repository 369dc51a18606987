// Sixteen-element subloops of Q_n and the index-2 subloop taxonomy.
//
// Any three elements generating a 16-element subloop are pinned down, up
// to isomorphism, by the three associators [x,y,z], [x,z,y] and [x,y,xz].
// All three equal to -1 gives the octonion loop O16; every other sign
// pattern gives the quasioctonion loop, which is not Moufang.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdloops/element.hpp"
#include "cdloops/loopops.hpp"

namespace cdloops {

struct TripleSignature {
  Sign xyz = Sign::kPlus;    // [x,y,z]
  Sign xzy = Sign::kPlus;    // [x,z,y]
  Sign xy_xz = Sign::kPlus;  // [x,y,xz]
  friend bool operator==(const TripleSignature&,
                         const TripleSignature&) = default;
};

enum class SixteenClass { kOctonion, kQuasiOctonion };
std::string to_string(SixteenClass c);

// Throws std::invalid_argument unless |<x,y,z>| = 16.
TripleSignature triple_signature(const LoopElement& x, const LoopElement& y,
                                 const LoopElement& z);
SixteenClass class_of_signature(const TripleSignature& s);

// True iff bits(x), bits(y), bits(z) are linearly independent, which is
// equivalent to |<x,y,z>| = 16.
bool generates_sixteen(const LoopElement& x, const LoopElement& y,
                       const LoopElement& z);

struct Classification {
  SixteenClass cls = SixteenClass::kOctonion;
  TripleSignature signature;
  Triple generators;
};

// Classifies a 16-element subloop from the signature of its first
// generating triple in canonical order. The answer is cross-checked against
// the Moufang identity; a disagreement throws std::logic_error.
Classification classify16(const Subloop& s);

// ---------------------------------------------------------------------------
// Explicit isomorphisms onto <i1,i2,i3> or <i1,i2,i3 i4>.

// A word map sends source[k] to target[k] and extends through the words
// 1, a, b, ab, c, ac, bc, (ab)c and their negatives.
struct WordMap {
  std::array<LoopElement, 3> source;
  std::array<LoopElement, 3> target;
};

// The generator triple prescribed for the signature of (x,y,z), mapped to
// the canonical octonion or quasioctonion loop. Targets live at level
// max(level, 4).
WordMap case_isomorphism(const Triple& t);

// The 16 pairs (a, f(a)) if the word map is a bijective homomorphism
// between the two generated subloops, nullopt otherwise.
std::optional<std::vector<std::pair<LoopElement, LoopElement>>>
verify_word_map(const WordMap& m);

// ---------------------------------------------------------------------------
// Multiplication table of <x,y,z> in terms of the signature.

// Header order of the table.
enum class Word { kOne, kX, kY, kXY, kZ, kXZ, kYZ, kXYZ };
std::string word_name(Word w);

// sign * [x,y,z]^a1 * [x,z,y]^a2 * [x,y,xz]^a3 * word
struct SymbolicEntry {
  int sign = 1;
  bool a1 = false;
  bool a2 = false;
  bool a3 = false;
  Word word = Word::kOne;
};

using SymbolicTable = std::array<std::array<SymbolicEntry, 8>, 8>;
const SymbolicTable& symbolic_triple_table();
std::string format_symbolic(const SymbolicEntry& e);

struct TripleTable {
  TripleSignature signature;
  std::array<LoopElement, 8> header;
  std::array<std::array<LoopElement, 8>, 8> entries;
  // Signature-resolved word for each entry, e.g. "-(xy)z".
  std::array<std::array<std::string, 8>, 8> resolved;
};

// Entries filled in from the symbolic table; requires |<x,y,z>| = 16.
TripleTable triple_table(const LoopElement& x, const LoopElement& y, const LoopElement& z);
// Number of entries that disagree with direct multiplication.
std::size_t triple_table_mismatches(const TripleTable& t);

// ---------------------------------------------------------------------------
// Associators of doubled elements.

// Identity (a)..(g): the associator of ((x,p0),(y,p1),(z,p2)) in Q_n against
// the stated product of commutators and associators taken in Q_(n-1).
struct DoublingIdentity {
  char label = 'a';
  std::array<int, 3> pattern{};
  Sign lhs = Sign::kPlus;
  Sign rhs = Sign::kPlus;
  bool holds() const { return lhs == rhs; }
};

// x, y, z live at level n-1 < 63.
std::array<DoublingIdentity, 7> doubling_associators(const LoopElement& x,
                                                     const LoopElement& y,
                                                     const LoopElement& z);

// Classes of <(x,p0),(y,p1),(z,p2)> for all eight patterns, indexed by
// p0 | p1 << 1 | p2 << 2. Requires |<x,y,z>| = 16.
std::array<SixteenClass, 8> doubled_classes(const Triple& base);

// ---------------------------------------------------------------------------
// Index-2 subloops.

enum class Index2Tag { kFirst, kSecond, kThird };
std::string to_string(Index2Tag t);

struct Index2Type {
  Index2Tag tag = Index2Tag::kFirst;
  // D, the index-2 subloop of Q_(n-1), for the second and third types.
  std::optional<Subloop> witness;
};

// First: B = Q_(n-1). Second: B = D + De. Third: B = D + (Q_(n-1) \ D)e.
// Throws std::invalid_argument if B does not have index 2 and
// std::logic_error if B fits none of the three types.
Index2Type index2_type(const Subloop& b);

// ---------------------------------------------------------------------------
// The special role of e = i_n.

struct RigidityReport {
  int level = 0;
  // Every 16-element <x,y,e> is octonion.
  std::size_t e_subloops = 0;
  bool e_subloops_octonion = true;
  std::optional<Triple> e_counterexample;
  // For each x outside {1,-1,e,-e}, a triple (x,y,z) generating a
  // quasioctonion loop, if one exists.
  std::vector<std::pair<LoopElement, std::optional<Triple>>> quasi_witnesses;
  bool every_other_element_has_witness = true;
  // Every element of every third-type subloop, other than +-1, lies in a
  // quasioctonion subloop generated inside that subloop.
  std::size_t third_type_subloops = 0;
  bool third_type_has_no_rigid_element = true;

  bool all() const {
    return e_subloops_octonion && every_other_element_has_witness &&
           third_type_has_no_rigid_element;
  }
};

// Requires 4 <= level <= 5.
RigidityReport e_rigidity_check(int level);

}  // namespace cdloops
