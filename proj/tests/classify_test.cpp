#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "cdloops/classify.hpp"
#include "cdloops/element.hpp"
#include "cdloops/loopops.hpp"
#include "cdloops/oracle.hpp"

namespace cdloops {
namespace {

LoopElement P(const char* text, int level) { return parse_element(text, level); }

// Associator sign straight from the algebra: (xy)z = s * x(yz).
Sign oracle_associator(const LoopElement& x, const LoopElement& y,
                       const LoopElement& z) {
  using namespace oracle;
  const auto lhs = algebra_mul(algebra_mul(basis(x), basis(y)), basis(z));
  const auto rhs = algebra_mul(basis(x), algebra_mul(basis(y), basis(z)));
  if (lhs == rhs) return Sign::kPlus;
  if (lhs == algebra_neg(rhs)) return Sign::kMinus;
  throw std::logic_error("associator is not a sign");
}

LoopElement oracle_product(const LoopElement& a, const LoopElement& b) {
  const auto v = oracle::algebra_mul(oracle::basis(a), oracle::basis(b));
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (v[i] != 0) return {a.level(), v[i] < 0, static_cast<Bits>(i)};
  }
  throw std::logic_error("zero product");
}

// Moufang identity on a 16-element subloop evaluated with oracle products.
bool oracle_moufang(const Subloop& s) {
  for (const auto& x : s.elements()) {
    for (const auto& y : s.elements()) {
      for (const auto& z : s.elements()) {
        const auto l = oracle_product(oracle_product(x, y), oracle_product(z, x));
        const auto r = oracle_product(oracle_product(x, oracle_product(y, z)), x);
        if (l != r) return false;
      }
    }
  }
  return true;
}

TEST(ClassifyTest, SignatureMatchesOracle) {
  const auto all = loop_elements(4);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        if (!generates_sixteen(x, y, z)) continue;
        const auto s = triple_signature(x, y, z);
        ASSERT_EQ(s.xyz, oracle_associator(x, y, z));
        ASSERT_EQ(s.xzy, oracle_associator(x, z, y));
        ASSERT_EQ(s.xy_xz, oracle_associator(x, y, x * z));
      }
    }
  }
}

TEST(ClassifyTest, GeneratesSixteenMatchesClosure) {
  const auto all = loop_elements(3);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        EXPECT_EQ(generates_sixteen(x, y, z), closure({x, y, z}, 3).size() == 16);
      }
    }
  }
}

TEST(ClassifyTest, SignatureRejectsSmallSubloops) {
  EXPECT_THROW(triple_signature(P("i1", 3), P("i2", 3), P("i1*i2", 3)),
               std::invalid_argument);
}

TEST(ClassifyTest, NamedSubloops) {
  const auto o = closure({P("i1", 4), P("i2", 4), P("i3", 4)}, 4);
  const auto q = closure({P("i1", 4), P("i2", 4), P("i3*i4", 4)}, 4);
  EXPECT_EQ(classify16(o).cls, SixteenClass::kOctonion);
  EXPECT_EQ(classify16(q).cls, SixteenClass::kQuasiOctonion);
  const auto s = triple_signature(P("i1", 4), P("i2", 4), P("i3", 4));
  EXPECT_EQ(s, (TripleSignature{Sign::kMinus, Sign::kMinus, Sign::kMinus}));
  EXPECT_EQ(to_string(SixteenClass::kOctonion), "octonion");
  EXPECT_EQ(to_string(SixteenClass::kQuasiOctonion), "quasioctonion");
  EXPECT_THROW(classify16(Subloop::whole(2)), std::invalid_argument);
}

// The class does not depend on which generating triple is used.
TEST(ClassifyTest, SignatureClassIsInvariant) {
  for (const auto& s : all_subloops(4)) {
    if (s.size() != 16) continue;
    const auto cls = classify16(s).cls;
    const auto e = s.elements();
    for (const auto& x : e) {
      for (const auto& y : e) {
        for (const auto& z : e) {
          if (!generates_sixteen(x, y, z)) continue;
          ASSERT_EQ(class_of_signature(triple_signature(x, y, z)), cls);
        }
      }
    }
  }
}

TEST(ClassifyTest, ClassifyAgreesWithOracleMoufang) {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& s : all_subloops(n)) {
      if (s.size() != 16) continue;
      EXPECT_EQ(classify16(s).cls == SixteenClass::kOctonion, oracle_moufang(s))
          << format_subloop(s);
    }
  }
}

TEST(ClassifyTest, EverySignatureOccurs) {
  std::set<int> patterns;
  const auto all = loop_elements(4);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        if (!generates_sixteen(x, y, z)) continue;
        const auto s = triple_signature(x, y, z);
        patterns.insert((s.xyz == Sign::kMinus) | (s.xzy == Sign::kMinus) << 1 |
                        (s.xy_xz == Sign::kMinus) << 2);
      }
    }
  }
  EXPECT_EQ(patterns.size(), 8U);
}

TEST(ClassifyTest, CaseIsomorphismsAtLevelFour) {
  std::map<int, int> cases;
  const auto all = loop_elements(4);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        if (!generates_sixteen(x, y, z)) continue;
        const auto s = triple_signature(x, y, z);
        const int p = (s.xyz == Sign::kMinus) | (s.xzy == Sign::kMinus) << 1 |
                      (s.xy_xz == Sign::kMinus) << 2;
        const auto m = case_isomorphism({x, y, z});
        ASSERT_TRUE(verify_word_map(m).has_value())
            << format_element(x) << " " << format_element(y) << " "
            << format_element(z);
        EXPECT_EQ(closure({m.source[0], m.source[1], m.source[2]}, 4),
                  closure({x, y, z}, 4));
        ++cases[p];
      }
    }
  }
  EXPECT_EQ(cases.size(), 8U);
}

TEST(ClassifyTest, WordMapRejectsNonHomomorphism) {
  const WordMap m{{P("i1", 4), P("i2", 4), P("i3*i4", 4)},
                  {P("i1", 4), P("i2", 4), P("i3", 4)}};
  EXPECT_FALSE(verify_word_map(m).has_value());
  const WordMap id{{P("i1", 4), P("i2", 4), P("i3", 4)},
                   {P("i1", 4), P("i2", 4), P("i3", 4)}};
  const auto pairs = verify_word_map(id);
  ASSERT_TRUE(pairs.has_value());
  EXPECT_EQ(pairs->size(), 16U);
}

TEST(ClassifyTest, SymbolicTableFormatting) {
  const auto& t = symbolic_triple_table();
  EXPECT_EQ(format_symbolic(t[0][0]), "1");
  EXPECT_EQ(format_symbolic(t[1][1]), "-1");
  EXPECT_EQ(format_symbolic(t[1][6]), "[x,y,z](xy)z");
  EXPECT_EQ(format_symbolic(t[2][7]), "-[x,y,z][x,z,y]xz");
  EXPECT_EQ(format_symbolic(t[3][5]), "-[x,z,y][x,y,xz]yz");
  EXPECT_EQ(word_name(Word::kXYZ), "(xy)z");
}

TEST(ClassifyTest, TripleTableHoldsForAllTriples) {
  const auto all = loop_elements(4);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        if (!generates_sixteen(x, y, z)) continue;
        ASSERT_EQ(triple_table_mismatches(triple_table(x, y, z)), 0U);
      }
    }
  }
}

TEST(ClassifyTest, TripleTableOctonionResolved) {
  const auto t = triple_table(P("i1", 3), P("i2", 3), P("i3", 3));
  EXPECT_EQ(t.resolved[1][6], "-(xy)z");
  EXPECT_EQ(t.resolved[6][1], "(xy)z");
  EXPECT_EQ(t.entries[1][2], P("i1*i2", 3));
}

TEST(ClassifyTest, DoublingIdentities) {
  const auto all = loop_elements(3);
  for (const auto& x : all) {
    for (const auto& y : all) {
      for (const auto& z : all) {
        for (const auto& id : doubling_associators(x, y, z)) {
          ASSERT_TRUE(id.holds()) << id.label;
          const auto lhs = oracle_associator(lift(x, id.pattern[0]),
                                             lift(y, id.pattern[1]),
                                             lift(z, id.pattern[2]));
          ASSERT_EQ(id.lhs, lhs);
        }
      }
    }
  }
}

TEST(ClassifyTest, DoubledOctonionClasses) {
  const auto c = doubled_classes({P("i1", 3), P("i2", 3), P("i3", 3)});
  EXPECT_EQ(c[0], SixteenClass::kOctonion);
  int octonion = 0;
  for (auto k : c) octonion += k == SixteenClass::kOctonion;
  for (int p = 0; p < 8; ++p) {
    const auto x = lift(P("i1", 3), p & 1);
    const auto y = lift(P("i2", 3), (p >> 1) & 1);
    const auto z = lift(P("i3", 3), (p >> 2) & 1);
    EXPECT_EQ(c[static_cast<std::size_t>(p)] == SixteenClass::kOctonion,
              oracle_moufang(closure({x, y, z}, 4)));
  }
  EXPECT_GT(octonion, 0);
}

TEST(ClassifyTest, Index2TypesAtLevelFour) {
  std::map<Index2Tag, int> counts;
  for (const auto& b : index2_subloops(4)) {
    const auto t = index2_type(b);
    ++counts[t.tag];
    if (t.tag == Index2Tag::kFirst) {
      EXPECT_FALSE(t.witness.has_value());
      for (const auto& a : b.elements()) EXPECT_FALSE(a.top_bit());
    } else {
      ASSERT_TRUE(t.witness.has_value());
      EXPECT_EQ(t.witness->size(), 8U);
    }
  }
  EXPECT_EQ(counts[Index2Tag::kFirst], 1);
  EXPECT_EQ(counts[Index2Tag::kFirst] + counts[Index2Tag::kSecond] +
                counts[Index2Tag::kThird],
            15);
  EXPECT_EQ(counts[Index2Tag::kSecond], 7);
  EXPECT_EQ(counts[Index2Tag::kThird], 7);
  EXPECT_THROW(index2_type(Subloop::whole(3)), std::invalid_argument);
  EXPECT_EQ(to_string(Index2Tag::kThird), "third");
}

TEST(ClassifyTest, Index2TypeExamples) {
  const auto second = closure({P("i1", 4), P("i2", 4), P("i4", 4)}, 4);
  EXPECT_EQ(index2_type(second).tag, Index2Tag::kSecond);
  const auto third = closure({P("i1", 4), P("i2", 4), P("i3*i4", 4)}, 4);
  EXPECT_EQ(index2_type(third).tag, Index2Tag::kThird);
  EXPECT_EQ(classify16(second).cls, SixteenClass::kOctonion);
  EXPECT_EQ(classify16(third).cls, SixteenClass::kQuasiOctonion);
}

TEST(ClassifyTest, Index2TypesAtLevelFive) {
  std::map<Index2Tag, int> counts;
  for (const auto& b : index2_subloops(5)) ++counts[index2_type(b).tag];
  EXPECT_EQ(counts[Index2Tag::kFirst], 1);
  EXPECT_EQ(counts[Index2Tag::kSecond], 15);
  EXPECT_EQ(counts[Index2Tag::kThird], 15);
}

TEST(ClassifyTest, RigidityOfE) {
  const auto r = e_rigidity_check(4);
  EXPECT_TRUE(r.all());
  EXPECT_TRUE(r.e_subloops_octonion);
  EXPECT_FALSE(r.e_counterexample.has_value());
  EXPECT_EQ(r.e_subloops, 7U);
  EXPECT_EQ(r.quasi_witnesses.size(), 28U);
  EXPECT_EQ(r.third_type_subloops, 7U);
  for (const auto& [x, w] : r.quasi_witnesses) {
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(oracle_moufang(closure({w->x, w->y, w->z}, 4)));
  }
  EXPECT_THROW(e_rigidity_check(3), std::invalid_argument);
}

}  // namespace
}  // namespace cdloops
