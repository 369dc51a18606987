#include "cdloops/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "cdloops/classify.hpp"
#include "cdloops/element.hpp"
#include "cdloops/loopops.hpp"
#include "cdloops/oracle.hpp"
#include "cdloops/parallel.hpp"

namespace cdloops {

namespace {

constexpr int kCoreMaxLevel = 6;
constexpr int kOracleMaxLevel = 6;
constexpr int kLoopMaxLevel = 5;

std::string fmt(const LoopElement& a) { return format_element(a); }

std::string fmt(const Triple& t) {
  return "(" + fmt(t.x) + ", " + fmt(t.y) + ", " + fmt(t.z) + ")";
}

Check pass(std::string name, Provenance p, std::string detail) {
  return {std::move(name), true, p, std::move(detail)};
}

Check fail(std::string name, Provenance p, std::string witness) {
  return {std::move(name), false, p, std::move(witness)};
}

// Keeps the first witness in index order when scanning in parallel.
class FirstWitness {
 public:
  void offer(std::size_t index, std::string witness) {
    std::lock_guard lock(mutex_);
    if (!index_ || index < *index_) {
      index_ = index;
      witness_ = std::move(witness);
    }
  }
  bool found() const { return index_.has_value(); }
  const std::string& witness() const { return witness_; }

 private:
  std::mutex mutex_;
  std::optional<std::size_t> index_;
  std::string witness_;
};

Check scan(std::string name, Provenance p, std::size_t count,
           const std::function<std::optional<std::string>(std::size_t)>& probe,
           std::string summary) {
  FirstWitness first;
  parallel_for(count, [&](std::size_t k) {
    if (auto w = probe(k)) first.offer(k, std::move(*w));
  });
  if (first.found()) return fail(std::move(name), p, first.witness());
  return pass(std::move(name), p, std::move(summary));
}

// ---------------------------------------------------------------------------

SuiteResult core_suite(int n) {
  SuiteResult r{"core", n, {}};
  const auto all = loop_elements(n);
  const std::size_t size = all.size();
  const std::string pairs = std::to_string(size * size) + " pairs";
  const Bits dim = Bits{1} << n;

  r.checks.push_back(scan(
      "twist table matches recursion", Provenance::kDerived, dim,
      [&](std::size_t v) -> std::optional<std::string> {
        for (Bits w = 0; w < dim; ++w) {
          if (twist(v, w, n) != twist_cached(v, w, n)) {
            return "v=" + std::to_string(v) + " w=" + std::to_string(w);
          }
        }
        return std::nullopt;
      },
      std::to_string(dim * dim) + " patterns"));

  r.checks.push_back(scan(
      "product patterns add in (Z_2)^n", Provenance::kPaper, size,
      [&](std::size_t i) -> std::optional<std::string> {
        for (const auto& y : all) {
          if ((all[i] * y).bits() != (all[i].bits() ^ y.bits())) {
            return fmt(all[i]) + " * " + fmt(y);
          }
        }
        return std::nullopt;
      },
      pairs));

  const auto one = LoopElement::identity(n);
  const auto minus = LoopElement::minus_one(n);
  r.checks.push_back(scan(
      "-1 is central and x^2 = -1 off the reals", Provenance::kPaper, size,
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& x = all[i];
        if (x * minus != -x || minus * x != -x) return fmt(x);
        if (!x.is_real() && x * x != minus) return fmt(x);
        if (x.is_real() && x * x != one) return fmt(x);
        return std::nullopt;
      },
      std::to_string(size) + " elements"));

  r.checks.push_back(scan(
      "inverse property", Provenance::kPaper, size,
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& x = all[i];
        const auto xi = inv(x);
        for (const auto& y : all) {
          if (xi * (x * y) != y || (y * x) * xi != y) {
            return fmt(x) + ", " + fmt(y);
          }
        }
        return std::nullopt;
      },
      pairs));

  r.checks.push_back(scan(
      "text round trip", Provenance::kDerived, size,
      [&](std::size_t i) -> std::optional<std::string> {
        if (parse_element(fmt(all[i]), n) != all[i]) return fmt(all[i]);
        return std::nullopt;
      },
      std::to_string(size) + " elements"));
  return r;
}

SuiteResult oracle_suite(int n) {
  SuiteResult r{"oracle", n, {}};
  const Bits dim = Bits{1} << n;
  r.checks.push_back(scan(
      "loop product equals algebra product on basis pairs",
      Provenance::kDerived, dim,
      [&](std::size_t v) -> std::optional<std::string> {
        const LoopElement a(n, false, v);
        const auto ua = oracle::basis(a);
        for (Bits w = 0; w < dim; ++w) {
          const LoopElement b(n, false, w);
          if (oracle::algebra_mul(ua, oracle::basis(b)) !=
              oracle::basis(a * b)) {
            return fmt(a) + " * " + fmt(b);
          }
        }
        return std::nullopt;
      },
      std::to_string(dim * dim) + " basis pairs"));
  return r;
}

SuiteResult lemmas_suite(int n) {
  SuiteResult r{"lemmas", n, {}};
  const auto all = loop_elements(n);
  const std::size_t size = all.size();
  const auto subloops = all_subloops(n);

  r.checks.push_back(scan(
      "commutators and associators are +-1", Provenance::kPaper, size,
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& x = all[i];
        try {
          for (const auto& y : all) {
            commutator(x, y);
            for (const auto& z : all) associator(x, y, z);
          }
        } catch (const std::logic_error& e) {
          return e.what();
        }
        return std::nullopt;
      },
      std::to_string(size * size * size) + " triples"));

  r.checks.push_back(scan(
      "center, derived and associator subloops", Provenance::kPaper,
      subloops.size(),
      [&](std::size_t k) -> std::optional<std::string> {
        const auto& s = subloops[k];
        const Subloop z = center(s);
        const bool ok =
            s.size() > 4
                ? z.size() == 2 && z.contains(LoopElement::minus_one(n)) &&
                      derived_subloop(s) == z &&
                      (s.size() > 8 ? associator_subloop(s) == z
                                    : associator_subloop(s).size() == 1)
                : z == s && derived_subloop(s).size() == 1 &&
                      associator_subloop(s).size() == 1;
        if (!ok) return format_subloop(s);
        return std::nullopt;
      },
      std::to_string(subloops.size()) + " subloops"));

  r.checks.push_back(scan(
      "adjoining an element doubles a subloop", Provenance::kPaper,
      subloops.size(),
      [&](std::size_t k) -> std::optional<std::string> {
        const auto& b = subloops[k];
        if (b.size() == 1) return std::nullopt;
        std::vector<LoopElement> gens(b.elements().begin(), b.elements().end());
        for (const auto& x : all) {
          if (b.contains(x)) continue;
          gens.push_back(x);
          const bool ok = closure(gens, n).size() == 2 * b.size();
          gens.pop_back();
          if (!ok) return format_subloop(b) + " with " + fmt(x);
        }
        return std::nullopt;
      },
      std::to_string(subloops.size()) + " subloops"));

  r.checks.push_back(scan(
      "pair class matches generated subloop", Provenance::kPaper, size,
      [&](std::size_t i) -> std::optional<std::string> {
        const auto& x = all[i];
        for (const auto& y : all) {
          const auto c = closure({x, y}, n);
          bool ok = false;
          switch (pair_class(x, y)) {
            case PairClass::kReal:
              ok = c.size() <= 2;
              break;
            case PairClass::kComplex:
              ok = c.size() == 4 && is_group(c) && is_commutative(c);
              break;
            case PairClass::kQuaternion:
              ok = is_quaternion_group(c);
              break;
          }
          if (!ok) return fmt(x) + ", " + fmt(y);
        }
        return std::nullopt;
      },
      std::to_string(size * size) + " pairs"));

  {
    const auto w = moufang_counterexample(Subloop::whole(n));
    const bool expect_moufang = n <= 3;
    const std::string name =
        expect_moufang ? "Moufang identity holds" : "Moufang identity fails";
    if (w.has_value() != expect_moufang) {
      r.checks.push_back(pass(name, Provenance::kPaper,
                              w ? "witness " + fmt(*w) : "exhaustive"));
    } else {
      r.checks.push_back(fail(name, Provenance::kPaper,
                              w ? "witness " + fmt(*w) : "no witness found"));
    }
  }

  if (n >= 1) {
    const auto lower = loop_elements(n - 1);
    r.checks.push_back(scan(
        "doubled associator identities (a)-(g)", Provenance::kPaper,
        lower.size(),
        [&](std::size_t i) -> std::optional<std::string> {
          const auto& x = lower[i];
          for (const auto& y : lower) {
            for (const auto& z : lower) {
              for (const auto& id : doubling_associators(x, y, z)) {
                if (!id.holds()) {
                  return std::string(1, id.label) + " at " +
                         fmt(Triple{x, y, z});
                }
              }
            }
          }
          return std::nullopt;
        },
        std::to_string(lower.size() * lower.size() * lower.size()) +
            " triples"));
  }

  if (n >= 3) {
    std::vector<Subloop> sixteen;
    for (const auto& s : subloops) {
      if (s.size() == 16) sixteen.push_back(s);
    }
    r.checks.push_back(scan(
        "sixteen-element subloops: signature agrees with Moufang test",
        Provenance::kPaper, sixteen.size(),
        [&](std::size_t k) -> std::optional<std::string> {
          try {
            classify16(sixteen[k]);
          } catch (const std::logic_error& e) {
            return e.what();
          }
          return std::nullopt;
        },
        std::to_string(sixteen.size()) + " subloops"));

    r.checks.push_back(scan(
        "multiplication table of <x,y,z> and case isomorphisms",
        Provenance::kPaper, size,
        [&](std::size_t i) -> std::optional<std::string> {
          const auto& x = all[i];
          for (const auto& y : all) {
            for (const auto& z : all) {
              if (!generates_sixteen(x, y, z)) continue;
              const Triple t{x, y, z};
              if (triple_table_mismatches(triple_table(x, y, z)) != 0) {
                return "table at " + fmt(t);
              }
              if (!verify_word_map(case_isomorphism(t))) {
                return "isomorphism at " + fmt(t);
              }
            }
          }
          return std::nullopt;
        },
        "every generating triple"));
  }

  if (n >= 1) {
    const auto b = index2_subloops(n);
    std::size_t first = 0;
    std::string bad;
    for (const auto& s : b) {
      try {
        if (index2_type(s).tag == Index2Tag::kFirst) ++first;
      } catch (const std::logic_error& e) {
        if (bad.empty()) bad = e.what();
      }
    }
    const std::string name = "index-2 subloops are typed, exactly one first";
    if (bad.empty() && first == 1) {
      r.checks.push_back(pass(name, Provenance::kPaper,
                              std::to_string(b.size()) + " subloops"));
    } else {
      r.checks.push_back(fail(
          name, Provenance::kPaper,
          bad.empty() ? std::to_string(first) + " first-type subloops" : bad));
    }
  }

  if (n >= 4) {
    const auto rr = e_rigidity_check(n);
    std::string detail = std::to_string(rr.e_subloops) + " subloops through e";
    if (rr.e_counterexample) detail = "witness " + fmt(*rr.e_counterexample);
    r.checks.push_back({"subloops through e are octonion", rr.e_subloops_octonion,
                        Provenance::kPaper, detail});
    std::string missing;
    for (const auto& [x, w] : rr.quasi_witnesses) {
      if (!w && missing.empty()) missing = "no witness for " + fmt(x);
    }
    r.checks.push_back(
        {"other elements lie in a quasioctonion subloop",
         rr.every_other_element_has_witness, Provenance::kPaper,
         missing.empty() ? std::to_string(rr.quasi_witnesses.size()) +
                               " elements"
                         : missing});
    r.checks.push_back({"third-type subloops have no rigid element",
                        rr.third_type_has_no_rigid_element, Provenance::kPaper,
                        std::to_string(rr.third_type_subloops) + " subloops"});
  }
  return r;
}

SuiteResult hamiltonian_suite(int n) {
  SuiteResult r{"hamiltonian", n, {}};
  const auto subloops = all_subloops(n);
  r.checks.push_back(scan(
      "every subloop is normal", Provenance::kPaper, subloops.size(),
      [&](std::size_t k) -> std::optional<std::string> {
        if (!is_normal(subloops[k])) return format_subloop(subloops[k]);
        return std::nullopt;
      },
      std::to_string(subloops.size()) + " subloops"));
  r.checks.push_back(
      {"diassociative", is_diassociative(n), Provenance::kPaper,
       std::to_string(loop_size(n) * loop_size(n)) + " pairs"});
  return r;
}

SuiteResult norton_suite(int n) {
  SuiteResult r{"norton", n, {}};
  const auto nr = norton_conditions(n);
  r.checks.push_back({"orders are 1, 2 or 4", nr.orders_in_1_2_4,
                      Provenance::kPaper, "all elements"});
  r.checks.push_back(
      {"some pair generates the quaternion group",
       nr.quaternion_pair.has_value(), Provenance::kPaper,
       nr.quaternion_pair ? "witness (" + fmt(nr.quaternion_pair->first) +
                                ", " + fmt(nr.quaternion_pair->second) + ")"
                          : "no pair found"});
  r.checks.push_back({"elements of order 2 are central", nr.order_two_central,
                      Provenance::kPaper, "all elements"});
  r.checks.push_back(
      {"order-4 squares, commutators and associators", nr.order_four_relations,
       Provenance::kPaper,
       nr.order_four_counterexample
           ? "witness " + fmt(*nr.order_four_counterexample)
           : "all order-4 triples"});
  return r;
}

struct SuiteSpec {
  std::string name;
  int max_level;
  SuiteResult (*run)(int);
};

const std::vector<SuiteSpec>& specs() {
  static const std::vector<SuiteSpec> s{
      {"core", kCoreMaxLevel, core_suite},
      {"oracle", kOracleMaxLevel, oracle_suite},
      {"lemmas", kLoopMaxLevel, lemmas_suite},
      {"hamiltonian", kLoopMaxLevel, hamiltonian_suite},
      {"norton", kLoopMaxLevel, norton_suite},
  };
  return s;
}

const SuiteSpec& find_spec(std::string_view name) {
  for (const auto& s : specs()) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace

std::string to_string(Provenance p) {
  return p == Provenance::kPaper ? "paper" : "derived";
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return names;
}

int suite_max_level(std::string_view name) {
  if (name == "all") {
    int m = kMaxLevel;
    for (const auto& s : specs()) m = std::min(m, s.max_level);
    return m;
  }
  return find_spec(name).max_level;
}

std::vector<SuiteResult> run_suites(std::string_view name, int level) {
  const int bound = suite_max_level(name);
  if (level < 0 || level > bound) {
    throw std::invalid_argument("suite '" + std::string(name) +
                                "' supports levels 0.." +
                                std::to_string(bound));
  }
  std::vector<SuiteResult> out;
  for (const auto& s : specs()) {
    if (name == "all" || s.name == name) out.push_back(s.run(level));
  }
  return out;
}

}  // namespace cdloops
