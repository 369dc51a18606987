// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cdloops/aut.hpp"
#include "cdloops/classify.hpp"
#include "cdloops/element.hpp"
#include "cdloops/loopops.hpp"
#include "cdloops/oracle.hpp"
#include "cdloops/verify.hpp"

using namespace cdloops;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string note;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double dt = seconds_since(t0);
  std::printf("%s %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, dt,
              out.note.empty() ? "" : ": ", out.note.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string fmt(const Triple& t) {
  return "(" + format_element(t.x) + ", " + format_element(t.y) + ", " +
         format_element(t.z) + ")";
}

bool suite_checks_pass(int level, const std::set<std::string>& names,
                       std::string& note) {
  for (const auto& s : run_suites("lemmas", level)) {
    for (const auto& c : s.checks) {
      if (names.contains(c.name) && !c.passed) {
        note = "level " + std::to_string(level) + " " + c.name + ": " + c.detail;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "automorphism group orders 2, 24, 1344, 2688, 5376", [] {
    Outcome o;
    const std::size_t expected[] = {2, 24, 1344, 2688, 5376};
    auto t0 = Clock::now();
    for (int n = 1; n <= 3; ++n) {
      if (aut_group(n).order() != expected[n - 1]) {
        o.ok = false;
        o.note += "n=" + std::to_string(n) + " gives " +
                  std::to_string(aut_group(n).order()) + "; ";
      }
    }
    const double brute = seconds_since(t0);
    t0 = Clock::now();
    for (int n = 4; n <= 5; ++n) {
      if (aut_group(n).order() != expected[n - 1]) {
        o.ok = false;
        o.note += "n=" + std::to_string(n) + " gives " +
                  std::to_string(aut_group(n).order()) + "; ";
      }
    }
    const double doubled = seconds_since(t0);
    if (brute >= 60.0 || doubled >= 1.0) o.ok = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "search %.2f s, doubling %.3f s", brute, doubled);
    o.note += buf;
    return o;
  });

  criterion(2, "orbit-stabilizer factors (6,4) and (14,12,8)", [] {
    const auto f2 = orbit_stabilizer_factors(aut_group(2));
    const auto f3 = orbit_stabilizer_factors(aut_group(3));
    const bool ok = f2 == std::vector<std::size_t>{6, 4} &&
                    f3 == std::vector<std::size_t>{14, 12, 8};
    return Outcome{ok, ""};
  });

  criterion(3, "loop product equals algebra product for n <= 5", [] {
    const auto t0 = Clock::now();
    for (int n = 0; n <= 5; ++n) {
      const Bits dim = Bits{1} << n;
      for (Bits v = 0; v < dim; ++v) {
        const LoopElement a(n, false, v);
        for (Bits w = 0; w < dim; ++w) {
          const LoopElement b(n, false, w);
          if (oracle::algebra_mul(oracle::basis(a), oracle::basis(b)) !=
              oracle::basis(a * b)) {
            return Outcome{false, format_element(a) + " * " + format_element(b)};
          }
        }
      }
    }
    return Outcome{seconds_since(t0) < 120.0, ""};
  });

  criterion(4, "every subloop of Q_n is normal for n <= 5", [] {
    const auto t0 = Clock::now();
    for (int n = 0; n <= 5; ++n) {
      if (!is_hamiltonian(n)) return Outcome{false, "level " + std::to_string(n)};
    }
    return Outcome{seconds_since(t0) < 300.0, ""};
  });

  criterion(5, "pair class matches generated subloop for n <= 5", [] {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& x : loop_elements(n)) {
        for (const auto& y : loop_elements(n)) {
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
          if (!ok) {
            return Outcome{false, format_element(x) + ", " + format_element(y)};
          }
        }
      }
    }
    return Outcome{true, ""};
  });

  criterion(6, "center, derived and associator subloops; extension doubling (n <= 4)", [] {
    const std::set<std::string> names{"commutators and associators are +-1",
                                      "center, derived and associator subloops",
                                      "adjoining an element doubles a subloop"};
    std::string note;
    for (int n = 0; n <= 4; ++n) {
      if (!suite_checks_pass(n, names, note)) return Outcome{false, note};
    }
    return Outcome{true, ""};
  });

  criterion(7, "16-element subloops of Q_4 and Q_5 classify consistently", [] {
    std::size_t count = 0;
    for (int n = 4; n <= 5; ++n) {
      for (const auto& s : all_subloops(n)) {
        if (s.size() != 16) continue;
        ++count;
        const auto c = classify16(s);
        if ((c.cls == SixteenClass::kOctonion) != is_moufang(s)) {
          return Outcome{false, format_subloop(s)};
        }
      }
    }
    const auto P = [](const char* t) { return parse_element(t, 4); };
    const bool named =
        classify16(closure({P("i1"), P("i2"), P("i3")}, 4)).cls ==
            SixteenClass::kOctonion &&
        classify16(closure({P("i1"), P("i2"), P("i3*i4")}, 4)).cls ==
            SixteenClass::kQuasiOctonion;
    return Outcome{named, std::to_string(count) + " subloops"};
  });

  criterion(8, "doubled associator identities (a)-(g) on Q_3 -> Q_4", [] {
    const auto all = loop_elements(3);
    for (const auto& x : all) {
      for (const auto& y : all) {
        for (const auto& z : all) {
          for (const auto& id : doubling_associators(x, y, z)) {
            if (!id.holds()) {
              return Outcome{false, std::string(1, id.label) + " at " +
                                        fmt(Triple{x, y, z})};
            }
          }
        }
      }
    }
    return Outcome{true, std::to_string(all.size() * all.size() * all.size()) +
                             " triples"};
  });

  criterion(9, "15 index-2 subloops of Q_4, each typed, one of the first type", [] {
    const auto b = index2_subloops(4);
    std::size_t first = 0;
    std::set<std::vector<bool>> rows;
    for (const auto& s : b) {
      if (index2_type(s).tag == Index2Tag::kFirst) ++first;
      std::vector<bool> members;
      std::size_t in = 0;
      for (Bits v = 0; v < 16; ++v) {
        members.push_back(s.contains(LoopElement(4, false, v)));
        in += members.back();
        if (members.back() != s.contains(LoopElement(4, true, v))) {
          return Outcome{false, "sign asymmetry in " + format_subloop(s)};
        }
      }
      if (in != 8) return Outcome{false, format_subloop(s)};
      rows.insert(members);
    }
    return Outcome{b.size() == 15 && first == 1 && rows.size() == 15,
                   std::to_string(b.size()) + " subloops, " +
                       std::to_string(first) + " first"};
  });

  criterion(10, "automorphism structure for n = 4 with independent search", [] {
    const auto t0 = Clock::now();
    const auto r = verify_aut_theorem(4, true);
    const bool ok = r.all() && r.brute_force_order == 2688 &&
                    seconds_since(t0) < 600.0;
    return Outcome{ok, "search found " +
                           std::to_string(r.brute_force_order.value_or(0))};
  });

  criterion(11, "Moufang identity holds in Q_3 and fails in Q_4", [] {
    const bool q3 = is_moufang(Subloop::whole(3));
    const auto w = moufang_counterexample(Subloop::whole(4));
    if (!w) return Outcome{false, "no witness in Q_4"};
    const bool real_witness =
        (w->x * w->y) * (w->z * w->x) != (w->x * (w->y * w->z)) * w->x;
    return Outcome{q3 && real_witness, "witness " + fmt(*w)};
  });

  criterion(12, "Norton conditions 1-4 for n = 2..5", [] {
    for (int n = 2; n <= 5; ++n) {
      const auto r = norton_conditions(n);
      if (!r.all()) return Outcome{false, "level " + std::to_string(n)};
    }
    return Outcome{true, ""};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
