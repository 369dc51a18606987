// Command-line front end: mul, table, subloops, classify, aut, verify.
//
// Every command builds a JSON report first; the text and CSV renderings
// are produced from that report, so all formats carry the same facts.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdloops/aut.hpp"
#include "cdloops/classify.hpp"
#include "cdloops/element.hpp"
#include "cdloops/loopops.hpp"
#include "cdloops/verify.hpp"

namespace {

using nlohmann::json;
using namespace cdloops;

constexpr std::size_t kMaxTableSize = 128;
constexpr int kMaxFullSubloopLevel = 5;
constexpr int kMaxIndex2Level = 6;
constexpr int kMaxAutCliLevel = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int level = -1;
  std::string format = "text";
  std::string lhs, rhs;
  std::string subloop;
  bool symbolic = false;
  bool index2 = false;
  bool figure1 = false;
  bool orders_only = false;
  bool verify_theorem = false;
  bool brute_force = false;
  std::string suite;
};

json claim(const std::string& text, const std::string& source) {
  return {{"claim", text}, {"source", source}};
}

json report(const std::string& kind, const std::string& command, int level) {
  return {{"kind", kind},
          {"command", command},
          {"level", level},
          {"payload", json::object()},
          {"provenance", json::array()}};
}

std::string sign_text(Sign s) { return s == Sign::kPlus ? "+1" : "-1"; }

std::vector<LoopElement> parse_list(const std::string& text, int level) {
  std::vector<LoopElement> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty element in list '" + text + "'");
    out.push_back(parse_element(item, level));
  }
  if (out.empty()) throw std::invalid_argument("empty generator list");
  return out;
}

std::vector<std::string> element_texts(std::span<const LoopElement> elems) {
  std::vector<std::string> out;
  for (const auto& a : elems) out.push_back(format_element(a));
  return out;
}

json triple_json(const Triple& t) {
  return json::array(
      {format_element(t.x), format_element(t.y), format_element(t.z)});
}

json signature_json(const TripleSignature& s) {
  return {{"xyz", value(s.xyz)}, {"xzy", value(s.xzy)}, {"xy_xz", value(s.xy_xz)}};
}

json classification_json(const Subloop& s) {
  const Classification c = classify16(s);
  return {{"subloop", format_subloop(s)},
          {"class", to_string(c.cls)},
          {"signature", signature_json(c.signature)},
          {"witness", triple_json(c.generators)}};
}

void require_level(int level, int lo, int hi, const std::string& what) {
  if (level < lo || level > hi) {
    throw std::invalid_argument(what + " supports levels " + std::to_string(lo) +
                                ".." + std::to_string(hi) + ", got " +
                                std::to_string(level));
  }
}

// ---------------------------------------------------------------------------
// Commands.

json cmd_mul(const Options& o, const std::string& command) {
  require_level(o.level, 0, kMaxLevel - 1, "mul");
  const LoopElement a = parse_element(o.lhs, o.level);
  const LoopElement b = parse_element(o.rhs, o.level);
  json r = report("mul", command, o.level);
  r["payload"] = {{"lhs", format_element(a)},
                  {"rhs", format_element(b)},
                  {"product", format_element(a * b)}};
  return r;
}

json cmd_table(const Options& o, const std::string& command) {
  require_level(o.level, 0, kMaxLevel - 1, "table");
  json r = report("table", command, o.level);
  std::vector<LoopElement> gens;
  Subloop s = Subloop::whole(0);
  if (o.subloop.empty()) {
    if (o.level > 6) {
      throw std::invalid_argument("table of Q_" + std::to_string(o.level) +
                                  " exceeds " + std::to_string(kMaxTableSize) +
                                  " elements");
    }
    s = Subloop::whole(o.level);
  } else {
    gens = parse_list(o.subloop, o.level);
    s = closure(gens, o.level);
  }
  if (s.size() > kMaxTableSize) {
    throw std::invalid_argument("table of size " + std::to_string(s.size()) +
                                " exceeds " + std::to_string(kMaxTableSize));
  }
  json& p = r["payload"];
  p["subloop"] = format_subloop(s);
  p["size"] = s.size();

  if (o.symbolic) {
    if (gens.size() != 3 || s.size() != 16) {
      throw std::invalid_argument(
          "--symbolic needs three generators of a 16-element subloop");
    }
    const TripleTable t = triple_table(gens[0], gens[1], gens[2]);
    if (triple_table_mismatches(t) != 0) {
      throw std::logic_error("symbolic table disagrees with multiplication");
    }
    p["generators"] = element_texts(gens);
    p["signature"] = signature_json(t.signature);
    p["class"] = to_string(class_of_signature(t.signature));
    json header = json::array(), words = json::array(), rows = json::array(),
         symbolic = json::array();
    for (std::size_t k = 0; k < 8; ++k) {
      header.push_back(format_element(t.header[k]));
      words.push_back(word_name(static_cast<Word>(k)));
    }
    const auto& sym = symbolic_triple_table();
    for (std::size_t i = 0; i < 8; ++i) {
      json row = json::array(), srow = json::array();
      for (std::size_t j = 0; j < 8; ++j) {
        row.push_back(t.resolved[i][j]);
        srow.push_back(format_symbolic(sym[i][j]));
      }
      rows.push_back(row);
      symbolic.push_back(srow);
    }
    p["words"] = words;
    p["header"] = header;
    p["rows"] = rows;
    p["symbolic"] = symbolic;
    r["provenance"].push_back(
        claim("symbolic multiplication table of <x,y,z>", "paper"));
    r["provenance"].push_back(
        claim("entries checked against direct multiplication", "derived"));
    return r;
  }

  json header = json::array(), rows = json::array();
  for (const auto& a : s.elements()) header.push_back(format_element(a));
  for (const auto& a : s.elements()) {
    json row = json::array();
    for (const auto& b : s.elements()) row.push_back(format_element(a * b));
    rows.push_back(row);
  }
  p["header"] = header;
  p["rows"] = rows;
  r["provenance"].push_back(claim("products from the sign recursion", "derived"));
  return r;
}

json subloop_row(const Subloop& s, bool typed) {
  json row = {{"size", s.size()}, {"subloop", format_subloop(s)}};
  if (typed) {
    const Index2Type t = index2_type(s);
    row["type"] = to_string(t.tag);
    if (t.witness) row["witness"] = format_subloop(*t.witness);
  }
  if (s.size() == 16) row["classification"] = classification_json(s);
  return row;
}

json cmd_subloops(const Options& o, const std::string& command) {
  const bool index2 = o.index2 || o.figure1;
  if (index2) {
    require_level(o.level, 1, kMaxIndex2Level, "subloops --index2");
  } else {
    require_level(o.level, 0, kMaxFullSubloopLevel, "subloops");
  }
  json r = report("subloops", command, o.level);
  json& p = r["payload"];
  const auto subs = index2 ? index2_subloops(o.level) : all_subloops(o.level);
  p["index2"] = index2;
  p["count"] = subs.size();
  json rows = json::array();
  std::size_t first = 0;
  for (const auto& s : subs) {
    json row = subloop_row(s, index2 && o.level >= 1);
    if (row.value("type", "") == "first") ++first;
    rows.push_back(row);
  }
  p["subloops"] = rows;
  if (index2) {
    p["first_type_count"] = first;
    r["provenance"].push_back(
        claim("index-2 subloops number 2^n - 1", "derived"));
    r["provenance"].push_back(
        claim("every index-2 subloop is of the first, second or third type",
              "paper"));
    r["provenance"].push_back(
        claim("exactly one index-2 subloop is of the first type", "paper"));
  } else {
    r["provenance"].push_back(
        claim("subloops correspond to subspaces of (Z_2)^n, plus {1}",
              "derived"));
  }
  if (o.level >= 3) {
    r["provenance"].push_back(
        claim("16-element subloops are octonion or quasioctonion", "paper"));
  }

  if (o.figure1) {
    json columns = json::array(), matrix = json::array();
    const Bits dim = Bits{1} << o.level;
    for (Bits v = 0; v < dim; ++v) {
      columns.push_back(format_element(LoopElement(o.level, false, v)));
    }
    for (const auto& s : subs) {
      json members = json::array();
      for (Bits v = 0; v < dim; ++v) {
        members.push_back(s.contains(LoopElement(o.level, false, v)));
      }
      matrix.push_back(members);
    }
    p["figure1"] = {{"columns", columns}, {"members", matrix}};
    r["provenance"].push_back(claim(
        "membership matrix rows follow canonical subloop order", "derived"));
  }
  return r;
}

json cmd_classify(const Options& o, const std::string& command) {
  require_level(o.level, 3, kMaxFullSubloopLevel, "classify");
  json r = report("classify", command, o.level);
  json records = json::array();
  if (!o.subloop.empty()) {
    const auto gens = parse_list(o.subloop, o.level);
    const Subloop s = closure(gens, o.level);
    if (s.size() != 16) {
      throw std::invalid_argument("subloop has " + std::to_string(s.size()) +
                                  " elements; classify needs 16");
    }
    json rec = classification_json(s);
    if (gens.size() == 3) {
      const Triple t{gens[0], gens[1], gens[2]};
      const auto sig = triple_signature(t.x, t.y, t.z);
      rec["generators"] = triple_json(t);
      rec["generator_signature"] = signature_json(sig);
      const WordMap m = case_isomorphism(t);
      if (!verify_word_map(m)) {
        throw std::logic_error("case isomorphism failed to verify");
      }
      rec["isomorphism"] = {
          {"source", element_texts(m.source)},
          {"target", element_texts(m.target)}};
    }
    records.push_back(rec);
  } else {
    for (const auto& s : all_subloops(o.level)) {
      if (s.size() == 16) records.push_back(classification_json(s));
    }
  }
  std::size_t octonion = 0;
  for (const auto& rec : records) octonion += rec["class"] == "octonion";
  r["payload"] = {{"records", records},
                  {"octonion", octonion},
                  {"quasioctonion", records.size() - octonion}};
  r["provenance"].push_back(
      claim("class determined by the associator signature", "paper"));
  r["provenance"].push_back(
      claim("class cross-checked with the Moufang identity", "derived"));
  return r;
}

json cmd_aut(const Options& o, const std::string& command) {
  require_level(o.level, 0, kMaxAutCliLevel, "aut");
  if (o.verify_theorem) require_level(o.level, 4, 5, "aut --verify-theorem");
  if (o.brute_force && !o.verify_theorem) {
    throw std::invalid_argument("--brute-force requires --verify-theorem");
  }
  json r = report("aut", command, o.level);
  json& p = r["payload"];
  const AutGroup& g = aut_group(o.level);
  p["order"] = g.order();
  const std::string order_claim =
      "|Aut(Q_" + std::to_string(o.level) + ")| = " + std::to_string(g.order());
  if (aut_order_is_extrapolated(o.level)) {
    p["order_source"] = "extrapolation";
    r["provenance"].push_back(claim(
        order_claim + ", doubling construction applied beyond the listed orders",
        "extrapolation"));
  } else {
    p["order_source"] = "paper";
    r["provenance"].push_back(claim(order_claim, "paper"));
  }
  if (!o.orders_only) {
    json gens = json::array();
    for (const auto& a : g.generators()) gens.push_back(format_automorphism(a));
    p["generators"] = gens;
    json factors = json::array();
    for (auto f : orbit_stabilizer_factors(g)) factors.push_back(f);
    p["orbit_stabilizer"] = factors;
    r["provenance"].push_back(claim("generating set", "derived"));
    r["provenance"].push_back(claim("orbit-stabilizer factors", "derived"));
  }
  if (o.verify_theorem) {
    const AutTheoremReport t = verify_aut_theorem(o.level, o.brute_force);
    json th = {{"fixes_plus_minus_one", t.fixes_plus_minus_one},
               {"e_to_plus_minus_e", t.e_to_plus_minus_e},
               {"preserves_lower_half", t.preserves_lower_half},
               {"restriction_in_lower_group", t.restriction_in_lower_group},
               {"upper_half_rule", t.upper_half_rule},
               {"direct_product", t.direct_product},
               {"all_items", t.all()}};
    if (t.brute_force_order) {
      th["brute_force_order"] = *t.brute_force_order;
      th["brute_force_matches"] = t.brute_force_matches;
    }
    p["theorem"] = th;
    r["passed"] = t.all();
    r["provenance"].push_back(
        claim("structure of automorphisms for n >= 4", "paper"));
    if (t.brute_force_order) {
      r["provenance"].push_back(
          claim("independent backtracking count", "derived"));
    }
  }
  return r;
}

json cmd_verify(const Options& o, const std::string& command) {
  const auto results = run_suites(o.suite, o.level);
  json r = report("verify", command, o.level);
  json suites = json::array();
  bool ok = true;
  for (const auto& s : results) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"source", to_string(c.provenance)},
                        {"detail", c.detail}});
    }
    suites.push_back({{"name", s.name}, {"passed", s.passed()}, {"checks", checks}});
    ok = ok && s.passed();
  }
  r["payload"] = {{"suite", o.suite}, {"suites", suites}};
  r["passed"] = ok;
  r["provenance"].push_back(claim("per-check sources listed with each check", "derived"));
  return r;
}

// ---------------------------------------------------------------------------
// Rendering.

std::string str(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& grid) {
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      width[k] = std::max(width[k], row[k].size());
    }
  }
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) line += "  ";
      line += row[k];
      if (k + 1 < row.size()) line.append(width[k] - row[k].size(), ' ');
    }
    out << line << '\n';
  }
}

std::vector<std::vector<std::string>> table_grid(const json& p) {
  std::vector<std::vector<std::string>> grid;
  const json& header = p.contains("words") ? p["words"] : p["header"];
  std::vector<std::string> top{"*"};
  for (const auto& h : header) top.push_back(str(h));
  grid.push_back(top);
  for (std::size_t i = 0; i < p["rows"].size(); ++i) {
    std::vector<std::string> row{str(header[i])};
    for (const auto& e : p["rows"][i]) row.push_back(str(e));
    grid.push_back(row);
  }
  return grid;
}

std::string signature_text(const json& s) {
  auto v = [&](const char* k) { return sign_text(s[k].get<int>() > 0 ? Sign::kPlus : Sign::kMinus); };
  return "[x,y,z]=" + v("xyz") + " [x,z,y]=" + v("xzy") + " [x,y,xz]=" + v("xy_xz");
}

std::string classification_text(const json& c) {
  return str(c["class"]) + " " + signature_text(c["signature"]) + " witness (" +
         str(c["witness"][0]) + ", " + str(c["witness"][1]) + ", " +
         str(c["witness"][2]) + ")";
}

void render_provenance(std::ostream& out, const json& r) {
  for (const auto& c : r["provenance"]) {
    out << "[" << str(c["source"]) << "] " << str(c["claim"]) << '\n';
  }
}

void render_text(std::ostream& out, const json& r) {
  const std::string kind = r["kind"];
  const json& p = r["payload"];
  if (kind == "mul") {
    out << str(p["product"]) << '\n';
    return;
  }
  if (kind == "table") {
    if (p.contains("signature")) {
      out << "subloop <" << str(p["generators"][0]) << "," << str(p["generators"][1])
          << "," << str(p["generators"][2]) << "> with x=" << str(p["generators"][0])
          << " y=" << str(p["generators"][1]) << " z=" << str(p["generators"][2]) << '\n';
      out << "signature " << signature_text(p["signature"]) << " class "
          << str(p["class"]) << '\n';
      print_aligned(out, table_grid(p));
      out << "symbolic form:\n";
      json sym = p;
      sym["rows"] = p["symbolic"];
      print_aligned(out, table_grid(sym));
      out << "words:";
      for (std::size_t k = 0; k < 8; ++k) {
        out << " " << str(p["words"][k]) << "=" << str(p["header"][k]);
      }
      out << '\n';
    } else {
      print_aligned(out, table_grid(p));
    }
    render_provenance(out, r);
    return;
  }
  if (kind == "subloops") {
    out << p["count"].get<std::size_t>()
        << (p["index2"].get<bool>() ? " index-2 subloops" : " subloops") << " of Q_"
        << r["level"].get<int>() << '\n';
    for (const auto& row : p["subloops"]) {
      std::string line = std::to_string(row["size"].get<std::size_t>());
      if (row.contains("type")) line += " " + str(row["type"]);
      line += " {" + str(row["subloop"]) + "}";
      if (row.contains("witness")) line += " D={" + str(row["witness"]) + "}";
      if (row.contains("classification")) {
        line += " " + classification_text(row["classification"]);
      }
      out << line << '\n';
    }
    if (p.contains("first_type_count")) {
      out << "first type: " << p["first_type_count"].get<std::size_t>() << '\n';
    }
    if (p.contains("figure1")) {
      const json& f = p["figure1"];
      std::vector<std::vector<std::string>> grid;
      std::vector<std::string> top{"#", "type"};
      for (const auto& c : f["columns"]) top.push_back(str(c));
      grid.push_back(top);
      for (std::size_t i = 0; i < f["members"].size(); ++i) {
        std::vector<std::string> row{std::to_string(i + 1),
                                     str(p["subloops"][i]["type"])};
        for (const auto& m : f["members"][i]) row.push_back(m.get<bool>() ? "x" : ".");
        grid.push_back(row);
      }
      print_aligned(out, grid);
    }
    render_provenance(out, r);
    return;
  }
  if (kind == "classify") {
    for (const auto& rec : p["records"]) {
      out << "{" << str(rec["subloop"]) << "} " << classification_text(rec) << '\n';
      if (rec.contains("generators")) {
        out << "generators (" << str(rec["generators"][0]) << ", "
            << str(rec["generators"][1]) << ", " << str(rec["generators"][2])
            << ") signature " << signature_text(rec["generator_signature"]) << '\n';
        const json& m = rec["isomorphism"];
        out << "isomorphism";
        for (std::size_t k = 0; k < 3; ++k) {
          out << (k ? ", " : " ") << str(m["source"][k]) << "->" << str(m["target"][k]);
        }
        out << '\n';
      }
    }
    out << "octonion " << p["octonion"].get<std::size_t>() << " quasioctonion "
        << p["quasioctonion"].get<std::size_t>() << '\n';
    render_provenance(out, r);
    return;
  }
  if (kind == "aut") {
    out << p["order"].get<std::size_t>() << '\n';
    out << "source: " << str(p["order_source"]) << '\n';
    if (p.contains("generators")) {
      out << "generators:\n";
      for (const auto& g : p["generators"]) out << "  " << str(g) << '\n';
      out << "orbit-stabilizer factors:";
      for (const auto& f : p["orbit_stabilizer"]) out << " " << f.get<std::size_t>();
      out << '\n';
    }
    if (p.contains("theorem")) {
      for (const auto& [k, v] : p["theorem"].items()) {
        if (v.is_boolean()) {
          out << (v.get<bool>() ? "PASS " : "FAIL ") << k << '\n';
        } else {
          out << k << " " << v.dump() << '\n';
        }
      }
    }
    render_provenance(out, r);
    return;
  }
  if (kind == "verify") {
    for (const auto& s : p["suites"]) {
      out << (s["passed"].get<bool>() ? "PASS" : "FAIL") << " suite "
          << str(s["name"]) << " at level " << r["level"].get<int>() << '\n';
      for (const auto& c : s["checks"]) {
        out << "  " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " ["
            << str(c["source"]) << "] " << str(c["name"]) << ": "
            << str(c["detail"]) << '\n';
      }
    }
    render_provenance(out, r);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_csv(std::ostream& out, const json& r) {
  const std::string kind = r["kind"];
  const json& p = r["payload"];
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k > 0) out << ',';
      out << csv_field(cells[k]);
    }
    out << '\n';
  };
  if (kind == "table") {
    for (const auto& row : table_grid(p)) line(row);
    return;
  }
  if (kind == "subloops") {
    line({"size", "type", "subloop", "witness", "class", "signature", "generators"});
    for (const auto& row : p["subloops"]) {
      std::string cls, sig, gens;
      if (row.contains("classification")) {
        const json& c = row["classification"];
        cls = str(c["class"]);
        sig = signature_text(c["signature"]);
        gens = str(c["witness"][0]) + " " + str(c["witness"][1]) + " " +
               str(c["witness"][2]);
      }
      line({std::to_string(row["size"].get<std::size_t>()), row.value("type", ""),
            str(row["subloop"]), row.value("witness", ""), cls, sig, gens});
    }
    return;
  }
  if (kind == "classify") {
    line({"subloop", "class", "signature", "witness"});
    for (const auto& rec : p["records"]) {
      line({str(rec["subloop"]), str(rec["class"]), signature_text(rec["signature"]),
            str(rec["witness"][0]) + " " + str(rec["witness"][1]) + " " +
                str(rec["witness"][2])});
    }
    return;
  }
  throw UsageError("--format csv is not available for " + kind);
}

std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int k = 1; k < argc; ++k) {
    if (k > 1) out += ' ';
    out += argv[k];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Dickson loop toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n", o.level, "Doubling level n")->required();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  add_common(mul);
  mul->add_option("lhs", o.lhs)->required();
  mul->add_option("rhs", o.rhs)->required();

  auto* table = app.add_subcommand("table", "Multiplication table");
  add_common(table);
  table->add_option("--subloop", o.subloop, "Comma-separated generators");
  table->add_flag("--symbolic", o.symbolic, "Symbolic table of <x,y,z>");

  auto* subloops = app.add_subcommand("subloops", "Enumerate subloops");
  add_common(subloops);
  subloops->add_flag("--index2", o.index2, "Only subloops of index 2");
  subloops->add_flag("--figure1", o.figure1, "Membership matrix of index-2 subloops");

  auto* classify = app.add_subcommand("classify", "Classify 16-element subloops");
  add_common(classify);
  classify->add_option("--subloop", o.subloop, "Comma-separated generators");

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  add_common(aut);
  aut->add_flag("--orders-only", o.orders_only, "Print only the group order");
  aut->add_flag("--verify-theorem", o.verify_theorem, "Check the structure theorem");
  aut->add_flag("--brute-force", o.brute_force,
                "With --verify-theorem, also search independently");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  verify->add_option("--suite", o.suite, "core|oracle|lemmas|hamiltonian|norton|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string command = command_echo(argc, argv);
  json r;
  try {
    if (*mul) r = cmd_mul(o, command);
    else if (*table) r = cmd_table(o, command);
    else if (*subloops) r = cmd_subloops(o, command);
    else if (*classify) r = cmd_classify(o, command);
    else if (*aut) r = cmd_aut(o, command);
    else r = cmd_verify(o, command);

    std::ostringstream out;
    if (o.format == "json") {
      out << r.dump(2) << '\n';
    } else if (o.format == "csv") {
      render_csv(out, r);
    } else {
      render_text(out, r);
    }
    std::cout << out.str();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return r.value("passed", true) ? 0 : 1;
}
