// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "comlie/error.hpp"
#include "comlie/serialize.hpp"

namespace comlie::cli {
namespace {

struct Config {
  std::string algebra;
  std::string module = "trivial";
  std::string flavor = "comm";
  std::size_t max_degree = 4;
  std::size_t degree_cap = 8;
  unsigned field_degree = 0;
  std::size_t cap = 0;
  std::string out;
  std::string format = "text";
  std::string matching;
  std::string dir;
};

using Table = std::vector<std::vector<std::string>>;

struct Report {
  json doc;
  Table table;
  int status = 0;
};

struct Source {
  Algebra algebra;
  std::string builder;  // empty for files
  std::size_t param = 0;
};

// Codes that mean "the input is not a valid object" rather than "the computation failed".
bool is_validation_code(const std::string& code) {
  static const std::vector<std::string> codes{"jacobi", "module-axiom", "not-cocycle", "invalid-matching",
                                              "not-a-complex"};
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

std::string render(const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

template <class T>
std::string str(const T& v) {
  return std::to_string(v);
}
std::string str(bool v) { return v ? "yes" : "no"; }

std::size_t parse_param(const std::string& text, const std::string& builder) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error("parse", "builder " + builder + " expects a non-negative integer parameter, got '" + text + "'");
  if (text.size() > 6) throw Error("parameter-range", "parameter " + text + " is too large");
  return std::stoul(text);
}

Source load_algebra(const std::string& text) {
  const auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::replace(head.begin(), head.end(), '_', '-');
  const std::optional<std::string> arg =
      colon == std::string::npos ? std::nullopt : std::optional<std::string>(text.substr(colon + 1));

  const auto need = [&]() -> std::size_t {
    if (!arg) throw Error("parse", "builder " + head + " needs a parameter, e.g. " + head + ":2");
    return parse_param(*arg, head);
  };
  if (head == "dim2") {
    if (arg) throw Error("parameter-range", "dim2 takes no parameter");
    return {dim2(), head, 0};
  }
  if (head == "abelian") {
    const std::size_t d = need();
    return {abelian(d), head, d};
  }
  if (head == "heisenberg") {
    const std::size_t l = need();
    return {heisenberg(l), head, l};
  }
  if (head == "zassenhaus-e") {
    const std::size_t n = need();
    return {zassenhaus_e(static_cast<unsigned>(n)), head, n};
  }
  if (head == "zassenhaus-f") {
    const std::size_t n = need();
    return {zassenhaus_f(static_cast<unsigned>(n)), head, n};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) return {import_algebra(text), "", 0};
  throw Error("unknown-builder",
              "'" + text + "' is neither a builder (abelian:d, dim2, heisenberg:l, zassenhaus-e:n, "
                           "zassenhaus-f:n) nor a readable file");
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error("parse", path + ": " + e.what());
  }
}

Module load_module(const Algebra& a, const std::string& choice) {
  if (choice == "trivial") return trivial_module(a);
  if (choice == "adjoint") return adjoint_module(a);
  if (choice == "dual") return dual_module(a);
  return module_from_json(a, parse_json_file(choice));
}

/// The algebra and module a command works on, after --field-degree.
struct Input {
  Source source;
  Module module;
};

Input load_input(const Config& cfg) {
  Source src = load_algebra(cfg.algebra);
  Module m = load_module(src.algebra, cfg.module);
  if (cfg.field_degree != 0) {
    m = change_field(m, cfg.field_degree);
    src.algebra = m.algebra();
  }
  return {std::move(src), std::move(m)};
}

json header(const std::string& command, const Config& cfg, const Input& in) {
  return json{{"command", command},
              {"algebra", cfg.algebra},
              {"module", in.module.kind()},
              {"field", to_json(in.source.algebra.field())},
              {"dim", in.source.algebra.dim()}};
}

void require_trivial(const Input& in, const std::string& command) {
  if (!in.module.is_trivial() || in.module.dim() != 1)
    throw Error("parameter-range", command + " works with trivial one-dimensional coefficients only");
}

Report cmd_check(const Config& cfg) {
  const Input in = load_input(cfg);
  const Algebra& a = in.source.algebra;
  const AxiomReport ax = check_axioms(a);
  json violations = json::array();
  for (const auto& v : ax.violations)
    violations.push_back("(" + a.name(v.i) + "," + a.name(v.j) + "," + a.name(v.k) + ")");
  Report r;
  r.doc = header("check", cfg, in);
  r.doc["jacobi"] = {{"valid", ax.valid()}, {"violations", violations}};
  r.doc["is_lie"] = is_lie(a);
  std::size_t sq_dim = 0;
  if (ax.valid()) {
    const Subspace sq = square_ideal(a);
    sq_dim = sq.dim();
    json basis = json::array();
    for (const Vec& v : sq.basis()) {
      json row = json::array();
      for (Elem e : v) row.push_back(elem_to_hex(e));
      basis.push_back(std::move(row));
    }
    r.doc["square_ideal"] = {{"dim", sq_dim}, {"basis", std::move(basis)}};
  }
  const bool module_ok = check_module_axioms(a, in.module.dim(), in.module.actions()).empty();
  r.doc["module_axioms"] = module_ok;
  r.status = ax.valid() && module_ok ? 0 : 2;
  r.table = {{"property", "value"},
             {"dim", str(a.dim())},
             {"jacobi", ax.valid() ? "ok" : "FAIL (" + str(ax.violations.size()) + " triples)"},
             {"is_lie", str(is_lie(a))},
             {"square_ideal_dim", ax.valid() ? str(sq_dim) : "-"},
             {"module_axioms", module_ok ? "ok" : "FAIL"}};
  return r;
}

Report cmd_cohomology(const Config& cfg) {
  const Input in = load_input(cfg);
  const Flavor fl = parse_flavor(cfg.flavor);
  Report r;
  r.doc = header("cohomology", cfg, in);
  r.doc["flavor"] = to_string(fl);
  json degrees = json::array();
  r.table = {{"n", "dimZ", "dimB", "dimH"}};
  for (std::size_t n = 0; n <= cfg.max_degree; ++n) {
    const CohomologyResult h = cohomology(in.module, n, fl);
    degrees.push_back(to_json(h));
    r.table.push_back({str(n), str(h.dim_z()), str(h.dim_b()), str(h.dim_h())});
  }
  r.doc["degrees"] = std::move(degrees);
  return r;
}

Report cmd_cocycles2(const Config& cfg) {
  const Input in = load_input(cfg);
  const Algebra& a = in.source.algebra;
  const CohomologyResult sym = cohomology(in.module, 2);
  Report r;
  r.doc = header("cocycles2", cfg, in);
  r.doc["dimZ"] = sym.dim_z();
  r.doc["dimB"] = sym.dim_b();
  r.doc["dimH"] = sym.dim_h();
  r.doc["representatives"] = to_json(sym)["representatives"];
  r.table = {{"flavor", "dimZ", "dimB", "dimH"}, {"comm", str(sym.dim_z()), str(sym.dim_b()), str(sym.dim_h())}};
  if (is_lie(a)) {
    const CohomologyResult alt = cohomology(in.module, 2, Flavor::alternating);
    r.doc["alternating"] = {{"dimZ", alt.dim_z()}, {"dimB", alt.dim_b()}, {"dimH", alt.dim_h()}};
    r.doc["lie_to_comm"] = to_json(comparison_lie_to_comm(in.module, 2));
    r.table.push_back({"alt", str(alt.dim_z()), str(alt.dim_b()), str(alt.dim_h())});
  } else {
    r.doc["alternating"] = nullptr;
  }
  if (in.source.builder == "zassenhaus-e" && in.module.kind() == "trivial" && cfg.field_degree == 0) {
    const GradedFamilyReport g = graded_family_check(static_cast<unsigned>(in.source.param));
    r.doc["graded_family"] = to_json(g);
    r.table.push_back({"graded family",
                       "cocycles " + str(std::count(g.cocycle.begin(), g.cocycle.end(), true)) + "/" +
                           str(g.members.size()),
                       "", "span " + str(g.span_in_h2) + "/" + str(g.h2)});
  }
  return r;
}

Report cmd_cupring(const Config& cfg) {
  const Input in = load_input(cfg);
  require_trivial(in, "cupring");
  const RingTable t(in.source.algebra, cfg.max_degree);
  Report r;
  r.doc = header("cupring", cfg, in);
  r.doc["ring"] = to_json(t);
  r.table = {{"lhs", "rhs", "product"}};
  for (const auto& p : r.doc["ring"]["products"]) {
    std::string result;
    for (const auto& [label, coeff] : p["result"].items()) {
      if (!result.empty()) result += " + ";
      result += (coeff.get<std::string>() == "1" ? "" : coeff.get<std::string>() + "*") + label;
    }
    r.table.push_back({p["lhs"].get<std::string>(), p["rhs"].get<std::string>(), result.empty() ? "0" : result});
  }
  return r;
}

Report cmd_morse(const Config& cfg) {
  const Input in = load_input(cfg);
  const ComplexGraph g = build_graph(in.module, cfg.max_degree);
  Matching m;
  std::string source = "empty";
  if (!cfg.matching.empty()) {
    m = matching_from_json(g, parse_json_file(cfg.matching));
    source = cfg.matching;
  } else if (in.source.builder == "heisenberg" && in.module.kind() == "trivial") {
    m = heisenberg_matching(g, in.source.param);
    source = "heisenberg";
  }
  Report r;
  r.doc = header("morse", cfg, in);
  r.doc["matching"] = {{"source", source}, {"edges", m.size()}};
  const MatchingReport check = validate_matching(g, m);
  r.doc["validation"] = to_json(check, g);
  if (!check.valid()) {
    r.status = 2;
    r.table = {{"matching", "INVALID"}};
    return r;
  }
  const MorseComplex mc = morse_complex(g, m);
  const auto reduced = mc.cohomology_dims();
  json degrees = json::array();
  bool agree = true;
  r.table = {{"n", "critical", "reduced_d", "dimH_reduced", "dimH_direct"}};
  for (std::size_t n = 0; n < reduced.size(); ++n) {
    const std::size_t direct = cohomology(in.module, n).dim_h();
    agree = agree && direct == reduced[n];
    const bool zero = mc.differentials[n].is_zero();
    json d{{"degree", n},
           {"critical", mc.critical[n].size()},
           {"reduced_zero", zero},
           {"dimH_reduced", reduced[n]},
           {"dimH_direct", direct}};
    if (source == "heisenberg") {
      const auto [c0, c1] = heisenberg_closed_form(in.source.param, n);
      d["closed_form"] = {c0.size(), c1.size()};
    }
    degrees.push_back(std::move(d));
    r.table.push_back({str(n), str(mc.critical[n].size()), zero ? "0" : "nonzero", str(reduced[n]), str(direct)});
  }
  r.doc["degrees"] = std::move(degrees);
  r.doc["boundary_affected"] = mc.boundary_affected;
  r.doc["cross_check"] = agree ? "PASS" : "FAIL";
  r.table.push_back({"cross-check", agree ? "PASS" : "FAIL"});
  r.status = agree ? 0 : 2;
  return r;
}

Report cmd_sequence(const Config& cfg) {
  const Input in = load_input(cfg);
  const ExactSequenceReport s = exact_sequence_check(in.source.algebra);
  Report r;
  r.doc = header("sequence", cfg, in);
  r.doc["sequence"] = to_json(s);
  r.status = s.exact() ? 0 : 2;
  r.table = {{"node", "dim", "rank out"},
             {"H2(L,K)", str(s.h2), str(s.rank1)},
             {"H1(L,L*)", str(s.h1_dual), str(s.rank2)},
             {"B_alt(L)", str(s.b_alt), str(s.rank3)},
             {"H3(L,K)", str(s.h3), "-"},
             {"exact", s.exact() ? "yes" : "NO"}};
  return r;
}

Report cmd_compare(const Config& cfg) {
  const Input in = load_input(cfg);
  const bool lie = is_lie(in.source.algebra);
  Report r;
  r.doc = header("compare", cfg, in);
  r.doc["is_lie"] = lie;
  json degrees = json::array();
  r.table = {{"n", "alt", "comm", "leibniz", "alt->comm", "comm->leibniz"}};
  const auto describe = [](const InducedMap& m) {
    return "rank " + str(m.rank) + (m.isomorphism() ? " iso" : m.injective() ? " inj" : "");
  };
  for (std::size_t n = 0; n <= cfg.max_degree; ++n) {
    const InducedMap c2l = comparison_comm_to_leibniz(in.module, n);
    json d{{"degree", n}, {"comm", c2l.source_dim}, {"leibniz", c2l.target_dim}, {"comm_to_leibniz", to_json(c2l)}};
    std::string alt = "-", l2c = "-";
    if (lie) {
      const InducedMap m = comparison_lie_to_comm(in.module, n);
      d["alt"] = m.source_dim;
      d["lie_to_comm"] = to_json(m);
      alt = str(m.source_dim);
      l2c = describe(m);
    }
    degrees.push_back(std::move(d));
    r.table.push_back({str(n), alt, str(c2l.source_dim), str(c2l.target_dim), l2c, describe(c2l)});
  }
  r.doc["degrees"] = std::move(degrees);
  return r;
}

Report cmd_basechange(const Config& cfg) {
  Config base = cfg;
  base.field_degree = 0;
  const Input in = load_input(base);
  const unsigned k = cfg.field_degree == 0 ? 2 : cfg.field_degree;
  const Module ext = base_change(in.module, k);
  Report r;
  r.doc = header("basechange", base, in);
  r.doc["target_field"] = to_json(ext.algebra().field());
  json degrees = json::array();
  bool equal = true;
  r.table = {{"n", "dimH base", "dimH ext", "dimZ base", "dimZ ext", "dimB base", "dimB ext"}};
  for (std::size_t n = 0; n <= cfg.max_degree; ++n) {
    const CohomologyResult h = cohomology(in.module, n), he = cohomology(ext, n);
    const bool same = h.dim_z() == he.dim_z() && h.dim_b() == he.dim_b() && h.dim_h() == he.dim_h();
    equal = equal && same;
    degrees.push_back(json{{"degree", n},
                           {"base", {{"dimZ", h.dim_z()}, {"dimB", h.dim_b()}, {"dimH", h.dim_h()}}},
                           {"extended", {{"dimZ", he.dim_z()}, {"dimB", he.dim_b()}, {"dimH", he.dim_h()}}},
                           {"equal", same}});
    r.table.push_back({str(n), str(h.dim_h()), str(he.dim_h()), str(h.dim_z()), str(he.dim_z()), str(h.dim_b()),
                       str(he.dim_b())});
  }
  r.doc["degrees"] = std::move(degrees);
  r.doc["invariant"] = equal;
  r.status = equal ? 0 : 2;
  return r;
}

Report cmd_scan(const Config& cfg) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(cfg.dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) throw Error("io", "cannot list " + cfg.dir + ": " + ec.message());
  std::sort(files.begin(), files.end());

  Report r;
  r.doc = json{{"command", "scan"}, {"dir", cfg.dir}};
  json rows = json::array();
  r.table = {{"file", "dim", "lie", "H1 comm", "H2 comm", "H1 alt", "H2 alt", "der", "outer", "B_alt"}};
  const auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      const Fingerprint fp = fingerprint(import_algebra(path));
      json row = to_json(fp);
      row["file"] = name;
      rows.push_back(std::move(row));
      r.table.push_back({name, str(fp.dim), str(fp.lie), str(fp.h1_comm), str(fp.h2_comm), opt(fp.h1_alt),
                         opt(fp.h2_alt), str(fp.derivations), str(fp.outer_derivations), str(fp.b_alt)});
    } catch (const Error& e) {
      rows.push_back(json{{"file", name}, {"error", e.code()}, {"message", e.what()}});
      r.table.push_back({name, "error: " + e.code()});
      r.status = std::max(r.status, is_validation_code(e.code()) ? 2 : 1);
    }
  }
  r.doc["algebras"] = std::move(rows);
  return r;
}

/// Restores the library-wide entry cap when a run ends.
class CapGuard {
 public:
  explicit CapGuard(std::size_t cap) : saved_(entry_cap()) {
    if (cap != 0) set_entry_cap(cap);
  }
  ~CapGuard() { set_entry_cap(saved_); }
  CapGuard(const CapGuard&) = delete;
  CapGuard& operator=(const CapGuard&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Cohomology of commutative Lie algebras in characteristic 2", "comlie"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> commands{
      {"check", "Jacobi identity, module axioms, square ideal"},
      {"cohomology", "Z, B, H and representatives in degrees 0..N"},
      {"cocycles2", "Degree-2 cocycles, coboundaries and classes"},
      {"cupring", "Cup products of cohomology classes up to degree N"},
      {"morse", "Morse reduction of the symmetric complex with a cross-check"},
      {"sequence", "The four-term sequence H2(L,K) -> H1(L,L*) -> B_alt(L) -> H3(L,K)"},
      {"compare", "Alternating, symmetric and Leibniz dimensions with comparison ranks"},
      {"basechange", "Dimensions before and after extending the field"},
      {"scan", "Invariant table for a directory of algebra files"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    if (name == "scan") {
      sub->add_option("--dir", cfg.dir, "Directory of algebra JSON files")->required();
    } else {
      sub->add_option("--algebra", cfg.algebra, "builder[:param] or path to an algebra JSON file")->required();
      sub->add_option("--module", cfg.module, "trivial, adjoint, dual or path to a module JSON file");
      sub->add_option("--field-degree", cfg.field_degree,
                      name == "basechange" ? "Target field GF(2^k) (default 2)" : "Compute over GF(2^k)");
    }
    sub->add_option("--flavor", cfg.flavor, "comm, alt or leibniz")
        ->check(CLI::IsMember({"comm", "alt", "leibniz", "symmetric", "alternating", "tensor"}));
    sub->add_option("--max-degree", cfg.max_degree, "Highest degree N");
    sub->add_option("--degree-cap", cfg.degree_cap, "Refuse --max-degree above this");
    sub->add_option("--cap", cfg.cap, "Dense matrix entry cap");
    sub->add_option("--out", cfg.out, "Write the report here (atomically) instead of stdout");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (name == "morse") sub->add_option("--matching", cfg.matching, "Matching JSON: [[lower label, upper label], ...]");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: usage: " << e.what() << "\n";
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.max_degree > cfg.degree_cap)
      throw Error("parameter-range", "--max-degree " + std::to_string(cfg.max_degree) + " exceeds --degree-cap " +
                                         std::to_string(cfg.degree_cap));
    const CapGuard guard(cfg.cap);
    Report r;
    if (command == "check") r = cmd_check(cfg);
    else if (command == "cohomology") r = cmd_cohomology(cfg);
    else if (command == "cocycles2") r = cmd_cocycles2(cfg);
    else if (command == "cupring") r = cmd_cupring(cfg);
    else if (command == "morse") r = cmd_morse(cfg);
    else if (command == "sequence") r = cmd_sequence(cfg);
    else if (command == "compare") r = cmd_compare(cfg);
    else if (command == "basechange") r = cmd_basechange(cfg);
    else r = cmd_scan(cfg);

    const std::string text = cfg.format == "json" ? r.doc.dump(2) + "\n" : render(r.table);
    if (cfg.out.empty()) {
      out << text;
    } else {
      write_file_atomic(cfg.out, text);
    }
    return r.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_code(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace comlie::cli
