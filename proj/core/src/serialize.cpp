// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#include "comlie/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "comlie/error.hpp"

namespace comlie {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error("parse", what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    parse_error(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Elem e : m.row(r)) row.push_back(elem_to_hex(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(Field f, std::size_t n, const json& j) {
  if (!j.is_array() || j.size() != n) parse_error("action matrix must have " + std::to_string(n) + " rows");
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) parse_error("action matrix row has wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      if (!j[r][c].is_string()) parse_error("matrix entries are hex strings");
      m(r, c) = elem_from_hex(f, j[r][c].get<std::string>());
    }
  }
  return m;
}

}  // namespace

json to_json(Field f) {
  return json{{"characteristic", 2}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
  if (j.contains("characteristic") && j.at("characteristic") != 2) {
    throw Error("parameter-range", "only characteristic 2 is supported");
  }
  const auto degree = static_cast<unsigned>(as_index(member(j, "degree"), "field degree"));
  std::optional<std::uint32_t> modulus;
  if (j.contains("modulus")) modulus = static_cast<std::uint32_t>(as_index(j.at("modulus"), "modulus"));
  return make_field(degree, modulus);
}

json to_json(const Algebra& a) {
  json brackets = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (a.bracket(i, j).empty()) continue;
      json value = json::object();
      for (const Term& t : a.bracket(i, j)) value[std::to_string(t.index)] = elem_to_hex(t.coeff);
      brackets.push_back(json{{"i", i}, {"j", j}, {"value", std::move(value)}});
    }
  }
  return json{{"field", to_json(a.field())},
              {"dim", a.dim()},
              {"basis", a.names()},
              {"brackets", std::move(brackets)}};
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) parse_error("algebra document must be a JSON object");
  const Field f = j.contains("field") ? field_from_json(j.at("field")) : gf2();
  const std::size_t d = as_index(member(j, "dim"), "dim");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    const json& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != d) parse_error("basis must list dim names");
    for (const json& n : basis) {
      if (!n.is_string()) parse_error("basis names must be strings");
      names.push_back(n.get<std::string>());
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
      parse_error("basis names must be distinct");
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  Algebra a(f, std::move(names));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const json& brackets = j.contains("brackets") ? j.at("brackets") : json::array();
  if (!brackets.is_array()) parse_error("brackets must be an array");
  for (const json& b : brackets) {
    std::size_t i = as_index(member(b, "i"), "i");
    std::size_t k = as_index(member(b, "j"), "j");
    if (i >= d || k >= d) parse_error("bracket index out of range");
    if (i > k) std::swap(i, k);
    if (!seen.insert({i, k}).second) {
      throw Error("duplicate-pair", "pair {" + std::to_string(i) + "," + std::to_string(k) +
                                        "} appears more than once");
    }
    const json& value = member(b, "value");
    if (!value.is_object()) parse_error("bracket value must be an object");
    SparseVec v;
    for (const auto& [key, coeff] : value.items()) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size()) parse_error("bad basis index '" + key + "'");
      } catch (const std::logic_error&) {
        parse_error("bad basis index '" + key + "'");
      }
      if (idx >= d) parse_error("bracket value index out of range");
      if (!coeff.is_string()) parse_error("bracket coefficients are hex strings");
      v.push_back({static_cast<std::uint32_t>(idx), elem_from_hex(f, coeff.get<std::string>())});
    }
    a.set_bracket(i, k, std::move(v));
  }
  const AxiomReport rep = check_axioms(a);
  if (!rep.valid()) {
    const JacobiViolation& w = rep.violations.front();
    throw Error("jacobi", "Jacobi identity fails on (" + a.name(w.i) + "," + a.name(w.j) + "," +
                              a.name(w.k) + "); " + std::to_string(rep.violations.size()) +
                              " violating triple(s)");
  }
  return a;
}

Algebra import_algebra(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
  return algebra_from_json(j);
}

json to_json(const Module& m) {
  json actions = json::array();
  for (const Matrix& a : m.actions()) actions.push_back(matrix_to_json(a));
  return json{{"dim", m.dim()}, {"kind", m.kind()}, {"actions", std::move(actions)}};
}

Module module_from_json(const Algebra& a, const json& j) {
  const std::size_t m = as_index(member(j, "dim"), "dim");
  const json& actions = member(j, "actions");
  if (!actions.is_array() || actions.size() != a.dim()) {
    parse_error("module needs one action matrix per basis element");
  }
  std::vector<Matrix> mats;
  for (const json& x : actions) mats.push_back(matrix_from_json(a.field(), m, x));
  return Module(a, m, std::move(mats), j.value("kind", "custom"));
}

json to_json(const Cochain& c) {
  const CochainSpace& s = c.space();
  const std::size_t m = s.module().dim();
  json out = json::array();
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (c.coeffs()[i] == 0) continue;
    json args = json::array();
    for (Arg a : s.tuple(i / m)) args.push_back(s.algebra().name(a));
    out.push_back(json{{"args", std::move(args)}, {"module", i % m}, {"value", elem_to_hex(c.coeffs()[i])}});
  }
  return out;
}

json to_json(const CohomologyResult& r) {
  json reps = json::array();
  for (const Cochain& c : r.representatives) reps.push_back(to_json(c));
  return json{{"degree", r.degree},     {"flavor", to_string(r.flavor)}, {"dimZ", r.dim_z()},
              {"dimB", r.dim_b()},      {"dimH", r.dim_h()},             {"representatives", std::move(reps)}};
}

json to_json(const InducedMap& m) {
  return json{{"source_dim", m.source_dim}, {"target_dim", m.target_dim}, {"rank", m.rank},
              {"kernel_dim", m.kernel_dim()}, {"well_defined", m.well_defined},
              {"injective", m.injective()},   {"isomorphism", m.isomorphism()}};
}

json to_json(const ExactSequenceReport& r) {
  return json{{"dims", {{"H2", r.h2}, {"H1_dual", r.h1_dual}, {"B_alt", r.b_alt}, {"H3", r.h3}}},
              {"ranks", {r.rank1, r.rank2, r.rank3}},
              {"well_defined", {r.map1_well_defined, r.map2_well_defined, r.map3_well_defined}},
              {"injective_left", r.injective_left},
              {"exact_at_H1_dual", r.exact_at_h1},
              {"exact_at_B_alt", r.exact_at_balt},
              {"exact", r.exact()},
              {"notes", r.notes}};
}

json to_json(const Fingerprint& f) {
  json j{{"dim", f.dim},          {"square_dim", f.square_dim}, {"lie", f.lie},
         {"H1_comm", f.h1_comm},  {"H2_comm", f.h2_comm},       {"H1_alt", nullptr},
         {"H2_alt", nullptr},     {"derivations", f.derivations}, {"outer_derivations", f.outer_derivations},
         {"B_alt", f.b_alt}};
  if (f.h1_alt) j["H1_alt"] = *f.h1_alt;
  if (f.h2_alt) j["H2_alt"] = *f.h2_alt;
  return j;
}

json to_json(const GradedFamilyReport& r) {
  json members = json::array();
  for (std::size_t k = 0; k < r.members.size(); ++k) {
    members.push_back(json{{"k", k}, {"cochain", to_json(r.members[k])}, {"cocycle", bool(r.cocycle[k])}});
  }
  return json{{"n", r.n}, {"dimH2", r.h2}, {"span_in_H2", r.span_in_h2}, {"spans_H2", r.spans_h2()},
              {"members", std::move(members)}};
}

json to_json(const RingTable& t) {
  json degrees = json::array();
  for (std::size_t n = 0; n <= t.max_degree(); ++n) {
    json labels = json::array();
    for (std::size_t i = 0; i < t.group(n).dim_h(); ++i) labels.push_back(t.label(n, i));
    degrees.push_back(json{{"degree", n}, {"labels", std::move(labels)}});
  }
  json products = json::array();
  for (std::size_t p = 0; p <= t.max_degree(); ++p) {
    for (std::size_t q = p; p + q <= t.max_degree(); ++q) {
      for (std::size_t i = 0; i < t.group(p).dim_h(); ++i) {
        for (std::size_t j = 0; j < t.group(q).dim_h(); ++j) {
          if (p == q && j < i) continue;
          json result = json::object();
          const Vec& v = t.product(p, i, q, j);
          for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k]) result[t.label(p + q, k)] = elem_to_hex(v[k]);
          }
          products.push_back(json{{"lhs", t.label(p, i)}, {"rhs", t.label(q, j)}, {"result", std::move(result)}});
        }
      }
    }
  }
  return json{{"max_degree", t.max_degree()}, {"degrees", std::move(degrees)}, {"products", std::move(products)}};
}

json matching_to_json(const ComplexGraph& g, const Matching& m) {
  json out = json::array();
  for (const MatchedEdge& e : m) {
    out.push_back(json::array({g.label(e.degree, e.lower), g.label(e.degree + 1, e.upper)}));
  }
  return out;
}

Matching matching_from_json(const ComplexGraph& g, const json& j) {
  std::unordered_map<std::string, Vertex> where;
  for (std::size_t n = 0; n <= g.top(); ++n) {
    for (std::size_t v = 0; v < g.vertex_count(n); ++v) where.emplace(g.label(n, v), Vertex{n, v});
  }
  if (!j.is_array()) parse_error("matching must be an array of label pairs");
  Matching out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      parse_error("matching entries are [lower, upper] label pairs");
    }
    const auto lo = where.find(e[0].get<std::string>());
    const auto hi = where.find(e[1].get<std::string>());
    if (lo == where.end() || hi == where.end()) parse_error("unknown vertex label in matching");
    if (hi->second.degree != lo->second.degree + 1) {
      throw Error("invalid-matching", "matched pair " + e.dump() + " does not raise the degree by one");
    }
    out.push_back({lo->second.degree, lo->second.index, hi->second.index});
  }
  return out;
}

json to_json(const MatchingReport& r, const ComplexGraph& g) {
  json missing = json::array();
  for (const MatchedEdge& e : r.missing_edges) missing.push_back(json::array({e.degree, e.lower, e.upper}));
  json shared = json::array();
  for (const Vertex& v : r.shared_vertices) shared.push_back(g.label(v.degree, v.index));
  json cycle = json::array();
  for (const Vertex& v : r.cycle) cycle.push_back(g.label(v.degree, v.index));
  return json{{"valid", r.valid()}, {"missing_edges", std::move(missing)},
              {"shared_vertices", std::move(shared)}, {"cycle", std::move(cycle)},
              {"touches_boundary", r.touches_boundary}};
}

json to_json(const MorseComplex& m) {
  json degrees = json::array();
  for (std::size_t n = 0; n < m.critical.size(); ++n) {
    json d{{"degree", n}, {"critical", m.critical[n].size()}};
    if (n < m.differentials.size()) {
      d["reduced_matrix"] = {m.differentials[n].rows(), m.differentials[n].cols()};
      d["reduced_zero"] = m.differentials[n].is_zero();
    }
    degrees.push_back(std::move(d));
  }
  return json{{"degrees", std::move(degrees)}, {"boundary_affected", m.boundary_affected}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error("io", "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("io", "cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

}  // namespace comlie
