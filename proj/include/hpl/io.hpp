#pragma once

// JSON encoding of systems, paths, certificates, statistics, galleries,
// parameter patterns and crystals. Rationals are "p/q" strings; generator
// indices are 1-based.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hpl/galleries.hpp"
#include "hpl/model.hpp"
#include "json.hpp"

namespace hpl::io {

using json = nlohmann::json;

namespace detail {

inline std::string where(const std::string& field) { return field.empty() ? "" : " (field \"" + field + "\")"; }

inline const json& need(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput("missing field \"" + std::string(key) + "\"" + where(ctx));
  return j.at(key);
}

}  // namespace detail

inline json to_json(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const json& j, const std::string& field = "") {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      throw InvalidInput(e.what() + detail::where(field));
    }
  }
  throw InvalidInput("expected a rational string" + detail::where(field));
}

inline json to_json(const VectorV& v) {
  json a = json::array();
  for (const auto& q : v.coords()) a.push_back(q.get_str());
  return a;
}

inline VectorV vector_from_json(const json& j, const std::string& field = "") {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals" + detail::where(field));
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x, field));
  return VectorV(std::move(c));
}

inline json to_json(const WeylElement& w) {
  json a = json::array();
  for (int i : w.word()) a.push_back(i + 1);
  return a;
}

inline Word word_from_json(const RootSystem& rs, const json& j, const std::string& field = "") {
  if (!j.is_array()) throw InvalidInput("expected a word (array of indices)" + detail::where(field));
  Word w;
  for (const auto& x : j) {
    long i;
    if (x.is_number_integer()) {
      i = x.get<long>();
    } else if (x.is_string()) {
      try {
        i = std::stol(x.get<std::string>());
      } catch (...) {
        throw InvalidInput("bad generator index" + detail::where(field));
      }
    } else {
      throw InvalidInput("bad generator index" + detail::where(field));
    }
    if (i < 1 || std::size_t(i) > rs.rank())
      throw InvalidInput("generator index " + std::to_string(i) + " out of range" + detail::where(field));
    w.push_back(int(i - 1));
  }
  return w;
}

inline json to_json(const RealRoot& b) { return json{{"coeffs", b.coeffs}, {"coroot", b.coroot}}; }

inline RealRoot root_from_json(const json& j) {
  RealRoot b;
  b.coeffs = detail::need(j, "coeffs", "root").get<std::vector<std::int64_t>>();
  b.coroot = detail::need(j, "coroot", "root").get<std::vector<std::int64_t>>();
  return b;
}

// ---- systems --------------------------------------------------------------

inline RootSystem system_from_json(const json& j) {
  const auto& cm = detail::need(j, "cartan_matrix", "");
  IntMatrix a;
  try {
    a = cm.get<IntMatrix>();
  } catch (const json::exception&) {
    throw InvalidInput("\"cartan_matrix\" must be an array of integer arrays");
  }
  auto gcm = KacMoodyMatrix::validate(std::move(a));
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  if (j.contains("simple_roots") || j.contains("simple_coroots")) {
    IntMatrix roots, coroots;
    try {
      roots = detail::need(j, "simple_roots", "").get<IntMatrix>();
      coroots = detail::need(j, "simple_coroots", "").get<IntMatrix>();
    } catch (const json::exception&) {
      throw InvalidInput("\"simple_roots\" and \"simple_coroots\" must be integer arrays");
    }
    RootSystem rs(gcm, std::move(roots), std::move(coroots), std::move(names));
    if (j.contains("rank_x") && j.at("rank_x").get<std::size_t>() != rs.dim())
      throw InvalidInput("\"rank_x\" does not match the length of the simple roots");
    return rs;
  }
  if (j.contains("rank_x")) {
    auto rs = RootSystem::from_gcm(gcm, std::move(names));
    if (j.at("rank_x").get<std::size_t>() != rs.dim())
      throw InvalidInput("\"rank_x\" = " + j.at("rank_x").dump() + " needs explicit lattices; the default realization has rank " +
                         std::to_string(rs.dim()));
    return rs;
  }
  return RootSystem::from_gcm(gcm, std::move(names));
}

inline json to_json(const RootSystem& rs) {
  json sym = json::array();
  for (const auto& d : rs.symmetrizer()) sym.push_back(d.get_str());
  json rho = json::array();
  for (const auto& q : rs.rho()) rho.push_back(q.get_str());
  json j{{"cartan_matrix", rs.gcm().entries()},
         {"names", rs.names()},
         {"simple_roots", rs.simple_roots()},
         {"simple_coroots", rs.simple_coroots()},
         {"rank_x", rs.dim()},
         {"type", to_string(rs.type())},
         {"symmetrizer", sym},
         {"rho", rho}};
  if (rs.type() == GcmType::Affine) j["null_root"] = rs.null_root();
  return j;
}

// ---- paths ----------------------------------------------------------------

inline json to_json(const LambdaPath& p) {
  json dirs = json::array();
  for (const auto& d : p.directions()) dirs.push_back(to_json(d.element));
  json bps = json::array();
  for (const auto& a : p.breakpoints()) bps.push_back(a.get_str());
  return json{{"lambda", to_json(p.shape())}, {"start", to_json(p.start())}, {"directions", dirs}, {"breakpoints", bps}};
}

inline LambdaPath path_from_json(const RootSystem& rs, const json& j) {
  auto lambda = vector_from_json(detail::need(j, "lambda", ""), "lambda");
  VectorV start = j.contains("start") ? vector_from_json(j.at("start"), "start") : rs.zero();
  const auto& dj = detail::need(j, "directions", "");
  if (!dj.is_array()) throw InvalidInput("\"directions\" must be an array of words");
  std::vector<WeylElement> dirs;
  for (std::size_t k = 0; k < dj.size(); ++k) {
    auto w = word_from_json(rs, dj[k], "directions[" + std::to_string(k) + "]");
    dirs.push_back(rs.normalize(std::span<const int>(w)));
  }
  const auto& bj = detail::need(j, "breakpoints", "");
  if (!bj.is_array()) throw InvalidInput("\"breakpoints\" must be an array of rationals");
  std::vector<Rational> bps;
  for (std::size_t k = 0; k < bj.size(); ++k) bps.push_back(rational_from_json(bj[k], "breakpoints[" + std::to_string(k) + "]"));
  return LambdaPath::make(rs, lambda, start, dirs, bps);
}

// ---- certificates ---------------------------------------------------------

inline json to_json(const ChainCertificate& c) {
  json roots = json::array(), xis = json::array(), sigmas = json::array();
  for (const auto& b : c.roots) roots.push_back(to_json(b));
  for (const auto& x : c.xis) xis.push_back(to_json(x));
  for (const auto& s : c.sigmas) sigmas.push_back(to_json(s.element));
  json j{{"t", c.t.get_str()}, {"kind", to_string(c.kind)}, {"roots", roots}, {"xis", xis}, {"sigmas", sigmas}};
  j["lambda"] = c.sigmas.empty() ? json::array() : to_json(c.sigmas.front().lambda);
  return j;
}

inline ChainCertificate certificate_from_json(const RootSystem& rs, const json& j) {
  ChainCertificate c;
  c.t = rational_from_json(detail::need(j, "t", "certificate"), "t");
  auto kind = detail::need(j, "kind", "certificate").get<std::string>();
  if (kind != "hecke" && kind != "ls") throw InvalidInput("certificate kind must be \"hecke\" or \"ls\"");
  c.kind = kind == "hecke" ? ChainKind::Hecke : ChainKind::LS;
  VectorV lambda = vector_from_json(detail::need(j, "lambda", "certificate"), "lambda");
  for (const auto& b : detail::need(j, "roots", "certificate")) c.roots.push_back(root_from_json(b));
  for (const auto& x : detail::need(j, "xis", "certificate")) c.xis.push_back(vector_from_json(x, "xis"));
  for (const auto& s : detail::need(j, "sigmas", "certificate")) {
    auto w = word_from_json(rs, s, "sigmas");
    c.sigmas.push_back(CosetRep{rs.normalize(std::span<const int>(w)), lambda});
  }
  return c;
}

// ---- statistics -----------------------------------------------------------

inline json to_json(const PathStats& s) {
  json t = json::array();
  for (const auto& r : s.tallies)
    t.push_back(json{{"root", to_json(r.root)}, {"pos", r.pos}, {"neg", r.neg}, {"pos_rev", r.pos_rev}, {"neg_rev", r.neg_rev}});
  json j{{"ddim", s.ddim}, {"codim", s.codim}, {"tallies", t}};
  j["dim"] = s.dim ? json(*s.dim) : json(nullptr);
  return j;
}

inline PathStats stats_from_json(const json& j) {
  PathStats s;
  s.ddim = detail::need(j, "ddim", "stats").get<long>();
  s.codim = detail::need(j, "codim", "stats").get<long>();
  if (j.contains("dim") && !j.at("dim").is_null()) s.dim = j.at("dim").get<long>();
  for (const auto& t : detail::need(j, "tallies", "stats")) {
    RootTally r;
    r.root = root_from_json(t.at("root"));
    r.pos = t.at("pos").get<long>();
    r.neg = t.at("neg").get<long>();
    r.pos_rev = t.at("pos_rev").get<long>();
    r.neg_rev = t.at("neg_rev").get<long>();
    s.tallies.push_back(r);
  }
  return s;
}

// ---- galleries and patterns -----------------------------------------------

inline json to_json(const RootSystem& rs, const GalleryAtPoint& g) {
  json type = json::array(), chambers = json::array(), walls = json::array(), truth = json::array();
  for (int i : g.type) type.push_back(i + 1);
  for (const auto& d : g.chambers) chambers.push_back(to_json(d));
  for (const auto& w : g.walls) walls.push_back(to_json(w));
  for (bool b : g.true_walls) truth.push_back(b);
  return json{{"z", to_json(g.z)},          {"type", type},
              {"chambers", chambers},       {"folds", g.fold_positions()},
              {"true_walls", truth},        {"walls", walls},
              {"neg", neg_count(rs, g)}};
}

inline GalleryAtPoint gallery_from_json(const RootSystem& rs, const json& j) {
  auto z = vector_from_json(detail::need(j, "z", "gallery"), "z");
  auto type = word_from_json(rs, detail::need(j, "type", "gallery"), "type");
  std::vector<bool> folds(type.size(), false);
  for (const auto& f : detail::need(j, "folds", "gallery")) {
    long k = f.get<long>();
    if (k < 1 || std::size_t(k) > type.size()) throw InvalidInput("fold position out of range");
    folds[k - 1] = true;
  }
  return gallery_with_folds(rs, z, type, folds);
}

inline json to_json(const ParameterPattern& p) {
  json f = json::array(), g = json::array();
  for (auto x : p.factors) f.push_back(to_string(x));
  for (const auto& grp : p.groups) g.push_back(json{{"t", grp.t.get_str()}, {"n", grp.n}});
  return json{{"N", p.N}, {"factors", f}, {"groups", g}};
}

inline ParameterPattern pattern_from_json(const json& j) {
  ParameterPattern p;
  p.N = detail::need(j, "N", "pattern").get<long>();
  for (const auto& f : detail::need(j, "factors", "pattern")) {
    auto s = f.get<std::string>();
    if (s != "k" && s != "k*") throw InvalidInput("pattern factor must be \"k\" or \"k*\"");
    p.factors.push_back(s == "k" ? Factor::Kappa : Factor::KappaStar);
  }
  for (const auto& g : detail::need(j, "groups", "pattern"))
    p.groups.push_back(PatternGroup{rational_from_json(g.at("t"), "t"), g.at("n").get<long>()});
  return p;
}

// ---- crystals -------------------------------------------------------------

inline json to_json(const CrystalGraph& g) {
  json nodes = json::array(), edges = json::array();
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    json n = to_json(g.nodes[k]);
    n["depth"] = g.depth[k];
    n["end"] = to_json(g.nodes[k].end());
    nodes.push_back(n);
  }
  for (const auto& e : g.edges) edges.push_back(json{{"from", e.from}, {"to", e.to}, {"f", e.index + 1}});
  return json{{"lambda", to_json(g.lambda)}, {"depth_cap", g.depth_cap}, {"cap_hit", g.cap_hit}, {"nodes", nodes}, {"edges", edges}};
}

inline CrystalGraph crystal_from_json(const RootSystem& rs, const json& j) {
  CrystalGraph g;
  g.lambda = vector_from_json(detail::need(j, "lambda", "crystal"), "lambda");
  g.depth_cap = detail::need(j, "depth_cap", "crystal").get<std::size_t>();
  g.cap_hit = detail::need(j, "cap_hit", "crystal").get<bool>();
  for (const auto& n : detail::need(j, "nodes", "crystal")) {
    g.nodes.push_back(path_from_json(rs, n));
    g.depth.push_back(n.at("depth").get<std::size_t>());
  }
  for (const auto& e : detail::need(j, "edges", "crystal"))
    g.edges.push_back(CrystalEdge{e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(), e.at("f").get<std::size_t>() - 1});
  return g;
}

inline std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    os << "  n" << k << " [label=\"" << g.nodes[k].end().str() << "\"];\n";
  for (const auto& e : g.edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"f" << e.index + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

// ---- files ----------------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace hpl::io
