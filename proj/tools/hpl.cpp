// hpl: command-line front end for the path-model library.
//
// Exit status: 0 success, 1 a domain "no" (not Hecke, not LS, operator
// undefined, ...), 2 bad input or configuration.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hpl/hpl.hpp"

namespace {

using hpl::io::json;

struct Config {
  std::string system_file, type_name, path_file, format = "json";
  std::string lambda, mu, y0, y1, vector, op = "f";
  long h = 20;
  bool h_given = false;
  std::size_t depth_cap = 200;
  std::size_t step_cap = 10000;
  std::size_t index = 1;
};

struct DomainNo {
  json report;
  std::string text;
};

hpl::RootSystem load_system(const Config& c) {
  if (!c.system_file.empty() && !c.type_name.empty()) throw hpl::InvalidInput("give either --system or --type, not both");
  if (!c.type_name.empty()) {
    auto m = hpl::cartan::by_name(c.type_name);
    if (!m) throw hpl::InvalidInput("unknown built-in type \"" + c.type_name + "\"");
    return hpl::RootSystem::from_gcm(*m);
  }
  if (c.system_file.empty()) throw hpl::InvalidInput("--system or --type is required");
  return hpl::io::system_from_json(hpl::io::read_json_file(c.system_file));
}

hpl::LambdaPath load_path(const hpl::RootSystem& rs, const Config& c) {
  if (c.path_file.empty()) throw hpl::InvalidInput("--path is required");
  return hpl::io::path_from_json(rs, hpl::io::read_json_file(c.path_file));
}

hpl::VectorV vec(const hpl::RootSystem& rs, const std::string& s, const char* flag) {
  if (s.empty()) throw hpl::InvalidInput(std::string(flag) + " is required");
  auto v = hpl::parse_vector(s);
  if (v.dim() != rs.dim())
    throw hpl::InvalidInput(std::string(flag) + " needs " + std::to_string(rs.dim()) + " coordinates");
  return v;
}

std::string path_text(const hpl::LambdaPath& p) {
  std::ostringstream os;
  os << p.start();
  for (std::size_t j = 0; j < p.segments(); ++j)
    os << " -[" << p.directions()[j].element.str() << "]-> " << p.eval(p.breakpoints()[j + 1]) << " @"
       << p.breakpoints()[j + 1].get_str();
  return os.str();
}

std::string certificates_text(const std::vector<hpl::ChainCertificate>& cs) {
  std::ostringstream os;
  for (const auto& c : cs) {
    os << "  t=" << c.t.get_str() << " chain";
    if (c.roots.empty()) os << " (empty)";
    for (const auto& b : c.roots) os << " " << b.str();
    os << "\n";
  }
  return os.str();
}

json certificates_json(const std::vector<hpl::ChainCertificate>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(hpl::io::to_json(c));
  return a;
}

// Returns (report, text). Throws DomainNo for status 1.
std::pair<json, std::string> run(const std::string& cmd, const Config& c) {
  auto rs = load_system(c);
  std::ostringstream txt;
  if (cmd == "validate") {
    json r = hpl::io::to_json(rs);
    txt << "valid " << hpl::to_string(rs.type()) << " Kac-Moody matrix of size " << rs.rank() << ", rank of Y "
        << rs.dim() << "\n";
    if (!c.vector.empty()) {
      auto v = vec(rs, c.vector, "--vector");
      auto t = rs.tits_cone_membership(v, c.step_cap);
      const char* verdict = t.verdict == hpl::TitsVerdict::In ? "in" : t.verdict == hpl::TitsVerdict::Out ? "out" : "unknown";
      r["tits_cone"] = json{{"verdict", verdict}, {"reason", t.reason}};
      if (t.witness) r["tits_cone"]["witness"] = hpl::io::to_json(*t.witness);
      txt << "Tits cone: " << verdict << " (" << t.reason << ")\n";
    }
    return {r, txt.str()};
  }
  if (cmd == "check-hecke") {
    auto p = load_path(rs, c);
    auto v = hpl::check_hecke(rs, p, c.h);
    json r{{"hecke", v.ok}, {"certificates", certificates_json(v.certificates)}, {"path", hpl::io::to_json(p)}};
    if (!v.ok) {
      r["reason"] = v.reason;
      throw DomainNo{r, "not a Hecke path: " + v.reason + "\n"};
    }
    txt << "Hecke path " << path_text(p) << "\n" << certificates_text(v.certificates);
    return {r, txt.str()};
  }
  if (cmd == "check-ls") {
    auto p = load_path(rs, c);
    auto v = hpl::is_ls(rs, p, c.h);
    json r{{"ls", v.ls}, {"certificates", certificates_json(v.certificates)}, {"path", hpl::io::to_json(p)}};
    if (v.cross_checked) {
      r["cross_check"] = json{{"hecke", v.hecke}, {"ddim", v.ddim}, {"rho_gap", v.rho_gap.get_str()}, {"agree", true}};
      txt << "cross-check: hecke=" << (v.hecke ? "yes" : "no") << " ddim=" << v.ddim
          << " rho(lambda-nu)=" << v.rho_gap.get_str() << " (agrees)\n";
    }
    if (!v.ls) {
      r["reason"] = v.reason;
      throw DomainNo{r, "not an LS path: " + v.reason + "\n" + txt.str()};
    }
    return {r, "LS path " + path_text(p) + "\n" + certificates_text(v.certificates) + txt.str()};
  }
  if (cmd == "stats") {
    auto p = load_path(rs, c);
    auto s = hpl::stats(rs, p, c.h);
    json r = hpl::io::to_json(s);
    r["rho_gap"] = hpl::rho_gap(rs, p).get_str();
    txt << "ddim " << s.ddim << "\ncodim " << s.codim << "\n";
    if (s.dim) txt << "dim " << *s.dim << "\n";
    txt << "rho(lambda-nu) " << hpl::rho_gap(rs, p).get_str() << "\n";
    return {r, txt.str()};
  }
  if (cmd == "apply-op") {
    auto p = load_path(rs, c);
    hpl::OpKind k;
    if (c.op == "e") k = hpl::OpKind::E;
    else if (c.op == "f") k = hpl::OpKind::F;
    else if (c.op == "etilde") k = hpl::OpKind::ETilde;
    else throw hpl::InvalidInput("--op must be e, f or etilde");
    if (c.index < 1 || c.index > rs.rank()) throw hpl::InvalidInput("--index out of range");
    auto res = hpl::root_operator(rs, k, c.index - 1, p);
    if (!res.path) throw DomainNo{json{{"defined", false}, {"reason", res.reason}}, "undefined: " + res.reason + "\n"};
    return {json{{"defined", true}, {"path", hpl::io::to_json(*res.path)}}, path_text(*res.path) + "\n"};
  }
  if (cmd == "crystal") {
    auto lambda = vec(rs, c.lambda, "--lambda");
    auto g = hpl::generate_ls_paths(rs, lambda, c.depth_cap, c.h);
    if (c.format == "dot") return {json(), hpl::io::to_dot(g)};
    txt << g.nodes.size() << " paths" << (g.cap_hit ? " (depth cap reached, partial)" : "") << "\n";
    for (const auto& n : g.nodes) txt << "  " << path_text(n) << "\n";
    return {hpl::io::to_json(g), txt.str()};
  }
  if (cmd == "mult") {
    auto lambda = vec(rs, c.lambda, "--lambda");
    auto mu = vec(rs, c.mu, "--mu");
    auto m = hpl::multiplicity(rs, lambda, mu, c.depth_cap, c.h);
    json r{{"multiplicity", m}};
    txt << m << "\n";
    try {
      auto f = hpl::freudenthal_multiplicity(rs, lambda, mu);
      r["freudenthal"] = f;
      r["agree"] = long(m) == f;
      txt << "oracle agreement: " << (long(m) == f ? "yes" : "NO") << " (Freudenthal " << f << ")\n";
      if (long(m) != f) throw hpl::CrossCheckMismatch("LS count " + std::to_string(m) + " differs from Freudenthal " + std::to_string(f));
    } catch (const hpl::UnsupportedType& e) {
      r["freudenthal"] = nullptr;
      txt << "oracle: " << e.what() << "\n";
    }
    return {r, txt.str()};
  }
  if (cmd == "enumerate-hecke") {
    auto lambda = vec(rs, c.lambda, "--lambda");
    auto y0 = c.y0.empty() ? rs.zero() : vec(rs, c.y0, "--y0");
    auto y1 = vec(rs, c.y1, "--y1");
    auto ps = hpl::enumerate_hecke(rs, lambda, y0, y1, c.h);
    json a = json::array();
    txt << ps.size() << " Hecke paths\n";
    for (const auto& p : ps) {
      auto v = hpl::check_hecke(rs, p, c.h);
      a.push_back(json{{"path", hpl::io::to_json(p)}, {"certificates", certificates_json(v.certificates)}});
      txt << "  " << path_text(p) << "\n";
    }
    return {json{{"count", ps.size()}, {"paths", a}}, txt.str()};
  }
  if (cmd == "gallery") {
    auto p = load_path(rs, c);
    hpl::DecoratedHeckePath d;
    try {
      d = hpl::decorate(rs, p, c.h);
    } catch (const hpl::NotHecke& e) {
      throw DomainNo{json{{"hecke", false}, {"reason", e.what()}}, std::string("not a Hecke path: ") + e.what() + "\n"};
    }
    json a = json::array();
    for (std::size_t j = 0; j < d.galleries.size(); ++j) {
      const auto& g = d.galleries[j];
      json gj = hpl::io::to_json(rs, g);
      gj["t"] = p.breakpoints()[j + 1].get_str();
      a.push_back(gj);
      txt << "t=" << p.breakpoints()[j + 1].get_str() << " type " << hpl::detail::word_str(g.type) << " folds [";
      auto fp = g.fold_positions();
      for (std::size_t k = 0; k < fp.size(); ++k) txt << (k ? "," : "") << fp[k];
      txt << "] true [";
      for (std::size_t k = 0; k < g.true_walls.size(); ++k) txt << (k ? "," : "") << (g.true_walls[k] ? "T" : "F");
      txt << "] neg " << hpl::neg_count(rs, g) << "\n";
    }
    auto ct = hpl::codim_tilde(rs, d, c.h);
    auto cd = hpl::stats(rs, p, c.h).codim;
    txt << "codim_tilde " << ct << " codim " << cd << "\n";
    return {json{{"galleries", a}, {"codim_tilde", ct}, {"codim", cd}}, txt.str()};
  }
  if (cmd == "pattern") {
    auto p = load_path(rs, c);
    hpl::ParameterPattern pat;
    try {
      pat = hpl::parameter_pattern(rs, p, c.h);
    } catch (const hpl::NotHecke& e) {
      throw DomainNo{json{{"hecke", false}, {"reason", e.what()}}, std::string("not a Hecke path: ") + e.what() + "\n"};
    }
    txt << "N = " << pat.N << "\n";
    for (const auto& g : pat.groups) txt << "  t=" << g.t.get_str() << " n=" << g.n << "\n";
    txt << "factors";
    for (auto f : pat.factors) txt << " " << hpl::to_string(f);
    txt << "\n";
    return {hpl::io::to_json(pat), txt.str()};
  }
  throw hpl::InvalidInput("unknown command " + cmd);
}

void emit(const json& r, const std::string& text, const std::string& format) {
  if (format == "json" && !r.is_null())
    std::cout << r.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke and LS paths for Kac-Moody root systems"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  Config c;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--system", c.system_file, "system file (JSON)");
    s->add_option("--type", c.type_name, "built-in type: A1, A2, B2, G2, A1^(1), A2^(1), H3");
    s->add_option("--h", c.h, "height bound for root enumeration")->check(CLI::PositiveNumber);
    s->add_option("--depth-cap", c.depth_cap, "crystal depth cap")->check(CLI::PositiveNumber);
    s->add_option("--step-cap", c.step_cap, "Tits cone step cap")->check(CLI::PositiveNumber);
    s->add_option("--format", c.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  };
  auto sub = [&](const char* name, const char* help) {
    auto s = app.add_subcommand(name, help);
    add_common(s);
    return s;
  };
  auto validate = sub("validate", "validate a system file");
  validate->add_option("--vector", c.vector, "also test Tits cone membership of this vector");
  for (auto name : {"check-hecke", "check-ls", "stats", "gallery", "pattern"})
    sub(name, "path command")->add_option("--path", c.path_file, "path file (JSON)");
  auto op = sub("apply-op", "apply a root operator to a path");
  op->add_option("--path", c.path_file, "path file (JSON)");
  op->add_option("--op", c.op, "e, f or etilde");
  op->add_option("--index", c.index, "simple index (1-based)");
  auto cr = sub("crystal", "generate the LS crystal of a shape");
  cr->add_option("--lambda", c.lambda, "dominant shape, comma-separated rationals");
  auto mu = sub("mult", "weight multiplicity with oracle check");
  mu->add_option("--lambda", c.lambda, "dominant shape");
  mu->add_option("--mu", c.mu, "weight");
  auto en = sub("enumerate-hecke", "all Hecke paths between two points");
  en->add_option("--lambda", c.lambda, "dominant shape");
  en->add_option("--y0", c.y0, "start (default 0)");
  en->add_option("--y1", c.y1, "end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string cmd = app.get_subcommands().front()->get_name();
  c.h_given = app.get_subcommands().front()->count("--h") > 0;
  if (!c.h_given)
    if (const char* env = std::getenv("HPL_HEIGHT_BOUND")) {
      try {
        c.h = std::stol(env);
      } catch (...) {
        std::cerr << "error: HPL_HEIGHT_BOUND must be a positive integer\n";
        return 2;
      }
      if (c.h < 1) {
        std::cerr << "error: HPL_HEIGHT_BOUND must be a positive integer\n";
        return 2;
      }
    }
  try {
    auto [r, text] = run(cmd, c);
    emit(r, text, c.format);
    return 0;
  } catch (const DomainNo& no) {
    emit(no.report, no.text, c.format);
    return 1;
  } catch (const hpl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
}
