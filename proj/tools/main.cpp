#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "colligo/building/char_map.hpp"
#include "colligo/colligation/characteristic.hpp"
#include "colligo/colligation/invariants.hpp"
#include "colligo/colligation/realize.hpp"
#include "colligo/errors.hpp"
#include "colligo/io/json.hpp"
#include "colligo/lattice/tree.hpp"
#include "suites.hpp"

using namespace colligo;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = 1;
  long p = 0;
  long radius = 1;
  std::size_t k_max = 0;
  long j_max = 12;
  long k = 4;
  std::string suite;
  std::size_t count = 0;
  std::string dot_prefix;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& where) {
  if (where == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (!where.empty() && where.front() == '{') return where;
  std::ifstream in(where);
  if (!in) throw InputError("cannot open " + where);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& where, const std::string& text) {
  if (where == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(where);
  if (!out) throw InputError("cannot write " + where);
  out << text;
}

long default_prime(long flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("COLLIGO_P")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      throw InputError(std::string("COLLIGO_P is not an integer: ") + env);
    }
  }
  return 2;
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("at /: missing field \"") + key + "\"");
  return doc[key];
}

coll::Colligation colligation_at(const Json& doc, const char* key) {
  return io::colligation_from_json(require(doc, key), std::string("/") + key);
}

std::optional<coll::ProjectivePoint> point_at(const Json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  const Json& v = doc[key];
  if (v.is_string() && v.get<std::string>() == "inf") return coll::ProjectivePoint(std::nullopt);
  return coll::ProjectivePoint(io::rational_from_json(v, std::string("/") + key));
}

long param(const Json& doc, const char* key, long fallback) {
  if (doc.contains("params") && doc["params"].contains(key)) {
    const Json& v = doc["params"][key];
    if (!v.is_number_integer()) throw ParseError(std::string("at /params/") + key + ": expected an integer");
    return v.get<long>();
  }
  return fallback;
}

int char_field(const Options& opt, const Json& doc) {
  const auto g = colligation_at(doc, "colligation");
  const auto at = point_at(doc, "lambda");
  Json out;
  if (!at) {
    out = Json{{"char_fun", io::to_json(coll::char_fun(g))}};
  } else {
    out["lambda"] = *at ? io::to_json(**at) : Json("inf");
    const auto chi = coll::char_fun(g);
    if (!*at) {
      if (g.inner() == 0 || !arith::is_zero(arith::det(g.d()))) out["value"] = io::to_json(coll::char_at_infty(g));
    } else if (!arith::is_zero(chi.denominator()(**at))) {
      out["value"] = io::to_json(chi.eval(**at));
    }
    const auto graph = coll::graph_at(g, *at);
    out["graph"] = io::to_json(graph.basis());
  }
  write_text(opt.output, io::dump(out));
  return kOk;
}

int product(const Options& opt, const Json& doc) {
  write_text(opt.output, io::dump(io::to_json(coll::circ(colligation_at(doc, "left"), colligation_at(doc, "right")))));
  return kOk;
}

int invariants(const Options& opt, const Json& doc) {
  const auto g = colligation_at(doc, "colligation");
  const std::size_t k_max = opt.k_max > 0 ? opt.k_max : g.inner() + 1;
  write_text(opt.output, io::dump(io::to_json(coll::invariants(g, k_max))));
  return kOk;
}

int divisor(const Options& opt, const Json& doc) {
  write_text(opt.output, io::dump(io::to_json(coll::divisor(colligation_at(doc, "colligation")))));
  return kOk;
}

int equal_quotient(const Options& opt, const Json& doc) {
  const auto r = coll::quotient_compare(colligation_at(doc, "left"), colligation_at(doc, "right"));
  Json out{{"equal", r.equal}};
  if (!r.equal) out["witness"] = r.witness;
  write_text(opt.output, io::dump(out));
  return kOk;
}

int realize(const Options& opt, const Json& doc) {
  const auto w = io::ratfun_from_json(require(doc, "function"), "/function");
  write_text(opt.output, io::dump(io::to_json(coll::realize(w))));
  return kOk;
}

int char_tree(const Options& opt, const Json& doc) {
  const auto g = colligation_at(doc, "colligation");
  Json out;
  if (doc.contains("boundary")) {
    out = Json{{"value", io::to_json(building::char_boundary(g, io::matrix_from_json(doc["boundary"], "/boundary")))}};
  } else {
    const auto r = io::lattice_from_json(require(doc, "lattice"), "/lattice");
    out = io::to_json(building::char_lattice_m(g, r));
  }
  write_text(opt.output, io::dump(out));
  return kOk;
}

int ball_map(const Options& opt, const Json& doc) {
  const auto g = colligation_at(doc, "colligation");
  const lattice::PAdicContext ctx(default_prime(opt.p));
  const auto center = doc.contains("center") ? io::lattice_from_json(doc["center"], "/center")
                                             : lattice::QuasiLattice::standard(ctx, 2);
  const long radius = param(doc, "radius", opt.radius);
  const auto rep = building::tree_map_check(g, lattice::vertex_class(center), radius);
  std::string prefix = opt.dot_prefix;
  if (prefix.empty()) prefix = opt.output == "-" ? "ball" : opt.output.substr(0, opt.output.rfind('.'));
  write_text(prefix + ".source.dot", building::source_dot(rep));
  write_text(prefix + ".image.dot", building::image_dot(rep));
  Json out = io::to_json(rep);
  out["p"] = center.prime();
  out["radius"] = radius;
  out["dot"] = Json{prefix + ".source.dot", prefix + ".image.dot"};
  write_text(opt.output, io::dump(out));
  return rep.violations == 0 ? kOk : kPropertyFailure;
}

int boundary_limit(const Options& opt, const Json& doc) {
  const auto g = colligation_at(doc, "colligation");
  const auto at = point_at(doc, "lambda");
  if (!at || !*at) throw ParseError("at /lambda: expected a rational point");
  const lattice::PAdicContext ctx(default_prime(opt.p));
  const long j_max = param(doc, "j_max", opt.j_max);
  const long k = param(doc, "k", opt.k);
  const bool ok = building::boundary_limit_check(g, ctx, **at, j_max, k);
  write_text(opt.output, io::dump(Json{{"p", ctx.prime()},
                                       {"lambda", io::to_json(**at)},
                                       {"j_max", j_max},
                                       {"k", k},
                                       {"converges", ok}}));
  return ok ? kOk : kPropertyFailure;
}

int verify(const Options& opt) {
  std::vector<const cli::Suite*> chosen;
  if (opt.suite.empty() || opt.suite == "all") {
    for (const auto& s : cli::suites()) chosen.push_back(&s);
  } else {
    const auto* s = cli::find_suite(opt.suite);
    if (!s) {
      std::string names;
      for (const auto& t : cli::suites()) names += " " + t.name;
      throw InputError("unknown suite " + opt.suite + "; available:" + names);
    }
    chosen.push_back(s);
  }
  Json report{{"seed", opt.seed}, {"generator", "mt19937_64"}, {"suites", Json::array()}};
  bool all_ok = true;
  for (const auto* s : chosen) {
    const std::size_t count = opt.count > 0 ? opt.count : s->default_count;
    const auto res = s->run(opt.seed, count, opt.p);
    const bool ok = res.counterexamples.empty();
    all_ok = all_ok && ok;
    Json entry{{"suite", s->name},
               {"property", s->description},
               {"instances", res.instances},
               {"skipped", res.skipped},
               {"pass", ok}};
    if (!ok) entry["counterexamples"] = res.counterexamples;
    report["suites"].push_back(std::move(entry));
  }
  report["pass"] = all_ok;
  write_text(opt.output, io::dump(report));
  return all_ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colligations, characteristic functions and their p-adic lattice maps"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input,-i", opt.input, "input JSON file, inline document, or - for stdin");
    sub->add_option("--output,-o", opt.output, "output file or - for stdout");
  };
  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "prime (default: COLLIGO_P or 2)")->check(CLI::PositiveNumber);
  };

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&, const Json&);
  };
  const std::vector<Command> commands{
      {"char-field", "characteristic function, or its value and limit graph at \"lambda\"", char_field},
      {"product", "product of \"left\" and \"right\"", product},
      {"invariants", "conjugation invariants (--k-max)", invariants},
      {"divisor", "exceptional divisor", divisor},
      {"equal-quotient", "equality of \"left\" and \"right\" in the quotient", equal_quotient},
      {"realize", "colligation with the scalar characteristic function \"function\"", realize},
      {"char-tree", "image of \"lattice\" (or boundary value at matrix \"boundary\")", char_tree},
      {"ball-map", "images of a ball in the tree (--p, --radius), DOT output", ball_map},
      {"boundary-limit", "convergence of char images of lattices tending to the line of \"lambda\"", boundary_limit},
  };
  const Command* selected = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_io(sub);
    if (std::string(c.name) == "invariants") sub->add_option("--k-max", opt.k_max, "largest power of d");
    if (std::string(c.name) == "ball-map") {
      add_prime(sub);
      sub->add_option("--radius", opt.radius, "ball radius")->check(CLI::NonNegativeNumber);
      sub->add_option("--dot-prefix", opt.dot_prefix, "DOT file prefix (default: output path stem or \"ball\")");
    }
    if (std::string(c.name) == "boundary-limit") {
      add_prime(sub);
      sub->add_option("--j-max", opt.j_max, "largest approximant index");
      sub->add_option("--k", opt.k, "precision exponent");
    }
    sub->callback([&selected, &c] { selected = &c; });
  }
  auto* ver = app.add_subcommand("verify", "seeded property suites (exit 1 on any counterexample)");
  ver->add_option("--output,-o", opt.output, "report file or - for stdout");
  ver->add_option("--seed", opt.seed, "generator seed");
  ver->add_option("--suite", opt.suite, "suite name or \"all\"");
  ver->add_option("--count", opt.count, "instances per suite");
  add_prime(ver);
  auto* list = app.add_subcommand("suites", "list verification suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (list->parsed()) {
      for (const auto& s : cli::suites()) std::cout << s.name << "  " << s.description << "\n";
      return kOk;
    }
    if (ver->parsed()) return verify(opt);
    const Json doc = io::parse(read_input(opt.input));
    return selected->run(opt, doc);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
