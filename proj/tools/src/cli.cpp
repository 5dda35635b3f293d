#include <algorithm>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aperykit/affine.hpp"
#include "aperykit/cli.hpp"
#include "aperykit/corpus.hpp"
#include "aperykit/errors.hpp"
#include "aperykit/homology.hpp"

namespace aperykit::cli {
namespace {

using json = nlohmann::json;
using Ints = std::vector<std::int64_t>;

enum class Format { Json, Text, Dot };

struct Options {
  std::string format;
  std::string gens;
  std::int64_t wrt = 0;
  std::string order;
  std::vector<std::string> extra_orders;
  std::string lambda;
  std::size_t dim = 0;
  std::string x_order = "lex";
  std::string strategy = "scan";
  std::string fix;
  std::string axes = "y1,y2";
  std::int64_t extent = 8;
  bool dump_basis = false;
  bool parallel = false;
  bool homology = false;
  std::uint64_t seed = 1;
  std::size_t count = 50;
  std::size_t min_k = 2;
  std::size_t max_k = 5;
  std::int64_t max_gen = 60;
};

Ints parse_ints(const std::string& text, const std::string& what) {
  Ints out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument(what + ": '" + piece + "' is not an integer");
    }
  }
  if (out.empty()) throw InvalidArgument(what + " is empty");
  return out;
}

NumericalSemigroup semigroup_from(const Options& o) {
  if (o.gens.empty()) throw InvalidArgument("--gens is required");
  return NumericalSemigroup(parse_ints(o.gens, "--gens"));
}

AffineMonoid affine_from(const Options& o) {
  if (o.gens.empty()) throw InvalidArgument("--gens is required");
  std::vector<Point> gens;
  std::istringstream in(o.gens);
  std::string tuple;
  while (std::getline(in, tuple, ';')) gens.push_back(parse_ints(tuple, "generator"));
  const std::size_t dim = o.dim == 0 && !gens.empty() ? gens.front().size() : o.dim;
  return AffineMonoid(dim, std::move(gens));
}

Ints to_ints(std::span<const std::int64_t> v) { return Ints(v.begin(), v.end()); }
Ints to_ints(const ExponentVector& v) { return Ints(v.begin(), v.end()); }

// y-part of an exponent vector on (x, y_1, .., y_k).
Ints y_part(const ExponentVector& v) { return Ints(std::next(v.begin()), v.end()); }

std::string join(const Ints& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void put_basis(json& j, const GroebnerBasis& b) { j["basis"] = json::parse(basis_json(b)); }

void print_basis_text(std::ostream& out, const GroebnerBasis& b) {
  out << "basis (" << b.order().label() << "), " << b.size() << " elements\n";
  for (const auto& e : b.elements()) {
    out << "  [" << join(to_ints(e.lead)) << "] - [" << join(to_ints(e.trail)) << "]\n";
  }
}

// --- analyze -----------------------------------------------------------

void cmd_analyze(const Options& o, Format f, std::ostream& out) {
  const auto s = semigroup_from(o);
  const auto inv = oracle::invariants(s);
  const OrderSpec order = order_for(parse_order(o.order.empty() ? "lex" : o.order),
                                    s.generators());
  const auto basis = buchberger(ideal_generators(s, order), order);
  const auto groebner_gaps = gaps_via_groebner(s, basis);
  if (groebner_gaps != inv.gaps) {
    throw InvariantViolation("gap sets from the basis and the definition differ");
  }
  Ints pf = oracle::pf_bruteforce(s);
  bool gorenstein = true;
  std::vector<std::string> orders{order.label()};
  if (s.rank() >= 2) {
    const auto t = type_set(s);
    if (t.pf != pf) throw InvariantViolation("type set disagrees with PF(S)");
    gorenstein = t.gorenstein;
    for (const auto& [label, set] : t.extremal_sets) orders.push_back(label);
  }
  if (gorenstein != (2 * inv.genus == inv.frobenius + 1) || gorenstein != inv.symmetric) {
    throw InvariantViolation("Gorenstein flag disagrees with the genus test");
  }
  if (f == Format::Json) {
    json j{{"generators", to_ints(s.generators())},
           {"frobenius", inv.frobenius},
           {"genus", inv.genus},
           {"conductor", inv.frobenius + 1},
           {"gaps", inv.gaps},
           {"pf", pf},
           {"type", pf.size()},
           {"symmetric", inv.symmetric},
           {"gorenstein", gorenstein},
           {"orders", orders}};
    if (o.dump_basis) put_basis(j, basis);
    out << j.dump() << '\n';
    return;
  }
  out << "generators: " << join(to_ints(s.generators())) << '\n'
      << "frobenius: " << inv.frobenius << '\n'
      << "genus: " << inv.genus << '\n'
      << "gaps: " << join(inv.gaps) << '\n'
      << "pf: " << join(pf) << '\n'
      << "gorenstein: " << (gorenstein ? "true" : "false") << '\n';
  if (o.dump_basis) print_basis_text(out, basis);
}

// --- apery -------------------------------------------------------------

void cmd_apery(const Options& o, Format f, std::ostream& out) {
  const auto s = semigroup_from(o);
  OrderDescriptor d;
  if (!o.order.empty()) {
    d = parse_order(o.order);
    if (d.kind != OrderDescriptor::Kind::Apery) {
      throw InvalidOrder("apery needs an apery:j=... ordering");
    }
    if (o.wrt != 0 && s.generator(std::min(d.j, s.rank() - 1)) != o.wrt) {
      throw InvalidArgument("--wrt and the ordering name different generators");
    }
  } else {
    d.kind = OrderDescriptor::Kind::Apery;
    d.j = s.index_of(o.wrt == 0 ? s.multiplicity() : o.wrt);
  }
  const OrderSpec order = order_for(d, s.generators());
  const InnerOrder inner = inner_for(d, s.rank());
  const auto strategy = o.strategy == "staircase" ? DeltaStrategy::Staircase
                                                  : DeltaStrategy::Scan;
  const auto c = compute_apery(s, d.j, inner, strategy);
  if (c.report.order_used != order.label()) {
    throw InvariantViolation("ordering label mismatch");
  }
  if (f == Format::Json) {
    json reps = json::object();
    for (const auto& [n, e] : c.report.representations) reps[std::to_string(n)] = y_part(e);
    json j{{"generators", to_ints(s.generators())},
           {"wrt", c.report.wrt},
           {"apery", c.report.elements},
           {"representations", reps},
           {"orders", {c.report.order_used}}};
    if (o.dump_basis) put_basis(j, c.basis);
    out << j.dump() << '\n';
    return;
  }
  out << "Ap(S, " << c.report.wrt << ") = {" << join(c.report.elements, ", ") << "}\n"
      << "ordering: " << c.report.order_used << '\n';
  for (const auto& [n, e] : c.report.representations) {
    out << "  " << n << " = [" << join(y_part(e)) << "]\n";
  }
  if (o.dump_basis) print_basis_text(out, c.basis);
}

// --- typeset -----------------------------------------------------------

void cmd_typeset(const Options& o, Format f, std::ostream& out) {
  const auto s = semigroup_from(o);
  TypeSetOptions opts;
  opts.parallel = o.parallel;
  for (const auto& text : o.extra_orders) {
    const auto d = parse_order(text);
    if (d.kind != OrderDescriptor::Kind::Apery || d.j + 1 != s.rank()) {
      throw InvalidOrder("extra type-set orderings must be apery:j=" +
                         std::to_string(s.rank()) + ",...");
    }
    opts.extra_orders.push_back(inner_for(d, s.rank()));
  }
  const auto t = type_set(s, opts);
  const auto ap = apery_delta(s, s.rank() - 1);
  if (f == Format::Json) {
    json orders = json::array();
    json extremal = json::object();
    for (const auto& [label, set] : t.extremal_sets) {
      orders.push_back(label);
      extremal[label] = set;
    }
    json j{{"generators", to_ints(s.generators())},
           {"wrt", s.largest()},
           {"apery", ap.elements},
           {"type_set", t.type_set},
           {"pf", t.pf},
           {"type", t.type},
           {"gorenstein", t.gorenstein},
           {"orders", orders},
           {"extremal", extremal}};
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [label, set] : t.extremal_sets) {
    out << "extremal under " << label << ": {" << join(set, ", ") << "}\n";
  }
  out << "type set: {" << join(t.type_set, ", ") << "}\n"
      << "pf: {" << join(t.pf, ", ") << "}\n"
      << "gorenstein: " << (t.gorenstein ? "true" : "false") << '\n';
}

// --- affine ------------------------------------------------------------

void cmd_affine(const Options& o, Format f, std::ostream& out) {
  const auto m = affine_from(o);
  std::vector<std::size_t> lambda;
  if (!o.lambda.empty()) {
    lambda = parse_indices(o.lambda);
  } else if (!o.order.empty()) {
    const auto d = parse_order(o.order);
    if (d.kind != OrderDescriptor::Kind::Block) {
      throw InvalidOrder("affine needs a block:lambda=... ordering");
    }
    lambda = d.lambda;
  } else {
    throw InvalidLambda("--lambda is required");
  }
  std::optional<OrderSpec> x_order;
  if (o.x_order == "grevlex") {
    x_order = OrderSpec::grevlex(m.dim());
  } else if (o.x_order != "lex") {
    throw InvalidOrder("--x-order must be lex or grevlex");
  }
  const auto ap = apery_affine(m, lambda, x_order);
  std::vector<Ints> gens;
  for (const auto& g : m.generators()) gens.push_back(g);
  Ints lambda_1;
  for (auto i : ap.lambda.indices) lambda_1.push_back(static_cast<std::int64_t>(i + 1));
  if (f == Format::Json) {
    json reps = json::array();
    for (const auto& [p, e] : ap.representations) {
      reps.push_back({{"element", p}, {"exponents", e}});
    }
    json certs = json::array();
    for (const auto& c : ap.lambda.certificates) {
      certs.push_back({{"generator", c.generator + 1}, {"u", c.u}, {"v", c.v}});
    }
    json j{{"dim", m.dim()},
           {"generators", gens},
           {"lambda", lambda_1},
           {"apery", ap.elements},
           {"representations", reps},
           {"certificates", certs},
           {"orders", {ap.order.label()}}};
    if (o.dump_basis) put_basis(j, ap.basis);
    out << j.dump() << '\n';
    return;
  }
  out << "Lambda: " << join(lambda_1) << '\n' << "Ap(S, Lambda) = {";
  for (std::size_t i = 0; i < ap.elements.size(); ++i) {
    out << (i ? ", " : "") << '(' << join(ap.elements[i]) << ')';
  }
  out << "}\n";
  if (o.dump_basis) print_basis_text(out, ap.basis);
}

// --- hasse -------------------------------------------------------------

void cmd_hasse(const Options& o, Format f, std::ostream& out) {
  const auto s = semigroup_from(o);
  const std::int64_t wrt = o.wrt == 0 ? s.largest() : o.wrt;
  const auto nodes = oracle::apery_bruteforce(s, wrt);
  const auto edges = oracle::hasse_diagram(s, wrt);
  const auto sinks = oracle::hasse_sinks(nodes, edges);
  if (f == Format::Json) {
    json e = json::array();
    for (const auto& edge : edges) e.push_back({edge.from, edge.to});
    out << json{{"generators", to_ints(s.generators())},
                {"wrt", wrt},
                {"nodes", nodes},
                {"edges", e},
                {"sinks", sinks}}
               .dump()
        << '\n';
    return;
  }
  if (f == Format::Text) {
    for (const auto& edge : edges) out << edge.from << " -> " << edge.to << '\n';
    out << "sinks: " << join(sinks) << '\n';
    return;
  }
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (auto n : nodes) {
    const bool sink = std::binary_search(sinks.begin(), sinks.end(), n);
    out << "  \"" << n << '"' << (sink ? " [shape=box]" : "") << ";\n";
  }
  for (const auto& edge : edges) {
    out << "  \"" << edge.from << "\" -> \"" << edge.to << "\";\n";
  }
  out << "}\n";
}

// --- staircase ---------------------------------------------------------

void cmd_staircase(const Options& o, Format f, std::ostream& out) {
  const auto s = semigroup_from(o);
  const OrderSpec order = order_for(parse_order(o.order.empty() ? "lex" : o.order),
                                    s.generators());
  const auto basis = buchberger(ideal_generators(s, order), order);
  const std::size_t n = s.rank() + 1;

  std::map<std::size_t, std::int64_t> fixed;
  if (!o.fix.empty()) {
    std::istringstream in(o.fix);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidArgument("--fix expects name=value pairs");
      const auto var = variable_index(item.substr(0, eq), n);
      const auto value = parse_ints(item.substr(eq + 1), "--fix");
      if (!fixed.emplace(var, value.front()).second) {
        throw InvalidArgument("variable fixed twice: " + item.substr(0, eq));
      }
    }
  }
  std::vector<std::size_t> axes;
  {
    std::istringstream in(o.axes);
    std::string name;
    while (std::getline(in, name, ',')) axes.push_back(variable_index(name, n));
  }
  if (axes.size() != 2) throw BadAxes("--axes needs exactly two variables");
  const auto grid = render_staircase(basis, fixed, {axes[0], axes[1]}, o.extent);
  if (f == Format::Json) {
    json rows = json::array();
    std::istringstream in(grid);
    std::string line;
    while (std::getline(in, line)) rows.push_back(line);
    json j{{"generators", to_ints(s.generators())},
           {"orders", {order.label()}},
           {"axes", {variable_name(axes[0]), variable_name(axes[1])}},
           {"grid", rows}};
    if (o.dump_basis) put_basis(j, basis);
    out << j.dump() << '\n';
    return;
  }
  out << grid;
  if (o.dump_basis) print_basis_text(out, basis);
}

// --- verify ------------------------------------------------------------

struct Tally {
  std::size_t pass = 0;
  std::size_t fail = 0;
};

void cmd_verify(const Options& o, Format f, std::ostream& out, int& status) {
  if (o.min_k < 1 || o.max_k < o.min_k || o.max_k > 8) {
    throw InvalidArgument("need 1 <= --min-k <= --max-k <= 8");
  }
  const auto corpus = random_corpus(o.seed, o.count, o.min_k, o.max_k, o.max_gen);
  std::map<std::string, Tally> suites;
  json failures = json::array();
  auto record = [&](const std::string& suite, const NumericalSemigroup& s, bool ok) {
    auto& t = suites[suite];
    if (ok) {
      ++t.pass;
    } else {
      ++t.fail;
      failures.push_back({{"suite", suite}, {"generators", to_ints(s.generators())}});
    }
  };

  for (const auto& s : corpus) {
    const std::size_t k = s.rank();
    bool apery_ok = true;
    bool strategy_ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      const auto inner = InnerOrder::default_for(k, j);
      const auto scan = apery_delta(s, j, inner, DeltaStrategy::Scan);
      apery_ok = apery_ok && scan.elements == oracle::apery_bruteforce(s, s.generator(j));
      const auto stair = apery_delta(s, j, inner, DeltaStrategy::Staircase);
      strategy_ok = strategy_ok && stair.elements == scan.elements;
    }
    record("apery", s, apery_ok);
    record("apery_strategies", s, strategy_ok);

    const auto lex = OrderSpec::lex(k + 1);
    const auto gens = ideal_generators(s, lex);
    BuchbergerOptions fifo;
    fifo.selection = PairSelection::Fifo;
    const auto basis = buchberger(gens, lex);
    record("gaps", s, gaps_via_groebner(s, basis) == oracle::gaps(s));
    record("selection_independence", s, buchberger(gens, lex, fifo) == basis);

    const auto inv = oracle::invariants(s);
    record("selmer", s, inv.genus == static_cast<std::int64_t>(inv.gaps.size()) &&
                            inv.frobenius == (inv.gaps.empty() ? -1 : inv.gaps.back()));

    if (k >= 2) {
      const auto t = type_set(s);
      const auto truth = oracle::typeset_bruteforce(s);
      bool ok = t.type_set == truth && t.pf == oracle::pf_bruteforce(s) &&
                t.gorenstein == (2 * inv.genus == inv.frobenius + 1);
      for (const auto& [label, set] : t.extremal_sets) {
        ok = ok && std::includes(set.begin(), set.end(), truth.begin(), truth.end());
      }
      record("type_set", s, ok);
      const auto nodes = oracle::apery_bruteforce(s, s.largest());
      const auto edges = oracle::hasse_diagram(s, s.largest());
      record("hasse_sinks", s, oracle::hasse_sinks(nodes, edges) == truth);
      if (o.homology) record("homology", s, pf_via_homology(s) == oracle::pf_bruteforce(s));
    }
  }

  bool ok = true;
  json js = json::object();
  for (const auto& [name, t] : suites) {
    js[name] = {{"pass", t.pass}, {"fail", t.fail}};
    ok = ok && t.fail == 0;
  }
  status = ok ? 0 : 2;
  if (f == Format::Json) {
    out << json{{"seed", o.seed},
                {"count", corpus.size()},
                {"suites", js},
                {"failures", failures},
                {"ok", ok}}
               .dump()
        << '\n';
    return;
  }
  out << "seed " << o.seed << ", " << corpus.size() << " semigroups\n";
  for (const auto& [name, t] : suites) {
    out << "  " << name << ": " << t.pass << " passed, " << t.fail << " failed\n";
  }
  out << (ok ? "all suites passed" : "FAILURES") << '\n';
}

// --- errors ------------------------------------------------------------

struct Diagnosis {
  std::string kind;
  int status;
};

template <class T>
bool is(const std::exception& e) {
  return dynamic_cast<const T*>(&e) != nullptr;
}

Diagnosis diagnose(const std::exception& e) {
  if (is<InvariantViolation>(e)) return {"InvariantViolation", 2};
  if (is<NotAMember>(e)) return {"NotAMember", 1};
  if (is<NonMinimalGenerators>(e)) return {"NonMinimalGenerators", 1};
  if (is<LengthMismatch>(e)) return {"LengthMismatch", 1};
  if (is<InvalidPermutation>(e)) return {"InvalidPermutation", 1};
  if (is<InvalidOrder>(e)) return {"InvalidOrder", 1};
  if (is<InvalidLambda>(e)) return {"InvalidLambda", 1};
  if (is<ConeMismatch>(e)) return {"ConeMismatch", 1};
  if (is<OrderNotElimination>(e)) return {"OrderNotElimination", 1};
  if (is<BadAxes>(e)) return {"BadAxes", 1};
  if (is<InvalidArgument>(e)) return {"InvalidArgument", 1};
  if (is<ScanLimitExceeded>(e)) return {"ScanLimitExceeded", 1};
  if (is<OverflowError>(e)) return {"OverflowError", 1};
  if (is<CLI::Error>(e)) return {"UsageError", 1};
  return {"InternalError", 2};
}

int report_error(const std::exception& e, bool json_errors, std::ostream& err) {
  const auto d = diagnose(e);
  if (json_errors) {
    err << json{{"error", {{"kind", d.kind}, {"message", e.what()}}}, {"exit", d.status}}.dump()
        << '\n';
  } else {
    err << "aperykit: " << d.kind << ": " << e.what() << '\n';
  }
  return d.status;
}

bool wants_json_errors(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
  }
  return false;
}

Format resolve_format(const std::string& requested, const std::string& command) {
  std::string name = requested;
  if (name.empty()) {
    name = command == "hasse" ? "dot" : command == "staircase" ? "text" : "json";
  }
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  if (name == "dot" && command == "hasse") return Format::Dot;
  throw InvalidArgument("format '" + name + "' is not available for " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool json_errors = wants_json_errors(args);
  Options o;
  CLI::App app("Apery sets, type sets and Groebner bases of numerical and affine monoids",
               "aperykit");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, text or dot (hasse)")
        ->check(CLI::IsMember({"json", "text", "dot"}));
  };
  auto gens_opt = [&o](CLI::App* sub) {
    sub->add_option("--gens", o.gens, "comma-separated generators")->required();
  };
  auto order_opt = [&o](CLI::App* sub) {
    sub->add_option("--order", o.order, "lex | apery:j=<i>,inner=<perm>,<lex|revlex>");
  };
  auto dump_opt = [&o](CLI::App* sub) {
    sub->add_flag("--dump-basis", o.dump_basis, "include the reduced Groebner basis");
  };

  auto* analyze = app.add_subcommand("analyze", "Frobenius number, genus, gaps, PF");
  gens_opt(analyze);
  order_opt(analyze);
  dump_opt(analyze);
  common(analyze);

  auto* apery = app.add_subcommand("apery", "Apery set with respect to a generator");
  gens_opt(apery);
  order_opt(apery);
  dump_opt(apery);
  common(apery);
  apery->add_option("--wrt", o.wrt, "generator (default: the multiplicity)");
  apery->add_option("--strategy", o.strategy, "scan or staircase")
      ->check(CLI::IsMember({"scan", "staircase"}));

  auto* typeset = app.add_subcommand("typeset", "type set, PF and the Gorenstein test");
  gens_opt(typeset);
  common(typeset);
  typeset->add_option("--extra-order", o.extra_orders, "additional apery:j=k,... ordering");
  typeset->add_flag("--parallel", o.parallel, "run the orderings concurrently");

  auto* affine = app.add_subcommand("affine", "Apery set of an affine monoid");
  gens_opt(affine);
  dump_opt(affine);
  common(affine);
  affine->add_option("--dim", o.dim, "ambient dimension");
  affine->add_option("--lambda", o.lambda, "1-based generator indices of Lambda");
  affine->add_option("--order", o.order, "block:lambda=<indices>");
  affine->add_option("--x-order", o.x_order, "lex or grevlex on the x block");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of an Apery set");
  gens_opt(hasse);
  common(hasse);
  hasse->add_option("--wrt", o.wrt, "nonzero element of S (default: largest generator)");

  auto* staircase = app.add_subcommand("staircase", "ASCII slice of the staircase");
  gens_opt(staircase);
  order_opt(staircase);
  dump_opt(staircase);
  common(staircase);
  staircase->add_option("--fix", o.fix, "fixed variables, e.g. x=2,y3=0");
  staircase->add_option("--axes", o.axes, "two free variables, e.g. y1,y2");
  staircase->add_option("--extent", o.extent, "points per axis");

  auto* verify = app.add_subcommand("verify", "cross-check the engine against the oracles");
  common(verify);
  verify->add_option("--seed", o.seed);
  verify->add_option("--count", o.count);
  verify->add_option("--min-k", o.min_k);
  verify->add_option("--max-k", o.max_k);
  verify->add_option("--max-gen", o.max_gen);
  verify->add_flag("--homology", o.homology, "also check PF through simplicial homology");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::Error& e) {
    return report_error(e, json_errors, err);
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const Format f = resolve_format(o.format, command);
    int status = 0;
    if (command == "analyze") cmd_analyze(o, f, out);
    if (command == "apery") cmd_apery(o, f, out);
    if (command == "typeset") cmd_typeset(o, f, out);
    if (command == "affine") cmd_affine(o, f, out);
    if (command == "hasse") cmd_hasse(o, f, out);
    if (command == "staircase") cmd_staircase(o, f, out);
    if (command == "verify") cmd_verify(o, f, out, status);
    return status;
  } catch (const std::exception& e) {
    return report_error(e, json_errors, err);
  }
}

}  // namespace aperykit::cli
