#include "qkflag/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qkflag/correlators.hpp"
#include "qkflag/errors.hpp"
#include "qkflag/flags.hpp"
#include "qkflag/kring.hpp"
#include "qkflag/parallel.hpp"
#include "qkflag/render.hpp"

namespace qkflag {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

SchubertIndex parse_index(const std::string& s, int n) {
  const auto v = parse_ints(s);
  if (v.size() != 2) throw ParseError("expected i,j, got '" + s + "'");
  SchubertIndex w{v[0], v[1]};
  require_valid(w, n);
  return w;
}

CurveDegree parse_degree(const std::string& s) {
  const auto v = parse_ints(s);
  if (v.size() != 2) throw ParseError("expected d1,d2, got '" + s + "'");
  return {v[0], v[1]};
}

Hyperplane parse_hyperplane(const std::string& s) {
  if (s == "h1") return Hyperplane::h1;
  if (s == "h2") return Hyperplane::h2;
  throw ParseError("hyperplane must be h1 or h2");
}

struct Common {
  int n = 0;
  std::string format = "text";
  std::string out_path;
  std::string table_path;
  unsigned jobs = 1;
};

void add_common(CLI::App* sub, Common& c, bool with_table) {
  sub->add_option("--n", c.n, "rank n >= 3")->required();
  sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", c.out_path, "write output to PATH");
  sub->add_option("--jobs", c.jobs, "worker threads (default QKFLAG_JOBS)")->check(CLI::PositiveNumber);
  if (with_table) sub->add_option("--table", c.table_path, "load the table from golden JSON instead of rebuilding");
}

MultiplicationTable obtain_table(const Common& c) {
  if (c.table_path.empty()) {
    TableOptions opts;
    opts.jobs = c.jobs;
    return build_table(c.n, opts);
  }
  auto t = load_table(c.table_path);
  if (t.n() != c.n) throw RankMismatch("table file has n=" + std::to_string(t.n()));
  return t;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw ParseError("cannot write " + c.out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert calculus on the incidence variety Fl(1,n-1)", "qkflag"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  common.jobs = default_jobs();

  auto* product = app.add_subcommand("product", "multiply two Schubert classes");
  add_common(product, common, true);
  std::string u_arg, v_arg;
  bool classical = false;
  product->add_option("--u", u_arg, "i,j")->required();
  product->add_option("--v", v_arg, "k,p")->required();
  product->add_flag("--classical", classical, "K-theory product only");

  auto* table = app.add_subcommand("table", "full quantum multiplication table");
  add_common(table, common, false);
  std::string step_c = "reference";
  table->add_option("--step-c", step_c, "M_{1,2} recurrence variant")
      ->check(CLI::IsMember({"reference", "algorithm-text"}));

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, common, true);
  std::string checks = "positivity,ring,classical,degree";
  int assoc_max = VerifyOptions{}.assoc_max;
  verify->add_option("--checks", checks, "comma list of positivity,ring,classical,degree,chevalley");
  verify->add_option("--assoc-max", assoc_max, "largest n for the associativity sweep");

  auto* conjecture = app.add_subcommand("conjecture", "diff the conjectured closed formula against the table");
  add_common(conjecture, common, true);
  std::string gate = "literal";
  conjecture->add_option("--gate", gate, "literal or flipped")->check(CLI::IsMember({"literal", "flipped"}));

  auto* correlator = app.add_subcommand("correlator", "closed-form correlators");
  add_common(correlator, common, false);
  std::string kind;
  std::string w_arg, degree_arg = "0,0", h_arg = "h1", points_arg;
  std::string cu_arg, cv_arg;
  int proj_d = 1;
  correlator->add_option("--kind", kind, "two, three, pn or quantum")
      ->required()
      ->check(CLI::IsMember({"two", "three", "pn", "quantum"}));
  correlator->add_option("--u", cu_arg, "first O-class i,j");
  correlator->add_option("--v", cv_arg, "second O-class i,j");
  correlator->add_option("--w", w_arg, "I-class i,j");
  correlator->add_option("--degree", degree_arg, "d1,d2");
  correlator->add_option("--hyperplane", h_arg, "h1 or h2 (kind quantum)");
  correlator->add_option("--points", points_arg, "i1,i2,i3 (kind pn; --n is the projective dimension)");
  correlator->add_option("--d", proj_d, "curve degree (kind pn)");

  auto* flags = app.add_subcommand("flags", "balanced sequences and stabilization predicates");
  flags->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  std::vector<std::string> balanced_args, splitting_args, stabilized_args;
  bool brute = false;
  int bound = 8;
  auto* g = flags->add_option_group("mode")->require_option(1);
  g->add_option("--balanced", balanced_args, "I d, e.g. 2,4 2,3")->expected(2);
  g->add_option("--splitting", splitting_args, "I d k")->expected(3);
  g->add_option("--stabilized", stabilized_args, "n_1,..,n_m n d_1,..,d_m k r")->expected(5);
  flags->add_flag("--brute-force", brute, "use the exhaustive oracle for --balanced");
  flags->add_option("--bound", bound, "enumeration bound on the degree sum for --brute-force");

  std::vector<std::string> argv_store{"qkflag"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  const auto* active = app.get_subcommands().front();
  try {
    const auto format = parse_format(common.format);
    if (active == product) {
      const auto u = parse_index(u_arg, common.n);
      const auto v = parse_index(v_arg, common.n);
      std::string text;
      if (classical) {
        const auto c = k_product(u, v, common.n);
        text = format == OutputFormat::json ? class_to_json(to_quantum(c), common.n).dump() + "\n"
                                            : render_product(u, v, c, common.n) + "\n";
      } else {
        const auto c = qk_product(u, v, common.n, obtain_table(common));
        text = format == OutputFormat::json ? class_to_json(c, common.n).dump() + "\n"
                                            : render_product(u, v, c, common.n) + "\n";
      }
      emit(common, text, out);
      return kOk;
    }
    if (active == table) {
      TableOptions opts;
      opts.jobs = common.jobs;
      opts.step_c = step_c == "reference" ? StepC::reference : StepC::algorithm_text;
      emit(common, render_table(build_table(common.n, opts), format), out);
      return kOk;
    }
    if (active == verify) {
      const auto t = obtain_table(common);
      VerifyOptions opts;
      opts.assoc_max = assoc_max;
      opts.jobs = common.jobs;
      bool pass = true;
      std::string text;
      for (const auto& check : CLI::detail::split(checks, ',')) {
        VerificationReport r;
        if (check == "positivity") {
          r = positivity_check(t, opts);
        } else if (check == "ring") {
          r = ring_axiom_checks(t, opts);
        } else if (check == "classical") {
          r = classical_consistency_check(t, opts);
        } else if (check == "degree") {
          r = degree_check(t);
        } else if (check == "chevalley") {
          r = chevalley_check(t, opts);
        } else {
          throw ParseError("unknown check '" + check + "'");
        }
        pass = pass && r.pass;
        text += render_report(r, format);
      }
      emit(common, text, out);
      return pass ? kOk : kFailed;
    }
    if (active == conjecture) {
      const auto t = obtain_table(common);
      const auto r = compare_with_table(t, gate == "literal" ? ConjectureGate::literal : ConjectureGate::flipped,
                                        common.jobs);
      emit(common, render_report(r, format), out);
      return r.empty() ? kOk : kFailed;
    }
    if (active == correlator) {
      const int n = common.n;
      std::string text;
      if (kind == "pn") {
        const auto p = parse_ints(points_arg);
        if (p.size() != 3) throw ParseError("--points needs three indices");
        text = std::to_string(three_point_projective(p[0], p[1], p[2], proj_d, n)) + "\n";
      } else if (kind == "quantum") {
        const auto c = quantum_part_from_correlators(parse_hyperplane(h_arg), parse_index(cv_arg, n),
                                                     parse_degree(degree_arg), n);
        text = format == OutputFormat::json ? class_to_json(to_quantum(c), n).dump() + "\n"
                                            : render_class(c, n) + "\n";
      } else {
        CorrelatorQuery q;
        q.inputs.push_back(parse_index(cu_arg, n));
        if (kind == "three") q.inputs.push_back(parse_index(cv_arg, n));
        q.dual_output = parse_index(w_arg, n);
        q.degree = parse_degree(degree_arg);
        text = std::to_string(evaluate(q, n).value()) + "\n";
      }
      emit(common, text, out);
      return kOk;
    }
    if (active == flags) {
      std::string text;
      if (!balanced_args.empty()) {
        const FlagShape shape(parse_ints(balanced_args[0]));
        const auto d = parse_ints(balanced_args[1]);
        const auto A = brute ? brute_force_balanced(shape, d, bound) : balanced_construct(shape, d);
        text = render_sequences(A, format);
      } else if (!splitting_args.empty()) {
        const FlagShape shape(parse_ints(splitting_args[0]));
        const bool ok = splitting_predicate(shape, parse_ints(splitting_args[1]), parse_ints(splitting_args[2]).at(0));
        text = ok ? "true\n" : "false\n";
      } else {
        StabilizationInput s;
        s.dims = parse_ints(stabilized_args[0]);
        s.n = parse_ints(stabilized_args[1]).at(0);
        s.d = parse_ints(stabilized_args[2]);
        s.k = parse_ints(stabilized_args[3]).at(0);
        s.r = parse_ints(stabilized_args[4]).at(0);
        text = theorem_conditions(s) ? "true\n" : "false\n";
      }
      out << text;
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qkflag
