#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cubical/adjunctions.hpp"
#include "cubical/box.hpp"
#include "cubical/error.hpp"
#include "cubical/homology.hpp"
#include "cubical/io.hpp"
#include "cubical/model.hpp"
#include "cubical/qshape.hpp"
#include "cubical/suites.hpp"

namespace cubical::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  int max_dim = 3;
  std::string format = "text";
};

// Usage problems detected after CLI11 has accepted the command line.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PresheafPtr load_presheaf(const std::string& path) { return share(parse_presheaf(read_file(path))); }

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw UsageError{"expected exactly one --input"};
  return o.inputs.front();
}

int box_dim(const std::string& text) {
  std::size_t pos = 0;
  const int v = std::stoi(text, &pos);
  if (pos != text.size() || v < 0) throw UsageError{"not a dimension: '" + text + "'"};
  return v;
}

// Emits the status lines of a suite report.
void print_report(const SuiteReport& r, const std::string& format, std::ostream& out) {
  if (format == "machine") {
    for (const auto& c : r.checks) out << c.id << '\t' << to_string(c.status) << '\t' << c.witness << '\n';
    return;
  }
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    out << std::left << std::setw(5) << tag << ' ' << c.id;
    if (!c.witness.empty()) out << "  (" << c.witness << ')';
    out << '\n';
    if (c.status == Status::fail) ++failed;
  }
  out << r.checks.size() - failed << '/' << r.checks.size() << " checks passed in " << std::fixed << std::setprecision(2)
      << r.seconds << " s\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubical and simplicial set combinatorics", "cubical"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--input", opt.inputs, "Input file (repeat for binary functors; - for stdin)");
  app.add_option("--output", opt.output, "Write the result here instead of stdout");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  auto* max_dim_opt = app.add_option("--max-dim", opt.max_dim, "Truncation dimension")->check(CLI::Range(0, 8));

  // box
  auto* box = app.add_subcommand("box", "Morphisms of the box category");
  box->require_subcommand(1);
  std::vector<std::string> enum_args, compose_args, nf_args;
  box->add_subcommand("enum", "List box(M, N) in enumeration order")->add_option("dims", enum_args, "M N")->expected(2)->required();
  box->add_subcommand("compose", "Print G . F for F with domain M")->add_option("args", compose_args, "M G F")->expected(3)->required();
  box->add_subcommand("nf", "Normal form of F with domain M")->add_option("args", nf_args, "M F")->expected(2)->required();

  // q
  auto* q = app.add_subcommand("q", "The quotient cubes");
  q->require_subcommand(1);
  int q_n = 0;
  q->add_subcommand("cells", "Emit Q^N truncated at --max-dim")->add_option("N", q_n)->required()->check(CLI::Range(0, 8));

  // functor
  auto* functor = app.add_subcommand("functor", "Apply a functor to presheaf files");
  std::string functor_name;
  functor->add_option("name", functor_name)->required()->check(CLI::IsMember({"q", "int", "tri", "u", "gprod", "cmp-product"}));
  int functor_dim = -1;
  functor->add_option("--max-dim", functor_dim, "Output truncation")->required()->check(CLI::Range(0, 8));

  // lift
  auto* lift = app.add_subcommand("lift", "Solve a lifting problem given by four map files");
  std::string lift_i, lift_p, lift_base, lift_over;
  bool lift_all = false;
  lift->add_option("--i", lift_i, "A -> B")->required();
  lift->add_option("--p", lift_p, "X -> Y")->required();
  lift->add_option("--base", lift_base, "A -> X")->required();
  lift->add_option("--over", lift_over, "B -> Y")->required();
  lift->add_flag("--all", lift_all, "Enumerate every diagonal");

  // homology
  auto* hom = app.add_subcommand("homology", "Integer homology of a simplicial presheaf");
  bool reduced = false;
  hom->add_flag("--reduced", reduced, "Reduced homology");

  // check
  auto* check = app.add_subcommand("check", "Run a verification suite");
  std::string suite;
  SuiteBounds bounds;
  bool serial = false;
  check->add_option("suite", suite, "boxcat, qshape, coreflection, model, homology, all or pushout-squares")->required();
  check->add_option("--k", bounds.k, "Bound for the degeneracy squares")->check(CLI::Range(0, 4));
  check->add_option("--max-dim", bounds.max_dim, "Instance bound")->check(CLI::Range(0, 6));
  check->add_flag("--corrupt-q", bounds.corrupt_q, "Inject a broken Q^2 into the instances");
  check->add_flag("--serial", serial, "Run checks one at a time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.output.empty()) {
    file.open(opt.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kUsage;
    }
    sink = &file;
  }
  std::ostream& o = *sink;

  try {
    if (*box) {
      if (box->got_subcommand("enum")) {
        for (const BoxMap& f : box_enumerate(box_dim(enum_args[0]), box_dim(enum_args[1]))) o << render(f) << '\n';
      } else if (box->got_subcommand("compose")) {
        const BoxMap f = parse_box_map(compose_args[2], box_dim(compose_args[0]));
        const BoxMap g = parse_box_map(compose_args[1], f.codomain());
        o << render(compose(g, f)) << '\n';
      } else {
        o << render(box_normal_form(parse_box_map(nf_args[1], box_dim(nf_args[0])))) << '\n';
      }
      return kOk;
    }
    if (*q) {
      o << serialize_presheaf(q_object(q_n, opt.max_dim));
      return kOk;
    }
    if (*functor) {
      const int n = functor_dim;
      if (functor_name == "gprod" || functor_name == "cmp-product") {
        if (opt.inputs.size() != 2) throw UsageError{"functor " + functor_name + " needs two --input files"};
        const PresheafPtr a = load_presheaf(opt.inputs[0]);
        const PresheafPtr b = load_presheaf(opt.inputs[1]);
        if (functor_name == "gprod") {
          o << serialize_presheaf(*geometric_product(a, b, n));
        } else {
          o << serialize_map(product_comparison(a, b, n));
        }
        return kOk;
      }
      const PresheafPtr x = load_presheaf(single_input(opt));
      PresheafPtr y;
      if (functor_name == "q") y = apply_Q(x, n);
      if (functor_name == "int") y = apply_int(x, n);
      if (functor_name == "tri") y = triangulate(x, n);
      if (functor_name == "u") y = u_functor(x, n);
      o << serialize_presheaf(*y);
      return kOk;
    }
    if (*lift) {
      const LiftingProblem problem{parse_map(read_file(lift_i)), parse_map(read_file(lift_p)), parse_map(read_file(lift_base)),
                                   parse_map(read_file(lift_over))};
      const auto lifts = solve_lifting(problem, lift_all);
      if (lift_all) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& d : lifts) arr.push_back(nlohmann::ordered_json::parse(serialize_map(d)));
        o << arr.dump(2) << '\n';
      } else if (!lifts.empty()) {
        o << serialize_map(lifts.front());
      }
      if (lifts.empty()) {
        err << "no lift exists\n";
        return kFailure;
      }
      return kOk;
    }
    if (*hom) {
      const PresheafPtr x = load_presheaf(single_input(opt));
      const HomologyResult h = homology(*x, reduced);
      const char* sep = opt.format == "machine" ? "\t" : " = ";
      if (reduced) o << "H_-1" << sep << render(h.minus_one) << '\n';
      for (std::size_t i = 0; i < h.groups.size(); ++i) o << "H_" << i << sep << render(h.groups[i]) << '\n';
      return kOk;
    }
    if (*check) {
      bounds.parallel = !serial;
      if (max_dim_opt->count() > 0 && check->get_option("--max-dim")->count() == 0) bounds.max_dim = opt.max_dim;
      SuiteReport report;
      if (suite == "pushout-squares") {
        const auto start = std::chrono::steady_clock::now();
        report.suite = suite;
        for (int k = 0; k <= bounds.k; ++k) {
          for (auto& c : verify_degeneracy_pushouts(k)) report.checks.push_back(std::move(c));
        }
        std::sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } else {
        report = run_suite(suite, bounds);
      }
      print_report(report, opt.format, o);
      return all_pass(report.checks) ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const CompositionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace cubical::cli
