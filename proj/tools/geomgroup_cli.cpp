#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geomgroup/enumerate.hpp"
#include "geomgroup/errors.hpp"
#include "geomgroup/report_io.hpp"
#include "geomgroup/tables.hpp"

namespace {

using namespace geomgroup;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kBladeHelp =
    "A blade literal is an optional sign followed by '1' or by 'e' and\n"
    "basis indices written as digits 1-9: e1, e12, -e123, +1, -1.\n";

constexpr std::string_view kDimHelp =
    "  --n N            basis dimension (default: smallest fit, at least "
    "3)\n";
constexpr std::string_view kAdjoinHelp =
    "  --no-minus-one   do not adjoin -1 to the generated closure\n";
constexpr std::string_view kFormatHelp =
    "  --format FMT     text (default), csv, or json\n";

// mul, gen, classify, and iso take blade literals, and a literal may begin
// with '-' (-e12, -1), so a conventional flag parser cannot tell it from an
// option.  These subcommands scan their arguments by exact match instead;
// every unrecognized token is a literal.
struct ScanSpec {
  bool split = false;   // accept "--" separating two generator lists
  bool adjoin = false;  // accept --no-minus-one
  bool format = false;  // accept --format
};

struct BladeArgs {
  std::vector<std::string> first;
  std::vector<std::string> second;
  int dim = 0;  // 0: infer from the literals
  bool adjoin = true;
  std::string format = "text";
  bool split = false;
  bool help = false;
};

int parse_dim_option(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 1 || value > kMaxDimension)
    throw UsageError("--n expects an integer in 1.." +
                     std::to_string(kMaxDimension) + ", got '" + text + "'");
  return value;
}

std::string check_format(const std::string& text) {
  if (text != "text" && text != "csv" && text != "json")
    throw UsageError("--format expects text, csv, or json, got '" + text +
                     "'");
  return text;
}

BladeArgs scan_blade_args(std::span<char* const> args, ScanSpec opts) {
  BladeArgs out;
  bool literals_only = false;
  auto value_of = [&](std::string_view arg, std::string_view name,
                      std::size_t& i) {
    if (arg.size() > name.size()) return std::string(arg.substr(name.size() + 1));
    if (i + 1 == args.size())
      throw UsageError(std::string(name) + " expects a value");
    return std::string(args[++i]);
  };
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string_view arg = args[i];
    if (!literals_only) {
      if (arg == "--help" || arg == "-h") {
        out.help = true;
        return out;
      }
      if (arg == "--n" || arg.starts_with("--n=")) {
        out.dim = parse_dim_option(value_of(arg, "--n", i));
        continue;
      }
      if (opts.format && (arg == "--format" || arg.starts_with("--format="))) {
        out.format = check_format(value_of(arg, "--format", i));
        continue;
      }
      if (opts.adjoin && arg == "--no-minus-one") {
        out.adjoin = false;
        continue;
      }
      if (arg == "--") {
        if (!opts.split) {
          literals_only = true;
        } else if (out.split) {
          throw UsageError("only one '--' separator is allowed");
        } else {
          out.split = true;
        }
        continue;
      }
      if (arg.starts_with("--"))
        throw UsageError("unknown option '" + std::string(arg) + "'");
    }
    (out.split ? out.second : out.first).emplace_back(arg);
  }
  return out;
}

int inferred_dim(const BladeArgs& args) {
  if (args.dim) return args.dim;
  int dim = 3;
  for (const auto* list : {&args.first, &args.second})
    for (const std::string& literal : *list)
      for (char c : literal)
        if (c >= '1' && c <= '9') dim = std::max(dim, c - '0');
  return dim;
}

std::string join_literals(const std::vector<SignedBlade>& blades) {
  std::string out;
  for (const SignedBlade& b : blades) {
    if (!out.empty()) out += ", ";
    out += to_string(b);
  }
  return out;
}

std::string sign_display(const GroupRecord& r) {
  return r.signature.empty() ? "+" : r.signature;
}

std::string target_display(const GroupRecord& r) {
  return "C(" + std::to_string(r.clifford_target.first) + "," +
         std::to_string(r.clifford_target.second) + ")";
}

std::string chord_display(const GroupRecord& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.chord.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.chord[i]);
  }
  return out + ")";
}

std::string beat_display(const GroupRecord& r) {
  return std::to_string(r.beat->num) + "/" + std::to_string(r.beat->den);
}

int run_mul(std::span<char* const> args) {
  const BladeArgs a = scan_blade_args(args, {});
  if (a.help) {
    std::cout << "Usage: geomgroup mul [--n N] BLADE BLADE...\n\n"
              << "Geometric product of the literals, multiplied left to "
                 "right.\n\n"
              << kBladeHelp << '\n'
              << kDimHelp;
    return 0;
  }
  if (a.first.size() < 2)
    throw UsageError("mul needs at least two blade literals");
  const int dim = inferred_dim(a);
  SignedBlade product = parse_blade(a.first.front(), dim);
  for (std::size_t i = 1; i < a.first.size(); ++i)
    product = mul(product, parse_blade(a.first[i], dim));
  std::cout << to_string(product) << '\n';
  return 0;
}

int run_gen(std::span<char* const> args) {
  const BladeArgs a =
      scan_blade_args(args, {.adjoin = true, .format = true});
  if (a.help) {
    std::cout << "Usage: geomgroup gen [--n N] [--no-minus-one] [--format "
                 "FMT] BLADE...\n\n"
              << "Multiplicative closure of the generators, listed in "
                 "canonical order.\n\n"
              << kBladeHelp << '\n'
              << kDimHelp << kAdjoinHelp << kFormatHelp;
    return 0;
  }
  if (a.first.empty())
    throw UsageError("gen needs at least one blade literal");
  const GeneratorList generators =
      GeneratorList::from_literals(a.first, a.adjoin, inferred_dim(a));
  const ElementSet closure = generate_closure(generators);
  if (a.format == "json") {
    std::cout << to_json(closure) << '\n';
  } else if (a.format == "csv") {
    std::cout << "element\n";
    for (const SignedBlade& b : closure.elements())
      std::cout << to_string(b) << '\n';
  } else {
    std::cout << to_text(closure) << '\n';
  }
  return 0;
}

int run_classify(std::span<char* const> args) {
  const BladeArgs a =
      scan_blade_args(args, {.adjoin = true, .format = true});
  if (a.help) {
    std::cout << "Usage: geomgroup classify [--n N] [--no-minus-one] "
                 "[--format FMT] BLADE...\n\n"
              << "Classify the group generated by the blade literals.\n\n"
              << kBladeHelp << '\n'
              << kDimHelp << kAdjoinHelp << kFormatHelp;
    return 0;
  }
  if (a.first.empty())
    throw UsageError("classify needs at least one blade literal");
  const GroupRecord record = classify(
      GeneratorList::from_literals(a.first, a.adjoin, inferred_dim(a)));
  if (a.format == "json") {
    std::cout << to_json(record) << '\n';
  } else if (a.format == "csv") {
    std::cout << to_csv(record);
  } else {
    std::cout << "pattern: " << record.pattern << '\n'
              << "generators: " << join_literals(record.generators.generators())
              << '\n'
              << "n: " << record.gen_count << '\n'
              << "order: " << record.group_order() << '\n'
              << "class: "
              << (record.verdict == GroupClass::choir ? "choir" : "band")
              << '\n'
              << "signature: " << sign_display(record) << '\n'
              << "target: " << target_display(record) << '\n'
              << "disorder: " << record.disorder << '\n';
    if (!record.chord.empty())
      std::cout << "chord: " << chord_display(record) << '\n';
    if (record.beat) std::cout << "beat: " << beat_display(record) << '\n';
  }
  return 0;
}

int run_iso(std::span<char* const> args) {
  const BladeArgs a =
      scan_blade_args(args, {.split = true, .adjoin = true});
  if (a.help) {
    std::cout << "Usage: geomgroup iso [--n N] [--no-minus-one] BLADE... -- "
                 "BLADE...\n\n"
              << "Compare the two generator lists under the four relations of "
                 "the taxonomy.\n\n"
              << kBladeHelp << '\n'
              << kDimHelp << kAdjoinHelp;
    return 0;
  }
  if (!a.split || a.first.empty() || a.second.empty())
    throw UsageError(
        "iso needs two generator lists separated by '--', each with at "
        "least one literal");
  const int dim = inferred_dim(a);
  const GeneratorList lhs =
      GeneratorList::from_literals(a.first, a.adjoin, dim);
  const GeneratorList rhs =
      GeneratorList::from_literals(a.second, a.adjoin, dim);
  const ElementSet lhs_closure = generate_closure(lhs);
  const ElementSet rhs_closure = generate_closure(rhs);
  auto verdict = [](bool v) { return v ? "yes" : "no"; };
  std::cout << "presentation_isomorphic (≅): "
            << verdict(presentation_isomorphic(lhs, rhs)) << '\n'
            << "similar (≈): " << verdict(similar(lhs, rhs)) << '\n'
            << "equivalent (≡): "
            << verdict(equivalent(lhs_closure, rhs_closure)) << '\n'
            << "equal (=): " << verdict(equal(lhs_closure, rhs_closure))
            << '\n';
  return 0;
}

void print_report_text(const TaxonomyReport& report) {
  std::cout << "taxonomy of C(" << report.dim << ",0) with up to "
            << report.max_gens << " generators\n"
            << "classes: " << report.counts.total << " = "
            << report.counts.choirs << " choirs + " << report.counts.bands
            << " bands\n"
            << "presentation-isomorphism classes: "
            << report.counts.isomorphism_classes << "\n\n";
  for (const GroupRecord& r : report.classes) {
    std::cout << r.pattern << " | "
              << (r.verdict == GroupClass::choir ? "choir" : "band")
              << " | n=" << r.gen_count << " | order=" << r.group_order()
              << " | sign=" << sign_display(r)
              << " | target=" << target_display(r) << " | Φ=" << r.disorder;
    if (!r.chord.empty()) std::cout << " | X=" << chord_display(r);
    if (r.beat) std::cout << " | B=" << beat_display(r);
    std::cout << '\n';
  }
  auto print_blocks = [&](std::string_view heading,
                          const std::vector<ClassBlock>& blocks,
                          bool label_by_count) {
    if (blocks.empty()) return;
    std::cout << '\n' << heading << ":\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const int label =
          label_by_count
              ? report.classes[blocks[i].leader()].gen_count
              : static_cast<int>(i + 1);
      std::cout << "  " << label << ": ";
      for (std::size_t j = 0; j < blocks[i].members.size(); ++j) {
        if (j) std::cout << ", ";
        std::cout << report.classes[blocks[i].members[j]].pattern;
      }
      std::cout << '\n';
    }
  };
  print_blocks("modes", report.modes, true);
  print_blocks("rhythms", report.rhythms, false);
  if (!report.notes.empty()) std::cout << '\n';
  for (const std::string& note : report.notes) std::cout << "# " << note << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    if (argc >= 2) {
      const std::string_view sub = argv[1];
      const std::span<char* const> rest(argv + 2,
                                        static_cast<std::size_t>(argc - 2));
      if (sub == "mul") return run_mul(rest);
      if (sub == "gen") return run_gen(rest);
      if (sub == "classify") return run_classify(rest);
      if (sub == "iso") return run_iso(rest);
    }

    CLI::App app{
        "Clifford basis-group calculator: blade products, closures, "
        "classification, and the dimension-3 taxonomy."};
    app.set_version_flag("--version", "geomgroup 0.1.0");
    app.require_subcommand(1);
    app.footer("Run 'geomgroup SUBCOMMAND --help' for details.");

    // Handled above, registered here so the top-level help lists them.
    app.add_subcommand("mul", "geometric product of blade literals");
    app.add_subcommand("gen", "multiplicative closure of generators");
    app.add_subcommand("classify", "classify one generated group");
    app.add_subcommand("iso",
                       "compare two generator lists under the four relations");

    auto* enumerate_cmd = app.add_subcommand(
        "enumerate", "classify every generated group up to relabeling");
    int dim = 3;
    int max_gens = 3;
    std::string format = "text";
    enumerate_cmd->add_option("--n", dim, "basis dimension")
        ->capture_default_str();
    enumerate_cmd->add_option("--max-gens", max_gens, "largest generator count")
        ->capture_default_str();
    enumerate_cmd->add_option("--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    auto* tables_cmd = app.add_subcommand(
        "tables", "print the reference tables of the dimension-3 taxonomy");
    int table_id = 0;
    tables_cmd->add_option("--id", table_id, "table number 1-10 (default: all)")
        ->check(CLI::Range(1, 10));

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }

    if (*enumerate_cmd) {
      const TaxonomyReport report = enumerate_groups(dim, max_gens);
      if (format == "json")
        std::cout << to_json(report) << '\n';
      else if (format == "csv")
        std::cout << to_csv(report);
      else
        print_report_text(report);
    } else if (*tables_cmd) {
      const TaxonomyReport report = enumerate_groups(3, 3);
      if (table_id) {
        std::cout << render_table(table_rows(report, table_id));
      } else {
        for (int id = 1; id <= 10; ++id) {
          if (id > 1) std::cout << '\n';
          std::cout << render_table(table_rows(report, id));
        }
      }
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "geomgroup: error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "geomgroup: error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "geomgroup: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "geomgroup: internal error: " << e.what() << '\n';
    return 1;
  }
}
