// cubres: cubic residue matrices, exact determinants, tables and claim checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "cubres/determinant.hpp"
#include "cubres/emit.hpp"
#include "cubres/matrix.hpp"
#include "cubres/residue.hpp"
#include "cubres/table.hpp"
#include "cubres/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitBadInput = 2;

struct FormulaArgs {
  bool diff = false;
  bool sum = false;
  bool cube_diff = false;
  bool even_power = false;
  std::int64_t c = 0;
  std::int64_t t = 1;
};

void add_formula_flags(CLI::App& cmd, FormulaArgs& args, bool allow_cube_diff) {
  auto* group = cmd.add_option_group("formula", "entry formula family");
  group->add_flag("--diff", args.diff, "[(j-i+c)/p]");
  group->add_flag("--sum", args.sum, "[(j+i+c)/p]");
  if (allow_cube_diff) group->add_flag("--cube-diff", args.cube_diff, "[((j-i)^3+1)/p]");
  group->add_flag("--even-power", args.even_power, "[((j-i)^(2t)+c)/p]");
  group->require_option(1);
  cmd.add_option("--t", args.t, "exponent t for --even-power")->check(CLI::PositiveNumber);
}

cubres::FormulaFamily family_of(const FormulaArgs& args) {
  if (args.sum) return {cubres::FamilyKind::SumPlusC};
  if (args.even_power) return {cubres::FamilyKind::EvenPowerPlusC, args.t};
  return {cubres::FamilyKind::DiffPlusC};
}

cubres::FormulaSpec formula_of(const FormulaArgs& args) {
  if (args.cube_diff) return cubres::CubeDiffPlusOne{};
  return family_of(args).with_c(args.c);
}

void check_order(std::int64_t n, std::int64_t max_order) {
  if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
  if (n > max_order) {
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds --max-order " +
                                std::to_string(max_order));
  }
}

bool color_enabled(bool no_color_flag) {
  const char* env = std::getenv("NO_COLOR");
  return !no_color_flag && (env == nullptr || *env == '\0');
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic residue matrices and their determinants"};
  app.require_subcommand(1);

  // symbol
  std::int64_t sym_a = 0;
  std::int64_t sym_p = 0;
  bool sym_verbose = false;
  auto* symbol = app.add_subcommand("symbol", "print the cubic residue symbol [a/p]");
  symbol->add_option("a", sym_a, "argument")->required();
  symbol->add_option("p", sym_p, "odd prime modulus")->required();
  symbol->add_flag("-v,--verbose", sym_verbose, "also print a cube root when the symbol is 1");

  // matrix / det
  FormulaArgs mat_args;
  std::int64_t mat_p = 0;
  std::int64_t mat_n = 0;
  std::int64_t max_order = 200;
  auto* matrix = app.add_subcommand("matrix", "print a residue matrix");
  add_formula_flags(*matrix, mat_args, true);
  matrix->add_option("-c", mat_args.c, "shift c");
  matrix->add_option("-p,--prime", mat_p, "odd prime")->required();
  matrix->add_option("-n,--order", mat_n, "matrix order")->required();
  matrix->add_option("--max-order", max_order, "largest accepted order")->check(CLI::PositiveNumber);

  FormulaArgs det_args;
  std::int64_t det_p = 0;
  std::int64_t det_n = 0;
  auto* det = app.add_subcommand("det", "print the exact determinant of a residue matrix");
  add_formula_flags(*det, det_args, true);
  det->add_option("-c", det_args.c, "shift c");
  det->add_option("-p,--prime", det_p, "odd prime")->required();
  det->add_option("-n,--order", det_n, "matrix order")->required();
  det->add_option("--max-order", max_order, "largest accepted order")->check(CLI::PositiveNumber);

  // table
  FormulaArgs tab_args;
  std::int64_t tab_p = 0;
  std::optional<std::int64_t> n_min, n_max, c_min, c_max;
  bool extended = false;
  std::string tab_format = "csv";
  std::string output;
  bool no_color = false;
  int cell_px = 24;
  unsigned jobs = 1;
  auto* table = app.add_subcommand("table", "determinant table over an (n, c) grid");
  add_formula_flags(*table, tab_args, false);
  table->add_option("-p,--prime", tab_p, "odd prime, not 3")->required();
  table->add_option("--n-min", n_min, "smallest order (default 1)");
  table->add_option("--n-max", n_max, "largest order (default p, or p+10 with --extended)");
  table->add_option("--c-min", c_min, "smallest c (default 0)");
  table->add_option("--c-max", c_max, "largest c (default 2p-1)");
  table->add_flag("--extended", extended, "orders up to p+10");
  table->add_option("--format", tab_format, "csv | text | ansi | svg")
      ->check(CLI::IsMember({"csv", "text", "ansi", "svg"}));
  table->add_option("-o,--output", output, "output file (default stdout)");
  table->add_flag("--no-color", no_color, "sign glyphs instead of ANSI colors");
  table->add_option("--cell-px", cell_px, "SVG cell size")->check(CLI::PositiveNumber);
  table->add_option("--max-order", max_order, "largest accepted order")->check(CLI::PositiveNumber);
  table->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // verify
  cubres::VerifyConfig config;
  std::string ver_format = "text";
  std::string corrupt;
  bool notes = false;
  auto* verify = app.add_subcommand("verify", "machine-check every claim over a range of primes");
  verify->add_option("--p-max", config.p_max, "largest prime checked (>= 5)")->capture_default_str();
  verify->add_option("--t-max", config.t_max, "largest t for the even-power claim")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--n-max", config.n_max, "largest order for the even-power claim")->capture_default_str();
  verify->add_option("--format", ver_format, "text | lines")->check(CLI::IsMember({"text", "lines"}));
  verify->add_option("-o,--output", output, "output file (default stdout)");
  verify->add_option("-j,--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--notes", notes, "include checker notes in text output");
  verify->add_option("--corrupt-expectation", corrupt, "self-test: shift one claim's expected values")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*symbol) {
      const cubres::Prime p(sym_p);
      const auto v = cubres::cubic_residue_symbol(sym_a, p);
      std::cout << cubres::to_int(v) << '\n';
      if (sym_verbose && v == cubres::SymbolValue::One) {
        const auto x = *cubres::cube_root_witness(sym_a, p);
        std::cout << "witness x=" << x << ": " << x << "^3 = " << cubres::reduce_mod(sym_a, p.value())
                  << " (mod " << p.value() << ")\n";
      }
      return kExitOk;
    }

    if (*matrix) {
      check_order(mat_n, max_order);
      const cubres::Prime p(mat_p);
      std::cout << cubres::build_matrix(formula_of(mat_args), p, mat_n).to_text();
      return kExitOk;
    }

    if (*det) {
      check_order(det_n, max_order);
      const cubres::Prime p(det_p);
      std::cout << cubres::determinant(cubres::build_matrix(formula_of(det_args), p, det_n)) << '\n';
      return kExitOk;
    }

    if (*table) {
      const cubres::Prime p(tab_p, cubres::PrimeUse::ThreeKForm);
      const cubres::IntRange default_n = extended ? cubres::extended_n_range(p) : cubres::default_n_range(p);
      const cubres::IntRange default_c = cubres::default_c_range(p);
      const cubres::IntRange ns{n_min.value_or(default_n.lo), n_max.value_or(default_n.hi)};
      const cubres::IntRange cs{c_min.value_or(default_c.lo), c_max.value_or(default_c.hi)};
      if (!ns.empty()) check_order(ns.hi, max_order);
      const auto result = cubres::generate_table(family_of(tab_args), p, ns, cs, jobs);
      const cubres::ColorScheme scheme;
      std::string text;
      if (tab_format == "csv") text = cubres::emit_csv(result);
      else if (tab_format == "text") text = cubres::emit_text(result);
      else if (tab_format == "ansi") text = cubres::emit_ansi(result, scheme, color_enabled(no_color));
      else text = cubres::emit_svg(result, scheme, cell_px);
      write_output(text, output);
      return kExitOk;
    }

    if (*verify) {
      if (!corrupt.empty()) {
        config.options.corrupt_claim = cubres::parse_claim(corrupt);
        if (!config.options.corrupt_claim) throw std::invalid_argument("unknown claim id " + corrupt);
      }
      const auto reports = cubres::verify_all(config);
      write_output(ver_format == "lines" ? cubres::render_lines(reports) : cubres::render_text(reports, notes),
                   output);
      return cubres::all_passed(reports) ? kExitOk : kExitClaimFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitOk;
}
