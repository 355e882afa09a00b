#include "cubres/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cubres/matrix.hpp"
#include "cubres/parallel.hpp"
#include "cubres/table.hpp"

namespace cubres {

namespace {

constexpr std::string_view kClaimNames[] = {
    "P2_3", "P2_4", "P2_5", "T3_1", "T3_2", "T3_3", "T3_4",
    "T3_5", "T3_6", "T3_7", "ROW_PERIOD_NP", "TABLE_PERIOD", "REMARK_N1",
};

ExactInt to_exact(std::int64_t v) { return ExactInt(static_cast<long>(v)); }

// Applies the CheckOptions test hook to a formula-derived expectation.
class Expectation {
 public:
  Expectation(ClaimId claim, const CheckOptions& opts)
      : shift_(opts.corrupt_claim == claim ? 1 : 0) {}

  ExactInt operator()(std::int64_t v) const { return to_exact(v + shift_); }

 private:
  std::int64_t shift_;
};

TheoremReport make_report(ClaimId claim, const Prime& p) {
  return TheoremReport{claim, p, 0, false, {}, {}};
}

void require_3k2(const Prime& p, ClaimId claim) {
  if (!p.is_3k2()) {
    throw std::invalid_argument(std::string(claim_name(claim)) + " needs a prime of the form 3k+2, got " +
                                std::to_string(p.value()));
  }
}

void require_3k_form(const Prime& p, ClaimId claim) {
  if (!p.is_3k1() && !p.is_3k2()) {
    throw std::invalid_argument(std::string(claim_name(claim)) +
                                " needs a prime of the form 3k+1 or 3k+2");
  }
}

// One determinant case for the DiffPlusC family.
void check_diff_det(TheoremReport& report, std::int64_t n, std::int64_t c, const ExactInt& expected) {
  ++report.cases_checked;
  const ExactInt actual = determinant(build_matrix(DiffPlusC{c}, report.prime, n));
  if (actual != expected) report.counterexamples.push_back({n, c, expected, actual, {}});
}

std::string entry_detail(std::size_t i, std::size_t j) {
  return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// First (i, j), 1-based, where the entries differ or where `m` is not 1.
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const ResidueMatrix& a,
                                                                  const ResidueMatrix* b) {
  const std::size_t n = a.order();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const bool ok = b ? a.at(i, j) == b->at(i, j) : a.at(i, j) == SymbolValue::One;
      if (!ok) return std::pair{i, j};
    }
  return std::nullopt;
}

}  // namespace

std::string_view claim_name(ClaimId id) { return kClaimNames[static_cast<std::size_t>(id)]; }

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const ClaimId id : kAllClaims)
    if (claim_name(id) == name) return id;
  return std::nullopt;
}

TheoremReport check_T3_1(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::T3_1);
  const Expectation expect(ClaimId::T3_1, opts);
  TheoremReport report = make_report(ClaimId::T3_1, p);
  for (std::int64_t n = 1; n <= p.value(); ++n) {
    const std::int64_t sign = (n - 1) % 2 == 0 ? 1 : -1;
    check_diff_det(report, n, 0, expect(sign * (n - 1)));
  }
  return report;
}

TheoremReport check_T3_2(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::T3_2);
  const Expectation expect(ClaimId::T3_2, opts);
  TheoremReport report = make_report(ClaimId::T3_2, p);
  for (const std::int64_t c : {1, -1})
    for (std::int64_t n = 2; n <= p.value() - 1; ++n) check_diff_det(report, n, c, expect(1));
  return report;
}

TheoremReport check_T3_3(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::T3_3);
  const Expectation expect(ClaimId::T3_3, opts);
  TheoremReport report = make_report(ClaimId::T3_3, p);
  for (std::int64_t c = 1; c <= p.value() - 1; ++c)
    check_diff_det(report, p.value(), c, expect(p.value() - 1));
  return report;
}

TheoremReport check_T3_4(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::T3_4);
  const Expectation expect(ClaimId::T3_4, opts);
  TheoremReport report = make_report(ClaimId::T3_4, p);
  std::uint64_t without_two_ones_columns = 0;
  for (std::int64_t n = 2; n <= p.value() - 2; ++n) {
    for (std::int64_t c = 2; c <= p.value() - 2; ++c) {
      ++report.cases_checked;
      const ResidueMatrix m = build_matrix(DiffPlusC{c}, p, n);
      const ExactInt expected = expect(0);
      const ExactInt actual = determinant(m);
      if (actual != expected) report.counterexamples.push_back({n, c, expected, actual, {}});
      if (all_ones_columns(m).size() < 2) {
        ++without_two_ones_columns;
        report.notes.push_back("n=" + std::to_string(n) + " c=" + std::to_string(c) +
                               ": fewer than two all-ones columns");
      }
    }
  }
  if (without_two_ones_columns == 0) {
    report.notes.push_back("every case has at least two all-ones columns");
  }
  return report;
}

TheoremReport check_T3_5(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::T3_5);
  const Expectation expect(ClaimId::T3_5, opts);
  TheoremReport report = make_report(ClaimId::T3_5, p);
  for (std::int64_t c = 1; c <= p.value() - 1; ++c) check_diff_det(report, p.value() - 1, c, expect(1));
  return report;
}

TheoremReport check_T3_6(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::T3_6);
  const bool corrupt = opts.corrupt_claim == ClaimId::T3_6;
  TheoremReport report = make_report(ClaimId::T3_6, p);
  for (std::int64_t n = 2; n <= p.value() - 2; ++n) {
    ++report.cases_checked;
    const ResidueMatrix shifted = build_matrix(DiffPlusC{1}, p, n);
    const ResidueMatrix cubed = build_matrix(CubeDiffPlusOne{}, p, n);
    if (const auto at = first_mismatch(shifted, &cubed)) {
      report.counterexamples.push_back({n, 1, to_exact(to_int(shifted.at(at->first, at->second))),
                                        to_exact(to_int(cubed.at(at->first, at->second))),
                                        entry_detail(at->first, at->second)});
    }
    ExactInt expected = determinant(shifted);
    if (corrupt) expected += 1;
    const ExactInt actual = determinant(cubed);
    if (actual != expected) report.counterexamples.push_back({n, 1, expected, actual, "determinant"});
  }
  return report;
}

TheoremReport check_T3_7(const Prime& p, std::int64_t t_max, std::int64_t n_max,
                         const CheckOptions& opts) {
  const bool odd_branch = p.mod12() == 5;
  if (!odd_branch && p.mod12() != 11) {
    throw std::invalid_argument("T3_7 needs a prime congruent to 5 or 11 mod 12, got " +
                                std::to_string(p.value()));
  }
  if (t_max < 1 || n_max < 2) throw std::invalid_argument("T3_7 needs t_max >= 1 and n_max >= 2");
  const Expectation expect(ClaimId::T3_7, opts);
  TheoremReport report = make_report(ClaimId::T3_7, p);

  std::vector<std::int64_t> roots{primitive_root(p)};
  if (const auto second = next_primitive_root(p, roots.front())) roots.push_back(*second);

  const std::int64_t first_exponent = odd_branch ? 1 : 2;
  const std::int64_t last_exponent = odd_branch ? p.value() - 2 : p.value() - 1;
  for (const std::int64_t root : roots) {
    for (std::int64_t e = first_exponent; e <= last_exponent; e += 2) {
      const std::int64_t c = pow_mod(root, static_cast<std::uint64_t>(e), p.value());
      for (std::int64_t t = 1; t <= t_max; ++t) {
        for (std::int64_t order = 2; order <= n_max; ++order) {
          ++report.cases_checked;
          const ResidueMatrix m = build_matrix(EvenPowerPlusC{t, c}, p, order);
          const std::string where = "r=" + std::to_string(root) + " e=" + std::to_string(e) +
                                    " t=" + std::to_string(t);
          if (const auto at = first_mismatch(m, nullptr)) {
            report.counterexamples.push_back({order, c, to_exact(1),
                                              to_exact(to_int(m.at(at->first, at->second))),
                                              where + " " + entry_detail(at->first, at->second)});
          }
          const ExactInt expected = expect(0);
          const ExactInt actual = determinant(m);
          if (actual != expected) {
            report.counterexamples.push_back({order, c, expected, actual, where + " determinant"});
          }
        }
      }
    }
  }
  std::string roots_note = "primitive roots used:";
  for (const std::int64_t r : roots) roots_note += " " + std::to_string(r);
  report.notes.push_back(roots_note);
  report.notes.push_back("c = r^e reduced mod p before building each matrix");
  return report;
}

TheoremReport check_row_period(const Prime& p, std::int64_t extra_orders, const CheckOptions& opts) {
  require_3k_form(p, ClaimId::ROW_PERIOD_NP);
  if (extra_orders < 1) throw std::invalid_argument("ROW_PERIOD_NP needs at least one order above p");
  const Expectation expect(ClaimId::ROW_PERIOD_NP, opts);
  TheoremReport report = make_report(ClaimId::ROW_PERIOD_NP, p);
  const IntRange n_range{p.value() + 1, p.value() + extra_orders};
  const IntRange c_range{0, p.value() - 1};
  const DeterminantTable table = generate_table({FamilyKind::DiffPlusC}, p, n_range, c_range);
  for (std::int64_t n = n_range.lo; n <= n_range.hi; ++n) {
    for (std::int64_t c = c_range.lo; c <= c_range.hi; ++c) {
      ++report.cases_checked;
      const ExactInt expected = expect(0);
      if (table.cell(n, c) != expected) {
        report.counterexamples.push_back({n, c, expected, table.cell(n, c), {}});
      }
    }
  }
  return report;
}

TheoremReport check_table_period(const Prime& p, const CheckOptions& opts) {
  require_3k_form(p, ClaimId::TABLE_PERIOD);
  const bool corrupt = opts.corrupt_claim == ClaimId::TABLE_PERIOD;
  TheoremReport report = make_report(ClaimId::TABLE_PERIOD, p);
  const DeterminantTable table =
      generate_table({FamilyKind::DiffPlusC}, p, default_n_range(p), default_c_range(p));
  for (std::int64_t n = 1; n <= p.value(); ++n) {
    for (std::int64_t c = 0; c < p.value(); ++c) {
      ++report.cases_checked;
      ExactInt expected = table.cell(n, c);
      if (corrupt) expected += 1;
      const ExactInt& actual = table.cell(n, c + p.value());
      if (actual != expected) {
        report.counterexamples.push_back({n, c + p.value(), expected, actual, "column c+p"});
      }
    }
  }
  return report;
}

TheoremReport check_remark_n1(const Prime& p, const CheckOptions& opts) {
  require_3k2(p, ClaimId::REMARK_N1);
  const Expectation expect(ClaimId::REMARK_N1, opts);
  TheoremReport report = make_report(ClaimId::REMARK_N1, p);
  const DeterminantTable table = generate_table({FamilyKind::DiffPlusC}, p, {1, 1}, default_c_range(p));
  for (std::int64_t c = table.c_range().lo; c <= table.c_range().hi; ++c) {
    ++report.cases_checked;
    const ExactInt expected = expect(c % p.value() == 0 ? 0 : 1);
    if (table.cell(1, c) != expected) report.counterexamples.push_back({1, c, expected, table.cell(1, c), {}});
  }
  return report;
}

std::vector<TheoremReport> check_propositions(const Prime& p, std::int64_t a_bound,
                                              const CheckOptions& opts) {
  if (a_bound < 0 || a_bound >= kModulusLimit) {
    throw std::invalid_argument("a_bound must lie in [0, 2^31)");
  }
  const std::int64_t m = p.value();
  auto symbol = [&](std::int64_t a) { return to_int(cubic_residue_symbol(a, p)); };

  TheoremReport props = make_report(ClaimId::P2_3, p);
  {
    const Expectation expect(ClaimId::P2_3, opts);
    auto record = [&](std::int64_t a, std::int64_t b, int lhs, int rhs, const char* what) {
      ++props.cases_checked;
      const ExactInt expected = expect(lhs);
      if (to_exact(rhs) != expected) props.counterexamples.push_back({a, b, expected, to_exact(rhs), what});
    };
    for (std::int64_t a = -a_bound; a <= a_bound; ++a) {
      record(a, a + m, symbol(a), symbol(a + m), "congruent arguments");
      record(a, a - m, symbol(a), symbol(a - m), "congruent arguments");
      if (reduce_mod(a, m) != 0) {
        ExactInt cube = to_exact(a);
        cube = cube * cube * cube;
        const auto cube_mod = static_cast<std::int64_t>(mpz_fdiv_ui(cube.get_mpz_t(), static_cast<unsigned long>(m)));
        record(a, cube_mod, 1, symbol(cube_mod), "cube of a nonzero class");
      }
      record(a, -a, symbol(a), symbol(-a), "negated argument");
    }
  }

  TheoremReport count = make_report(ClaimId::P2_4, p);
  if (p.is_3k1()) {
    const Expectation expect(ClaimId::P2_4, opts);
    const std::int64_t residues = (m - 1) / 3;
    std::int64_t plus = 0;
    std::int64_t minus = 0;
    for (std::int64_t a = 1; a < m; ++a) (symbol(a) == 1 ? plus : minus) += 1;
    const auto set_size = static_cast<std::int64_t>(cubic_residue_set(p).size());
    const std::pair<std::int64_t, std::int64_t> checks[] = {
        {residues, set_size}, {residues, plus}, {2 * residues, minus}};
    const char* labels[] = {"cubes of nonzero classes", "symbol value 1", "symbol value -1"};
    for (std::size_t k = 0; k < 3; ++k) {
      ++count.cases_checked;
      const ExactInt expected = expect(checks[k].first);
      if (to_exact(checks[k].second) != expected) {
        count.counterexamples.push_back({0, 0, expected, to_exact(checks[k].second), labels[k]});
      }
    }
  } else {
    count.skipped = true;
    count.notes.push_back("applies only to primes of the form 3k+1");
  }

  TheoremReport ones = make_report(ClaimId::P2_5, p);
  if (p.is_3k2()) {
    const Expectation expect(ClaimId::P2_5, opts);
    for (std::int64_t a = -a_bound; a <= a_bound; ++a) {
      if (reduce_mod(a, m) == 0) continue;
      ++ones.cases_checked;
      const ExactInt expected = expect(1);
      if (to_exact(symbol(a)) != expected) {
        ones.counterexamples.push_back({a, 0, expected, to_exact(symbol(a)), "symbol"});
      }
      if (!cube_root_witness(a, p)) {
        ones.counterexamples.push_back({a, 0, expected, to_exact(-1), "no cube root found"});
      }
    }
  } else {
    ones.skipped = true;
    ones.notes.push_back("applies only to primes of the form 3k+2");
  }

  return {std::move(props), std::move(count), std::move(ones)};
}

std::vector<TheoremReport> verify_all(const VerifyConfig& config) {
  if (config.p_max < 5) throw std::invalid_argument("verify needs p_max >= 5");
  if (config.t_max < 1) throw std::invalid_argument("verify needs t_max >= 1");
  if (config.n_max < 2) throw std::invalid_argument("verify needs n_max >= 2");

  struct Task {
    ClaimId claim;
    std::int64_t p;
  };
  std::vector<Task> tasks;
  for (const std::int64_t value : odd_primes_between(5, config.p_max)) {
    const Prime p(value, PrimeUse::ThreeKForm);
    tasks.push_back({ClaimId::P2_3, value});
    if (p.is_3k1()) continue;
    for (const ClaimId id : {ClaimId::T3_1, ClaimId::T3_2, ClaimId::T3_3, ClaimId::T3_4, ClaimId::T3_5,
                             ClaimId::T3_6, ClaimId::ROW_PERIOD_NP, ClaimId::TABLE_PERIOD,
                             ClaimId::REMARK_N1}) {
      tasks.push_back({id, value});
    }
    if (p.mod12() == 5 || p.mod12() == 11) tasks.push_back({ClaimId::T3_7, value});
  }

  // P2_3 stands in for the whole proposition bundle.
  std::vector<std::vector<TheoremReport>> results(tasks.size());
  detail::parallel_for(tasks.size(), config.jobs, [&](std::size_t k) {
    const Prime p(tasks[k].p, PrimeUse::ThreeKForm);
    const CheckOptions& opts = config.options;
    switch (tasks[k].claim) {
      case ClaimId::P2_3: results[k] = check_propositions(p, 2 * p.value(), opts); break;
      case ClaimId::T3_1: results[k] = {check_T3_1(p, opts)}; break;
      case ClaimId::T3_2: results[k] = {check_T3_2(p, opts)}; break;
      case ClaimId::T3_3: results[k] = {check_T3_3(p, opts)}; break;
      case ClaimId::T3_4: results[k] = {check_T3_4(p, opts)}; break;
      case ClaimId::T3_5: results[k] = {check_T3_5(p, opts)}; break;
      case ClaimId::T3_6: results[k] = {check_T3_6(p, opts)}; break;
      case ClaimId::T3_7: results[k] = {check_T3_7(p, config.t_max, config.n_max, opts)}; break;
      case ClaimId::ROW_PERIOD_NP: results[k] = {check_row_period(p, 10, opts)}; break;
      case ClaimId::TABLE_PERIOD: results[k] = {check_table_period(p, opts)}; break;
      case ClaimId::REMARK_N1: results[k] = {check_remark_n1(p, opts)}; break;
      default: break;
    }
  });

  std::vector<TheoremReport> reports;
  for (auto& group : results)
    for (auto& r : group)
      if (!r.skipped) reports.push_back(std::move(r));
  std::stable_sort(reports.begin(), reports.end(), [](const TheoremReport& a, const TheoremReport& b) {
    if (a.claim != b.claim) return a.claim < b.claim;
    return a.prime.value() < b.prime.value();
  });
  return reports;
}

bool all_passed(const std::vector<TheoremReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.passed(); });
}

std::string render_text(const std::vector<TheoremReport>& reports, bool with_notes) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const TheoremReport& r : reports) {
    out << claim_name(r.claim) << " p=" << r.prime.value() << " cases=" << r.cases_checked << ' '
        << (r.skipped ? "SKIP" : r.passed() ? "PASS" : "FAIL");
    if (!r.passed()) out << " (" << r.counterexamples.size() << " counterexamples)";
    out << '\n';
    for (const Counterexample& ce : r.counterexamples) {
      out << "  n=" << ce.n << " c=" << ce.c << " expected=" << ce.expected << " actual=" << ce.actual;
      if (!ce.detail.empty()) out << " [" << ce.detail << ']';
      out << '\n';
    }
    if (with_notes)
      for (const std::string& note : r.notes) out << "  note: " << note << '\n';
    if (!r.passed()) ++failed;
  }
  out << reports.size() - failed << '/' << reports.size() << " verdicts passed\n";
  return out.str();
}

std::string render_lines(const std::vector<TheoremReport>& reports) {
  std::ostringstream out;
  out << "claim,p,cases,verdict,counterexamples\n";
  for (const TheoremReport& r : reports) {
    out << claim_name(r.claim) << ',' << r.prime.value() << ',' << r.cases_checked << ','
        << (r.skipped ? "skip" : r.passed() ? "pass" : "fail") << ',' << r.counterexamples.size() << '\n';
  }
  return out.str();
}

}  // namespace cubres
