#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubres/determinant.hpp"
#include "cubres/residue.hpp"

namespace cubres {

/// Every machine-checked claim. Declaration order is the report order.
enum class ClaimId {
  P2_3,           // symbol periodicity, cube collapse, negation symmetry
  P2_4,           // (p-1)/3 cubic residues for 3k+1 primes
  P2_5,           // every nonzero class is a cube for 3k+2 primes
  T3_1,           // c = 0, n in [1, p]: det = (-1)^(n-1) (n-1)
  T3_2,           // c = +-1, n in (1, p-1]: det = 1
  T3_3,           // n = p, c in [1, p-1]: det = p - 1
  T3_4,           // n, c in [2, p-2]: det = 0
  T3_5,           // n = p - 1, c in [1, p-1]: det = 1
  T3_6,           // [(j-i+1)/p] and [((j-i)^3+1)/p] agree entrywise
  T3_7,           // even powers plus a primitive-root power give all-ones
  ROW_PERIOD_NP,  // det = 0 for p < n <= p + 10
  TABLE_PERIOD,   // column c equals column c + p
  REMARK_N1,      // order-1 matrices: det 1 unless c = 0 (mod p)
};

inline constexpr ClaimId kAllClaims[] = {
    ClaimId::P2_3, ClaimId::P2_4, ClaimId::P2_5, ClaimId::T3_1, ClaimId::T3_2,
    ClaimId::T3_3, ClaimId::T3_4, ClaimId::T3_5, ClaimId::T3_6, ClaimId::T3_7,
    ClaimId::ROW_PERIOD_NP, ClaimId::TABLE_PERIOD, ClaimId::REMARK_N1,
};

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);

/// One failed case. For matrix claims n is the order and c the shift; the
/// proposition checkers store the symbol argument in n and its partner in c.
struct Counterexample {
  std::int64_t n = 0;
  std::int64_t c = 0;
  ExactInt expected;
  ExactInt actual;
  std::string detail;
};

struct TheoremReport {
  ClaimId claim;
  Prime prime;
  std::uint64_t cases_checked = 0;
  bool skipped = false;  // hypothesis does not apply to this prime
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Test hook: shifts every expected value of one claim by +1 so the failure
/// path can be exercised end to end.
struct CheckOptions {
  std::optional<ClaimId> corrupt_claim;
};

// The T3_* and table checkers throw std::invalid_argument when the prime
// does not satisfy the claim's hypothesis. All of them run every case and
// collect failures instead of stopping at the first one.
TheoremReport check_T3_1(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_T3_2(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_T3_3(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_T3_4(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_T3_5(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_T3_6(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_T3_7(const Prime& p, std::int64_t t_max, std::int64_t n_max,
                         const CheckOptions& opts = {});

TheoremReport check_row_period(const Prime& p, std::int64_t extra_orders = 10,
                               const CheckOptions& opts = {});
TheoremReport check_table_period(const Prime& p, const CheckOptions& opts = {});
TheoremReport check_remark_n1(const Prime& p, const CheckOptions& opts = {});

/// P2_3, P2_4 and P2_5 for one prime, with a in [-a_bound, a_bound].
/// Claims whose hypothesis fails come back marked skipped with a note.
std::vector<TheoremReport> check_propositions(const Prime& p, std::int64_t a_bound,
                                              const CheckOptions& opts = {});

struct VerifyConfig {
  std::int64_t p_max = 60;
  std::int64_t t_max = 3;
  std::int64_t n_max = 8;
  unsigned jobs = 1;
  CheckOptions options;
};

/// Every applicable claim for every prime 5 <= p <= p_max, sorted by claim
/// then prime. Skipped claims are left out. Throws std::invalid_argument
/// for p_max < 5 or nonpositive t_max / n_max.
std::vector<TheoremReport> verify_all(const VerifyConfig& config);

bool all_passed(const std::vector<TheoremReport>& reports);

/// Human-readable report listing every counterexample, and the checkers'
/// notes when `with_notes` is set.
std::string render_text(const std::vector<TheoremReport>& reports, bool with_notes = false);

/// "claim,p,cases,verdict,counterexamples" header plus one line per report.
std::string render_lines(const std::vector<TheoremReport>& reports);

}  // namespace cubres
