// One line per acceptance criterion: "AC<n> PASS|FAIL <summary>".
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "framekit/sweeps.hpp"
#include "support/cli_corpus.hpp"
#include "support/field_properties.hpp"

using namespace framekit;

namespace {

constexpr std::uint64_t kSeed = 20240601;

constexpr std::uint64_t kLemmaInstances = 1000;     // per field
constexpr double kLemmaSeconds = 30.0;
constexpr std::uint64_t kSteinitzInstances = 500;   // per field
constexpr double kSteinitzSeconds = 10.0;
constexpr std::size_t kExhaustiveMaxAmbient = 4;    // GF(2)^m, m = 0..4
constexpr std::size_t kExhaustiveMaxLength = 4;     // n = 0..4
constexpr double kExhaustiveSeconds = 60.0;
constexpr std::uint64_t kRankBoundInstances = 1000;  // per field
constexpr std::uint64_t kDichotomyInstances = 500;  // per field
constexpr std::uint64_t kAxiomTriples = 10'000;     // per field
constexpr std::uint32_t kFermatLimit = 97;
constexpr std::size_t kMinFixtures = 20;
// Exact arithmetic throughout: every comparison is equality.
constexpr std::uint64_t kAllowedFailures = 0;

const std::vector<FieldSpec>& all_fields() {
  static const std::vector<FieldSpec> fields = {FieldSpec::prime(2), FieldSpec::prime(3),
                                                FieldSpec::prime(5), FieldSpec::rationals()};
  return fields;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& why) {
    if (ok) return;
    pass = false;
    notes.push_back(why);
  }
  void absorb(const sweeps::Report& report, const std::string& label) {
    require(report.failures <= kAllowedFailures,
            label + ": " + std::to_string(report.failures) + " failures");
    for (const std::string& n : report.notes) notes.push_back(label + ": " + n);
  }
};

bool report(const std::string& id, const Verdict& v) {
  std::cout << id << (v.pass ? " PASS " : " FAIL ") << v.summary << '\n';
  for (const std::string& n : v.notes) std::cout << "    " << n << '\n';
  return v.pass;
}

std::string per_field(const std::vector<std::pair<FieldSpec, sweeps::Report>>& rows) {
  std::string out;
  for (const auto& [field, r] : rows) {
    if (!out.empty()) out += ", ";
    out += field.to_string() + " " + std::to_string(r.instances - r.failures) + "/" +
           std::to_string(r.instances);
  }
  return out;
}

struct LemmaRun {
  std::vector<std::pair<FieldSpec, sweeps::LemmaReports>> rows;
  double seconds = 0;
};

LemmaRun lemma_run(bool with_traces) {
  LemmaRun run;
  const auto start = std::chrono::steady_clock::now();
  for (const FieldSpec& field : all_fields()) {
    run.rows.emplace_back(field, sweeps::lemma_sweep({field, kLemmaInstances, kSeed}, with_traces));
  }
  run.seconds = seconds_since(start);
  return run;
}

Verdict ac1(const LemmaRun& run) {
  Verdict v;
  std::vector<std::pair<FieldSpec, sweeps::Report>> rows;
  for (const auto& [field, r] : run.rows) {
    v.absorb(r.certificates, field.to_string());
    v.require(r.certificates.instances >= kLemmaInstances, field.to_string() + ": too few instances");
    rows.emplace_back(field, r.certificates);
  }
  v.require(run.seconds < kLemmaSeconds, "runtime over " + fmt_seconds(kLemmaSeconds));
  v.summary = "certificates verified: " + per_field(rows) + "; " + fmt_seconds(run.seconds) +
              " (limit " + fmt_seconds(kLemmaSeconds) + ")";
  return v;
}

Verdict ac2(const LemmaRun& run) {
  Verdict v;
  std::vector<std::pair<FieldSpec, sweeps::Report>> rows;
  for (const auto& [field, r] : run.rows) {
    v.absorb(r.change_of_basis, field.to_string());
    v.require(r.change_of_basis.instances >= kLemmaInstances, field.to_string() + ": too few instances");
    rows.emplace_back(field, r.change_of_basis);
  }
  v.summary = "A * A_inv = A_inv * A = I and A_inv = certificate: " + per_field(rows);
  return v;
}

Verdict ac3() {
  Verdict v;
  std::vector<std::pair<FieldSpec, sweeps::Report>> rows;
  const auto start = std::chrono::steady_clock::now();
  for (const FieldSpec& field : all_fields()) {
    const auto r = sweeps::steinitz_sweep({field, kSteinitzInstances, kSeed});
    v.absorb(r, field.to_string());
    v.require(r.instances >= kSteinitzInstances, field.to_string() + ": too few instances");
    rows.emplace_back(field, r);
  }
  const double secs = seconds_since(start);
  v.require(secs < kSteinitzSeconds, "runtime over " + fmt_seconds(kSteinitzSeconds));
  v.summary = "r = l, increasing picks, full rank: " + per_field(rows) + "; " + fmt_seconds(secs) +
              " (limit " + fmt_seconds(kSteinitzSeconds) + ")";
  return v;
}

Verdict ac4() {
  Verdict v;
  const FieldSpec gf2 = FieldSpec::prime(2);
  oracle::EnumerationBudget budget;
  budget.max_ambient_dim = kExhaustiveMaxAmbient;
  budget.max_sequence_len = kExhaustiveMaxLength;
  std::uint64_t sequences = 0;
  std::uint64_t largest_cell = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t m = 0; m <= kExhaustiveMaxAmbient; ++m) {
    for (std::size_t n = 0; n <= kExhaustiveMaxLength; ++n) {
      const auto r = sweeps::exhaustive_oracle_sweep(gf2, m, n, budget);
      v.absorb(r, "m=" + std::to_string(m) + " n=" + std::to_string(n));
      sequences += r.instances;
      largest_cell = std::max(largest_cell, r.instances);
    }
  }
  const double secs = seconds_since(start);
  v.require(secs < kExhaustiveSeconds, "runtime over " + fmt_seconds(kExhaustiveSeconds));
  v.summary = "GF(2), m <= " + std::to_string(kExhaustiveMaxAmbient) + ", n <= " +
              std::to_string(kExhaustiveMaxLength) + ": " + std::to_string(sequences) +
              " sequences (largest cell " + std::to_string(largest_cell) +
              "), each against every target; " + fmt_seconds(secs) + " (limit " +
              fmt_seconds(kExhaustiveSeconds) + ")";
  return v;
}

Verdict ac5() {
  Verdict v;
  std::vector<std::pair<FieldSpec, sweeps::Report>> rows;
  for (const FieldSpec& field : all_fields()) {
    const auto r = sweeps::rank_bound_sweep({field, kRankBoundInstances, kSeed});
    v.absorb(r, field.to_string());
    v.require(r.instances >= kRankBoundInstances, field.to_string() + ": too few instances");
    rows.emplace_back(field, r);
  }
  v.summary = "rank(derived) <= n: " + per_field(rows);
  return v;
}

Verdict ac6() {
  Verdict v;
  std::vector<std::pair<FieldSpec, sweeps::Report>> rows;
  std::string confirmed;
  for (const FieldSpec& field : all_fields()) {
    const auto r = sweeps::dichotomy_sweep({field, kDichotomyInstances, kSeed});
    v.absorb(r, field.to_string());
    v.require(r.instances >= kDichotomyInstances, field.to_string() + ": too few instances");
    rows.emplace_back(field, r);
    if (field.is_prime() && field.modulus() <= 3) {
      v.require(r.confirmed > 0, field.to_string() + ": no instance fit the oracle budget");
      confirmed += (confirmed.empty() ? "" : ", ") + field.to_string() + " " +
                   std::to_string(r.confirmed);
    }
  }
  v.summary = "exactly one of maximal/extendable: " + per_field(rows) +
              "; oracle-confirmed in budget: " + confirmed;
  return v;
}

Verdict ac7() {
  const LemmaRun run = lemma_run(true);
  Verdict v;
  std::vector<std::pair<FieldSpec, sweeps::Report>> rows;
  for (const auto& [field, r] : run.rows) {
    v.absorb(r.traces, field.to_string());
    v.require(r.traces.instances >= kLemmaInstances, field.to_string() + ": too few traces");
    rows.emplace_back(field, r.traces);
  }
  v.summary = "witnesses nonzero, in span(f), in ker L_i, multiples of e_i; final level = "
              "certificate: " + per_field(rows) + "; " + fmt_seconds(run.seconds);
  return v;
}

Verdict ac8() {
  Verdict v;
  std::string counts;
  const std::vector<FieldSpec> fields = {FieldSpec::prime(2),  FieldSpec::prime(3),
                                         FieldSpec::prime(5),  FieldSpec::prime(97),
                                         FieldSpec::prime(2147483647), FieldSpec::rationals()};
  for (const FieldSpec& field : fields) {
    const auto tally = testing::check_field_axioms(field, kAxiomTriples, kSeed);
    v.require(tally.triples >= kAxiomTriples, field.to_string() + ": too few triples");
    v.require(tally.failures <= kAllowedFailures,
              field.to_string() + ": " + std::to_string(tally.failures) + " axiom failures");
    for (const std::string& n : tally.notes) v.notes.push_back(field.to_string() + ": " + n);
    counts += (counts.empty() ? "" : ", ") + field.to_string() + " " + std::to_string(tally.triples);
  }
  const auto primes = testing::primes_up_to(kFermatLimit);
  std::uint64_t bad = 0;
  for (std::uint32_t p : primes) bad += testing::fermat_violations(p);
  v.require(bad == 0, std::to_string(bad) + " Fermat violations");
  v.summary = "axioms and round-trip on triples: " + counts + "; Fermat for all " +
              std::to_string(primes.size()) + " primes <= " + std::to_string(kFermatLimit);
  return v;
}

Verdict ac9() {
  namespace fs = std::filesystem;
  Verdict v;
  const fs::path corpus = FRAMEKIT_CLI_DIR;
  std::size_t fixtures = 0;
  for (const auto& entry : fs::directory_iterator(corpus / "fixtures")) {
    if (entry.is_regular_file()) ++fixtures;
  }
  v.require(fixtures >= kMinFixtures, "only " + std::to_string(fixtures) + " fixture files");

  const testing::InDirectory here(corpus);
  const auto cases = testing::load_cli_cases(corpus);
  std::set<std::string> commands;
  std::size_t matched = 0, certificates = 0;
  std::size_t codes[3] = {0, 0, 0};
  const fs::path tmp = fs::temp_directory_path() / "framekit_acceptance_certs";
  fs::create_directories(tmp);
  for (const auto& c : cases) {
    const auto first = testing::run_cli_captured(c.args);
    v.require(first == testing::run_cli_captured(c.args), c.name + ": output not deterministic");
    v.require(first.code >= 0 && first.code <= 2, c.name + ": exit code out of range");
    if (first.code >= 0 && first.code <= 2) ++codes[first.code];
    v.require(first.code != 1 || first.err.empty(), c.name + ": negative answer wrote to stderr");
    v.require(first.code != 2 || !first.err.empty(), c.name + ": input error without diagnostic");
    const fs::path golden = testing::golden_path(corpus, c);
    if (fs::exists(golden) && testing::slurp(golden) == testing::transcript(c, first)) {
      ++matched;
    } else {
      v.require(false, c.name + ": differs from golden transcript");
    }
    if (!c.args.empty()) commands.insert(c.args[0]);

    if (!c.args.empty() && (c.args[0] == "verify-lemma" || c.args[0] == "trace") && first.code == 0) {
      const fs::path cert = tmp / (c.name + ".cert");
      auto args = c.args;
      args.insert(args.end(), {"--emit-cert", cert.string()});
      testing::run_cli_captured(args);
      const auto check = testing::run_cli_captured({"oracle-check", "--cert", cert.string()});
      v.require(check.code == 0, c.name + ": emitted certificate failed oracle-check --cert");
      ++certificates;
    }
  }
  fs::remove_all(tmp);
  for (const char* cmd : {"rank", "member", "basis", "dim", "extend", "change-basis",
                          "verify-lemma", "trace", "steinitz", "oracle-check"}) {
    v.require(commands.count(cmd) == 1, std::string("no golden case for ") + cmd);
  }
  v.summary = std::to_string(matched) + "/" + std::to_string(cases.size()) +
              " golden transcripts match over " + std::to_string(fixtures) + " fixtures; " +
              std::to_string(certificates) + " emitted certificates re-validated; exit codes " +
              "0/1/2 seen " + std::to_string(codes[0]) + "/" + std::to_string(codes[1]) + "/" +
              std::to_string(codes[2]);
  return v;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria;
  LemmaRun lemma;
  bool all = true;
  try {
    lemma = lemma_run(false);
  } catch (const std::exception& e) {
    std::cout << "lemma sweep aborted: " << e.what() << '\n';
    return 1;
  }
  criteria.emplace_back("AC1", [&] { return ac1(lemma); });
  criteria.emplace_back("AC2", [&] { return ac2(lemma); });
  criteria.emplace_back("AC3", ac3);
  criteria.emplace_back("AC4", ac4);
  criteria.emplace_back("AC5", ac5);
  criteria.emplace_back("AC6", ac6);
  criteria.emplace_back("AC7", ac7);
  criteria.emplace_back("AC8", ac8);
  criteria.emplace_back("AC9", ac9);
  for (const auto& [id, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.summary = std::string("aborted: ") + e.what();
    }
    all = report(id, v) && all;
  }
  return all ? 0 : 1;
}
