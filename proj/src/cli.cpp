#include "framekit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

#include "framekit/error.hpp"
#include "framekit/lemma.hpp"
#include "framekit/oracle.hpp"
#include "framekit/sweeps.hpp"
#include "framekit/text_io.hpp"

namespace framekit {

namespace {

constexpr int kHolds = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  std::string sequence;
  std::string vector;
  std::string e;
  std::string f;
  std::string basis;
  std::string frame;
  std::string emit_cert;
  std::string cert;
  std::string trace;
  std::uint64_t random = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = oracle::EnumerationBudget{}.max_enumeration;
};

Frame load_frame(const std::string& path, const std::string& role) {
  auto frame = Frame::try_from(parse_matrix_file(path));
  if (!frame) throw DomainError(role + " (" + path + ") is not a frame: its rows are dependent");
  return *std::move(frame);
}

Vector load_vector(const std::string& path) {
  VecSequence seq = parse_matrix_file(path);
  if (seq.size() != 1) {
    throw InputError(path + ": expected exactly one row, found " + std::to_string(seq.size()));
  }
  return seq[0];
}

std::string join_indices(const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i : indices) out += ' ' + std::to_string(i + 1);
  return out;
}

std::string join_scalars(std::span<const Scalar> values) {
  std::string out;
  for (const Scalar& s : values) out += ' ' + s.to_string();
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  file << content;
  if (!file) throw InputError(path + ": cannot write file");
}

void print_matrix(std::ostream& out, const std::string& label, const ScalarMatrix& m) {
  out << label << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

int cmd_rank(const Options& o, std::ostream& out) {
  const std::size_t r = rank_seq(parse_matrix_file(o.sequence));
  out << "rank " << r << '\n';
  return kHolds;
}

int cmd_member(const Options& o, std::ostream& out) {
  const VecSequence seq = parse_matrix_file(o.sequence);
  const auto coeffs = solve_in_span(seq, load_vector(o.vector));
  if (!coeffs) {
    out << "member no\n";
    return kNegative;
  }
  out << "member yes\n" << "coeffs" << join_scalars(*coeffs) << '\n';
  return kHolds;
}

int cmd_basis(const Options& o, std::ostream& out) {
  const GeneratorBasis chosen = select_basis(parse_matrix_file(o.sequence));
  out << "# rank " << chosen.frame.size() << '\n';
  out << "# indices" << join_indices(chosen.indices) << '\n';
  out << render_matrix(chosen.frame.seq());
  return kHolds;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const Subspace sub = span_of(parse_matrix_file(o.sequence));
  out << "# dim " << dimension(sub) << '\n';
  out << render_matrix(sub.canonical_basis());
  return kHolds;
}

int cmd_extend(const Options& o, std::ostream& out) {
  const Frame frame = load_frame(o.frame, "frame");
  const Subspace sub = span_of(parse_matrix_file(o.sequence));
  try {
    const Vector v = extend_frame(frame, sub);
    out << "# extension vector\n";
    out << render_matrix(VecSequence(v.field(), v.ambient_dim(), {v}));
    return kHolds;
  } catch (const FrameIsMaximal&) {
    out << "maximal: the frame spans the subspace\n";
    return kNegative;
  }
}

int cmd_change_basis(const Options& o, std::ostream& out) {
  const ChangeOfBasis cob = change_of_basis(load_frame(o.e, "e"), load_frame(o.f, "f"));
  out << "# f = e A, e = f A_inv\n";
  print_matrix(out, "A", cob.forward);
  print_matrix(out, "A_inv", cob.inverse);
  return kHolds;
}

int cmd_verify_lemma(const Options& o, std::ostream& out) {
  const InclusionCertificate cert = verify_basic_lemma(load_frame(o.e, "e"), load_frame(o.f, "f"));
  const std::string text = render_certificate(cert);
  out << text;
  if (!o.emit_cert.empty()) write_file(o.emit_cert, text);
  return kHolds;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const ProofTrace trace = trace_induction(load_frame(o.e, "e"), load_frame(o.f, "f"));
  if (!check_trace(trace)) throw std::logic_error("generated trace failed its own audit");
  out << render_trace(trace);
  if (!o.emit_cert.empty()) write_file(o.emit_cert, render_certificate(trace.final_certificate()));
  return kHolds;
}

int cmd_steinitz(const Options& o, std::ostream& out) {
  const Frame basis = load_frame(o.basis, "B");
  const Frame frame = load_frame(o.frame, "frame");
  const SteinitzResult result = steinitz_extend(basis, frame);
  out << "# k " << frame.size() << " l " << basis.size() - frame.size() << " r " << result.r
      << '\n';
  out << "# picked" << join_indices(result.picked) << '\n';
  out << render_matrix(result.extended.seq());
  return kHolds;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const int modes = !o.cert.empty() + !o.trace.empty() + !o.sequence.empty() + (o.random > 0);
  if (modes != 1) {
    throw InputError("oracle-check needs exactly one of --cert, --trace, -s, --random");
  }
  oracle::EnumerationBudget budget;
  budget.max_enumeration = o.budget;

  if (!o.cert.empty()) {
    const bool valid = check_certificate(parse_certificate(read_text_file(o.cert), o.cert));
    out << (valid ? "certificate valid\n" : "certificate invalid\n");
    return valid ? kHolds : kNegative;
  }
  if (!o.trace.empty()) {
    const bool valid = check_trace(parse_trace(read_text_file(o.trace), o.trace));
    out << (valid ? "trace valid\n" : "trace invalid\n");
    return valid ? kHolds : kNegative;
  }
  if (!o.sequence.empty()) {
    const VecSequence seq = parse_matrix_file(o.sequence);
    const std::size_t engine = rank_seq(seq);
    const std::size_t brute = oracle::rank_bruteforce(seq, budget);
    bool agree = engine == brute;
    out << "rank engine " << engine << " oracle " << brute << '\n';
    if (!o.vector.empty()) {
      const Vector x = load_vector(o.vector);
      const bool in_engine = solve_in_span(seq, x).has_value();
      const bool in_oracle = oracle::member_bruteforce(seq, x, budget);
      agree = agree && in_engine == in_oracle;
      out << "member engine " << (in_engine ? "yes" : "no") << " oracle "
          << (in_oracle ? "yes" : "no") << '\n';
    }
    out << (agree ? "agree\n" : "disagree\n");
    return agree ? kHolds : kNegative;
  }

  bool all_ok = true;
  for (std::int64_t p : {2, 3, 5}) {
    const sweeps::Report report = sweeps::random_oracle_sweep(
        {FieldSpec::prime(p), o.random, o.seed}, budget, sweeps::Execution::kParallel);
    out << "gf " << p << ": " << report.instances << " instances, " << report.failures
        << " disagreements\n";
    for (const std::string& note : report.notes) out << "  " << note << '\n';
    all_ok = all_ok && report.ok();
  }
  return all_ok ? kHolds : kNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact frames, spans and bases over GF(p) and Q", "framekit"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> command;

  auto add = [&](const std::string& name, const std::string& description,
                 int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->callback([&command, fn] { command = fn; });
    return sub;
  };
  auto seq_opt = [&](CLI::App* sub) {
    return sub->add_option("-s,--sequence", o.sequence, "matrix file, rows are the vectors");
  };

  seq_opt(add("rank", "rank of a sequence", cmd_rank))->required();
  {
    CLI::App* sub = add("member", "is a vector in the span of a sequence", cmd_member);
    seq_opt(sub)->required();
    sub->add_option("-x,--vector", o.vector, "one-row matrix file")->required();
  }
  seq_opt(add("basis", "greedy basis chosen from generators", cmd_basis))->required();
  seq_opt(add("dim", "dimension and canonical basis of a span", cmd_dim))->required();
  {
    CLI::App* sub = add("extend", "extend a frame inside span(-s)", cmd_extend);
    sub->add_option("-k,--frame", o.frame, "frame file")->required();
    seq_opt(sub)->required();
  }
  {
    CLI::App* sub = add("change-basis", "matrices A, A_inv with f = e A", cmd_change_basis);
    sub->add_option("-e", o.e, "frame e")->required();
    sub->add_option("-f", o.f, "frame f inside span(e)")->required();
  }
  {
    CLI::App* sub = add("verify-lemma", "certificate that every e_i lies in span(f)",
                        cmd_verify_lemma);
    sub->add_option("-e", o.e, "frame e")->required();
    sub->add_option("-f", o.f, "frame f inside span(e)")->required();
    sub->add_option("--emit-cert", o.emit_cert, "write the certificate to this path");
  }
  {
    CLI::App* sub = add("trace", "inductive kernel argument, level by level", cmd_trace);
    sub->add_option("-e", o.e, "frame e")->required();
    sub->add_option("-f", o.f, "frame f inside span(e)")->required();
    sub->add_option("--emit-cert", o.emit_cert, "write the final certificate to this path");
  }
  {
    CLI::App* sub = add("steinitz", "complete a frame with vectors of a basis", cmd_steinitz);
    sub->add_option("-b,--basis", o.basis, "basis of the ambient space")->required();
    sub->add_option("-k,--frame", o.frame, "frame to extend")->required();
  }
  {
    CLI::App* sub = add("oracle-check", "brute-force cross-checks and certificate audits",
                        cmd_oracle_check);
    sub->add_option("--cert", o.cert, "certificate file to check by substitution");
    sub->add_option("--trace", o.trace, "trace file to audit");
    seq_opt(sub);
    sub->add_option("-x,--vector", o.vector, "one-row matrix file (with -s)");
    sub->add_option("--random", o.random, "random instances per field (gf 2, 3, 5)");
    sub->add_option("--seed", o.seed, "seed for --random");
    sub->add_option("--budget", o.budget, "oracle enumeration limit");
  }

  if (!args.empty() && !args[0].starts_with('-') &&
      app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command '" << args[0] << "'\n" << app.help();
    return kInputError;
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("framekit");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kInputError;
  }

  try {
    return command(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    out << "no: " << e.what() << '\n';
    return kNegative;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace framekit
