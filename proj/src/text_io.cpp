#include "framekit/text_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "framekit/error.hpp"

namespace framekit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Yields the significant lines of a text: comments and blank lines skipped.
class LineReader {
 public:
  LineReader(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  std::optional<Line> next() {
    while (pos_ < text_.size()) {
      const std::size_t end = text_.find('\n', pos_);
      const std::string_view raw =
          text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
      pos_ = end == std::string_view::npos ? text_.size() : end + 1;
      ++line_no_;
      if (const auto cr = raw.find('\r'); cr != std::string_view::npos) {
        fail("carriage return found; files must use \\n line endings", line_no_, cr + 1);
      }
      Line line{line_no_, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        if (raw[i] == ' ' || raw[i] == '\t') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
        line.tokens.push_back({raw.substr(i, j - i), i + 1});
        i = j;
      }
      if (line.tokens.empty() || line.tokens.front().text.front() == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  Line require(std::string_view what) {
    auto line = next();
    if (!line) fail("unexpected end of input, expected " + std::string(what), line_no_ + 1, 1);
    return *std::move(line);
  }

  // A line starting with `keyword` followed by exactly `args` tokens.
  Line expect(std::string_view keyword, std::size_t args) {
    Line line = require("'" + std::string(keyword) + "'");
    if (line.tokens[0].text != keyword) {
      fail("expected '" + std::string(keyword) + "', found '" +
               std::string(line.tokens[0].text) + "'",
           line.number, line.tokens[0].column);
    }
    if (line.tokens.size() != args + 1) {
      fail("'" + std::string(keyword) + "' expects " + std::to_string(args) +
               " values, found " + std::to_string(line.tokens.size() - 1),
           line.number, line.tokens[0].column);
    }
    return line;
  }

  void expect_end() {
    if (auto line = next()) {
      fail("unexpected trailing content", line->number, line->tokens[0].column);
    }
  }

  [[noreturn]] void fail(const std::string& message, std::size_t line,
                         std::size_t column) const {
    throw ParseError(source_ + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message,
                     line, column);
  }

  std::size_t count(const Line& line, const Token& tok) const {
    const std::string_view t = tok.text;
    if (t.empty() || t.size() > 9) fail("expected a count, found '" + std::string(t) + "'", line.number, tok.column);
    std::size_t value = 0;
    for (char c : t) {
      if (c < '0' || c > '9') {
        fail("expected a count, found '" + std::string(t) + "'", line.number, tok.column);
      }
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  }

  Scalar scalar(const Line& line, const Token& tok, const FieldSpec& field) const {
    try {
      return Scalar::parse(tok.text, field);
    } catch (const ParseError& e) {
      fail(e.what(), line.number, tok.column);
    } catch (const DomainError& e) {
      fail(e.what(), line.number, tok.column);
    }
  }

  FieldSpec field() {
    Line line = require("field header");
    if (line.tokens[0].text != "field") {
      fail("expected 'field gf <p>' or 'field q'", line.number, line.tokens[0].column);
    }
    if (line.tokens.size() == 2 && line.tokens[1].text == "q") return FieldSpec::rationals();
    if (line.tokens.size() == 3 && line.tokens[1].text == "gf") {
      const std::size_t p = count(line, line.tokens[2]);
      try {
        return FieldSpec::prime(static_cast<std::int64_t>(p));
      } catch (const DomainError& e) {
        fail(e.what(), line.number, line.tokens[2].column);
      }
    }
    fail("expected 'field gf <p>' or 'field q'", line.number, line.tokens[0].column);
  }

  // `keyword s_1 ... s_width` as a vector.
  Vector vector(std::string_view keyword, const FieldSpec& field, std::size_t width) {
    const Line line = expect(keyword, width);
    std::vector<Scalar> entries;
    entries.reserve(width);
    for (std::size_t t = 1; t <= width; ++t) entries.push_back(scalar(line, line.tokens[t], field));
    return Vector(field, std::move(entries));
  }

  VecSequence sequence(std::string_view keyword, const FieldSpec& field,
                       std::size_t count, std::size_t width) {
    VecSequence seq(field, width);
    for (std::size_t i = 0; i < count; ++i) seq.push_back(vector(keyword, field, width));
    return seq;
  }

  // `count` lines of `keyword` rows forming a count x width matrix.
  ScalarMatrix matrix(std::string_view keyword, const FieldSpec& field,
                      std::size_t count, std::size_t width) {
    ScalarMatrix m(field, count, width);
    for (std::size_t r = 0; r < count; ++r) {
      const Vector row = vector(keyword, field, width);
      for (std::size_t c = 0; c < width; ++c) m.at(r, c) = row[c];
    }
    return m;
  }

  std::size_t single_count(std::string_view keyword) {
    const Line line = expect(keyword, 1);
    return count(line, line.tokens[1]);
  }

 private:
  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

void put_row(std::ostringstream& os, std::string_view keyword,
             std::span<const Scalar> values) {
  os << keyword;
  for (const Scalar& s : values) os << ' ' << s;
  os << '\n';
}

void put_matrix(std::ostringstream& os, std::string_view keyword, const ScalarMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << keyword;
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << m.at(r, c);
    os << '\n';
  }
}

void put_sequence(std::ostringstream& os, std::string_view keyword, const VecSequence& seq) {
  for (const Vector& v : seq) put_row(os, keyword, v.entries());
}

}  // namespace

VecSequence parse_matrix_text(std::string_view text, std::string_view source) {
  LineReader reader(text, source);
  const FieldSpec field = reader.field();
  const Line dims = reader.expect("dims", 2);
  const std::size_t rows = reader.count(dims, dims.tokens[1]);
  const std::size_t cols = reader.count(dims, dims.tokens[2]);
  if (cols == 0 && rows > 0) {
    reader.fail("rows of zero width cannot be written in a matrix file", dims.number,
                dims.tokens[2].column);
  }
  VecSequence seq(field, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto line = reader.next();
    if (!line) {
      reader.fail("dims declares " + std::to_string(rows) + " rows but the file has " +
                      std::to_string(r),
                  dims.number, dims.tokens[1].column);
    }
    if (line->tokens.size() != cols) {
      reader.fail("expected " + std::to_string(cols) + " entries, found " +
                      std::to_string(line->tokens.size()),
                  line->number, line->tokens[0].column);
    }
    std::vector<Scalar> entries;
    entries.reserve(cols);
    for (const Token& tok : line->tokens) entries.push_back(reader.scalar(*line, tok, field));
    seq.push_back(Vector(field, std::move(entries)));
  }
  if (auto extra = reader.next()) {
    reader.fail("dims declares " + std::to_string(rows) + " rows but the file has more",
                extra->number, extra->tokens[0].column);
  }
  return seq;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

VecSequence parse_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_text(read_text_file(path), path.string());
}

std::string render_matrix(const VecSequence& seq) {
  std::ostringstream os;
  os << "field " << seq.field() << '\n';
  os << "dims " << seq.size() << ' ' << seq.ambient_dim() << '\n';
  for (const Vector& v : seq) os << v.to_string() << '\n';
  return os.str();
}

std::string render_certificate(const InclusionCertificate& cert) {
  std::ostringstream os;
  os << "# e_i = sum_j C[j][i] f_j\n";
  os << "certificate inclusion\n";
  os << "field " << cert.e.field() << '\n';
  os << "frames " << cert.e.size() << ' ' << cert.e.ambient_dim() << '\n';
  put_sequence(os, "e", cert.e);
  put_sequence(os, "f", cert.f);
  put_matrix(os, "c", cert.coeffs);
  os << "end\n";
  return os.str();
}

InclusionCertificate parse_certificate(std::string_view text, std::string_view source) {
  LineReader reader(text, source);
  const Line head = reader.expect("certificate", 1);
  if (head.tokens[1].text != "inclusion") {
    reader.fail("expected 'certificate inclusion'", head.number, head.tokens[1].column);
  }
  const FieldSpec field = reader.field();
  const Line frames = reader.expect("frames", 2);
  const std::size_t n = reader.count(frames, frames.tokens[1]);
  const std::size_t m = reader.count(frames, frames.tokens[2]);
  InclusionCertificate cert{reader.sequence("e", field, n, m),
                            reader.sequence("f", field, n, m),
                            reader.matrix("c", field, n, n)};
  reader.expect("end", 0);
  reader.expect_end();
  return cert;
}

std::string render_trace(const ProofTrace& trace) {
  std::ostringstream os;
  os << "# level k: e_i = sum_j c[j][i] f_j, f_j = sum_l forward[l][j] e_l\n";
  os << "trace\n";
  os << "field " << trace.field << '\n';
  os << "ambient " << trace.ambient_dim << '\n';
  os << "levels " << trace.levels.size() << '\n';
  for (const TraceLevel& level : trace.levels) {
    os << "level " << level.rank << '\n';
    put_sequence(os, "e", level.e);
    put_sequence(os, "f", level.f);
    put_matrix(os, "forward", level.forward);
    if (level.base_multiple) os << "multiple " << *level.base_multiple << '\n';
    for (const MapStep& step : level.steps) {
      os << "map " << step.index + 1 << '\n';
      put_sequence(os, "image", step.map.images());
      put_row(os, "witness", step.witness.vector.entries());
      put_row(os, "witness-coords", step.witness.coords);
      os << "multiple " << step.multiple << '\n';
      os << "hypothesis " << level.rank - 1 << '\n';
      put_sequence(os, "hypothesis-e", step.hypothesis.e);
      put_sequence(os, "hypothesis-f", step.hypothesis.f);
      put_matrix(os, "hypothesis-c", step.hypothesis.coeffs);
      os << "image-sources";
      for (std::size_t src : step.image_sources) os << ' ' << src + 1;
      os << '\n';
      os << "end map\n";
    }
    put_matrix(os, "c", level.coeffs);
    os << "end level\n";
  }
  os << "end\n";
  return os.str();
}

ProofTrace parse_trace(std::string_view text, std::string_view source) {
  LineReader reader(text, source);
  reader.expect("trace", 0);
  const FieldSpec field = reader.field();
  const std::size_t m = reader.single_count("ambient");
  const std::size_t depth = reader.single_count("levels");
  ProofTrace trace{field, m, {}};

  auto expect_pair = [&](std::string_view first, std::string_view second) {
    const Line line = reader.expect(first, 1);
    if (line.tokens[1].text != second) {
      reader.fail("expected '" + std::string(first) + " " + std::string(second) + "'",
                  line.number, line.tokens[1].column);
    }
  };
  auto expect_number = [&](std::string_view keyword, std::size_t value) {
    const Line line = reader.expect(keyword, 1);
    if (reader.count(line, line.tokens[1]) != value) {
      reader.fail("expected '" + std::string(keyword) + " " + std::to_string(value) + "'",
                  line.number, line.tokens[1].column);
    }
    return line;
  };

  for (std::size_t k = 1; k <= depth; ++k) {
    const Line head = expect_number("level", k);
    VecSequence e = reader.sequence("e", field, k, m);
    VecSequence f = reader.sequence("f", field, k, m);
    ScalarMatrix forward = reader.matrix("forward", field, k, k);
    std::optional<Frame> domain = Frame::try_from(e);
    if (!domain) reader.fail("level e is not a frame", head.number, 1);

    std::optional<Scalar> base;
    std::vector<MapStep> steps;
    if (k == 1) {
      const Line line = reader.expect("multiple", 1);
      base = reader.scalar(line, line.tokens[1], field);
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        expect_number("map", i + 1);
        VecSequence images = reader.sequence("image", field, k, m);
        Vector witness = reader.vector("witness", field, m);
        Vector coords = reader.vector("witness-coords", field, k);
        const Line mult = reader.expect("multiple", 1);
        Scalar multiple = reader.scalar(mult, mult.tokens[1], field);
        expect_number("hypothesis", k - 1);
        InclusionCertificate hyp{reader.sequence("hypothesis-e", field, k - 1, m),
                                 reader.sequence("hypothesis-f", field, k - 1, m),
                                 reader.matrix("hypothesis-c", field, k - 1, k - 1)};
        const Line sources = reader.expect("image-sources", k - 1);
        std::vector<std::size_t> image_sources;
        for (std::size_t t = 1; t < sources.tokens.size(); ++t) {
          const std::size_t src = reader.count(sources, sources.tokens[t]);
          if (src == 0) reader.fail("image sources are 1-based", sources.number, sources.tokens[t].column);
          image_sources.push_back(src - 1);
        }
        expect_pair("end", "map");
        steps.push_back(MapStep{
            i, LinearMap(*domain, std::move(images)),
            KernelWitness{std::move(witness),
                          std::vector<Scalar>(coords.entries().begin(), coords.entries().end())},
            std::move(multiple), std::move(hyp), std::move(image_sources)});
      }
    }
    ScalarMatrix coeffs = reader.matrix("c", field, k, k);
    expect_pair("end", "level");
    trace.levels.push_back(TraceLevel{k, std::move(e), std::move(f), std::move(forward),
                                      std::move(base), std::move(steps), std::move(coeffs)});
  }
  reader.expect("end", 0);
  reader.expect_end();
  return trace;
}

}  // namespace framekit
