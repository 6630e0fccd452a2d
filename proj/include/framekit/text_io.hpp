#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "framekit/lemma.hpp"

// Plain-text formats. All of them are line oriented, `\n` terminated, with
// whitespace separated tokens; lines whose first non-blank character is `#`
// and blank lines are ignored. Scalars are written in canonical form.
//
// Matrix file (rows are the vectors of a sequence):
//   field gf <p> | field q
//   dims <rows> <cols>
//   <rows lines of <cols> scalars>
//
// Inclusion certificate (e_i = sum_j C[j][i] f_j):
//   certificate inclusion
//   field ...
//   frames <n> <m>
//   e <m scalars>   (n lines)
//   f <m scalars>   (n lines)
//   c <n scalars>   (n lines, row j of C)
//   end
//
// Proof trace: see render_trace; one `level <k>` ... `end level` block per
// induction level, one `map <i>` ... `end map` block per exchange map.
namespace framekit {

// `source` prefixes diagnostics ("<source>:<line>:<col>: ...").
VecSequence parse_matrix_text(std::string_view text, std::string_view source);
VecSequence parse_matrix_file(const std::filesystem::path& path);
std::string render_matrix(const VecSequence& seq);

std::string render_certificate(const InclusionCertificate& cert);
InclusionCertificate parse_certificate(std::string_view text,
                                       std::string_view source);

std::string render_trace(const ProofTrace& trace);
ProofTrace parse_trace(std::string_view text, std::string_view source);

// Whole file as a string; InputError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace framekit
