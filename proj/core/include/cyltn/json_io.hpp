#ifndef CYLTN_JSON_IO_HPP
#define CYLTN_JSON_IO_HPP

#include <string>

#include "cyltn/loop_matrix.hpp"
#include "cyltn/network.hpp"
#include "cyltn/tncheck.hpp"

namespace cyltn {

// JSON serialization. Output is canonical and byte-stable: compact one-line
// JSON, object keys in fixed order, Laurent degree keys sorted numerically,
// rationals rendered by rational_to_string. Parsers accept any key order and
// reject malformed or out-of-contract documents with std::invalid_argument.
//
// Schemas:
//   LoopMatrix  {"n": int, "m": int, "entries": [[{"<deg>": "<rat>"}...]...]}
//               where "<deg>" is a (possibly negative) decimal integer string
//               and the zero polynomial is the empty object {}.
//   DenseMatrix {"rows": int, "cols": int, "entries": [["<rat>"...]...]}
//   CylNetwork  {"vertices": int, "sources": [int...], "sinks": [int...],
//                "edges": [{"tail": int, "head": int, "weight": "<rat>",
//                           "hcross": int}...]}   (vertex ids 0-based)
//   MinorWitness{"rows": [int...], "cols": [int...], "value": "<rat>"}

std::string to_json(const LoopMatrix& m);
std::string to_json(const DenseMatrix& m);
std::string to_json(const CylNetwork& net);
std::string to_json(const MinorWitness& w);

LoopMatrix loop_matrix_from_json(const std::string& text);
DenseMatrix dense_matrix_from_json(const std::string& text);
CylNetwork network_from_json(const std::string& text);

// Whole-file helpers; throw std::runtime_error on IO failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cyltn

#endif
