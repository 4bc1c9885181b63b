#ifndef QFV_JSON_IO_HPP
#define QFV_JSON_IO_HPP

#include <string>

#include "qfv/moduli.hpp"
#include "qfv/quiver.hpp"
#include "qfv/toric.hpp"

namespace qfv {

// Quiver document: {"vertices": n, "arrows": [[tail, head], ...],
// "dims": [1, r_1, ...]}. Vertex labels 0-based; arrow file order is
// preserved and fixes all downstream arrow indices. Throws
// Error(InvalidInput/LengthMismatch/...) on malformed input.
QuiverFlagSpec parse_spec_json(const std::string& text);
std::string spec_to_json(const QuiverFlagSpec& spec);

// Cox document: {"vars": ["x1", ...], "degrees": [[..], ...]}.
GradedCoxData parse_cox_json(const std::string& text);
std::string cox_to_json(const GradedCoxData& data);

// Representation document: array over arrows (file order) of row-major
// arrays of rational strings, each of length r_head * r_tail.
Representation parse_representation_json(const QuiverFlagSpec& spec,
                                         const std::string& text);

}  // namespace qfv

#endif  // QFV_JSON_IO_HPP
