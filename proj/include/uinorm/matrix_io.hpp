#pragma once
//
// Matrix file format: {"rows": r, "cols": c, "entries": [[re, im], ...]}
// row-major. Parsing rejects NaN/Inf and length mismatches.
//

#include <string>

#include "uinorm/matrix.hpp"

namespace uinorm {

ComplexMatrix matrix_from_json_text(const std::string& text);
ComplexMatrix matrix_from_json_file(const std::string& path);

std::string matrix_to_json_text(const ComplexMatrix& a);
void matrix_to_json_file(const ComplexMatrix& a, const std::string& path);

}  // namespace uinorm
