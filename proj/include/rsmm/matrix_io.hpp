#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rsmm/matrix.hpp"

namespace rsmm {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text format: first line "rows cols", then one line of whitespace-separated
// values per row. Values are written at 17 significant digits so a
// save/load round trip is bit-exact.
DenseMatrix read_matrix(std::istream& in, const std::string& origin = "<stream>");
DenseMatrix load_matrix(const std::string& path);
void write_matrix(std::ostream& out, const DenseMatrix& m);
void save_matrix(const std::string& path, const DenseMatrix& m);

}  // namespace rsmm
