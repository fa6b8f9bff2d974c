#include "rsmm/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rsmm {
namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

DenseMatrix read_matrix(std::istream& in, const std::string& origin) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) fail(origin, 1, "missing header line");
    ++lineno;
    std::istringstream hdr(line);
    long long rows = 0, cols = 0;
    if (!(hdr >> rows >> cols) || rows <= 0 || cols <= 0)
        fail(origin, lineno, "header must be 'rows cols' with positive integers");

    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(rows * cols));
    for (long long r = 0; r < rows; ++r) {
        if (!std::getline(in, line))
            fail(origin, lineno + 1, "unexpected end of file, expected row " +
                                         std::to_string(r + 1));
        ++lineno;
        std::istringstream row(line);
        double v;
        long long got = 0;
        while (row >> v) {
            data.push_back(v);
            ++got;
        }
        if (!row.eof()) fail(origin, lineno, "malformed value");
        if (got != cols)
            fail(origin, lineno,
                 "expected " + std::to_string(cols) + " values, got " +
                     std::to_string(got));
    }
    try {
        return DenseMatrix(static_cast<std::size_t>(rows),
                           static_cast<std::size_t>(cols), std::move(data));
    } catch (const std::invalid_argument& e) {
        fail(origin, lineno, e.what());
    }
}

DenseMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open for reading");
    return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    char buf[64];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            if (j) out << ' ';
            out << buf;
        }
        out << '\n';
    }
}

void save_matrix(const std::string& path, const DenseMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    write_matrix(out, m);
    if (!out) throw ParseError(path + ": write failed");
}

}  // namespace rsmm
