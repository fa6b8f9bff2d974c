#include "rsmm/generators.hpp"

#include "rsmm/rng.hpp"

namespace rsmm {

DenseMatrix gen_gaussian(std::size_t rows, std::size_t cols,
                         std::uint64_t seed) {
    DenseMatrix m(rows, cols);
    rng::Engine eng(seed);
    for (auto& v : m.data()) v = rng::standard_normal(eng);
    return m;
}

DenseMatrix gen_low_rank(std::size_t rows, std::size_t cols, std::size_t rank,
                         std::uint64_t seed) {
    if (rank == 0) throw std::invalid_argument("gen_low_rank: rank must be positive");
    rng::Engine eng(seed);
    DenseMatrix left(rows, rank), right(cols, rank);
    for (auto& v : left.data()) v = rng::standard_normal(eng);
    for (auto& v : right.data()) v = rng::standard_normal(eng);
    return matmul_exact(left, right);  // rows x cols, rank <= rank
}

DenseMatrix gen_spiky(std::size_t rows, std::size_t cols, std::size_t rank,
                      std::uint64_t seed) {
    if (rank == 0 || rank > cols)
        throw std::invalid_argument("gen_spiky: rank must be in [1, cols]");
    DenseMatrix m(rows, cols);
    rng::Engine eng(seed);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            m(i, j) = rng::standard_normal(eng);
    return m;
}

DenseMatrix gen_coordinate(std::size_t rows, std::size_t cols) {
    if (rows > cols)
        throw std::invalid_argument("gen_coordinate: needs rows <= cols");
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix generate(const std::string& name, std::size_t rows,
                     std::size_t cols, std::size_t rank, std::uint64_t seed) {
    if (name == "gaussian") return gen_gaussian(rows, cols, seed);
    if (name == "low-rank") return gen_low_rank(rows, cols, rank, seed);
    if (name == "spiky") return gen_spiky(rows, cols, rank, seed);
    if (name == "coordinate") return gen_coordinate(rows, cols);
    throw std::invalid_argument("generate: unknown generator '" + name + "'");
}

}  // namespace rsmm
