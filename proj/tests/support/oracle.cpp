#include "oracle.hpp"

#include <cstdint>

namespace ybh::test {

std::size_t dense_rank(const ExactMatrix& m) {
    auto a = m.to_dense();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        Scalar inv = a[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c] * inv;
            for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::size_t dense_rank_mod_p(const ExactMatrix& m) {
    const std::uint64_t p = m.field().characteristic();
    if (p == 0) throw InputError("dense_rank_mod_p needs a prime field");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, v] : m.column(j)) a[i][j] = v.residue_value();
    auto power = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        for (b %= p; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        std::uint64_t inv = power(a[rank][c], p - 2);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            std::uint64_t f = a[r][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] + (p - f) * a[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

TensorMap map_of(const FieldSpec& k, std::size_t dim, int in, int out,
                 std::initializer_list<std::tuple<std::size_t, std::size_t, long>> entries) {
    TensorMap f(k, dim, in, out);
    for (const auto& [r, c, v] : entries) f.set(r, c, Scalar::from_int(k, v));
    return f;
}

std::vector<std::pair<std::string, BraidedAlgebra>> fixtures_up_to(const FieldSpec& k, std::size_t max_dim) {
    std::vector<std::pair<std::string, BraidedAlgebra>> out;
    for (const auto& info : braided_fixtures())
        if (info.dim <= max_dim && fixture_defined(info, k)) out.emplace_back(info.name, make_fixture(info.name, k));
    return out;
}

std::string fixture_path(const std::string& file) { return std::string(YBH_FIXTURE_DIR) + "/" + file; }

}  // namespace ybh::test
