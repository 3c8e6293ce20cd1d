#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ybh/tensor_map.hpp"

namespace ybh::detail {

// Dense scratch column with touched-row tracking; native residues over F_p.
class Accumulator {
public:
    Accumulator(const FieldSpec& k, std::size_t n)
        : field_(k), prime_(!k.is_rational()), p_(k.characteristic()), mark_(n, 0) {
        if (prime_)
            raw_.assign(n, 0);
        else
            q_.assign(n, mpq_class(0));
    }

    void add(std::uint32_t row, const Scalar& v) {
        touch(row);
        if (prime_) {
            raw_[row] += v.residue_value();
            if (raw_[row] >= p_) raw_[row] -= p_;
        } else {
            q_[row] += v.rational_value();
        }
    }

    void add_product(std::uint32_t row, const Scalar& a, const Scalar& b) {
        touch(row);
        if (prime_) {
            raw_[row] = (raw_[row] + std::uint64_t(a.residue_value()) * b.residue_value()) % p_;
        } else {
            q_[row] += a.rational_value() * b.rational_value();
        }
    }

    void drain(TensorMap::Column& out) {
        out.clear();
        std::sort(touched_.begin(), touched_.end());
        for (auto r : touched_) {
            mark_[r] = 0;
            if (prime_) {
                if (raw_[r]) out.push_back({r, Scalar::residue(raw_[r], p_)});
                raw_[r] = 0;
            } else {
                if (q_[r] != 0) out.push_back({r, Scalar::rational(q_[r])});
                q_[r] = 0;
            }
        }
        touched_.clear();
    }

private:
    void touch(std::uint32_t row) {
        if (!mark_[row]) {
            mark_[row] = 1;
            touched_.push_back(row);
        }
    }

    FieldSpec field_;
    bool prime_;
    std::uint32_t p_;
    std::vector<std::uint64_t> raw_;
    std::vector<mpq_class> q_;
    std::vector<char> mark_;
    std::vector<std::uint32_t> touched_;
};

}  // namespace ybh::detail
