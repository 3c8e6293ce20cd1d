#pragma once

#include <optional>
#include <vector>

#include "ybh/scalar.hpp"
#include "ybh/tensor_map.hpp"

namespace ybh {

// A map over k[hbar]/(hbar^m): f_0 + f_1 hbar + ... + f_{m-1} hbar^{m-1}.
class HbarMap {
public:
    explicit HbarMap(std::vector<TensorMap> coefficients);
    // f + 0 hbar + ... (order m).
    HbarMap(const TensorMap& constant, std::size_t order);

    static HbarMap identity(const FieldSpec& k, std::size_t dim, int arity, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const FieldSpec& field() const { return coeffs_.front().field(); }
    std::size_t dim() const { return coeffs_.front().dim(); }
    int in_arity() const { return coeffs_.front().in_arity(); }
    int out_arity() const { return coeffs_.front().out_arity(); }
    const TensorMap& coefficient(std::size_t j) const;
    const std::vector<TensorMap>& coefficients() const { return coeffs_; }

    TruncatedScalar at(std::size_t row, std::size_t col) const;
    bool is_zero() const;
    // Smallest j with a nonzero hbar^j coefficient.
    std::optional<std::size_t> leading_degree() const;

    HbarMap operator-() const;
    HbarMap& operator+=(const HbarMap& o);
    HbarMap& operator-=(const HbarMap& o);
    friend HbarMap operator+(HbarMap a, const HbarMap& b) { return a += b; }
    friend HbarMap operator-(HbarMap a, const HbarMap& b) { return a -= b; }
    friend bool operator==(const HbarMap& a, const HbarMap& b) { return a.coeffs_ == b.coeffs_; }

private:
    void require_compatible(const HbarMap& o) const;
    std::vector<TensorMap> coeffs_;
};

HbarMap compose(const HbarMap& f, const HbarMap& g);
template <class... Rest>
HbarMap compose(const HbarMap& f, const HbarMap& g, const Rest&... rest) {
    return compose(f, compose(g, rest...));
}

HbarMap tensor(const HbarMap& f, const HbarMap& g);
template <class... Rest>
HbarMap tensor(const HbarMap& f, const HbarMap& g, const Rest&... rest) {
    return tensor(tensor(f, g), rest...);
}

}  // namespace ybh
