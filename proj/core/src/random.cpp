#include "ybh/random.hpp"

namespace ybh {

Scalar random_scalar(Rng& rng, const FieldSpec& k) {
    if (!k.is_rational()) {
        std::uniform_int_distribution<long> dist(0, static_cast<long>(k.characteristic()) - 1);
        return Scalar::from_int(k, dist(rng));
    }
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    long n = num(rng);
    long m = den(rng);
    return Scalar::rational(n, m);
}

TensorMap random_map(Rng& rng, const FieldSpec& k, std::size_t dim, int in_arity, int out_arity, double density) {
    TensorMap f(k, dim, in_arity, out_arity);
    std::bernoulli_distribution keep(density);
    for (std::size_t c = 0; c < f.cols(); ++c)
        for (std::size_t r = 0; r < f.rows(); ++r)
            if (density >= 1.0 || keep(rng)) f.set(r, c, random_scalar(rng, k));
    return f;
}

Cochain2 random_cochain2(Rng& rng, const FieldSpec& k, std::size_t dim, double density) {
    auto phi = random_map(rng, k, dim, 2, 2, density);
    auto psi = random_map(rng, k, dim, 2, 1, density);
    return Cochain2{std::move(phi), std::move(psi)};
}

}  // namespace ybh
