#include "ybh/cohomology.hpp"

#include <cstdlib>
#include <string>

#include "ybh/errors.hpp"

namespace ybh {

namespace {

TensorMap id(const TensorMap& like, int n = 1) { return TensorMap::identity(like.field(), like.dim(), n); }

void require_arity(const TensorMap& f, int in, int out, const char* what) {
    if (f.in_arity() != in || f.out_arity() != out)
        throw ArityError(std::string(what) + " expects a " + std::to_string(in) + "->" + std::to_string(out) +
                         " cochain, got " + std::to_string(f.in_arity()) + "->" + std::to_string(f.out_arity()));
}

}  // namespace

TensorMap hochschild_differential(const TensorMap& mu, int degree, const TensorMap& c) {
    require_arity(mu, 2, 1, "multiplication");
    auto i1 = id(mu);
    switch (degree) {
        case 0:
            require_arity(c, 0, 1, "Hochschild d0");
            return compose(mu, tensor(i1, c)) - compose(mu, tensor(c, i1));
        case 1:
            require_arity(c, 1, 1, "Hochschild d1");
            return compose(mu, tensor(c, i1)) + compose(mu, tensor(i1, c)) - compose(c, mu);
        case 2:
            require_arity(c, 2, 1, "Hochschild d2");
            return compose(mu, tensor(c, i1)) + compose(c, tensor(mu, i1)) - compose(mu, tensor(i1, c)) -
                   compose(c, tensor(i1, mu));
        case 3:
            require_arity(c, 3, 1, "Hochschild d3");
            return compose(mu, tensor(i1, c)) - compose(c, tensor(mu, i1, i1)) + compose(c, tensor(i1, mu, i1)) -
                   compose(c, tensor(i1, i1, mu)) + compose(mu, tensor(c, i1));
        default:
            throw InputError("Hochschild differential degree must be 0..3");
    }
}

TensorMap yang_baxter_differential(const TensorMap& r, int degree, const TensorMap& c) {
    require_arity(r, 2, 2, "braiding");
    auto i1 = id(r);
    if (degree == 1) {
        require_arity(c, 1, 1, "Yang-Baxter d1");
        return compose(r, tensor(c, i1)) + compose(r, tensor(i1, c)) - compose(tensor(c, i1), r) -
               compose(tensor(i1, c), r);
    }
    if (degree == 2) {
        require_arity(c, 2, 2, "Yang-Baxter d2");
        auto r1 = tensor(r, i1), r2 = tensor(i1, r), c1 = tensor(c, i1), c2 = tensor(i1, c);
        return compose(c1, r2, r1) + compose(r1, c2, r1) + compose(r1, r2, c1) - compose(c2, r1, r2) -
               compose(r2, c1, r2) - compose(r2, r1, c2);
    }
    throw InputError("Yang-Baxter differential degree must be 1 or 2 (use yb_differential_d3 for 3)");
}

MixedD2 mixed_differential_d2(const BraidedAlgebra& b, const Cochain2& c) {
    require_arity(c.phi, 2, 2, "phi");
    require_arity(c.psi, 2, 1, "psi");
    const auto& mu = b.mu();
    const auto& r = b.R();
    auto i1 = id(mu);
    auto r1 = tensor(r, i1), r2 = tensor(i1, r);
    auto m1 = tensor(mu, i1), m2 = tensor(i1, mu);
    auto p1 = tensor(c.phi, i1), p2 = tensor(i1, c.phi);
    MixedD2 out{TensorMap(b.field(), b.dim(), 3, 2), TensorMap(b.field(), b.dim(), 3, 2)};
    out.yi = compose(tensor(c.psi, i1), r2, r1) + compose(m1, p2, r1) + compose(m1, r2, p1) -
             compose(r, tensor(i1, c.psi)) - compose(c.phi, m2);
    out.iy = compose(tensor(i1, c.psi), r1, r2) + compose(m2, p1, r2) + compose(m2, r1, p2) -
             compose(r, tensor(c.psi, i1)) - compose(c.phi, m1);
    return out;
}

Cochain2 delta1(const BraidedAlgebra& b, const TensorMap& f) {
    require_arity(f, 1, 1, "delta1");
    return Cochain2{yang_baxter_differential(b.R(), 1, f), hochschild_differential(b.mu(), 1, f)};
}

Cochain3 delta2(const BraidedAlgebra& b, const Cochain2& c) {
    auto mixed = mixed_differential_d2(b, c);
    return Cochain3{yang_baxter_differential(b.R(), 2, c.phi), std::move(mixed.yi), std::move(mixed.iy),
                    hochschild_differential(b.mu(), 2, c.psi)};
}

// Composites of mu and R on up to four strands, shared by every evaluation.
struct Delta3::Context {
    TensorMap mu, r, i1;
    TensorMap r1, r2;               // R(x)1, 1(x)R on three strands
    TensorMap s1, s2, s3;           // R on strands (1,2), (2,3), (3,4)
    TensorMap m1, m2;               // mu(x)1, 1(x)mu
    TensorMap m11, m1_1, m_11;      // mu(x)1(x)1, 1(x)mu(x)1, 1(x)1(x)mu
    TensorMap s3s2, s2s1, s1s2, s1s2s3, r1r2, m_11_s2s1;
    struct Move {
        TensorMap prefix;
        int low;
        TensorMap suffix;
        bool positive;
    };
    std::vector<Move> loop;

    explicit Context(const TensorMap& mu_, const TensorMap& r_)
        : mu(mu_), r(r_), i1(id(mu_)), r1(tensor(r, i1)), r2(tensor(i1, r)), s1(tensor(r, i1, i1)),
          s2(tensor(i1, r, i1)), s3(tensor(i1, i1, r)), m1(tensor(mu, i1)), m2(tensor(i1, mu)),
          m11(tensor(mu, i1, i1)), m1_1(tensor(i1, mu, i1)), m_11(tensor(i1, i1, mu)), s3s2(compose(s3, s2)),
          s2s1(compose(s2, s1)), s1s2(compose(s1, s2)), s1s2s3(compose(s1, s2, s3)), r1r2(compose(r1, r2)),
          m_11_s2s1(compose(m_11, s2, s1)) {
        // Reduced words of the longest element of S_4 around one closed loop.
        static const char* words[] = {"121321", "123121", "123212", "132312", "312312", "312132", "321232", "321323",
                                      "323123", "232123", "231213", "213213", "213231", "212321", "121321"};
        auto word = [&](const std::string& w) {
            TensorMap m = id(mu, 4);
            for (char ch : w) m = compose(m, ch == '1' ? s1 : ch == '2' ? s2 : s3);
            return m;
        };
        for (std::size_t t = 0; t + 1 < std::size(words); ++t) {
            std::string u = words[t], v = words[t + 1];
            std::size_t first = u.size(), count = 0;
            for (std::size_t p = 0; p < u.size(); ++p)
                if (u[p] != v[p]) {
                    if (first == u.size()) first = p;
                    ++count;
                }
            if (count == 2) continue;  // commutation move
            int i = u[first] - '0', j = u[first + 1] - '0';
            int low = std::min(i, j);
            loop.push_back(Move{word(u.substr(0, first)), low, word(u.substr(first + 3)), i == low});
        }
    }

    // Components of the family built on the (1(x)mu)(R(x)1)(1(x)R) = R(mu(x)1) shape.
    TensorMap d31(const TensorMap& beta, const TensorMap& a) const {
        auto a1 = tensor(a, i1), a2 = tensor(i1, a);
        auto b1 = tensor(beta, i1), b2 = tensor(i1, beta);
        return compose(m_11, b1, s3s2) + compose(m_11_s2s1, b2) - compose(r1, a2, s1s2) - compose(r1r2, a1) +
               compose(a2, s1s2s3) + compose(r2, a1, s3) - compose(beta, m11);
    }

    TensorMap d32(const TensorMap& a, const TensorMap& ap) const {
        return compose(ap, m11) + compose(m1, tensor(i1, a), s1s2) + compose(m1, r2, tensor(a, i1)) -
               compose(a, m_11) - compose(m2, tensor(ap, i1), s3s2) - compose(m2, r1, tensor(i1, ap));
    }

    TensorMap d33(const TensorMap& a, const TensorMap& g) const {
        return compose(r, tensor(g, i1)) - compose(tensor(i1, g), s1s2s3) - compose(m2, r1, tensor(i1, a)) -
               compose(a, m1_1) + compose(m2, tensor(a, i1), s3) + compose(a, m11);
    }

    TensorMap dyb(const TensorMap& beta) const {
        TensorMap out(mu.field(), mu.dim(), 4, 4);
        if (beta.is_zero()) return out;
        auto b1 = tensor(beta, i1), b2 = tensor(i1, beta);
        for (const auto& mv : loop) {
            auto term = compose(mv.prefix, mv.low == 1 ? b1 : b2, mv.suffix);
            if (mv.positive)
                out += term;
            else
                out -= term;
        }
        return out;
    }
};

Delta3::Delta3(const BraidedAlgebra& b)
    : self_(std::make_unique<Context>(b.mu(), b.R())),
      mirrored_(std::make_unique<Context>(mirror_map(b.mu()), mirror_map(b.R()))) {}

Delta3::~Delta3() = default;
Delta3::Delta3(Delta3&&) noexcept = default;

Cochain4 Delta3::mixed(const Cochain3& c) const {
    require_arity(c.beta, 3, 3, "beta");
    require_arity(c.alpha_yi, 3, 2, "alpha_yi");
    require_arity(c.alpha_iy, 3, 2, "alpha_iy");
    require_arity(c.gamma, 3, 1, "gamma");
    const auto& k = c.beta.field();
    std::size_t d = c.beta.dim();
    // The yi family is the mirror image of the iy family: mirroring swaps the two
    // mixed defects and negates the Yang-Baxter and associativity defects.
    auto m_beta = -mirror_map(c.beta);
    auto m_ayi = mirror_map(c.alpha_yi);
    auto m_aiy = mirror_map(c.alpha_iy);
    auto m_gamma = -mirror_map(c.gamma);
    Cochain4 out{TensorMap(k, d, 4, 4),
                 mirror_map(mirrored_->d31(m_beta, m_ayi)),
                 self_->d31(c.beta, c.alpha_iy),
                 mirror_map(mirrored_->d32(m_ayi, m_aiy)),
                 self_->d32(c.alpha_iy, c.alpha_yi),
                 mirror_map(mirrored_->d33(m_ayi, m_gamma)),
                 self_->d33(c.alpha_iy, c.gamma),
                 TensorMap(k, d, 4, 1)};
    return out;
}

Cochain4 Delta3::operator()(const Cochain3& c) const {
    Cochain4 out = mixed(c);
    out.yb = self_->dyb(c.beta);
    out.hochschild = hochschild_differential(self_->mu, 3, c.gamma);
    return out;
}

Cochain4 delta3(const BraidedAlgebra& b, const Cochain3& c) { return Delta3(b)(c); }

std::vector<TensorMap> mixed_differential_d3(const BraidedAlgebra& b, const Cochain3& c) {
    auto m = Delta3(b).mixed(c);
    return {m.d31_yi, m.d31_iy, m.d32_yi, m.d32_iy, m.d33_yi, m.d33_iy};
}

TensorMap yb_differential_d3(const TensorMap& r, const TensorMap& beta) {
    require_arity(r, 2, 2, "braiding");
    require_arity(beta, 3, 3, "yb_differential_d3");
    // The loop only involves R; any multiplication of the right shape will do.
    TensorMap mu(r.field(), r.dim(), 2, 1);
    return Delta3::Context(mu, r).dyb(beta);
}

DimensionGuard DimensionGuard::from_env() {
    DimensionGuard g;
    if (const char* env = std::getenv("YBH_MAX_DIM")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw InputError("YBH_MAX_DIM must be a positive integer");
        g.degree2 = g.degree3 = v;
    }
    return g;
}

void DimensionGuard::require(std::size_t dim, int degree) const {
    std::size_t limit = degree >= 3 ? degree3 : degree2;
    if (dim > limit)
        throw ResourceError("dimension " + std::to_string(dim) + " exceeds the degree-" + std::to_string(degree) +
                            " limit " + std::to_string(limit) + "; raise it with --max-dim or YBH_MAX_DIM");
}

namespace {

TensorMap basis_map(const FieldSpec& k, std::size_t d, int in, int out, std::size_t pos) {
    std::size_t cols = ipow(d, in);
    return TensorMap::unit_entry(k, d, in, out, pos / cols, pos % cols);
}

Cochain2 basis_cochain2(const FieldSpec& k, std::size_t d, std::size_t pos) {
    Cochain2 c = Cochain2::zero(k, d);
    std::size_t n_phi = ipow(d, 4);
    if (pos < n_phi)
        c.phi = basis_map(k, d, 2, 2, pos);
    else
        c.psi = basis_map(k, d, 2, 1, pos - n_phi);
    return c;
}

Cochain3 basis_cochain3(const FieldSpec& k, std::size_t d, std::size_t pos) {
    Cochain3 c = Cochain3::zero(k, d);
    std::size_t nb = ipow(d, 6), na = ipow(d, 5);
    if (pos < nb)
        c.beta = basis_map(k, d, 3, 3, pos);
    else if (pos < nb + na)
        c.alpha_yi = basis_map(k, d, 3, 2, pos - nb);
    else if (pos < nb + 2 * na)
        c.alpha_iy = basis_map(k, d, 3, 2, pos - nb - na);
    else
        c.gamma = basis_map(k, d, 3, 1, pos - nb - 2 * na);
    return c;
}

ExactMatrix build_d3(const BraidedAlgebra& b, const DimensionGuard& guard, bool shared) {
    b.require_braided("differential_matrix");
    guard.require(b.dim(), 3);
    const std::size_t d = b.dim();
    Delta3 op(b);
    std::vector<SparseVector> cols;
    for (std::size_t pos = 0; pos < Cochain3::size(d); ++pos) {
        auto img = op(basis_cochain3(b.field(), d, pos));
        cols.push_back(shared ? img.flatten_shared() : img.flatten());
    }
    return ExactMatrix::from_columns(b.field(), shared ? Cochain4::shared_size(d) : Cochain4::size(d), cols);
}

}  // namespace

ExactMatrix differential_matrix(const BraidedAlgebra& b, int degree, const DimensionGuard& guard) {
    const std::size_t d = b.dim();
    const FieldSpec& k = b.field();
    if (degree == 3) return build_d3(b, guard, false);
    b.require_braided("differential_matrix");
    guard.require(d, 2);
    std::vector<SparseVector> cols;
    if (degree == 1) {
        for (std::size_t pos = 0; pos < d * d; ++pos) cols.push_back(delta1(b, basis_map(k, d, 1, 1, pos)).flatten());
        return ExactMatrix::from_columns(k, Cochain2::size(d), cols);
    }
    if (degree == 2) {
        for (std::size_t pos = 0; pos < Cochain2::size(d); ++pos)
            cols.push_back(delta2(b, basis_cochain2(k, d, pos)).flatten());
        return ExactMatrix::from_columns(k, Cochain3::size(d), cols);
    }
    throw InputError("differential_matrix degree must be 1, 2 or 3");
}

ExactMatrix differential_matrix_d3_shared(const BraidedAlgebra& b, const DimensionGuard& guard) {
    return build_d3(b, guard, true);
}

ComplexSlice::ComplexSlice(const BraidedAlgebra& b, const DimensionGuard& guard)
    : b_(b), d1_(differential_matrix(b, 1, guard)), d2_(differential_matrix(b, 2, guard)), d3_(b) {}

const std::vector<Cochain2>& ComplexSlice::cocycle_basis() const {
    if (!cocycles_) {
        std::vector<Cochain2> out;
        for (const auto& v : kernel_basis(d2_)) out.push_back(Cochain2::unflatten(v, b_.field(), b_.dim()));
        rank_d2_ = d2_.cols() - out.size();
        cocycles_ = std::move(out);
    }
    return *cocycles_;
}

const std::vector<Cochain2>& ComplexSlice::coboundary_basis() const {
    if (!coboundaries_) {
        std::vector<Cochain2> out;
        for (auto j : rref(d1_).pivots) {
            auto col = to_dense(d1_.column(j), d1_.rows(), b_.field());
            auto c = Cochain2::unflatten(col, b_.field(), b_.dim());
            if (!is_cocycle(c)) throw InternalError("coboundary is not a cocycle");
            out.push_back(std::move(c));
        }
        coboundaries_ = std::move(out);
    }
    return *coboundaries_;
}

std::size_t ComplexSlice::rank_d1() const { return coboundary_basis().size(); }

std::size_t ComplexSlice::rank_d2() const {
    if (!rank_d2_) rank_d2_ = rank(d2_);
    return *rank_d2_;
}

bool ComplexSlice::is_cocycle(const Cochain2& c) const { return delta2(b_, c).is_zero(); }

CohomologySummary ComplexSlice::summary(bool with_degree3, const DimensionGuard& guard) const {
    CohomologySummary s;
    const std::size_t d = b_.dim();
    s.dim = d;
    s.c1_dim = d * d;
    s.c2_dim = Cochain2::size(d);
    s.c3_dim = Cochain3::size(d);
    s.rank_d1 = rank_d1();
    s.dim_z2 = cocycle_basis().size();
    s.rank_d2 = rank_d2();
    s.dim_b2 = s.rank_d1;
    s.h2 = s.dim_z2 - s.dim_b2;
    if (with_degree3) {
        Degree3Summary t;
        t.c4_dim = Cochain4::size(d);
        t.c4_shared_dim = Cochain4::shared_size(d);
        t.rank_d3 = rank(build_d3(b_, guard, false));
        t.rank_d3_shared = rank(build_d3(b_, guard, true));
        t.dim_z3 = s.c3_dim - t.rank_d3;
        t.dim_z3_shared = s.c3_dim - t.rank_d3_shared;
        if (t.dim_z3 < s.rank_d2) throw InternalError("image of D2 is not inside the kernel of D3");
        t.h3 = t.dim_z3 - s.rank_d2;
        t.h3_shared = t.dim_z3_shared - s.rank_d2;
        s.degree3 = t;
    }
    return s;
}

std::vector<Cochain2> cocycle_basis(const BraidedAlgebra& b, const DimensionGuard& guard) {
    return ComplexSlice(b, guard).cocycle_basis();
}

std::vector<Cochain2> coboundary_basis(const BraidedAlgebra& b, const DimensionGuard& guard) {
    return ComplexSlice(b, guard).coboundary_basis();
}

std::size_t cohomology_dimension(const BraidedAlgebra& b, int degree, const DimensionGuard& guard) {
    if (degree == 2) return ComplexSlice(b, guard).h2();
    if (degree == 3) return h3_dimension(b, guard);
    throw InputError("cohomology_dimension supports degrees 2 and 3");
}

std::size_t h3_dimension(const BraidedAlgebra& b, const DimensionGuard& guard) {
    guard.require(b.dim(), 3);
    return ComplexSlice(b, guard).summary(true, guard).degree3->h3;
}

BraidedAlgebra twisted_algebra(const BraidedAlgebra& b) {
    auto mu_r = braided_multiplication(b, 1);
    return BraidedAlgebra(AssociativeAlgebra(mu_r, std::nullopt, b.algebra().labels()), b.yb());
}

Cochain2 iota_r(const BraidedAlgebra& b, const Cochain2& c) {
    b.require_braided("iota_r");
    if (!delta2(b, c).is_zero()) throw PreconditionError("iota_r needs a 2-cocycle");
    return Cochain2{c.phi, compose(b.mu(), c.phi) + compose(c.psi, b.R())};
}

}  // namespace ybh
