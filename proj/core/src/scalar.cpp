#include "ybh/scalar.hpp"

#include <ostream>

#include "ybh/errors.hpp"

namespace ybh {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2) mod p.
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 31) || !is_prime(p))
        throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
    FieldSpec k;
    k.kind_ = Kind::prime;
    k.p_ = static_cast<std::uint32_t>(p);
    return k;
}

std::string FieldSpec::name() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& k) { return from_int(k, 0); }
Scalar Scalar::one(const FieldSpec& k) { return from_int(k, 1); }

Scalar Scalar::from_int(const FieldSpec& k, long n) {
    if (k.is_rational()) return Scalar(mpq_class(n));
    long p = k.characteristic();
    long r = n % p;
    if (r < 0) r += p;
    return Scalar(Residue{static_cast<std::uint32_t>(r), k.characteristic()});
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t p) {
    return Scalar(Residue{static_cast<std::uint32_t>(value % p), p});
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& k) {
    std::string s(text);
    auto bad = [&](std::size_t pos) { return ParseError("malformed scalar '" + s + "'", pos); };
    if (s.empty()) throw bad(0);
    auto slash = s.find('/');
    std::string num_text = s.substr(0, slash);
    std::string den_text = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!valid(num_text, true)) throw bad(0);
    if (!valid(den_text, false)) throw bad(slash + 1);
    if (num_text[0] == '+') num_text.erase(0, 1);
    mpz_class num(num_text), den(den_text);
    if (den == 0) throw bad(slash + 1);
    if (k.is_rational()) return rational(num, den);
    std::uint32_t p = k.characteristic();
    std::uint32_t d = reduce(den, p);
    if (d == 0) throw InputError("denominator of '" + s + "' vanishes mod " + std::to_string(p));
    std::uint64_t v = static_cast<std::uint64_t>(reduce(num, p)) * mod_inverse(d, p) % p;
    return Scalar(Residue{static_cast<std::uint32_t>(v), p});
}

FieldSpec Scalar::field() const {
    if (auto r = std::get_if<Residue>(&v_)) return FieldSpec(FieldSpec::Kind::prime, r->p);
    return FieldSpec::rational();
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
    return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<mpq_class>(v_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    const Residue* a = std::get_if<Residue>(&v_);
    const Residue* b = std::get_if<Residue>(&o.v_);
    if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
        throw InputError("scalar field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator-() const {
    if (auto r = std::get_if<Residue>(&v_))
        return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t(r->value) + std::get<Residue>(o.v_).value;
        r->value = static_cast<std::uint32_t>(s >= r->p ? s - r->p : s);
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint32_t b = std::get<Residue>(o.v_).value;
        r->value = r->value >= b ? r->value - b : r->value + (r->p - b);
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        r->value = static_cast<std::uint32_t>(std::uint64_t(r->value) * std::get<Residue>(o.v_).value % r->p);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    if (auto r = std::get_if<Residue>(&v_)) return Scalar(Residue{mod_inverse(r->value, r->p), r->p});
    return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    const auto* ra = std::get_if<Scalar::Residue>(&a.v_);
    const auto* rb = std::get_if<Scalar::Residue>(&b.v_);
    if (ra && rb) return ra->p == rb->p && ra->value == rb->value;
    if (!ra && !rb) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return false;
}

std::uint32_t Scalar::residue_value() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value;
    throw UnsupportedRingError("residue_value on a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q;
    throw UnsupportedRingError("rational_value on a residue");
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

TruncatedScalar::TruncatedScalar(const FieldSpec& k, std::size_t order)
    : field_(k), coeffs_(order, Scalar::zero(k)) {
    if (order == 0) throw InputError("truncation order must be positive");
}

TruncatedScalar::TruncatedScalar(std::vector<Scalar> coeffs, const FieldSpec& k)
    : field_(k), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InputError("truncation order must be positive");
    for (const auto& c : coeffs_)
        if (c.field() != k) throw InputError("coefficient field mismatch in truncated scalar");
}

TruncatedScalar TruncatedScalar::constant(const Scalar& c, std::size_t order) {
    TruncatedScalar t(c.field(), order);
    t.coeffs_[0] = c;
    return t;
}

TruncatedScalar TruncatedScalar::hbar(const FieldSpec& k, std::size_t order) {
    TruncatedScalar t(k, order);
    if (order > 1) t.coeffs_[1] = Scalar::one(k);
    return t;
}

TruncatedScalar TruncatedScalar::parse(const std::vector<std::string>& coeffs, const FieldSpec& k) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Scalar::parse(s, k));
    return TruncatedScalar(std::move(c), k);
}

const Scalar& TruncatedScalar::coefficient(std::size_t j) const {
    if (j >= coeffs_.size())
        throw InputError("hbar degree " + std::to_string(j) + " beyond truncation order " +
                         std::to_string(coeffs_.size()));
    return coeffs_[j];
}

bool TruncatedScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void TruncatedScalar::require_compatible(const TruncatedScalar& o) const {
    if (field_ != o.field_) throw InputError("truncated scalar field mismatch");
    if (order() != o.order()) throw InputError("truncated scalar order mismatch");
}

TruncatedScalar TruncatedScalar::operator-() const {
    TruncatedScalar t(*this);
    for (auto& c : t.coeffs_) c = -c;
    return t;
}

TruncatedScalar& TruncatedScalar::operator+=(const TruncatedScalar& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedScalar& TruncatedScalar::operator-=(const TruncatedScalar& o) {
    require_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedScalar& TruncatedScalar::operator*=(const TruncatedScalar& o) {
    require_compatible(o);
    std::size_t m = coeffs_.size();
    std::vector<Scalar> out(m, Scalar::zero(field_));
    for (std::size_t i = 0; i < m; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < m; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedScalar TruncatedScalar::inverse() const {
    if (!is_unit()) throw InputError("truncated scalar with zero constant term is not invertible");
    std::size_t m = coeffs_.size();
    Scalar inv0 = coeffs_[0].inverse();
    std::vector<Scalar> out(m, Scalar::zero(field_));
    out[0] = inv0;
    for (std::size_t n = 1; n < m; ++n) {
        Scalar s = Scalar::zero(field_);
        for (std::size_t j = 1; j <= n; ++j) s += coeffs_[j] * out[n - j];
        out[n] = -(s * inv0);
    }
    return TruncatedScalar(std::move(out), field_);
}

bool operator==(const TruncatedScalar& a, const TruncatedScalar& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::vector<std::string> TruncatedScalar::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

}  // namespace ybh
