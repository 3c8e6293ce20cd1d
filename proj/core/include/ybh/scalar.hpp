#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ybh {

// Either Q or F_p for a prime p < 2^31.
class FieldSpec {
public:
    enum class Kind { rational, prime };

    FieldSpec() = default;
    static FieldSpec rational() { return FieldSpec(); }
    static FieldSpec prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::rational; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    friend class Scalar;
    FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::rational;
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& k);
    static Scalar one(const FieldSpec& k);
    static Scalar from_int(const FieldSpec& k, long n);
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::uint64_t value, std::uint32_t p);
    // "a", "-a", "a/b" over Q; a decimal integer reduced mod p over F_p.
    static Scalar parse(std::string_view text, const FieldSpec& k);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    // Only valid over F_p.
    std::uint32_t residue_value() const;
    // Only valid over Q.
    const mpq_class& rational_value() const;

    std::string to_string() const;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t p;
    };
    explicit Scalar(Residue r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    void require_same_field(const Scalar& o) const;

    std::variant<Residue, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Element of k[hbar]/(hbar^m), stored as coefficients c_0..c_{m-1}.
class TruncatedScalar {
public:
    TruncatedScalar(const FieldSpec& k, std::size_t order);
    TruncatedScalar(std::vector<Scalar> coeffs, const FieldSpec& k);

    static TruncatedScalar constant(const Scalar& c, std::size_t order);
    static TruncatedScalar hbar(const FieldSpec& k, std::size_t order);
    // Parses ["c0","c1",...].
    static TruncatedScalar parse(const std::vector<std::string>& coeffs, const FieldSpec& k);

    const FieldSpec& field() const { return field_; }
    std::size_t order() const { return coeffs_.size(); }
    const Scalar& coefficient(std::size_t j) const;
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    bool is_zero() const;
    bool is_unit() const { return !coeffs_.empty() && !coeffs_[0].is_zero(); }

    TruncatedScalar operator-() const;
    TruncatedScalar& operator+=(const TruncatedScalar& o);
    TruncatedScalar& operator-=(const TruncatedScalar& o);
    TruncatedScalar& operator*=(const TruncatedScalar& o);
    TruncatedScalar inverse() const;

    friend TruncatedScalar operator+(TruncatedScalar a, const TruncatedScalar& b) { return a += b; }
    friend TruncatedScalar operator-(TruncatedScalar a, const TruncatedScalar& b) { return a -= b; }
    friend TruncatedScalar operator*(TruncatedScalar a, const TruncatedScalar& b) { return a *= b; }
    friend bool operator==(const TruncatedScalar& a, const TruncatedScalar& b);

    std::vector<std::string> to_strings() const;

private:
    void require_compatible(const TruncatedScalar& o) const;

    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

// Reduced fraction with positive denominator.
inline Scalar rational_normalize(const mpz_class& num, const mpz_class& den) { return Scalar::rational(num, den); }
inline TruncatedScalar truncated_mul(const TruncatedScalar& a, const TruncatedScalar& b) { return a * b; }
inline Scalar hbar_coefficient(const TruncatedScalar& a, std::size_t j) { return a.coefficient(j); }

}  // namespace ybh
