#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padyn/errors.hpp"

namespace padyn {

using BigInt = boost::multiprecision::cpp_int;

// Exact rationals, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// boost 1.74's two-argument number ctor is not (num, den); go through division.
Rational make_rational(const BigInt& num, const BigInt& den);
inline Rational make_rational(long long num, long long den) {
    return make_rational(BigInt(num), BigInt(den));
}

bool is_prime(long long p);
std::vector<long long> primes_up_to(long long bound);

// p-adic valuation with +infinity for 0, kept as a small value type so that
// censored/interval arithmetic stays explicit.
struct Valuation {
    long long v = 0;
    bool infinite = false;

    static Valuation inf() { return {0, true}; }
    static Valuation of(long long x) { return {x, false}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation val_p(const BigInt& x, long long p);
Valuation val_p(const Rational& x, long long p);

// min over a list, with the ultrametric convention min(inf, v) = v.
Valuation val_min(const Valuation& a, const Valuation& b);

BigInt pow_bigint(const BigInt& base, unsigned long long exp);
BigInt mod_floor(const BigInt& a, const BigInt& m);  // result in [0, m)
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// ---------------------------------------------------------------------------
// Fixed-precision p-adic residues: the working model of Z_p.
// ---------------------------------------------------------------------------

class PrimeContext {
  public:
    PrimeContext(long long p, int precision);

    long long prime() const { return p_; }
    int precision() const { return prec_; }
    const BigInt& modulus() const { return pK_; }  // p^K

  private:
    long long p_;
    int prec_;
    BigInt pK_;
};

// Integer residue mod p^K with tracked precision.  Mixed-precision arithmetic
// follows min-precision semantics; any operation that would need more
// precision than available throws rather than fabricating digits.
class PadicApprox {
  public:
    PadicApprox() = default;
    PadicApprox(BigInt residue, long long p, int precision);
    PadicApprox(BigInt residue, const PrimeContext& ctx)
        : PadicApprox(std::move(residue), ctx.prime(), ctx.precision()) {}

    long long prime() const { return p_; }
    int precision() const { return prec_; }
    const BigInt& residue() const { return residue_; }

    bool is_zero() const { return residue_ == 0; }

    // Valuation of the residue; >= precision is censored (infinite = "≥ K").
    Valuation valuation() const;

    PadicApprox operator+(const PadicApprox& o) const;
    PadicApprox operator-(const PadicApprox& o) const;
    PadicApprox operator-() const;
    PadicApprox operator*(const PadicApprox& o) const;

    // Multiplicative inverse; requires a unit (valuation 0).
    PadicApprox inverse() const;

    // Exact division by p^s.  Loses s digits of precision; throws
    // NegativeValuation when the value is not divisible, PrecisionExhausted
    // when no precision would remain.
    PadicApprox shift_down(int s) const;

    PadicApprox with_precision(int newK) const;  // truncate (newK <= K)

    bool operator==(const PadicApprox& o) const;

    std::string str() const;

  private:
    BigInt residue_ = 0;
    long long p_ = 0;
    int prec_ = 0;
    BigInt pK_ = 1;
};

PadicApprox to_padic(const Rational& x, const PrimeContext& ctx);

// ---------------------------------------------------------------------------
// Finite fields F_{p^j} in a fixed polynomial basis.
// ---------------------------------------------------------------------------

// Deterministic monic irreducible of degree j over F_p: the one whose
// little-endian coefficient vector (c_0, ..., c_{j-1}) encodes the smallest
// integer c_0 + c_1 p + ... .  Returned as that vector with the leading 1
// appended (size j+1).
std::vector<long long> find_irreducible(long long p, int degree);

bool poly_is_irreducible_fp(const std::vector<long long>& monic, long long p);

class FqContext {
  public:
    static std::shared_ptr<const FqContext> make(long long p, int degree);

    long long characteristic() const { return p_; }
    int degree() const { return j_; }
    BigInt size() const { return pow_bigint(BigInt(p_), j_); }
    long long size_ll() const;  // throws if q does not fit
    const std::vector<long long>& modulus() const { return modulus_; }

  private:
    FqContext(long long p, int j, std::vector<long long> modulus)
        : p_(p), j_(j), modulus_(std::move(modulus)) {}
    long long p_;
    int j_;
    std::vector<long long> modulus_;
};

using FqCtxPtr = std::shared_ptr<const FqContext>;

class FqElem {
  public:
    FqElem() = default;
    FqElem(FqCtxPtr ctx, std::vector<long long> coeffs);  // reduced mod p, size j

    static FqElem zero(const FqCtxPtr& ctx);
    static FqElem one(const FqCtxPtr& ctx);
    static FqElem from_int(const FqCtxPtr& ctx, const BigInt& n);  // image of n
    // Element with index i in [0, q): base-p digits of i are the coordinates.
    static FqElem from_index(const FqCtxPtr& ctx, long long index);
    long long index() const;

    const FqCtxPtr& context() const { return ctx_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem inverse() const;
    FqElem pow(const BigInt& e) const;

    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FqCtxPtr ctx_;
    std::vector<long long> coeffs_;
};

// Least t >= 1 with a^t = 1; divides q - 1.
long long fq_order(const FqElem& a);

class MatrixFq {
  public:
    MatrixFq(FqCtxPtr ctx, int dim);  // zero matrix
    static MatrixFq identity(const FqCtxPtr& ctx, int dim);

    int dim() const { return dim_; }
    const FqCtxPtr& context() const { return ctx_; }

    FqElem& at(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
    const FqElem& at(int r, int c) const { return entries_[static_cast<size_t>(r) * dim_ + c]; }

    MatrixFq operator*(const MatrixFq& o) const;
    MatrixFq operator-(const MatrixFq& o) const;
    FqElem det() const;
    bool is_identity() const;
    bool is_zero() const;

    bool operator==(const MatrixFq& o) const;

  private:
    FqCtxPtr ctx_;
    int dim_;
    std::vector<FqElem> entries_;
};

// Least t >= 1 with M^t = I; bounded by q^dim - 1 (throws SingularMatrix when
// det M = 0, which downstream treats as the superattracting case).
long long matrix_order(const MatrixFq& m);

}  // namespace padyn
