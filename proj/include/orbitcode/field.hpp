#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcode/errors.hpp"
#include "orbitcode/intmath.hpp"

namespace orbitcode {

class FieldContext;
class FieldElement;
using FieldCtxPtr = std::shared_ptr<const FieldContext>;

struct FieldOptions {
    /// Build the full discrete-log table when q^n - 1 is at most this.
    uint64_t dlog_table_limit = uint64_t{1} << 20;
};

/// The ambient field F_{q^n} = F_q[x]/(f), q prime, f monic irreducible of
/// degree n. Immutable after construction and freely shareable across
/// threads; every element operation is a pure function.
///
/// Elements are coefficient vectors in the power basis {1, a, ..., a^(n-1)}
/// where a is the residue class of x. All exponent arithmetic is 64-bit;
/// construction rejects q^n - 1 > 2^63.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    /// Validates primality, monicity, degree and irreducibility; factors
    /// q^n - 1; tests whether a = x-bar is primitive; builds the dlog table
    /// when the group is small enough and a is primitive.
    ///
    /// Throws NonPrimeCharacteristic, NonMonicOrWrongDegree,
    /// ReducibleModulus, GroupOrderOverflow.
    static FieldCtxPtr make(uint64_t p, unsigned n, std::vector<uint64_t> modulus,
                            FieldOptions options = {});

    /// Modulus given as comma-separated ascending coefficients,
    /// e.g. x^2+x+1 over F_2 is "1,1,1".
    static FieldCtxPtr make(uint64_t p, unsigned n, std::string_view modulus_text,
                            FieldOptions options = {});

    /// First monic degree-n modulus, in lexicographic coefficient order,
    /// that is irreducible with a primitive root.
    static FieldCtxPtr make_default(uint64_t p, unsigned n, FieldOptions options = {});

    uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }
    std::string modulus_text() const;
    uint64_t group_order() const { return group_order_; }  // q^n - 1
    const Factorization& group_order_factorization() const { return factorization_; }
    bool alpha_primitive() const { return alpha_primitive_; }
    bool has_dlog_table() const { return !dlog_table_.empty(); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const;  // the residue class of x
    /// Coefficients are reduced mod p; shorter vectors are zero-padded.
    FieldElement element(std::vector<uint64_t> coeffs) const;
    /// Parses "c0,c1,..." or "c0 c1 ...".
    FieldElement element_from_string(std::string_view text) const;

    /// alpha^(i mod (q^n - 1)). Requires primitive alpha.
    FieldElement exp(uint64_t i) const;
    /// Inverse of exp: table lookup when available, baby-step giant-step
    /// otherwise. Requires primitive alpha and x != 0.
    uint64_t dlog(const FieldElement& x) const;

    /// alpha^((q^n-1)/(q^t-1)), a generator of F_{q^t}^*. Requires t | n and
    /// primitive alpha.
    FieldElement subfield_generator(unsigned t) const;

    /// An element generating F_{q^t} as an F_q-algebra (degree exactly t).
    /// Uses subfield_generator when alpha is primitive, otherwise searches
    /// the Frobenius fixed space; works for any valid context.
    FieldElement subfield_algebra_generator(unsigned t) const;

    friend class FieldElement;

private:
    struct Private {};

public:
    explicit FieldContext(Private) {}

private:
    void require_primitive() const;

    uint64_t p_ = 0;
    unsigned n_ = 0;
    std::vector<uint64_t> modulus_;  // ascending, length n+1, monic
    uint64_t group_order_ = 0;
    Factorization factorization_;
    bool alpha_primitive_ = false;
    std::vector<uint64_t> dlog_table_;  // indexed by mixed-radix encoding; UINT64_MAX at 0
};

/// One element of F_{q^n}: n residues mod p, ascending powers of alpha.
/// Carries a shared handle to its context; operations on elements from
/// different contexts throw MixedContexts.
class FieldElement {
public:
    FieldElement() = default;

    const FieldCtxPtr& context() const { return ctx_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& rhs) const;
    /// Multiplicative inverse via a^(q^n - 2). Throws DivisionByZero on 0.
    FieldElement inverse() const;
    FieldElement operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }
    /// Square-and-multiply; exponent is a plain 64-bit integer.
    FieldElement pow(uint64_t e) const;
    /// x^q (h = 1, so q = p).
    FieldElement frobenius() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Least m >= 1 with x^m = 1, via prime-by-prime exponent reduction of
    /// q^n - 1. Throws ZeroElement on 0.
    uint64_t order() const;

    /// Degree of the minimal polynomial over F_q: least d >= 1 with
    /// x^(q^d) = x. Always divides n; degree(0) = 1.
    unsigned degree() const;

    /// True iff x lies in the subfield F_{q^t}, i.e. x^(q^t) = x.
    /// Throws NonDivisorDegree unless t | n.
    bool in_subfield(unsigned t) const;

    /// Mixed-radix encoding sum c_i * p^i; a bijection onto [0, q^n).
    uint64_t encode() const;

    std::string to_string() const;  // "c0,c1,...,c_{n-1}"

private:
    friend class FieldContext;
    FieldElement(FieldCtxPtr ctx, std::vector<uint64_t> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {}

    void check_same(const FieldElement& rhs) const;

    FieldCtxPtr ctx_;
    std::vector<uint64_t> c_;
};

}  // namespace orbitcode
