#include "orbitcode/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace orbitcode {

namespace {

using Poly = std::vector<uint64_t>;

uint64_t cmul(uint64_t a, uint64_t b, uint64_t p) {
    if (p < (uint64_t{1} << 32)) return a * b % p;
    return mulmod(a, b, p);
}

uint64_t csub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

// a*b mod f, f monic ascending of length n+1; inputs may carry any length
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
    const size_t n = f.size() - 1;
    if (a.empty() || b.empty()) return Poly(n, 0);
    Poly tmp(std::max(a.size() + b.size() - 1, n), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            tmp[i + j] = (tmp[i + j] + cmul(a[i], b[j], p)) % p;
        }
    }
    for (size_t d = tmp.size() - 1; d + 1 > n; --d) {
        uint64_t c = tmp[d];
        if (c == 0) continue;
        tmp[d] = 0;
        for (size_t j = 0; j < n; ++j)
            tmp[d - n + j] = csub(tmp[d - n + j], cmul(c, f[j], p), p);
    }
    tmp.resize(n);
    return tmp;
}

Poly poly_pow_mod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
    const size_t n = f.size() - 1;
    Poly result(n, 0);
    result[0] = 1 % p;
    while (e) {
        if (e & 1) result = poly_mul_mod(result, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& b, uint64_t p) {
    poly_trim(a);
    uint64_t inv_lead = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
        uint64_t c = cmul(a.back(), inv_lead, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = csub(a[shift + i], cmul(c, b[i], p), p);
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f of degree n is irreducible over F_p iff x^(p^n) = x (mod f)
// and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool is_irreducible(const Poly& f, uint64_t p) {
    const unsigned n = static_cast<unsigned>(f.size()) - 1;
    if (n == 1) return true;
    // x^(p^n) via n successive p-th powers keeps every exponent within 64 bits
    Poly xq = {0, 1};
    for (unsigned i = 0; i < n; ++i) xq = poly_pow_mod(xq, p, f, p);
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = csub(diff[1], 1, p);
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (const auto& [r, e] : factorize_u64(n)) {
        (void)e;
        Poly xr = {0, 1};
        for (unsigned i = 0; i < n / r; ++i) xr = poly_pow_mod(xr, p, f, p);
        Poly d = xr;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = csub(d[1], 1, p);
        Poly g = poly_gcd(f, d, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

FieldCtxPtr FieldContext::make(uint64_t p, unsigned n, std::vector<uint64_t> modulus,
                               FieldOptions options) {
    if (!is_prime_u64(p)) throw Error(ErrorCode::NonPrimeCharacteristic);
    if (n == 0 || modulus.size() != n + 1)
        throw Error(ErrorCode::NonMonicOrWrongDegree, "need n+1 ascending coefficients");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1)
        throw Error(ErrorCode::NonMonicOrWrongDegree, "leading coefficient must be 1");
    auto pn = checked_pow(p, n);
    if (!pn) throw Error(ErrorCode::GroupOrderOverflow, "q^n - 1 exceeds 2^63");
    if (!is_irreducible(modulus, p)) throw Error(ErrorCode::ReducibleModulus);

    auto ctx = std::make_shared<FieldContext>(Private{});
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->modulus_ = std::move(modulus);
    ctx->group_order_ = *pn - 1;
    ctx->factorization_ = factorize_u64(ctx->group_order_);

    Poly alpha_poly = poly_mul_mod({0, 1 % p}, {1 % p}, ctx->modulus_, p);
    FieldElement alpha(ctx, alpha_poly);

    bool primitive = !alpha.is_zero();
    for (const auto& [r, e] : ctx->factorization_) {
        (void)e;
        if (alpha.pow(ctx->group_order_ / r).is_one()) { primitive = false; break; }
    }
    ctx->alpha_primitive_ = primitive;

    if (primitive && ctx->group_order_ <= options.dlog_table_limit) {
        auto& table = ctx->dlog_table_;
        table.assign(*pn, UINT64_MAX);
        FieldElement g = ctx->one();
        for (uint64_t i = 0; i < ctx->group_order_; ++i) {
            table[g.encode()] = i;
            g = g * alpha;
        }
    }
    return ctx;
}

FieldCtxPtr FieldContext::make(uint64_t p, unsigned n, std::string_view modulus_text,
                               FieldOptions options) {
    std::vector<uint64_t> coeffs;
    std::string token;
    std::istringstream in{std::string(modulus_text)};
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        coeffs.push_back(std::stoull(token));
    }
    return make(p, n, std::move(coeffs), options);
}

FieldCtxPtr FieldContext::make_default(uint64_t p, unsigned n, FieldOptions options) {
    if (!is_prime_u64(p)) throw Error(ErrorCode::NonPrimeCharacteristic);
    if (n == 0) throw Error(ErrorCode::NonMonicOrWrongDegree);
    auto pn = checked_pow(p, n);
    if (!pn) throw Error(ErrorCode::GroupOrderOverflow);
    std::vector<uint64_t> coeffs(n + 1, 0);
    coeffs[n] = 1;
    // low coefficients as a base-p odometer; c0 = 0 always reducible
    for (uint64_t v = 1; v < *pn; ++v) {
        uint64_t rest = v;
        for (unsigned i = 0; i < n; ++i) {
            coeffs[i] = rest % p;
            rest /= p;
        }
        if (coeffs[0] == 0) continue;
        try {
            auto ctx = make(p, n, coeffs, options);
            if (ctx->alpha_primitive()) return ctx;
        } catch (const Error& err) {
            if (err.code() != ErrorCode::ReducibleModulus) throw;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no primitive modulus found");
}

std::string FieldContext::modulus_text() const {
    std::string out;
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(modulus_[i]);
    }
    return out;
}

FieldElement FieldContext::zero() const {
    return FieldElement(shared_from_this(), std::vector<uint64_t>(n_, 0));
}

FieldElement FieldContext::one() const {
    std::vector<uint64_t> c(n_, 0);
    c[0] = 1 % p_;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldContext::alpha() const {
    return FieldElement(shared_from_this(), poly_mul_mod({0, 1 % p_}, {1 % p_}, modulus_, p_));
}

FieldElement FieldContext::element(std::vector<uint64_t> coeffs) const {
    if (coeffs.size() > n_)
        throw Error(ErrorCode::InvalidArgument, "coefficient vector longer than n");
    coeffs.resize(n_, 0);
    for (auto& c : coeffs) c %= p_;
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldContext::element_from_string(std::string_view text) const {
    std::vector<uint64_t> coeffs;
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    uint64_t v;
    while (in >> v) coeffs.push_back(v);
    return element(std::move(coeffs));
}

void FieldContext::require_primitive() const {
    if (!alpha_primitive_) throw Error(ErrorCode::NonPrimitiveAlpha);
}

FieldElement FieldContext::exp(uint64_t i) const {
    require_primitive();
    return alpha().pow(group_order_ == 0 ? 0 : i % group_order_);
}

uint64_t FieldContext::dlog(const FieldElement& x) const {
    require_primitive();
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement);
    if (x.context().get() != this) throw Error(ErrorCode::MixedContexts);
    if (!dlog_table_.empty()) return dlog_table_[x.encode()];
    // Baby-step giant-step, stateless: the table-backed path covers
    // dlog-heavy workloads by construction.
    const uint64_t N = group_order_;
    const uint64_t m = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(N)))) + 1;
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(m);
    FieldElement g = one();
    FieldElement a = alpha();
    for (uint64_t j = 0; j < m; ++j) {
        baby.emplace(g.encode(), j);
        g = g * a;
    }
    FieldElement factor = a.pow(N - (m % N));  // alpha^(-m)
    FieldElement y = x;
    for (uint64_t i = 0; i * m <= N + m; ++i) {
        auto it = baby.find(y.encode());
        if (it != baby.end()) return (i * m + it->second) % N;
        y = y * factor;
    }
    throw Error(ErrorCode::InvalidArgument, "dlog: element not in <alpha>");
}

FieldElement FieldContext::subfield_generator(unsigned t) const {
    if (t == 0 || n_ % t != 0) throw Error(ErrorCode::NonDivisorDegree);
    require_primitive();
    uint64_t qt = *checked_pow(p_, t);
    return exp(group_order_ / (qt - 1));
}

FieldElement FieldContext::subfield_algebra_generator(unsigned t) const {
    if (t == 0 || n_ % t != 0) throw Error(ErrorCode::NonDivisorDegree);
    if (t == 1) return one();
    if (t == n_) return alpha();  // min poly of x-bar is the modulus, degree n
    if (alpha_primitive_) return subfield_generator(t);

    // Fallback for non-primitive alpha: F_{q^t} is the kernel of Frob^t - I,
    // an F_q-linear map; search it for an element of degree exactly t.
    const unsigned n = n_;
    const uint64_t p = p_;
    std::vector<uint64_t> m(n * n, 0);  // column j = coeffs of (alpha^j)^(q^t) - alpha^j
    for (unsigned j = 0; j < n; ++j) {
        std::vector<uint64_t> basis(n, 0);
        basis[j] = 1;
        FieldElement e(shared_from_this(), std::move(basis));
        for (unsigned i = 0; i < t; ++i) e = e.frobenius();
        for (unsigned i = 0; i < n; ++i) {
            uint64_t v = e.coeffs()[i];
            if (i == j) v = csub(v, 1, p);
            m[i * n + j] = v;
        }
    }
    // Kernel via Gauss-Jordan on the n x n matrix.
    std::vector<unsigned> pivot_col;
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
        unsigned piv = rank;
        while (piv < n && m[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        for (unsigned j = 0; j < n; ++j) std::swap(m[rank * n + j], m[piv * n + j]);
        uint64_t inv = powmod(m[rank * n + col], p - 2, p);
        for (unsigned j = 0; j < n; ++j) m[rank * n + j] = cmul(m[rank * n + j], inv, p);
        for (unsigned r = 0; r < n; ++r) {
            if (r == rank || m[r * n + col] == 0) continue;
            uint64_t c = m[r * n + col];
            for (unsigned j = 0; j < n; ++j)
                m[r * n + j] = csub(m[r * n + j], cmul(c, m[rank * n + j], p), p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<FieldElement> kernel_basis;
    std::vector<bool> is_pivot(n, false);
    for (unsigned c : pivot_col) is_pivot[c] = true;
    for (unsigned free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint64_t> v(n, 0);
        v[free] = 1;
        for (unsigned r = 0; r < rank; ++r)
            v[pivot_col[r]] = csub(0, m[r * n + free], p);
        kernel_basis.emplace_back(FieldElement(shared_from_this(), std::move(v)));
    }
    // kernel has dimension t; walk its elements until one has degree t
    auto qt = checked_pow(p, t);
    if (!qt || *qt > (uint64_t{1} << 20))
        throw Error(ErrorCode::EnumerationTooLarge, "subfield too large to search");
    for (const auto& b : kernel_basis)
        if (b.degree() == t) return b;
    std::vector<uint64_t> odo(kernel_basis.size(), 0);
    while (true) {
        size_t i = 0;
        while (i < odo.size() && odo[i] + 1 == p) { odo[i] = 0; ++i; }
        if (i == odo.size()) break;
        ++odo[i];
        FieldElement cand = zero();
        for (size_t j = 0; j < odo.size(); ++j) {
            if (odo[j] == 0) continue;
            std::vector<uint64_t> s(n, 0);
            s[0] = odo[j];
            cand = cand + kernel_basis[j] * FieldElement(shared_from_this(), std::move(s));
        }
        if (!cand.is_zero() && cand.degree() == t) return cand;
    }
    throw Error(ErrorCode::InvalidArgument, "no algebra generator found");
}

// ---------------------------------------------------------------------------

void FieldElement::check_same(const FieldElement& rhs) const {
    if (!ctx_ || !rhs.ctx_) throw Error(ErrorCode::MixedContexts, "uninitialized element");
    if (ctx_.get() != rhs.ctx_.get()) throw Error(ErrorCode::MixedContexts);
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (!ctx_ || c_.empty()) return false;
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](uint64_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    check_same(rhs);
    std::vector<uint64_t> out(c_.size());
    const uint64_t p = ctx_->p_;
    for (size_t i = 0; i < c_.size(); ++i) out[i] = (c_[i] + rhs.c_[i]) % p;
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    check_same(rhs);
    std::vector<uint64_t> out(c_.size());
    const uint64_t p = ctx_->p_;
    for (size_t i = 0; i < c_.size(); ++i) out[i] = csub(c_[i], rhs.c_[i], p);
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    if (!ctx_) throw Error(ErrorCode::MixedContexts, "uninitialized element");
    std::vector<uint64_t> out(c_.size());
    const uint64_t p = ctx_->p_;
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] ? p - c_[i] : 0;
    return FieldElement(ctx_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    check_same(rhs);
    return FieldElement(ctx_, poly_mul_mod(c_, rhs.c_, ctx_->modulus_, ctx_->p_));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero);
    return pow(ctx_->group_order_ - 1);  // a^(q^n - 2)
}

FieldElement FieldElement::pow(uint64_t e) const {
    if (!ctx_) throw Error(ErrorCode::MixedContexts, "uninitialized element");
    return FieldElement(ctx_, poly_pow_mod(c_, e, ctx_->modulus_, ctx_->p_));
}

FieldElement FieldElement::frobenius() const { return pow(ctx_->p_); }

bool FieldElement::operator==(const FieldElement& rhs) const {
    check_same(rhs);
    return c_ == rhs.c_;
}

uint64_t FieldElement::order() const {
    if (is_zero()) throw Error(ErrorCode::ZeroElement);
    uint64_t e = ctx_->group_order_;
    for (const auto& [pr, ex] : ctx_->factorization_) {
        for (unsigned i = 0; i < ex; ++i) {
            if (e % pr == 0 && pow(e / pr).is_one())
                e /= pr;
            else
                break;
        }
    }
    return e;
}

unsigned FieldElement::degree() const {
    if (!ctx_) throw Error(ErrorCode::MixedContexts, "uninitialized element");
    FieldElement y = *this;
    for (unsigned d = 1; d <= ctx_->n_; ++d) {
        y = y.frobenius();
        if (y == *this) return d;
    }
    throw Error(ErrorCode::InvalidArgument, "degree: Frobenius orbit did not close");
}

bool FieldElement::in_subfield(unsigned t) const {
    if (!ctx_) throw Error(ErrorCode::MixedContexts, "uninitialized element");
    if (t == 0 || ctx_->n_ % t != 0) throw Error(ErrorCode::NonDivisorDegree);
    FieldElement y = *this;
    for (unsigned i = 0; i < t; ++i) y = y.frobenius();
    return y == *this;
}

uint64_t FieldElement::encode() const {
    uint64_t acc = 0;
    uint64_t scale = 1;
    const uint64_t p = ctx_->p_;
    for (size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * scale;
        if (i + 1 < c_.size()) scale *= p;
    }
    return acc;
}

std::string FieldElement::to_string() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

}  // namespace orbitcode
