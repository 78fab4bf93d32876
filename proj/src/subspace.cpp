#include "orbitcode/subspace.hpp"

#include <algorithm>
#include <numeric>

namespace orbitcode {

namespace {

uint64_t csub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t cmul(uint64_t a, uint64_t b, uint64_t p) {
    if (p < (uint64_t{1} << 32)) return a * b % p;
    return mulmod(a, b, p);
}

// In-place reduced row echelon form; returns rank. Rows come out
// pivot-sorted with zero rows compacted to the bottom.
unsigned rref_inplace(std::vector<uint64_t>& m, unsigned rows, unsigned cols, uint64_t p) {
    unsigned rank = 0;
    for (unsigned col = 0; col < cols && rank < rows; ++col) {
        unsigned piv = rank;
        while (piv < rows && m[piv * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (unsigned j = 0; j < cols; ++j) std::swap(m[rank * cols + j], m[piv * cols + j]);
        uint64_t inv = powmod(m[rank * cols + col], p - 2, p);
        if (inv != 1)
            for (unsigned j = col; j < cols; ++j)
                m[rank * cols + j] = cmul(m[rank * cols + j], inv, p);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank) continue;
            uint64_t c = m[r * cols + col];
            if (c == 0) continue;
            for (unsigned j = col; j < cols; ++j)
                m[r * cols + j] = csub(m[r * cols + j], cmul(c, m[rank * cols + j], p), p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

unsigned Subspace::ambient_dimension() const { return ctx_ ? ctx_->n() : 0; }

void Subspace::check_same(const Subspace& rhs) const {
    if (!ctx_ || !rhs.ctx_) throw Error(ErrorCode::MixedContexts, "uninitialized subspace");
    if (ctx_.get() != rhs.ctx_.get()) throw Error(ErrorCode::MixedContexts);
}

Subspace Subspace::zero(FieldCtxPtr ctx) { return Subspace(std::move(ctx), {}, 0); }

Subspace Subspace::full(FieldCtxPtr ctx) {
    const unsigned n = ctx->n();
    std::vector<uint64_t> flat(static_cast<size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i) flat[i * n + i] = 1;
    return Subspace(std::move(ctx), std::move(flat), n);
}

Subspace Subspace::span(std::span<const FieldElement> gens) {
    if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "span of empty list needs a context; use Subspace::zero");
    const FieldCtxPtr& ctx = gens.front().context();
    if (!ctx) throw Error(ErrorCode::MixedContexts, "uninitialized element");
    for (const auto& g : gens)
        if (g.context().get() != ctx.get()) throw Error(ErrorCode::MixedContexts);
    const unsigned n = ctx->n();
    std::vector<uint64_t> m;
    m.reserve(gens.size() * n);
    for (const auto& g : gens) m.insert(m.end(), g.coeffs().begin(), g.coeffs().end());
    unsigned rank = rref_inplace(m, static_cast<unsigned>(gens.size()), n, ctx->p());
    m.resize(static_cast<size_t>(rank) * n);
    return Subspace(ctx, std::move(m), rank);
}

Subspace Subspace::span(std::initializer_list<FieldElement> gens) {
    return span(std::span<const FieldElement>(gens.begin(), gens.size()));
}

Subspace Subspace::span(FieldCtxPtr ctx, std::span<const FieldElement> gens) {
    if (gens.empty()) return zero(std::move(ctx));
    for (const auto& g : gens)
        if (g.context().get() != ctx.get()) throw Error(ErrorCode::MixedContexts);
    return span(gens);
}

Subspace Subspace::from_rows(FieldCtxPtr ctx, const std::vector<std::vector<uint64_t>>& rows) {
    const unsigned n = ctx->n();
    const uint64_t p = ctx->p();
    std::vector<uint64_t> m;
    m.reserve(rows.size() * n);
    for (const auto& r : rows) {
        if (r.size() > n) throw Error(ErrorCode::InvalidArgument, "row longer than n");
        for (unsigned j = 0; j < n; ++j) m.push_back(j < r.size() ? r[j] % p : 0);
    }
    unsigned rank = rref_inplace(m, static_cast<unsigned>(rows.size()), n, p);
    m.resize(static_cast<size_t>(rank) * n);
    return Subspace(std::move(ctx), std::move(m), rank);
}

FieldElement Subspace::basis_element(unsigned row) const {
    if (row >= k_) throw Error(ErrorCode::InvalidArgument, "basis row out of range");
    const unsigned n = ambient_dimension();
    std::vector<uint64_t> coeffs(flat_.begin() + static_cast<size_t>(row) * n,
                                 flat_.begin() + static_cast<size_t>(row + 1) * n);
    return ctx_->element(std::move(coeffs));
}

std::vector<FieldElement> Subspace::basis_elements() const {
    std::vector<FieldElement> out;
    out.reserve(k_);
    for (unsigned i = 0; i < k_; ++i) out.push_back(basis_element(i));
    return out;
}

bool Subspace::contains(const FieldElement& x) const {
    if (!ctx_ || !x.context()) throw Error(ErrorCode::MixedContexts, "uninitialized operand");
    if (ctx_.get() != x.context().get()) throw Error(ErrorCode::MixedContexts);
    const unsigned n = ambient_dimension();
    const uint64_t p = ctx_->p();
    std::vector<uint64_t> v = x.coeffs();
    for (unsigned r = 0; r < k_; ++r) {
        // pivot column of row r = first nonzero entry
        unsigned pc = 0;
        while (pc < n && flat_[r * n + pc] == 0) ++pc;
        if (pc == n) continue;
        uint64_t c = v[pc];
        if (c == 0) continue;
        for (unsigned j = pc; j < n; ++j) v[j] = csub(v[j], cmul(c, flat_[r * n + j], p), p);
    }
    return std::all_of(v.begin(), v.end(), [](uint64_t c) { return c == 0; });
}

bool Subspace::contains_subspace(const Subspace& other) const {
    check_same(other);
    if (other.k_ > k_) return false;
    for (unsigned r = 0; r < other.k_; ++r)
        if (!contains(other.basis_element(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& rhs) const {
    check_same(rhs);
    const unsigned n = ambient_dimension();
    std::vector<uint64_t> m;
    m.reserve(flat_.size() + rhs.flat_.size());
    m.insert(m.end(), flat_.begin(), flat_.end());
    m.insert(m.end(), rhs.flat_.begin(), rhs.flat_.end());
    unsigned rank = rref_inplace(m, k_ + rhs.k_, n, ctx_->p());
    m.resize(static_cast<size_t>(rank) * n);
    return Subspace(ctx_, std::move(m), rank);
}

Subspace Subspace::intersect(const Subspace& rhs) const {
    check_same(rhs);
    const unsigned n = ambient_dimension();
    const uint64_t p = ctx_->p();
    // Zassenhaus: reduce [U|U ; V|0]; rows with zero left half carry a basis
    // of the intersection in their right half.
    const unsigned rows = k_ + rhs.k_;
    std::vector<uint64_t> m(static_cast<size_t>(rows) * 2 * n, 0);
    for (unsigned r = 0; r < k_; ++r)
        for (unsigned j = 0; j < n; ++j) {
            m[r * 2 * n + j] = flat_[r * n + j];
            m[r * 2 * n + n + j] = flat_[r * n + j];
        }
    for (unsigned r = 0; r < rhs.k_; ++r)
        for (unsigned j = 0; j < n; ++j) m[(k_ + r) * 2 * n + j] = rhs.flat_[r * n + j];
    unsigned rank = rref_inplace(m, rows, 2 * n, p);
    std::vector<uint64_t> inter;
    unsigned sum_dim = 0;
    for (unsigned r = 0; r < rank; ++r) {
        bool left_zero = true;
        for (unsigned j = 0; j < n; ++j)
            if (m[r * 2 * n + j] != 0) { left_zero = false; break; }
        if (left_zero)
            inter.insert(inter.end(), m.begin() + r * 2 * n + n, m.begin() + (r + 1) * 2 * n);
        else
            ++sum_dim;
    }
    unsigned ik = static_cast<unsigned>(inter.size() / n);
    unsigned irank = rref_inplace(inter, ik, n, p);
    inter.resize(static_cast<size_t>(irank) * n);
    // dim(U cap V) = dim U + dim V - dim(U + V), exactly
    if (irank != k_ + rhs.k_ - sum_dim)
        throw Error(ErrorCode::InvalidArgument, "intersection rank mismatch");
    return Subspace(ctx_, std::move(inter), irank);
}

Subspace Subspace::scaled(const FieldElement& x) const {
    if (!ctx_ || !x.context()) throw Error(ErrorCode::MixedContexts, "uninitialized operand");
    if (ctx_.get() != x.context().get()) throw Error(ErrorCode::MixedContexts);
    if (x.is_zero()) throw Error(ErrorCode::ZeroScalar);
    std::vector<FieldElement> rows;
    rows.reserve(k_);
    for (unsigned r = 0; r < k_; ++r) rows.push_back(basis_element(r) * x);
    if (rows.empty()) return *this;  // zero subspace is fixed by every shift
    return span(rows);
}

std::optional<uint64_t> Subspace::element_count() const {
    return ctx_ ? checked_pow(ctx_->p(), k_) : std::optional<uint64_t>{1};
}

std::vector<FieldElement> Subspace::elements(uint64_t cap) const {
    auto count = element_count();
    if (!count || *count > cap) throw Error(ErrorCode::EnumerationTooLarge);
    std::vector<FieldElement> out;
    out.reserve(*count);
    const uint64_t p = ctx_->p();
    std::vector<uint64_t> odo(k_, 0);
    std::vector<FieldElement> basis = basis_elements();
    while (true) {
        FieldElement acc = ctx_->zero();
        for (unsigned i = 0; i < k_; ++i) {
            if (odo[i] == 0) continue;
            std::vector<uint64_t> s(ctx_->n(), 0);
            s[0] = odo[i];
            acc = acc + basis[i] * ctx_->element(std::move(s));
        }
        out.push_back(std::move(acc));
        unsigned i = 0;
        while (i < k_ && odo[i] + 1 == p) { odo[i] = 0; ++i; }
        if (i == k_) break;
        ++odo[i];
    }
    return out;
}

bool Subspace::operator==(const Subspace& rhs) const {
    check_same(rhs);
    return k_ == rhs.k_ && flat_ == rhs.flat_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& rhs) const {
    check_same(rhs);
    if (auto c = k_ <=> rhs.k_; c != 0) return c;
    return flat_ <=> rhs.flat_;
}

std::string Subspace::to_string() const {
    const unsigned n = ambient_dimension();
    std::string out;
    for (unsigned r = 0; r < k_; ++r) {
        if (r) out += ';';
        out += '(';
        for (unsigned j = 0; j < n; ++j) {
            if (j) out += ' ';
            out += std::to_string(flat_[r * n + j]);
        }
        out += ')';
    }
    if (k_ == 0) out = "(zero)";
    return out;
}

unsigned subspace_distance(const Subspace& u, const Subspace& v) {
    return u.dimension() + v.dimension() - 2 * u.intersect(v).dimension();
}

std::optional<uint64_t> qbinomial(uint64_t q, unsigned n, unsigned k) {
    if (k > n) return 0;
    // Multiplicative form of the q-binomial via Gaussian recursion in u128
    unsigned __int128 acc = 1;
    const unsigned __int128 limit = ~static_cast<unsigned __int128>(0) >> 8;
    // [n k]_q = prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(i+1) - 1); compute as
    // an exact integer by interleaving multiply and divide.
    for (unsigned i = 0; i < k; ++i) {
        unsigned __int128 num = 1;
        for (unsigned j = 0; j < n - i; ++j) {
            num *= q;
            if (num > limit) return std::nullopt;
        }
        acc *= num - 1;
        if (acc > limit) return std::nullopt;
        unsigned __int128 den = 1;
        for (unsigned j = 0; j < i + 1; ++j) den *= q;
        acc /= den - 1;
    }
    if (acc > UINT64_MAX) return std::nullopt;
    return static_cast<uint64_t>(acc);
}

Subspace subfield_subspace(const FieldCtxPtr& ctx, unsigned t) {
    if (t == 0 || ctx->n() % t != 0) throw Error(ErrorCode::NonDivisorDegree);
    const unsigned n = ctx->n();
    const uint64_t p = ctx->p();
    // Kernel of Frob^t - I over F_q, columns indexed by the power basis.
    std::vector<uint64_t> m(static_cast<size_t>(n) * n, 0);
    for (unsigned j = 0; j < n; ++j) {
        std::vector<uint64_t> basis(n, 0);
        basis[j] = 1;
        FieldElement e = ctx->element(std::move(basis));
        for (unsigned i = 0; i < t; ++i) e = e.frobenius();
        for (unsigned i = 0; i < n; ++i) {
            uint64_t v = e.coeffs()[i];
            if (i == j) v = csub(v, 1, p);
            m[static_cast<size_t>(i) * n + j] = v;
        }
    }
    unsigned rank = rref_inplace(m, n, n, p);
    // Nullspace basis from the RREF of the map's matrix.
    std::vector<bool> is_pivot(n, false);
    std::vector<unsigned> pivot_of_row(rank, 0);
    for (unsigned r = 0; r < rank; ++r) {
        unsigned pc = 0;
        while (pc < n && m[r * n + pc] == 0) ++pc;
        pivot_of_row[r] = pc;
        is_pivot[pc] = true;
    }
    std::vector<std::vector<uint64_t>> rows;
    for (unsigned free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint64_t> v(n, 0);
        v[free] = 1;
        for (unsigned r = 0; r < rank; ++r)
            v[pivot_of_row[r]] = csub(0, m[r * n + free], p);
        rows.push_back(std::move(v));
    }
    return Subspace::from_rows(ctx, rows);
}

// ---------------------------------------------------------------------------

GrassmannianStream::GrassmannianStream(FieldCtxPtr ctx, unsigned k, uint64_t cap)
    : ctx_(std::move(ctx)), k_(k) {
    const unsigned n = ctx_->n();
    if (k > n) throw Error(ErrorCode::InvalidArgument, "k exceeds n");
    auto count = qbinomial(ctx_->p(), n, k);
    if (!count || *count > cap) throw Error(ErrorCode::EnumerationTooLarge);
    total_ = *count;
    pivots_.resize(k);
    std::iota(pivots_.begin(), pivots_.end(), 0u);
    fresh_pattern_ = true;
    done_ = (k == 0);  // the k = 0 stream still yields the zero subspace once
}

bool GrassmannianStream::advance_pattern() {
    const unsigned n = ctx_->n();
    // next k-combination of {0..n-1} in lexicographic order
    int i = static_cast<int>(k_) - 1;
    while (i >= 0 && pivots_[i] == n - k_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (unsigned j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    return true;
}

std::optional<Subspace> GrassmannianStream::next() {
    const unsigned n = ctx_->n();
    const uint64_t p = ctx_->p();
    if (k_ == 0) {
        if (done_ && !fresh_pattern_) return std::nullopt;
        if (fresh_pattern_) { fresh_pattern_ = false; return Subspace::zero(ctx_); }
        return std::nullopt;
    }
    if (done_) return std::nullopt;
    if (fresh_pattern_) {
        // free cells: row r, columns past pivots_[r] that are not pivots
        free_cells_.clear();
        std::vector<bool> is_pivot(n, false);
        for (unsigned c : pivots_) is_pivot[c] = true;
        for (unsigned r = 0; r < k_; ++r)
            for (unsigned c = pivots_[r] + 1; c < n; ++c)
                if (!is_pivot[c]) { free_cells_.push_back(r); free_cells_.push_back(c); }
        cells_.assign(free_cells_.size() / 2, 0);
        fresh_pattern_ = false;
    }
    // emit current state
    std::vector<uint64_t> flat(static_cast<size_t>(k_) * n, 0);
    for (unsigned r = 0; r < k_; ++r) flat[r * n + pivots_[r]] = 1;
    for (size_t i = 0; i < cells_.size(); ++i)
        flat[free_cells_[2 * i] * n + free_cells_[2 * i + 1]] = cells_[i];
    Subspace out(ctx_, std::move(flat), k_);
    // advance odometer
    size_t i = 0;
    while (i < cells_.size() && cells_[i] + 1 == p) { cells_[i] = 0; ++i; }
    if (i < cells_.size()) {
        ++cells_[i];
    } else {
        if (!advance_pattern()) done_ = true;
        else fresh_pattern_ = true;
    }
    return out;
}

void for_each_subspace(const FieldCtxPtr& ctx, unsigned k, uint64_t cap,
                       const std::function<void(const Subspace&)>& fn) {
    GrassmannianStream stream(ctx, k, cap);
    while (auto s = stream.next()) fn(*s);
}

namespace {

// Unbiased draw from [0, bound); avoids std distributions so results are
// identical across standard libraries for a fixed mt19937_64 seed.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do { r = rng(); } while (r >= limit);
    return r % bound;
}

}  // namespace

Subspace random_subspace(const FieldCtxPtr& ctx, unsigned k, std::mt19937_64& rng) {
    const unsigned n = ctx->n();
    const uint64_t p = ctx->p();
    if (k > n) throw Error(ErrorCode::InvalidArgument, "k exceeds n");
    if (k == 0) return Subspace::zero(ctx);
    // enumerate pivot patterns with weights q^(#free cells); the weighted
    // pattern draw makes the sample uniform over all of G_q(n,k)
    std::vector<std::vector<unsigned>> patterns;
    std::vector<uint64_t> weights;
    uint64_t total = 0;
    std::vector<unsigned> piv(k);
    std::iota(piv.begin(), piv.end(), 0u);
    while (true) {
        std::vector<bool> is_pivot(n, false);
        for (unsigned c : piv) is_pivot[c] = true;
        unsigned cells = 0;
        for (unsigned r = 0; r < k; ++r)
            for (unsigned c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) ++cells;
        auto w = checked_pow(p, cells);
        if (!w || total > UINT64_MAX - *w) throw Error(ErrorCode::EnumerationTooLarge);
        patterns.push_back(piv);
        weights.push_back(*w);
        total += *w;
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (unsigned j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    uint64_t draw = uniform_below(rng, total);
    size_t idx = 0;
    while (draw >= weights[idx]) { draw -= weights[idx]; ++idx; }
    const auto& pattern = patterns[idx];
    std::vector<bool> is_pivot(n, false);
    for (unsigned c : pattern) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> rows(k, std::vector<uint64_t>(n, 0));
    for (unsigned r = 0; r < k; ++r) {
        rows[r][pattern[r]] = 1;
        for (unsigned c = pattern[r] + 1; c < n; ++c)
            if (!is_pivot[c]) rows[r][c] = uniform_below(rng, p);
    }
    return Subspace::from_rows(ctx, rows);
}

FieldElement random_nonzero_element(const FieldCtxPtr& ctx, std::mt19937_64& rng) {
    while (true) {
        std::vector<uint64_t> c(ctx->n());
        for (auto& v : c) v = uniform_below(rng, ctx->p());
        FieldElement e = ctx->element(std::move(c));
        if (!e.is_zero()) return e;
    }
}

}  // namespace orbitcode
