#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "orbitcode/field.hpp"

namespace orbitcode {

inline constexpr uint64_t kDefaultEnumCap = uint64_t{1} << 20;       // elements
inline constexpr uint64_t kDefaultGrassmannCap = 1'000'000;          // subspaces

/// An F_q-subspace of F_{q^n}, stored as its reduced-row-echelon basis:
/// strictly increasing pivot columns, pivot entries 1, pivot columns
/// otherwise zero, no zero rows. The RREF basis is a canonical form, so
/// equality is plain matrix equality and (dimension, flattened rows) gives
/// a total order used for deterministic orbit representatives.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(FieldCtxPtr ctx);
    static Subspace full(FieldCtxPtr ctx);
    /// Span of a non-empty generator list; the context is inferred.
    static Subspace span(std::span<const FieldElement> gens);
    static Subspace span(std::initializer_list<FieldElement> gens);
    /// Span with an explicit context; an empty list gives the zero subspace.
    static Subspace span(FieldCtxPtr ctx, std::span<const FieldElement> gens);
    /// Rows as coefficient vectors; reduced mod p and canonicalized.
    static Subspace from_rows(FieldCtxPtr ctx, const std::vector<std::vector<uint64_t>>& rows);

    const FieldCtxPtr& context() const { return ctx_; }
    unsigned dimension() const { return k_; }
    unsigned ambient_dimension() const;
    bool is_zero() const { return k_ == 0; }

    /// Row-major k x n canonical basis.
    const std::vector<uint64_t>& flat_basis() const { return flat_; }
    FieldElement basis_element(unsigned row) const;
    std::vector<FieldElement> basis_elements() const;

    bool contains(const FieldElement& x) const;
    bool contains_subspace(const Subspace& other) const;

    Subspace sum(const Subspace& rhs) const;
    Subspace intersect(const Subspace& rhs) const;
    /// The cyclic shift xU = {xu : u in U}; dimension is preserved.
    /// Throws ZeroScalar on x = 0.
    Subspace scaled(const FieldElement& x) const;

    /// All q^k elements in a deterministic order (base-q odometer over the
    /// basis rows). Throws EnumerationTooLarge above the cap.
    std::vector<FieldElement> elements(uint64_t cap = kDefaultEnumCap) const;
    /// q^k, or nullopt if it overflows 64 bits.
    std::optional<uint64_t> element_count() const;

    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }
    /// Total order: dimension first, then lexicographic on the flattened basis.
    std::strong_ordering operator<=>(const Subspace& rhs) const;

    std::string to_string() const;  // "(c0 c1 ...);(...)" rows

private:
    friend class GrassmannianStream;
    Subspace(FieldCtxPtr ctx, std::vector<uint64_t> flat, unsigned k)
        : ctx_(std::move(ctx)), flat_(std::move(flat)), k_(k) {}

    void check_same(const Subspace& rhs) const;

    FieldCtxPtr ctx_;
    std::vector<uint64_t> flat_;  // row-major k x n
    unsigned k_ = 0;
};

/// d_s(U, V) = dim U + dim V - 2 dim(U cap V).
unsigned subspace_distance(const Subspace& u, const Subspace& v);

/// |G_q(n,k)| as the q-binomial coefficient; nullopt on 64-bit overflow.
std::optional<uint64_t> qbinomial(uint64_t q, unsigned n, unsigned k);

/// F_{q^t} viewed as an F_q-subspace of F_{q^n}: the kernel of Frob^t - I.
/// Valid for any t | n, primitive alpha not required.
Subspace subfield_subspace(const FieldCtxPtr& ctx, unsigned t);

/// Streams every k-dimensional subspace exactly once via pivot-pattern
/// RREF enumeration: patterns in lexicographic column order, free cells as a
/// base-q odometer. Construction checks the total against the cap.
class GrassmannianStream {
public:
    GrassmannianStream(FieldCtxPtr ctx, unsigned k, uint64_t cap = kDefaultGrassmannCap);

    uint64_t total() const { return total_; }
    /// Next subspace, or nullopt when exhausted.
    std::optional<Subspace> next();

private:
    bool advance_pattern();
    FieldCtxPtr ctx_;
    unsigned k_ = 0;
    uint64_t total_ = 0;
    bool done_ = false;
    bool fresh_pattern_ = true;
    std::vector<unsigned> pivots_;      // current pivot columns, ascending
    std::vector<unsigned> free_cells_;  // (row, col) pairs flattened
    std::vector<uint64_t> cells_;       // odometer values for free cells
};

/// Convenience driver over GrassmannianStream.
void for_each_subspace(const FieldCtxPtr& ctx, unsigned k, uint64_t cap,
                       const std::function<void(const Subspace&)>& fn);

/// Uniform over G_q(n,k): pivot patterns weighted by q^(free cells), then
/// uniform fill. Deterministic for a fixed generator state.
Subspace random_subspace(const FieldCtxPtr& ctx, unsigned k, std::mt19937_64& rng);

/// Uniform nonzero element.
FieldElement random_nonzero_element(const FieldCtxPtr& ctx, std::mt19937_64& rng);

}  // namespace orbitcode
