#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "zlocus/algebra/poly.hpp"
#include "zlocus/error.hpp"
#include "zlocus/groebner/ideal.hpp"

namespace zlocus {

/// The locally closed set D(f) ∩ V(ideal). f = 1 means no open condition.
class Cell {
public:
    Cell(Poly f, Ideal ideal) : f_(std::move(f)), ideal_(std::move(ideal)) {
        require_same_ring(f_.ring(), ideal_.ring());
        if (f_.is_zero()) throw invariant_violation("cell with open part D(0)");
    }

    /// D(1) ∩ V(0): the whole space.
    static Cell whole_space(const RingPtr& ring) { return {Poly::one(ring), Ideal(ring)}; }

    const RingPtr& ring() const noexcept { return f_.ring(); }
    const Poly& f() const noexcept { return f_; }
    const Ideal& ideal() const noexcept { return ideal_; }

    bool contains(std::span<const GaussianRational> point) const {
        if (evaluate(f_, point).is_zero()) return false;
        return std::all_of(ideal_.generators().begin(), ideal_.generators().end(),
                           [&](const Poly& g) { return evaluate(g, point).is_zero(); });
    }

    /// Empty over C, i.e. f lies in the radical of the ideal.
    bool is_empty() const { return radical_membership(f_, ideal_); }

    friend bool operator==(const Cell& a, const Cell& b) { return a.f_ == b.f_ && a.ideal_ == b.ideal_; }

private:
    Poly f_;
    Ideal ideal_;
};

/// D(f1)∩V(I1) ∩ D(f2)∩V(I2) = D(f1 f2) ∩ V(I1 + I2).
inline Cell intersect_cell(const Cell& a, const Cell& b) {
    require_same_ring(a.ring(), b.ring());
    return {a.f() * b.f(), ideal_sum(a.ideal(), b.ideal())};
}

/// Finite union of cells over one ring. Cell order is kept as given.
class ConstructibleSet {
public:
    explicit ConstructibleSet(RingPtr ring) : ring_(std::move(ring)) {}
    ConstructibleSet(RingPtr ring, std::vector<Cell> cells) : ring_(std::move(ring)), cells_(std::move(cells)) {
        for (const auto& c : cells_) require_same_ring(c.ring(), ring_);
    }

    static ConstructibleSet whole_space(const RingPtr& ring) { return {ring, {Cell::whole_space(ring)}}; }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }

    friend bool operator==(const ConstructibleSet& a, const ConstructibleSet& b) {
        return same_ring(a.ring_, b.ring_) && a.cells_ == b.cells_;
    }

private:
    RingPtr ring_;
    std::vector<Cell> cells_;
};

inline bool contains_point(const ConstructibleSet& s, std::span<const GaussianRational> point) {
    if (point.size() != s.ring()->nvars())
        throw dimension_mismatch("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                                 std::to_string(s.ring()->nvars()) + " variables");
    return std::any_of(s.cells().begin(), s.cells().end(), [&](const Cell& c) { return c.contains(point); });
}

inline bool contains_point(const ConstructibleSet& s, const std::vector<GaussianRational>& point) {
    return contains_point(s, std::span<const GaussianRational>(point));
}

/// Removes structurally repeated cells, keeping first occurrences.
inline ConstructibleSet dedup(const ConstructibleSet& s) {
    std::vector<Cell> out;
    for (const auto& c : s.cells())
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    return {s.ring(), std::move(out)};
}

/// Cell-list concatenation with structural dedup.
inline ConstructibleSet set_union(const ConstructibleSet& a, const ConstructibleSet& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Cell> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return dedup(ConstructibleSet(a.ring(), std::move(cells)));
}

/// Drops every cell that is empty over C. Surviving cells keep their order.
inline ConstructibleSet prune(const ConstructibleSet& s) {
    std::vector<Cell> kept;
    for (const auto& c : s.cells())
        if (!c.is_empty()) kept.push_back(c);
    return {s.ring(), std::move(kept)};
}

}  // namespace zlocus
