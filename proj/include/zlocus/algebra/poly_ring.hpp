#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "zlocus/error.hpp"

namespace zlocus {

enum class MonomialOrder { grevlex, lex };

/// Largest total degree any monomial may reach.
inline constexpr std::uint64_t max_total_degree = std::uint64_t{1} << 31;

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

/// Exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        check_degree(d);
        degree_ = d;
    }

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
        std::vector<std::uint32_t> e(nvars, 0);
        e.at(index) = power;
        return Monomial(std::move(e));
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t k) const noexcept { return exps_[k]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_degree(a.degree_ + b.degree_);
        Monomial r(a);
        for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] += b.exps_[k];
        r.degree_ += b.degree_;
        return r;
    }

    bool divides(const Monomial& other) const noexcept {
        if (degree_ > other.degree_) return false;
        for (std::size_t k = 0; k < exps_.size(); ++k)
            if (exps_[k] > other.exps_[k]) return false;
        return true;
    }

    /// this / divisor; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < r.exps_.size(); ++k) r.exps_[k] -= divisor.exps_[k];
        r.degree_ -= divisor.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<std::uint32_t> e(a.exps_.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(a.exps_[k], b.exps_[k]);
        return Monomial(std::move(e));
    }

    friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
        for (std::size_t k = 0; k < a.exps_.size(); ++k)
            if (a.exps_[k] != 0 && b.exps_[k] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

private:
    static void check_degree(std::uint64_t d) {
        if (d > max_total_degree) throw degree_overflow("monomial total degree exceeds 2^31");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
    if (order == MonomialOrder::grevlex) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        // Smaller exponent in the last differing variable is the larger monomial.
        for (std::size_t k = a.size(); k-- > 0;) {
            if (a[k] != b[k]) return b[k] <=> a[k];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] <=> b[k];
    }
    return std::strong_ordering::equal;
}

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Named variables plus a monomial order. Held by shared pointer; two rings
/// are the same ring when names and order agree.
class PolyRing {
public:
    static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex) {
        std::unordered_set<std::string> seen;
        for (const auto& n : names) {
            if (!is_identifier(n)) throw input_error("invalid variable name '" + n + "'");
            if (n == "i") throw input_error("'i' is reserved for the imaginary unit and cannot be a variable");
            if (!seen.insert(n).second) throw input_error("duplicate variable name '" + n + "'");
        }
        return RingPtr(new PolyRing(std::move(names), order));
    }

    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t k) const { return names_.at(k); }
    MonomialOrder order() const noexcept { return order_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - names_.begin());
    }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
        return zlocus::compare(a, b, order_);
    }

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.order_ == b.order_ && a.names_ == b.names_;
    }

private:
    PolyRing(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {}

    std::vector<std::string> names_;
    MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw ring_mismatch();
}

}  // namespace zlocus
