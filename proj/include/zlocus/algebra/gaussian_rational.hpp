#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "zlocus/error.hpp"

namespace zlocus {

/// Exact element re + im*i of Q(i). Both parts are canonical GMP rationals, so
/// structural equality is mathematical equality and zero is 0/1 + 0/1 i.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers is intended
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
        mpq_class n = norm();
        return {mpq_class(re_ / n), mpq_class(-im_ / n)};
    }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order (real part first) used only for canonical sorting.
    friend std::strong_ordering lexicographic_compare(const GaussianRational& a,
                                                     const GaussianRational& b) {
        if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp(a.im_, b.im_);
        if (c == 0) return std::strong_ordering::equal;
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::string to_string() const {
        if (sgn(im_) == 0) return re_.get_str();
        std::string im_part;
        if (im_ == 1) {
            im_part = "i";
        } else if (im_ == -1) {
            im_part = "-i";
        } else {
            im_part = im_.get_str() + "*i";
        }
        if (sgn(re_) == 0) return im_part;
        if (sgn(im_) < 0) {
            std::string mag = (im_ == -1) ? std::string("i") : mpq_class(-im_).get_str() + "*i";
            return re_.get_str() + " - " + mag;
        }
        return re_.get_str() + " + " + im_part;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace zlocus
