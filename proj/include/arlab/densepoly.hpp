#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arlab {

/// Dense univariate polynomial over a field K, coefficients stored lowest
/// degree first. Invariant: the coefficient vector is empty (zero
/// polynomial) or its last entry is nonzero. The zero polynomial has no
/// degree; degree() returns nullopt for it rather than any sentinel number.
template <class K>
class DensePoly {
public:
    DensePoly() = default;

    static DensePoly zero() { return DensePoly(); }

    static DensePoly constant(K c) {
        DensePoly p;
        if (!(c == K(0))) p.c_.push_back(std::move(c));
        return p;
    }

    static DensePoly variable() { return from_coeffs({K(0), K(1)}); }

    static DensePoly term(K c, std::size_t e) {
        DensePoly p;
        if (c == K(0)) return p;
        p.c_.assign(e + 1, K(0));
        p.c_[e] = std::move(c);
        return p;
    }

    static DensePoly from_coeffs(std::vector<K> c) {
        DensePoly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    /// Degree of a polynomial known to be nonzero.
    int deg() const {
        assert(!c_.empty());
        return static_cast<int>(c_.size()) - 1;
    }

    const K& lead() const {
        assert(!c_.empty());
        return c_.back();
    }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    DensePoly operator-() const {
        DensePoly r = *this;
        for (K& x : r.c_) x = K(0) - x;
        return r;
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        DensePoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] = r.c_[i] + a.c_[i];
            if (i < b.c_.size()) r.c_[i] = r.c_[i] + b.c_[i];
        }
        r.trim();
        return r;
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        DensePoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
    DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly mul_scalar(const K& s) const {
        if (s == K(0)) return DensePoly();
        DensePoly r = *this;
        for (K& x : r.c_) x = x * s;
        return r;
    }

    DensePoly div_scalar(const K& s) const {
        assert(!(s == K(0)));
        DensePoly r = *this;
        for (K& x : r.c_) x = x / s;
        return r;
    }

    DensePoly pow(unsigned long e) const {
        DensePoly base = *this;
        DensePoly r = constant(K(1));
        while (e) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    DensePoly derivative() const {
        DensePoly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * K(static_cast<long>(i));
        r.trim();
        return r;
    }

    /// this(inner): Horner evaluation in K[T].
    DensePoly compose(const DensePoly& inner) const {
        DensePoly r;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r = r * inner + constant(c_[i]);
        }
        return r;
    }

    K eval(const K& x) const {
        K r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// Multiplication by T^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        DensePoly r;
        r.c_.assign(c_.size() + k, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    friend std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b) {
        if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
        DensePoly q, r = a;
        const int db = b.deg();
        while (!r.is_zero() && r.deg() >= db) {
            const std::size_t shift = static_cast<std::size_t>(r.deg() - db);
            K c = r.lead() / b.lead();
            DensePoly t = term(c, shift);
            q += t;
            r -= t * b;
        }
        return {q, r};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
DensePoly<K> make_monic(const DensePoly<K>& p) {
    if (p.is_zero()) return p;
    return p.div_scalar(p.lead());
}

/// Monic gcd by the plain Euclidean algorithm; valid over any field K.
template <class K>
DensePoly<K> gcd_field(DensePoly<K> a, DensePoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

} // namespace arlab
