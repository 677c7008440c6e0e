#include "arlab/upoly.hpp"

#include <stdexcept>

namespace arlab {

UPoly monic(const UPoly& p) { return make_monic(p); }

Rat content_rat(const UPoly& p) {
    if (p.is_zero()) return Rat(0);
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const Rat& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat c = make_rat(num_gcd, den_lcm);
    if (p.lead() < 0) c = -c;
    return c;
}

UPoly primitive_part(const UPoly& p) {
    if (p.is_zero()) return p;
    return p.div_scalar(content_rat(p));
}

namespace {

// Integer pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
std::vector<BigInt> pseudo_rem_z(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (a.size() > db && !a.empty()) {
        BigInt top = a.back();
        for (BigInt& x : a) x *= lb;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

void make_primitive_z(std::vector<BigInt>& a) {
    if (a.empty()) return;
    BigInt g = 0;
    for (const BigInt& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (a.back() < 0) g = -g;
    for (BigInt& x : a) x /= g;
}

std::vector<BigInt> to_primitive_z(const UPoly& p) {
    UPoly pp = primitive_part(p);
    std::vector<BigInt> out;
    out.reserve(pp.coeffs().size());
    for (const Rat& c : pp.coeffs()) out.push_back(c.get_num());
    return out;
}

} // namespace

UPoly gcd_monic(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    std::vector<BigInt> x = to_primitive_z(a);
    std::vector<BigInt> y = to_primitive_z(b);
    if (x.size() < y.size()) x.swap(y);
    while (!y.empty()) {
        std::vector<BigInt> r = pseudo_rem_z(x, y);
        make_primitive_z(r);
        x.swap(y);
        y.swap(r);
    }
    std::vector<Rat> coeffs(x.begin(), x.end());
    return monic(UPoly::from_coeffs(std::move(coeffs)));
}

XgcdResult xgcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly u0 = UPoly::constant(Rat(1)), u1 = UPoly::zero();
    UPoly v0 = UPoly::zero(), v1 = UPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly u2 = u0 - q * u1;
        UPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, UPoly::zero(), UPoly::zero()};
    const Rat lc = r0.lead();
    return {r0.div_scalar(lc), u0.div_scalar(lc), v0.div_scalar(lc)};
}

bool divides(const UPoly& d, const UPoly& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    auto [q, r] = divrem(a, d);
    (void)q;
    return r.is_zero();
}

UPoly lcm_monic(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly::zero();
    UPoly g = gcd_monic(a, b);
    auto [q, r] = divrem(a, g);
    (void)r;
    return monic(q * b);
}

std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = monic(a);
    if (f.is_constant()) return out;
    // Yun's algorithm, characteristic zero.
    UPoly g = gcd_monic(f, f.derivative());
    UPoly b = divrem(f, g).first;
    UPoly c = divrem(f.derivative(), g).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (!b.is_constant()) {
        UPoly part = gcd_monic(b, d);
        if (!part.is_constant()) out.emplace_back(part, i);
        b = divrem(b, part).first;
        c = divrem(d, part).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UPoly radical(const UPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("radical: zero polynomial");
    UPoly r = UPoly::constant(Rat(1));
    for (const auto& [part, mult] : squarefree_decompose(a)) {
        (void)mult;
        r *= part;
    }
    return r;
}

} // namespace arlab
