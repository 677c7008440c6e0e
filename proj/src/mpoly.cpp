#include "arlab/mpoly.hpp"

#include "arlab/bareiss.hpp"
#include "arlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arlab {

namespace {

std::uint64_t exp_total(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

} // namespace

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    const std::uint64_t da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db;
    // lexicographic with X1 heaviest: a < b iff at the first difference a is smaller
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

MPoly::MPoly(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("MPoly: arity must be >= 1");
}

MPoly MPoly::constant(int arity, Rat c) {
    MPoly p(arity);
    if (c != 0) p.terms_.emplace(ExpVec(arity, 0), std::move(c));
    return p;
}

MPoly MPoly::var(int arity, int index) {
    if (index < 1 || index > arity) throw std::invalid_argument("MPoly::var: index out of range");
    MPoly p(arity);
    ExpVec e(arity, 0);
    e[index - 1] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

MPoly MPoly::term(int arity, Rat c, ExpVec e) {
    if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("MPoly::term: exponent arity mismatch");
    MPoly p(arity);
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

std::optional<int> MPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return static_cast<int>(exp_total(terms_.rbegin()->first));
}

int MPoly::degree_in(int index) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[index - 1]));
    return d;
}

const Rat& MPoly::lead_coeff() const { return terms_.rbegin()->second; }
const ExpVec& MPoly::lead_exp() const { return terms_.rbegin()->first; }

bool operator==(const MPoly& a, const MPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

void MPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MPoly: arity mismatch");
    MPoly r(a.arity_);
    ExpVec e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::mul_scalar(const Rat& s) const {
    MPoly r(arity_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MPoly MPoly::div_scalar(const Rat& s) const {
    if (s == 0) throw std::invalid_argument("MPoly: division by zero scalar");
    return mul_scalar(Rat(1) / s);
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly base = *this;
    MPoly r = MPoly::constant(arity_, Rat(1));
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

MPoly MPoly::substitute(int index, const MPoly& value) const {
    if (value.arity() != arity_) throw std::invalid_argument("MPoly::substitute: arity mismatch");
    if (index < 1 || index > arity_) throw std::invalid_argument("MPoly::substitute: index out of range");
    // Cache powers of the replacement; exponents are small at desk scale.
    std::vector<MPoly> powers = {MPoly::constant(arity_, Rat(1))};
    MPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        const std::uint32_t k = e[index - 1];
        while (powers.size() <= k) powers.push_back(powers.back() * value);
        ExpVec rest = e;
        rest[index - 1] = 0;
        r += MPoly::term(arity_, c, rest) * powers[k];
    }
    return r;
}

UPoly MPoly::specialize(const std::vector<Rat>& alphas) const {
    if (static_cast<int>(alphas.size()) != arity_ - 1)
        throw std::invalid_argument("MPoly::specialize: need arity-1 values");
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int i = 1; i < arity_; ++i) v *= rat_pow(alphas[i - 1], e[i]);
        if (v == 0) continue;
        if (coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rat(0));
        coeffs[e[0]] += v;
    }
    return UPoly::from_coeffs(std::move(coeffs));
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("MPoly::eval: need arity values");
    Rat r(0);
    for (const auto& [e, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < arity_; ++i) v *= rat_pow(point[i], e[i]);
        r += v;
    }
    return r;
}

MPoly upoly_to_mpoly(const UPoly& f, int arity, int index) {
    MPoly r(arity);
    const auto& cs = f.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) continue;
        ExpVec e(arity, 0);
        e[index - 1] = static_cast<std::uint32_t>(k);
        r.add_term(e, cs[k]);
    }
    return r;
}

UPoly mpoly_to_upoly(const MPoly& F, int index) {
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : F.terms()) {
        for (int i = 0; i < F.arity(); ++i) {
            if (i != index - 1 && e[i] != 0)
                throw std::invalid_argument("mpoly_to_upoly: polynomial is not univariate in the requested variable");
        }
        const std::uint32_t k = e[index - 1];
        if (coeffs.size() <= k) coeffs.resize(k + 1, Rat(0));
        coeffs[k] = c;
    }
    return UPoly::from_coeffs(std::move(coeffs));
}

MPoly compose_upoly(const UPoly& h, const MPoly& F) {
    MPoly r(F.arity());
    const auto& cs = h.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        r = r * F + MPoly::constant(F.arity(), cs[i]);
    }
    return r;
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("try_divide: division by zero polynomial");
    if (a.arity() != b.arity()) throw std::invalid_argument("try_divide: arity mismatch");
    MPoly q(a.arity());
    MPoly r = a;
    const ExpVec& eb = b.lead_exp();
    const Rat& cb = b.lead_coeff();
    while (!r.is_zero()) {
        const ExpVec& er = r.lead_exp();
        ExpVec eq(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            eq[i] = er[i] - eb[i];
        }
        MPoly t = MPoly::term(a.arity(), r.lead_coeff() / cb, eq);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

// Coefficient list of p viewed as a polynomial in X_index, lowest degree
// first; entries have zero exponent in X_index.
std::vector<MPoly> coeffs_in(const MPoly& p, int index) {
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(0, p.degree_in(index)) + 1), MPoly(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        ExpVec rest = e;
        const std::uint32_t k = rest[index - 1];
        rest[index - 1] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

MPoly from_coeffs_in(const std::vector<MPoly>& cs, int index, int arity) {
    MPoly r(arity);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms()) {
            ExpVec full = e;
            full[index - 1] = static_cast<std::uint32_t>(k);
            r.add_term(full, c);
        }
    }
    return r;
}

int first_variable(const MPoly& a, const MPoly& b) {
    for (int i = 1; i <= a.arity(); ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
    }
    return 0;
}

bool uses_only(const MPoly& p, int index) {
    for (int i = 1; i <= p.arity(); ++i) {
        if (i != index && p.degree_in(i) > 0) return false;
    }
    return true;
}

MPoly mgcd_impl(const MPoly& a, const MPoly& b);

// Gcd of the coefficients of p with respect to X_index.
MPoly content_in(const MPoly& p, int index) {
    MPoly g(p.arity());
    for (const MPoly& c : coeffs_in(p, index)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : mgcd_impl(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Pseudo-remainder of a by b in the variable X_index.
MPoly pseudo_rem_in(const MPoly& a, const MPoly& b, int index, int arity) {
    std::vector<MPoly> ra = coeffs_in(a, index);
    const std::vector<MPoly> rb = coeffs_in(b, index);
    const MPoly& lb = rb.back();
    const std::size_t db = rb.size() - 1;
    while (ra.size() > db) {
        MPoly top = ra.back();
        if (top.is_zero()) {
            ra.pop_back();
            continue;
        }
        for (MPoly& x : ra) x *= lb;
        const std::size_t shift = ra.size() - 1 - db;
        for (std::size_t i = 0; i < rb.size(); ++i) ra[shift + i] -= top * rb[i];
        while (!ra.empty() && ra.back().is_zero()) ra.pop_back();
    }
    return from_coeffs_in(ra, index, arity);
}

MPoly mgcd_impl(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.arity(), Rat(1));
    const int v = first_variable(a, b);
    if (v == 0) return MPoly::constant(a.arity(), Rat(1));
    if (uses_only(a, v) && uses_only(b, v)) {
        UPoly g = gcd_monic(mpoly_to_upoly(a, v), mpoly_to_upoly(b, v));
        return upoly_to_mpoly(g, a.arity(), v);
    }
    if (a.degree_in(v) == 0) return mgcd_impl(content_in(b, v), a);
    if (b.degree_in(v) == 0) return mgcd_impl(content_in(a, v), b);

    const MPoly ca = content_in(a, v);
    const MPoly cb = content_in(b, v);
    MPoly pa = *try_divide(a, ca);
    MPoly pb = *try_divide(b, cb);
    const MPoly cg = mgcd_impl(ca, cb);

    // primitive PRS in X_v
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        MPoly r = pseudo_rem_in(pa, pb, v, a.arity());
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = MPoly::constant(a.arity(), Rat(1));
            break;
        }
        pa = std::move(pb);
        pb = *try_divide(r, content_in(r, v));
    }
    MPoly g = pb.degree_in(v) > 0 ? *try_divide(pb, content_in(pb, v)) : pb;
    return cg * g;
}

} // namespace

MPoly mgcd(const MPoly& a, const MPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("mgcd: arity mismatch");
    if (a.arity() > 3) throw DeskScaleError("mgcd: arity > 3 exceeds the desk-scale limit");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("mgcd: gcd(0,0) undefined");
    MPoly g = mgcd_impl(a, b);
    return g.div_scalar(g.lead_coeff());
}

MPoly resultant_mpoly(const std::vector<MPoly>& a, const std::vector<MPoly>& b, int arity) {
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    if (da < 1 || db < 1) throw std::invalid_argument("resultant: both inputs must be nonconstant in T");
    const int n = da + db;
    const MPoly zero(arity);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, zero));
    // db rows of a's coefficients (descending), then da rows of b's.
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[r][r + j] = a[da - j];
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[db + r][r + j] = b[db - j];
    auto exact_div = [](const MPoly& num, const MPoly& den) {
        auto q = try_divide(num, den);
        if (!q) throw std::logic_error("bareiss: non-exact division");
        return *q;
    };
    return det_bareiss(std::move(m), zero, MPoly::constant(arity, Rat(1)), exact_div);
}

MPoly implicitize(const UPoly& f, const UPoly& g) {
    if (f.is_constant() || g.is_constant())
        throw std::invalid_argument("implicitize: constant parametrization rejected");
    const int arity = 2;
    auto lift = [&](const UPoly& p, int var) {
        std::vector<MPoly> cs;
        for (const Rat& c : p.coeffs()) cs.push_back(MPoly::constant(arity, c));
        cs[0] -= MPoly::var(arity, var); // p(T) - X_var
        return cs;
    };
    return resultant_mpoly(lift(f, 1), lift(g, 2), arity);
}

} // namespace arlab
