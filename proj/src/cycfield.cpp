#include "arlab/cycfield.hpp"

#include "arlab/torsion.hpp"

#include <stdexcept>

namespace arlab {

std::shared_ptr<const CycField> cyc_field(int order) {
    if (order < 1) throw std::invalid_argument("cyc_field: order must be >= 1");
    return std::make_shared<CycField>(CycField{order, cyclotomic(order)});
}

CycElem::CycElem(std::shared_ptr<const CycField> f, UPoly rep) : fld_(std::move(f)) {
    if (fld_) {
        rep_ = divrem(std::move(rep), fld_->modulus).second;
    } else {
        assert(rep.is_constant());
        rep_ = std::move(rep);
    }
}

CycElem CycElem::from_rat(std::shared_ptr<const CycField> f, const Rat& c) {
    return CycElem(std::move(f), UPoly::constant(c));
}

CycElem CycElem::zeta(std::shared_ptr<const CycField> f, long k) {
    const int n = f->order;
    long e = k % n;
    if (e < 0) e += n;
    return CycElem(std::move(f), UPoly::term(Rat(1), static_cast<std::size_t>(e)));
}

namespace {

const std::shared_ptr<const CycField>& join_fields(const CycElem& a, const CycElem& b) {
    if (a.field() && b.field() && a.field()->order != b.field()->order)
        throw std::invalid_argument("CycElem: mixed cyclotomic fields");
    return a.field() ? a.field() : b.field();
}

} // namespace

bool operator==(const CycElem& a, const CycElem& b) {
    // reps are reduced, and rational constants embed as degree-0 reps
    return a.rep() == b.rep();
}

CycElem operator+(const CycElem& a, const CycElem& b) {
    const auto& f = join_fields(a, b);
    return CycElem(f, a.rep() + b.rep());
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    const auto& f = join_fields(a, b);
    return CycElem(f, a.rep() - b.rep());
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    const auto& f = join_fields(a, b);
    return CycElem(f, a.rep() * b.rep());
}

CycElem operator/(const CycElem& a, const CycElem& b) {
    if (b.is_zero()) throw std::invalid_argument("CycElem: division by zero");
    const auto& f = join_fields(a, b);
    if (!f) return CycElem(nullptr, UPoly::constant(a.rep().coeff(0) / b.rep().coeff(0)));
    // invert b modulo the irreducible modulus via the Bezout identity
    auto [g, u, v] = xgcd(b.rep(), f->modulus);
    (void)v;
    if (!(g == UPoly::constant(Rat(1))))
        throw std::logic_error("CycElem: modulus not irreducible?");
    return CycElem(f, a.rep() * u);
}

} // namespace arlab
