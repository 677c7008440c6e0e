#pragma once

#include "arlab/rat.hpp"
#include "arlab/upoly.hpp"

#include <cassert>
#include <memory>

namespace arlab {

/// The cyclotomic field Q(zeta_n) realised as Q[T]/(Phi_n). Phi_n is
/// irreducible over Q, so every nonzero residue is invertible.
struct CycField {
    int order;
    UPoly modulus; // Phi_order
};

std::shared_ptr<const CycField> cyc_field(int order);

/// Element of a cyclotomic field. A null field pointer denotes a plain
/// rational constant, so DensePoly<CycElem> can default-construct zeros;
/// mixed-field arithmetic promotes the rational side.
class CycElem {
public:
    CycElem() = default;
    CycElem(long v) : rep_(UPoly::constant(Rat(v))) {} // NOLINT(google-explicit-constructor)
    CycElem(std::shared_ptr<const CycField> f, UPoly rep);

    static CycElem from_rat(std::shared_ptr<const CycField> f, const Rat& c);
    static CycElem zeta(std::shared_ptr<const CycField> f, long k); // zeta_n^k

    bool is_zero() const { return rep_.is_zero(); }
    const UPoly& rep() const { return rep_; }
    const std::shared_ptr<const CycField>& field() const { return fld_; }

    friend bool operator==(const CycElem& a, const CycElem& b);
    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);

private:
    std::shared_ptr<const CycField> fld_; // nullptr: rational constant
    UPoly rep_;                           // reduced mod modulus when fld_ set
};

} // namespace arlab
