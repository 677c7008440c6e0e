#include "arlab/mulind.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace arlab {

namespace {

constexpr unsigned long kUnitFactorLimit = 1'000'000;

// Insert p into a pairwise-coprime set, splitting as needed.
template <class P>
void insert_coprime(std::vector<P>& basis, P p) {
    using Ops = PolyOps<P>;
    if (Ops::is_constant(p)) return;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        P g = Ops::gcd(p, basis[i]);
        if (Ops::is_constant(g)) continue;
        P b = std::move(basis[i]);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        P b_rest = Ops::normalize(*Ops::divide(b, g)).first;
        P p_rest = Ops::normalize(*Ops::divide(p, g)).first;
        insert_coprime(basis, std::move(g));
        insert_coprime(basis, std::move(b_rest));
        insert_coprime(basis, std::move(p_rest));
        return;
    }
    basis.push_back(std::move(p));
}

} // namespace

template <class P>
GcdFreeBasis<P> gcd_free_basis(const std::vector<P>& polys) {
    using Ops = PolyOps<P>;
    GcdFreeBasis<P> out;
    for (const P& p : polys) {
        if (Ops::is_zero(p)) throw std::invalid_argument("gcd_free_basis: zero polynomial input");
    }
    for (const P& p : polys) {
        if (Ops::is_constant(p)) continue;
        insert_coprime(out.basis, Ops::normalize(p).first);
    }
    for (const P& p : polys) {
        std::vector<long> row(out.basis.size(), 0);
        P rest = p;
        for (std::size_t j = 0; j < out.basis.size(); ++j) {
            while (!Ops::is_constant(rest)) {
                auto q = Ops::divide(rest, out.basis[j]);
                if (!q) break;
                rest = std::move(*q);
                ++row[j];
            }
        }
        if (!Ops::is_constant(rest))
            throw std::logic_error("gcd_free_basis: input did not factor over the refined basis");
        out.exponents.push_back(std::move(row));
        out.units.push_back(Ops::constant_value(rest));
    }
    return out;
}

std::optional<DependenceCertificate>
dependence_from_decomposition(const std::vector<std::vector<long>>& exponents,
                              const std::vector<Rat>& units, IndependenceMode mode) {
    const std::size_t s = exponents.size();
    const std::size_t r = s ? exponents[0].size() : 0;
    if (s == 0) return std::nullopt;

    // Rows of the kernel system: one per basis element (relation must cancel
    // every basis exponent), plus one per prime in plain mode.
    RatMatrix m;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Rat> row(s);
        for (std::size_t i = 0; i < s; ++i) row[i] = Rat(exponents[i][j]);
        m.push_back(std::move(row));
    }

    std::vector<int> parity(s, 0);
    if (mode == IndependenceMode::Plain) {
        std::map<BigInt, std::vector<long>> prime_rows; // prime -> exponent per input
        for (std::size_t i = 0; i < s; ++i) {
            const Rat& u = units[i];
            if (u < 0) parity[i] = 1;
            auto num = factor_trial(u.get_num(), kUnitFactorLimit);
            auto den = factor_trial(u.get_den(), kUnitFactorLimit);
            if (!num || !den)
                throw DeskScaleError("independence: a unit constant has a prime factor above 10^6");
            for (const auto& [p, e] : *num) {
                auto& row = prime_rows[p];
                row.resize(s, 0);
                row[i] += e;
            }
            for (const auto& [p, e] : *den) {
                auto& row = prime_rows[p];
                row.resize(s, 0);
                row[i] -= e;
            }
        }
        for (auto& [p, row] : prime_rows) {
            row.resize(s, 0);
            std::vector<Rat> q(s);
            for (std::size_t i = 0; i < s; ++i) q[i] = Rat(row[i]);
            m.push_back(std::move(q));
        }
    }

    auto basis_vectors = kernel_basis(m, static_cast<int>(s));
    if (basis_vectors.empty()) return std::nullopt;

    std::vector<BigInt> nu = to_coprime_integers(basis_vectors.front());

    DependenceCertificate cert;
    if (mode == IndependenceMode::ModConstants) {
        Rat a(1);
        for (std::size_t i = 0; i < s; ++i) {
            if (nu[i] == 0) continue;
            if (!nu[i].fits_slong_p()) throw DeskScaleError("independence: certificate exponent overflow");
            a *= rat_pow(units[i], nu[i].get_si());
        }
        cert.relation = std::move(nu);
        cert.constant = a;
        return cert;
    }

    // Plain mode: the kernel vector cancels all prime exponents, so the
    // product is +-1; square the relation when the sign comes out negative.
    long sign_sum = 0;
    for (std::size_t i = 0; i < s; ++i) {
        if (parity[i] && mpz_odd_p(nu[i].get_mpz_t())) ++sign_sum;
    }
    if (sign_sum % 2 != 0) {
        for (BigInt& x : nu) x *= 2;
    }
    cert.relation = std::move(nu);
    cert.constant = Rat(1);
    return cert;
}

template <class P>
std::optional<DependenceCertificate>
find_dependence(const std::vector<P>& polys, IndependenceMode mode) {
    using Ops = PolyOps<P>;
    if (polys.empty()) return std::nullopt;
    for (const P& p : polys) {
        if (Ops::is_zero(p)) throw std::invalid_argument("independence: zero polynomial input");
    }
    if (mode == IndependenceMode::ModConstants) {
        // A constant input is a unit, hence immediately dependent mod constants.
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (Ops::is_constant(polys[i])) {
                DependenceCertificate cert;
                cert.relation.assign(polys.size(), BigInt(0));
                cert.relation[i] = 1;
                cert.constant = Ops::constant_value(polys[i]);
                return cert;
            }
        }
    }
    GcdFreeBasis<P> basis = gcd_free_basis(polys);
    return dependence_from_decomposition(basis.exponents, basis.units, mode);
}

template <class P>
bool certificate_valid(const std::vector<P>& polys, const DependenceCertificate& cert) {
    using Ops = PolyOps<P>;
    if (polys.empty() || cert.relation.size() != polys.size()) return false;
    bool nonzero = false;
    P num = Ops::one_like(polys.front());
    P den = Ops::one_like(polys.front());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const BigInt& e = cert.relation[i];
        if (e == 0) continue;
        nonzero = true;
        if (!e.fits_slong_p()) return false;
        const long k = e.get_si();
        if (k > 0) {
            num = num * Ops::pow(polys[i], static_cast<unsigned long>(k));
        } else {
            den = den * Ops::pow(polys[i], static_cast<unsigned long>(-k));
        }
    }
    if (!nonzero) return false;
    // num == constant * den, exactly (negative exponents as exact division)
    return num == Ops::mul_rat(den, cert.constant);
}

template <class P>
void require_independent(const std::vector<P>& polys, IndependenceMode mode, const char* context) {
    auto cert = find_dependence(polys, mode);
    if (cert) {
        throw HypothesisError(std::string(context) +
                              ": inputs are multiplicatively dependent, certificate " +
                              certificate_to_string(*cert));
    }
}

std::string certificate_to_string(const DependenceCertificate& cert) {
    std::string s = "[";
    for (std::size_t i = 0; i < cert.relation.size(); ++i) {
        if (i) s += ", ";
        s += cert.relation[i].get_str();
    }
    s += "] with constant " + rat_to_string(cert.constant);
    return s;
}

template GcdFreeBasis<UPoly> gcd_free_basis<UPoly>(const std::vector<UPoly>&);
template GcdFreeBasis<MPoly> gcd_free_basis<MPoly>(const std::vector<MPoly>&);
template std::optional<DependenceCertificate> find_dependence<UPoly>(const std::vector<UPoly>&, IndependenceMode);
template std::optional<DependenceCertificate> find_dependence<MPoly>(const std::vector<MPoly>&, IndependenceMode);
template bool certificate_valid<UPoly>(const std::vector<UPoly>&, const DependenceCertificate&);
template bool certificate_valid<MPoly>(const std::vector<MPoly>&, const DependenceCertificate&);
template void require_independent<UPoly>(const std::vector<UPoly>&, IndependenceMode, const char*);
template void require_independent<MPoly>(const std::vector<MPoly>&, IndependenceMode, const char*);

} // namespace arlab
