#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mahonian/int_poly.hpp"
#include "mahonian/integer.hpp"

namespace mahonian {

// Element of the cyclotomic integer ring for a primitive m-th root of
// unity, stored in the power basis 1, t, ..., t^(d-1) where d is the
// degree of the m-th cyclotomic polynomial. Exact arithmetic throughout;
// products are reduced by long division against the (monic) cyclotomic
// polynomial.
class CycloElem {
public:
    explicit CycloElem(int m);  // zero
    static CycloElem from_int(int m, Int v);
    static CycloElem root_power(int m, long long e);  // t^e

    int root_order() const { return m_; }
    const std::vector<Int>& coords() const { return coords_; }
    bool is_zero() const;

    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    CycloElem operator-() const;

    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }

    bool operator==(const CycloElem& o) const;

private:
    friend CycloElem reduce_mod_cyclotomic(const IntPoly& p, int m);

    int m_;
    std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const CycloElem& e);
std::string render(const CycloElem& e);

// Image of an integer polynomial in q under q -> t, i.e. the residue of p
// modulo the m-th cyclotomic polynomial.
CycloElem reduce_mod_cyclotomic(const IntPoly& p, int m);

// Polynomial in q whose coefficients live in the cyclotomic ring above.
class CycloPoly {
public:
    explicit CycloPoly(int m);  // zero
    static CycloPoly one(int m);
    static CycloPoly image(const IntPoly& p, int m);  // integer coefficients embedded

    int root_order() const { return m_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    CycloElem coeff(int e) const;

    CycloPoly& operator+=(const CycloPoly& o);
    CycloPoly& operator-=(const CycloPoly& o);
    CycloPoly& operator*=(const CycloPoly& o);

    friend CycloPoly operator+(CycloPoly a, const CycloPoly& b) { return a += b; }
    friend CycloPoly operator-(CycloPoly a, const CycloPoly& b) { return a -= b; }
    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b);

    bool operator==(const CycloPoly& o) const;

    void add_term(int e, const CycloElem& c);

private:
    void trim();

    int m_;
    std::vector<CycloElem> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloPoly& p);
std::string render(const CycloPoly& p);

// q-binomial evaluated at a primitive m-th root of unity via the
// arithmetic split k = m*a1 + b1, n-k = m*a2 + b2: an ordinary binomial
// times a small q-binomial reduced at the root. Avoids building the large
// polynomial first.
CycloElem olive_qbinom_at_root(int n, int k, int m);

// Specialization at m = 2 (q = -1): zero when k and n-k are both odd,
// otherwise a binomial of the halves.
Int qbinom_at_minus1(int n, int k);

} // namespace mahonian
