#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mahonian/integer.hpp"

namespace mahonian {

// Dense univariate polynomial over Int; coeffs()[k] is the coefficient of
// the k-th power. Canonical form: the zero polynomial stores no
// coefficients, otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(long constant) : IntPoly(Int(constant)) {}

    static IntPoly monomial(Int c, int e);
    static IntPoly from_coeffs(std::vector<Int> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    bool operator==(const IntPoly&) const = default;

    Int operator()(const Int& x) const;     // evaluation
    IntPoly substitute_power(int k) const;  // q -> q^k, k >= 1

private:
    void trim();

    std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly scale_var(const IntPoly& p, int c);  // q -> c*q
IntPoly pow(const IntPoly& p, int e);
// Quotient of an exact division; throws std::logic_error if any step
// leaves a remainder (that always indicates a bug in the caller).
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);
IntPoly half(const IntPoly& p);  // exact division by 2

IntPoly q_bracket(int n);           // 1 + q + ... + q^(n-1), n >= 1
IntPoly q_factorial(int n);         // product of brackets 1..n
IntPoly signed_q_factorial(int n);  // brackets at alternating argument sign
IntPoly q_pochhammer(int n);        // product of (1 - q^i), i = 1..n
IntPoly q_binomial(int n, int k);   // exact-division route
// Row n of the Pascal-style recurrence; entry k equals q_binomial(n, k).
// Cheaper than n+1 exact divisions when a whole row is needed.
std::vector<IntPoly> q_binomial_row(int n);
IntPoly cyclotomic(int m);

// Text form: ascending exponents, explicit signs, ^ for powers, no *;
// e.g. "1 - q + 2q^2". parse accepts exactly what render produces, plus
// arbitrary whitespace and repeated terms.
std::string render(const IntPoly& p, const std::string& var = "q");
IntPoly parse_int_poly(const std::string& text, const std::string& var = "q");

} // namespace mahonian
