#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "mahonian/int_poly.hpp"
#include "mahonian/integer.hpp"

namespace mahonian {

struct TriExp {
    int x = 0;
    int y = 0;
    int z = 0;
    auto operator<=>(const TriExp&) const = default;
};

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Var { X, Y, Z };

// Sparse integer polynomial in three variables. Canonical form: no zero
// coefficients stored; terms ordered lexicographically by exponent triple.
class TriPoly {
public:
    TriPoly() = default;
    explicit TriPoly(Int constant);
    explicit TriPoly(long constant) : TriPoly(Int(constant)) {}

    static TriPoly monomial(Int c, int ex, int ey, int ez);
    static TriPoly from_univariate(const IntPoly& p, Var v);

    bool is_zero() const { return terms_.empty(); }
    const std::map<TriExp, Int>& terms() const { return terms_; }
    Int coeff(const TriExp& e) const;
    void add_term(const TriExp& e, const Int& c);

    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    TriPoly& operator*=(const TriPoly& o);
    TriPoly operator-() const;

    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);

    bool operator==(const TriPoly&) const = default;

    TriPoly substitute_x(int eps) const;  // x -> +1 or -1
    TriPoly substitute_z_one() const;     // z -> 1

private:
    std::map<TriExp, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const TriPoly& p);

// Collapse to a univariate polynomial in v; the other two exponents must
// be zero everywhere (throws std::logic_error otherwise).
IntPoly to_univariate(const TriPoly& p, Var v);

// Exact quotient by (x - z); throws NotDivisible when a remainder is left.
TriPoly exact_div_x_minus_z(const TriPoly& f);

std::string render(const TriPoly& p,
                   const std::array<std::string, 3>& vars = {"x", "y", "z"});
TriPoly parse_tri_poly(const std::string& text,
                       const std::array<std::string, 3>& vars = {"x", "y", "z"});

} // namespace mahonian
