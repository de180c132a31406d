#include "mahonian/tri_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace mahonian {

TriPoly::TriPoly(Int constant) {
    if (constant != 0) terms_.emplace(TriExp{}, std::move(constant));
}

TriPoly TriPoly::monomial(Int c, int ex, int ey, int ez) {
    if (ex < 0 || ey < 0 || ez < 0)
        throw std::domain_error("TriPoly::monomial: negative exponent");
    TriPoly p;
    if (c != 0) p.terms_.emplace(TriExp{ex, ey, ez}, std::move(c));
    return p;
}

TriPoly TriPoly::from_univariate(const IntPoly& p, Var v) {
    TriPoly out;
    for (int e = 0; e <= p.degree(); ++e) {
        const Int c = p.coeff(e);
        if (c == 0) continue;
        TriExp t;
        switch (v) {
            case Var::X: t.x = e; break;
            case Var::Y: t.y = e; break;
            case Var::Z: t.z = e; break;
        }
        out.terms_.emplace(t, c);
    }
    return out;
}

Int TriPoly::coeff(const TriExp& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void TriPoly::add_term(const TriExp& e, const Int& c) {
    if (c == 0) return;
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.x + eb.x, ea.y + eb.y, ea.z + eb.z}, ca * cb);
    return out;
}

TriPoly& TriPoly::operator*=(const TriPoly& o) {
    *this = *this * o;
    return *this;
}

TriPoly TriPoly::operator-() const {
    TriPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

TriPoly TriPoly::substitute_x(int eps) const {
    if (eps != 1 && eps != -1)
        throw std::domain_error("substitute_x: eps must be +1 or -1");
    TriPoly out;
    for (const auto& [e, c] : terms_) {
        const bool flip = eps == -1 && e.x % 2 == 1;
        out.add_term({0, e.y, e.z}, flip ? Int(-c) : c);
    }
    return out;
}

TriPoly TriPoly::substitute_z_one() const {
    TriPoly out;
    for (const auto& [e, c] : terms_) out.add_term({e.x, e.y, 0}, c);
    return out;
}

std::ostream& operator<<(std::ostream& os, const TriPoly& p) {
    return os << render(p);
}

IntPoly to_univariate(const TriPoly& p, Var v) {
    std::vector<Int> coeffs;
    for (const auto& [e, c] : p.terms()) {
        int keep = 0, rest = 0;
        switch (v) {
            case Var::X: keep = e.x; rest = e.y + e.z; break;
            case Var::Y: keep = e.y; rest = e.x + e.z; break;
            case Var::Z: keep = e.z; rest = e.x + e.y; break;
        }
        if (rest != 0)
            throw std::logic_error("to_univariate: term involves another variable");
        if (static_cast<int>(coeffs.size()) <= keep)
            coeffs.resize(static_cast<std::size_t>(keep) + 1, Int(0));
        coeffs[keep] += c;
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

TriPoly exact_div_x_minus_z(const TriPoly& f) {
    const TriPoly divisor =
        TriPoly::monomial(Int(1), 1, 0, 0) - TriPoly::monomial(Int(1), 0, 0, 1);
    TriPoly quot;
    TriPoly rem = f;
    // The divisor is monic in z up to sign, so cancel the top z-degree of
    // the remainder until nothing with positive z-degree is left.
    while (!rem.is_zero()) {
        int dz = -1;
        for (const auto& [e, c] : rem.terms()) dz = std::max(dz, e.z);
        if (dz <= 0) break;
        TriPoly top;
        for (const auto& [e, c] : rem.terms())
            if (e.z == dz) top.add_term({e.x, e.y, dz - 1}, -c);
        quot += top;
        rem -= divisor * top;
    }
    if (!rem.is_zero())
        throw NotDivisible("exact_div_x_minus_z: remainder " + render(rem));
    return quot;
}

std::string render(const TriPoly& p, const std::array<std::string, 3>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Int a = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const bool constant_term = e.x == 0 && e.y == 0 && e.z == 0;
        if (constant_term || a != 1) out += a.get_str();
        const int exps[3] = {e.x, e.y, e.z};
        for (int v = 0; v < 3; ++v) {
            if (exps[v] == 0) continue;
            out += vars[v];
            if (exps[v] >= 2) {
                out += '^';
                out += std::to_string(exps[v]);
            }
        }
        first = false;
    }
    return out;
}

TriPoly parse_tri_poly(const std::string& text, const std::array<std::string, 3>& vars) {
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    const auto at_digit = [&] {
        return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
    };
    const auto at_alpha = [&] {
        return i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_');
    };
    const auto parse_digits = [&]() -> std::string {
        const std::size_t start = i;
        while (at_digit()) ++i;
        if (i == start)
            throw std::invalid_argument("parse_tri_poly: expected a number at offset " +
                                        std::to_string(start));
        return text.substr(start, i - start);
    };

    TriPoly acc;
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("parse_tri_poly: empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int s = 1;
        if (text[i] == '+' || text[i] == '-') {
            s = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("parse_tri_poly: expected '+' or '-' at offset " +
                                        std::to_string(i));
        }
        Int c(1);
        bool have_coeff = false;
        if (at_digit()) {
            c = Int(parse_digits());
            have_coeff = true;
        }
        int exps[3] = {0, 0, 0};
        bool have_var = false;
        while (at_alpha()) {
            // Variables may be juxtaposed ("xy^2z"), so match one name at a
            // time, longest name first.
            int v = -1;
            std::size_t len = 0;
            for (int k = 0; k < 3; ++k)
                if (vars[k].size() > len && text.compare(i, vars[k].size(), vars[k]) == 0) {
                    v = k;
                    len = vars[k].size();
                }
            if (v < 0) {
                const std::size_t start = i;
                while (at_alpha()) ++i;
                throw std::invalid_argument("parse_tri_poly: unknown variable '" +
                                            text.substr(start, i - start) + "'");
            }
            i += len;
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                const std::string digits = parse_digits();
                if (digits.size() > 6)
                    throw std::invalid_argument("parse_tri_poly: exponent too large");
                e = std::stoi(digits);
            }
            exps[v] += e;
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw std::invalid_argument("parse_tri_poly: expected a term at offset " +
                                        std::to_string(i));
        acc.add_term({exps[0], exps[1], exps[2]}, s < 0 ? Int(-c) : c);
        first = false;
    }
    return acc;
}

} // namespace mahonian
