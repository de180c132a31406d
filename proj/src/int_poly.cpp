#include "mahonian/int_poly.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mahonian {

IntPoly::IntPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly IntPoly::monomial(Int c, int e) {
    if (e < 0) throw std::domain_error("IntPoly::monomial: negative exponent");
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(e) + 1, Int(0));
        p.coeffs_[e] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::from_coeffs(std::vector<Int> coeffs) {
    IntPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Int IntPoly::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[e];
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Int IntPoly::operator()(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::substitute_power(int k) const {
    if (k < 1) throw std::domain_error("substitute_power: k must be positive");
    if (is_zero()) return {};
    std::vector<Int> out(static_cast<std::size_t>(degree()) * k + 1, Int(0));
    for (std::size_t e = 0; e < coeffs_.size(); ++e) out[e * k] = coeffs_[e];
    return from_coeffs(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << render(p);
}

IntPoly scale_var(const IntPoly& p, int c) {
    std::vector<Int> out = p.coeffs();
    Int f(1);
    for (std::size_t e = 1; e < out.size(); ++e) {
        f *= c;
        out[e] *= f;
    }
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly pow(const IntPoly& p, int e) {
    if (e < 0) throw std::domain_error("pow: negative exponent");
    IntPoly acc(Int(1));
    for (int i = 0; i < e; ++i) acc *= p;
    return acc;
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (num.is_zero()) return {};
    const int dd = den.degree();
    const int dn = num.degree();
    if (dn < dd) throw std::logic_error("divide_exact: degree of divisor too large");
    const Int lead = den.coeff(dd);
    std::vector<Int> rem = num.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(dn - dd) + 1, Int(0));
    for (int e = dn; e >= dd; --e) {
        if (rem[e] == 0) continue;
        if (!mpz_divisible_p(rem[e].get_mpz_t(), lead.get_mpz_t()))
            throw std::logic_error("divide_exact: leading coefficient does not divide");
        Int f = rem[e] / lead;
        for (int j = 0; j <= dd; ++j) rem[e - dd + j] -= f * den.coeff(j);
        quot[e - dd] = std::move(f);
    }
    for (int e = 0; e < dd; ++e)
        if (rem[e] != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return IntPoly::from_coeffs(std::move(quot));
}

IntPoly half(const IntPoly& p) {
    std::vector<Int> out = p.coeffs();
    for (auto& c : out) {
        if (mpz_odd_p(c.get_mpz_t()))
            throw std::logic_error("half: odd coefficient");
        c /= 2;
    }
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly q_bracket(int n) {
    if (n < 1) throw std::domain_error("q_bracket: n must be positive");
    return IntPoly::from_coeffs(std::vector<Int>(n, Int(1)));
}

IntPoly q_factorial(int n) {
    if (n < 1) throw std::domain_error("q_factorial: n must be positive");
    IntPoly acc(Int(1));
    for (int i = 1; i <= n; ++i) acc *= q_bracket(i);
    return acc;
}

IntPoly signed_q_factorial(int n) {
    if (n < 1) throw std::domain_error("signed_q_factorial: n must be positive");
    IntPoly acc(Int(1));
    for (int i = 1; i <= n; ++i)
        acc *= scale_var(q_bracket(i), i % 2 == 1 ? 1 : -1);
    return acc;
}

IntPoly q_pochhammer(int n) {
    if (n < 0) throw std::domain_error("q_pochhammer: n must be nonnegative");
    IntPoly acc(Int(1));
    for (int i = 1; i <= n; ++i)
        acc *= IntPoly(Int(1)) - IntPoly::monomial(Int(1), i);
    return acc;
}

IntPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("q_binomial: arguments must be nonnegative");
    if (k > n) return {};
    return divide_exact(q_pochhammer(n), q_pochhammer(k) * q_pochhammer(n - k));
}

std::vector<IntPoly> q_binomial_row(int n) {
    if (n < 0) throw std::domain_error("q_binomial_row: n must be nonnegative");
    std::vector<IntPoly> row{IntPoly(Int(1))};
    for (int i = 1; i <= n; ++i) {
        std::vector<IntPoly> next(static_cast<std::size_t>(i) + 1);
        next[0] = IntPoly(Int(1));
        next[i] = IntPoly(Int(1));
        for (int k = 1; k < i; ++k)
            next[k] = row[k - 1] + IntPoly::monomial(Int(1), k) * row[k];
        row = std::move(next);
    }
    return row;
}

namespace {

const IntPoly& cyclotomic_locked(int m, std::map<int, IntPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    IntPoly num = IntPoly::monomial(Int(1), m) - IntPoly(Int(1));
    for (int d = 1; d <= m / 2; ++d)
        if (m % d == 0) num = divide_exact(num, cyclotomic_locked(d, cache));
    return cache.emplace(m, std::move(num)).first->second;
}

} // namespace

IntPoly cyclotomic(int m) {
    if (m < 1) throw std::domain_error("cyclotomic: m must be positive");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_locked(m, cache);
}

std::string render(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        const Int c = p.coeff(e);
        if (c == 0) continue;
        const bool negative = c < 0;
        const Int a = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (e == 0 || a != 1) out += a.get_str();
        if (e >= 1) {
            out += var;
            if (e >= 2) {
                out += '^';
                out += std::to_string(e);
            }
        }
        first = false;
    }
    return out;
}

IntPoly parse_int_poly(const std::string& text, const std::string& var) {
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
            throw std::invalid_argument("parse_int_poly: expected a number at offset " +
                                        std::to_string(start));
        return text.substr(start, i - start);
    };

    std::vector<Int> acc;
    const auto add = [&](int e, const Int& c) {
        if (static_cast<int>(acc.size()) <= e) acc.resize(static_cast<std::size_t>(e) + 1, Int(0));
        acc[e] += c;
    };

    skip_ws();
    if (i == text.size()) throw std::invalid_argument("parse_int_poly: empty input");
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
            throw std::invalid_argument("parse_int_poly: expected '+' or '-' at offset " +
                                        std::to_string(i));
        }
        Int c(1);
        bool have_coeff = false;
        if (at_digit()) {
            c = Int(parse_digits());
            have_coeff = true;
        }
        int e = 0;
        if (at_alpha()) {
            const std::size_t start = i;
            while (at_alpha()) ++i;
            const std::string id = text.substr(start, i - start);
            if (id != var)
                throw std::invalid_argument("parse_int_poly: unknown variable '" + id + "'");
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                const std::string digits = parse_digits();
                if (digits.size() > 6)
                    throw std::invalid_argument("parse_int_poly: exponent too large");
                e = std::stoi(digits);
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("parse_int_poly: expected a term at offset " +
                                        std::to_string(i));
        }
        add(e, s < 0 ? Int(-c) : c);
        first = false;
    }
    return IntPoly::from_coeffs(std::move(acc));
}

} // namespace mahonian
