#include "mahonian/genfun.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mahonian {

namespace {

IntPoly poly_from_hist(const std::vector<long long>& h) {
    std::vector<Int> c;
    c.reserve(h.size());
    for (long long v : h) c.emplace_back(static_cast<long>(v));
    return IntPoly::from_coeffs(std::move(c));
}

int character_value(Character chi, const Perm& p) {
    switch (chi) {
        case Character::Trivial: return 1;
        case Character::Sign: return sign(p);
        default:
            throw std::domain_error("dist_group: character undefined on unsigned permutations");
    }
}

int character_value(Character chi, const SignedPerm& s) {
    switch (chi) {
        case Character::Trivial: return 1;
        case Character::Sign: return sign_b(s);
        case Character::NegChar: return char_neg(s);
        case Character::SignAbs: return sign_abs(s);
    }
    throw std::domain_error("dist_group: unknown character");
}

bool group_member(Group g, const SignedPerm& s) {
    switch (g) {
        case Group::Bn: return true;
        case Group::BnPlus: return sign_b(s) == 1;
        case Group::Dn: return neg(s) % 2 == 0;
        case Group::C2WrAn: return sign_abs(s) == 1;
        default:
            throw std::domain_error("dist_group: not a signed group");
    }
}

} // namespace

IntPoly dist_group(Group g, Statistic stat, Character chi, int n, Order ord,
                   std::optional<int> last_digit) {
    if (n < 1) throw std::domain_error("dist_group: n must be positive");
    if (last_digit && g != Group::Sn)
        throw std::domain_error("dist_group: last-digit filter applies to the full "
                                "unsigned group only");
    if (last_digit && (*last_digit < 1 || *last_digit > n))
        throw std::domain_error("dist_group: last digit outside 1..n");

    if (g == Group::Sn || g == Group::An) {
        if (stat != Statistic::Inv && stat != Statistic::Maj)
            throw std::domain_error("dist_group: unsigned groups support inv and maj only");
        if (chi != Character::Trivial && chi != Character::Sign)
            throw std::domain_error("dist_group: unsigned groups carry the trivial and "
                                    "sign characters only");
        std::vector<long long> hist(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, 0);
        for_each_sn(n, [&](const Perm& p) {
            if (g == Group::An && sign(p) != 1) return;
            if (last_digit && p(n) != *last_digit) return;
            const int e = stat == Statistic::Inv ? inv(p) : maj(p);
            hist[e] += character_value(chi, p);
        });
        return poly_from_hist(hist);
    }

    if (stat == Statistic::Inv)
        throw std::domain_error("dist_group: signed groups support maj, fmaj and "
                                "length only");
    std::vector<long long> hist(static_cast<std::size_t>(n) * n + 1, 0);
    for_each_bn(n, [&](const SignedPerm& s) {
        if (!group_member(g, s)) return;
        int e = 0;
        switch (stat) {
            case Statistic::Maj: e = maj(s, ord); break;
            case Statistic::Fmaj: e = fmaj(s, ord); break;
            case Statistic::Length: e = length_b(s); break;
            default: break;
        }
        hist[e] += character_value(chi, s);
    });
    return poly_from_hist(hist);
}

TriPoly dist_tri_bruteforce(int n) {
    if (n < 1) throw std::domain_error("dist_tri_bruteforce: n must be positive");
    std::map<TriExp, long long> counts;
    for_each_sn(n, [&](const Perm& p) {
        ++counts[TriExp{inv(p), maj(p), last(p)}];
    });
    TriPoly out;
    for (const auto& [e, c] : counts) out.add_term(e, Int(static_cast<long>(c)));
    return out;
}

IntPoly last_fixed_dist_oracle(int n, int k, int eps) {
    if (n < 1) throw std::domain_error("last_fixed_dist_oracle: n must be positive");
    if (k < 1 || k > n)
        throw std::domain_error("last_fixed_dist_oracle: k outside 1..n");
    if (eps != 1 && eps != -1)
        throw std::domain_error("last_fixed_dist_oracle: eps must be +1 or -1");
    std::vector<long long> hist(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, 0);
    for_each_sn(n, [&](const Perm& p) {
        if (p(n) != k) return;
        hist[maj(p)] += eps == 1 ? 1 : sign(p);
    });
    return poly_from_hist(hist);
}

IntPoly un_sign_neg_oracle(int n) {
    if (n < 1) throw std::domain_error("un_sign_neg_oracle: n must be positive");
    std::vector<long long> hist(static_cast<std::size_t>(n) + 1, 0);
    for_each_un(n, [&](const SignedPerm& s) { hist[neg(s)] += sign_b(s); });
    return poly_from_hist(hist);
}

IntPoly subgroup_dist_oracle(Group g, int n) {
    if (g == Group::An) return dist_group(Group::An, Statistic::Maj, Character::Trivial, n);
    if (g == Group::BnPlus || g == Group::Dn || g == Group::C2WrAn)
        return dist_group(g, Statistic::Fmaj, Character::Trivial, n, Order::NegReversed);
    throw std::domain_error("subgroup_dist_oracle: expected a proper subgroup");
}

TriPoly a_n_bivariate(int n) {
    if (n < 1) throw std::domain_error("a_n_bivariate: n must be positive");
    std::map<TriExp, long long> counts;
    for_each_sn(n, [&](const Perm& p) {
        ++counts[TriExp{inv(p), maj(p), 0}];
    });
    TriPoly out;
    for (const auto& [e, c] : counts) out.add_term(e, Int(static_cast<long>(c)));
    return out;
}

CycloPoly a_n_at_root(const TriPoly& a_n, int m) {
    if (m < 1) throw std::domain_error("a_n_at_root: m must be positive");
    std::vector<CycloElem> powers;
    powers.reserve(m);
    for (int r = 0; r < m; ++r) powers.push_back(CycloElem::root_power(m, r));
    CycloPoly out(m);
    for (const auto& [e, c] : a_n.terms()) {
        if (e.z != 0)
            throw std::logic_error("a_n_at_root: unexpected third variable");
        out.add_term(e.y, CycloElem::from_int(m, c) * powers[e.x % m]);
    }
    return out;
}

CycloPoly a_n_at_root(int n, int m) {
    return a_n_at_root(a_n_bivariate(n), m);
}

TriPoly dist_tri_recurrence(int n) {
    if (n < 1) throw std::domain_error("dist_tri_recurrence: n must be positive");
    if (n > sn_cap())
        throw std::domain_error("dist_tri_recurrence: n outside 1.." +
                                std::to_string(sn_cap()));
    TriPoly f(Int(1));
    for (int k = 2; k <= n; ++k) {
        const TriPoly at_z1 = f.substitute_z_one();
        const TriPoly part1 = (TriPoly::monomial(Int(1), k, k - 1, 0) -
                               TriPoly::monomial(Int(1), 0, 0, k)) *
                              at_z1;
        // x^(k-1) * z * f(x, y, z/x): every z in f borrows one power of x.
        TriPoly shifted;
        for (const auto& [e, c] : f.terms()) {
            const int ex = e.x - e.z + (k - 1);
            if (ex < 0)
                throw std::logic_error("dist_tri_recurrence: negative exponent after "
                                       "substitution");
            shifted.add_term({ex, e.y, e.z + 1}, c);
        }
        const TriPoly part2 =
            (TriPoly(Int(1)) - TriPoly::monomial(Int(1), 0, k - 1, 0)) * shifted;
        f = exact_div_x_minus_z(part1 + part2);
    }
    return f;
}

TriPoly closed_form_gf(int n, int eps) {
    if (n < 1) throw std::domain_error("closed_form_gf: n must be positive");
    if (eps != 1 && eps != -1)
        throw std::domain_error("closed_form_gf: eps must be +1 or -1");
    IntPoly prefix(Int(1));
    int arg_sign = 1;  // eps^(i-1) for the i-th bracket
    for (int i = 1; i <= n - 1; ++i) {
        prefix *= scale_var(q_bracket(i), arg_sign);
        arg_sign *= eps;
    }
    // arg_sign is now eps^(n-1), the coefficient base of the last factor.
    TriPoly hom;
    int c = 1;
    for (int j = 0; j <= n - 1; ++j) {
        hom.add_term({0, j, n - 1 - j}, Int(c));
        c *= arg_sign;
    }
    return TriPoly::from_univariate(prefix, Var::Y) * hom;
}

IntPoly macmahon_poly(int n) {
    return q_factorial(n);
}

IntPoly gessel_simion_poly(int n) {
    return signed_q_factorial(n);
}

IntPoly last_fixed_dist_closed(int n, int k, int eps) {
    if (n < 1) throw std::domain_error("last_fixed_dist_closed: n must be positive");
    if (k < 1 || k > n)
        throw std::domain_error("last_fixed_dist_closed: k outside 1..n");
    if (eps != 1 && eps != -1)
        throw std::domain_error("last_fixed_dist_closed: eps must be +1 or -1");
    IntPoly prefix(Int(1));
    int arg_sign = 1;
    for (int i = 1; i <= n - 1; ++i) {
        prefix *= scale_var(q_bracket(i), arg_sign);
        arg_sign *= eps;
    }
    // (eps^(n-1))^(n-k), the sign picked up by the final factor at q^(n-k)
    const int c = (arg_sign == -1 && (n - k) % 2 == 1) ? -1 : 1;
    return prefix * IntPoly::monomial(Int(c), n - k);
}

IntPoly poincare_b_poly(int n) {
    if (n < 1) throw std::domain_error("poincare_b_poly: n must be positive");
    IntPoly acc(Int(1));
    for (int i = 1; i <= n; ++i) acc *= q_bracket(2 * i);
    return acc;
}

IntPoly signed_fmaj_closed(int n, Character chi) {
    if (n < 1) throw std::domain_error("signed_fmaj_closed: n must be positive");
    IntPoly acc(Int(1));
    for (int i = 1; i <= n; ++i) {
        int ci = 1;
        switch (chi) {
            case Character::Trivial: ci = 1; break;
            case Character::Sign: ci = i % 2 == 1 ? -1 : 1; break;
            case Character::NegChar: ci = -1; break;
            case Character::SignAbs: ci = i % 2 == 1 ? 1 : -1; break;
        }
        acc *= scale_var(q_bracket(2 * i), ci);
    }
    return acc;
}

IntPoly un_sign_neg_closed(int n) {
    if (n < 1) throw std::domain_error("un_sign_neg_closed: n must be positive");
    const IntPoly quad = IntPoly(Int(1)) + IntPoly::monomial(Int(1), 2);
    IntPoly acc = pow(quad, n / 2);
    if (n % 2 == 1) acc *= IntPoly(Int(1)) - IntPoly::monomial(Int(1), 1);
    return acc;
}

IntPoly subgroup_dist_closed(Group g, int n) {
    if (n < 1) throw std::domain_error("subgroup_dist_closed: n must be positive");
    switch (g) {
        case Group::An:
            return half(q_factorial(n) + signed_q_factorial(n));
        case Group::BnPlus:
            return half(poincare_b_poly(n) + signed_fmaj_closed(n, Character::Sign));
        case Group::Dn:
            return half(poincare_b_poly(n) + signed_fmaj_closed(n, Character::NegChar));
        case Group::C2WrAn:
            return half(poincare_b_poly(n) + signed_fmaj_closed(n, Character::SignAbs));
        default:
            throw std::domain_error("subgroup_dist_closed: expected a proper subgroup");
    }
}

bool verify_root_factorization(const TriPoly& a_n, int n, int m) {
    if (n < 1) throw std::domain_error("verify_root_factorization: n must be positive");
    if (m < 1) throw std::domain_error("verify_root_factorization: m must be positive");
    const int k = n / m;
    const int i = n % m;
    const CycloPoly an = a_n_at_root(a_n, m);
    const CycloPoly ai =
        i == 0 ? CycloPoly::one(m) : a_n_at_root(a_n_bivariate(i), m);
    const IntPoly one_minus_qm = IntPoly(Int(1)) - IntPoly::monomial(Int(1), m);
    const CycloPoly lhs = an * CycloPoly::image(q_pochhammer(i) * pow(one_minus_qm, k), m);
    const CycloPoly rhs = ai * CycloPoly::image(q_pochhammer(n), m);
    return lhs == rhs;
}

bool verify_root_factorization(int n, int m) {
    return verify_root_factorization(a_n_bivariate(n), n, m);
}

namespace {

// Bivariate polynomial in (q, r), truncated to total degree <= cap.
struct BiTrunc {
    int cap;
    std::vector<Int> c;

    explicit BiTrunc(int cap_)
        : cap(cap_), c(static_cast<std::size_t>(cap_ + 1) * (cap_ + 1), Int(0)) {}

    Int& at(int i, int j) { return c[static_cast<std::size_t>(i) * (cap + 1) + j]; }
    const Int& at(int i, int j) const {
        return c[static_cast<std::size_t>(i) * (cap + 1) + j];
    }
};

BiTrunc mul(const BiTrunc& a, const BiTrunc& b) {
    BiTrunc out(a.cap);
    for (int i1 = 0; i1 <= a.cap; ++i1)
        for (int j1 = 0; i1 + j1 <= a.cap; ++j1) {
            const Int& x = a.at(i1, j1);
            if (x == 0) continue;
            for (int i2 = 0; i1 + j1 + i2 <= a.cap; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= a.cap; ++j2) {
                    const Int& y = b.at(i2, j2);
                    if (y == 0) continue;
                    out.at(i1 + i2, j1 + j2) += x * y;
                }
        }
    return out;
}

BiTrunc embed_univariate(const IntPoly& p, bool in_q, int cap) {
    BiTrunc out(cap);
    for (int e = 0; e <= p.degree() && e <= cap; ++e) {
        if (in_q)
            out.at(e, 0) = p.coeff(e);
        else
            out.at(0, e) = p.coeff(e);
    }
    return out;
}

BiTrunc embed_bivariate(const TriPoly& p, int cap) {
    BiTrunc out(cap);
    for (const auto& [e, c] : p.terms()) {
        if (e.z != 0) throw std::logic_error("embed_bivariate: unexpected third variable");
        if (e.x + e.y <= cap) out.at(e.x, e.y) += c;
    }
    return out;
}

// Coefficients of u^0..u^n of the product over all monomials q^i r^j
// (total degree <= cap) of 1/(1 - q^i r^j u), truncated in (q, r).
// Processing one factor at a time, the new coefficient of u^v gains
// m * (already-updated coefficient of u^(v-1)); factors of total degree
// above the cap cannot touch the window and are skipped.
std::vector<BiTrunc> series_prefix(int n, int cap) {
    std::vector<BiTrunc> s(static_cast<std::size_t>(n) + 1, BiTrunc(cap));
    s[0].at(0, 0) = 1;
    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j)
            for (int v = 1; v <= n; ++v)
                for (int a = 0; a + i <= cap; ++a)
                    for (int b = 0; a + i + b + j <= cap; ++b)
                        s[v].at(a + i, b + j) += s[v - 1].at(a, b);
    return s;
}

bool gordon_roselle_compare(const BiTrunc& coeff_un, int n, int cap) {
    const IntPoly poch = q_pochhammer(n);
    const BiTrunc denom =
        mul(embed_univariate(poch, true, cap), embed_univariate(poch, false, cap));
    const BiTrunc lhs = mul(coeff_un, denom);
    const BiTrunc rhs = embed_bivariate(a_n_bivariate(n), cap);
    return lhs.c == rhs.c;
}

} // namespace

bool gordon_roselle_check_n(int n, int deg_cap) {
    if (n < 1) throw std::domain_error("gordon_roselle_check_n: n must be positive");
    if (deg_cap < n * n)
        throw std::domain_error("gordon_roselle_check_n: deg_cap must be at least n^2");
    const auto s = series_prefix(n, deg_cap);
    return gordon_roselle_compare(s[n], n, deg_cap);
}

bool gordon_roselle_check(int n_max, int deg_cap) {
    if (n_max < 1) throw std::domain_error("gordon_roselle_check: n_max must be positive");
    if (deg_cap < n_max * n_max)
        throw std::domain_error("gordon_roselle_check: deg_cap must be at least n_max^2");
    const auto s = series_prefix(n_max, deg_cap);
    for (int n = 1; n <= n_max; ++n)
        if (!gordon_roselle_compare(s[n], n, deg_cap)) return false;
    return true;
}

} // namespace mahonian
