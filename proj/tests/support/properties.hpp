#pragma once

// Randomized and exhaustive law checks shared by the unit tests and the
// acceptance driver. Every check returns std::nullopt on success or a
// short description of the first violated law.

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mahonian/cyclo.hpp"
#include "mahonian/genfun.hpp"
#include "mahonian/int_poly.hpp"
#include "mahonian/perm.hpp"
#include "mahonian/tri_poly.hpp"

namespace prop {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kSeed = 0x5eed5eed1234abcdULL;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline mahonian::Int rand_coeff(Rng& rng, int max_abs) {
    return mahonian::Int(static_cast<long>(uniform(rng, -max_abs, max_abs)));
}

inline mahonian::IntPoly rand_int_poly(Rng& rng, int max_deg, int max_abs) {
    std::vector<mahonian::Int> c(static_cast<std::size_t>(uniform(rng, 0, max_deg)) + 1);
    for (auto& x : c) x = rand_coeff(rng, max_abs);
    return mahonian::IntPoly::from_coeffs(std::move(c));
}

inline mahonian::TriPoly rand_tri_poly(Rng& rng, int max_terms, int max_exp, int max_abs) {
    mahonian::TriPoly p;
    const int t = uniform(rng, 0, max_terms);
    for (int i = 0; i < t; ++i)
        p.add_term({uniform(rng, 0, max_exp), uniform(rng, 0, max_exp),
                    uniform(rng, 0, max_exp)},
                   rand_coeff(rng, max_abs));
    return p;
}

inline mahonian::CycloElem rand_cyclo_elem(Rng& rng, int m, int max_abs) {
    return mahonian::reduce_mod_cyclotomic(rand_int_poly(rng, 2 * m + 3, max_abs), m);
}

inline mahonian::CycloPoly rand_cyclo_poly(Rng& rng, int m, int max_deg, int max_abs) {
    mahonian::CycloPoly p(m);
    const int d = uniform(rng, 0, max_deg);
    for (int e = 0; e <= d; ++e) p.add_term(e, rand_cyclo_elem(rng, m, max_abs));
    return p;
}

template <typename T>
std::optional<std::string> ring_axioms_case(const std::string& label, const T& a,
                                            const T& b, const T& c, const T& zero,
                                            const T& one) {
    const auto fail = [&](const char* law) { return label + ": " + law; };
    if (!(a + b == b + a)) return fail("a+b == b+a");
    if (!((a + b) + c == a + (b + c))) return fail("(a+b)+c == a+(b+c)");
    if (!(a + zero == a)) return fail("a+0 == a");
    if (!(a - a == zero)) return fail("a-a == 0");
    if (!(a * b == b * a)) return fail("a*b == b*a");
    if (!((a * b) * c == a * (b * c))) return fail("(a*b)*c == a*(b*c)");
    if (!(a * one == a)) return fail("a*1 == a");
    if (!(a * (b + c) == a * b + a * c)) return fail("a*(b+c) == a*b + a*c");
    return std::nullopt;
}

inline std::optional<std::string> check_int_poly_axioms(Rng& rng, int cases) {
    using mahonian::Int;
    using mahonian::IntPoly;
    const IntPoly zero;
    const IntPoly one(Int(1));
    for (int i = 0; i < cases; ++i) {
        const auto a = rand_int_poly(rng, 8, 9);
        const auto b = rand_int_poly(rng, 8, 9);
        const auto c = rand_int_poly(rng, 8, 9);
        if (auto err = ring_axioms_case("IntPoly case " + std::to_string(i), a, b, c,
                                        zero, one))
            return err;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_tri_poly_axioms(Rng& rng, int cases) {
    using mahonian::Int;
    using mahonian::TriPoly;
    const TriPoly zero;
    const TriPoly one(Int(1));
    for (int i = 0; i < cases; ++i) {
        const auto a = rand_tri_poly(rng, 6, 4, 9);
        const auto b = rand_tri_poly(rng, 6, 4, 9);
        const auto c = rand_tri_poly(rng, 6, 4, 9);
        if (auto err = ring_axioms_case("TriPoly case " + std::to_string(i), a, b, c,
                                        zero, one))
            return err;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_cyclo_elem_axioms(Rng& rng, int cases) {
    using mahonian::CycloElem;
    using mahonian::Int;
    for (int i = 0; i < cases; ++i) {
        const int m = uniform(rng, 1, 12);
        const CycloElem zero(m);
        const CycloElem one = CycloElem::from_int(m, Int(1));
        const auto a = rand_cyclo_elem(rng, m, 9);
        const auto b = rand_cyclo_elem(rng, m, 9);
        const auto c = rand_cyclo_elem(rng, m, 9);
        if (auto err = ring_axioms_case(
                "CycloElem case " + std::to_string(i) + " (m=" + std::to_string(m) + ")",
                a, b, c, zero, one))
            return err;
    }
    return std::nullopt;
}

inline std::optional<std::string> check_cyclo_poly_axioms(Rng& rng, int cases) {
    using mahonian::CycloPoly;
    for (int i = 0; i < cases; ++i) {
        const int m = uniform(rng, 1, 8);
        const CycloPoly zero(m);
        const CycloPoly one = CycloPoly::one(m);
        const auto a = rand_cyclo_poly(rng, m, 4, 9);
        const auto b = rand_cyclo_poly(rng, m, 4, 9);
        const auto c = rand_cyclo_poly(rng, m, 4, 9);
        if (auto err = ring_axioms_case(
                "CycloPoly case " + std::to_string(i) + " (m=" + std::to_string(m) + ")",
                a, b, c, zero, one))
            return err;
    }
    return std::nullopt;
}

// reduce_mod_cyclotomic must be a ring homomorphism and agree with plain
// embedding composition.
inline std::optional<std::string> check_reduce_homomorphism(Rng& rng, int cases) {
    using mahonian::reduce_mod_cyclotomic;
    for (int i = 0; i < cases; ++i) {
        const int m = uniform(rng, 1, 12);
        const auto p = rand_int_poly(rng, 20, 9);
        const auto q = rand_int_poly(rng, 20, 9);
        const auto label = "reduce case " + std::to_string(i) + " (m=" + std::to_string(m) + ")";
        if (!(reduce_mod_cyclotomic(p + q, m) ==
              reduce_mod_cyclotomic(p, m) + reduce_mod_cyclotomic(q, m)))
            return label + ": additive";
        if (!(reduce_mod_cyclotomic(p * q, m) ==
              reduce_mod_cyclotomic(p, m) * reduce_mod_cyclotomic(q, m)))
            return label + ": multiplicative";
    }
    return std::nullopt;
}

inline std::optional<std::string> check_exact_div_roundtrip(Rng& rng, int cases) {
    using mahonian::Int;
    using mahonian::TriPoly;
    const TriPoly divisor =
        TriPoly::monomial(Int(1), 1, 0, 0) - TriPoly::monomial(Int(1), 0, 0, 1);
    for (int i = 0; i < cases; ++i) {
        const auto p = rand_tri_poly(rng, 8, 5, 9);
        const auto q = mahonian::exact_div_x_minus_z(divisor * p);
        if (!(q == p))
            return "exact_div round trip failed on case " + std::to_string(i);
    }
    return std::nullopt;
}

inline std::optional<std::string> check_render_parse_roundtrip(Rng& rng, int cases) {
    for (int i = 0; i < cases; ++i) {
        const auto p = rand_int_poly(rng, 12, 99);
        if (!(mahonian::parse_int_poly(mahonian::render(p)) == p))
            return "univariate render/parse round trip failed on case " + std::to_string(i);
        const auto t = rand_tri_poly(rng, 8, 6, 99);
        if (!(mahonian::parse_tri_poly(mahonian::render(t)) == t))
            return "trivariate render/parse round trip failed on case " + std::to_string(i);
    }
    return std::nullopt;
}

// Product of the cyclotomic polynomials over all divisors of m.
inline std::optional<std::string> check_phi_product(int m_max) {
    using mahonian::Int;
    using mahonian::IntPoly;
    for (int m = 1; m <= m_max; ++m) {
        IntPoly product(Int(1));
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) product *= mahonian::cyclotomic(d);
        const IntPoly expected = IntPoly::monomial(Int(1), m) - IntPoly(Int(1));
        if (!(product == expected))
            return "cyclotomic product failed at m=" + std::to_string(m);
    }
    return std::nullopt;
}

// Residue of the (m-1)-st Pochhammer product at a primitive m-th root.
inline std::optional<std::string> check_pochhammer_residue(int m_max) {
    using mahonian::CycloElem;
    using mahonian::Int;
    for (int m = 1; m <= m_max; ++m) {
        const auto lhs = mahonian::reduce_mod_cyclotomic(mahonian::q_pochhammer(m - 1), m);
        if (!(lhs == CycloElem::from_int(m, Int(m))))
            return "pochhammer residue failed at m=" + std::to_string(m);
    }
    return std::nullopt;
}

// Statistic update laws and bijectivity of the append-digit construction,
// exhaustively for every window size up to n_max.
inline std::optional<std::string> check_append_digit(int n_max) {
    using mahonian::Perm;
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::vector<int>> images;
        std::optional<std::string> err;
        mahonian::for_each_sn(n - 1, [&](const Perm& p) {
            if (err) return;
            for (int k = 1; k <= n; ++k) {
                const Perm q = mahonian::append_digit(p, k);
                const auto tag = [&] {
                    return " at n=" + std::to_string(n) + " k=" + std::to_string(k);
                };
                if (mahonian::last(q) != k - 1) {
                    err = "append_digit last law failed" + tag();
                    return;
                }
                if (mahonian::inv(q) != mahonian::inv(p) + (n - k)) {
                    err = "append_digit inv law failed" + tag();
                    return;
                }
                const int bump = p(n - 1) >= k ? n - 1 : 0;
                if (mahonian::maj(q) != mahonian::maj(p) + bump) {
                    err = "append_digit maj law failed" + tag();
                    return;
                }
                std::vector<int> expected_des = mahonian::descent_set(p);
                if (bump > 0) expected_des.push_back(n - 1);
                if (mahonian::descent_set(q) != expected_des) {
                    err = "append_digit descent law failed" + tag();
                    return;
                }
                images.insert(q.window());
            }
        });
        if (err) return err;
        if (images.size() != mahonian::sn_count(n))
            return "append_digit fails to be a bijection at n=" + std::to_string(n);
    }
    return std::nullopt;
}

// The Pascal-recurrence row must agree with the exact-division route.
inline std::optional<std::string> check_qbinom_row(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        const auto row = mahonian::q_binomial_row(n);
        for (int k = 0; k <= n; ++k)
            if (!(row[k] == mahonian::q_binomial(n, k)))
                return "q_binomial_row mismatch at n=" + std::to_string(n) +
                       " k=" + std::to_string(k);
    }
    return std::nullopt;
}

} // namespace prop
