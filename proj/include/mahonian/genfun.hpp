#pragma once

#include <optional>

#include "mahonian/cyclo.hpp"
#include "mahonian/int_poly.hpp"
#include "mahonian/perm.hpp"
#include "mahonian/signed_perm.hpp"
#include "mahonian/tri_poly.hpp"

namespace mahonian {

enum class Group { Sn, An, Bn, BnPlus, Dn, C2WrAn };
enum class Character { Trivial, Sign, NegChar, SignAbs };
enum class Statistic { Inv, Maj, Fmaj, Length };

// ---- enumeration oracles (exhaustive, independent of the closed forms) ----

// Character-weighted distribution of a statistic over a group or one of
// its index-2 subgroups. Unsigned groups take inv/maj with the trivial or
// sign character; signed groups take maj/fmaj/length with any of the four
// characters. The optional last-digit filter applies to the full unsigned
// group only.
IntPoly dist_group(Group g, Statistic stat, Character chi, int n,
                   Order ord = Order::NegReversed,
                   std::optional<int> last_digit = std::nullopt);

// Joint distribution of (inv, maj, last) over unsigned permutations,
// encoded with x^inv y^maj z^last.
TriPoly dist_tri_bruteforce(int n);

// Sign-weighted maj distribution over permutations with a fixed final
// digit k; the weight at each permutation is eps^inv.
IntPoly last_fixed_dist_oracle(int n, int k, int eps);

// Sign-weighted neg distribution over the 2^n NegReversed-increasing
// coset representatives.
IntPoly un_sign_neg_oracle(int n);

IntPoly subgroup_dist_oracle(Group g, int n);

// Bivariate (inv, maj) distribution encoded with x^inv y^maj.
TriPoly a_n_bivariate(int n);
CycloPoly a_n_at_root(int n, int m);
CycloPoly a_n_at_root(const TriPoly& a_n, int m);

// ---- closed forms ----

// Same trivariate distribution, built from the append-digit recurrence
// instead of enumeration.
TriPoly dist_tri_recurrence(int n);

// Product form of the trivariate distribution with x specialized to
// eps = +1 or -1: a bracket product times a homogenized geometric factor
// in y and z.
TriPoly closed_form_gf(int n, int eps);

IntPoly macmahon_poly(int n);       // maj (and inv) distribution: [n]_q!
IntPoly gessel_simion_poly(int n);  // sign-weighted maj distribution
IntPoly last_fixed_dist_closed(int n, int k, int eps);
IntPoly poincare_b_poly(int n);     // length distribution of the signed group
IntPoly signed_fmaj_closed(int n, Character chi);
IntPoly un_sign_neg_closed(int n);
IntPoly subgroup_dist_closed(Group g, int n);

// ---- identity checks ----

// Cross-multiplied polynomial identity relating the bivariate distribution
// at a primitive m-th root of unity for n and for n mod m.
bool verify_root_factorization(int n, int m);
bool verify_root_factorization(const TriPoly& a_n, int n, int m);

// Truncated expansion of the triple product generating function: the
// coefficient of u^n, multiplied back by both Pochhammer factors, must
// match the bivariate distribution up to total (q, r)-degree deg_cap.
bool gordon_roselle_check_n(int n, int deg_cap);
bool gordon_roselle_check(int n_max, int deg_cap);

} // namespace mahonian
