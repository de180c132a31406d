#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "mahonian/perm.hpp"

namespace mahonian {

// Total orders on {-n..-1, 1..n} used when reading descents of a signed
// window. NegReversed puts every negative value below every positive one,
// with negatives ordered by absolute value; Natural is plain integer order.
enum class Order {
    NegReversed,  // -1 < -2 < ... < -n < 1 < 2 < ... < n
    Natural,      // -n < ... < -1 < 1 < ... < n
};

bool order_less(int a, int b, Order ord);

// Signed permutation: the window holds sigma(1..n), nonzero integers whose
// absolute values permute {1..n}. sigma(-a) = -sigma(a) is implied, so the
// window alone determines the group element.
class SignedPerm {
public:
    explicit SignedPerm(std::vector<int> window);
    static SignedPerm identity(int n);

    int size() const { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[i - 1]; }
    const std::vector<int>& window() const { return window_; }

    bool operator==(const SignedPerm&) const = default;
    bool operator<(const SignedPerm& o) const { return window_ < o.window_; }

private:
    friend void for_each_bn_range(int, std::uint64_t, std::uint64_t,
                                  const std::function<void(const SignedPerm&)>&);
    friend void for_each_un(int, const std::function<void(const SignedPerm&)>&);

    std::vector<int> window_;
};

std::ostream& operator<<(std::ostream& os, const SignedPerm& s);

int neg(const SignedPerm& s);              // count of negative window entries
int maj(const SignedPerm& s, Order ord);   // sum of descent positions under ord
int fmaj(const SignedPerm& s, Order ord);  // 2*maj + neg
int length_b(const SignedPerm& s);         // Coxeter length in the signed group
int sign_b(const SignedPerm& s);           // (-1)^length_b
int char_neg(const SignedPerm& s);         // (-1)^neg
Perm abs_perm(const SignedPerm& s);
int sign_abs(const SignedPerm& s);         // sign of the unsigned pattern

// Every signed permutation factors uniquely as tau composed with pi, where
// tau's window is increasing under NegReversed (one of 2^n sign-choice
// coset representatives) and pi is an unsigned permutation. Returns
// (tau, pi) with s(i) = tau(pi(i)).
std::pair<SignedPerm, Perm> un_sn_decompose(const SignedPerm& s);
SignedPerm compose(const SignedPerm& tau, const Perm& pi);

// Enumeration cap: defaults to 8, override with MAHONIAN_BN_CAP (at most
// 15). Read once on first use.
int bn_cap();
std::uint64_t bn_count(int n);  // 2^n * n!

// Enumerates all 2^n n! signed permutations: unsigned patterns in
// lexicographic order, and for each pattern all sign masks ascending (mask
// bit i-1 set negates position i). The range form splits on pattern rank.
void for_each_bn(int n, const std::function<void(const SignedPerm&)>& visit);
void for_each_bn_range(int n, std::uint64_t first_abs_rank, std::uint64_t abs_count,
                       const std::function<void(const SignedPerm&)>& visit);

// Enumerates the 2^n coset representatives with NegReversed-increasing
// windows, in ascending order of the negated-value subset mask.
void for_each_un(int n, const std::function<void(const SignedPerm&)>& visit);

} // namespace mahonian
