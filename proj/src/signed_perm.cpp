#include "mahonian/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mahonian {

namespace {

void validate_window(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    if (n < 1)
        throw std::domain_error("SignedPerm: window must contain at least one entry");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : w) {
        const int a = v < 0 ? -v : v;
        if (a < 1 || a > n)
            throw std::domain_error("SignedPerm: entry " + std::to_string(v) +
                                    " has absolute value outside 1.." + std::to_string(n));
        if (seen[a])
            throw std::domain_error("SignedPerm: duplicate absolute value " +
                                    std::to_string(a));
        seen[a] = 1;
    }
}

} // namespace

bool order_less(int a, int b, Order ord) {
    if (ord == Order::Natural) return a < b;
    // NegReversed: negatives below positives, negatives by absolute value.
    if ((a < 0) != (b < 0)) return a < 0;
    if (a < 0) return -a < -b;
    return a < b;
}

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
    validate_window(window_);
}

SignedPerm SignedPerm::identity(int n) {
    if (n < 1)
        throw std::domain_error("SignedPerm::identity: n must be positive");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return SignedPerm(std::move(w));
}

std::ostream& operator<<(std::ostream& os, const SignedPerm& s) {
    os << '(';
    for (int i = 1; i <= s.size(); ++i) {
        if (i > 1) os << ',';
        os << s(i);
    }
    return os << ')';
}

int neg(const SignedPerm& s) {
    int count = 0;
    for (int v : s.window())
        if (v < 0) ++count;
    return count;
}

int maj(const SignedPerm& s, Order ord) {
    const auto& w = s.window();
    int sum = 0;
    for (int i = 1; i < s.size(); ++i)
        if (order_less(w[i], w[i - 1], ord)) sum += i;
    return sum;
}

int fmaj(const SignedPerm& s, Order ord) {
    return 2 * maj(s, ord) + neg(s);
}

int length_b(const SignedPerm& s) {
    const auto& w = s.window();
    const int n = s.size();
    int len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) ++len;
    for (int v : w)
        if (v < 0) len -= v;
    return len;
}

int sign_b(const SignedPerm& s) {
    return length_b(s) % 2 == 0 ? 1 : -1;
}

int char_neg(const SignedPerm& s) {
    return neg(s) % 2 == 0 ? 1 : -1;
}

Perm abs_perm(const SignedPerm& s) {
    std::vector<int> w;
    w.reserve(s.size());
    for (int v : s.window()) w.push_back(v < 0 ? -v : v);
    return Perm(std::move(w));
}

int sign_abs(const SignedPerm& s) {
    return sign(abs_perm(s));
}

std::pair<SignedPerm, Perm> un_sn_decompose(const SignedPerm& s) {
    const auto& w = s.window();
    const int n = s.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return order_less(w[a], w[b], Order::NegReversed);
    });
    std::vector<int> tau(n), pi(n);
    for (int j = 0; j < n; ++j) {
        tau[j] = w[order[j]];
        pi[order[j]] = j + 1;
    }
    return {SignedPerm(std::move(tau)), Perm(std::move(pi))};
}

SignedPerm compose(const SignedPerm& tau, const Perm& pi) {
    if (tau.size() != pi.size())
        throw std::domain_error("compose: size mismatch");
    std::vector<int> w;
    w.reserve(tau.size());
    for (int i = 1; i <= pi.size(); ++i) w.push_back(tau(pi(i)));
    return SignedPerm(std::move(w));
}

int bn_cap() {
    static const int cap = [] {
        if (const char* s = std::getenv("MAHONIAN_BN_CAP")) {
            const int v = std::atoi(s);
            if (v >= 1) return std::min(v, 15);
        }
        return 8;
    }();
    return cap;
}

std::uint64_t bn_count(int n) {
    if (n < 0 || n > 15)
        throw std::domain_error("bn_count: 2^n * n! does not fit in 64 bits");
    return sn_count(n) << n;
}

void for_each_bn(int n, const std::function<void(const SignedPerm&)>& visit) {
    if (n < 1 || n > bn_cap())
        throw std::domain_error("for_each_bn: n outside 1.." + std::to_string(bn_cap()));
    for_each_bn_range(n, 0, sn_count(n), visit);
}

void for_each_bn_range(int n, std::uint64_t first_abs_rank, std::uint64_t abs_count,
                       const std::function<void(const SignedPerm&)>& visit) {
    if (n < 1 || n > bn_cap())
        throw std::domain_error("for_each_bn_range: n outside 1.." +
                                std::to_string(bn_cap()));
    const std::uint64_t total = sn_count(n);
    if (first_abs_rank > total || abs_count > total - first_abs_rank)
        throw std::domain_error("for_each_bn_range: rank block outside 0..n!");
    if (abs_count == 0) return;
    Perm base = unrank_sn(n, first_abs_rank);
    SignedPerm s = SignedPerm::identity(n);
    const std::uint64_t masks = std::uint64_t{1} << n;
    for (std::uint64_t i = 0;;) {
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            for (int pos = 0; pos < n; ++pos) {
                const int v = base(pos + 1);
                s.window_[pos] = (mask >> pos) & 1 ? -v : v;
            }
            visit(s);
        }
        if (++i == abs_count) break;
        std::vector<int> w = base.window();
        std::next_permutation(w.begin(), w.end());
        base = Perm(std::move(w));
    }
}

void for_each_un(int n, const std::function<void(const SignedPerm&)>& visit) {
    if (n < 1 || n > bn_cap())
        throw std::domain_error("for_each_un: n outside 1.." + std::to_string(bn_cap()));
    SignedPerm s = SignedPerm::identity(n);
    const std::uint64_t masks = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        // Negated values ascend by absolute value, then the rest ascend:
        // exactly the windows increasing under NegReversed.
        int pos = 0;
        for (int v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1) s.window_[pos++] = -v;
        for (int v = 1; v <= n; ++v)
            if (!((mask >> (v - 1)) & 1)) s.window_[pos++] = v;
        visit(s);
    }
}

} // namespace mahonian
