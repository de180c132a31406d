#include "mahonian/perm.hpp"

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
        throw std::domain_error("Perm: window must contain at least one entry");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n)
            throw std::domain_error("Perm: entry " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
        if (seen[v])
            throw std::domain_error("Perm: duplicate entry " + std::to_string(v));
        seen[v] = 1;
    }
}

} // namespace

Perm::Perm(std::vector<int> window) : window_(std::move(window)) {
    validate_window(window_);
}

Perm Perm::identity(int n) {
    if (n < 1)
        throw std::domain_error("Perm::identity: n must be positive");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
    os << '(';
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ',';
        os << p(i);
    }
    return os << ')';
}

int inv(const Perm& p) {
    const auto& w = p.window();
    const int n = p.size();
    int count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

std::vector<int> descent_set(const Perm& p) {
    const auto& w = p.window();
    std::vector<int> des;
    for (int i = 1; i < p.size(); ++i)
        if (w[i - 1] > w[i]) des.push_back(i);
    return des;
}

int maj(const Perm& p) {
    const auto& w = p.window();
    int sum = 0;
    for (int i = 1; i < p.size(); ++i)
        if (w[i - 1] > w[i]) sum += i;
    return sum;
}

int last(const Perm& p) {
    return p.window().back() - 1;
}

int sign(const Perm& p) {
    return inv(p) % 2 == 0 ? 1 : -1;
}

Perm append_digit(const Perm& p, int k) {
    const int n = p.size() + 1;
    if (k < 1 || k > n)
        throw std::domain_error("append_digit: k outside 1.." + std::to_string(n));
    std::vector<int> w;
    w.reserve(n);
    for (int v : p.window()) w.push_back(v < k ? v : v + 1);
    w.push_back(k);
    return Perm(std::move(w));
}

int sn_cap() {
    static const int cap = [] {
        if (const char* s = std::getenv("MAHONIAN_SN_CAP")) {
            const int v = std::atoi(s);
            if (v >= 1) return std::min(v, 20);
        }
        return 12;
    }();
    return cap;
}

std::uint64_t sn_count(int n) {
    if (n < 0 || n > 20)
        throw std::domain_error("sn_count: n! does not fit in 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Perm unrank_sn(int n, std::uint64_t rank) {
    if (n < 1)
        throw std::domain_error("unrank_sn: n must be positive");
    if (rank >= sn_count(n))
        throw std::domain_error("unrank_sn: rank outside 0..n!-1");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t block = sn_count(i);
        const auto d = static_cast<std::ptrdiff_t>(rank / block);
        rank %= block;
        w.push_back(pool[d]);
        pool.erase(pool.begin() + d);
    }
    return Perm(std::move(w));
}

void for_each_sn(int n, const std::function<void(const Perm&)>& visit) {
    if (n < 1 || n > sn_cap())
        throw std::domain_error("for_each_sn: n outside 1.." + std::to_string(sn_cap()));
    for_each_sn_range(n, 0, sn_count(n), visit);
}

void for_each_sn_range(int n, std::uint64_t first_rank, std::uint64_t count,
                       const std::function<void(const Perm&)>& visit) {
    if (n < 1 || n > sn_cap())
        throw std::domain_error("for_each_sn_range: n outside 1.." +
                                std::to_string(sn_cap()));
    const std::uint64_t total = sn_count(n);
    if (first_rank > total || count > total - first_rank)
        throw std::domain_error("for_each_sn_range: rank block outside 0..n!");
    if (count == 0) return;
    Perm p = unrank_sn(n, first_rank);
    for (std::uint64_t i = 0;;) {
        visit(p);
        if (++i == count) break;
        std::next_permutation(p.window_.begin(), p.window_.end());
    }
}

} // namespace mahonian
