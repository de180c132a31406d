#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace mahonian {

// Permutation of {1..n} in one-line notation; window()[i-1] = p(i).
// Value type, validated on construction.
class Perm {
public:
    explicit Perm(std::vector<int> window);
    static Perm identity(int n);

    int size() const { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[i - 1]; }
    const std::vector<int>& window() const { return window_; }

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return window_ < o.window_; }

private:
    friend void for_each_sn_range(int, std::uint64_t, std::uint64_t,
                                  const std::function<void(const Perm&)>&);

    std::vector<int> window_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

int inv(const Perm& p);
// Positions i in 1..n-1 with p(i) > p(i+1), ascending.
std::vector<int> descent_set(const Perm& p);
int maj(const Perm& p);
int last(const Perm& p);  // p(n) - 1
int sign(const Perm& p);  // (-1)^inv

// Appends k as the new final digit of a permutation of {1..n-1}, shifting
// every existing digit >= k up by one; a bijection S_{n-1} x {1..n} -> S_n.
Perm append_digit(const Perm& p, int k);

// Enumeration cap: defaults to 12, override with MAHONIAN_SN_CAP (at most
// 20, the limit of 64-bit rank arithmetic). Read once on first use.
int sn_cap();
std::uint64_t sn_count(int n);                // n!, requires n <= 20
Perm unrank_sn(int n, std::uint64_t rank);    // lexicographic rank

// Lexicographic enumeration of S_n. The rank-range form visits the
// half-open block [first_rank, first_rank + count), so disjoint blocks can
// be handed to independent workers.
void for_each_sn(int n, const std::function<void(const Perm&)>& visit);
void for_each_sn_range(int n, std::uint64_t first_rank, std::uint64_t count,
                       const std::function<void(const Perm&)>& visit);

} // namespace mahonian
