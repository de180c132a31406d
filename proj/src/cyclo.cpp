#include "mahonian/cyclo.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mahonian {

namespace {

// Coefficients of the m-th cyclotomic polynomial, cached; map nodes are
// stable so returned references stay valid.
const std::vector<Int>& phi_coeffs(int m) {
    static std::mutex mu;
    static std::map<int, std::vector<Int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, cyclotomic(m).coeffs()).first;
    return it->second;
}

// In-place long division of a coefficient vector by the monic polynomial
// phi; on return v holds the residue, resized to deg(phi).
void reduce_vec(std::vector<Int>& v, const std::vector<Int>& phi) {
    const int d = static_cast<int>(phi.size()) - 1;
    for (int e = static_cast<int>(v.size()) - 1; e >= d; --e) {
        if (v[e] == 0) continue;
        const Int c = v[e];
        for (int j = 0; j <= d; ++j) v[e - d + j] -= c * phi[j];
    }
    v.resize(d, Int(0));
}

void require_same_order(int a, int b, const char* what) {
    if (a != b)
        throw std::domain_error(std::string(what) + ": mixed root orders " +
                                std::to_string(a) + " and " + std::to_string(b));
}

} // namespace

CycloElem::CycloElem(int m) : m_(m) {
    if (m < 1) throw std::domain_error("CycloElem: m must be positive");
    coords_.assign(phi_coeffs(m).size() - 1, Int(0));
}

CycloElem CycloElem::from_int(int m, Int v) {
    CycloElem e(m);
    e.coords_[0] = std::move(v);
    return e;
}

CycloElem CycloElem::root_power(int m, long long e) {
    if (e < 0) throw std::domain_error("CycloElem::root_power: negative exponent");
    CycloElem out(m);
    std::vector<Int> v(static_cast<std::size_t>(e % m) + 1, Int(0));
    v.back() = 1;
    reduce_vec(v, phi_coeffs(m));
    out.coords_ = std::move(v);
    return out;
}

bool CycloElem::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    require_same_order(m_, o.m_, "CycloElem::operator+=");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    require_same_order(m_, o.m_, "CycloElem::operator-=");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    require_same_order(m_, o.m_, "CycloElem::operator*=");
    const std::size_t d = coords_.size();
    std::vector<Int> out(2 * d > 0 ? 2 * d - 1 : 0, Int(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) out[i + j] += coords_[i] * o.coords_[j];
    }
    reduce_vec(out, phi_coeffs(m_));
    coords_ = std::move(out);
    return *this;
}

CycloElem CycloElem::operator-() const {
    CycloElem out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

bool CycloElem::operator==(const CycloElem& o) const {
    require_same_order(m_, o.m_, "CycloElem::operator==");
    return coords_ == o.coords_;
}

std::string render(const CycloElem& e) {
    return render(IntPoly::from_coeffs(e.coords()), "t");
}

std::ostream& operator<<(std::ostream& os, const CycloElem& e) {
    return os << render(e);
}

CycloElem reduce_mod_cyclotomic(const IntPoly& p, int m) {
    CycloElem out(m);
    std::vector<Int> v = p.coeffs();
    reduce_vec(v, phi_coeffs(m));
    out.coords_ = std::move(v);
    return out;
}

CycloPoly::CycloPoly(int m) : m_(m) {
    if (m < 1) throw std::domain_error("CycloPoly: m must be positive");
}

CycloPoly CycloPoly::one(int m) {
    CycloPoly p(m);
    p.coeffs_.push_back(CycloElem::from_int(m, Int(1)));
    return p;
}

CycloPoly CycloPoly::image(const IntPoly& p, int m) {
    CycloPoly out(m);
    out.coeffs_.assign(static_cast<std::size_t>(p.degree() + 1), CycloElem(m));
    for (int e = 0; e <= p.degree(); ++e)
        out.coeffs_[e] = CycloElem::from_int(m, p.coeff(e));
    out.trim();
    return out;
}

CycloElem CycloPoly::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(coeffs_.size())) return CycloElem(m_);
    return coeffs_[e];
}

void CycloPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void CycloPoly::add_term(int e, const CycloElem& c) {
    require_same_order(m_, c.root_order(), "CycloPoly::add_term");
    if (e < 0) throw std::domain_error("CycloPoly::add_term: negative exponent");
    if (static_cast<int>(coeffs_.size()) <= e)
        coeffs_.resize(static_cast<std::size_t>(e) + 1, CycloElem(m_));
    coeffs_[e] += c;
    trim();
}

CycloPoly& CycloPoly::operator+=(const CycloPoly& o) {
    require_same_order(m_, o.m_, "CycloPoly::operator+=");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), CycloElem(m_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

CycloPoly& CycloPoly::operator-=(const CycloPoly& o) {
    require_same_order(m_, o.m_, "CycloPoly::operator-=");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), CycloElem(m_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
    require_same_order(a.root_order(), b.root_order(), "CycloPoly::operator*");
    CycloPoly out(a.root_order());
    if (a.degree() < 0 || b.degree() < 0) return out;
    out.coeffs_.assign(static_cast<std::size_t>(a.degree() + b.degree()) + 1,
                       CycloElem(a.root_order()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    out.trim();
    return out;
}

CycloPoly& CycloPoly::operator*=(const CycloPoly& o) {
    *this = *this * o;
    return *this;
}

bool CycloPoly::operator==(const CycloPoly& o) const {
    require_same_order(m_, o.m_, "CycloPoly::operator==");
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

std::string render(const CycloPoly& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        const CycloElem c = p.coeff(e);
        if (c.is_zero()) continue;
        if (!first) out += " + ";
        out += '(' + render(c) + ')';
        if (e >= 1) {
            out += 'q';
            if (e >= 2) {
                out += '^';
                out += std::to_string(e);
            }
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CycloPoly& p) {
    return os << render(p);
}

CycloElem olive_qbinom_at_root(int n, int k, int m) {
    if (n < 0 || k < 0)
        throw std::domain_error("olive_qbinom_at_root: n and k must be nonnegative");
    if (m < 1) throw std::domain_error("olive_qbinom_at_root: m must be positive");
    if (k > n) return CycloElem(m);
    const int a1 = k / m, b1 = k % m;
    const int a2 = (n - k) / m, b2 = (n - k) % m;
    const CycloElem small = reduce_mod_cyclotomic(q_binomial(b1 + b2, b1), m);
    return CycloElem::from_int(m, binomial(static_cast<unsigned long>(a1 + a2),
                                           static_cast<unsigned long>(a1))) *
           small;
}

Int qbinom_at_minus1(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("qbinom_at_minus1: need 0 <= k <= n");
    if (k % 2 == 1 && (n - k) % 2 == 1) return Int(0);
    return binomial(static_cast<unsigned long>(n / 2), static_cast<unsigned long>(k / 2));
}

} // namespace mahonian
