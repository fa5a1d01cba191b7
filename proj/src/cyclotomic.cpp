#include "ffhg/cyclotomic.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ffhg {

namespace {

constexpr std::array<int, 8> kConductors = {1, 2, 3, 4, 6, 8, 12, 24};

int phi_of(int n) {
    switch (n) {
    case 1: case 2: return 1;
    case 3: case 4: case 6: return 2;
    case 8: case 12: return 4;
    case 24: return 8;
    }
    throw ConductorMismatch("unsupported conductor " + std::to_string(n));
}

std::vector<std::vector<long long>> build_power_table(int n) {
    int phi = phi_of(n);
    // zeta^phi in the basis, from the cyclotomic polynomial Phi_N.
    std::vector<long long> fold(phi, 0);
    switch (n) {
    case 1: fold[0] = 1; break;                 // x - 1
    case 2: fold[0] = -1; break;                // x + 1
    case 3: fold[0] = -1; fold[1] = -1; break;  // x^2 + x + 1
    case 4: fold[0] = -1; break;                // x^2 + 1
    case 6: fold[0] = -1; fold[1] = 1; break;   // x^2 - x + 1
    case 8: fold[0] = -1; break;                // x^4 + 1
    case 12: fold[0] = -1; fold[2] = 1; break;  // x^4 - x^2 + 1
    case 24: fold[0] = -1; fold[4] = 1; break;  // x^8 - x^4 + 1
    }

    std::vector<std::vector<long long>> tab(n, std::vector<long long>(phi, 0));
    for (int k = 0; k < std::min(n, phi); ++k) tab[k][k] = 1;
    for (int k = phi; k < n; ++k) {
        const auto& prev = tab[k - 1];
        auto& row = tab[k];
        long long top = prev[phi - 1];
        for (int j = phi - 1; j >= 1; --j) row[j] = prev[j - 1] + top * fold[j];
        row[0] = top * fold[0];
    }
    return tab;
}

// rep(N)[k] = coordinates of zeta_N^k in the power basis, k in [0, N).
const std::vector<std::vector<long long>>& power_table(int n) {
    static const std::array<std::vector<std::vector<long long>>, 25> cache = [] {
        std::array<std::vector<std::vector<long long>>, 25> c;
        for (int m : kConductors) c[m] = build_power_table(m);
        return c;
    }();
    if (!conductor_allowed(n)) throw ConductorMismatch("unsupported conductor " + std::to_string(n));
    return cache[n];
}

} // namespace

bool conductor_allowed(int n) {
    for (int c : kConductors)
        if (c == n) return true;
    return false;
}

CycInt::CycInt(int conductor) : n_(conductor), c_(phi_of(conductor)) {}

CycInt CycInt::from_int(long long v, int conductor) {
    CycInt r(conductor);
    r.c_[0] = (long)v;
    return r;
}

CycInt CycInt::from_mpz(const mpz_class& v, int conductor) {
    CycInt r(conductor);
    r.c_[0] = v;
    return r;
}

CycInt CycInt::zeta(int conductor) { return zeta_pow(conductor, 1); }

CycInt CycInt::zeta_pow(int conductor, long long k) {
    CycInt r(conductor);
    long long e = k % conductor;
    if (e < 0) e += conductor;
    const auto& row = power_table(conductor)[e];
    for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = (long)row[j];
    return r;
}

CycInt CycInt::from_root_counts(int conductor, std::span<const long long> counts) {
    if ((int)counts.size() != conductor) throw ConductorMismatch("from_root_counts: histogram length must equal conductor");
    CycInt r(conductor);
    const auto& tab = power_table(conductor);
    for (int k = 0; k < conductor; ++k) {
        if (counts[k] == 0) continue;
        for (std::size_t j = 0; j < r.c_.size(); ++j)
            if (tab[k][j] != 0) r.c_[j] += (long)(counts[k] * tab[k][j]);
    }
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

mpz_class CycInt::rational_part() const {
    if (!is_rational()) throw NotRational("value is not a rational integer: " + str());
    return c_[0];
}

CycInt CycInt::operator-() const {
    CycInt r(n_);
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    if (n_ != o.n_) throw ConductorMismatch("add: conductor mismatch");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    if (n_ != o.n_) throw ConductorMismatch("sub: conductor mismatch");
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.n_ != b.n_) throw ConductorMismatch("mul: conductor mismatch (embed first)");
    int phi = (int)a.c_.size();
    std::vector<mpz_class> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    CycInt r(a.n_);
    const auto& tab = power_table(a.n_);
    for (int k = 0; k < (int)prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < phi) {
            r.c_[k] += prod[k];
        } else {
            for (int j = 0; j < phi; ++j)
                if (tab[k][j] != 0) r.c_[j] += prod[k] * (long)tab[k][j];
        }
    }
    return r;
}

bool operator==(const CycInt& a, const CycInt& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

CycInt CycInt::embedded(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0 || !conductor_allowed(m))
        throw ConductorMismatch("embed: " + std::to_string(n_) + " does not divide " + std::to_string(m));
    CycInt r(m);
    const auto& tab = power_table(m);
    int step = m / n_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = tab[(int)i * step];
        for (std::size_t j = 0; j < r.c_.size(); ++j)
            if (row[j] != 0) r.c_[j] += c_[i] * (long)row[j];
    }
    return r;
}

CycInt CycInt::galois(long long j) const {
    long long e = j % n_;
    if (e < 0) e += n_;
    if (std::gcd(e, (long long)n_) != 1) throw NotCoprime("galois: exponent not coprime to conductor");
    CycInt r(n_);
    const auto& tab = power_table(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = tab[(int)((i * e) % n_)];
        for (std::size_t k = 0; k < r.c_.size(); ++k)
            if (row[k] != 0) r.c_[k] += c_[i] * (long)row[k];
    }
    return r;
}

CycInt CycInt::conj() const { return n_ <= 2 ? *this : galois(n_ - 1); }

mpz_class CycInt::abs_square() const {
    CycInt prod = *this * conj();
    if (!prod.is_rational()) throw NotRational("abs_square did not reduce to a rational integer");
    return prod.c_[0];
}

bool CycInt::divide_if_divisible(const mpz_class& d) {
    for (const auto& x : c_)
        if (x % d != 0) return false;
    for (auto& x : c_) x /= d;
    return true;
}

std::string CycInt::str() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j > 0) os << " + ";
        os << c_[j].get_str();
        if (j == 1) os << "*z";
        else if (j > 1) os << "*z^" << j;
    }
    return os.str();
}

CycInt CycInt::parse(const std::string& text, int conductor) {
    CycInt r(conductor);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 1;
        // trim
        std::size_t b = term.find_first_not_of(" \t");
        std::size_t e = term.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        term = term.substr(b, e - b + 1);
        std::size_t star = term.find('*');
        std::string coeff = star == std::string::npos ? term : term.substr(0, star);
        std::size_t deg = 0;
        if (star != std::string::npos) {
            std::string zpart = term.substr(star + 1);
            if (zpart == "z") deg = 1;
            else if (zpart.rfind("z^", 0) == 0) deg = std::stoul(zpart.substr(2));
            else throw Error("parse: bad term '" + term + "'");
        }
        if (deg >= r.c_.size()) throw Error("parse: exponent out of basis range in '" + term + "'");
        r.c_[deg] += mpz_class(coeff);
    }
    return r;
}

std::pair<double, double> CycInt::complex_approx() const {
    long double re = 0, im = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        long double v = c_[j].get_d();
        re += v * std::cos(2.0L * M_PIl * (long double)j / n_);
        im += v * std::sin(2.0L * M_PIl * (long double)j / n_);
    }
    return {(double)re, (double)im};
}

CycInt mul_embedded(const CycInt& a, const CycInt& b) {
    int m = std::lcm(a.conductor(), b.conductor());
    if (!conductor_allowed(m)) throw ConductorTooLarge("mul_embedded: lcm conductor " + std::to_string(m));
    return a.embedded(m) * b.embedded(m);
}

bool eq_embedded(const CycInt& a, const CycInt& b) {
    int m = std::lcm(a.conductor(), b.conductor());
    if (!conductor_allowed(m)) throw ConductorTooLarge("eq_embedded: lcm conductor " + std::to_string(m));
    return a.embedded(m) == b.embedded(m);
}

} // namespace ffhg
