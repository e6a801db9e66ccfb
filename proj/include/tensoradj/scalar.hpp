#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tensoradj {

constexpr int kMaxConductor = 60;

int euler_phi(int n);
int lcm_conductor(int a, int b);  // throws UnsupportedConductor above kMaxConductor

// Element of Q(zeta_n) on the power basis 1, z, ..., z^{phi(n)-1}, reduced mod Phi_n.
class ExactScalar {
public:
    ExactScalar();  // zero in Q
    ExactScalar(long v);
    ExactScalar(const mpq_class& q);
    ExactScalar(int conductor, std::vector<mpq_class> coords);  // reduces if given more than phi(n) coords

    static ExactScalar zeta(int n, long k = 1);
    static ExactScalar rational(long num, long den);
    static ExactScalar parse_rational(const std::string& s);  // "p/q" or "p"

    int conductor() const { return n_; }
    const std::vector<mpq_class>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    // Requires n | m.
    ExactScalar embed(int m) const;

    ExactScalar inv() const;
    ExactScalar operator-() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b);
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    // Smallest conductor d | n such that the value lies in Q(zeta_d).
    ExactScalar minimized() const;

    std::string to_string() const;

private:
    int n_;
    std::vector<mpq_class> c_;

    void mul_same(const ExactScalar& o);
};

std::string rational_to_string(const mpq_class& q);

}  // namespace tensoradj
