#include "tensoradj/scalar.hpp"

#include "tensoradj/errors.hpp"

#include <array>
#include <numeric>

namespace tensoradj {

namespace {

using IntPoly = std::vector<long>;

struct FieldTable {
    int n = 0;
    int phi = 0;
    IntPoly cyclo;                         // Phi_n, monic, degree phi
    std::vector<std::vector<long>> power;  // power[k] = x^k mod Phi_n, 0 <= k < n
};

IntPoly poly_divide_exact(IntPoly num, const IntPoly& den)
{
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    IntPoly q(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        long coef = num[k + dd] / den[dd];
        q[k] = coef;
        for (int j = 0; j <= dd; ++j)
            num[k + j] -= coef * den[j];
    }
    return q;
}

class Tables {
public:
    Tables()
    {
        for (int n = 1; n <= kMaxConductor; ++n) {
            FieldTable& t = tables_[n];
            t.n = n;
            IntPoly p(n + 1, 0);
            p[0] = -1;
            p[n] = 1;
            for (int d = 1; d < n; ++d)
                if (n % d == 0)
                    p = poly_divide_exact(p, tables_[d].cyclo);
            t.cyclo = p;
            t.phi = static_cast<int>(p.size()) - 1;
            int count = std::max(n, 2 * t.phi);
            t.power.assign(count, std::vector<long>(t.phi, 0));
            std::vector<long> cur(t.phi, 0);
            cur[0] = 1;
            for (int k = 0; k < count; ++k) {
                t.power[k] = cur;
                // multiply by x and reduce with the monic relation
                long top = cur[t.phi - 1];
                for (int j = t.phi - 1; j > 0; --j)
                    cur[j] = cur[j - 1] - top * t.cyclo[j];
                cur[0] = -top * t.cyclo[0];
            }
        }
    }
    const FieldTable& get(int n) const
    {
        if (n < 1 || n > kMaxConductor)
            throw UnsupportedConductor("conductor " + std::to_string(n) + " outside 1.." +
                                       std::to_string(kMaxConductor));
        return tables_[n];
    }

private:
    std::array<FieldTable, kMaxConductor + 1> tables_;
};

const FieldTable& field(int n)
{
    static const Tables tables;
    return tables.get(n);
}

void reduce_into(const FieldTable& t, const std::vector<mpq_class>& raw, std::vector<mpq_class>& out)
{
    out.assign(t.phi, mpq_class(0));
    for (size_t k = 0; k < raw.size(); ++k) {
        if (sgn(raw[k]) == 0)
            continue;
        const auto& row = t.power[k % t.n];
        for (int j = 0; j < t.phi; ++j)
            if (row[j] != 0)
                out[j] += raw[k] * row[j];
    }
}

// Solves a square rational system by Gaussian elimination; returns false when singular.
bool solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class>& x)
{
    int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && sgn(a[p][c]) == 0)
            ++p;
        if (p == n)
            return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        mpq_class inv = 1 / a[c][c];
        for (int j = c; j < n; ++j)
            a[c][j] *= inv;
        b[c] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0)
                continue;
            mpq_class f = a[i][c];
            for (int j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    x = b;
    return true;
}

}  // namespace

int euler_phi(int n) { return field(n).phi; }

int lcm_conductor(int a, int b)
{
    int l = std::lcm(a, b);
    if (l > kMaxConductor)
        throw UnsupportedConductor("conductor lcm(" + std::to_string(a) + "," + std::to_string(b) +
                                   ") = " + std::to_string(l) + " exceeds " + std::to_string(kMaxConductor));
    return l;
}

ExactScalar::ExactScalar() : n_(1), c_(1, mpq_class(0)) {}

ExactScalar::ExactScalar(long v) : n_(1), c_(1, mpq_class(v)) {}

ExactScalar::ExactScalar(const mpq_class& q) : n_(1), c_(1, q) { c_[0].canonicalize(); }

ExactScalar::ExactScalar(int conductor, std::vector<mpq_class> coords) : n_(conductor)
{
    const FieldTable& t = field(conductor);
    for (auto& q : coords)
        q.canonicalize();
    if (static_cast<int>(coords.size()) == t.phi)
        c_ = std::move(coords);
    else
        reduce_into(t, coords, c_);
}

ExactScalar ExactScalar::zeta(int n, long k)
{
    const FieldTable& t = field(n);
    long e = ((k % n) + n) % n;
    std::vector<mpq_class> c(t.phi);
    for (int j = 0; j < t.phi; ++j)
        c[j] = t.power[e][j];
    ExactScalar s;
    s.n_ = n;
    s.c_ = std::move(c);
    return s;
}

ExactScalar ExactScalar::rational(long num, long den)
{
    if (den == 0)
        throw DivisionByZero("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
}

ExactScalar ExactScalar::parse_rational(const std::string& s)
{
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw SchemaError("malformed rational '" + s + "'");
    if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0)
        throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    return ExactScalar(q);
}

bool ExactScalar::is_zero() const
{
    for (const auto& q : c_)
        if (sgn(q) != 0)
            return false;
    return true;
}

bool ExactScalar::is_one() const
{
    if (c_[0] != 1)
        return false;
    for (size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0)
            return false;
    return true;
}

bool ExactScalar::is_rational() const
{
    for (size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0)
            return false;
    return true;
}

ExactScalar ExactScalar::embed(int m) const
{
    if (m == n_)
        return *this;
    if (m % n_ != 0)
        throw UnsupportedConductor("cannot embed conductor " + std::to_string(n_) + " into " + std::to_string(m));
    const FieldTable& t = field(m);
    int step = m / n_;
    ExactScalar r;
    r.n_ = m;
    r.c_.assign(t.phi, mpq_class(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0)
            continue;
        const auto& row = t.power[(k * step) % m];
        for (int j = 0; j < t.phi; ++j)
            if (row[j] != 0)
                r.c_[j] += c_[k] * row[j];
    }
    return r;
}

ExactScalar ExactScalar::operator-() const
{
    ExactScalar r = *this;
    for (auto& q : r.c_)
        q = -q;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o)
{
    if (o.n_ == n_) {
        for (size_t j = 0; j < c_.size(); ++j)
            c_[j] += o.c_[j];
        return *this;
    }
    int m = lcm_conductor(n_, o.n_);
    ExactScalar a = embed(m);
    ExactScalar b = o.embed(m);
    for (size_t j = 0; j < a.c_.size(); ++j)
        a.c_[j] += b.c_[j];
    *this = std::move(a);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

void ExactScalar::mul_same(const ExactScalar& o)
{
    const FieldTable& t = field(n_);
    int phi = t.phi;
    if (phi == 1) {
        c_[0] *= o.c_[0];
        return;
    }
    std::vector<mpq_class> raw(2 * phi - 1, mpq_class(0));
    for (int i = 0; i < phi; ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (int j = 0; j < phi; ++j)
            if (sgn(o.c_[j]) != 0)
                raw[i + j] += c_[i] * o.c_[j];
    }
    std::vector<mpq_class> out(phi, mpq_class(0));
    for (int k = 0; k < 2 * phi - 1; ++k) {
        if (sgn(raw[k]) == 0)
            continue;
        const auto& row = t.power[k];
        for (int j = 0; j < phi; ++j)
            if (row[j] != 0)
                out[j] += raw[k] * row[j];
    }
    c_ = std::move(out);
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o)
{
    if (o.n_ == n_) {
        mul_same(o);
        return *this;
    }
    if (o.n_ == 1) {
        for (auto& q : c_)
            q *= o.c_[0];
        return *this;
    }
    int m = lcm_conductor(n_, o.n_);
    ExactScalar a = embed(m);
    a.mul_same(o.embed(m));
    *this = std::move(a);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inv(); }

ExactScalar ExactScalar::inv() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    const FieldTable& t = field(n_);
    if (t.phi == 1)
        return ExactScalar(n_, {1 / c_[0]});
    // Column j of the multiplication matrix is this * z^j.
    std::vector<std::vector<mpq_class>> a(t.phi, std::vector<mpq_class>(t.phi));
    for (int j = 0; j < t.phi; ++j) {
        ExactScalar col = *this * zeta(n_, j);
        for (int i = 0; i < t.phi; ++i)
            a[i][j] = col.c_[i];
    }
    std::vector<mpq_class> rhs(t.phi, mpq_class(0));
    rhs[0] = 1;
    std::vector<mpq_class> x;
    if (!solve_rational(a, rhs, x))
        throw DivisionByZero("singular multiplication matrix");
    return ExactScalar(n_, std::move(x));
}

bool operator==(const ExactScalar& a, const ExactScalar& b)
{
    if (a.n_ == b.n_)
        return a.c_ == b.c_;
    int m = lcm_conductor(a.n_, b.n_);
    return a.embed(m).c_ == b.embed(m).c_;
}

ExactScalar ExactScalar::minimized() const
{
    if (is_rational())
        return ExactScalar(c_[0]);
    for (int d = 2; d < n_; ++d) {
        if (n_ % d != 0)
            continue;
        int phid = field(d).phi;
        int rows = static_cast<int>(c_.size());
        std::vector<std::vector<mpq_class>> img(rows, std::vector<mpq_class>(phid));
        for (int k = 0; k < phid; ++k) {
            ExactScalar e = zeta(d, k).embed(n_);
            for (int i = 0; i < rows; ++i)
                img[i][k] = e.c_[i];
        }
        // Row-reduce [img | c] and check consistency.
        std::vector<std::vector<mpq_class>> aug(rows, std::vector<mpq_class>(phid + 1));
        for (int i = 0; i < rows; ++i) {
            for (int k = 0; k < phid; ++k)
                aug[i][k] = img[i][k];
            aug[i][phid] = c_[i];
        }
        int r = 0;
        for (int c = 0; c < phid && r < rows; ++c) {
            int p = r;
            while (p < rows && sgn(aug[p][c]) == 0)
                ++p;
            if (p == rows)
                continue;
            std::swap(aug[p], aug[r]);
            mpq_class inv = 1 / aug[r][c];
            for (auto& v : aug[r])
                v *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || sgn(aug[i][c]) == 0)
                    continue;
                mpq_class f = aug[i][c];
                for (int j = 0; j <= phid; ++j)
                    aug[i][j] -= f * aug[r][j];
            }
            ++r;
        }
        bool consistent = true;
        for (int i = r; i < rows; ++i)
            if (sgn(aug[i][phid]) != 0)
                consistent = false;
        if (!consistent)
            continue;
        std::vector<mpq_class> x(phid, mpq_class(0));
        for (int i = 0; i < r; ++i)
            for (int c = 0; c < phid; ++c)
                if (aug[i][c] == 1) {
                    x[c] = aug[i][phid];
                    break;
                }
        ExactScalar cand(d, x);
        if (cand.embed(n_) == *this)
            return cand;
    }
    return *this;
}

std::string rational_to_string(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return c.get_str();
}

std::string ExactScalar::to_string() const
{
    if (is_rational())
        return rational_to_string(c_[0]);
    std::string out;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0)
            continue;
        std::string term;
        mpq_class q = c_[k];
        bool neg = sgn(q) < 0;
        if (neg)
            q = -q;
        if (k == 0)
            term = rational_to_string(q);
        else {
            std::string z = "z" + std::to_string(n_) + (k > 1 ? "^" + std::to_string(k) : "");
            term = (q == 1) ? z : rational_to_string(q) + "*" + z;
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += neg ? " - " + term : " + " + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace tensoradj
