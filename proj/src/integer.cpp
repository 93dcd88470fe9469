#include "tambara/integer.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace tambara {

namespace {

// long is 64 bits on the LP64 targets we build for
static_assert(sizeof(long) == 8, "LP64 expected");

bool mpz_fits_int64(const mpz_class& v) { return v.fits_slong_p(); }

int64_t mpz_to_int64(const mpz_class& v) { return v.get_si(); }

} // namespace

void Int::assign(const mpz_class& v) {
    if (mpz_fits_int64(v)) {
        small_ = mpz_to_int64(v);
        big_.reset();
    } else {
        small_ = 0;
        big_ = std::make_shared<const mpz_class>(v);
    }
}

Int Int::parse(const std::string& s) {
    mpz_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
    return Int(v);
}

int64_t Int::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

std::string Int::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Int::sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

Int Int::operator-() const {
    if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Int(static_cast<long long>(-small_));
    return Int(mpz_class(-to_mpz()));
}

Int& Int::operator+=(const Int& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
}

Int& Int::operator-=(const Int& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
}

Int& Int::operator*=(const Int& o) {
    if (!big_ && !o.big_) {
        int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
}

Int operator/(const Int& a, const Int& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1))
        return Int(static_cast<long long>(a.small_ / b.small_));
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(q);
}

Int operator%(const Int& a, const Int& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_) {
        if (b.small_ == -1) return Int(0);
        return Int(static_cast<long long>(a.small_ % b.small_));
    }
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(r);
}

bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical form: a big value never fits in 64 bits
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

size_t Int::hash() const {
    if (!big_) return std::hash<int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
}

Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

Int gcd(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
        int64_t x = a.to_int64(), y = b.to_int64();
        if (x != std::numeric_limits<int64_t>::min() && y != std::numeric_limits<int64_t>::min()) {
            x = x < 0 ? -x : x;
            y = y < 0 ? -y : y;
            while (y != 0) {
                int64_t t = x % y;
                x = y;
                y = t;
            }
            return Int(static_cast<long long>(x));
        }
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(g);
}

Int lcm(const Int& a, const Int& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    return abs(exact_div(a, gcd(a, b)) * b);
}

Int pow(const Int& base, unsigned exp) {
    Int result(1);
    Int b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return result;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) q -= Int(1);
    return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Int exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw std::domain_error("inexact division: " + a.str() + " / " + b.str());
    return q;
}

bool divides(const Int& d, const Int& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Vec zero_vec(size_t n) { return Vec(n, Int(0)); }

Vec unit_vec(size_t n, size_t i) {
    Vec v(n, Int(0));
    v[i] = Int(1);
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec operator*(const Int& s, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= s;
    return r;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << to_string(m[i]);
    os << ']';
    return os.str();
}

Vec to_vec(const std::vector<long long>& v) { return Vec(v.begin(), v.end()); }

Mat to_mat(const std::vector<std::vector<long long>>& m) {
    Mat r;
    for (const auto& row : m) r.push_back(to_vec(row));
    return r;
}

Vec apply(const Mat& m, const Vec& v, size_t cols) {
    Vec r = zero_vec(cols);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < cols; ++j)
            if (!m[i][j].is_zero()) r[j] += v[i] * m[i][j];
    }
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b, size_t cols) {
    Mat r;
    r.reserve(a.size());
    for (const auto& row : a) r.push_back(apply(b, row, cols));
    return r;
}

Mat identity_mat(size_t n) {
    Mat r;
    for (size_t i = 0; i < n; ++i) r.push_back(unit_vec(n, i));
    return r;
}

} // namespace tambara
