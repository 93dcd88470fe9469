#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace tambara {

// Arbitrary precision integer. Values that fit in 64 bits stay in a machine
// word; anything larger lives in a shared, immutable mpz_class.
class Int {
public:
    Int() = default;
    Int(long long v) : small_(v) {}
    Int(int v) : small_(v) {}
    Int(long v) : small_(v) {}
    Int(unsigned v) : small_(v) {}
    explicit Int(const mpz_class& v) { assign(v); }

    static Int parse(const std::string& s);

    bool is_small() const { return !big_; }
    bool fits_int64() const { return !big_; }
    int64_t to_int64() const;
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
    std::string str() const;

    int sign() const;
    bool is_zero() const { return !big_ && small_ == 0; }
    bool is_one() const { return !big_ && small_ == 1; }

    Int operator-() const;
    Int& operator+=(const Int& o);
    Int& operator-=(const Int& o);
    Int& operator*=(const Int& o);

    friend Int operator+(Int a, const Int& b) { return a += b; }
    friend Int operator-(Int a, const Int& b) { return a -= b; }
    friend Int operator*(Int a, const Int& b) { return a *= b; }
    // truncating division and remainder, as for built-in integers
    friend Int operator/(const Int& a, const Int& b);
    friend Int operator%(const Int& a, const Int& b);

    friend bool operator==(const Int& a, const Int& b);
    friend std::strong_ordering operator<=>(const Int& a, const Int& b);

    friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

    size_t hash() const;

private:
    void assign(const mpz_class& v);

    int64_t small_ = 0;
    std::shared_ptr<const mpz_class> big_;
};

Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int pow(const Int& base, unsigned exp);
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
// b must divide a
Int exact_div(const Int& a, const Int& b);
bool divides(const Int& d, const Int& a);

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Int& s, const Vec& a);
std::string to_string(const Vec& v);
std::string to_string(const Mat& m);
Vec to_vec(const std::vector<long long>& v);
Mat to_mat(const std::vector<std::vector<long long>>& m);

// row vector times matrix
Vec apply(const Mat& m, const Vec& v, size_t cols);
Mat mat_mul(const Mat& a, const Mat& b, size_t cols);
Mat identity_mat(size_t n);

} // namespace tambara

template <>
struct std::hash<tambara::Int> {
    size_t operator()(const tambara::Int& v) const noexcept { return v.hash(); }
};
