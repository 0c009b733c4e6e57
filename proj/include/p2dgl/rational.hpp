#pragma once

/*
 * Exact points of the unit interval (0,1] as reduced fractions of
 * arbitrary-precision integers. Dyadic points (denominator a power of
 * two) are the common special case and get bit-level helpers.
 *
 * No floating point is used anywhere in this header; conversions to
 * double exist only for reporting.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace p2dgl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_power_of_two(const BigInt& n) {
    return n > 0 && boost::multiprecision::lsb(n) == boost::multiprecision::msb(n);
}

/// 2^{-e} as an exact rational, e >= 0.
inline BigRat pow2_inv(std::int64_t e) {
    if (e < 0) throw std::invalid_argument("pow2_inv: negative exponent");
    BigInt den = BigInt(1) << static_cast<unsigned>(e);
    return BigRat(1, den);
}

/// A point of (0,1], stored as a reduced fraction num/den with
/// 0 < num <= den and gcd(num, den) = 1.
class RationalPoint {
public:
    explicit RationalPoint(BigRat v) : v_(std::move(v)) { validate(); }

    RationalPoint(BigInt num, BigInt den) : v_(std::move(num), std::move(den)) { validate(); }

    static RationalPoint one() { return RationalPoint(BigRat(1)); }

    /// Accepts "p/q", dyadic "p/2^e", or a bare integer "p" (only "1" is in range).
    static RationalPoint parse(std::string_view text);

    const BigRat& value() const { return v_; }
    BigInt numerator() const { return rat_num(v_); }
    BigInt denominator() const { return rat_den(v_); }

    bool is_one() const { return v_ == 1; }
    bool is_dyadic() const {
        BigInt d = denominator();
        return d == 1 || is_power_of_two(d);
    }

    double to_double() const { return v_.convert_to<double>(); }

    std::string str() const {
        BigInt n = numerator(), d = denominator();
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.v_ == b.v_; }
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) { return a.v_ != b.v_; }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.v_ < b.v_; }
    friend bool operator<=(const RationalPoint& a, const RationalPoint& b) { return a.v_ <= b.v_; }

private:
    void validate() const {
        if (!(v_ > 0 && v_ <= 1))
            throw std::domain_error("RationalPoint: value must lie in (0,1], got " +
                                    rat_num(v_).str() + "/" + rat_den(v_).str());
    }

    BigRat v_; // cpp_rational keeps it reduced
};

inline RationalPoint RationalPoint::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("cannot parse rational \"" + std::string(text) +
                                     "\" (expected p/q, p/2^e, or an integer)");
    };
    std::string s(text);
    // strip blanks
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw bad();

    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return RationalPoint(BigInt(t), BigInt(1));
        std::string num = t.substr(0, slash);
        std::string den = t.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        auto caret = den.find('^');
        if (caret != std::string::npos) {
            if (den.substr(0, caret) != "2") throw bad();
            unsigned long e = std::stoul(den.substr(caret + 1));
            return RationalPoint(BigInt(num), BigInt(1) << e);
        }
        return RationalPoint(BigInt(num), BigInt(den));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

} // namespace p2dgl
