#include "core/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace scl {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

Int int_from_string(const std::string& s) {
    const std::string t = trimmed(s);
    if (t.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed integer: " + s);
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed integer: " + s);
    return Int(t[0] == '+' ? t.substr(1) : t);
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    // boost::rational cannot normalize a negative cpp_int denominator itself.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

std::string rat_to_decimal(const Rat& r, int sig_digits) {
    if (sig_digits < 1) sig_digits = 1;
    Int num = r.numerator();
    const Int den = r.denominator();
    if (num == 0) return "0";

    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }

    Int ipart = num / den;
    Int rem = num % den;
    std::string idigits = ipart == 0 ? std::string() : ipart.str();

    // Leading zeros of a value < 1 do not count as significant digits.
    int produced = static_cast<int>(idigits.size());
    int leading_zero_fracs = 0;
    std::string fdigits;
    if (produced == 0) {
        while (rem != 0) {
            rem *= 10;
            Int d = rem / den;
            rem %= den;
            if (d == 0) {
                ++leading_zero_fracs;
            } else {
                fdigits += static_cast<char>('0' + d.convert_to<int>());
                ++produced;
                break;
            }
        }
        if (rem == 0 && produced == 0) return "0";
    }
    while (produced < sig_digits && rem != 0) {
        rem *= 10;
        Int d = rem / den;
        rem %= den;
        fdigits += static_cast<char>('0' + d.convert_to<int>());
        ++produced;
    }

    // Round half away from zero on the first dropped digit.
    bool round_up = false;
    if (rem != 0) {
        rem *= 2;
        if (rem >= den) round_up = true;
    }
    if (round_up) {
        std::string all = idigits + fdigits;
        std::size_t ilen = idigits.size();
        int i = static_cast<int>(all.size()) - 1;
        for (; i >= 0; --i) {
            if (all[i] != '9') {
                ++all[i];
                break;
            }
            all[i] = '0';
        }
        if (i < 0) {
            all.insert(all.begin(), '1');
            if (leading_zero_fracs > 0) {
                // Carry moved one place left within the fraction: 0.0999 -> 0.100.
                --leading_zero_fracs;
                all.pop_back();
            } else {
                // Carry created a new leading integer digit: 9.99 -> 10.0.
                ++ilen;
                if (all.size() > ilen) all.pop_back();
            }
        }
        idigits = all.substr(0, ilen);
        fdigits = all.substr(ilen);
    }

    std::string out = sign;
    out += idigits.empty() ? "0" : idigits;
    if (!fdigits.empty() || leading_zero_fracs > 0) {
        out += '.';
        out.append(static_cast<std::size_t>(leading_zero_fracs), '0');
        out += fdigits;
    }
    return out;
}

}  // namespace scl
