#include "ramsey/rat.hpp"

#include <cctype>

namespace ramsey {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_int(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat rat_parse(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = trim(s.substr(0, slash));
        den = trim(s.substr(slash + 1));
    }
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("rat_parse: malformed rational '" + std::string(text) + "'");
    Int n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + std::string(text) + "'");
    return rat_of(n, d);
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_double(const Rat& q) { return q.get_d(); }

std::string rat_decimal(const Rat& q, int significant_digits) {
    if (significant_digits < 1) throw std::invalid_argument("rat_decimal: digits must be positive");
    if (q == 0) return "0";
    Int num = abs(q.get_num());
    Int den = q.get_den();
    // exponent e: smallest integer with |q| < 10^e
    int e = 0;
    Int scaled_num = num, scaled_den = den;
    while (scaled_num >= scaled_den) { scaled_den *= 10; ++e; }
    while (scaled_num * 10 < scaled_den) { scaled_num *= 10; --e; }
    // digits = round(|q| * 10^(significant_digits - e))
    Int shift_num = num, shift_den = den;
    int shift = significant_digits - e;
    if (shift >= 0)
        for (int i = 0; i < shift; ++i) shift_num *= 10;
    else
        for (int i = 0; i < -shift; ++i) shift_den *= 10;
    Int digits = (2 * shift_num + shift_den) / (2 * shift_den); // round half up
    std::string ds = digits.get_str();
    // rounding may carry into one extra digit (e.g. 999->1000)
    if ((int)ds.size() > significant_digits) {
        ds.pop_back();
        ++e;
    }
    std::string sign = q < 0 ? "-" : "";
    // render as fixed decimal when the exponent is modest, else exponent form
    if (e > 0 && e <= significant_digits) {
        std::string head = ds.substr(0, e), tail = ds.substr(e);
        while (!tail.empty() && tail.back() == '0') tail.pop_back();
        return sign + head + (tail.empty() ? "" : "." + tail);
    }
    if (e <= 0 && e > -6) {
        std::string tail = ds;
        while (tail.size() > 1 && tail.back() == '0') tail.pop_back();
        return sign + "0." + std::string(-e, '0') + tail;
    }
    std::string tail = ds.substr(1);
    while (!tail.empty() && tail.back() == '0') tail.pop_back();
    return sign + ds.substr(0, 1) + (tail.empty() ? "" : "." + tail) + "e" + std::to_string(e - 1);
}

Rat rat_pow(const Rat& x, unsigned long k) {
    Rat out = 1, base = x;
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace ramsey
