#include "bratteli/numeric.hpp"

#include <stdexcept>

namespace bratteli {

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

BigInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
    if (n <= 0) return 1;
    BigInt out;
    mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    BigInt d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRational out(parse_integer(num), d);
    out.canonicalize();
    return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

BigRational pow(const BigRational& base, unsigned exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    BigRational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace bratteli
