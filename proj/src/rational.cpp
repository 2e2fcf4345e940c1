#include "hurwitzkit/rational.hpp"

#include <mutex>
#include <vector>

namespace hurwitzkit {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) {
            throw FormatError("zero denominator in rational '" + s + "'");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw FormatError("malformed rational '" + s + "'");
    }
}

Integer factorial(long n)
{
    if (n < 0) {
        throw PreconditionError("factorial of a negative number");
    }
    static std::mutex mutex;
    static std::vector<Integer> table{Integer(1)};
    std::lock_guard lock(mutex);
    while (static_cast<long>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    }
    return table[static_cast<std::size_t>(n)];
}

Integer binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    if (n < 0) {
        Integer b = binomial(k - n - 1, k);
        return (k % 2 == 0) ? b : Integer(-b);
    }
    if (k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational power(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw PreconditionError("zero raised to a negative power");
        }
        Rational inv = 1 / base;
        return power(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace hurwitzkit
