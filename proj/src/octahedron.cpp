#include "shadow/fsl.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>

namespace shadow {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<90>>;

// Lobachevsky(theta) = Cl2(2 theta) / 2, Cl2 by its Bernoulli series (valid for |x| < 2 pi)
Real lobachevsky(const Real& theta) {
    Real x = 2 * theta;
    Real sum = x - x * log(x);
    Real x2 = x * x, pw = x, fact = 1;  // pw = x^(2n+1), fact = (2n+1)!
    Real eps = pow(Real(10), -88);
    for (int n = 1; n < 400; ++n) {
        pw *= x2;
        fact *= Real(2 * n) * Real(2 * n + 1);
        Real term = abs(boost::math::bernoulli_b2n<Real>(n)) * pw / (Real(2 * n) * fact);
        sum += term;
        if (term < eps) break;
    }
    return sum / 2;
}

} // namespace

std::string v8_digits(int digits) {
    if (digits < 1 || digits > 80) throw std::invalid_argument("v8_digits: 1..80 digits");
    static const Real v = 8 * lobachevsky(boost::math::constants::pi<Real>() / 4);
    return v.str(digits - 1, std::ios_base::fixed);
}

double v8() {
    static const double v = std::stod(v8_digits(30));
    return v;
}

} // namespace shadow
