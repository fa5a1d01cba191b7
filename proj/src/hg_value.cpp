#include "ffhg/hg_value.hpp"

#include <sstream>

namespace ffhg {

void HGValue::normalize() {
    if (num_.is_zero()) {
        pexp_ = 0;
        return;
    }
    mpz_class p(std::to_string(p_));
    while (pexp_ > 0 && num_.divide_if_divisible(p)) --pexp_;
}

std::pair<double, double> HGValue::complex_approx() const {
    auto [re, im] = num_.complex_approx();
    double scale = 1.0;
    for (int i = 0; i < pexp_; ++i) scale *= (double)p_;
    return {re / scale, im / scale};
}

std::string HGValue::str() const {
    if (pexp_ == 0) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/" << p_ << "^" << pexp_;
    return os.str();
}

} // namespace ffhg
