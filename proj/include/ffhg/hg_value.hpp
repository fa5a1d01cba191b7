#pragma once

#include <string>

#include "ffhg/cyclotomic.hpp"
#include "ffhg/field_core.hpp"

namespace ffhg {

// Exact hypergeometric value num / p^pexp with num a cyclotomic integer.
// Normalized on construction: pexp is minimal (p does not divide num
// unless the value is zero, which is stored as 0 / p^0).
class HGValue {
public:
    HGValue() : num_(1), p_(0), pexp_(0) {}
    HGValue(CycInt num, i64 p, int pexp) : num_(std::move(num)), p_(p), pexp_(pexp) { normalize(); }

    static HGValue zero(i64 p, int conductor = 1) { return HGValue(CycInt(conductor), p, 0); }

    const CycInt& num() const { return num_; }
    i64 p() const { return p_; }
    int pexp() const { return pexp_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const HGValue& a, const HGValue& b) {
        if (a.p_ != b.p_ || a.pexp_ != b.pexp_) return false;
        return eq_embedded(a.num_, b.num_);
    }

    std::pair<double, double> complex_approx() const;

    /// "num" when pexp = 0, else "(num)/p^k".
    std::string str() const;

private:
    void normalize();

    CycInt num_;
    i64 p_;
    int pexp_;
};

} // namespace ffhg
