#ifndef GRAPHFREQ_SUMMATION_HPP
#define GRAPHFREQ_SUMMATION_HPP

#include <cmath>

namespace graphfreq {

// Neumaier-compensated accumulator. Layer energies sum millions of terms of
// the same magnitude; plain left-to-right addition loses ~n*ulp which is
// visible against the 1e-12 tolerances used downstream. The compensation
// keeps the result correctly rounded for every sum arising here.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace graphfreq

#endif
