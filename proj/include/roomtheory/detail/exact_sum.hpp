#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace roomtheory::detail {

// Correctly rounded sum of finite doubles (Shewchuk's non-overlapping
// partials, with the round-half-even fix-up used by Python's math.fsum).
// The result does not depend on the order values are added in.
class ExactSum {
public:
    void add(double x) {
        std::size_t i = 0;
        for (std::size_t j = 0; j < partials_.size(); ++j) {
            double y = partials_[j];
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            const double hi = x + y;
            const double lo = y - (hi - x);
            if (lo != 0.0) partials_[i++] = lo;
            x = hi;
        }
        partials_.resize(i);
        partials_.push_back(x);
    }

    double value() const {
        std::size_t n = partials_.size();
        if (n == 0) return 0.0;
        double hi = partials_[--n];
        double lo = 0.0;
        while (n > 0) {
            const double x = hi;
            const double y = partials_[--n];
            hi = x + y;
            lo = y - (hi - x);
            if (lo != 0.0) break;
        }
        if (n > 0 && ((lo < 0 && partials_[n - 1] < 0) || (lo > 0 && partials_[n - 1] > 0))) {
            const double y = lo * 2;
            const double x = hi + y;
            if (y == x - hi) hi = x;
        }
        return hi;
    }

    // Correctly rounded sum / n. The naive value() / n rounds twice and can
    // miss, e.g. three copies of x averaging to x + 1 ulp.
    double mean(std::size_t n) const {
        const double d = static_cast<double>(n);
        const double q = value() / d;
        if (!std::isfinite(q)) return q;
        ExactSum residual = *this;
        const double p = q * d;
        residual.add(-p);
        residual.add(-std::fma(q, d, -p));
        return q + residual.value() / d;
    }

private:
    std::vector<double> partials_;
};

}  // namespace roomtheory::detail
