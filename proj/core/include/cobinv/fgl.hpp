#ifndef COBINV_FGL_HPP
#define COBINV_FGL_HPP

#include <map>
#include <vector>

#include "cobinv/config.hpp"
#include "cobinv/series.hpp"

namespace cobinv {

// Formal multiplication by n: [n](x) = sum u_i x^i with u_1 = n and u_i
// homogeneous of degree 1 - i.
struct NSeries {
    long n = 0;
    TruncSeries series;

    GradedPoly u(int i) const;
};

// The universal formal group law over Z[b1,...], realized through the
// exponential b(x) = sum_{i>=0} b_i x^{i+1} and its compositional inverse.
// Values are immutable after construction and shared freely.
class FglContext {
public:
    explicit FglContext(const Config& cfg);

    const Config& config() const { return cfg_; }
    const AlphabetPtr& master() const { return master_; }

    const TruncSeries& exp_series() const { return exp_; }  // b(x)
    const TruncSeries& log_series() const { return log_; }  // b^{-1}

    // F(x,y) as a vector of series in x, indexed by the power of y.
    const std::vector<TruncSeries>& sum_coeffs() const { return sum_coeffs_; }

    // Laurent coefficients v_i(x) with (x +_F y) * sum v_i(x) y^i = 1.
    const std::vector<LaurentSeries>& inverse_coeffs() const { return inverse_coeffs_; }

    const NSeries& n_series(long n) const;
    const TruncSeries& h_series() const { return h_; }  // h with h*t = [2](t)
    GradedPoly u(int i) const;                          // coefficients of [2]

    // Reduction applied after each multiplication when powers are nilpotent
    // only modulo defining relations.
    using Normalizer = std::function<GradedPoly(const GradedPoly&)>;

    // x +_F w for a nilpotent element w (the b-twisted class of a line).
    TruncSeries line_sum(const GradedPoly& w, const Normalizer& norm = nullptr) const;
    // (x +_F w)^{-1} as a Laurent series; floor depends on the nilpotency
    // order of w.
    LaurentSeries line_sum_inverse(const GradedPoly& w, const Normalizer& norm = nullptr) const;

    GradedPoly b_sym(int i) const;  // b_i as a polynomial (b_0 = 1)

private:
    Config cfg_;
    AlphabetPtr master_;
    TruncSeries exp_, log_;
    std::vector<TruncSeries> sum_coeffs_;
    std::vector<LaurentSeries> inverse_coeffs_;
    TruncSeries h_;
    mutable std::map<long, NSeries> n_cache_;
};

// Evaluate a truncated series at a nilpotent argument living over another
// alphabet (coefficients are transported by symbol name).
GradedPoly eval_at_nilpotent(const TruncSeries& s, const GradedPoly& w,
                             const FglContext::Normalizer& norm = nullptr);

}  // namespace cobinv

#endif
