#ifndef COBINV_SERIES_HPP
#define COBINV_SERIES_HPP

#include <string>
#include <vector>

#include "cobinv/graded_poly.hpp"

namespace cobinv {

// Power series in one formal variable, truncated at order T: coefficients
// coeffs[0..T-1] are polynomials free of the series variable.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(std::string var, int var_degree, std::size_t order, AlphabetPtr coeff_alpha);

    static TruncSeries identity(std::string var, int var_degree, std::size_t order,
                                AlphabetPtr coeff_alpha);  // the series x

    const std::string& var() const { return var_; }
    int var_degree() const { return var_degree_; }
    std::size_t order() const { return order_; }
    const AlphabetPtr& coeff_alphabet() const { return alpha_; }

    const GradedPoly& coeff(std::size_t j) const&;
    const GradedPoly& coeff(std::size_t j) const&& = delete;
    void set_coeff(std::size_t j, GradedPoly p);

    bool is_zero() const;
    bool operator==(const TruncSeries& o) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const BigInt& c) const;
    TruncSeries scaled_poly(const GradedPoly& p) const;

    // f(g); g must have zero constant term and the same order.
    TruncSeries compose(const TruncSeries& g) const;
    // g with f(g) = g(f) = x; f must have linear coefficient exactly 1.
    TruncSeries comp_inverse() const;
    // 1/f; constant term must be +-1.
    TruncSeries reciprocal() const;

    std::string to_string() const;

private:
    void check_compatible(const TruncSeries& o) const;

    std::string var_;
    int var_degree_ = 1;
    std::size_t order_ = 0;
    AlphabetPtr alpha_;
    std::vector<GradedPoly> coeffs_;
};

// Laurent series with an exact vanishing floor `lo` and truncation horizon
// `hi`: coefficient(i) is zero for i < lo, stored for lo <= i < hi, and
// unavailable (WindowError) for i >= hi.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(std::string var, int lo, int hi, AlphabetPtr coeff_alpha);

    static LaurentSeries monomial(std::string var, int exp, const GradedPoly& c, int hi);
    static LaurentSeries from_trunc(const TruncSeries& t);

    const std::string& var() const { return var_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const AlphabetPtr& coeff_alphabet() const { return alpha_; }

    const GradedPoly& coeff(int i) const&;
    const GradedPoly& coeff(int i) const&& = delete;
    void set_coeff(int i, GradedPoly p);

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries scaled_poly(const GradedPoly& p) const;
    LaurentSeries shifted(int k) const;  // multiply by var^k

    // Tighten the floor to the first actually nonzero coefficient.
    LaurentSeries trimmed() const;

    std::string to_string() const;

private:
    std::string var_;
    int lo_ = 0, hi_ = 0;
    AlphabetPtr alpha_;
    std::vector<GradedPoly> coeffs_;  // size hi - lo
    GradedPoly zero_;
};

}  // namespace cobinv

#endif
