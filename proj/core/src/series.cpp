#include "cobinv/series.hpp"

#include <sstream>

namespace cobinv {

TruncSeries::TruncSeries(std::string var, int var_degree, std::size_t order,
                         AlphabetPtr coeff_alpha)
    : var_(std::move(var)), var_degree_(var_degree), order_(order), alpha_(std::move(coeff_alpha)) {
    if (order_ < 1) throw Error("series order must be >= 1");
    coeffs_.assign(order_, GradedPoly(alpha_));
}

TruncSeries TruncSeries::identity(std::string var, int var_degree, std::size_t order,
                                  AlphabetPtr coeff_alpha) {
    TruncSeries s(std::move(var), var_degree, order, std::move(coeff_alpha));
    if (order < 2) throw Error("order too small for identity series");
    s.coeffs_[1] = GradedPoly(s.alpha_, 1);
    return s;
}

const GradedPoly& TruncSeries::coeff(std::size_t j) const& {
    if (j >= order_) throw WindowError("series coefficient beyond truncation order");
    return coeffs_[j];
}

void TruncSeries::set_coeff(std::size_t j, GradedPoly p) {
    if (j >= order_) throw WindowError("series coefficient beyond truncation order");
    coeffs_[j] = std::move(p);
}

bool TruncSeries::is_zero() const {
    for (auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (order_ != o.order_ || var_ != o.var_) return false;
    for (std::size_t j = 0; j < order_; ++j)
        if (coeffs_[j] != o.coeffs_[j]) return false;
    return true;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (var_ != o.var_) throw Error("series variable mismatch: " + var_ + " vs " + o.var_);
    if (order_ != o.order_) throw Error("series truncation order mismatch");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r = *this;
    for (std::size_t j = 0; j < order_; ++j) r.coeffs_[j] += o.coeffs_[j];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r = *this;
    for (std::size_t j = 0; j < order_; ++j) r.coeffs_[j] -= o.coeffs_[j];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r(var_, var_degree_, order_, alpha_);
    for (std::size_t i = 0; i < order_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < order_; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const BigInt& c) const {
    TruncSeries r = *this;
    for (auto& p : r.coeffs_) p = p.scaled(c);
    return r;
}

TruncSeries TruncSeries::scaled_poly(const GradedPoly& p) const {
    TruncSeries r = *this;
    for (auto& q : r.coeffs_) q = q * p;
    return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& g) const {
    check_compatible(g);
    if (!g.coeffs_[0].is_zero())
        throw Error("compose: inner series has nonzero constant term");
    // Horner from the top coefficient down.
    TruncSeries acc(var_, var_degree_, order_, alpha_);
    for (std::size_t j = order_; j-- > 0;) {
        acc = acc * g;
        acc.coeffs_[0] += coeffs_[j];
    }
    return acc;
}

TruncSeries TruncSeries::comp_inverse() const {
    if (!coeffs_[0].is_zero() || order_ < 2 || coeffs_[1] != GradedPoly(alpha_, 1))
        throw Error("comp_inverse: series must be x + higher order");
    TruncSeries g = identity(var_, var_degree_, order_, alpha_);
    for (std::size_t k = 2; k < order_; ++k) {
        TruncSeries h = compose(g);
        g.coeffs_[k] -= h.coeffs_[k];
    }
    return g;
}

TruncSeries TruncSeries::reciprocal() const {
    const GradedPoly one(alpha_, 1);
    GradedPoly c0 = coeffs_[0];
    BigInt unit;
    if (c0 == one) unit = 1;
    else if (c0 == -one) unit = -1;
    else throw Error("reciprocal: constant term is not a unit over the integers");
    TruncSeries r(var_, var_degree_, order_, alpha_);
    r.coeffs_[0] = GradedPoly(alpha_, unit);
    for (std::size_t k = 1; k < order_; ++k) {
        GradedPoly s(alpha_);
        for (std::size_t j = 1; j <= k; ++j) s += coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = (-s).scaled(unit);
    }
    return r;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool some = false;
    for (std::size_t j = 0; j < order_; ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (some) os << " + ";
        some = true;
        os << "(" << coeffs_[j].to_string() << ")*" << var_ << "^" << j;
    }
    if (!some) os << "0";
    os << " + O(" << var_ << "^" << order_ << ")";
    return os.str();
}

LaurentSeries::LaurentSeries(std::string var, int lo, int hi, AlphabetPtr coeff_alpha)
    : var_(std::move(var)), lo_(lo), hi_(hi), alpha_(std::move(coeff_alpha)), zero_(alpha_) {
    if (hi_ < lo_) throw Error("empty Laurent window");
    coeffs_.assign(static_cast<std::size_t>(hi_ - lo_), GradedPoly(alpha_));
}

LaurentSeries LaurentSeries::monomial(std::string var, int exp, const GradedPoly& c, int hi) {
    LaurentSeries s(std::move(var), exp, hi, c.alphabet());
    s.set_coeff(exp, c);
    return s;
}

LaurentSeries LaurentSeries::from_trunc(const TruncSeries& t) {
    LaurentSeries s(t.var(), 0, static_cast<int>(t.order()), t.coeff_alphabet());
    for (std::size_t j = 0; j < t.order(); ++j) s.coeffs_[j] = t.coeff(j);
    return s;
}

const GradedPoly& LaurentSeries::coeff(int i) const& {
    if (i < lo_) return zero_;
    if (i >= hi_)
        throw WindowError("Laurent coefficient " + std::to_string(i) +
                          " beyond horizon " + std::to_string(hi_));
    return coeffs_[static_cast<std::size_t>(i - lo_)];
}

void LaurentSeries::set_coeff(int i, GradedPoly p) {
    if (i < lo_ || i >= hi_) throw WindowError("Laurent coefficient outside window");
    coeffs_[static_cast<std::size_t>(i - lo_)] = std::move(p);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (var_ != o.var_) throw Error("Laurent variable mismatch");
    int lo = std::min(lo_, o.lo_);
    int hi = std::min(hi_, o.hi_);
    LaurentSeries r(var_, lo, hi, alpha_);
    for (int i = lo; i < hi; ++i) r.set_coeff(i, coeff(i) + o.coeff(i));
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const {
    if (var_ != o.var_) throw Error("Laurent variable mismatch");
    int lo = std::min(lo_, o.lo_);
    int hi = std::min(hi_, o.hi_);
    LaurentSeries r(var_, lo, hi, alpha_);
    for (int i = lo; i < hi; ++i) r.set_coeff(i, coeff(i) - o.coeff(i));
    return r;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (var_ != o.var_) throw Error("Laurent variable mismatch");
    int lo = lo_ + o.lo_;
    int hi = std::min(hi_ + o.lo_, o.hi_ + lo_);
    LaurentSeries r(var_, lo, hi, alpha_);
    for (int i = lo_; i < hi_; ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = o.lo_; j < o.hi_ && i + j < hi; ++j) {
            if (o.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + coeff(i) * o.coeff(j));
        }
    }
    return r;
}

LaurentSeries LaurentSeries::scaled_poly(const GradedPoly& p) const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = c * p;
    return r;
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries r = *this;
    r.lo_ += k;
    r.hi_ += k;
    return r;
}

LaurentSeries LaurentSeries::trimmed() const {
    int lo = lo_;
    while (lo < hi_ && coeff(lo).is_zero()) ++lo;
    LaurentSeries r(var_, lo, hi_, alpha_);
    for (int i = lo; i < hi_; ++i) r.set_coeff(i, coeff(i));
    return r;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool some = false;
    for (int i = lo_; i < hi_; ++i) {
        if (coeff(i).is_zero()) continue;
        if (some) os << " + ";
        some = true;
        os << "(" << coeff(i).to_string() << ")*" << var_ << "^" << i;
    }
    if (!some) os << "0";
    os << " + O(" << var_ << "^" << hi_ << ")";
    return os.str();
}

}  // namespace cobinv
