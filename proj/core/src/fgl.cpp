#include "cobinv/fgl.hpp"

namespace cobinv {

namespace {

using Biv = std::vector<TruncSeries>;  // index = power of the second variable

Biv biv_zero(std::size_t ty, const TruncSeries& model) {
    return Biv(ty, TruncSeries(model.var(), model.var_degree(), model.order(),
                               model.coeff_alphabet()));
}

Biv biv_mul(const Biv& a, const Biv& b) {
    Biv r = biv_zero(a.size(), a[0]);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.size() && i + j < r.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

}  // namespace

GradedPoly NSeries::u(int i) const {
    if (i <= 0) return GradedPoly(series.coeff_alphabet());
    return series.coeff(static_cast<std::size_t>(i));
}

FglContext::FglContext(const Config& cfg) : cfg_(cfg) {
    cfg_.validate();
    const int T = cfg_.series_order;
    const int b_max = 2 * (cfg_.degree_bound + T);
    const int a_max = cfg_.degree_bound + T;
    master_ = make_master_alphabet(b_max, a_max);

    exp_ = TruncSeries("x", 1, static_cast<std::size_t>(T), master_);
    for (int i = 1; i < T; ++i) exp_.set_coeff(static_cast<std::size_t>(i), b_sym(i - 1));
    log_ = exp_.comp_inverse();

    // F(x,y) = b(l(x) + l(y)), assembled in ((Z[b])[[x]])[[y]].
    const std::size_t Ty = static_cast<std::size_t>(T);
    Biv s = biv_zero(Ty, exp_);
    s[0] = log_;
    for (int j = 1; j < T; ++j) {
        TruncSeries cj(exp_.var(), 1, exp_.order(), master_);
        cj.set_coeff(0, log_.coeff(static_cast<std::size_t>(j)));
        s[static_cast<std::size_t>(j)] = cj;
    }
    Biv acc = biv_zero(Ty, exp_);
    for (int k = T - 1; k >= 0; --k) {
        acc = biv_mul(acc, s);
        acc[0].set_coeff(0, acc[0].coeff(0) + b_sym(k));
    }
    sum_coeffs_ = biv_mul(acc, s);

    // Inverse coefficients: v_0 = x^{-1}, v_i = -x^{-1} sum_{j>=1} w_j v_{i-j}.
    inverse_coeffs_.clear();
    inverse_coeffs_.push_back(
        LaurentSeries::monomial("x", -1, GradedPoly(master_, 1), T - 1));
    for (int i = 1; i < T; ++i) {
        LaurentSeries sum("x", -i, T, master_);
        bool any = false;
        for (int j = 1; j <= i; ++j) {
            const TruncSeries& wj = sum_coeffs_[static_cast<std::size_t>(j)];
            if (wj.is_zero()) continue;
            LaurentSeries prod = LaurentSeries::from_trunc(wj) * inverse_coeffs_[i - j];
            sum = any ? sum + prod : prod;
            any = true;
        }
        if (!any) sum = LaurentSeries("x", -i - 1, T - 1, master_);
        LaurentSeries vi = sum.shifted(-1);
        for (int k = vi.lo(); k < vi.hi(); ++k) vi.set_coeff(k, -vi.coeff(k));
        inverse_coeffs_.push_back(vi);
    }

    // h t = [2](t).
    const TruncSeries& two = n_series(2).series;
    h_ = TruncSeries("t", 1, static_cast<std::size_t>(T - 1), master_);
    for (int j = 0; j < T - 1; ++j)
        h_.set_coeff(static_cast<std::size_t>(j), two.coeff(static_cast<std::size_t>(j + 1)));
}

GradedPoly FglContext::b_sym(int i) const {
    if (i == 0) return GradedPoly(master_, 1);
    return GradedPoly::symbol(master_, "b" + std::to_string(i));
}

const NSeries& FglContext::n_series(long n) const {
    auto it = n_cache_.find(n);
    if (it != n_cache_.end()) return it->second;
    TruncSeries scaled_log = log_.scaled(n);
    NSeries ns{n, exp_.compose(scaled_log)};
    return n_cache_.emplace(n, std::move(ns)).first->second;
}

GradedPoly FglContext::u(int i) const { return n_series(2).u(i); }

namespace {

// Powers of w up to vanishing; throws if they do not vanish within `cap`.
std::vector<GradedPoly> nilpotent_powers(const GradedPoly& w, std::size_t cap,
                                         const FglContext::Normalizer& norm) {
    const AlphabetPtr& target = w.alphabet();
    std::vector<GradedPoly> powers{GradedPoly(target, 1)};
    while (!powers.back().is_zero()) {
        if (powers.size() > cap)
            throw WindowError("argument not nilpotent within the series order");
        GradedPoly next = powers.back() * w;
        if (norm) next = norm(next);
        powers.push_back(std::move(next));
    }
    return powers;
}

}  // namespace

TruncSeries FglContext::line_sum(const GradedPoly& w, const Normalizer& norm) const {
    const AlphabetPtr& target = w.alphabet();
    auto powers = nilpotent_powers(norm ? norm(w) : w, sum_coeffs_.size() - 1, norm);
    TruncSeries out("x", 1, exp_.order(), target);
    for (std::size_t j = 0; j + 1 < powers.size(); ++j) {
        const TruncSeries& fj = sum_coeffs_[j];
        for (std::size_t i = 0; i < fj.order(); ++i) {
            if (fj.coeff(i).is_zero()) continue;
            out.set_coeff(i, out.coeff(i) + fj.coeff(i).convert(target) * powers[j]);
        }
    }
    if (norm)
        for (std::size_t i = 0; i < out.order(); ++i) out.set_coeff(i, norm(out.coeff(i)));
    return out;
}

LaurentSeries FglContext::line_sum_inverse(const GradedPoly& w, const Normalizer& norm) const {
    const AlphabetPtr& target = w.alphabet();
    auto powers = nilpotent_powers(norm ? norm(w) : w, inverse_coeffs_.size() - 1, norm);
    const int nil = static_cast<int>(powers.size()) - 1;  // w^nil = 0
    int lo = -1, hi = inverse_coeffs_[static_cast<std::size_t>(std::max(nil - 1, 0))].hi();
    for (int i = 0; i < nil; ++i) {
        lo = std::min(lo, inverse_coeffs_[static_cast<std::size_t>(i)].lo());
        hi = std::min(hi, inverse_coeffs_[static_cast<std::size_t>(i)].hi());
    }
    LaurentSeries out("x", lo, hi, target);
    for (int i = 0; i < nil; ++i) {
        const LaurentSeries& vi = inverse_coeffs_[static_cast<std::size_t>(i)];
        for (int k = vi.lo(); k < hi; ++k) {
            if (vi.coeff(k).is_zero()) continue;
            out.set_coeff(k, out.coeff(k) +
                                 vi.coeff(k).convert(target) * powers[static_cast<std::size_t>(i)]);
        }
    }
    if (norm)
        for (int k = out.lo(); k < out.hi(); ++k) out.set_coeff(k, norm(out.coeff(k)));
    return out;
}

GradedPoly eval_at_nilpotent(const TruncSeries& s, const GradedPoly& w,
                             const FglContext::Normalizer& norm) {
    const AlphabetPtr& target = w.alphabet();
    auto powers = nilpotent_powers(norm ? norm(w) : w, s.order() - 1, norm);
    GradedPoly out(target);
    for (std::size_t j = 0; j + 1 < powers.size(); ++j) {
        if (s.coeff(j).is_zero()) continue;
        out += s.coeff(j).convert(target) * powers[j];
    }
    if (norm) out = norm(out);
    return out;
}

}  // namespace cobinv
