#include "cobinv/graded_poly.hpp"

#include <algorithm>
#include <sstream>

namespace cobinv {

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    long ta = 0, tb = 0;
    for (auto& [i, e] : a) ta += e;
    for (auto& [i, e] : b) tb += e;
    if (ta != tb) return ta < tb;
    return a < b;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (a[i].first > b[j].first) r.push_back(b[j++]);
        else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i; ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

std::string mono_to_string(const Mono& m, const Alphabet& alpha) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [i, e] : m) {
        if (!first) os << "*";
        first = false;
        os << alpha.at(i).name;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

GradedPoly::GradedPoly(AlphabetPtr alpha, const BigInt& constant) : alpha_(std::move(alpha)) {
    if (constant != 0) terms_.emplace(Mono{}, constant);
}

GradedPoly GradedPoly::term(AlphabetPtr alpha, const Mono& m, const BigInt& c) {
    GradedPoly p(std::move(alpha));
    p.add_term(m, c);
    return p;
}

GradedPoly GradedPoly::symbol(AlphabetPtr alpha, const std::string& name, int exp) {
    std::size_t i = alpha->require(name);
    GradedPoly p(std::move(alpha));
    if (exp != 0) p.add_term(Mono{{static_cast<std::uint32_t>(i), exp}}, 1);
    else p.add_term(Mono{}, 1);
    return p;
}

void GradedPoly::check_same(const GradedPoly& o) const {
    if (alpha_ == o.alpha_) return;
    if (alpha_ && o.alpha_ && *alpha_ == *o.alpha_) return;
    throw AlphabetMismatch("operands live over different alphabets");
}

void GradedPoly::validate_mono(const Mono& m) const {
    for (auto& [i, e] : m) {
        if (i >= alpha_->size()) throw Error("symbol index out of range");
        if (e < 0 && !alpha_->at(i).laurent)
            throw Error("negative exponent of non-Laurent symbol " + alpha_->at(i).name);
    }
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    return std::equal(terms_.begin(), terms_.end(), o.terms_.begin());
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(alpha_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly r = *this;
    r += o;
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    GradedPoly r = *this;
    r -= o;
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    if (!alpha_) alpha_ = o.alpha_;
    check_same(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    if (!alpha_) alpha_ = o.alpha_;
    check_same(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    check_same(o);
    GradedPoly r(alpha_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

GradedPoly GradedPoly::scaled(const BigInt& c) const {
    GradedPoly r(alpha_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw Error("negative power of a polynomial");
    GradedPoly r(alpha_, 1);
    GradedPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

GradedPoly GradedPoly::exact_div(const BigInt& den) const {
    if (den == 0) throw Error("division by zero");
    GradedPoly r(alpha_);
    for (auto& [m, c] : terms_) {
        if (c % den != 0)
            throw DivisibilityError("coefficient " + cobinv::to_string(c) +
                                        " of " + mono_to_string(m, *alpha_) +
                                        " not divisible by " + cobinv::to_string(den),
                                    mono_to_string(m, *alpha_));
        r.terms_.emplace(m, c / den);
    }
    return r;
}

void GradedPoly::add_term(const Mono& m, const BigInt& c) {
    if (c == 0) return;
    const Mono* key = &m;
    Mono cleaned;
    bool must_clean = false;
    for (auto& [i, e] : m)
        if (e == 0) { must_clean = true; break; }
    if (!std::is_sorted(m.begin(), m.end())) must_clean = true;
    if (must_clean) {
        for (auto& [i, e] : m)
            if (e != 0) cleaned.emplace_back(i, e);
        std::sort(cleaned.begin(), cleaned.end());
        key = &cleaned;
    }
    validate_mono(*key);
    auto it = terms_.find(*key);
    if (it == terms_.end()) {
        terms_.emplace(*key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt GradedPoly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

GradedPoly GradedPoly::coefficient_of(std::size_t sym, int k) const {
    GradedPoly r(alpha_);
    for (auto& [m, c] : terms_) {
        int e = 0;
        Mono rest;
        for (auto& [i, ee] : m) {
            if (i == sym) e = ee;
            else rest.emplace_back(i, ee);
        }
        if (e == k) r.add_term(rest, c);
    }
    return r;
}

std::vector<int> GradedPoly::exponents_of(std::size_t sym) const {
    std::vector<int> out;
    for (auto& [m, c] : terms_) {
        int e = 0;
        for (auto& [i, ee] : m)
            if (i == sym) e = ee;
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int GradedPoly::degree_of(const Mono& m) const {
    int d = 0;
    for (auto& [i, e] : m) d += e * alpha_->at(i).degree;
    return d;
}

std::optional<int> GradedPoly::dim() const {
    std::optional<int> best;
    for (auto& [m, c] : terms_) {
        int d = -degree_of(m);
        if (!best || d > *best) best = d;
    }
    return best;
}

std::optional<int> GradedPoly::dim_with_zero_weight(const std::vector<std::size_t>& zeroed) const {
    std::optional<int> best;
    for (auto& [m, c] : terms_) {
        int d = 0;
        for (auto& [i, e] : m) {
            if (std::find(zeroed.begin(), zeroed.end(), i) != zeroed.end()) continue;
            d += e * alpha_->at(i).degree;
        }
        if (!best || -d > *best) best = -d;
    }
    return best;
}

bool GradedPoly::is_homogeneous(int degree) const {
    for (auto& [m, c] : terms_)
        if (degree_of(m) != degree) return false;
    return true;
}

std::map<int, GradedPoly> GradedPoly::homogeneous_parts() const {
    std::map<int, GradedPoly> out;
    for (auto& [m, c] : terms_) {
        int d = degree_of(m);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, GradedPoly(alpha_)).first;
        it->second.add_term(m, c);
    }
    return out;
}

GradedPoly GradedPoly::substitute(const AlphabetPtr& target,
                                  const std::map<std::string, GradedPoly>& images,
                                  const std::function<bool(const Mono&)>& keep) const {
    GradedPoly out(target);
    for (auto& [m, c] : terms_) {
        GradedPoly acc(target, c);
        for (auto& [i, e] : m) {
            const std::string& name = alpha_->at(i).name;
            auto img = images.find(name);
            if (img != images.end()) {
                if (e < 0) throw Error("negative exponent under substitution of " + name);
                for (int t = 0; t < e; ++t) {
                    acc = acc * img->second;
                    if (keep) acc = acc.filtered(keep);
                }
            } else {
                acc = acc * GradedPoly::term(
                                target, Mono{{static_cast<std::uint32_t>(target->require(name)), e}}, 1);
                if (keep) acc = acc.filtered(keep);
            }
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    if (keep) out = out.filtered(keep);
    return out;
}

GradedPoly GradedPoly::convert(const AlphabetPtr& target) const {
    GradedPoly out(target);
    for (auto& [m, c] : terms_) {
        Mono mm;
        for (auto& [i, e] : m)
            mm.emplace_back(static_cast<std::uint32_t>(target->require(alpha_->at(i).name)), e);
        std::sort(mm.begin(), mm.end());
        out.add_term(mm, c);
    }
    return out;
}

GradedPoly GradedPoly::filtered(const std::function<bool(const Mono&)>& keep) const {
    GradedPoly out(alpha_);
    for (auto& [m, c] : terms_)
        if (keep(m)) out.terms_.emplace(m, c);
    return out;
}

BigInt GradedPoly::evaluate(const std::map<std::string, BigInt>& values) const {
    BigInt total = 0;
    for (auto& [m, c] : terms_) {
        BigInt t = c;
        for (auto& [i, e] : m) {
            auto it = values.find(alpha_->at(i).name);
            if (it == values.end()) throw Error("evaluate: no value for " + alpha_->at(i).name);
            if (e < 0) throw Error("evaluate: negative exponent");
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        total += t;
    }
    return total;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        BigInt a = c > 0 ? c : BigInt(-c);
        if (a != 1 || m.empty()) {
            os << a.str();
            if (!m.empty()) os << "*";
        }
        if (!m.empty()) os << mono_to_string(m, *alpha_);
    }
    return os.str();
}

}  // namespace cobinv
