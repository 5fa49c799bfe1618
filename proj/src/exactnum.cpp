#include "planefock/exactnum.hpp"

#include <sstream>

namespace planefock {

CoefScalar::CoefScalar(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {
    rat_.canonicalize();
    irr_.canonicalize();
}

CoefScalar& CoefScalar::operator+=(const CoefScalar& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

CoefScalar& CoefScalar::operator-=(const CoefScalar& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

CoefScalar& CoefScalar::operator*=(const CoefScalar& o) {
    if (o.is_rational()) {
        rat_ *= o.rat_;
        irr_ *= o.rat_;
        return *this;
    }
    Rational r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
    Rational s = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(s);
    return *this;
}

CoefScalar CoefScalar::inverse() const {
    // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm vanishes only at 0
    // because sqrt(2) is irrational.
    Rational norm = rat_ * rat_ - 2 * irr_ * irr_;
    if (sgn(norm) == 0) {
        throw std::domain_error("CoefScalar::inverse: division by zero");
    }
    return CoefScalar(rat_ / norm, -irr_ / norm);
}

std::string CoefScalar::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    if (sgn(rat_) != 0) {
        out = rat_.get_str();
    }
    if (sgn(irr_) != 0) {
        if (!out.empty() && sgn(irr_) > 0) {
            out += "+";
        }
        if (irr_ == 1) {
            out += "sqrt2";
        } else if (irr_ == -1) {
            out += "-sqrt2";
        } else {
            out += irr_.get_str() + "*sqrt2";
        }
    }
    return out;
}

CoefScalar scalar_add(const CoefScalar& a, const CoefScalar& b) { return a + b; }
CoefScalar scalar_mul(const CoefScalar& a, const CoefScalar& b) { return a * b; }
CoefScalar scalar_neg(const CoefScalar& a) { return -a; }

QSeries QSeries::monomial(int cap2, int exp2, const CoefScalar& c) {
    QSeries s(cap2);
    s.add_term(exp2, c);
    return s;
}

CoefScalar QSeries::coefficient(int exp2) const {
    auto it = terms_.find(exp2);
    return it == terms_.end() ? CoefScalar() : it->second;
}

int QSeries::min_exponent2() const {
    if (terms_.empty()) {
        throw std::domain_error("QSeries::min_exponent2: zero series");
    }
    return terms_.begin()->first;
}

void QSeries::add_term(int exp2, const CoefScalar& c) {
    if (exp2 > cap2_ || c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exp2, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.cap2_ != cap2_) {
        throw std::invalid_argument("QSeries: order cap mismatch");
    }
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.cap2_ != cap2_) {
        throw std::invalid_argument("QSeries: order cap mismatch");
    }
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

QSeries& QSeries::operator*=(const CoefScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries out(*this);
    for (auto& [e, v] : out.terms_) {
        v = -v;
    }
    return out;
}

QSeries QSeries::shifted(int shift2) const {
    QSeries out(cap2_);
    for (const auto& [e, c] : terms_) {
        out.add_term(e + shift2, c);
    }
    return out;
}

QSeries QSeries::with_cap(int cap2) const {
    QSeries out(cap2);
    for (const auto& [e, c] : terms_) {
        out.add_term(e, c);
    }
    return out;
}

std::string QSeries::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coef = c.to_string();
        bool negative = coef.front() == '-' && c.is_rational();
        if (negative) {
            coef.erase(0, 1);
        }
        if (!c.is_rational()) {
            coef = "(" + coef + ")";
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << coef;
            continue;
        }
        if (coef != "1") {
            os << coef << "*";
        }
        os << "q";
        if (e != 2) {
            os << "^(" << render_half_integer(e) << ")";
        }
    }
    return os.str();
}

QSeries series_mul(const QSeries& f, const QSeries& g) {
    if (f.order_cap2() != g.order_cap2()) {
        throw std::invalid_argument("series_mul: order cap mismatch");
    }
    QSeries out(f.order_cap2());
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            if (ef + eg > out.order_cap2()) {
                break;
            }
            out.add_term(ef + eg, cf * cg);
        }
    }
    return out;
}

QSeries series_inv_unit(const QSeries& f) {
    if (f.is_zero() || f.min_exponent2() < 0) {
        throw std::domain_error("series_inv_unit: series has negative powers or is zero");
    }
    CoefScalar c0 = f.coefficient(0);
    if (c0.is_zero()) {
        throw std::domain_error("series_inv_unit: zero constant term");
    }
    CoefScalar inv0 = c0.inverse();
    const int cap2 = f.order_cap2();
    // g_e = -inv0 * sum_{0 < d <= e} f_d g_{e-d}, solved in increasing e.
    std::map<int, CoefScalar> g;
    for (int e = 0; e <= cap2; ++e) {
        CoefScalar acc = e == 0 ? CoefScalar(1) : CoefScalar();
        for (const auto& [d, fd] : f.terms()) {
            if (d == 0) {
                continue;
            }
            if (d > e) {
                break;
            }
            auto it = g.find(e - d);
            if (it != g.end()) {
                acc -= fd * it->second;
            }
        }
        if (!acc.is_zero()) {
            g.emplace(e, acc * inv0);
        }
    }
    QSeries out(cap2);
    for (const auto& [e, c] : g) {
        out.add_term(e, c);
    }
    return out;
}

std::string render_half_integer(int twice) {
    if (twice % 2 == 0) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

int parse_half_integer(const std::string& text) {
    auto fail = [&]() -> int {
        throw std::invalid_argument("not a half-integer: '" + text + "'");
    };
    if (text.empty()) {
        return fail();
    }
    try {
        std::size_t pos = 0;
        if (auto slash = text.find('/'); slash != std::string::npos) {
            int num = std::stoi(text.substr(0, slash), &pos);
            if (pos != slash || text.substr(slash + 1) != "2") {
                return fail();
            }
            return num;
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string frac = text.substr(dot + 1);
            std::string whole = text.substr(0, dot);
            bool neg = !whole.empty() && whole.front() == '-';
            int w = (whole.empty() || whole == "-") ? 0 : std::stoi(whole, &pos);
            int twice = 2 * w;
            if (frac == "5") {
                twice += neg ? -1 : 1;
            } else if (frac != "0" && !frac.empty()) {
                return fail();
            }
            return twice;
        }
        int v = std::stoi(text, &pos);
        if (pos != text.size()) {
            return fail();
        }
        return 2 * v;
    } catch (const std::logic_error&) {
        return fail();
    }
}

}  // namespace planefock
