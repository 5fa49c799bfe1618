#include "planefock/neutral_fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planefock {

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

struct Image {
    CoefScalar c;
    HalfMaya state;
};

std::optional<Image> phi_on(int m, const HalfMaya& s) {
    auto& w = s.whites;
    if (m == 0) {
        static const CoefScalar half_root = CoefScalar(0, Rational(1, 2));
        Image out{half_root, s};
        if (!w.empty() && w.front() == 0) {
            out.state.whites.erase(out.state.whites.begin());
        } else {
            out.state.whites.insert(out.state.whites.begin(), 0);
        }
        return out;
    }
    const int site = m > 0 ? m : -m;
    const bool black = s.is_black(site);
    if ((m > 0) != black) {
        return std::nullopt;
    }
    const int below = s.blacks_below(site);
    Image out{CoefScalar(m > 0 ? parity_sign(m + below) : parity_sign(below)), s};
    auto& ow = out.state.whites;
    auto it = std::lower_bound(ow.begin(), ow.end(), site);
    if (m > 0) {
        ow.insert(it, site);
    } else {
        ow.erase(it);
    }
    return out;
}

}  // namespace

int HalfMaya::weight() const {
    int w = 0;
    for (int x : whites) {
        w += x;
    }
    return w;
}

bool HalfMaya::is_black(int site) const {
    return site >= 0 && !std::binary_search(whites.begin(), whites.end(), site);
}

int HalfMaya::blacks_below(int site) const {
    if (site <= 0) {
        return 0;
    }
    auto whites_below = std::lower_bound(whites.begin(), whites.end(), site) - whites.begin();
    return site - static_cast<int>(whites_below);
}

std::string HalfMaya::to_string() const {
    if (auto mu = strict_partition_of(*this)) {
        return mu->to_string();
    }
    std::ostringstream os;
    os << "half-maya(white:";
    for (int x : whites) {
        os << " " << x;
    }
    os << ")";
    return os.str();
}

std::vector<int> neutral_modes(const StrictPartition& mu) {
    std::vector<int> modes = mu.parts();
    if (modes.size() % 2 == 1) {
        modes.push_back(0);
    }
    return modes;
}

CoefScalar neutral_alpha(const StrictPartition& mu) {
    return mu.length() % 2 == 1 ? CoefScalar::sqrt2() : CoefScalar(1);
}

HalfMaya half_maya_of(const StrictPartition& mu) {
    auto modes = neutral_modes(mu);
    return HalfMaya{{modes.rbegin(), modes.rend()}};
}

std::optional<StrictPartition> strict_partition_of(const HalfMaya& s) {
    if (s.whites.size() % 2 != 0) {
        return std::nullopt;
    }
    std::vector<int> parts;
    for (auto it = s.whites.rbegin(); it != s.whites.rend(); ++it) {
        if (*it != 0) {
            parts.push_back(*it);
        }
    }
    return StrictPartition(std::move(parts));
}

NeutralVector NeutralVector::basis(const StrictPartition& mu, int cap2) {
    NeutralVector v(cap2);
    v.add(half_maya_of(mu), 0, CoefScalar(1));
    return v;
}

void NeutralVector::add(const HalfMaya& s, const QSeries& c) {
    if (c.order_cap2() != cap2_) {
        add(s, c.with_cap(cap2_));
        return;
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void NeutralVector::add(const HalfMaya& s, int exp2, const CoefScalar& c) {
    add(s, QSeries::monomial(cap2_, exp2, c));
}

QSeries NeutralVector::coefficient(const HalfMaya& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? QSeries(cap2_) : it->second;
}

NeutralVector& NeutralVector::operator+=(const NeutralVector& o) {
    for (const auto& [s, c] : o.terms_) {
        add(s, c);
    }
    return *this;
}

NeutralVector& NeutralVector::operator-=(const NeutralVector& o) {
    for (const auto& [s, c] : o.terms_) {
        add(s, -c);
    }
    return *this;
}

NeutralVector NeutralVector::scaled(const CoefScalar& c) const {
    NeutralVector out(cap2_);
    for (const auto& [s, v] : terms_) {
        out.add(s, v * c);
    }
    return out;
}

NeutralVector NeutralVector::times(const QSeries& f) const {
    NeutralVector out(cap2_);
    for (const auto& [s, v] : terms_) {
        out.add(s, series_mul(v, f));
    }
    return out;
}

NeutralVector NeutralVector::pruned(int max_weight) const {
    NeutralVector out(cap2_);
    for (const auto& [s, v] : terms_) {
        if (s.weight() <= max_weight) {
            out.terms_.emplace(s, v);
        }
    }
    return out;
}

NeutralVector NeutralVector::with_cap(int cap2) const {
    NeutralVector out(cap2);
    for (const auto& [s, v] : terms_) {
        out.add(s, v.with_cap(cap2));
    }
    return out;
}

std::string NeutralVector::to_string() const {
    std::map<StrictPartition, const QSeries*> labelled;
    std::vector<std::pair<std::string, const QSeries*>> rest;
    for (const auto& [s, c] : terms_) {
        if (auto mu = strict_partition_of(s)) {
            labelled.emplace(*mu, &c);
        } else {
            rest.emplace_back(s.to_string(), &c);
        }
    }
    std::ostringstream os;
    for (const auto& [mu, c] : labelled) {
        os << mu.to_string() << ": " << c->to_string() << "\n";
    }
    for (const auto& [label, c] : rest) {
        os << label << ": " << c->to_string() << "\n";
    }
    return os.str();
}

NeutralVector apply_phi(int m, const NeutralVector& v) {
    NeutralVector out(v.order_cap2());
    for (const auto& [state, coef] : v.terms()) {
        if (auto img = phi_on(m, state)) {
            out.add(img->state, coef * img->c);
        }
    }
    return out;
}

NeutralVector apply_phi_monomial(const PhiMonomial& word, const NeutralVector& v) {
    NeutralVector cur = v;
    for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) {
        cur = apply_phi(*it, cur);
    }
    return cur;
}

NeutralVector apply_lambda(int m, const NeutralVector& v) {
    if (m % 2 == 0) {
        throw std::invalid_argument("apply_lambda: index must be odd");
    }
    NeutralVector out(v.order_cap2());
    const int reach = m < 0 ? -m : m;
    for (const auto& [state, coef] : v.terms()) {
        const int top = (state.whites.empty() ? 0 : state.whites.back()) + reach + 2;
        for (int j = -top; j <= top; ++j) {
            auto a = phi_on(-j - m, state);
            if (!a) {
                continue;
            }
            auto b = phi_on(j, a->state);
            if (!b) {
                continue;
            }
            CoefScalar c = a->c * b->c * CoefScalar(Rational(parity_sign(j + 1), 2));
            out.add(b->state, coef * c);
        }
    }
    return out;
}

NeutralMonomial neutral_ket_monomial(const StrictPartition& mu) {
    auto modes = neutral_modes(mu);
    const int r = static_cast<int>(modes.size()) / 2;
    return {neutral_alpha(mu) * CoefScalar(parity_sign(r)), modes};
}

NeutralMonomial neutral_bra_monomial(const StrictPartition& mu) {
    auto modes = neutral_modes(mu);
    const int r = static_cast<int>(modes.size()) / 2;
    NeutralMonomial out{neutral_alpha(mu) * CoefScalar(parity_sign(r + mu.weight())), {}};
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
        out.word.push_back(-*it);
    }
    return out;
}

QSeries neutral_inner(const StrictPartition& bra, const NeutralVector& v) {
    return v.coefficient(bra);
}

QSeries neutral_vacuum_expectation(const PhiMonomial& word, const NeutralVector& v) {
    return apply_phi_monomial(word, v).coefficient(HalfMaya{});
}

QSeries neutral_inner_by_contraction(const StrictPartition& bra, const NeutralVector& v) {
    const auto b = neutral_bra_monomial(bra);
    return neutral_vacuum_expectation(b.word, v) * b.factor;
}

}  // namespace planefock
