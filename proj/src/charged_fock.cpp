#include "planefock/charged_fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planefock {

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

void insert_sorted(std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }

void erase_sorted(std::vector<int>& v, int x) { v.erase(std::lower_bound(v.begin(), v.end(), x)); }

struct SignedState {
    int sign;
    MayaState state;
};

// psi_m removes the black stone at m with sign (-1)^{k-1}, k its position
// counted from the left.
std::optional<SignedState> psi_on(int m, const MayaState& s) {
    if (!s.is_black(m)) {
        return std::nullopt;
    }
    SignedState out{parity_sign(s.blacks_below(m)), s};
    if (m < 0) {
        erase_sorted(out.state.particles, m);
    } else {
        insert_sorted(out.state.holes, m);
    }
    return out;
}

// psi*_m places a black stone at m with sign (-1)^k, k the number of black
// stones left of m.
std::optional<SignedState> psi_star_on(int m, const MayaState& s) {
    if (s.is_black(m)) {
        return std::nullopt;
    }
    SignedState out{parity_sign(s.blacks_below(m)), s};
    if (m < 0) {
        insert_sorted(out.state.particles, m);
    } else {
        erase_sorted(out.state.holes, m);
    }
    return out;
}

template <typename Basis>
FockVector linear(const FockVector& v, Basis&& on_basis) {
    FockVector out(v.order_cap2());
    for (const auto& [state, coef] : v.terms()) {
        if (auto r = on_basis(state)) {
            out.add(r->state, r->sign == 1 ? coef : -coef);
        }
    }
    return out;
}

}  // namespace

int MayaState::weight() const {
    int w = 0;
    for (int h : holes) {
        w += h;
    }
    for (int p : particles) {
        w -= p;
    }
    return w;
}

bool MayaState::is_black(int site) const {
    return site < 0 ? contains(particles, site) : !contains(holes, site);
}

int MayaState::blacks_below(int site) const {
    if (site <= 0) {
        return static_cast<int>(std::lower_bound(particles.begin(), particles.end(), site) -
                                particles.begin());
    }
    int holes_below = static_cast<int>(std::lower_bound(holes.begin(), holes.end(), site) -
                                       holes.begin());
    return static_cast<int>(particles.size()) + site - holes_below;
}

std::string MayaState::to_string() const {
    if (auto mu = partition_of(*this)) {
        return mu->to_string();
    }
    std::ostringstream os;
    os << "maya(white:";
    for (int h : holes) {
        os << " " << h;
    }
    os << "; black:";
    for (int p : particles) {
        os << " " << p;
    }
    os << ")";
    return os.str();
}

MayaState maya_of(const Partition& mu) {
    MayaState s;
    const int l = mu.length();
    std::vector<bool> black_nonneg(l, false);
    for (int k = 1; k <= l; ++k) {
        int site = k - 1 - mu.part(k);
        if (site < 0) {
            s.particles.push_back(site);
        } else {
            black_nonneg[site] = true;
        }
    }
    std::sort(s.particles.begin(), s.particles.end());
    // Sites >= l are black (rows beyond the length); below l only the
    // recorded ones are.
    for (int site = 0; site < l; ++site) {
        if (!black_nonneg[site]) {
            s.holes.push_back(site);
        }
    }
    return s;
}

std::optional<Partition> partition_of(const MayaState& s) {
    if (s.charge() != 0) {
        return std::nullopt;
    }
    // k-th black stone from the left sits at k - 1 - mu_k.
    std::vector<int> parts;
    int k = 1;
    for (int p : s.particles) {
        parts.push_back(k - 1 - p);
        ++k;
    }
    const int top = s.holes.empty() ? 0 : s.holes.back() + 1;
    for (int site = 0; site < top; ++site) {
        if (!contains(s.holes, site)) {
            parts.push_back(k - 1 - site);
            ++k;
        }
    }
    return Partition(std::move(parts));
}

FrobeniusCoords charged_modes(const Partition& mu) {
    MayaState s = maya_of(mu);
    FrobeniusCoords fc;
    fc.arms.assign(s.holes.rbegin(), s.holes.rend());
    fc.legs = s.particles;
    return fc;
}

FockVector FockVector::basis(const Partition& mu, int cap2) {
    FockVector v(cap2);
    v.add(maya_of(mu), 0, CoefScalar(1));
    return v;
}

void FockVector::add(const MayaState& s, const QSeries& c) {
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

void FockVector::add(const MayaState& s, int exp2, const CoefScalar& c) {
    add(s, QSeries::monomial(cap2_, exp2, c));
}

QSeries FockVector::coefficient(const MayaState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? QSeries(cap2_) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) {
        add(s, c);
    }
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) {
        add(s, -c);
    }
    return *this;
}

FockVector FockVector::scaled(const CoefScalar& c) const {
    FockVector out(cap2_);
    for (const auto& [s, v] : terms_) {
        out.add(s, v * c);
    }
    return out;
}

FockVector FockVector::times(const QSeries& f) const {
    FockVector out(cap2_);
    for (const auto& [s, v] : terms_) {
        out.add(s, series_mul(v, f));
    }
    return out;
}

FockVector FockVector::pruned(int max_weight) const {
    FockVector out(cap2_);
    for (const auto& [s, v] : terms_) {
        if (s.weight() <= max_weight) {
            out.terms_.emplace(s, v);
        }
    }
    return out;
}

FockVector FockVector::with_cap(int cap2) const {
    FockVector out(cap2);
    for (const auto& [s, v] : terms_) {
        out.add(s, v.with_cap(cap2));
    }
    return out;
}

std::string FockVector::to_string() const {
    // Charge-0 terms in partition order, the rest after them.
    std::vector<std::pair<std::string, const QSeries*>> lines;
    std::map<Partition, const QSeries*> labelled;
    for (const auto& [s, c] : terms_) {
        if (auto mu = partition_of(s)) {
            labelled.emplace(*mu, &c);
        } else {
            lines.emplace_back(s.to_string(), &c);
        }
    }
    std::ostringstream os;
    for (const auto& [mu, c] : labelled) {
        os << mu.to_string() << ": " << c->to_string() << "\n";
    }
    for (const auto& [label, c] : lines) {
        os << label << ": " << c->to_string() << "\n";
    }
    return os.str();
}

FockVector apply_psi(int m, const FockVector& v) {
    return linear(v, [m](const MayaState& s) { return psi_on(m, s); });
}

FockVector apply_psi_star(int m, const FockVector& v) {
    return linear(v, [m](const MayaState& s) { return psi_star_on(m, s); });
}

FockVector apply_mode(const Mode& mode, const FockVector& v) {
    return mode.species == Species::psi ? apply_psi(mode.index, v) : apply_psi_star(mode.index, v);
}

FockVector apply_monomial(const ModeMonomial& word, const FockVector& v) {
    FockVector cur = v;
    for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) {
        cur = apply_mode(*it, cur);
    }
    return cur;
}

FockVector apply_H(int m, const FockVector& v) {
    if (m == 0) {
        throw std::invalid_argument("apply_H: H_0 is the charge operator and is not supported");
    }
    FockVector out(v.order_cap2());
    const int reach = m < 0 ? -m : m;
    for (const auto& [state, coef] : v.terms()) {
        // Outside [lo, hi] both sites of psi_j psi*_{j+m} are in the vacuum
        // tails, where the pair cannot act.
        int lo = state.particles.empty() ? -1 : state.particles.front();
        int hi = state.holes.empty() ? 0 : state.holes.back();
        lo -= reach + 1;
        hi += reach + 1;
        for (int j = lo; j <= hi; ++j) {
            auto a = psi_star_on(j + m, state);
            if (!a) {
                continue;
            }
            auto b = psi_on(j, a->state);
            if (!b) {
                continue;
            }
            out.add(b->state, a->sign * b->sign == 1 ? coef : -coef);
        }
    }
    return out;
}

SignedMonomial ket_monomial(const Partition& mu) {
    const auto fc = charged_modes(mu);
    SignedMonomial out;
    int kappa = 0;
    for (std::size_t k = 0; k < fc.arms.size(); ++k) {
        kappa += fc.arms[k] + static_cast<int>(k) + 1;
        out.word.push_back({Species::psi, fc.arms[k]});
    }
    for (int n : fc.legs) {
        out.word.push_back({Species::psi_star, n});
    }
    out.sign = parity_sign(kappa);
    return out;
}

SignedMonomial bra_monomial(const Partition& mu) {
    const auto fc = charged_modes(mu);
    SignedMonomial out;
    int kappa = 0;
    for (std::size_t k = 0; k < fc.arms.size(); ++k) {
        kappa += fc.arms[k] + static_cast<int>(k) + 1;
    }
    for (auto it = fc.legs.rbegin(); it != fc.legs.rend(); ++it) {
        out.word.push_back({Species::psi, *it});
    }
    for (auto it = fc.arms.rbegin(); it != fc.arms.rend(); ++it) {
        out.word.push_back({Species::psi_star, *it});
    }
    out.sign = parity_sign(kappa);
    return out;
}

QSeries inner_product(const Partition& bra, const FockVector& v) { return v.coefficient(bra); }

QSeries vacuum_expectation(const ModeMonomial& word, const FockVector& v) {
    return apply_monomial(word, v).coefficient(MayaState{});
}

QSeries inner_product_by_contraction(const Partition& bra, const FockVector& v) {
    const auto b = bra_monomial(bra);
    QSeries r = vacuum_expectation(b.word, v);
    return b.sign == 1 ? r : -r;
}

}  // namespace planefock
