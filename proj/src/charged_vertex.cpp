#include "planefock/charged_vertex.hpp"

#include <algorithm>
#include <stdexcept>

namespace planefock {

namespace {

struct FactorTerm {
    Mode mode;
    int zpow;
    CoefScalar c;
};

using Factor = std::vector<FactorTerm>;

FockVector apply_factor(const VertexSpec& spec, const Factor& f, const FockVector& v) {
    const int cap2 = v.order_cap2();
    FockVector out(cap2);
    for (const auto& t : f) {
        out += apply_mode(t.mode, v).times(z_power(spec, t.zpow, t.c, cap2));
    }
    return out;
}

int kappa_sign(const FrobeniusCoords& fc) {
    int kappa = 0;
    for (std::size_t k = 0; k < fc.arms.size(); ++k) {
        kappa += fc.arms[k] + static_cast<int>(k) + 1;
    }
    return kappa % 2 == 0 ? 1 : -1;
}

void require_minus(const VertexSpec& spec, const char* who) {
    if (spec.direction != Direction::minus) {
        throw std::invalid_argument(std::string(who) + ": expected a minus-direction spec");
    }
    if (spec.grading2 <= 0) {
        throw std::invalid_argument(std::string(who) + ": minus grading must be positive");
    }
}

void require_plus(const VertexSpec& spec, const char* who) {
    if (spec.direction != Direction::plus) {
        throw std::invalid_argument(std::string(who) + ": expected a plus-direction spec");
    }
}

int max_weight_of(const FockVector& v) {
    int w = 0;
    for (const auto& [s, c] : v.terms()) {
        w = std::max(w, s.weight());
    }
    return w;
}

int min_weight_of(const FockVector& v) {
    int w = -1;
    for (const auto& [s, c] : v.terms()) {
        w = w < 0 ? s.weight() : std::min(w, s.weight());
    }
    return std::max(w, 0);
}

// exp(X)|v> for a nilpotent-on-v generator X, summed until the term vanishes.
template <typename Gen>
FockVector exponentiate(const FockVector& v, Gen&& x) {
    FockVector result = v;
    FockVector term = v;
    for (int k = 1; !term.is_zero(); ++k) {
        term = x(term).scaled(CoefScalar(Rational(1, k)));
        result += term;
    }
    return result;
}

}  // namespace

const char* route_name(Route r) {
    switch (r) {
        case Route::combinatorial:
            return "combinatorial";
        case Route::fermionic:
            return "fermionic";
        case Route::exponential:
            return "exponential";
    }
    return "?";
}

QSeries z_power(const VertexSpec& spec, int e, const CoefScalar& c, int cap2) {
    const bool flip = spec.negated && (e % 2 != 0);
    return QSeries::monomial(cap2, e * spec.grading2, flip ? -c : c);
}

FockVector gamma_plus_comb(const VertexSpec& spec, const Partition& mu, int cap2) {
    require_plus(spec, "gamma_plus_comb");
    FockVector out(cap2);
    for (const auto& nu : enumerate_interlacing(mu)) {
        out.add(maya_of(nu), z_power(spec, nu.weight() - mu.weight(), CoefScalar(1), cap2));
    }
    return out;
}

FockVector gamma_plus_fermionic(const VertexSpec& spec, const Partition& mu, int cap2) {
    require_plus(spec, "gamma_plus_fermionic");
    const auto fc = charged_modes(mu);
    const int r = static_cast<int>(fc.arms.size());
    FockVector v = FockVector::vacuum(cap2);
    for (int k = r - 1; k >= 0; --k) {
        const int next = k + 1 < r ? fc.legs[k + 1] : 0;
        Factor f;
        for (int i = 0; i <= -fc.legs[k] + next - 1; ++i) {
            f.push_back({{Species::psi_star, fc.legs[k] + i}, -i, CoefScalar(1)});
        }
        v = apply_factor(spec, f, v);
    }
    for (int j = r - 1; j >= 0; --j) {
        const int m = fc.arms[j];
        Factor f{{{Species::psi, m}, 0, CoefScalar(1)}, {{Species::psi, m - 1}, -1, CoefScalar(-1)}};
        v = apply_factor(spec, f, v);
    }
    return kappa_sign(fc) == 1 ? v : v.scaled(CoefScalar(-1));
}

FockVector gamma_plus_exp(const VertexSpec& spec, const Partition& mu, int cap2) {
    require_plus(spec, "gamma_plus_exp");
    // X = -sum_m z^{-m}/m H_m; each H_m lowers weight by m.
    auto x = [&](const FockVector& v) {
        FockVector out(cap2);
        const int top = max_weight_of(v);
        for (int m = 1; m <= top; ++m) {
            out += apply_H(m, v).times(z_power(spec, -m, CoefScalar(Rational(-1, m)), cap2));
        }
        return out;
    };
    return exponentiate(FockVector::basis(mu, cap2), x);
}

FockVector gamma_minus_comb(const VertexSpec& spec, const Partition& nu, int max_weight,
                            int cap2) {
    require_minus(spec, "gamma_minus_comb");
    FockVector out(cap2);
    for (const auto& mu : enumerate_interlaced_by(nu, max_weight)) {
        out.add(maya_of(mu), z_power(spec, mu.weight() - nu.weight(), CoefScalar(1), cap2));
    }
    return out;
}

FockVector gamma_minus_fermionic(const VertexSpec& spec, const Partition& nu, int max_weight,
                                 int cap2) {
    require_minus(spec, "gamma_minus_fermionic");
    // <mu|Gamma_-(z) = (-1)^kappa <0| Z_{n_r}..Z_{n_1} W_{m_r}..W_{m_1}, read
    // off against |nu> for every candidate mu.
    const FockVector ket = FockVector::basis(nu, cap2);
    FockVector out(cap2);
    for (const auto& mu : partitions_up_to(max_weight)) {
        const auto fc = charged_modes(mu);
        const int r = static_cast<int>(fc.arms.size());
        FockVector v = ket;
        for (int k = 0; k < r && !v.is_zero(); ++k) {
            const int m = fc.arms[k];
            Factor w{{{Species::psi_star, m}, 0, CoefScalar(1)},
                     {{Species::psi_star, m - 1}, 1, CoefScalar(-1)}};
            v = apply_factor(spec, w, v);
        }
        for (int j = 0; j < r && !v.is_zero(); ++j) {
            const int next = j + 1 < r ? fc.legs[j + 1] : 0;
            Factor z;
            for (int i = 0; i <= -fc.legs[j] + next - 1; ++i) {
                z.push_back({{Species::psi, fc.legs[j] + i}, i, CoefScalar(1)});
            }
            v = apply_factor(spec, z, v);
        }
        QSeries c = v.coefficient(MayaState{});
        out.add(maya_of(mu), kappa_sign(fc) == 1 ? c : -c);
    }
    return out;
}

FockVector gamma_minus_exp(const VertexSpec& spec, const Partition& nu, int max_weight,
                           int cap2) {
    require_minus(spec, "gamma_minus_exp");
    // Y = -sum_m z^m/m H_{-m}; each H_{-m} raises weight by m.
    auto y = [&](const FockVector& v) {
        FockVector out(cap2);
        const int room = max_weight - min_weight_of(v);
        for (int m = 1; m <= room; ++m) {
            out += apply_H(-m, v).times(z_power(spec, m, CoefScalar(Rational(-1, m)), cap2));
        }
        return out.pruned(max_weight);
    };
    if (nu.weight() > max_weight) {
        return FockVector(cap2);
    }
    return exponentiate(FockVector::basis(nu, cap2), y);
}

FockVector gamma_on_basis(Route route, const VertexSpec& spec, const Partition& mu,
                          int max_weight, int cap2) {
    if (spec.direction == Direction::plus) {
        switch (route) {
            case Route::combinatorial:
                return gamma_plus_comb(spec, mu, cap2);
            case Route::fermionic:
                return gamma_plus_fermionic(spec, mu, cap2);
            case Route::exponential:
                return gamma_plus_exp(spec, mu, cap2);
        }
    }
    switch (route) {
        case Route::combinatorial:
            return gamma_minus_comb(spec, mu, max_weight, cap2);
        case Route::fermionic:
            return gamma_minus_fermionic(spec, mu, max_weight, cap2);
        case Route::exponential:
            return gamma_minus_exp(spec, mu, max_weight, cap2);
    }
    throw std::invalid_argument("gamma_on_basis: unknown route");
}

FockVector apply_gamma(Route route, const VertexSpec& spec, const FockVector& v, int max_weight) {
    const int cap2 = v.order_cap2();
    FockVector out(cap2);
    for (const auto& [state, coef] : v.terms()) {
        auto mu = partition_of(state);
        if (!mu) {
            throw std::invalid_argument("apply_gamma: state outside the charge-0 sector");
        }
        out += gamma_on_basis(route, spec, *mu, max_weight, cap2).times(coef);
    }
    return out;
}

CommutationSides gamma_commutation_sides(int a2, int b2, const Partition& mu, int cap2,
                                         Route route) {
    if (!(a2 < 0 && b2 > 0)) {
        throw std::invalid_argument(
            "gamma_commutation_sides: need plus grading < 0 < minus grading");
    }
    const auto plus = VertexSpec::plus(a2);
    const auto minus = VertexSpec::minus(b2);
    const int max_weight = mu.weight() + cap2 / b2;
    const FockVector ket = FockVector::basis(mu, cap2);

    CommutationSides sides;
    sides.lhs = apply_gamma(route, plus, apply_gamma(route, minus, ket, max_weight), max_weight);

    // (1 - z'/z)^{-1} = sum_k q^{k(b-a)/2}
    QSeries geometric(cap2);
    for (int e = 0; e <= cap2; e += b2 - a2) {
        geometric.add_term(e, CoefScalar(1));
    }
    sides.rhs = apply_gamma(route, minus, apply_gamma(route, plus, ket, max_weight), max_weight)
                    .times(geometric);
    return sides;
}

bool check_gamma_commutation(int a2, int b2, const Partition& mu, int cap2, Route route) {
    const auto sides = gamma_commutation_sides(a2, b2, mu, cap2, route);
    return sides.lhs == sides.rhs;
}

QSeries compute_sa(int order, Route route) {
    if (order < 0) {
        throw std::invalid_argument("compute_sa: negative order");
    }
    const int cap2 = 2 * order;
    FockVector v = FockVector::vacuum(cap2);
    for (int k = order; k >= 1; --k) {
        v = apply_gamma(route, VertexSpec::minus(2 * k - 1), v, order);
    }
    for (int j = 1; j <= order; ++j) {
        v = apply_gamma(route, VertexSpec::plus(-(2 * j - 1)), v, order);
    }
    return v.coefficient(Partition());
}

QSeries macmahon_product(int order) {
    if (order < 0) {
        throw std::invalid_argument("macmahon_product: negative order");
    }
    const int cap2 = 2 * order;
    QSeries denom = QSeries::one(cap2);
    for (int n = 1; n <= order; ++n) {
        QSeries f = QSeries::one(cap2);
        f.add_term(2 * n, CoefScalar(-1));
        for (int k = 0; k < n; ++k) {
            denom = series_mul(denom, f);
        }
    }
    return series_inv_unit(denom);
}

}  // namespace planefock
