#include "planefock/neutral_vertex.hpp"

#include <algorithm>
#include <stdexcept>

namespace planefock {

namespace {

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

struct PhiTerm {
    int mode;
    int zpow;
    CoefScalar c;
};

using PhiFactor = std::vector<PhiTerm>;

NeutralVector apply_phi_factor(const NeutralVertexSpec& spec, const PhiFactor& f,
                               const NeutralVector& v) {
    const int cap2 = v.order_cap2();
    NeutralVector out(cap2);
    for (const auto& t : f) {
        out += apply_phi(t.mode, v).times(z_power(spec, t.zpow, t.c, cap2));
    }
    return out;
}

void require_plus(const NeutralVertexSpec& spec, const char* who) {
    if (spec.direction != Direction::plus) {
        throw std::invalid_argument(std::string(who) + ": expected a plus-direction spec");
    }
}

void require_minus(const NeutralVertexSpec& spec, const char* who) {
    if (spec.direction != Direction::minus) {
        throw std::invalid_argument(std::string(who) + ": expected a minus-direction spec");
    }
    if (spec.grading2 <= 0) {
        throw std::invalid_argument(std::string(who) + ": minus grading must be positive");
    }
}

// 2^{n(nu|mu)} (times (-1)^{n(mu)} sqrt 2 when nu has one part fewer);
// zero unless nu < mu.
CoefScalar lemma_coefficient(const StrictPartition& nu, const StrictPartition& mu) {
    if (!strict_interlaces(nu, mu)) {
        return CoefScalar(0);
    }
    int fresh = 0;
    for (int p : nu.parts()) {
        if (!mu.contains(p)) {
            ++fresh;
        }
    }
    CoefScalar c(1L << fresh);
    if (nu.length() == mu.length()) {
        return c;
    }
    if (nu.length() == mu.length() - 1) {
        return c * CoefScalar::sqrt2() * CoefScalar(parity_sign(mu.length()));
    }
    return CoefScalar(0);
}

// The exponential routes act on any half-line state.
NeutralVector exp_plus_raw(const NeutralVertexSpec& spec, const NeutralVector& v) {
    const int cap2 = v.order_cap2();
    auto x = [&](const NeutralVector& w) {
        NeutralVector out(cap2);
        int top = 0;
        for (const auto& [s, c] : w.terms()) {
            top = std::max(top, s.weight());
        }
        for (int m = 1; m <= top; m += 2) {
            out += apply_lambda(m, w).times(z_power(spec, -m, CoefScalar(Rational(2, m)), cap2));
        }
        return out;
    };
    NeutralVector result = v;
    NeutralVector term = v;
    for (int k = 1; !term.is_zero(); ++k) {
        term = x(term).scaled(CoefScalar(Rational(1, k)));
        result += term;
    }
    return result;
}

NeutralVector exp_minus_raw(const NeutralVertexSpec& spec, const NeutralVector& v,
                            int max_weight) {
    const int cap2 = v.order_cap2();
    auto y = [&](const NeutralVector& w) {
        NeutralVector out(cap2);
        int low = max_weight;
        for (const auto& [s, c] : w.terms()) {
            low = std::min(low, s.weight());
        }
        for (int m = 1; m <= max_weight - low; m += 2) {
            out += apply_lambda(-m, w).times(z_power(spec, m, CoefScalar(Rational(2, m)), cap2));
        }
        return out.pruned(max_weight);
    };
    NeutralVector result = v.pruned(max_weight);
    NeutralVector term = result;
    for (int k = 1; !term.is_zero(); ++k) {
        term = y(term).scaled(CoefScalar(Rational(1, k)));
        result += term;
    }
    return result;
}

}  // namespace

QSeries gamma_hat_plus_element(const NeutralVertexSpec& spec, const StrictPartition& nu,
                               const StrictPartition& mu, int cap2) {
    require_plus(spec, "gamma_hat_plus_element");
    return z_power(spec, nu.weight() - mu.weight(), lemma_coefficient(nu, mu), cap2);
}

QSeries gamma_hat_minus_element(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                const StrictPartition& nu, int cap2) {
    require_minus(spec, "gamma_hat_minus_element");
    return z_power(spec, mu.weight() - nu.weight(), lemma_coefficient(nu, mu), cap2);
}

NeutralVector gamma_hat_plus_comb(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                  int cap2) {
    require_plus(spec, "gamma_hat_plus_comb");
    NeutralVector out(cap2);
    for (const auto& nu : enumerate_strict_interlacing(mu)) {
        out.add(half_maya_of(nu), gamma_hat_plus_element(spec, nu, mu, cap2));
    }
    return out;
}

NeutralVector gamma_hat_plus_fermionic(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                       int cap2) {
    require_plus(spec, "gamma_hat_plus_fermionic");
    // alpha (-1)^r prod_j (phi_{m_j} + 2 sum_i z^-i phi_{m_j-i} + c z^-(m_j-m_{j+1}) phi_{m_{j+1}})
    // with m_{2r+1} = -1. c = 2 when m_{j+1} = 0: the phi_0 term of the next
    // factor survives the telescoping twice because phi_0 phi_0 = 1/2.
    auto modes = neutral_modes(mu);
    const int n = static_cast<int>(modes.size());
    NeutralVector v = NeutralVector::vacuum(cap2);
    for (int j = n - 1; j >= 0; --j) {
        const int m = modes[j];
        const int next = j + 1 < n ? modes[j + 1] : -1;
        PhiFactor f{{m, 0, CoefScalar(1)}};
        for (int i = 1; i <= m - next - 1; ++i) {
            f.push_back({m - i, -i, CoefScalar(2)});
        }
        f.push_back({next, -(m - next), CoefScalar(next == 0 ? 2 : 1)});
        v = apply_phi_factor(spec, f, v);
    }
    return v.scaled(neutral_alpha(mu) * CoefScalar(parity_sign(n / 2)));
}

NeutralVector gamma_hat_plus_exp(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                 int cap2) {
    require_plus(spec, "gamma_hat_plus_exp");
    return exp_plus_raw(spec, NeutralVector::basis(mu, cap2));
}

NeutralVector gamma_hat_minus_comb(const NeutralVertexSpec& spec, const StrictPartition& nu,
                                   int max_weight, int cap2) {
    require_minus(spec, "gamma_hat_minus_comb");
    NeutralVector out(cap2);
    for (const auto& mu : enumerate_strict_interlaced_by(nu, max_weight)) {
        out.add(half_maya_of(mu), gamma_hat_minus_element(spec, mu, nu, cap2));
    }
    return out;
}

NeutralVector gamma_hat_minus_fermionic(const NeutralVertexSpec& spec, const StrictPartition& nu,
                                        int max_weight, int cap2) {
    require_minus(spec, "gamma_hat_minus_fermionic");
    // <mu|Gamma-hat_-(z) = alpha (-1)^{r+|mu|} <0| F_{2r} .. F_1 with
    // F_j = phi_{-m_j} + 2 sum_i (-z)^i phi_{-m_j+i} + c (-z)^{m_j-m_{j+1}} phi_{-m_{j+1}}.
    const NeutralVector ket = NeutralVector::basis(nu, cap2);
    NeutralVector out(cap2);
    for (const auto& mu : strict_partitions_up_to(max_weight)) {
        auto modes = neutral_modes(mu);
        const int n = static_cast<int>(modes.size());
        NeutralVector v = ket;
        for (int j = 0; j < n && !v.is_zero(); ++j) {
            const int m = modes[j];
            const int next = j + 1 < n ? modes[j + 1] : -1;
            PhiFactor f{{-m, 0, CoefScalar(1)}};
            for (int i = 1; i <= m - next - 1; ++i) {
                f.push_back({-m + i, i, CoefScalar(2 * parity_sign(i))});
            }
            const int gap = m - next;
            f.push_back({-next, gap, CoefScalar((next == 0 ? 2 : 1) * parity_sign(gap))});
            v = apply_phi_factor(spec, f, v);
        }
        const CoefScalar norm = neutral_alpha(mu) * CoefScalar(parity_sign(n / 2 + mu.weight()));
        out.add(half_maya_of(mu), v.coefficient(HalfMaya{}) * norm);
    }
    return out;
}

NeutralVector gamma_hat_minus_exp(const NeutralVertexSpec& spec, const StrictPartition& nu,
                                  int max_weight, int cap2) {
    require_minus(spec, "gamma_hat_minus_exp");
    return exp_minus_raw(spec, NeutralVector::basis(nu, cap2), max_weight);
}

NeutralVector gamma_hat_on_basis(Route route, const NeutralVertexSpec& spec,
                                 const StrictPartition& mu, int max_weight, int cap2) {
    if (spec.direction == Direction::plus) {
        switch (route) {
            case Route::combinatorial:
                return gamma_hat_plus_comb(spec, mu, cap2);
            case Route::fermionic:
                return gamma_hat_plus_fermionic(spec, mu, cap2);
            case Route::exponential:
                return gamma_hat_plus_exp(spec, mu, cap2);
        }
    }
    switch (route) {
        case Route::combinatorial:
            return gamma_hat_minus_comb(spec, mu, max_weight, cap2);
        case Route::fermionic:
            return gamma_hat_minus_fermionic(spec, mu, max_weight, cap2);
        case Route::exponential:
            return gamma_hat_minus_exp(spec, mu, max_weight, cap2);
    }
    throw std::invalid_argument("gamma_hat_on_basis: unknown route");
}

NeutralVector apply_gamma_hat(Route route, const NeutralVertexSpec& spec, const NeutralVector& v,
                              int max_weight) {
    if (route == Route::exponential) {
        if (spec.direction == Direction::plus) {
            return exp_plus_raw(spec, v);
        }
        require_minus(spec, "apply_gamma_hat");
        return exp_minus_raw(spec, v, max_weight);
    }
    const int cap2 = v.order_cap2();
    NeutralVector out(cap2);
    for (const auto& [state, coef] : v.terms()) {
        auto mu = strict_partition_of(state);
        if (!mu) {
            throw std::invalid_argument("apply_gamma_hat: odd-sector state needs the exponential route");
        }
        out += gamma_hat_on_basis(route, spec, *mu, max_weight, cap2).times(coef);
    }
    return out;
}

bool check_gamma_hat_inverse(const NeutralVertexSpec& spec, int max_weight) {
    const int g = spec.grading2 < 0 ? -spec.grading2 : spec.grading2;
    const int cap2 = g * max_weight;
    NeutralVertexSpec flipped = spec;
    flipped.negated = !spec.negated;
    for (const auto& mu : strict_partitions_up_to(max_weight)) {
        const NeutralVector ket = NeutralVector::basis(mu, cap2);
        NeutralVector back;
        if (spec.direction == Direction::plus) {
            back = exp_plus_raw(spec, exp_plus_raw(flipped, ket));
        } else {
            back = exp_minus_raw(spec, exp_minus_raw(flipped, ket, max_weight), max_weight);
        }
        if (!(back == ket)) {
            return false;
        }
    }
    return true;
}

ConjugationSides gamma_hat_plus_conjugation(int grading2, int j, const StrictPartition& v,
                                            int cap2) {
    if (grading2 >= 0) {
        throw std::invalid_argument("gamma_hat_plus_conjugation: grading must be negative");
    }
    const auto z = NeutralVertexSpec::plus(grading2);
    const auto minus_z = NeutralVertexSpec::plus(grading2, true);
    const NeutralVector ket = NeutralVector::basis(v, cap2);

    ConjugationSides sides;
    sides.lhs = exp_plus_raw(z, apply_phi(j, exp_plus_raw(minus_z, ket)));

    // phi_{j-n}|v> vanishes once j - n < -(largest white site).
    const int reach = j + (v.empty() ? 0 : v.part(1));
    sides.rhs = apply_phi(j, ket);
    for (int n = 1; n <= reach; ++n) {
        sides.rhs += apply_phi(j - n, ket).times(z_power(z, -n, CoefScalar(2), cap2));
    }
    return sides;
}

ConjugationSides gamma_hat_minus_conjugation(int grading2, int j, const StrictPartition& v,
                                             int max_weight) {
    if (grading2 <= 0) {
        throw std::invalid_argument("gamma_hat_minus_conjugation: grading must be positive");
    }
    const auto z = NeutralVertexSpec::minus(grading2);
    const auto minus_z = NeutralVertexSpec::minus(grading2, true);
    const int inner_weight = max_weight + std::max(0, -j);
    const int cap2 = grading2 * (max_weight + inner_weight + 1);
    const NeutralVector ket = NeutralVector::basis(v, cap2);

    ConjugationSides sides;
    NeutralVector inner = exp_minus_raw(z, ket, inner_weight);
    sides.lhs = exp_minus_raw(minus_z, apply_phi(j, inner), max_weight);

    NeutralVector rhs = apply_phi(j, ket);
    for (int n = 1; j + n <= max_weight; ++n) {
        rhs += apply_phi(j + n, ket).times(z_power(minus_z, n, CoefScalar(2), cap2));
    }
    sides.rhs = rhs.pruned(max_weight);
    return sides;
}

NeutralCommutationSides gamma_hat_commutation_sides(int a2, int b2, const StrictPartition& mu,
                                                    int cap2, Route route) {
    if (!(a2 < 0 && b2 > 0)) {
        throw std::invalid_argument(
            "gamma_hat_commutation_sides: need plus grading < 0 < minus grading");
    }
    const auto plus = NeutralVertexSpec::plus(a2);
    const auto minus = NeutralVertexSpec::minus(b2);
    const int max_weight = mu.weight() + cap2 / b2;
    const NeutralVector ket = NeutralVector::basis(mu, cap2);

    NeutralCommutationSides sides;
    sides.lhs =
        apply_gamma_hat(route, plus, apply_gamma_hat(route, minus, ket, max_weight), max_weight);

    // (z + z')/(z - z') = 1 + 2 sum_k (z'/z)^k
    QSeries factor = QSeries::one(cap2);
    for (int e = b2 - a2; e <= cap2; e += b2 - a2) {
        factor.add_term(e, CoefScalar(2));
    }
    sides.rhs =
        apply_gamma_hat(route, minus, apply_gamma_hat(route, plus, ket, max_weight), max_weight)
            .times(factor);
    return sides;
}

bool check_gamma_hat_commutation(int a2, int b2, const StrictPartition& mu, int cap2,
                                 Route route) {
    const auto sides = gamma_hat_commutation_sides(a2, b2, mu, cap2, route);
    return sides.lhs == sides.rhs;
}

QSeries compute_sb(int order, Route route) {
    if (order < 0) {
        throw std::invalid_argument("compute_sb: negative order");
    }
    const int cap2 = 2 * order;
    NeutralVector v = NeutralVector::vacuum(cap2);
    for (int k = order; k >= 1; --k) {
        v = apply_gamma_hat(route, NeutralVertexSpec::minus(2 * k - 1), v, order);
    }
    for (int j = 1; j <= order; ++j) {
        v = apply_gamma_hat(route, NeutralVertexSpec::plus(-(2 * j - 1)), v, order);
    }
    return v.coefficient(StrictPartition());
}

QSeries product_b(int order) {
    if (order < 0) {
        throw std::invalid_argument("product_b: negative order");
    }
    const int cap2 = 2 * order;
    QSeries num = QSeries::one(cap2);
    QSeries den = QSeries::one(cap2);
    for (int n = 1; n <= order; ++n) {
        QSeries up = QSeries::one(cap2);
        up.add_term(2 * n, CoefScalar(1));
        QSeries down = QSeries::one(cap2);
        down.add_term(2 * n, CoefScalar(-1));
        for (int k = 0; k < n; ++k) {
            num = series_mul(num, up);
            den = series_mul(den, down);
        }
    }
    return series_mul(num, series_inv_unit(den));
}

QSeries chain_weight(const PlanePartition& pi) {
    if (!is_diagonally_strict(pi)) {
        throw std::invalid_argument("chain_weight: plane partition is not diagonally strict");
    }
    const auto chain = diagonal_slices(pi);
    const int cap2 = 2 * pi.weight();
    auto strict = [&](int m) { return StrictPartition(chain.slice(m).parts()); };
    QSeries w = QSeries::one(cap2);
    for (int d = 1; d <= chain.last_index() + 1; ++d) {
        w = series_mul(w, gamma_hat_plus_element(NeutralVertexSpec::plus(-(2 * d - 1)), strict(d),
                                                 strict(d - 1), cap2));
    }
    for (int d = 1; d <= -chain.first_index + 1; ++d) {
        w = series_mul(w, gamma_hat_minus_element(NeutralVertexSpec::minus(2 * d - 1),
                                                  strict(-d + 1), strict(-d), cap2));
    }
    return w;
}

}  // namespace planefock
