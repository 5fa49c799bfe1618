#pragma once

#include "planefock/charged_fock.hpp"

namespace planefock {

enum class Direction { plus, minus };

/// z = q^{grading2/2}; negated selects -z, which multiplies z^e by (-1)^e.
struct VertexSpec {
    Direction direction = Direction::plus;
    int grading2 = -1;
    bool negated = false;

    static VertexSpec plus(int grading2, bool negated = false) {
        return {Direction::plus, grading2, negated};
    }
    static VertexSpec minus(int grading2, bool negated = false) {
        return {Direction::minus, grading2, negated};
    }
};

enum class Route { combinatorial, fermionic, exponential };

const char* route_name(Route r);

/// c * z^e as a series with the given cap.
QSeries z_power(const VertexSpec& spec, int e, const CoefScalar& c, int cap2);

// Gamma_+(z)|mu>: finite, lowers weight. cap2 is the series cap of the
// result.
FockVector gamma_plus_comb(const VertexSpec& spec, const Partition& mu, int cap2);
FockVector gamma_plus_fermionic(const VertexSpec& spec, const Partition& mu, int cap2);
FockVector gamma_plus_exp(const VertexSpec& spec, const Partition& mu, int cap2);

// Gamma_-(z)|nu>: raises weight; states of weight > max_weight are dropped.
// Requires spec.grading2 > 0.
FockVector gamma_minus_comb(const VertexSpec& spec, const Partition& nu, int max_weight,
                            int cap2);
FockVector gamma_minus_fermionic(const VertexSpec& spec, const Partition& nu, int max_weight,
                                 int cap2);
FockVector gamma_minus_exp(const VertexSpec& spec, const Partition& nu, int max_weight, int cap2);

/// Dispatch on direction and route. max_weight is ignored for plus.
FockVector gamma_on_basis(Route route, const VertexSpec& spec, const Partition& mu,
                          int max_weight, int cap2);
/// Linear extension; v must lie in the charge-0 sector.
FockVector apply_gamma(Route route, const VertexSpec& spec, const FockVector& v, int max_weight);

struct CommutationSides {
    FockVector lhs;  ///< Gamma_+(z) Gamma_-(z') |mu>
    FockVector rhs;  ///< (1 - z'/z)^{-1} Gamma_-(z') Gamma_+(z) |mu>
};

/// z = q^{a2/2}, z' = q^{b2/2}; requires a2 < 0 < b2. Throws
/// std::invalid_argument otherwise.
CommutationSides gamma_commutation_sides(int a2, int b2, const Partition& mu, int cap2,
                                         Route route = Route::combinatorial);
bool check_gamma_commutation(int a2, int b2, const Partition& mu, int cap2,
                             Route route = Route::combinatorial);

/// <0| prod_j Gamma_+(q^{-(2j-1)/2}) prod_k Gamma_-(q^{(2k-1)/2}) |0> to q^N.
QSeries compute_sa(int order, Route route = Route::combinatorial);
/// prod_{n=1}^{N} (1 - q^n)^{-n} to q^N.
QSeries macmahon_product(int order);

}  // namespace planefock
