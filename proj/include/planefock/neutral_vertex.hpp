#pragma once

#include "planefock/charged_vertex.hpp"
#include "planefock/neutral_fock.hpp"
#include "planefock/planepart.hpp"

namespace planefock {

using NeutralVertexSpec = VertexSpec;

/// <nu|Gamma-hat_+(z)|mu> for strict nu, mu (zero unless nu < mu).
QSeries gamma_hat_plus_element(const NeutralVertexSpec& spec, const StrictPartition& nu,
                               const StrictPartition& mu, int cap2);
/// <mu|Gamma-hat_-(z)|nu>.
QSeries gamma_hat_minus_element(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                const StrictPartition& nu, int cap2);

NeutralVector gamma_hat_plus_comb(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                  int cap2);
NeutralVector gamma_hat_plus_fermionic(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                       int cap2);
NeutralVector gamma_hat_plus_exp(const NeutralVertexSpec& spec, const StrictPartition& mu,
                                 int cap2);

/// Weight-raising; states above max_weight are dropped; grading must be > 0.
NeutralVector gamma_hat_minus_comb(const NeutralVertexSpec& spec, const StrictPartition& nu,
                                   int max_weight, int cap2);
NeutralVector gamma_hat_minus_fermionic(const NeutralVertexSpec& spec, const StrictPartition& nu,
                                        int max_weight, int cap2);
NeutralVector gamma_hat_minus_exp(const NeutralVertexSpec& spec, const StrictPartition& nu,
                                  int max_weight, int cap2);

NeutralVector gamma_hat_on_basis(Route route, const NeutralVertexSpec& spec,
                                 const StrictPartition& mu, int max_weight, int cap2);
/// Linear extension. The exponential route accepts states of either
/// parity; the other routes need the even sector.
NeutralVector apply_gamma_hat(Route route, const NeutralVertexSpec& spec, const NeutralVector& v,
                              int max_weight);

/// Gamma-hat(z) Gamma-hat(-z) = 1 on every strict state of weight <= max_weight.
bool check_gamma_hat_inverse(const NeutralVertexSpec& spec, int max_weight);

/// Both sides of Gamma-hat_+(z) phi_j Gamma-hat_+(-z)|v> = (phi_j + 2 sum z^-n phi_{j-n})|v>.
struct ConjugationSides {
    NeutralVector lhs;
    NeutralVector rhs;
};
ConjugationSides gamma_hat_plus_conjugation(int grading2, int j, const StrictPartition& v,
                                            int cap2);
/// Gamma-hat_-(-z) phi_j Gamma-hat_-(z)|v> = (phi_j + 2 sum (-z)^n phi_{j+n})|v>,
/// compared on states of weight <= max_weight.
ConjugationSides gamma_hat_minus_conjugation(int grading2, int j, const StrictPartition& v,
                                             int max_weight);

struct NeutralCommutationSides {
    NeutralVector lhs;  ///< Gamma-hat_+(z) Gamma-hat_-(z') |mu>
    NeutralVector rhs;  ///< (z + z')/(z - z') Gamma-hat_-(z') Gamma-hat_+(z) |mu>
};
/// Requires a2 < 0 < b2.
NeutralCommutationSides gamma_hat_commutation_sides(int a2, int b2, const StrictPartition& mu,
                                                    int cap2, Route route = Route::combinatorial);
bool check_gamma_hat_commutation(int a2, int b2, const StrictPartition& mu, int cap2,
                                 Route route = Route::combinatorial);

/// <0| prod Gamma-hat_+(q^{-(2j-1)/2}) prod Gamma-hat_-(q^{(2k-1)/2}) |0> to q^N.
QSeries compute_sb(int order, Route route = Route::combinatorial);
/// prod_{n=1}^{N} ((1 + q^n)/(1 - q^n))^n to q^N.
QSeries product_b(int order);

/// Product of the matrix elements along the slice chain of pi, with the
/// specialisation used by compute_sb. pi must be diagonally strict.
QSeries chain_weight(const PlanePartition& pi);

}  // namespace planefock
