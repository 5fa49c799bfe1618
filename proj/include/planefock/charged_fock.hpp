#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planefock/exactnum.hpp"
#include "planefock/partitions.hpp"

namespace planefock {

/// A Maya diagram stored as its deviation from the vacuum (black stones on
/// every site >= 0, white stones on every site < 0). Any charge is allowed
/// so that single modes can act; only charge 0 carries a Partition label.
struct MayaState {
    std::vector<int> holes;      ///< white stones at sites >= 0, ascending
    std::vector<int> particles;  ///< black stones at sites < 0, ascending

    int charge() const {
        return static_cast<int>(particles.size()) - static_cast<int>(holes.size());
    }
    /// sum(holes) + sum(-particles); equals |mu| on the charge-0 sector.
    int weight() const;
    bool is_black(int site) const;
    /// Number of black stones strictly left of site.
    int blacks_below(int site) const;

    std::string to_string() const;

    friend auto operator<=>(const MayaState&, const MayaState&) = default;
};

/// Charge-0 basis state |mu>: black stones at {k - 1 - mu_k : k >= 1}.
MayaState maya_of(const Partition& mu);
std::optional<Partition> partition_of(const MayaState& s);

/// Mode lists of |mu>: m_1 > ... > m_r >= 0 (white stones), n_1 < ... < n_r < 0
/// (black stones). This is to_frobenius(mu.conjugate()).
FrobeniusCoords charged_modes(const Partition& mu);

/// Finite linear combination of Maya states with series coefficients.
class FockVector {
public:
    using TermMap = std::map<MayaState, QSeries>;

    explicit FockVector(int order_cap2 = 0) : cap2_(order_cap2) {}

    static FockVector basis(const Partition& mu, int cap2);
    static FockVector vacuum(int cap2) { return basis(Partition(), cap2); }

    int order_cap2() const { return cap2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const MayaState& s, const QSeries& c);
    void add(const MayaState& s, int exp2, const CoefScalar& c);

    QSeries coefficient(const MayaState& s) const;
    QSeries coefficient(const Partition& mu) const { return coefficient(maya_of(mu)); }

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    FockVector scaled(const CoefScalar& c) const;
    /// Multiplies every coefficient by a series (truncated product).
    FockVector times(const QSeries& f) const;
    /// Drops states of weight > max_weight.
    FockVector pruned(int max_weight) const;
    FockVector with_cap(int cap2) const;

    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.cap2_ == b.cap2_ && a.terms_ == b.terms_;
    }

    /// One "label: series" line per term; charge-0 states print as partitions.
    std::string to_string() const;

private:
    int cap2_;
    TermMap terms_;
};

enum class Species { psi, psi_star };

struct Mode {
    Species species;
    int index;
    friend bool operator==(const Mode&, const Mode&) = default;
};

/// Product of modes written left to right; acts on kets right to left.
using ModeMonomial = std::vector<Mode>;

FockVector apply_psi(int m, const FockVector& v);
FockVector apply_psi_star(int m, const FockVector& v);
FockVector apply_mode(const Mode& mode, const FockVector& v);
FockVector apply_monomial(const ModeMonomial& word, const FockVector& v);

/// H_m = sum_j psi_j psi*_{j+m}; throws std::invalid_argument for m = 0.
FockVector apply_H(int m, const FockVector& v);

/// (-1)^kappa and the word psi_{m_1}..psi_{m_r} psi*_{n_1}..psi*_{n_r}.
struct SignedMonomial {
    int sign = 1;
    ModeMonomial word;
};
SignedMonomial ket_monomial(const Partition& mu);
/// (-1)^kappa <0| psi_{n_r}..psi_{n_1} psi*_{m_r}..psi*_{m_1}.
SignedMonomial bra_monomial(const Partition& mu);

/// <bra|v> by coefficient extraction.
QSeries inner_product(const Partition& bra, const FockVector& v);
/// <0| word |v>, evaluated by acting on v with ket-side modes.
QSeries vacuum_expectation(const ModeMonomial& word, const FockVector& v);
/// <bra|v> evaluated by contracting the bra monomial against v.
QSeries inner_product_by_contraction(const Partition& bra, const FockVector& v);

}  // namespace planefock
