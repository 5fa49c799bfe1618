#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planefock/exactnum.hpp"
#include "planefock/partitions.hpp"

namespace planefock {

/// Half-line Maya diagram: sites < 0 are frozen, the vacuum has black stones
/// on every site >= 0, and a state records the sites >= 0 holding white
/// stones (ascending).
struct HalfMaya {
    std::vector<int> whites;

    int weight() const;
    bool is_black(int site) const;
    /// Black stones strictly left of site (sites 0..site-1).
    int blacks_below(int site) const;
    std::string to_string() const;

    friend auto operator<=>(const HalfMaya&, const HalfMaya&) = default;
};

/// Padded mode list m_1 > ... > m_{2r} >= 0 of |mu>: the parts, plus a
/// trailing 0 when the number of parts is odd.
std::vector<int> neutral_modes(const StrictPartition& mu);
/// alpha: 1 if m_{2r} >= 1, sqrt 2 if m_{2r} = 0.
CoefScalar neutral_alpha(const StrictPartition& mu);

HalfMaya half_maya_of(const StrictPartition& mu);
/// Defined on states with an even number of white stones.
std::optional<StrictPartition> strict_partition_of(const HalfMaya& s);

class NeutralVector {
public:
    using TermMap = std::map<HalfMaya, QSeries>;

    explicit NeutralVector(int order_cap2 = 0) : cap2_(order_cap2) {}

    static NeutralVector basis(const StrictPartition& mu, int cap2);
    static NeutralVector vacuum(int cap2) { return basis(StrictPartition(), cap2); }

    int order_cap2() const { return cap2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const HalfMaya& s, const QSeries& c);
    void add(const HalfMaya& s, int exp2, const CoefScalar& c);

    QSeries coefficient(const HalfMaya& s) const;
    QSeries coefficient(const StrictPartition& mu) const { return coefficient(half_maya_of(mu)); }

    NeutralVector& operator+=(const NeutralVector& o);
    NeutralVector& operator-=(const NeutralVector& o);
    friend NeutralVector operator+(NeutralVector a, const NeutralVector& b) { return a += b; }
    friend NeutralVector operator-(NeutralVector a, const NeutralVector& b) { return a -= b; }

    NeutralVector scaled(const CoefScalar& c) const;
    NeutralVector times(const QSeries& f) const;
    NeutralVector pruned(int max_weight) const;
    NeutralVector with_cap(int cap2) const;

    friend bool operator==(const NeutralVector& a, const NeutralVector& b) {
        return a.cap2_ == b.cap2_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int cap2_;
    TermMap terms_;
};

/// Mode indices written left to right; applied to kets right to left.
using PhiMonomial = std::vector<int>;

NeutralVector apply_phi(int m, const NeutralVector& v);
NeutralVector apply_phi_monomial(const PhiMonomial& word, const NeutralVector& v);

/// lambda_m = 1/2 sum_j (-1)^{j+1} phi_j phi_{-j-m}; throws
/// std::invalid_argument for even m.
NeutralVector apply_lambda(int m, const NeutralVector& v);

/// alpha (-1)^r phi_{m_1} .. phi_{m_2r}.
struct NeutralMonomial {
    CoefScalar factor{1};
    PhiMonomial word;
};
NeutralMonomial neutral_ket_monomial(const StrictPartition& mu);
/// alpha (-1)^{r+|mu|} <0| phi_{-m_2r} .. phi_{-m_1}.
NeutralMonomial neutral_bra_monomial(const StrictPartition& mu);

QSeries neutral_inner(const StrictPartition& bra, const NeutralVector& v);
/// <0| word |v>.
QSeries neutral_vacuum_expectation(const PhiMonomial& word, const NeutralVector& v);
QSeries neutral_inner_by_contraction(const StrictPartition& bra, const NeutralVector& v);

}  // namespace planefock
