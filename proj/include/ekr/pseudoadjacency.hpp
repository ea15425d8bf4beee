#pragma once

#include "ekr/scheme.hpp"

#include <vector>

namespace ekr {

/// Exact values a_{k-i} for i = 0..t-1.  When a t-(n,k,1) design exists these
/// are the top entries of its inner distribution; the values are defined for
/// every valid parameter triple regardless.
struct AVector {
    SchemeParams params;
    std::vector<Rational> entries; // entries[i] = a_{k-i}, i = 0..t-1

    const Rational& a(int i) const { return entries.at(i); } // a_{k-i}
};

AVector a_vector(const SchemeParams& params);

enum class MatrixKind { schrijver, wilson };

/// Coefficient-level description of a pseudoadjacency matrix of G(n,k,t):
/// Schrijver's S(n,k,t) over the A basis, Wilson's Omega(n,k,t) over the D
/// basis.  The materialized matrix has zero diagonal, vanishes on pairs with
/// |F ∩ F'| >= t, and has constant row sums.
struct PseudoadjacencyDescriptor {
    SchemeParams params;
    MatrixKind kind;
    BasisVector coefficients;
};

PseudoadjacencyDescriptor schrijver_descriptor(const SchemeParams& params);
PseudoadjacencyDescriptor wilson_descriptor(const SchemeParams& params);

/// Both sides of the per-index coefficient identity whose conjunction over
/// i = 0..t-1 is equivalent to S(n,k,t) = Omega(n,k,t).
struct CoefficientIdentityReport {
    int i;
    Rational lhs; // Schrijver coefficient of D_{k-i} after basis conversion
    Rational rhs; // Wilson coefficient of D_{k-i}
    bool equal;
};

CoefficientIdentityReport verify_coefficient_identity(const SchemeParams& params, int i);

enum class EqualityMode { coefficients, materialized };

struct EqualityReport {
    EqualityMode mode;
    bool equal;
    /// Coefficient mode: (index, schrijver-in-D, wilson-in-D) for every
    /// mismatching index.  Materialized mode: flattened entry coordinates.
    struct Mismatch {
        int index;
        Rational schrijver;
        Rational wilson;
    };
    std::vector<Mismatch> mismatches;
};

/// Full equality check S(n,k,t) = Omega(n,k,t), either by converting the
/// Schrijver vector to the D basis (default; O(t^2) rationals) or by dense
/// entrywise comparison (bounded by the materialization cap).
EqualityReport verify_equality(const SchemeParams& params,
                               EqualityMode mode = EqualityMode::coefficients,
                               std::size_t cap = kDefaultMaterializeCap);

/// Pseudoadjacency invariants of a materialized descriptor.
struct PseudoadjacencyCheck {
    bool row_sums_constant;
    Rational row_sum; // row 0 when not constant
    bool support_ok;  // entries vanish on |F ∩ F'| >= t pairs
    bool diagonal_zero;
};

PseudoadjacencyCheck support_and_rowsum_check(const SchemeParams& params,
                                              const PseudoadjacencyDescriptor& descriptor,
                                              std::size_t cap = kDefaultMaterializeCap);

} // namespace ekr
