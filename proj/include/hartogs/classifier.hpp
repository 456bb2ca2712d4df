#pragma once

#include <optional>
#include <string>

#include "hartogs/profile.hpp"

namespace hartogs {

/// Outcome of the exact Einstein test. Exactly one of c6 /
/// residual_witness is present: c6 (> 0) when the one-variable identity
/// holds, otherwise the nonzero canonical rational function
/// L/R - (L/R)(1) witnessing the failure.
struct EinsteinVerdict {
    bool is_einstein = false;
    std::optional<Rational> c6;
    std::optional<RationalFunction> residual_witness;
};

enum class ClassificationKind { Ball, ProductCase, NotEinstein };

/// Symbolic record of the fiber rescaling eta -> C^{-1/2} eta with
/// C = (n!/pi^n)^{-1/(n+1)} that maps the domain onto the unit ball.
struct RescaleRecord {
    unsigned n = 0;
    unsigned m = 0;
    mpz_class n_factorial;
    Rational exponent; // -1/(n+1)

    std::string describe() const;
    double approx() const;
};

struct ClassificationResult {
    ClassificationKind kind = ClassificationKind::NotEinstein;
    std::optional<unsigned> ball_dim;          // Ball: n + m
    std::optional<Rational> s_recovered;       // Ball: 1/(n+1)
    std::optional<RescaleRecord> rescale;      // Ball
    std::optional<RationalFunction> witness;   // NotEinstein
};

std::string to_string(ClassificationKind kind);

/// Decides the one-variable identity
///   (A + s t p)^n p^{m-1} (p + t p') = C6 R(t)
/// exactly, as constancy of the canonical quotient L/R in y.
EinsteinVerdict check_einstein(const StructuralData& data, const RadialProfile& profile);

/// True iff P(y) = c y^n with c > 0 and n = base dimension
/// (equivalently R(t) = c (1-t)^{-(n+m+1)}).
bool collapse_check(const RadialProfile& profile);

/// True iff the exponent multiset equals {s, 2s, ..., ns}; the sum
/// identity sum(roots) = s n(n+1)/2 is used as a fast necessary filter.
bool recover_s(const StructuralData& data, const Rational& s);

/// True iff the spec has a single block. When the exponent multiset is
/// {i/(n+1)} this additionally asserts the consequences that must hold
/// (r = 1; and for n >= 2 the block has m_k = n, q_k = 0), throwing
/// std::logic_error on the impossible inconsistent combination.
bool rank_one_check(const DomainSpec& spec, const StructuralData& data);

/// Full pipeline. s = 0 -> ProductCase (identity must hold with
/// C6 = (m+1)^m/m!). s != 0 and identity fails -> NotEinstein with
/// witness. Otherwise Ball: collapse, parameter recovery, and rank-one
/// are asserted as independent cross-checks before reporting
/// ball_dim = n+m, s = 1/(n+1), and the rescaling record.
ClassificationResult classify(const DomainSpec& spec, const HartogsParams& params);

} // namespace hartogs
