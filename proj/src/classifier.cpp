#include "hartogs/classifier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hartogs {

std::string to_string(ClassificationKind kind) {
    switch (kind) {
    case ClassificationKind::Ball: return "Ball";
    case ClassificationKind::ProductCase: return "ProductCase";
    case ClassificationKind::NotEinstein: return "NotEinstein";
    }
    return "?";
}

std::string RescaleRecord::describe() const {
    std::ostringstream out;
    out << "(w,eta) -> (w, C^(-1/2) eta), C = (" << n_factorial.get_str() << "/pi^" << n
        << ")^(" << exponent.to_string() << ")";
    return out.str();
}

double RescaleRecord::approx() const {
    return std::pow(n_factorial.get_d() / std::pow(std::numbers::pi, static_cast<double>(n)),
                    exponent.to_double());
}

EinsteinVerdict check_einstein(const StructuralData& data, const RadialProfile& profile) {
    if (data.dim != profile.base_dim())
        throw std::logic_error("check_einstein: profile does not match structural data");

    const RationalFunction lhs = det_formula(profile);
    const RationalFunction rhs(Polynomial::monomial(profile.m + 1) * profile.p_poly);
    const RationalFunction quotient = lhs / rhs;

    EinsteinVerdict verdict;
    if (quotient.is_constant()) {
        verdict.is_einstein = true;
        verdict.c6 = quotient.constant_value();
        // Forced value at t = 0: C6 R(0) = A^n p(0)^m.
        const Rational expected = pow(profile.big_a, data.dim) *
                                  pow(p_at_zero(profile), profile.m) /
                                  profile.p_poly(Rational(1));
        if (*verdict.c6 != expected || !(*verdict.c6 > Rational(0)))
            throw std::logic_error("check_einstein: constant violates C6 R(0) = A^n p(0)^m");
    } else {
        verdict.is_einstein = false;
        verdict.residual_witness =
            quotient - RationalFunction(quotient(Rational(1)));
    }
    return verdict;
}

bool collapse_check(const RadialProfile& profile) {
    const int n = static_cast<int>(profile.base_dim());
    if (profile.p_poly.degree() != n)
        return false;
    for (int j = 0; j < n; ++j)
        if (!profile.p_poly.coeff(j).is_zero())
            return false;
    return profile.p_poly.leading() > Rational(0);
}

namespace {

RationalMultiset arithmetic_multiset(const Rational& s, unsigned n) {
    std::vector<Rational> elems;
    elems.reserve(n);
    for (unsigned j = 1; j <= n; ++j)
        elems.push_back(Rational(static_cast<long>(j)) * s);
    return RationalMultiset(std::move(elems));
}

} // namespace

bool recover_s(const StructuralData& data, const Rational& s) {
    const unsigned n = data.dim;
    const Rational expected_sum =
        s * Rational(static_cast<long>(n) * (static_cast<long>(n) + 1), 2);
    if (data.roots.sum() != expected_sum)
        return false;
    return multiset_equal(data.roots, arithmetic_multiset(s, n));
}

bool rank_one_check(const DomainSpec& spec, const StructuralData& data) {
    const unsigned n = data.dim;
    const bool rank_one = spec.rank() == 1;
    const bool ball_roots =
        multiset_equal(data.roots, arithmetic_multiset(Rational(1, static_cast<long>(n) + 1), n));
    if (ball_roots) {
        if (!rank_one)
            throw std::logic_error("rank_one_check: exponent multiset {i/(n+1)} with rank > 1 "
                                   "is impossible");
        const BlockData& blk = spec.blocks.front();
        if (n >= 2 && (blk.size() != n || blk.q != 0))
            throw std::logic_error("rank_one_check: ball exponents with m_k != n or q_k != 0");
    }
    return rank_one;
}

ClassificationResult classify(const DomainSpec& spec, const HartogsParams& params) {
    const StructuralData data = structural_data(spec);
    const RadialProfile profile = build_profile(data, params);
    const EinsteinVerdict verdict = check_einstein(data, profile);

    ClassificationResult result;
    if (params.s.is_zero()) {
        // Product of the base with a ball; Einstein with C6 = (m+1)^m/m!.
        const Rational expected =
            Rational(pow(Rational(static_cast<long>(params.m) + 1), params.m)) /
            Rational(factorial(params.m));
        if (!verdict.is_einstein || *verdict.c6 != expected)
            throw std::logic_error("classify: s = 0 product case failed the identity");
        result.kind = ClassificationKind::ProductCase;
        return result;
    }

    if (!verdict.is_einstein) {
        result.kind = ClassificationKind::NotEinstein;
        result.witness = verdict.residual_witness;
        return result;
    }

    // The Einstein identity holds with s != 0; the collapse of R, the
    // recovery of s = 1/(n+1), and the rank-one property each follow
    // and are asserted independently of the verdict.
    const unsigned n = data.dim;
    const Rational critical(1, static_cast<long>(n) + 1);
    if (!collapse_check(profile))
        throw std::logic_error("classify: Einstein verdict without radial collapse");
    if (!recover_s(data, params.s) || params.s != critical)
        throw std::logic_error("classify: Einstein verdict with s != 1/(n+1)");
    if (!rank_one_check(spec, data))
        throw std::logic_error("classify: Einstein verdict on a multi-block spec");

    result.kind = ClassificationKind::Ball;
    result.ball_dim = n + params.m;
    result.s_recovered = critical;
    result.rescale = RescaleRecord{n, params.m, factorial(n),
                                   Rational(-1, static_cast<long>(n) + 1)};
    return result;
}

} // namespace hartogs
