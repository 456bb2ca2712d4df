#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartogs/multiset.hpp"
#include "hartogs/polynomial.hpp"

namespace hartogs {

/// One block of structural invariants (p, q, b) of a bounded homogeneous
/// domain. Contributes 1+p+b coordinates to the ambient dimension.
struct BlockData {
    unsigned p = 0;
    unsigned q = 0;
    unsigned b = 0;

    unsigned size() const { return 1 + p + b; }          // m_k
    unsigned weight_denom() const { return 2 + p + q + b; } // D_k = m_k + 1 + q_k
};

/// A base domain given purely by its block invariants. The formulas
/// downstream are functions of the block data alone; whether a given
/// block list is realized by an actual homogeneous domain is the
/// caller's responsibility.
struct DomainSpec {
    std::vector<BlockData> blocks;
    std::string label;

    unsigned rank() const { return static_cast<unsigned>(blocks.size()); }
    unsigned dimension() const {
        unsigned n = 0;
        for (const auto& blk : blocks)
            n += blk.size();
        return n;
    }
};

/// Derived invariants of a spec: the exponent multiset {a_{k,i}}, the
/// admissibility bound C_Omega = min a_{k,i}, the dimension n, and the
/// structural polynomial F_Omega(sigma) = prod (1 + sigma/a_{k,i}).
struct StructuralData {
    RationalMultiset roots;
    Rational c_omega;
    unsigned dim = 0;
    Polynomial f_omega;
};

/// Exponents a_{k,i} = (2i+q) / (2(2+p+q+b)) for i = 1..1+p+b,
/// strictly increasing in i. Exact for odd q as well.
std::vector<Rational> block_roots(const BlockData& block);

StructuralData structural_data(const DomainSpec& spec);

/// Admissible parameter range: s > -C_Omega.
bool validate_s(const StructuralData& data, const Rational& s);

/// Canonical single-block data of the unit ball B^n: (p,q,b) = (n-1,0,0),
/// with exponents {i/(n+1) : i = 1..n}. Throws for n = 0.
DomainSpec ball_spec(unsigned n);

/// n disc blocks (0,0,0).
DomainSpec polydisc_spec(unsigned n);

/// Resolves "ball:n" / "polydisc:n"; nullopt if the name is not a preset.
std::optional<DomainSpec> preset_spec(const std::string& name);

/// Human-readable list of available preset names.
std::vector<std::string> preset_catalog();

/// Loads a JSON spec file: {"label": "...", "blocks": [{"p":..,"q":..,"b":..}, ...]}.
DomainSpec load_spec_file(const std::string& path);

/// A preset name if it matches, otherwise a spec file path.
DomainSpec resolve_spec(const std::string& source);

std::string spec_to_json(const DomainSpec& spec);

} // namespace hartogs
