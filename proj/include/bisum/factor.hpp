// Exact factorization over Q: squarefree decomposition, univariate
// factorization (Zassenhaus), bivariate factorization by Kronecker
// substitution. Exponential in the worst case, adequate at desk scale.
#pragma once

#include <utility>
#include <vector>

#include "bisum/bpoly.hpp"

namespace bisum {

struct Factorization {
    Rat unit;
    std::vector<std::pair<BPoly, int>> factors;  // irreducible, integer-primitive,
                                                 // positive leading coefficient,
                                                 // sorted, pairwise non-associate
    BPoly value() const {
        BPoly v(unit);
        for (const auto& [f, e] : factors) v *= f.pow(static_cast<unsigned>(e));
        return v;
    }
};

struct UFactorization {
    Rat unit;
    std::vector<std::pair<UPoly, int>> factors;
    UPoly value() const {
        UPoly v(unit);
        for (const auto& [f, e] : factors) v *= f.pow(static_cast<unsigned>(e));
        return v;
    }
};

// Yun's algorithm; parts monic, pairwise coprime, squarefree;
// p = lc * prod part^mult
std::vector<std::pair<UPoly, int>> squarefree_decomp(const UPoly& p);

UFactorization factor_upoly(const UPoly& p);
Factorization factor_bpoly(const BPoly& p);

// Kronecker substitution y -> x^N and its positional inverse
UPoly kronecker_image(const BPoly& p, int n);
BPoly kronecker_invert(const UPoly& u, int n);

}  // namespace bisum
