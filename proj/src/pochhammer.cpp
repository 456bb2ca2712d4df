#include "hartogs/pochhammer.hpp"

namespace hartogs {

Polynomial pochhammer_basis(unsigned j) {
    Polynomial p{Rational(1)};
    for (unsigned i = 1; i <= j; ++i)
        p *= Polynomial({Rational(static_cast<long>(i)), Rational(1)});
    return p;
}

std::vector<Rational> to_pochhammer(const Polynomial& g) {
    if (g.is_zero())
        return {};
    const std::size_t d = static_cast<std::size_t>(g.degree());
    std::vector<Rational> c(d + 1, Rational(0));
    Polynomial rem = g;
    for (std::size_t j = d + 1; j-- > 0;) {
        c[j] = rem.coeff(j);
        if (!c[j].is_zero())
            rem -= pochhammer_basis(static_cast<unsigned>(j)) * c[j];
    }
    return c;
}

Polynomial from_pochhammer(const std::vector<Rational>& c) {
    Polynomial g;
    for (std::size_t j = 0; j < c.size(); ++j)
        g += pochhammer_basis(static_cast<unsigned>(j)) * c[j];
    return g;
}

} // namespace hartogs
