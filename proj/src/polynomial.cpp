#include "permres/polynomial.hpp"

namespace permres {

BasicPolynomial<PrimeField> reduce_mod(const Polynomial& f, const PrimeField& field) {
    BasicPolynomial<PrimeField> r(field);
    for (const auto& [m, c] : f.terms()) r.add_term(m, field.from_rational(c));
    return r;
}

} // namespace permres
