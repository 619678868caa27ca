#ifndef HVF_MULTIPLIER_HPP
#define HVF_MULTIPLIER_HPP

#include "hvf/matrix.hpp"
#include "hvf/numfield.hpp"

namespace hvf
{

// exp(varpi_mu A_r) over Q(varpi_mu).
SquareMatrix<FieldElement> epsilon_T(int mu, int r);

// Antidiagonal with entry (i, r-i) = (-1)^(r-i).
SquareMatrix<Rational> epsilon_S(int r);

// Matrix M with F(Sz)/z^(w-r) = M F(z) for the hauptbuch vector form;
// this is epsilon_S(r)^{-1} = (-1)^r epsilon_S(r).
SquareMatrix<Rational> vector_form_S_multiplier(int r);

struct MultiplierPair {
    int mu;
    int r;
    SquareMatrix<FieldElement> epsT;
    SquareMatrix<Rational> epsS;
};

MultiplierPair multiplier_pair(int mu, int r);

SquareMatrix<FieldElement> to_field(int mu, const SquareMatrix<Rational> &m);

// Sym^r(eps_1(T)) == epsilon_T(mu, r) and Sym^r(eps_1(S)) == epsilon_S(r).
bool verify_sym_theorem(int mu, int r);

// epsilon_S(r)^2 == (-1)^r I and (epsilon_S(r)^{-1} epsilon_T(mu, r))^mu == (-1)^r I.
bool verify_presentation(int mu, int r);

} // namespace hvf

#endif
