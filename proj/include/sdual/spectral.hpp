#pragma once

// Perron data of a primitive unimodular 2x2 matrix, in exact arithmetic.

#include "quad.hpp"
#include "subst.hpp"

namespace sdual {

struct SpectralData {
    Quad lambda;      // Perron eigenvalue
    Quad lambda_conj; // the other root
    Quad alpha;       // (1 - alpha, alpha) is the normalized right eigenvector
    Quad alpha_conj;
    Quad ell;         // (1, ell) is a left eigenvector for lambda
    Quad ell_conj;
};

/// Perron eigenvalue and the left eigenvector (1, ell) of a primitive matrix.
struct Perron {
    Quad lambda;
    Quad ell;
};

inline Perron perron(const IntMat2& M) {
    if (!is_primitive(M)) throw domain_error(ErrorKind::NotPrimitive, "matrix " + to_string(M) + " is not primitive");
    long long t = M.trace();
    long long disc = t * t - 4 * M.det(); // > 0 for a positive power
    Quad lambda = (Quad(t) + Quad::sqrt_of(disc)) / Quad(2);
    return {lambda, (lambda - Quad(M(0, 0))) / Quad(M(1, 0))};
}

inline SpectralData spectral(const IntMat2& M) {
    if (!is_primitive(M)) throw domain_error(ErrorKind::NotPrimitive, "matrix " + to_string(M) + " is not primitive");
    long long d = M.det();
    if (d != 1 && d != -1)
        throw domain_error(ErrorKind::NotUnimodular, "matrix " + to_string(M) + " has determinant " + std::to_string(d));
    Perron pf = perron(M);
    if (pf.lambda.is_rational())
        throw domain_error(ErrorKind::BadArgument, "eigenvalues of " + to_string(M) + " are rational");

    SpectralData s;
    s.lambda = pf.lambda;
    s.lambda_conj = s.lambda.star();
    Quad m11(M(0, 0)), m12(M(0, 1));
    s.alpha = (s.lambda - m11) / (m12 + s.lambda - m11);
    s.alpha_conj = s.alpha.star();
    s.ell = pf.ell;
    s.ell_conj = s.ell.star();
    return s;
}

inline SpectralData spectral(const Substitution& s) { return spectral(matrix(s)); }

/// Frequency of the dual substitution: (alpha' - 1) / (2 alpha' - 1).
inline Quad dual_frequency(const SpectralData& s) {
    Quad den = Quad(2) * s.alpha_conj - Quad(1);
    if (den.is_zero()) throw domain_error(ErrorKind::DivisionByZero, "2*alpha' - 1 vanishes");
    return (s.alpha_conj - Quad(1)) / den;
}

/// Quadratic irrational in (0,1) whose conjugate lies outside [0,1].
inline bool is_sturm_number(const Quad& x) {
    if (x.is_rational()) return false;
    if (x.sign() <= 0 || x >= Quad(1)) return false;
    Quad c = x.star();
    return c.sign() < 0 || c > Quad(1);
}

} // namespace sdual
