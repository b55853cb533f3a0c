"""Weighted-homogeneous polynomials and their Newton point sets.

Polynomials over the variables W, X, Y, Z are parsed from strings,
checked for quasihomogeneity against a weight system, and mapped into
the rank-3 sublattice {v : a . v = 0} of Z^4 where Newton polytopes
live.  Coefficients never matter here: only the monomial support does.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .intlinalg import Vec3, Vec4, coords_in_basis, dot, gcd_all, sub, sublattice_index

VARIABLES = "WXYZ"
_PRIMES = {"'", "\N{PRIME}"}


class PolynomialSyntaxError(ValueError):
    """Raised on malformed polynomial strings; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedDegrees(ValueError):
    """Monomials do not share a single weighted degree."""

    def __init__(self, degrees):
        self.degrees = dict(degrees)
        listing = ", ".join(f"{m} has degree {d}" for m, d in degrees)
        super().__init__(f"monomials of mixed weighted degree: {listing}")


class DegreeNotD(ValueError):
    """Homogeneous, but of weighted degree different from d = sum of weights."""

    def __init__(self, degree: int, expected: int):
        self.degree = degree
        self.expected = expected
        super().__init__(f"weighted degree is {degree}, expected d = {expected}")


@dataclass(frozen=True)
class WeightSystem:
    """Weights (a0, a1, a2, a3) of W, X, Y, Z; the degree d is their sum."""

    a: Vec4

    def __post_init__(self):
        if len(self.a) != 4 or not all(isinstance(w, int) and w >= 1 for w in self.a):
            raise ValueError(f"weights must be four positive integers, got {self.a!r}")
        if gcd_all(self.a) != 1:
            warnings.warn(
                f"weight quadruple {self.a} has gcd {gcd_all(self.a)} > 1; "
                "results describe the unreduced quotient",
                stacklevel=2,
            )

    @property
    def d(self) -> int:
        return sum(self.a)

    def degree(self, exponents: Vec4) -> int:
        return dot(self.a, exponents)


@dataclass(frozen=True)
class Polynomial:
    """Monomial support of a polynomial: distinct exponent vectors for W,X,Y,Z."""

    monomials: tuple[Vec4, ...]

    def __post_init__(self):
        if not self.monomials:
            raise ValueError("polynomial must have at least one monomial")
        if len(set(self.monomials)) != len(self.monomials):
            raise ValueError("monomials must be pairwise distinct")
        for m in self.monomials:
            if len(m) != 4 or any(not isinstance(e, int) or e < 0 for e in m):
                raise ValueError(f"exponent vector {m!r} must be four nonnegative integers")

    def pretty(self) -> str:
        terms = []
        for m in self.monomials:
            factors = [
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARIABLES, m) if e > 0
            ]
            terms.append("".join(factors) if factors else "1")
        return " + ".join(terms)


@dataclass(frozen=True)
class AmbientBasis:
    """Three vectors of Z^4 spanning the rank-3 lattice {v : a . v = 0}."""

    e1: Vec4
    e2: Vec4
    e3: Vec4

    def rows(self) -> tuple[Vec4, Vec4, Vec4]:
        return (self.e1, self.e2, self.e3)

    def validate(self, weights: WeightSystem) -> None:
        """Check orthogonality to the weights and that the span has index 1."""
        index = sublattice_index(self.rows(), weights.a)
        if index != 1:
            raise ValueError(
                f"basis spans a sublattice of index {index}, not the full lattice"
            )


def parse_polynomial(text: str) -> Polynomial:
    """Parse a sum of monomials in W, X, Y, Z.

    Terms are separated by '+'.  A term is an optional integer
    coefficient (discarded) followed by factors; a factor is a variable,
    optionally primed (primes are stripped), optionally followed by '^'
    and a positive exponent.  '*' between factors and all whitespace are
    ignored.  Repeated variables within a term have their exponents
    summed.
    """
    monomials: list[Vec4] = []
    i, n = 0, len(text)

    def skip_ws():
        nonlocal i
        while i < n and (text[i].isspace() or text[i] == "*"):
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        return int(text[start:i])

    while True:
        exps = [0, 0, 0, 0]
        saw_factor = False
        skip_ws()
        if i < n and text[i].isdigit():
            read_int()  # coefficient, discarded
            saw_factor = True
        while True:
            skip_ws()
            if i >= n or text[i] == "+":
                break
            ch = text[i]
            if ch not in VARIABLES:
                if ch.isalpha():
                    raise PolynomialSyntaxError(f"unknown variable {ch!r}", i)
                if ch == "^":
                    raise PolynomialSyntaxError("'^' must follow a variable", i)
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
            var = VARIABLES.index(ch)
            i += 1
            while i < n and text[i] in _PRIMES:
                i += 1
            exp = 1
            if i < n and text[i] == "^":
                i += 1
                neg_at = i
                if i < n and text[i] == "-":
                    raise PolynomialSyntaxError("negative exponent", neg_at)
                if i >= n or not text[i].isdigit():
                    raise PolynomialSyntaxError("'^' must be followed by an integer", i)
                exp = read_int()
                if exp == 0:
                    raise PolynomialSyntaxError("zero exponent", neg_at)
            exps[var] += exp
            saw_factor = True
        if not saw_factor:
            raise PolynomialSyntaxError("empty term", i)
        m = tuple(exps)
        if m not in monomials:
            monomials.append(m)
        if i >= n:
            break
        i += 1  # consume '+'
    return Polynomial(tuple(monomials))


def check_quasihomogeneous(p: Polynomial, w: WeightSystem) -> int:
    """Return d when every monomial has weighted degree d = sum of weights."""
    degrees = [(m, w.degree(m)) for m in p.monomials]
    distinct = {d for _, d in degrees}
    if len(distinct) > 1:
        raise MixedDegrees(degrees)
    (degree,) = distinct
    if degree != w.d:
        raise DegreeNotD(degree, w.d)
    return degree


def monomial_to_point(m: Vec4, w: WeightSystem, b: AmbientBasis) -> Vec3:
    """Lattice coordinates of a degree-d monomial in the ambient basis.

    The exponent vector is shifted by (1,1,1,1) -- the anticanonical
    monomial WXYZ lands at the origin -- which places every degree-d
    monomial in the sublattice {v : a . v = 0} spanned by the basis.
    """
    if w.degree(m) != w.d:
        raise DegreeNotD(w.degree(m), w.d)
    return coords_in_basis(sub(m, (1, 1, 1, 1)), b.rows())


def newton_points(p: Polynomial, w: WeightSystem, b: AmbientBasis) -> set[Vec3]:
    """Images of all monomials of a quasihomogeneous polynomial.

    The Newton polytope is the convex hull of this set.
    """
    check_quasihomogeneous(p, w)
    return {monomial_to_point(m, w, b) for m in p.monomials}
