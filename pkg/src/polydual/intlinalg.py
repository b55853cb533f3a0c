"""Exact integer linear algebra on 3- and 4-vectors and 3x3 matrices.

Everything here runs on Python integers (arbitrary precision) or
``fractions.Fraction``; no floats, no rounding, no silent overflow.
Vectors are plain tuples and matrices are tuples of row tuples, so all
values are hashable and safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec3 = tuple[int, int, int]
Vec4 = tuple[int, int, int, int]
Mat3 = tuple[Vec3, Vec3, Vec3]

IDENTITY3: Mat3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class NotInSpan(ValueError):
    """Vector lies outside the rational span of the basis."""


class NotIntegral(ValueError):
    """Vector is in the rational span but has non-integer coordinates."""


class BasisNotInKernel(ValueError):
    """A basis vector does not satisfy a . v = 0 for the weight vector a."""


def gcd_all(v) -> int:
    """Greatest common divisor of the absolute values of the components.

    Returns 0 exactly when v is the zero vector.
    """
    return gcd(*(abs(c) for c in v))


def primitive(v):
    """Divide a nonzero integer vector by the gcd of its components."""
    g = gcd_all(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(c // g for c in v)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def neg(v):
    return tuple(-a for a in v)


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(m) -> int:
    """Exact determinant of a 3x3 matrix given as rows."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def transpose3(m) -> Mat3:
    return tuple(zip(*m))


def mat_mul(a, b) -> Mat3:
    bt = transpose3(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_vec(m, v):
    """Column convention: m applied to column vector v."""
    return tuple(dot(row, v) for row in m)


def vec_mat(v, m):
    """Row convention: row vector v times m."""
    return tuple(dot(v, col) for col in zip(*m))


def mat_inverse(m):
    """Exact inverse of a 3x3 integer matrix, as rows of Fractions."""
    d = det3(m)
    if d == 0:
        raise ValueError("matrix is singular")
    (a, b, c), (e, f, g), (h, i, j) = m
    cof = (
        (f * j - g * i, c * i - b * j, b * g - c * f),
        (g * h - e * j, a * j - c * h, c * e - a * g),
        (e * i - f * h, b * h - a * i, a * f - b * e),
    )
    return tuple(tuple(Fraction(x, d) for x in row) for row in cof)


def is_unimodular(m) -> bool:
    return abs(det3(m)) == 1


def _solve_exact(columns, v):
    """Solve sum_i c_i * columns[i] = v exactly over the rationals.

    `columns` is a sequence of k same-length integer vectors; `v` has the
    same length.  Returns a tuple of k Fractions.  Raises NotInSpan when
    the system is inconsistent and ValueError when the columns are
    linearly dependent.
    """
    k = len(columns)
    n = len(v)
    aug = [[Fraction(col[r]) for col in columns] + [Fraction(v[r])] for r in range(n)]
    pivot_rows = []
    row = 0
    for col in range(k):
        pr = next((r for r in range(row, n) if aug[r][col] != 0), None)
        if pr is None:
            raise ValueError("basis vectors are linearly dependent")
        aug[row], aug[pr] = aug[pr], aug[row]
        piv = aug[row][col]
        aug[row] = [x / piv for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivot_rows.append(row)
        row += 1
    for r in range(row, n):
        if aug[r][k] != 0:
            raise NotInSpan(f"vector {v} is outside the rational span of the basis")
    return tuple(aug[r][k] for r in pivot_rows)


def coords_in_basis(v: Vec4, basis) -> Vec3:
    """Integer coordinates of v in a basis of three 4-vectors.

    Solves c1*e1 + c2*e2 + c3*e3 = v by exact elimination.  Raises
    NotInSpan if v is outside the rational span and NotIntegral if the
    unique rational solution is not integral (the basis then fails to
    generate the sublattice point).
    """
    coeffs = _solve_exact(basis, v)
    if any(c.denominator != 1 for c in coeffs):
        raise NotIntegral(
            f"vector {v} has non-integer coordinates {tuple(map(str, coeffs))} in the basis"
        )
    return tuple(int(c) for c in coeffs)


def kernel_basis(weights: Vec4):
    """A lattice basis of {v in Z^4 : weights . v = 0}.

    Column-reduces the row vector `weights` to (g, 0, 0, 0) by unimodular
    column operations; the last three transformed columns then generate
    the kernel lattice.
    """
    if all(w == 0 for w in weights):
        raise ValueError("weight vector must be nonzero")
    vals = list(weights)
    cols = [[1 if i == j else 0 for i in range(4)] for j in range(4)]
    for j in range(1, 4):
        while vals[j] != 0:
            q = vals[0] // vals[j]
            vals[0] -= q * vals[j]
            cols[0] = [a - q * b for a, b in zip(cols[0], cols[j])]
            vals[0], vals[j] = vals[j], vals[0]
            cols[0], cols[j] = cols[j], cols[0]
    return [tuple(cols[j]) for j in range(1, 4)]


def sublattice_index(basis, weights: Vec4) -> int:
    """Index of span(basis) inside the full kernel lattice of the weights.

    1 means the three vectors form a genuine lattice basis of
    {v : weights . v = 0}.
    """
    for e in basis:
        if dot(weights, e) != 0:
            raise BasisNotInKernel(f"basis vector {e} is not orthogonal to weights {weights}")
    ker = kernel_basis(weights)
    rows = []
    for e in basis:
        coeffs = _solve_exact(ker, e)
        assert all(c.denominator == 1 for c in coeffs), "kernel coordinates must be integral"
        rows.append(tuple(int(c) for c in coeffs))
    d = det3(rows)
    if d == 0:
        raise ValueError("basis vectors are linearly dependent")
    return abs(d)
