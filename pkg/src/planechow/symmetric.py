"""Symmetric polynomials in the Chern roots t1, t2, t3.

Conversion into the Chern classes c1, c2, c3 (the elementary symmetric
polynomials of the roots) follows the classical leading-term reduction
behind the fundamental theorem of symmetric polynomials, so it terminates
on any symmetric input and is exact.  Weight-3 symmetric classes also admit
a decomposition over the monomial-symmetric basis, which is how the
integer tables later in the pipeline are produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .mpoly import MPoly, T1, T2, T3, VAR_INDEX, monomial_weight
from .scalars import Scalar

T_VARS = ("t1", "t2", "t3")
_T = tuple(VAR_INDEX[n] for n in T_VARS)

#: Elementary symmetric polynomials of the roots.
E1 = T1 + T2 + T3
E2 = T1 * T2 + T1 * T3 + T2 * T3
E3 = T1 * T2 * T3


def _permuted(p: MPoly, perm: tuple[int, int, int]) -> MPoly:
    out = {}
    for exp, coeff in p.terms.items():
        e = list(exp)
        e[_T[0]], e[_T[1]], e[_T[2]] = (
            exp[_T[perm[0]]],
            exp[_T[perm[1]]],
            exp[_T[perm[2]]],
        )
        out[tuple(e)] = coeff
    return MPoly(out)


def is_symmetric(p: MPoly) -> bool:
    """True iff p is invariant under all permutations of t1, t2, t3."""
    if not p.uses_only(T_VARS):
        raise ValueError(f"expected a polynomial in t1, t2, t3: {p}")
    return all(_permuted(p, perm) == p for perm in permutations((0, 1, 2)))


def sym_to_chern(p: MPoly) -> MPoly:
    """Rewrite a symmetric polynomial in the roots as one in c1, c2, c3.

    Repeatedly strips the lex-leading monomial t1^a t2^b t3^c (a >= b >= c)
    by subtracting coeff * e1^(a-b) e2^(b-c) e3^c, recording the same
    monomial in the c-variables.
    """
    if not is_symmetric(p):
        raise ValueError(f"not symmetric in t1, t2, t3: {p}")
    out: dict = {}
    work = p
    while work:
        exp = max(work.terms, key=lambda e: tuple(e[i] for i in _T))
        a, b, c = (exp[i] for i in _T)
        if not a >= b >= c:
            raise AssertionError(f"leading exponent not sorted: {exp}")
        coeff = work.terms[exp]
        out[(a - b, b - c, c, 0, 0, 0, 0)] = coeff
        work = work - (E1 ** (a - b) * E2 ** (b - c) * E3**c).scale(coeff)
    return MPoly(out)


@dataclass(frozen=True)
class Weight3Decomposition:
    """Coefficients of a weight-3 symmetric class over the monomial basis.

    The basis elements are the monomial-symmetric polynomials for the
    partitions (3), (1,1,1) and (2,1): sum of cubes, the product t1*t2*t3,
    and the sum of all t_i^2 t_j with i != j.
    """

    m3: Scalar
    m111: Scalar
    m21: Scalar

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.m3, self.m111, self.m21)


def weight3_basis() -> tuple[MPoly, MPoly, MPoly]:
    """The three monomial-symmetric polynomials of weight 3."""
    m3 = T1**3 + T2**3 + T3**3
    m111 = T1 * T2 * T3
    m21 = (
        T1**2 * T2
        + T1**2 * T3
        + T2**2 * T1
        + T2**2 * T3
        + T3**2 * T1
        + T3**2 * T2
    )
    return m3, m111, m21


def decompose_weight3(p: MPoly) -> Weight3Decomposition:
    """Read off the monomial-symmetric coordinates of a weight-3 class."""
    if not is_symmetric(p):
        raise ValueError(f"not symmetric in t1, t2, t3: {p}")
    if p and {monomial_weight(e) for e in p.terms} != {3}:
        raise ValueError(f"not homogeneous of weight 3: {p}")
    m3 = p.terms.get((0, 0, 0, 0, 3, 0, 0), 0)
    m111 = p.terms.get((0, 0, 0, 0, 1, 1, 1), 0)
    m21 = p.terms.get((0, 0, 0, 0, 2, 1, 0), 0)
    return Weight3Decomposition(m3, m111, m21)


def chern_roots_product(
    forms: list[tuple[Scalar, Scalar, Scalar]], max_weight: int
) -> MPoly:
    """Truncated product of factors (1 - x*t1 - y*t2 - z*t3).

    Every monomial of weight above max_weight is dropped as the product is
    accumulated, so long factor lists stay cheap.
    """
    acc = MPoly.const(1)
    for x, y, z in forms:
        factor = (
            MPoly.const(1) - T1.scale(x) - T2.scale(y) - T3.scale(z)
        )
        acc = acc.mul_truncated(factor, max_weight)
    return acc
