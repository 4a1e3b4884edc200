"""Ready-made contexts and operator families used by the test corpus and the
command-line examples.

The centerpiece is the truncated polynomial family on Q[t]/(t^N) with
P_k(t^n) = t^(k+n+1)/(k+n+1) when k+n+1 < N and 0 otherwise.  Truncation is
sound: once any side of the matching identity reaches total degree >= N, every
monomial appearing on both sides has degree >= N as well, so both sides vanish
in the quotient.
"""

from __future__ import annotations

from fractions import Fraction

from matchalg.algebra import Algebra, Bimodule, LinearMap, adjoint_bimodule
from matchalg.linalg import DenseMatrix, DenseTensor, ONE
from matchalg.operators import LabelSet, OperatorFamily


def truncated_polynomial_algebra(n: int) -> Algebra:
    """Q[t]/(t^n) on the monomial basis 1, t, ..., t^(n-1)."""
    mult = DenseTensor((n, n, n))
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mult[i, j, i + j] = ONE
    names = ["1"] + [f"t^{i}" if i > 1 else "t" for i in range(1, n)]
    return Algebra(n, names, mult)


def truncated_polynomial_family(n: int = 6, weights=(0, 1)) -> OperatorFamily:
    """The matching family {P_k} on Q[t]/(t^n) with the adjoint bimodule."""
    algebra = truncated_polynomial_algebra(n)
    module = adjoint_bimodule(algebra)
    maps = {}
    for k in weights:
        mat = DenseMatrix(n, n)
        for power in range(n):
            target = k + power + 1
            if target < n:
                mat[target, power] = Fraction(1, target)
        maps[str(k)] = LinearMap(n, n, mat)
    return OperatorFamily(LabelSet([str(k) for k in weights]), module, maps)


def zero_algebra(dim: int) -> Algebra:
    return Algebra(dim, [f"e{i}" for i in range(dim)], DenseTensor((dim, dim, dim)))


def zero_bimodule(algebra: Algebra, dim: int) -> Bimodule:
    left = DenseTensor((algebra.dim, dim, dim))
    right = DenseTensor((dim, algebra.dim, dim))
    return Bimodule(algebra, dim, left, right)


def zero_context(adim: int, mdim: int, labels) -> OperatorFamily:
    """Zero multiplication, zero actions, zero operators: every identity's
    terms vanish, and all differentials are zero maps."""
    algebra = zero_algebra(adim)
    module = zero_bimodule(algebra, mdim)
    maps = {
        str(x): LinearMap.zero(mdim, adim) for x in labels
    }
    return OperatorFamily(LabelSet([str(x) for x in labels]), module, maps)


def scalar_algebra() -> Algebra:
    """Q with 1.1 = 1."""
    mult = DenseTensor((1, 1, 1))
    mult[0, 0, 0] = ONE
    return Algebra(1, ["e"], mult)


def left_regular_line(labels, weights) -> OperatorFamily:
    """Dimension-1 family: A = Q (unital), M = Q with left action = product
    and right action = 0; every choice of scalars {p_x} satisfies the matching
    identity."""
    algebra = scalar_algebra()
    left = DenseTensor((1, 1, 1))
    left[0, 0, 0] = ONE
    right = DenseTensor((1, 1, 1))
    module = Bimodule(algebra, 1, left, right, basis_names=["u"])
    maps = {}
    for x, w in zip(labels, weights):
        mat = DenseMatrix(1, 1)
        mat[0, 0] = Fraction(w)
        maps[str(x)] = LinearMap(1, 1, mat)
    return OperatorFamily(LabelSet([str(x) for x in labels]), module, maps)
