"""Orbifold group of a Landau-Ginzburg phase and canonical forms of its action.

For a witness with square block ``R`` the unbroken gauge symmetry is the
finite abelian group ``Gamma = coker(R^T)``.  A Smith decomposition
``D = U R V`` presents it as ``Z_{d_1} x ... x Z_{d_r}``; the generator of
the ``a``-th factor multiplies Landau-Ginzburg coordinate ``j`` by the
root of unity ``zeta_{d_a}`` raised to the exponent ``(U S)_{a j}``.

Two canonical encodings of the action are provided.

``torus_subgroup_lattice`` encodes the literal image of ``Gamma`` in the
diagonal torus, as the pair (exponent, Hermite basis) of the lattice
``L = Z^n + sum_a Z * row_a / d_a``.  Two actions have equal images exactly
when these pairs are equal.

``canonical_action`` canonicalizes the quotient presentation up to monomial
isomorphism: coordinatewise ray rescaling (replace a coordinate by the
power that makes its axis primitive in ``L``) followed by the
lexicographically minimal Hermite form over coordinate permutations.  Two
phases of one model always agree under this form; the image subgroups alone
may differ, for instance a Z8 acting with weights (1,2,2,2) presents the
same quotient as a Z4 with weights (1,1,1,1) after squaring the first
coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import gcd, lcm, prod

from . import linalg
from .errors import DimensionMismatch, RankDeficientGaugeGroup
from .linalg import IntMatrix

__all__ = [
    "OrbifoldData",
    "orbifold_group",
    "effective_factors",
    "canonical_action",
    "actions_equivalent",
    "canonical_torus_action",
    "torus_subgroup_lattice",
]


@dataclass(frozen=True)
class OrbifoldData:
    """Finite abelian quotient data for one phase.

    ``invariant_factors`` ascend with ``d_1 | d_2 | ...``; row ``a`` of
    ``action_exponents`` is reduced into ``[0, d_a)``; ``group_order`` is
    the product of the factors; ``canonical_lattice`` is the output of
    :func:`canonical_action`.
    """

    invariant_factors: tuple
    action_exponents: IntMatrix
    group_order: int
    canonical_lattice: IntMatrix

    @property
    def num_coords(self):
        return self.action_exponents.ncols


def orbifold_group(w):
    """Orbifold data of a witness.  Needs a full-rank charge matrix.

    Raises :class:`RankDeficientGaugeGroup` when ``rank Q < rho``: a
    rank-deficient gauge action has no finite unbroken subgroup in this
    presentation.
    """
    cm = w.charge
    if cm.rank != cm.rho:
        raise RankDeficientGaugeGroup(
            f"rank {cm.rank} < {cm.rho} gauge factors; the orbifold group is undefined"
        )
    snf = linalg.smith_normal_form(w.vev_block)
    factors = snf.diagonal
    raw = snf.u * w.coord_block
    exps = IntMatrix(
        tuple(tuple(e % d for e in row) for row, d in zip(raw.rows, factors)),
        ncols=raw.ncols,
    )
    lattice = canonical_torus_action(exps.rows, factors, exps.ncols)
    return OrbifoldData(
        invariant_factors=factors,
        action_exponents=exps,
        group_order=prod(factors) if factors else 1,
        canonical_lattice=lattice,
    )


def effective_factors(od):
    """Invariant factors with the trivial ones removed."""
    return tuple(d for d in od.invariant_factors if d != 1)


def canonical_action(od):
    """Canonical lattice of the action, invariant under monomial isomorphism."""
    return od.canonical_lattice


def actions_equivalent(a, b):
    """Whether two orbifold actions present the same quotient of ``C^n``.

    Both actions must live on the same number of coordinates; otherwise
    :class:`DimensionMismatch` is raised.
    """
    if a.num_coords != b.num_coords:
        raise DimensionMismatch(
            f"actions on {a.num_coords} and {b.num_coords} coordinates are incomparable"
        )
    return a.canonical_lattice == b.canonical_lattice


# ---------------------------------------------------------------------------
# lattice encodings


def _hnf_contains(hnf, vec):
    """Membership of an integer vector in the row lattice of a full-rank HNF."""
    v = list(vec)
    for row in hnf.rows:
        p = next(j for j, e in enumerate(row) if e)
        if v[p] % row[p]:
            return False
        q = v[p] // row[p]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _stacked_lattice(rows, orders, n, scale_num, col_scale):
    """Hermite basis of ``scale_num * diag(col_scale) * (Z^n + sum Z row_a/d_a)``."""
    gens = []
    for row, d in zip(rows, orders):
        f = scale_num // d
        gens.append(tuple(f * c * e for c, e in zip(col_scale, row)))
    for i in range(n):
        gens.append(tuple(scale_num * col_scale[i] if j == i else 0 for j in range(n)))
    return linalg.hermite_normal_form(IntMatrix(gens, ncols=n))


def torus_subgroup_lattice(rows, orders, num_coords):
    """Canonical pair encoding ``L = Z^n + sum_a Z * row_a / d_a`` exactly.

    Returns ``(m, H)`` where ``m`` is the exponent of ``L / Z^n`` and ``H``
    the Hermite basis of ``m * L``.  Two families generate the same torus
    subgroup exactly when their pairs are equal; no rescaling or coordinate
    permutation is applied.
    """
    rows = [tuple(int(e) for e in row) for row in rows]
    orders = [int(d) for d in orders]
    n = num_coords
    if any(d <= 0 for d in orders) or len(rows) != len(orders):
        raise ValueError("need one positive order per exponent row")
    if any(len(row) != n for row in rows):
        raise ValueError(f"exponent rows must have length {n}")
    if n == 0:
        return 1, IntMatrix((), ncols=0)
    m0 = lcm(*orders) if orders else 1
    h0 = _stacked_lattice(rows, orders, n, m0, [1] * n)
    # exponent of L / Z^n: smallest m with m * L integral
    g = m0
    for row in h0.rows:
        g = gcd(g, *row) if row else g
    m = m0 // g
    if m == m0:
        return m0, h0
    h = IntMatrix(tuple(tuple(e // g for e in row) for row in h0.rows), ncols=n)
    return m, h


def canonical_torus_action(rows, orders, num_coords):
    """Canonical integer lattice of a diagonal finite-group action on ``C^n``.

    The subgroup ``L/Z^n`` of the torus generated by ``row_a / d_a`` is
    normalized in three steps: make every coordinate axis primitive in
    ``L`` by rescaling that coordinate, clear denominators with the
    exponent of the rescaled lattice, then minimize the Hermite basis
    lexicographically over coordinate permutations.  Coordinates can only
    trade places when their projections to the torus have equal order, so
    the permutation search runs inside those classes.
    """
    rows = [tuple(int(e) for e in row) for row in rows]
    orders = [int(d) for d in orders]
    n = num_coords
    if any(d <= 0 for d in orders) or len(rows) != len(orders):
        raise ValueError("need one positive order per exponent row")
    if any(len(row) != n for row in rows):
        raise ValueError(f"exponent rows must have length {n}")
    if n == 0:
        return IntMatrix((), ncols=0)
    m0 = lcm(*orders) if orders else 1
    if m0 == 1:
        return IntMatrix.identity(n)
    h0 = _stacked_lattice(rows, orders, n, m0, [1] * n)
    # largest c with e_j / c in L, coordinate by coordinate
    scale = []
    for j in range(n):
        k = next(
            k
            for k in _divisors(m0)
            if _hnf_contains(h0, tuple(k if i == j else 0 for i in range(n)))
        )
        scale.append(m0 // k)
    h1 = _stacked_lattice(rows, orders, n, m0, scale)
    g = m0
    for row in h1.rows:
        g = gcd(g, *row)
    m = m0 // g
    base = IntMatrix(tuple(tuple(e // g for e in row) for row in h1.rows), ncols=n)
    if m == 1:
        return IntMatrix.identity(n)
    # projection order of each coordinate; only equal orders may swap
    proj = []
    for j in range(n):
        cg = 0
        for row in base.rows:
            cg = gcd(cg, row[j])
        proj.append(m // gcd(m, cg))
    classes = {}
    for j in range(n):
        classes.setdefault(proj[j], []).append(j)
    ordered_classes = [classes[o] for o in sorted(classes, reverse=True)]
    best = None
    for arrangement in product(*(permutations(c) for c in ordered_classes)):
        perm = tuple(j for group in arrangement for j in group)
        permuted = IntMatrix(
            tuple(tuple(row[j] for j in perm) for row in base.rows), ncols=n
        )
        cand = linalg.hermite_normal_form(permuted)
        key = cand.rows
        if best is None or key < best:
            best = key
    return IntMatrix(best, ncols=n)
