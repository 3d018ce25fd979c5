"""The Herbst criterion for affine Landau-Ginzburg phases.

A gauged linear sigma model with gauge group ``(C*)^rho`` acting on ``C^N``
is described by its integer charge matrix ``Q`` (``rho x N``).  The model
has an affine Landau-Ginzburg phase exactly when some ``r`` linearly
independent columns of ``Q`` (``r = rank Q``) contain every other column in
their negative real cone.  Such a choice is a witness: the chosen fields
take vacuum expectation values, the remaining ``n = N - r`` fields become
the Landau-Ginzburg coordinates of an orbifold of ``C^n``.

All arithmetic is exact.  The criterion is evaluated on the canonical
saturated row basis of ``Q`` (see :func:`lgphase.linalg.row_space_reduce`),
which leaves the answer, the row-reduced matrix, and every downstream
invariant unchanged while making rank-deficient input well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import linalg
from .errors import DimensionMismatch, EmptyMatrix, NotNegativeCone, SingularChoice
from .linalg import IntMatrix, RatMatrix

__all__ = [
    "ChargeMatrix",
    "HerbstWitness",
    "make_charge_matrix",
    "candidate_columns",
    "check_witness",
    "enumerate_phases",
    "check_superpotential_invariance",
    "vev_split",
]


@dataclass(frozen=True)
class ChargeMatrix:
    """A validated charge matrix together with its saturated row basis.

    ``matrix`` is the original ``rho x N`` input; ``reduced`` is the
    ``r x N`` Hermite-canonical basis of the saturated row lattice, on which
    the criterion runs.
    """

    matrix: IntMatrix
    rho: int
    num_fields: int
    rank: int
    reduced: IntMatrix

    @cached_property
    def pivot_columns(self):
        """First nonzero column of each reduced row; a lex-first independent set."""
        pivots = []
        for row in self.reduced.rows:
            pivots.append(next(j for j, e in enumerate(row) if e))
        return tuple(pivots)

    @cached_property
    def basis_map(self):
        """Rational ``rho x r`` matrix ``B`` with ``B * reduced == matrix``."""
        piv = self.pivot_columns
        p_inv = linalg.invert_rational(self.reduced.select_columns(piv))
        b = self.matrix.select_columns(piv).to_rational() * p_inv
        assert b * self.reduced.to_rational() == self.matrix.to_rational()
        return b


@dataclass(frozen=True)
class HerbstWitness:
    """A verified witness: an admissible choice of vacuum columns.

    ``chosen`` indexes the ``r`` columns whose fields take vacuum values;
    ``vev_block`` is the square block they form inside ``charge.reduced``;
    ``coord_block`` holds the remaining columns (the Landau-Ginzburg
    coordinates, ascending); ``row_reduced`` is the rational matrix with an
    identity in the chosen columns and nonpositive entries everywhere else.
    """

    charge: ChargeMatrix
    chosen: tuple
    vev_block: IntMatrix
    coord_block: IntMatrix
    row_reduced: RatMatrix

    @property
    def coord_columns(self):
        """Indices of the Landau-Ginzburg coordinate fields, ascending."""
        chosen = set(self.chosen)
        return tuple(j for j in range(self.charge.num_fields) if j not in chosen)


def make_charge_matrix(q):
    """Validate a raw integer matrix and package it as a :class:`ChargeMatrix`.

    Raises :class:`EmptyMatrix` unless ``q`` has at least one row and one
    column.  The zero matrix is legal and has rank 0.
    """
    if not isinstance(q, IntMatrix):
        q = IntMatrix(q)
    if q.nrows == 0 or q.ncols == 0:
        raise EmptyMatrix(f"charge matrix must have at least one row and one column, got {q.shape}")
    reduced = linalg.row_space_reduce(q)
    return ChargeMatrix(
        matrix=q,
        rho=q.nrows,
        num_fields=q.ncols,
        rank=reduced.nrows,
        reduced=reduced,
    )


def candidate_columns(cm):
    """Columns that could possibly be chosen: nonzero and unrepeated.

    A zero column makes the chosen block singular and a repeated column has
    reduced coordinates ``e_i`` relative to its twin, which is not ``<= 0``,
    so neither can appear in any witness.  Filtering them first shrinks the
    subset enumeration without changing its result.
    """
    cols = cm.reduced.columns()
    zero = (0,) * cm.rank
    counts = {}
    for c in cols:
        counts[c] = counts.get(c, 0) + 1
    return tuple(j for j, c in enumerate(cols) if c != zero and counts[c] == 1)


def check_witness(cm, chosen):
    """Verify one choice of columns and return the witness.

    ``chosen`` must list ``r`` distinct column indices.  Raises
    :class:`SingularChoice` when the block is singular and
    :class:`NotNegativeCone` (with the offending row and column) when some
    non-chosen column falls outside the negative cone of the block.
    """
    idx = tuple(sorted(chosen))
    if len(idx) != cm.rank or len(set(idx)) != len(idx):
        raise ValueError(f"need {cm.rank} distinct column indices, got {chosen!r}")
    for j in idx:
        if not 0 <= j < cm.num_fields:
            raise ValueError(f"column index {j} out of range for {cm.num_fields} fields")
    r = cm.rank
    cols = cm.reduced.columns()
    block_rows = [[cols[j][a] for j in idx] for a in range(r)]
    det = linalg._det_rows(block_rows)
    if det == 0:
        raise SingularChoice(f"columns {idx} are linearly dependent")
    rest = tuple(j for j in range(cm.num_fields) if j not in set(idx))
    # Cramer sign test: (R^-1 c)_a <= 0  iff  det(R with column a -> c) * det <= 0.
    for j in rest:
        c = cols[j]
        for a in range(r):
            patched = [row[:a] + [c[i]] + row[a + 1 :] for i, row in enumerate(block_rows)]
            if linalg._det_rows(patched) * det > 0:
                raise NotNegativeCone(a, j)
    vev_block = cm.reduced.select_columns(idx)
    row_reduced = linalg.invert_rational(vev_block) * cm.reduced.to_rational()
    coord_block = cm.reduced.select_columns(rest)
    return HerbstWitness(
        charge=cm,
        chosen=idx,
        vev_block=vev_block,
        coord_block=coord_block,
        row_reduced=row_reduced,
    )


def enumerate_phases(cm, prune=True):
    """All witnesses, as a list ordered by lexicographic chosen set.

    With ``prune`` (the default) only subsets of :func:`candidate_columns`
    are tried; without it every ``r``-subset of columns is tested.  The two
    settings return identical lists.
    """
    pool = candidate_columns(cm) if prune else tuple(range(cm.num_fields))
    found = []
    for combo in combinations(pool, cm.rank):
        try:
            found.append(check_witness(cm, combo))
        except (SingularChoice, NotNegativeCone):
            continue
    return found


def check_superpotential_invariance(cm, monomials):
    """True when every monomial is gauge invariant: ``Q * m == 0``.

    Each monomial is a length-``N`` exponent vector with nonnegative
    entries; the check uses the original charges, not the reduced basis.
    """
    rows = cm.matrix.rows
    for m in monomials:
        vec = tuple(int(e) for e in m)
        if len(vec) != cm.num_fields:
            raise DimensionMismatch(
                f"monomial length {len(vec)} does not match {cm.num_fields} fields"
            )
        if any(e < 0 for e in vec):
            raise ValueError(f"monomial has a negative exponent: {vec}")
        for row in rows:
            if sum(a * b for a, b in zip(row, vec)) != 0:
                return False
    return True


def vev_split(w):
    """Partition of the field indices into (vacuum fields, coordinate fields)."""
    return (w.chosen, w.coord_columns)
