"""Residual group data: pinned models, oracles, and presentation invariance."""

import random

import pytest

from conftest import cokernel_order_bruteforce, rand_matrix, random_nonsingular
from lgphase import (
    DimensionMismatch,
    IntMatrix,
    RankDeficientGaugeGroup,
    actions_equivalent,
    canonical_action,
    canonical_torus_action,
    check_witness,
    determinant,
    effective_factors,
    enumerate_phases,
    make_charge_matrix,
    orbifold_group,
    torus_subgroup_lattice,
)

TWOLG = [[0, 1, 1, 1, 1, -4], [1, 0, 0, 0, -2, 0]]
RWP4 = [[0, 0, 1, 1, 1, 1, -4], [1, 1, 0, 0, 0, -2, 0]]


def witness(rows, chosen):
    return check_witness(make_charge_matrix(rows), chosen)


class TestOrbifoldGroup:
    def test_projective_line(self):
        od = orbifold_group(witness([[1, 1, -2]], (2,)))
        assert od.invariant_factors == (2,)
        assert od.action_exponents == IntMatrix([[1, 1]])
        assert od.group_order == 2
        assert od.num_coords == 2

    def test_twolg_small_phase(self):
        od = orbifold_group(witness(TWOLG, (0, 5)))
        assert od.invariant_factors == (1, 4)
        assert od.action_exponents == IntMatrix([[0, 0, 0, 0], [3, 3, 3, 3]])
        assert od.group_order == 4
        assert effective_factors(od) == (4,)

    def test_twolg_large_phase(self):
        od = orbifold_group(witness(TWOLG, (4, 5)))
        assert od.invariant_factors == (1, 8)
        assert od.action_exponents == IntMatrix([[0, 0, 0, 0], [7, 6, 6, 6]])
        assert effective_factors(od) == (8,)

    def test_rwp4(self):
        od = orbifold_group(witness(RWP4, (5, 6)))
        assert sorted(od.invariant_factors) == [1, 8]
        assert od.action_exponents == IntMatrix([[0, 0, 0, 0, 0], [7, 7, 6, 6, 6]])
        assert effective_factors(od) == (8,)

    def test_exponent_ranges(self):
        od = orbifold_group(witness(TWOLG, (4, 5)))
        for a, d in enumerate(od.invariant_factors):
            for e in od.action_exponents.row(a):
                assert 0 <= e < max(d, 1)

    def test_rank_deficient_rejected(self):
        w = witness([[1, 1, -2], [2, 2, -4]], (2,))
        with pytest.raises(RankDeficientGaugeGroup):
            orbifold_group(w)

    def test_group_order_matches_determinant(self):
        rng = random.Random(101)
        count = 0
        while count < 40:
            r = rng.randint(1, 3)
            cm_rows = random_nonsingular(rng, r, 4)
            extra = rand_matrix(rng, r, rng.randint(1, 3), 3)
            m = IntMatrix([list(a) + list(b) for a, b in zip(cm_rows.rows, extra.rows)])
            cm = make_charge_matrix(m)
            try:
                w = check_witness(cm, tuple(range(r)))
            except Exception:
                # most random choices fail the sign conditions; only the
                # successful ones carry a group to compare
                ws = enumerate_phases(cm)
                if not ws:
                    continue
                w = ws[0]
            od = orbifold_group(w)
            assert od.group_order == abs(determinant(w.vev_block))
            if od.group_order <= 48:
                assert od.group_order == cokernel_order_bruteforce(w.vev_block)
            count += 1


class TestCanonicalAction:
    def test_returns_stored_lattice(self):
        od = orbifold_group(witness(TWOLG, (0, 5)))
        assert canonical_action(od) == od.canonical_lattice

    def test_projective_line_lattice(self):
        od = orbifold_group(witness([[1, 1, -2]], (2,)))
        assert od.canonical_lattice == IntMatrix([[1, 1], [0, 2]])

    def test_twolg_phases_share_lattice(self):
        od1 = orbifold_group(witness(TWOLG, (0, 5)))
        od2 = orbifold_group(witness(TWOLG, (4, 5)))
        target = IntMatrix([[1, 1, 1, 1], [0, 4, 0, 0], [0, 0, 4, 0], [0, 0, 0, 4]])
        assert od1.canonical_lattice == target
        assert od2.canonical_lattice == target
        assert actions_equivalent(od1, od2)

    def test_trivial_action_is_identity_lattice(self):
        od = orbifold_group(witness([[-1, 1, 1]], (0,)))
        assert effective_factors(od) == ()
        assert od.canonical_lattice == IntMatrix.identity(2)

    def test_distinct_actions_differ(self):
        half = orbifold_group(witness([[1, 1, -2]], (2,)))
        trivial = orbifold_group(witness([[-1, 1, 1]], (0,)))
        assert not actions_equivalent(half, trivial)

    def test_reflexive(self):
        for rows, chosen in [(TWOLG, (0, 5)), (RWP4, (5, 6)), ([[1, 1, -2]], (2,))]:
            od = orbifold_group(witness(rows, chosen))
            assert actions_equivalent(od, od)

    def test_coordinate_count_mismatch(self):
        od1 = orbifold_group(witness([[1, 1, -2]], (2,)))
        od2 = orbifold_group(witness(TWOLG, (0, 5)))
        with pytest.raises(DimensionMismatch):
            actions_equivalent(od1, od2)


class TestTorusSubgroup:
    def test_pinned_weight_lattice(self):
        m, lat = torus_subgroup_lattice([(1, 1, 2, 2, 2)], [8], 5)
        assert m == 8
        assert lat == IntMatrix(
            [[1, 1, 2, 2, 2], [0, 8, 0, 0, 0], [0, 0, 8, 0, 0],
             [0, 0, 0, 8, 0], [0, 0, 0, 0, 8]]
        )

    def test_rwp4_effective_action_matches_weights(self):
        od = orbifold_group(witness(RWP4, (5, 6)))
        rows = [od.action_exponents.row(a)
                for a, d in enumerate(od.invariant_factors) if d > 1]
        orders = [d for d in od.invariant_factors if d > 1]
        assert torus_subgroup_lattice(rows, orders, 5) == \
            torus_subgroup_lattice([(1, 1, 2, 2, 2)], [8], 5)

    def test_faithful_weights(self):
        # (1,1,2,2,2) mod 8 only dies at multiples of 8
        for k in range(1, 8):
            assert any((k * wgt) % 8 for wgt in (1, 1, 2, 2, 2))

    def test_redundant_generator_ignored(self):
        base = torus_subgroup_lattice([(1, 1, 2, 2, 2)], [8], 5)
        extra = torus_subgroup_lattice([(1, 1, 2, 2, 2), (2, 2, 4, 4, 4)], [8, 8], 5)
        assert extra == base

    def test_row_rescale_by_unit(self):
        base = torus_subgroup_lattice([(1, 1, 2, 2, 2)], [8], 5)
        # 3 is a unit mod 8, so the generated subgroup does not move
        assert torus_subgroup_lattice([(3, 3, 6, 6, 6)], [8], 5) == base

    def test_subgroups_differ_from_canonical_forms(self):
        # weights (1,2)/4 reduce to (1,1)/2 after rescaling the first
        # coordinate: distinct subgroups of the torus, same canonical form
        sub_a = torus_subgroup_lattice([(1, 2)], [4], 2)
        sub_b = torus_subgroup_lattice([(1, 1)], [2], 2)
        assert sub_a != sub_b
        assert canonical_torus_action([(1, 2)], [4], 2) == \
            canonical_torus_action([(1, 1)], [2], 2)

    def test_inequivalent_weights_stay_apart(self):
        # (1,3)/4 and (1,1)/4 are different orbifolds; neither admits a
        # coordinate rescale, so their canonical forms must differ
        assert canonical_torus_action([(1, 3)], [4], 2) != \
            canonical_torus_action([(1, 1)], [4], 2)


class TestCanonicalTorusAction:
    def test_equal_element_equal_form(self):
        # (2,2,2,2)/8 and (1,1,1,1)/4 are the same torus element
        assert canonical_torus_action([(2, 2, 2, 2)], [8], 4) == \
            canonical_torus_action([(1, 1, 1, 1)], [4], 4)

    def test_column_permutation_invariance(self):
        rng = random.Random(111)
        for _ in range(25):
            n = rng.randint(1, 4)
            order = rng.choice([2, 3, 4, 6, 8])
            row = [rng.randrange(order) for _ in range(n)]
            perm = list(range(n))
            rng.shuffle(perm)
            permuted = [row[p] for p in perm]
            assert canonical_torus_action([row], [order], n) == \
                canonical_torus_action([permuted], [order], n)

    def test_generating_set_invariance(self):
        rng = random.Random(112)
        for _ in range(25):
            n = rng.randint(1, 3)
            orders = [rng.choice([2, 4, 8]) for _ in range(rng.randint(1, 2))]
            rows = [[rng.randrange(d) for _ in range(n)] for d in orders]
            base = canonical_torus_action(rows, orders, n)
            # shift a row by a full-period multiple
            shifted = [list(r) for r in rows]
            shifted[0] = [e + orders[0] * rng.randint(-2, 2) for e in shifted[0]]
            assert canonical_torus_action(shifted, orders, n) == base
            # append a power of an existing generator
            extra = rows + [[(2 * e) % orders[-1] for e in rows[-1]]]
            assert canonical_torus_action(extra, orders + [orders[-1]], n) == base

    def test_trivial_group(self):
        assert canonical_torus_action([], [], 3) == IntMatrix.identity(3)
        assert canonical_torus_action([(0, 0)], [1], 2) == IntMatrix.identity(2)


class TestPresentationInvariance:
    """The group data must not depend on which diagonalization was found."""

    def _alternative_exponents(self, rng, od, vev_block):
        # any unimodular W with D W D^-1 integral yields another valid
        # diagonalization; ascending divisibility makes every upper
        # triangular unimodular W (with equal-factor swaps) admissible
        k = len(od.invariant_factors)
        rows = [[0] * k for _ in range(k)]
        for i in range(k):
            rows[i][i] = rng.choice([1, -1])
            for j in range(i + 1, k):
                rows[i][j] = rng.randint(-2, 2)
        for i in range(k - 1):
            if od.invariant_factors[i] == od.invariant_factors[i + 1] and rng.random() < 0.5:
                rows[i], rows[i + 1] = rows[i + 1], rows[i]
        w = IntMatrix(rows)
        assert abs(determinant(w)) == 1
        new = w * od.action_exponents
        return IntMatrix(
            [[e % d if d else e for e in new.row(a)]
             for a, d in enumerate(od.invariant_factors)]
        )

    def test_recombined_rows_same_subgroup(self):
        rng = random.Random(121)
        cases = [(TWOLG, (0, 5)), (TWOLG, (4, 5)), (RWP4, (5, 6))]
        for rows, chosen in cases:
            w = witness(rows, chosen)
            od = orbifold_group(w)
            gen_rows = [od.action_exponents.row(a)
                        for a in range(len(od.invariant_factors))]
            orders = list(od.invariant_factors)
            base_sub = torus_subgroup_lattice(gen_rows, orders, od.num_coords)
            base_can = canonical_torus_action(gen_rows, orders, od.num_coords)
            for _ in range(10):
                alt = self._alternative_exponents(rng, od, w.vev_block)
                alt_rows = [alt.row(a) for a in range(alt.nrows)]
                assert torus_subgroup_lattice(alt_rows, orders, od.num_coords) == base_sub
                assert canonical_torus_action(alt_rows, orders, od.num_coords) == base_can
