"""Tests for signed-measure representations, Jordan decomposition, and positivity indices."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from monotonia import (
    DiscreteSignedMeasure,
    GridDensityMeasure,
    InvalidInputError,
    MixedSignedMeasure,
    UndefinedIndexError,
    derivative,
    jordan,
    loi,
    lod,
    lom,
    lon,
    lon_norm,
    lop,
    lop_norm,
    los,
    los_norm,
    total_variation,
)

from helpers import assert_close, continuous_function, dyadic_function, dyadic_functions

ATOMS = DiscreteSignedMeasure.from_atoms([(0.0, 2.0), (1.0, -1.0), (2.5, 0.5), (3.0, -0.25)])
GRID = GridDensityMeasure([1.0, 2.0, 0.5], [3.0, -2.0, 0.0])
EMPTY = DiscreteSignedMeasure.from_atoms([])


def random_discrete(rng: np.random.Generator, allow_empty: bool = False) -> DiscreteSignedMeasure:
    n = int(rng.integers(0 if allow_empty else 1, 9))
    locations = rng.choice(np.arange(64.0), size=n, replace=False)
    weights = rng.uniform(-5.0, 5.0, n)
    return DiscreteSignedMeasure(locations, weights)


def random_grid(rng: np.random.Generator) -> GridDensityMeasure:
    n = int(rng.integers(1, 9))
    return GridDensityMeasure(rng.uniform(0.1, 3.0, n), rng.uniform(-5.0, 5.0, n))


class TestDiscreteConstruction:
    def test_zero_weights_are_dropped_and_atoms_sorted(self):
        nu = DiscreteSignedMeasure([3.0, 1.0, 2.0], [0.5, 0.0, -2.0])
        assert nu.atoms == [(2.0, -2.0), (3.0, 0.5)]

    def test_from_atoms_round_trip(self):
        assert ATOMS.atoms == [(0.0, 2.0), (1.0, -1.0), (2.5, 0.5), (3.0, -0.25)]
        assert EMPTY.atoms == []

    def test_duplicate_locations_rejected_after_stripping(self):
        with pytest.raises(InvalidInputError, match="duplicate atom location"):
            DiscreteSignedMeasure([1.0, 2.0, 1.0], [0.5, 1.0, 0.25])
        # The duplicate pair disappears with the zero weight, so this is fine.
        nu = DiscreteSignedMeasure([1.0, 2.0, 1.0], [0.5, 1.0, 0.0])
        assert nu.atoms == [(1.0, 0.5), (2.0, 1.0)]

    def test_shape_and_finiteness_validation(self):
        with pytest.raises(InvalidInputError):
            DiscreteSignedMeasure([1.0, 2.0], [1.0])
        with pytest.raises(InvalidInputError):
            DiscreteSignedMeasure([1.0], [np.nan])
        with pytest.raises(InvalidInputError):
            DiscreteSignedMeasure([np.inf], [1.0])

    def test_arrays_are_frozen(self):
        with pytest.raises(ValueError):
            ATOMS.weights[0] = 7.0


class TestGridConstruction:
    def test_zero_densities_are_kept(self):
        assert GRID.densities.tolist() == [3.0, -2.0, 0.0]
        assert GRID.lengths.tolist() == [1.0, 2.0, 0.5]

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            GridDensityMeasure([1.0, -1.0], [1.0, 1.0])
        with pytest.raises(InvalidInputError):
            GridDensityMeasure([1.0, 0.0], [1.0, 1.0])
        with pytest.raises(InvalidInputError):
            GridDensityMeasure([1.0], [1.0, 2.0])
        with pytest.raises(InvalidInputError):
            GridDensityMeasure([1.0], [np.nan])

    def test_mixed_component_types_checked(self):
        with pytest.raises(InvalidInputError):
            MixedSignedMeasure(GRID, GRID)
        with pytest.raises(InvalidInputError):
            MixedSignedMeasure(ATOMS, ATOMS)


class TestJordan:
    def test_discrete_example(self):
        pair = jordan(ATOMS)
        assert pair.positive_part.atoms == [(0.0, 2.0), (2.5, 0.5)]
        assert pair.negative_part.atoms == [(1.0, 1.0), (3.0, 0.25)]
        assert pair.hahn_positive.tolist() == [0, 2]
        assert pair.hahn_negative.tolist() == [1, 3]
        assert pair.hahn_positive.dtype == np.intp

    def test_grid_example(self):
        pair = jordan(GRID)
        assert pair.positive_part.densities.tolist() == [3.0, 0.0, 0.0]
        assert pair.negative_part.densities.tolist() == [0.0, 2.0, 0.0]
        assert pair.positive_part.lengths.tolist() == GRID.lengths.tolist()
        # Cells with zero density carry no mass and sit in the non-negative set.
        assert pair.hahn_positive.tolist() == [0, 2]
        assert pair.hahn_negative.tolist() == [1]

    def test_empty_measure_decomposes(self):
        pair = jordan(EMPTY)
        assert pair.positive_part.atoms == []
        assert pair.negative_part.atoms == []
        assert pair.hahn_positive.shape == (0,)
        assert pair.hahn_negative.shape == (0,)

    def test_mixed_measure_is_rejected(self):
        with pytest.raises(InvalidInputError, match="individually"):
            jordan(MixedSignedMeasure(ATOMS, GRID))

    def test_discrete_reconstruction(self):
        rng = np.random.default_rng(1234)
        for _ in range(50):
            nu = random_discrete(rng)
            pair = jordan(nu)
            rebuilt: dict[float, float] = {}
            for x, w in pair.positive_part.atoms:
                rebuilt[x] = rebuilt.get(x, 0.0) + w
            for x, w in pair.negative_part.atoms:
                rebuilt[x] = rebuilt.get(x, 0.0) - w
            assert rebuilt == dict(nu.atoms)

    def test_grid_reconstruction_is_cellwise_exact(self):
        rng = np.random.default_rng(987)
        for _ in range(50):
            nu = random_grid(rng)
            pair = jordan(nu)
            delta = pair.positive_part.densities - pair.negative_part.densities
            assert delta.tolist() == nu.densities.tolist()

    def test_parts_are_nonnegative_and_supported_on_hahn_sets(self):
        rng = np.random.default_rng(555)
        for _ in range(50):
            nu = random_grid(rng)
            pair = jordan(nu)
            assert np.all(pair.positive_part.densities >= 0.0)
            assert np.all(pair.negative_part.densities >= 0.0)
            assert np.all(pair.positive_part.densities[pair.hahn_negative] == 0.0)
            assert np.all(pair.negative_part.densities[pair.hahn_positive] == 0.0)

    def test_part_masses_sum_to_total_variation(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            for nu in (random_discrete(rng), random_grid(rng)):
                pair = jordan(nu)
                assert_close(
                    lon(pair.positive_part) + lon(pair.negative_part),
                    nu.total_variation(),
                )


class TestIndices:
    def test_discrete_example(self):
        assert lop(ATOMS) == 1.25
        assert lon(ATOMS) == 2.5
        assert los(ATOMS) == 2.5
        assert ATOMS.total_variation() == 3.75

    def test_grid_example(self):
        assert lop(GRID) == 4.0
        assert lon(GRID) == 3.0
        assert los(GRID) == 6.0
        assert GRID.total_variation() == 7.0

    def test_normalized_example(self):
        nu = DiscreteSignedMeasure([0.0, 1.0], [1.0, -2.0])
        assert_close(lop_norm(nu), 2.0 / 3.0)
        assert_close(lon_norm(nu), 1.0 / 3.0)
        assert_close(los_norm(nu), 2.0 / 3.0)

    def test_balanced_measure_has_unit_normalized_sign_index(self):
        nu = DiscreteSignedMeasure([0.0, 1.0], [1.5, -1.5])
        assert los_norm(nu) == 1.0

    def test_zero_measure(self):
        assert lop(EMPTY) == 0.0
        assert lon(EMPTY) == 0.0
        assert los(EMPTY) == 0.0
        assert EMPTY.total_variation() == 0.0
        with pytest.raises(UndefinedIndexError):
            lop_norm(EMPTY)
        zero_grid = GridDensityMeasure([1.0, 2.0], [0.0, 0.0])
        assert zero_grid.total_variation() == 0.0
        with pytest.raises(UndefinedIndexError):
            los_norm(zero_grid)

    def test_negation_swaps_lop_and_lon(self):
        rng = np.random.default_rng(808)
        for _ in range(50):
            nu = random_discrete(rng)
            flipped = DiscreteSignedMeasure(nu.locations, -nu.weights)
            assert lop(nu) == lon(flipped)
            assert lon(nu) == lop(flipped)
            assert los(nu) == los(flipped)

    def test_split_sums_to_total_variation(self):
        rng = np.random.default_rng(4242)
        for _ in range(50):
            for nu in (random_discrete(rng), random_grid(rng)):
                assert_close(lop(nu) + lon(nu), nu.total_variation())
                assert 2.0 * min(lop(nu), lon(nu)) == los(nu)

    def test_normalized_bounds_and_complement(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            nu = random_grid(rng)
            up, down = lop_norm(nu), lon_norm(nu)
            assert 0.0 <= up <= 1.0 and 0.0 <= down <= 1.0
            assert_close(up + down, 1.0)
            assert_close(los_norm(nu), 2.0 * min(up, down))


class TestMixed:
    def test_componentwise_sums(self):
        mixed = MixedSignedMeasure(ATOMS, GRID)
        assert lop(mixed) == lop(ATOMS) + lop(GRID)
        assert lon(mixed) == lon(ATOMS) + lon(GRID)
        assert mixed.total_variation() == ATOMS.total_variation() + GRID.total_variation()
        assert los(mixed) == 2.0 * min(lop(mixed), lon(mixed))

    def test_normalized_uses_combined_total_variation(self):
        mixed = MixedSignedMeasure(ATOMS, GRID)
        assert_close(lop_norm(mixed), lop(mixed) / mixed.total_variation())
        assert_close(lon_norm(mixed), lon(mixed) / mixed.total_variation())

    def test_empty_component_is_neutral(self):
        mixed = MixedSignedMeasure(EMPTY, GRID)
        assert lop(mixed) == lop(GRID)
        assert lon(mixed) == lon(GRID)


class TestFunctionBridge:
    @given(dyadic_functions())
    @settings(max_examples=150, deadline=None)
    def test_derivative_measure_recovers_function_indices(self, f):
        nu = GridDensityMeasure.from_derivative_profile(derivative(f))
        assert lop(nu) == loi(f)
        assert lon(nu) == lod(f)
        assert los(nu) == lom(f)
        assert nu.total_variation() == total_variation(f)

    def test_bridge_on_continuous_functions(self):
        rng = np.random.default_rng(99)
        for _ in range(50):
            f = continuous_function(rng)
            nu = GridDensityMeasure.from_derivative_profile(derivative(f))
            assert lop(nu) == loi(f)
            assert lon(nu) == lod(f)

    def test_bridge_on_dyadic_function_instance(self):
        rng = np.random.default_rng(123)
        f = dyadic_function(rng)
        nu = GridDensityMeasure.from_derivative_profile(derivative(f))
        assert nu.lengths.tolist() == np.diff(f.xs).tolist()


class TestDistanceToCone:
    def test_lop_is_distance_to_positive_measures(self):
        # Brute force over candidate positive measures mu on the support of
        # nu: the total-variation distance ||nu - mu|| is minimized at
        # mu = positive part, with minimum equal to the negative-part mass.
        nu = DiscreteSignedMeasure([0.0, 1.0, 2.0], [2.0, -1.0, 0.5])
        grid = np.arange(0.0, 3.25, 0.25)
        best = min(
            sum(abs(w - m) for w, m in zip((2.0, -1.0, 0.5), mu))
            for mu in itertools.product(grid, repeat=3)
        )
        assert best == lop(nu) == 1.0

    def test_lon_is_distance_to_negative_measures(self):
        nu = DiscreteSignedMeasure([0.0, 1.0, 2.0], [2.0, -1.0, 0.5])
        grid = -np.arange(0.0, 3.25, 0.25)
        best = min(
            sum(abs(w - m) for w, m in zip((2.0, -1.0, 0.5), mu))
            for mu in itertools.product(grid, repeat=3)
        )
        assert best == lon(nu) == 2.5
