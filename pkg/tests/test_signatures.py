from __future__ import annotations

import itertools

import numpy as np
import pytest

from conftest import CLASSICAL_GRID
from hermsig.errors import ConstraintViolation
from hermsig.rootsys import CartanType, PairDescriptor, RatVec, build_root_datum, vec
from hermsig.signatures import (
    Signature,
    SignatureSet,
    attainable_rminus,
    attainable_signatures,
    enumerate_face_points,
    r_signature,
    random_cartan_points,
    sample_signatures,
)
from hermsig.weyl import apply_word

P = PairDescriptor.of


def test_r_signature_examples():
    aiii = build_root_datum(P("AIII", m=2, n=3))
    assert r_signature(aiii, vec(-1, 0, 0, 0, 1)) == (0, 4)
    assert r_signature(aiii, RatVec.zero(5)) == (0, 0)
    ci = build_root_datum(P("CI", n=2))
    assert r_signature(ci, vec(-1, -1)) == (0, 3)
    with pytest.raises(ConstraintViolation):
        r_signature(aiii, vec(1, 0, 0, 0, 0))


def test_face_point_counts():
    ci = build_root_datum(P("CI", n=2))
    points = list(enumerate_face_points(ci))
    assert len(points) == 12
    e3 = build_root_datum(P("EIII"))
    points = list(enumerate_face_points(e3))
    assert len(points) == 1701
    assert not any(x.is_zero() for x in points)


def test_attainable_examples():
    assert attainable_rminus(P("EIII"), 0) == (8, 11, 12, 13, 14, 15, 16)
    assert attainable_rminus(P("EVII"), 1) == (10, 18, 21, 22, 23, 24, 25, 26)
    assert attainable_rminus(P("AIII", m=1, n=3), 0) == (1, 2, 3)


def test_signature_set_shape(grid_desc):
    d = build_root_datum(grid_desc)
    sigs = attainable_signatures(d)
    for r_plus, r_minus in sigs.values.items():
        assert list(r_minus) == sorted(set(r_minus))
        assert all(r_plus + m <= grid_desc.dim_X for m in r_minus)
    # the antipodal face of every face is also enumerated
    assert {Signature(m, p) for p, m in sigs.pairs()} == sigs.pairs()
    assert (0, 0) not in sigs.pairs()


def test_bulk_integer_path_matches_exact_face_points(grid_desc):
    d = build_root_datum(grid_desc)
    exact = {r_signature(d, x) for x in enumerate_face_points(d)}
    assert exact == attainable_signatures(d).pairs()


def test_provenance_reproduces_signature():
    d = build_root_datum(P("EVII"))
    sigs = attainable_signatures(d)
    assert set(sigs.provenance) == sigs.pairs()
    for sig, witness in sigs.provenance.items():
        images = [apply_word(d, witness.word, d.coweight(i)) for i in witness.subset]
        x = sum(images[1:], images[0])
        assert r_signature(d, x) == sig


def test_threads_do_not_change_results():
    d = build_root_datum(P("EVII"))
    one = attainable_signatures(d)
    four = attainable_signatures(d, threads=4)
    assert one.values == four.values and one.provenance == four.provenance


def test_r_plus_filter():
    d = build_root_datum(P("CI", n=3))
    sigs = attainable_signatures(d, r_plus_filter=[0, 99])
    assert sigs.values == {0: (3, 5, 6), 99: ()}
    assert sigs[1] == ()
    s = SignatureSet.from_pairs([(0, 2), (0, 1), (1, 4)], r_plus_filter=[0])
    assert s.values == {0: (1, 2)}


def _box_signatures(desc: PairDescriptor) -> set[tuple[int, int]]:
    """All signatures of integer points in a box large enough to realise every
    weak ordering of the values +-x_i and 0, evaluated directly on the roots."""
    d = build_root_datum(desc)
    N = d.ambient_dim
    k = N if desc.cartan_type is not CartanType.AIII else (N - 1) // 2 + 1
    grid = np.array(list(itertools.product(range(-k, k + 1), repeat=N)), dtype=np.int64)
    roots = np.array([[int(c) for c in a] for a in d.pos_noncompact], dtype=np.int64)
    values = grid @ roots.T
    sig = np.stack([(values > 0).sum(axis=1), (values < 0).sum(axis=1)], axis=1)
    all_roots = np.array([[int(c) for c in a] for a in d.roots], dtype=np.int64)
    # drop points on which every root vanishes (x = 0 modulo the centre)
    nonzero = np.any(grid @ all_roots.T != 0, axis=1)
    return {tuple(map(int, s)) for s in sig[nonzero]}


@pytest.mark.parametrize(
    "desc",
    [P("AIII", m=2, n=2), P("AIII", m=2, n=3), P("AIII", m=1, n=4), P("CI", n=2), P("CI", n=3),
     P("BDI_odd", m=3), P("BDI_even", m=4), P("DIII", n=4)],
    ids=lambda d: d.label,
)
def test_enumeration_matches_box_brute_force(desc):
    expected = _box_signatures(desc)
    assert attainable_signatures(build_root_datum(desc)).pairs() == expected


def test_sampler_is_sound_and_deterministic(grid_desc):
    d = build_root_datum(grid_desc)
    sampled = sample_signatures(d, 1000, seed=11)
    assert sampled and sampled <= attainable_signatures(d).pairs()
    assert sample_signatures(d, 1000, seed=11) == sampled


def test_sampler_coverage_on_evii():
    d = build_root_datum(P("EVII"))
    sampled = sample_signatures(d, 100_000, seed=42)
    full = attainable_signatures(d, [0, 1])
    for r_plus in (0, 1):
        hit = {m for p, m in sampled if p == r_plus}
        assert hit <= set(full[r_plus])
        print(f"EVII R+={r_plus}: sampler reached {sorted(hit)} of {list(full[r_plus])}")


def test_sampler_rejects_nonpositive_count():
    with pytest.raises(ValueError):
        sample_signatures(build_root_datum(P("CI", n=2)), 0, seed=1)


@pytest.mark.parametrize("desc", [P("AIII", m=3, n=4), P("CI", n=4), P("BDI_even", m=5), P("DIII", n=6), P("EIII"), P("EVII")], ids=lambda d: d.label)
def test_symmetries_on_random_points(desc):
    d = build_root_datum(desc)
    for x in random_cartan_points(d, 200, seed=5):
        r = r_signature(d, x)
        assert r_signature(d, -x) == (r.r_minus, r.r_plus)
        for i in d.compact_simple_indices:
            assert r_signature(d, apply_word(d, (i,), x)) == r
        if all(a.dot(x) != 0 for a in d.pos_noncompact):
            assert sum(r) == desc.dim_X


def test_random_points_are_in_real_cartan():
    d = build_root_datum(P("EIII"))
    pts = random_cartan_points(d, 50, seed=3)
    assert len(pts) == 50 and all(d.in_real_cartan(x) and not x.is_zero() for x in pts)
    assert pts == random_cartan_points(d, 50, seed=3)


def test_classical_grid_is_nonempty():
    assert len(CLASSICAL_GRID) > 20
