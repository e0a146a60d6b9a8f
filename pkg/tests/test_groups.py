import itertools

import pytest

from anyonbraid.braid import RepContext, braid_generator, eval_word, phase_word
from anyonbraid.gates import swap_gate
from anyonbraid.groups import (EnumerationCapExceeded, bfs_closure, braid_image,
                               dimino, enumerate_group, monodromy_equals_pauli,
                               monodromy_image, pauli_group_matrices)
from anyonbraid.matrix import DenseMatrix
from anyonbraid.ring import I_UNIT


def b4_generators():
    ctx = RepContext(1)
    return [braid_generator(ctx, j) for j in (1, 2, 3)]


def test_b4_orders():
    assert braid_image(1, 1, "strict").order == 96
    assert braid_image(1, 1, "projective").order == 24
    assert braid_image(1, -1, "strict").order == 96


def test_dimino_independent_of_generator_order():
    gens = b4_generators()
    orders = set()
    keysets = set()
    for perm in itertools.permutations(range(3)):
        e = enumerate_group([gens[i] for i in perm], mode="strict")
        orders.add(e.order)
        keysets.add(e.keys)
    assert orders == {96}
    assert len(keysets) == 1


def test_dimino_agrees_with_bfs_closure():
    gens = b4_generators()
    a = enumerate_group(gens, mode="strict", algorithm="dimino")
    b = enumerate_group(gens, mode="strict", algorithm="bfs")
    assert a.order == b.order == 96
    assert a.keys == b.keys
    ap = enumerate_group(gens, mode="projective", algorithm="dimino")
    bp = enumerate_group(gens, mode="projective", algorithm="bfs")
    assert ap.order == bp.order == 24
    assert ap.keys == bp.keys


def test_pauli_group_from_squares_and_phase_element():
    # squares of the B_4 generators plus the i*I word generate P_1
    ctx = RepContext(1)
    squares = [eval_word(ctx, [(j, 2)]) for j in (1, 2, 3)]
    phase = eval_word(ctx, phase_word(ctx))
    enum = enumerate_group(squares + [phase], mode="strict")
    assert enum.order == 16
    assert enum.keys == pauli_group_matrices(1).keys


def test_enumeration_cap():
    gens = b4_generators()
    with pytest.raises(EnumerationCapExceeded):
        enumerate_group(gens, mode="strict", cap=50)
    with pytest.raises(EnumerationCapExceeded):
        enumerate_group(gens, mode="strict", cap=50, algorithm="bfs")


def test_non_invertible_generator_rejected():
    from anyonbraid.gamma import projector
    with pytest.raises(ValueError):
        enumerate_group([projector(1, 1)], mode="strict")


def test_contains_identity_and_phases():
    enum = braid_image(1, 1, "strict")
    assert enum.contains(DenseMatrix.identity(2))
    assert enum.contains(DenseMatrix.identity(2).mul_zeta(2))
    zeta_id = DenseMatrix.identity(2).mul_zeta(1)
    assert not enum.contains(zeta_id)  # zeta*I is not in the strict image
    assert braid_image(1, 1, "projective").contains(zeta_id)


def test_center_of_b4():
    cen = braid_image(1, 1, "strict").center()
    assert len(cen) == 4
    ident = DenseMatrix.identity(2)
    assert set(x.key() for x in cen) == set(
        ident.mul_zeta(2 * m).key() for m in range(4)
    )


def test_center_of_abelian_group_is_everything():
    g = DenseMatrix.from_entries([[1, 0], [0, I_UNIT]])
    enum = enumerate_group([g], mode="strict")
    assert enum.order == 4
    assert len(enum.center()) == 4


def test_monodromy_image_is_pauli_group():
    for n in (1, 2):
        verdict = monodromy_equals_pauli(n)
        assert verdict.equal
        assert verdict.monodromy_order == 2 ** (2 * n + 2)
    assert monodromy_equals_pauli(1).pauli_order == 16
    assert monodromy_equals_pauli(2).pauli_order == 64


def test_monodromy_contains_i_identity():
    enum = monodromy_image(2)
    assert enum.contains(DenseMatrix.identity(4).mul_zeta(2))
    assert enum.contains(DenseMatrix.identity(4).mul_zeta(6))


def test_monodromy_elements_have_identity_symplectic_part():
    from anyonbraid.gf2 import BitMatrix
    from anyonbraid.symplectic import CliffordAction, clifford_check
    enum = monodromy_image(1)
    for el in enum.elements:
        act = clifford_check(el)
        assert isinstance(act, CliffordAction)
        assert act.s == BitMatrix.identity(2)


def test_summary_shape():
    enum = braid_image(1, 1, "strict")
    s = enum.summary()
    assert s == {"order": 96, "mode": "strict", "center_size": 4,
                 "generator_count": 3}


def test_b6_contains_swap_projectively():
    enum = braid_image(2, 1, "projective")
    assert enum.order == 11520
    assert enum.contains(swap_gate(2, 1, 2))


def test_b6_strict_order_and_center():
    enum = braid_image(2, 1, "strict")
    assert enum.order == 46080
    cen = enum.center()
    ident = DenseMatrix.identity(4)
    assert set(x.key() for x in cen) == set(
        ident.mul_zeta(2 * m).key() for m in range(4)
    )


def test_b6_dimino_agrees_with_bfs():
    ctx = RepContext(2)
    gens = [braid_generator(ctx, j) for j in range(1, 6)]
    bfs = enumerate_group(gens, mode="strict", algorithm="bfs")
    assert bfs.keys == braid_image(2, 1, "strict").keys


def test_strict_over_projective_is_center_size():
    for n in (1, 2):
        strict = braid_image(n, 1, "strict")
        proj = braid_image(n, 1, "projective")
        assert strict.order == 4 * proj.order
        assert len(strict.center()) == 4


def test_lagrange_sanity():
    for n in (1, 2):
        assert braid_image(n, 1, "strict").order % monodromy_image(n).order == 0
        assert monodromy_image(n).keys <= braid_image(n, 1, "strict").keys


def test_dimino_on_permutation_like_bitmatrices():
    from anyonbraid.gf2 import BitMatrix
    from anyonbraid.symplectic import braid_symplectic
    gens = [braid_symplectic(2, j) for j in range(1, 6)]
    ident = BitMatrix.identity(4)
    a = dimino(gens, ident)
    b = bfs_closure(gens, ident)
    assert len(a) == len(b) == 720
    assert set(a) == set(b)
