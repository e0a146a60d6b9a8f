"""The Clifford-membership test, the symplectic image of Clifford gates,
group order formulas, and the symplectic matrices of the braid generators.

Conventions: for a Clifford U the action is read off from U sigma_p U^dagger
= i^f(p) sigma_{S p} with S acting on column vectors, so S_{UV} = S_U S_V
and the generator matrices match the block forms of the braid generators'
symplectic images.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .braid import RepContext, braid_generator
from .gf2 import BitMatrix, is_symplectic, omega_matrix
from .matrix import DenseMatrix
from .pauli import pauli_basis_decompose, pauli_vector_matrix


@dataclass(frozen=True)
class CliffordAction:
    """Symplectic part plus the i-power phases on the 2n generator Paulis."""

    s: BitMatrix
    f: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"s": self.s.to_bitstrings(), "f": list(self.f)}


@dataclass(frozen=True)
class NonClifford:
    """Witness that conjugation of one generator leaves the Pauli group."""

    generator: tuple[int, ...]
    expansion: tuple[tuple[tuple[int, ...], list], ...]

    def to_json_dict(self) -> dict:
        return {
            "witness": "".join(map(str, self.generator)),
            "terms": [{"v": "".join(map(str, v)), "coeff": c} for v, c in self.expansion],
        }


def clifford_check(u: DenseMatrix) -> CliffordAction | NonClifford:
    """Decide Clifford membership by conjugating the 2n generator Paulis.

    Every U sigma U^dagger is decomposed exactly in the Pauli basis; the
    verdict is CliffordAction(s, f) when each image is a single Pauli with
    an i-power phase (s is then asserted symplectic), otherwise the first
    offending generator and its multi-term expansion.
    """
    if not u.is_unitary():
        raise ValueError("input is not unitary")
    d = u.dim
    n = d.bit_length() - 1
    if 2 ** n != d:
        raise ValueError("dimension must be a power of two")
    udag = u.dagger()
    cols = []
    phases = []
    for g in range(2 * n):
        v = tuple(1 if b == g else 0 for b in range(2 * n))
        w = u @ pauli_vector_matrix(v) @ udag
        terms = pauli_basis_decompose(w)
        if len(terms) != 1:
            return NonClifford(v, tuple((tv, c.to_list()) for tv, c in terms))
        tv, c = terms[0]
        m = c.ipower()
        if m is None:
            return NonClifford(v, ((tv, c.to_list()),))
        cols.append(tv)
        phases.append(m)
    s = BitMatrix(2 * n, tuple(
        sum(cols[g][i] << g for g in range(2 * n)) for i in range(2 * n)
    ))
    assert is_symplectic(s), "Clifford image failed the symplectic relation"
    return CliffordAction(s, tuple(phases))


def sp_order(n: int, q: int) -> int:
    """|Sp_2n(q)| = q^(n^2) prod_{j=1..n} (q^2j - 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    order = q ** (n * n)
    for j in range(1, n + 1):
        order *= q ** (2 * j) - 1
    return order


def sp_bruteforce_order(n: int) -> int:
    """Count 2n x 2n bit matrices with S^T M S = M by brute force (n <= 2)."""
    size = 2 * n
    if size * size > 20:
        raise ValueError("brute force limited to n <= 2")
    m = omega_matrix(n)
    mask = (1 << size) - 1
    count = 0
    for bits in range(1 << (size * size)):
        rows = tuple((bits >> (size * i)) & mask for i in range(size))
        s = BitMatrix(size, rows)
        if s.transpose() @ m @ s == m:
            count += 1
    return count


@dataclass(frozen=True)
class GroupOrders:
    pauli: int
    projective_pauli: int
    projective_clifford: int
    braid_image: int
    braid_image_mod_center: int

    def to_json_dict(self) -> dict:
        return {
            "pauli": self.pauli,
            "projective_pauli": self.projective_pauli,
            "projective_clifford": self.projective_clifford,
            "braid_image": self.braid_image,
            "braid_image_mod_center": self.braid_image_mod_center,
        }


def group_orders(n: int) -> GroupOrders:
    """Closed-form orders of the Pauli/Clifford/braid-image tower."""
    if n < 1:
        raise ValueError("n must be positive")
    pauli = 2 ** (2 * n + 2)
    projective_pauli = 2 ** (2 * n)
    projective_clifford = projective_pauli * sp_order(n, 2)
    if n == 1:
        braid_image = 16 * factorial(3)  # S_4 is not faithful; S_3 instead
    else:
        braid_image = pauli * factorial(2 * n + 2)
    return GroupOrders(pauli, projective_pauli, projective_clifford,
                       braid_image, braid_image // 4)


def braid_symplectic(n: int, j: int) -> BitMatrix:
    """The printed symplectic matrix of the j-th braid generator, n qubits."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= j <= 2 * n + 1:
        raise IndexError(f"generator index {j} out of range 1..{2 * n + 1}")
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    if j == 2 * n + 1:
        for r in range(size):
            for c in range(size):
                rows[r][c] = 1 if r != c else 0
    elif j == 2 * n:
        for r in range(size - 2):
            for c in range(size - 2):
                rows[r][c] = 1 if r != c else 0
            rows[r][size - 1] = 1
        for c in range(size):
            rows[size - 2][c] = 1
        rows[size - 1][size - 1] = 1
    elif j % 2 == 1:
        i = (j + 1) // 2
        for r in range(size):
            rows[r][r] = 1
        a, b = 2 * i - 2, 2 * i - 1
        rows[a][a] = rows[b][b] = 0
        rows[a][b] = rows[b][a] = 1
    else:
        i = j // 2
        block = [[1, 0, 0, 0], [1, 1, 1, 0], [0, 0, 1, 0], [1, 0, 1, 1]]
        for r in range(size):
            rows[r][r] = 1
        off = 2 * i - 2
        for r in range(4):
            for c in range(4):
                rows[off + r][off + c] = block[r][c]
    s = BitMatrix.from_rows(rows)
    assert is_symplectic(s), f"printed S_{j} is not symplectic"
    return s


def basis_change_t(n: int) -> BitMatrix:
    """The self-inverse basis change making the generator images
    transparent permutations (column c keeps its diagonal 1 and gains 1s
    in every later qubit block)."""
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    for c in range(size):
        rows[c][c] = 1
        block = c // 2
        for r in range(2 * block + 2, size):
            rows[r][c] = 1
    return BitMatrix.from_rows(rows)


def tilde_basis(n: int) -> tuple[BitMatrix, list[BitMatrix]]:
    """(T, [T S_j T for j = 1..2n+1]); T is asserted self-inverse."""
    t = basis_change_t(n)
    assert t @ t == BitMatrix.identity(2 * n), "T is not self-inverse"
    return t, [t @ braid_symplectic(n, j) @ t for j in range(1, 2 * n + 2)]


def tilde_printed(n: int, j: int) -> BitMatrix:
    """The printed form of T S_j T: transpositions for j <= 2n-1, the
    all-ones-last-column matrix for j = 2n, unchanged for j = 2n+1."""
    size = 2 * n
    rows = [[0] * size for _ in range(size)]
    if j <= 2 * n - 1:
        for r in range(size):
            rows[r][r] = 1
        a = j - 1
        rows[a][a] = rows[a + 1][a + 1] = 0
        rows[a][a + 1] = rows[a + 1][a] = 1
    elif j == 2 * n:
        for r in range(size):
            rows[r][r] = 1
            rows[r][size - 1] = 1
    else:
        for r in range(size):
            for c in range(size):
                rows[r][c] = 1 if r != c else 0
    return BitMatrix.from_rows(rows)


@lru_cache(maxsize=None)
def symplectic_subgroup(n: int) -> frozenset[BitMatrix]:
    """The subgroup of Sp_2n(2) generated by the braid generator images."""
    from .groups import dimino

    gens = [braid_symplectic(n, j) for j in range(1, 2 * n + 2)]
    elements = dimino(gens, BitMatrix.identity(2 * n))
    return frozenset(elements)


@dataclass(frozen=True)
class FaithfulnessVerdict:
    n: int
    subgroup_order: int
    expected_order: int
    symmetric_group_degree: int

    @property
    def ok(self) -> bool:
        return self.subgroup_order == self.expected_order

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "subgroup_order": self.subgroup_order,
            "expected_order": self.expected_order,
            "symmetric_group_degree": self.symmetric_group_degree,
            "ok": self.ok,
        }


def faithfulness_check(n: int) -> FaithfulnessVerdict:
    """Order of <S_1..S_2n+1>: (2n+2)! for n >= 2 (faithful S_2n+2),
    6 for n = 1 (S_3, since S_3 = S_1 there)."""
    order = len(symplectic_subgroup(n))
    if n >= 2:
        degree = 2 * n + 2
        expected = factorial(degree)
    else:
        degree = 3
        expected = 6
    return FaithfulnessVerdict(n, order, expected, degree)


def braid_generator_action(ctx: RepContext, j: int) -> CliffordAction:
    act = clifford_check(braid_generator(ctx, j))
    assert isinstance(act, CliffordAction)
    return act
