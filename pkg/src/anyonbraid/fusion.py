"""Bratteli-diagram combinatorics for chains of sigma anyons.

Sectors are "I" (vacuum), "s" (the non-Abelian sigma anyon) and "p" (the
fermion).  Fusing one more sigma steps I -> s, p -> s, s -> I or p, so a
path for 2m sigmas alternates s at odd positions with I/p at even ones;
the final sector is forced by the parity of the representation.  Pair
channels c = +1 (vacuum) / -1 (fermion) encode qubits; the last pair is
inert, its channel fixed by total parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

VACUUM = "I"
SIGMA = "s"
FERMION = "p"

_DISPLAY = {VACUUM: "I", SIGMA: "σ", FERMION: "ψ"}


@dataclass(frozen=True)
class FusionPath:
    sectors: tuple[str, ...]

    def __post_init__(self):
        secs = tuple(self.sectors)
        if not secs or secs[0] != VACUUM:
            raise ValueError("paths start at the vacuum")
        for i in range(1, len(secs)):
            prev, cur = secs[i - 1], secs[i]
            if i % 2 == 1:
                ok = prev in (VACUUM, FERMION) and cur == SIGMA
            else:
                ok = prev == SIGMA and cur in (VACUUM, FERMION)
            if not ok:
                raise ValueError(f"illegal fusion step {prev} -> {cur}")
        object.__setattr__(self, "sectors", secs)

    @property
    def num_sigma(self) -> int:
        return len(self.sectors) - 1

    @property
    def parity(self) -> int:
        return 1 if self.sectors[-1] == VACUUM else -1

    def render(self) -> str:
        return " ".join(_DISPLAY[s] for s in self.sectors)


def count_paths(num_sigma: int, parity: int) -> int:
    """2^(num_sigma/2 - 1): each odd step branches, the last is forced."""
    if num_sigma < 2 or num_sigma % 2:
        raise ValueError("need an even number (>= 2) of sigma anyons")
    if parity not in (1, -1):
        raise ValueError("parity must be +1 or -1")
    return 2 ** (num_sigma // 2 - 1)


def enumerate_paths(num_sigma: int, parity: int) -> list[FusionPath]:
    """All Bratteli walks over num_sigma anyons ending at I (+) or p (-)."""
    if num_sigma < 2 or num_sigma % 2:
        raise ValueError("need an even number (>= 2) of sigma anyons")
    if parity not in (1, -1):
        raise ValueError("parity must be +1 or -1")
    pairs = num_sigma // 2
    final = VACUUM if parity == 1 else FERMION
    out = []
    for mids in product((VACUUM, FERMION), repeat=pairs - 1):
        evens = list(mids) + [final]
        sectors = [VACUUM]
        for e in evens:
            sectors.append(SIGMA)
            sectors.append(e)
        out.append(FusionPath(tuple(sectors)))
    return out


@dataclass(frozen=True)
class FusionLabel:
    """Pair channels of n qubits plus the parity sector.

    channels[i] is the fusion channel of pair i+1 (+1 vacuum, -1 fermion);
    the inert channel c0 makes the total charge match the parity, so
    c0 = prod(channels) for parity +1 and -prod(channels) for parity -1.
    """

    channels: tuple[int, ...]
    parity: int = 1

    def __post_init__(self):
        if any(c not in (1, -1) for c in self.channels):
            raise ValueError("channels must be +1 or -1")
        if self.parity not in (1, -1):
            raise ValueError("parity must be +1 or -1")
        object.__setattr__(self, "channels", tuple(self.channels))

    @property
    def n_qubits(self) -> int:
        return len(self.channels)

    @property
    def inert_channel(self) -> int:
        c = 1
        for x in self.channels:
            c *= x
        return c * self.parity

    def sigma_string(self) -> str:
        """2n+2 signed sigma labels; a pair in channel c reads s+s+ for
        c = +1 and s+s- for c = -1."""
        parts = []
        for c in list(self.channels) + [self.inert_channel]:
            parts.append("σ+σ+" if c == 1 else "σ+σ-")
        return " ".join(parts)

    def to_index(self) -> int:
        """Big-endian basis index, channel +1 -> bit 0."""
        idx = 0
        for c in self.channels:
            idx = 2 * idx + (0 if c == 1 else 1)
        return idx

    @classmethod
    def from_index(cls, n: int, index: int, parity: int = 1) -> FusionLabel:
        if not 0 <= index < 2 ** n:
            raise IndexError("index out of range")
        channels = tuple(1 if not (index >> (n - 1 - q)) & 1 else -1
                         for q in range(n))
        return cls(channels, parity)

    def to_path(self) -> FusionPath:
        sectors = [VACUUM]
        charge = 1
        for c in list(self.channels) + [self.inert_channel]:
            charge *= c
            sectors.append(SIGMA)
            sectors.append(VACUUM if charge == 1 else FERMION)
        return FusionPath(tuple(sectors))

    @classmethod
    def from_path(cls, path: FusionPath) -> FusionLabel:
        if path.num_sigma < 4:
            raise ValueError("need at least two pairs (one qubit plus inert)")
        evens = [path.sectors[2 * i] for i in range(1, path.num_sigma // 2 + 1)]
        charges = [1 if s == VACUUM else -1 for s in evens]
        channels = []
        prev = 1
        for c in charges:
            channels.append(c * prev)
            prev = c
        return cls(tuple(channels[:-1]), path.parity)

    def to_json_dict(self) -> dict:
        return {
            "channels": list(self.channels),
            "parity": "+" if self.parity == 1 else "-",
            "inert_channel": self.inert_channel,
            "index": self.to_index(),
            "sigma_string": self.sigma_string(),
        }
