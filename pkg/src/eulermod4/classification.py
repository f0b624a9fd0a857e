"""Mod-4 residue bookkeeping: class counts, cycle spectra, epsilon classes
and the Rosa-Golomb filter."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .cycles import (
    DEFAULT_CYCLE_CAP,
    CycleDecomposition,
    decomposition_census,
    peel_decomposition,
)
from .errors import (
    CycleBudgetExceeded,
    Disconnected,
    InconsistentCounts,
    NotEulerian,
)
from .graph import Graph, is_eulerian

ALL_RESIDUES = 0b1111


@dataclass(frozen=True)
class ClassCounts:
    """Per-residue cycle counts ``xi`` and edge sums ``qi`` of one decomposition."""

    xi: tuple[int, int, int, int]
    qi: tuple[int, int, int, int]

    @property
    def q(self) -> int:
        return sum(self.qi)

    @property
    def weighted(self) -> int:
        """xi1 + 2 xi2 + 3 xi3 (mod 4)."""
        return (self.xi[1] + 2 * self.xi[2] + 3 * self.xi[3]) % 4


def class_counts(d: CycleDecomposition) -> ClassCounts:
    xi = [0, 0, 0, 0]
    qi = [0, 0, 0, 0]
    for c in d:
        xi[c.residue] += 1
        qi[c.residue] += c.length
    return ClassCounts(tuple(xi), tuple(qi))


def verify_size_identity(q: int, c: ClassCounts) -> bool:
    return q % 4 == c.weighted


@dataclass(frozen=True)
class EpsilonClass:
    """Classification verdict.

    ``kind`` is one of ``not_euler``, ``trivial`` (K1: Eulerian, no cycles),
    ``single``, ``two`` or ``mixed``; ``residues`` is the sorted residue set.
    """

    kind: str
    residues: tuple[int, ...] = ()

    @classmethod
    def from_spectrum(cls, spectrum) -> "EpsilonClass":
        rs = tuple(sorted(spectrum))
        kind = {0: "trivial", 1: "single", 2: "two"}.get(len(rs), "mixed")
        return cls(kind, rs)

    @property
    def is_two_type(self) -> bool:
        return self.kind == "two"

    @property
    def pair(self) -> tuple[int, int]:
        if self.kind != "two":
            raise ValueError(f"{self.tag} is not a two-type class")
        return self.residues  # type: ignore[return-value]

    @property
    def tag(self) -> str:
        if self.kind == "two":
            return "e%d%d" % self.residues
        if self.kind == "single":
            return "single_%d" % self.residues[0]
        return self.kind


NOT_EULER = EpsilonClass("not_euler")


@dataclass(frozen=True)
class GracefulnessStatus:
    verdict: str  # "nongraceful" or "candidate"
    reason: str | None = None

    @property
    def nongraceful(self) -> bool:
        return self.verdict == "nongraceful"


def spectrum_mask(g: Graph, cap: int = DEFAULT_CYCLE_CAP, stop_mask: int = ALL_RESIDUES) -> int:
    """4-bit mask of cycle-length residues; bit i set iff some cycle has length = i mod 4."""
    indptr, indices = g.csr
    _f, _o, _count, mask, status = _kernels.cycle_dfs(indptr, indices, cap, False, stop_mask)
    if status == _kernels.CAP_EXCEEDED:
        raise CycleBudgetExceeded(f"{g} has more than {cap} simple cycles", cap)
    return int(mask)


@lru_cache(maxsize=4096)
def _spectrum(g: Graph, cap: int) -> frozenset[int]:
    mask = spectrum_mask(g, cap)
    return frozenset(i for i in range(4) if mask >> i & 1)


def cycle_spectrum(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> frozenset[int]:
    """{ s mod 4 : s the length of a simple cycle of g }."""
    if not g.connected:
        raise Disconnected(f"{g} is disconnected")
    return _spectrum(g, cap)


def epsilon_class(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> EpsilonClass:
    if not is_eulerian(g):
        return NOT_EULER
    return EpsilonClass.from_spectrum(cycle_spectrum(g, cap))


def rosa_golomb_status(g: Graph) -> GracefulnessStatus:
    """Nongraceful when floor((q+1)/2) is odd, i.e. q = 1 or 2 (mod 4)."""
    if not is_eulerian(g):
        raise NotEulerian(f"{g} is not Eulerian")
    if ((g.q + 1) // 2) % 2 == 1:
        return GracefulnessStatus("nongraceful", f"Rosa-Golomb: q = {g.q} = {g.q % 4} (mod 4)")
    return GracefulnessStatus("candidate")


CONJECTURE_NUMBER = {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 4, (1, 3): 5, (2, 3): 6}


def class_size_congruence(cls: EpsilonClass, c: ClassCounts) -> int:
    """q mod 4 as predicted from the two residue classes present.

    For e_ij only ``i*xi_i + j*xi_j`` contributes; counts in any other
    class are inconsistent with the verdict.
    """
    i, j = cls.pair
    stray = [k for k in range(4) if k not in (i, j) and c.xi[k]]
    if stray:
        raise InconsistentCounts(f"{cls.tag} decomposition has cycles of residue {stray}")
    return (i * c.xi[i] + j * c.xi[j]) % 4


def conjecture_predicate(cls: EpsilonClass, c: ClassCounts) -> bool:
    """True when the graph falls under the gracefulness conjecture for its class.

    Two per-class refinements that add divisibility conditions on the xi
    counts are left out: their conditions cannot be read unambiguously.
    """
    return class_size_congruence(cls, c) in (0, 3)


def decomposition_residue_sets(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> set[frozenset[int]]:
    """Residue sets realized by individual decompositions (diagnostic)."""
    return decomposition_census(g, cycle_cap).residue_sets()


def classify(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> dict:
    """The JSON classification verdict for one graph."""
    cls = epsilon_class(g, cap)
    if cls.kind == "not_euler":
        return {"class": cls.tag, "xi": None, "q_mod4": g.q % 4, "rosa_golomb": None, "conjecture": False}
    counts = class_counts(peel_decomposition(g))
    if not verify_size_identity(g.q, counts):  # pragma: no cover - internal invariant
        raise AssertionError(f"size identity fails on {g.to_graph6()}")
    return {
        "class": cls.tag,
        "xi": list(counts.xi),
        "q_mod4": g.q % 4,
        "rosa_golomb": rosa_golomb_status(g).verdict,
        "conjecture": cls.is_two_type and conjecture_predicate(cls, counts),
    }
