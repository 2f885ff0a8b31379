"""Multigraded Betti numbers, regularity and linearity predicates.

The main route uses the upper Koszul simplicial complex

    K^a(I) = { squarefree sigma : x^(a - sigma) in I },

with beta_{i,a}(I) = dim H~_{i-1}(K^a(I)).  An independent oracle computes
Koszul homology of S/I directly; the two are compared in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import prod
from typing import Optional

import numpy as np

from . import linalg
from .ideal import MonomialIdeal, component_ideal, require_proper
from .limits import check_deadline, check_enum
from .orders import find_linear_quotient_order


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldConfig:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def mode(self) -> str:
        return "exact-rationals" if self.p is None else "prime-field"

    @classmethod
    def parse(cls, text: str) -> FieldConfig:
        """``q`` for the rationals, ``p`` or ``p:<prime>`` for a prime field."""
        text = text.strip().lower()
        if text in ("q", "qq"):
            return cls()
        if text == "p":
            return cls(32003)
        if text.startswith("p:"):
            return cls(int(text[2:]))
        raise ValueError(f"unknown field {text!r}; use q or p:<prime>")

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = FieldConfig()


class SimplicialComplex:
    """Finite abstract simplicial complex given by its faces (sorted tuples).

    The void complex has no faces; ``{()}`` is the complex whose only face
    is the empty set.
    """

    def __init__(self, faces):
        self.faces = frozenset(tuple(sorted(f)) for f in faces)

    def __repr__(self):
        return f"SimplicialComplex({sorted(self.faces, key=lambda f: (len(f), f))})"

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def chain_dims(self) -> dict:
        dims = {}
        for f in self.faces:
            dims[len(f) - 1] = dims.get(len(f) - 1, 0) + 1
        return dims

    def boundary(self, d: int) -> list:
        """Matrix of the boundary map C_d -> C_{d-1} (rows index (d-1)-faces)."""
        src = sorted(f for f in self.faces if len(f) == d + 1)
        tgt = sorted(f for f in self.faces if len(f) == d)
        index = {f: r for r, f in enumerate(tgt)}
        mat = [[0] * len(src) for _ in tgt]
        for c, f in enumerate(src):
            for k in range(len(f)):
                mat[index[f[:k] + f[k + 1:]]][c] = (-1) ** k
        return mat

    def reduced_homology(self, field: FieldConfig = QQ) -> dict:
        """{d: dim H~_d}, nonzero entries only."""
        dims = self.chain_dims()
        if not dims:
            return {}
        top = max(dims)
        ranks = {d: linalg.rank(self.boundary(d), field.p) for d in range(0, top + 1)}
        out = {}
        for d in range(-1, top + 1):
            h = dims.get(d, 0) - ranks.get(d, 0) - ranks.get(d + 1, 0)
            if h:
                out[d] = h
        return out


def upper_koszul_complex(I: MonomialIdeal, a) -> SimplicialComplex:
    a = I.ring.check(a)
    supp = [t for t in range(I.ring.n) if a[t] > 0]
    faces = []
    for r in range(len(supp) + 1):
        for sigma in combinations(supp, r):
            b = list(a)
            for t in sigma:
                b[t] -= 1
            if any(all(g <= e for g, e in zip(gen, b)) for gen in I.gens):
                faces.append(sigma)
    return SimplicialComplex(faces)


@lru_cache(maxsize=65536)
def _homology_of_code(code: int, n: int, p) -> tuple:
    faces = [tuple(t for t in range(n) if s >> t & 1) for s in range(1 << n) if code >> s & 1]
    return tuple(sorted(SimplicialComplex(faces).reduced_homology(FieldConfig(p)).items()))


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,a}: (homological index, multidegree) -> dimension, nonzero only."""

    n: int
    entries: dict = dc_field(default_factory=dict)
    field: str = "QQ"

    def coarse(self) -> dict:
        out = {}
        for (i, a), v in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + v
        return out

    def betti(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def regularity(self):
        """(reg, (i, a)) with reg = max |a| - i; the witness is the first maximizer."""
        best = None
        for (i, a) in sorted(self.entries, key=lambda k: (k[0], sum(k[1]), k[1])):
            r = sum(a) - i
            if best is None or r > best[0]:
                best = (r, (i, a))
        return best

    def format(self) -> str:
        """Betti diagram: row r = j - i, column i."""
        coarse = self.coarse()
        if not coarse:
            return "(empty Betti table)"
        cols = range(0, max(i for i, _ in coarse) + 1)
        rows = sorted({j - i for i, j in coarse})
        width = max(len(str(v)) for v in coarse.values()) + 1
        width = max(width, max(len(str(i)) for i in cols) + 1)
        lines = ["     " + "".join(f"{i:>{width}}" for i in cols)]
        lines.append("total" + "".join(f"{sum(v for (k, _), v in coarse.items() if k == i):>{width}}" for i in cols))
        for r in range(rows[0], rows[-1] + 1):
            cells = "".join(f"{coarse.get((i, i + r), '.'):>{width}}" for i in cols)
            lines.append(f"{r:>4}:" + cells)
        return "\n".join(lines)


def _lcm_closed_points(I: MonomialIdeal) -> np.ndarray:
    """Box points a with a = lcm of the generators dividing x^a.

    At any other point some coordinate t has every generator below a also
    below a - e_t, which makes K^a a cone with apex t; those points carry no
    homology.
    """
    L = I.lcm
    n = I.ring.n
    shape = tuple(d + 1 for d in L)
    check_enum(prod(shape) * n, "multigraded Betti box")
    G = I.array
    keep = np.ones(shape, dtype=bool)
    grids = np.indices(shape, sparse=True)
    for t in range(n):
        best = np.full(shape, -1, dtype=np.int64)
        np.maximum.at(best, tuple(G.T), G[:, t])
        for axis in range(n):
            np.maximum.accumulate(best, axis=axis, out=best)
        keep &= best == grids[t]
    return np.argwhere(keep)


def multigraded_betti(I: MonomialIdeal, field: FieldConfig = QQ) -> BettiTable:
    """All nonzero beta_{i,a}(I) over the given field."""
    require_proper(I, "Betti numbers")
    n = I.ring.n
    A = _lcm_closed_points(I)
    check_deadline()
    codes = np.zeros(len(A), dtype=np.int64)
    for s in range(1 << n):
        sigma = np.array([(s >> t) & 1 for t in range(n)], dtype=np.int64)
        b = A - sigma
        ok = np.all(b >= 0, axis=1)
        ok[ok] = I.contains_array(b[ok])
        codes |= ok.astype(np.int64) << s
    entries = {}
    for code in np.unique(codes):
        check_deadline()
        hom = _homology_of_code(int(code), n, field.p)
        if not hom:
            continue
        for a in A[codes == code]:
            a = tuple(int(e) for e in a)
            for d, dim in hom:
                entries[(d + 1, a)] = dim
    return BettiTable(n, entries, str(field))


def koszul_homology(J: MonomialIdeal, field: FieldConfig = QQ) -> dict:
    """{(i, a): dim H_i(x_1..x_n; S/J)_a} over the box 0 <= a <= lcm(J).

    Plain graded linear algebra on the Koszul complex of S/J, one
    multidegree block at a time (the differential preserves multidegree).
    """
    require_proper(J, "Koszul homology")
    n = J.ring.n
    gens = J.gens

    def nonzero(b):
        return all(e >= 0 for e in b) and not any(all(g <= e for g, e in zip(gen, b)) for gen in gens)

    out = {}
    check_enum(prod(d + 1 for d in J.lcm), "Koszul oracle box")
    for a in np.ndindex(*(d + 1 for d in J.lcm)):
        check_deadline()
        supp = [t for t in range(n) if a[t] > 0]
        basis = {}
        for i in range(len(supp) + 1):
            basis[i] = []
            for sigma in combinations(supp, i):
                b = tuple(e - (t in sigma) for t, e in enumerate(a))
                if nonzero(b):
                    basis[i].append(sigma)
        ranks = {}
        for i in range(1, len(supp) + 1):
            src, tgt = basis[i], basis[i - 1]
            if not src or not tgt:
                ranks[i] = 0
                continue
            index = {s: r for r, s in enumerate(tgt)}
            mat = [[0] * len(src) for _ in tgt]
            for c, sigma in enumerate(src):
                for k, t in enumerate(sigma):
                    face = sigma[:k] + sigma[k + 1:]
                    if face in index:
                        mat[index[face]][c] = (-1) ** k
            ranks[i] = linalg.rank(mat, field.p)
        for i, b in basis.items():
            h = len(b) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if h:
                out[(i, a)] = h
    return out


def koszul_betti_oracle(I: MonomialIdeal, field: FieldConfig = QQ) -> BettiTable:
    """beta_{i,a}(I) = dim H_{i+1}(x; S/I)_a, for cross-validation only."""
    hom = koszul_homology(I, field)
    entries = {(i - 1, a): v for (i, a), v in hom.items() if i >= 1}
    return BettiTable(I.ring.n, entries, str(field))


@dataclass(frozen=True)
class RegularityReport:
    reg: int
    alpha: int
    omega: int
    is_linear: bool
    witness: tuple  # (i, a) attaining reg


def regularity(I: MonomialIdeal, field: FieldConfig = QQ) -> RegularityReport:
    table = multigraded_betti(I, field)
    reg, witness = table.regularity()
    alpha, omega = I.alpha, I.omega
    return RegularityReport(reg, alpha, omega, alpha == omega and reg == alpha, witness)


def is_componentwise_linear(I: MonomialIdeal, field: FieldConfig = QQ, full_range: bool = False) -> bool:
    """Every component I_<j> with alpha <= j <= omega has a linear resolution.

    Past omega, I_<j+1> = I_<j> m and linearity propagates, so that range
    decides; ``full_range`` also checks omega + 1.
    """
    require_proper(I, "componentwise linearity")
    top = I.omega + (1 if full_range else 0)
    for j in range(I.alpha, top + 1):
        comp = component_ideal(I, j)
        if comp.is_zero:
            continue
        if not regularity(comp, field).is_linear:
            return False
    return True


def has_linear_quotients(I: MonomialIdeal, strategy: str = "exhaustive", cap: int = 16):
    """An order of G(I) with linear quotients, or None if none was found."""
    require_proper(I, "linear quotients")
    return find_linear_quotient_order(I, strategy, cap)
