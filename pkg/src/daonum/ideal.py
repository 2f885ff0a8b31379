"""Monomial ideals over integer exponent vectors.

A monomial is a tuple of nonnegative ints (its exponent vector); an ideal
stores its minimal generating set in graded-lex order, so two ideals are
equal exactly when their generator tuples are.  Bulk membership queries go
through the *staircase*: a boolean array over the box ``0 <= v <= deg(J)``
marking the members of ``J``.  Since every generator lies in that box,
``v`` is in ``J`` iff ``min(v, deg(J))`` is.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from math import comb, prod
from typing import Iterable, Sequence

import numpy as np

from .errors import ContextMismatchError, ProperIdealError
from .limits import check_enum

Mono = tuple  # tuple[int, ...]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
# keeps broadcast temporaries (rows x gens x n) near this many cells
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class Ring:
    """Polynomial ring K[x_1..x_n]; only the variable names matter here."""

    var_names: tuple

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")

    @classmethod
    def of(cls, n: int) -> Ring:
        """x, y, z for n <= 3, otherwise x1..xn."""
        if n <= 3:
            return cls(("x", "y", "z")[:n])
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.var_names)

    def one(self) -> Mono:
        return (0,) * self.n

    def var(self, t: int) -> Mono:
        if not 0 <= t < self.n:
            raise IndexError(f"variable index {t} out of range for {self.n} variables")
        return tuple(int(i == t) for i in range(self.n))

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def check(self, u: Sequence[int]) -> Mono:
        u = tuple(int(e) for e in u)
        if len(u) != self.n:
            raise ContextMismatchError(f"exponent vector {u} has length {len(u)}, ring has {self.n} variables")
        if any(e < 0 for e in u):
            raise ValueError(f"negative exponent in {u}")
        return u

    def format(self, u: Mono) -> str:
        parts = []
        for name, e in zip(self.var_names, u):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


# -- monomial helpers --------------------------------------------------------

def degree(u: Mono) -> int:
    return sum(u)


def support(u: Mono) -> tuple:
    return tuple(i for i, e in enumerate(u) if e > 0)


def divides(u: Mono, v: Mono) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_lcm(u: Mono, v: Mono) -> Mono:
    return tuple(max(a, b) for a, b in zip(u, v))


def mono_gcd(u: Mono, v: Mono) -> Mono:
    return tuple(min(a, b) for a, b in zip(u, v))


def mono_colon(u: Mono, v: Mono) -> Mono:
    """u : v = u / gcd(u, v)."""
    return tuple(max(a - b, 0) for a, b in zip(u, v))


def mono_mul(u: Mono, v: Mono) -> Mono:
    return tuple(a + b for a, b in zip(u, v))


def is_squarefree(u: Mono) -> bool:
    return all(e <= 1 for e in u)


def grlex_key(u: Mono):
    """Total degree first, then lexicographically largest exponent vector."""
    return (sum(u), tuple(-e for e in u))


@lru_cache(maxsize=256)
def _monomials_of_degree(n: int, j: int) -> np.ndarray:
    rows = []

    def rec(prefix, left, slots):
        if slots == 1:
            rows.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)

    rec((), j, n)
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    arr.setflags(write=False)
    return arr


def monomials_of_degree(n: int, j: int) -> np.ndarray:
    """All degree-j exponent vectors in n variables, graded-lex order, as an array."""
    if j < 0:
        return np.zeros((0, n), dtype=np.int64)
    check_enum(comb(n + j - 1, n - 1), f"monomials of degree {j} in {n} variables")
    return _monomials_of_degree(n, j)


def _minimal_rows(A: np.ndarray, n: int) -> np.ndarray:
    """Divisibility-minimal, deduplicated rows of A."""
    if len(A) == 0:
        return np.zeros((0, n), dtype=np.int64)
    A = np.unique(np.asarray(A, dtype=np.int64), axis=0)
    degs = A.sum(axis=1)
    kept = np.zeros((0, n), dtype=np.int64)
    for d in np.unique(degs):
        grp = A[degs == d]
        if len(kept):
            step = max(1, _CHUNK_CELLS // (len(kept) * n))
            keep = np.empty(len(grp), dtype=bool)
            for s in range(0, len(grp), step):
                blk = grp[s:s + step]
                keep[s:s + step] = ~np.any(np.all(kept[None, :, :] <= blk[:, None, :], axis=2), axis=1)
            grp = grp[keep]
        # same-degree distinct rows never divide each other
        kept = np.concatenate([kept, grp])
    return kept


def _canonical(rows: np.ndarray) -> tuple:
    return tuple(sorted((tuple(int(e) for e in r) for r in rows), key=grlex_key))


class MonomialIdeal:
    """Ideal generated by monomials; immutable and hashable.

    ``MonomialIdeal(ring, gens)`` accepts any generating set and keeps the
    minimal one.  ``gens == ()`` is the zero ideal, ``gens == (1,)`` the unit ideal.
    """

    __slots__ = ("ring", "gens", "__dict__")

    def __init__(self, ring: Ring, gens: Iterable[Sequence[int]] = (), *, _minimal: bool = False):
        self.ring = ring
        if _minimal:
            self.gens = tuple(gens)
        else:
            rows = [ring.check(g) for g in gens]
            arr = np.array(rows, dtype=np.int64).reshape(len(rows), ring.n)
            self.gens = _canonical(_minimal_rows(arr, ring.n))

    @classmethod
    def _from_rows(cls, ring: Ring, rows: np.ndarray) -> MonomialIdeal:
        return cls(ring, _canonical(_minimal_rows(rows, ring.n)), _minimal=True)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        return "(" + ", ".join(self.ring.format(g) for g in self.gens) + ")"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u):
        return membership(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ring(self, other)
        return MonomialIdeal._from_rows(self.ring, np.concatenate([self.array, other.array]))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ring(self, other)
        a, b = self.array, other.array
        check_enum(len(a) * len(b), "ideal product")
        return MonomialIdeal._from_rows(self.ring, (a[:, None, :] + b[None, :, :]).reshape(-1, self.ring.n))

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (self.ring.one(),)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.gens, dtype=np.int64).reshape(len(self.gens), self.ring.n)
        arr.setflags(write=False)
        return arr

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def alpha(self) -> int:
        return min(map(sum, self.gens))

    @property
    def omega(self) -> int:
        return max(map(sum, self.gens))

    @cached_property
    def bounding_multidegree(self) -> Mono:
        if self.is_zero:
            return self.ring.one()
        return tuple(int(e) for e in self.array.max(axis=0))

    @property
    def lcm(self) -> Mono:
        return self.bounding_multidegree

    @cached_property
    def staircase(self) -> np.ndarray:
        """Boolean array over 0 <= v <= deg(J): True where x^v lies in J."""
        shape = tuple(d + 1 for d in self.bounding_multidegree)
        check_enum(prod(shape), "staircase box")
        up = np.zeros(shape, dtype=bool)
        if self.gens:
            up[tuple(self.array.T)] = True
            for axis in range(self.ring.n):
                np.logical_or.accumulate(up, axis=axis, out=up)
        up.setflags(write=False)
        return up

    def contains_array(self, points: np.ndarray) -> np.ndarray:
        """Vectorized membership for the rows of ``points``."""
        points = np.asarray(points, dtype=np.int64).reshape(-1, self.ring.n)
        if self.is_zero:
            return np.zeros(len(points), dtype=bool)
        clipped = np.minimum(points, np.array(self.bounding_multidegree))
        return self.staircase[tuple(clipped.T)]

    def times_m(self, k: int = 1) -> MonomialIdeal:
        return multiply_by_m_power(self, k)


def _same_ring(*ideals: MonomialIdeal) -> None:
    ring = ideals[0].ring
    for J in ideals[1:]:
        if J.ring != ring:
            raise ContextMismatchError("ideals live in different rings")


def require_proper(I: MonomialIdeal, what: str = "operation") -> None:
    if I.is_zero:
        raise ProperIdealError(f"{what} needs a nonzero ideal")
    if I.is_unit:
        raise ProperIdealError(f"{what} needs a proper ideal, got the unit ideal")


def maximal_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, [ring.var(t) for t in range(ring.n)])


def m_power(ring: Ring, d: int) -> MonomialIdeal:
    """The d-th power of the homogeneous maximal ideal."""
    return MonomialIdeal(ring, _monomials_of_degree(ring.n, d) if d >= 0 else (), _minimal=False)


# -- operations --------------------------------------------------------------

def minimalize(ring: Ring, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Ideal generated by ``gens`` with its minimal generating set."""
    return MonomialIdeal(ring, gens)


def multiply_by_m_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I * m^k, built one variable-multiplication step at a time."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = I.ring.n
    eye = np.eye(n, dtype=np.int64)
    rows = I.array
    for _ in range(k):
        check_enum(len(rows) * n, "generators of I*m^k")
        rows = _minimal_rows((rows[:, None, :] + eye[None, :, :]).reshape(-1, n), n)
    if k == 0:
        return I
    return MonomialIdeal(I.ring, _canonical(rows), _minimal=True)


def colon_monomial(J: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """(J : u), generated by g / gcd(g, u)."""
    u = J.ring.check(u)
    if J.is_zero:
        return J
    return MonomialIdeal._from_rows(J.ring, np.maximum(J.array - np.array(u), 0))


def colon_variable_rees(I: MonomialIdeal, k: int, t: int) -> MonomialIdeal:
    """(I m^{k+1} : x_t) through the closed form

        I m^k + (x^a / x_t : x^a in G(I), a[t] > 0) m^{k+1}

    which avoids building I m^{k+1} at all.
    """
    if not 0 <= t < I.ring.n:
        raise IndexError(f"variable index {t} out of range")
    base = multiply_by_m_power(I, k)
    lowered = [tuple(e - (i == t) for i, e in enumerate(g)) for g in I.gens if g[t] > 0]
    if not lowered:
        return base
    return base + multiply_by_m_power(MonomialIdeal(I.ring, lowered), k + 1)


def intersect(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    """J1 ∩ J2 from pairwise lcms of generators."""
    _same_ring(J1, J2)
    if J1.is_zero or J2.is_zero:
        return MonomialIdeal(J1.ring, ())
    a, b = J1.array, J2.array
    check_enum(len(a) * len(b), "pairwise lcms in intersection")
    lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, J1.ring.n)
    return MonomialIdeal._from_rows(J1.ring, lcms)


def colon_ideal_by_m(J: MonomialIdeal) -> MonomialIdeal:
    """(J : m) as the intersection of (J : x_t) over all variables."""
    ring = J.ring
    return reduce(intersect, (colon_monomial(J, ring.var(t)) for t in range(ring.n)))


def membership(J: MonomialIdeal, u: Sequence[int]) -> bool:
    u = tuple(u)
    if len(u) != J.ring.n:
        raise ContextMismatchError("monomial and ideal live in different rings")
    return any(divides(g, u) for g in J.gens)


def graded_dim(J: MonomialIdeal, j: int) -> int:
    """dim_K J_j, by enumerating every degree-j monomial."""
    if j < 0:
        return 0
    return int(J.contains_array(monomials_of_degree(J.ring.n, j)).sum())


def standard_monomials(J: MonomialIdeal, j: int) -> np.ndarray:
    """Degree-j monomials outside J (a basis of (S/J)_j), graded-lex order."""
    mons = monomials_of_degree(J.ring.n, j)
    return mons[~J.contains_array(mons)]


def socle_monomials(J: MonomialIdeal) -> list:
    """Monomials v outside J with x_t v in J for every t.

    Such v satisfies v[t] = g[t] - 1 for some generator g, so the search box
    is 0 <= v[t] <= deg_{x_t}(J) - 1.
    """
    require_proper(J, "socle computation")
    up = J.staircase
    n = J.ring.n
    inner = tuple(slice(0, d) for d in J.bounding_multidegree)
    mask = ~up[inner]
    for t in range(n):
        shifted = tuple(slice(1, d + 1) if i == t else slice(0, d) for i, d in enumerate(J.bounding_multidegree))
        mask &= up[shifted]
    return sorted((tuple(int(e) for e in v) for v in np.argwhere(mask)), key=grlex_key)


def contains_in_m_power_product(I: MonomialIdeal, k: int, points: np.ndarray) -> np.ndarray:
    """Vectorized membership in I m^k without building it.

    x^v lies in I m^k iff some generator g divides x^v with |v| - |g| >= k.
    """
    points = np.asarray(points, dtype=np.int64).reshape(-1, I.ring.n)
    if I.is_zero or len(points) == 0:
        return np.zeros(len(points), dtype=bool)
    G = I.array
    gdeg = G.sum(axis=1)
    pdeg = points.sum(axis=1)
    out = np.zeros(len(points), dtype=bool)
    step = max(1, _CHUNK_CELLS // (len(G) * I.ring.n))
    for s in range(0, len(points), step):
        blk = points[s:s + step]
        div = np.all(G[None, :, :] <= blk[:, None, :], axis=2)
        enough = (pdeg[s:s + step, None] - gdeg[None, :]) >= k
        out[s:s + step] = np.any(div & enough, axis=1)
    return out


@dataclass(frozen=True)
class StructureReport:
    mu: int
    alpha: int
    omega: int
    bounding_multidegree: tuple
    degree_excess: int  # |deg(I)| - n
    squarefree: bool
    support: tuple
    complete_intersection: bool
    equigenerated: bool


def structure_report(I: MonomialIdeal) -> StructureReport:
    if I.is_zero:
        raise ProperIdealError("structure report needs a nonzero ideal")
    deg = I.bounding_multidegree
    supports = [set(support(g)) for g in I.gens]
    ci = all(not (supports[i] & supports[j]) for i in range(len(supports)) for j in range(i))
    return StructureReport(
        mu=I.mu,
        alpha=I.alpha,
        omega=I.omega,
        bounding_multidegree=deg,
        degree_excess=sum(deg) - I.ring.n,
        squarefree=all(is_squarefree(g) for g in I.gens),
        support=tuple(sorted(set().union(*supports))),
        complete_intersection=ci,
        equigenerated=I.alpha == I.omega,
    )


def component_ideal(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """I_<j>: the ideal generated by the degree-j part of I."""
    n = I.ring.n
    blocks = [np.array(g)[None, :] + monomials_of_degree(n, j - sum(g)) for g in I.gens if sum(g) <= j]
    if not blocks:
        return MonomialIdeal(I.ring, ())
    rows = np.unique(np.concatenate(blocks), axis=0)
    return MonomialIdeal(I.ring, _canonical(rows), _minimal=True)
