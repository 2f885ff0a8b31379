"""Dao numbers of monomial ideals.

d1 = d3 is computed exactly from the Dao module, whose k-th component is
(I m^{k+1} : m) / I m^k: d3 is one more than the last k with a nonzero
component, and a certified upper bound B limits the scan to k < B.

Fullness and m-fullness involve a generic linear form, so d2 (and the
optional d1 cross-check) sample linear forms with nonzero coefficients.
A positive verdict from one sample is a proof: the generic colon has the
smallest dimension in every degree, and (J : m) is contained in every
(J : x).  A negative verdict is a proof only when a dimension count forces
the kernel of multiplication by x to be too large for every x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import NamedTuple, Optional

import numpy as np

from . import linalg
from .betti import QQ, FieldConfig, multigraded_betti, regularity
from .bounds import Bounds, all_bounds
from .ideal import (
    MonomialIdeal,
    colon_ideal_by_m,
    contains_in_m_power_product,
    graded_dim,
    grlex_key,
    maximal_ideal,
    require_proper,
    socle_monomials,
    standard_monomials,
)
from .limits import check_deadline, check_enum
from .orders import DEFAULT_EXHAUSTIVE_CAP

COEFF_RANGE = 1 << 31


def is_weakly_m_full(J: MonomialIdeal) -> bool:
    """(J m : m) == J."""
    require_proper(J, "weak m-fullness")
    return colon_ideal_by_m(J.times_m(1)) == J


@dataclass(frozen=True)
class DaoModuleRow:
    k: int
    dim: int
    basis: tuple


@dataclass(frozen=True)
class DaoModuleTable:
    rows: tuple
    certified_bound: int  # rows cover 0 <= k < certified_bound

    def dims(self) -> list:
        return [r.dim for r in self.rows]


def dao_module_component(I: MonomialIdeal, k: int) -> DaoModuleRow:
    """Monomial basis of (I m^{k+1} : m) / I m^k.

    For such v and any t, some generator g divides x_t v with
    |v| + 1 - |g| >= k + 1 but g does not divide v (else v is in I m^k),
    which forces v[t] = g[t] - 1.  So the basis sits in the box
    0 <= v[t] <= deg_{x_t}(I) - 1 for every k.
    """
    require_proper(I, "Dao module")
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = I.ring.n
    deg = I.bounding_multidegree
    if min(deg) == 0:
        return DaoModuleRow(k, 0, ())
    check_enum(int(np.prod(deg)), "Dao module box")
    pts = np.indices(deg).reshape(n, -1).T
    pts = pts[pts.sum(axis=1) >= k + I.alpha]
    pts = pts[~contains_in_m_power_product(I, k, pts)]
    eye = np.eye(n, dtype=np.int64)
    for t in range(n):
        if not len(pts):
            break
        pts = pts[contains_in_m_power_product(I, k + 1, pts + eye[t])]
    basis = tuple(sorted((tuple(int(e) for e in v) for v in pts), key=grlex_key))
    return DaoModuleRow(k, len(basis), basis)


def certified_bound(I: MonomialIdeal, use_reg: bool = True, field: FieldConfig = QQ,
                    strategy: str = "auto", cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Bounds:
    """All upper bounds for d3; ``.value`` is their minimum."""
    return all_bounds(I, use_reg, field, strategy, cap)


def d3_exact(I: MonomialIdeal, bound: Optional[int] = None, **bound_kw):
    """(d3, table) with d3 = 1 + last k whose Dao module component is nonzero."""
    require_proper(I, "d3")
    if bound is None:
        bound = certified_bound(I, **bound_kw).value
    rows = []
    for k in range(bound):
        check_deadline()
        rows.append(dao_module_component(I, k))
    nonzero = [r.k for r in rows if r.dim]
    d3 = nonzero[-1] + 1 if nonzero else 0
    return d3, DaoModuleTable(tuple(rows), bound)


# -- generic linear forms ----------------------------------------------------

@dataclass(frozen=True)
class LinearFormSample:
    coeffs: tuple
    seed: int = 0
    key: int = 0
    trial: int = 0


def sample_linear_form(n: int, field: FieldConfig = QQ, seed: int = 0, key: int = 0, trial: int = 0) -> LinearFormSample:
    """Deterministic in (seed, key, trial); every coefficient is nonzero."""
    rng = random.Random(f"daonum:{seed}:{key}:{trial}")
    hi = COEFF_RANGE if field.p is None else field.p
    coeffs = []
    while len(coeffs) < n:
        c = rng.randrange(1, hi)
        if field.p is None or c % field.p:
            coeffs.append(c)
    return LinearFormSample(tuple(coeffs), seed, key, trial)


def _multiplication_kernel(J: MonomialIdeal, x: LinearFormSample, j: int, field: FieldConfig) -> int:
    """dim ker(x : (S/J)_j -> (S/J)_{j+1})."""
    src = standard_monomials(J, j)
    if not len(src):
        return 0
    tgt = standard_monomials(J, j + 1)
    if not len(tgt):
        return len(src)
    check_enum(len(src) * len(tgt), "multiplication matrix")
    index = {tuple(r): i for i, r in enumerate(tgt.tolist())}
    mat = [[0] * len(src) for _ in range(len(tgt))]
    for c, v in enumerate(src.tolist()):
        for t, coeff in enumerate(x.coeffs):
            v[t] += 1
            r = index.get(tuple(v))
            if r is not None:
                mat[r][c] = coeff
            v[t] -= 1
    return len(src) - linalg.rank(mat, field.p)


def colon_linear_form_dims(J: MonomialIdeal, x: LinearFormSample, j: int, field: FieldConfig = QQ) -> int:
    """dim (J : x)_j = dim J_j + dim ker(x on (S/J)_j)."""
    require_proper(J, "linear-form colon")
    return graded_dim(J, j) + _multiplication_kernel(J, x, j, field)


def _quotient_dim(J: MonomialIdeal, j: int) -> int:
    n = J.ring.n
    return comb(n + j - 1, n - 1) - graded_dim(J, j)


class Verdict(NamedTuple):
    value: bool
    certified: bool


def _colon_matches(source: MonomialIdeal, target_dims: list, trials: int, seed: int,
                   field: FieldConfig, key: int) -> bool:
    """Does some sampled x give dim (source : x)_j == target_dims[j] for all j?"""
    n = source.ring.n
    for trial in range(trials):
        x = sample_linear_form(n, field, seed, key, trial)
        ok = True
        for j, want in enumerate(target_dims):
            check_deadline()
            if colon_linear_form_dims(source, x, j, field) != want:
                ok = False
                break
        if ok:
            return True
    return False


def _kernel_forced(source: MonomialIdeal, target_dims: list) -> bool:
    """True when rank-nullity alone makes (source : x)_j too big for every x."""
    for j, want in enumerate(target_dims):
        forced = _quotient_dim(source, j) - _quotient_dim(source, j + 1)
        if graded_dim(source, j) + forced > want:
            return True
    return False


def is_full_randomized(J: MonomialIdeal, trials: int = 3, seed: int = 0, field: FieldConfig = QQ,
                       key: int = 0) -> Verdict:
    """Is (J : x) == (J : m) for a generic linear form x?

    Both colons agree with J in degrees >= reg(J) (they sit inside the
    m-torsion of S/J), so only lower degrees are compared.
    """
    require_proper(J, "fullness")
    cutoff = regularity(J, field).reg
    M = colon_ideal_by_m(J)
    target = [graded_dim(M, j) for j in range(cutoff)]
    if _colon_matches(J, target, trials, seed, field, key):
        return Verdict(True, True)
    return Verdict(False, _kernel_forced(J, target))


def is_m_full_randomized(J: MonomialIdeal, trials: int = 3, seed: int = 0, field: FieldConfig = QQ,
                         key: int = 0) -> Verdict:
    """Is (J m : x) == J for a generic linear form x?"""
    require_proper(J, "m-fullness")
    Jm = J.times_m(1)
    cutoff = regularity(Jm, field).reg
    target = [graded_dim(J, j) for j in range(cutoff)]
    if _colon_matches(Jm, target, trials, seed, field, key):
        return Verdict(True, True)
    certified = not is_weakly_m_full(J) or _kernel_forced(Jm, target)
    return Verdict(False, certified)


class D2Result(NamedTuple):
    d2: int
    certified: bool
    scan: tuple  # ((k, Verdict), ...) from k = d3 - 1 downward


def d2_randomized(I: MonomialIdeal, d3: Optional[int] = None, trials: int = 3, seed: int = 0,
                  field: FieldConfig = QQ) -> D2Result:
    """Smallest l with I m^k full for every k >= l.

    Fullness for k >= d3 follows from d2 <= d3; the scan walks down from
    d3 - 1 and stops at the first ideal that is not full.
    """
    require_proper(I, "d2")
    if d3 is None:
        d3, _ = d3_exact(I, field=field)
    scan = []
    J = I.times_m(d3 - 1) if d3 > 0 else I
    for k in range(d3 - 1, -1, -1):
        check_deadline()
        if k < d3 - 1:
            J = I.times_m(k)
        v = is_full_randomized(J, trials, seed, field, key=k)
        scan.append((k, v))
        if not v.value:
            return D2Result(k + 1, v.certified, tuple(scan))
    return D2Result(0, True, tuple(scan))


def verify_d1(I: MonomialIdeal, d3: int, upto: int, trials: int = 3, seed: int = 0,
              field: FieldConfig = QQ) -> bool:
    """Re-derive d1 from m-fullness of I m^k for k in [d3 - 1, upto] and compare with d3."""
    for k in range(max(d3 - 1, 0), max(upto, d3) + 1):
        check_deadline()
        v = is_m_full_randomized(I.times_m(k), trials, seed, field, key=10_000 + k)
        expected = k >= d3
        if v.value != expected:
            return False
    return True


class LowerBoundCheck(NamedTuple):
    omega_surrogate: int
    holds: bool
    flags: tuple  # g(k) for k = 0..B


def generation_lower_bound_check(I: MonomialIdeal, d3: int, bound: int) -> LowerBoundCheck:
    """Compare (I m^{k+1} : m) with m (I m^k : m) for k = 0..bound.

    The colon module is generated in degrees <= 1 + (last k where the two
    differ); that number minus one must not exceed d3.
    """
    require_proper(I, "lower-bound check")
    m = maximal_ideal(I.ring)
    powers = [I]
    for _ in range(bound + 1):
        powers.append(powers[-1].times_m(1))
    colons = [colon_ideal_by_m(P) for P in powers]
    flags = []
    for k in range(bound + 1):
        check_deadline()
        flags.append(colons[k + 1] == m * colons[k])
    failing = [k for k, f in enumerate(flags) if not f]
    omega = failing[-1] + 1 if failing else 0
    return LowerBoundCheck(omega, omega - 1 <= d3, tuple(flags))


class SocleCheck(NamedTuple):
    k: int
    betti: int  # beta_{n-1}(I m^{k+1})
    socle: int  # number of socle monomials of S / I m^{k+1}
    mu: int  # mu(I m^k)

    @property
    def holds(self) -> bool:
        return self.betti == self.mu and self.socle == self.mu


def socle_check(I: MonomialIdeal, k: int, field: FieldConfig = QQ) -> SocleCheck:
    require_proper(I, "socle check")
    J = I.times_m(k + 1)
    n = I.ring.n
    beta = multigraded_betti(J, field).betti(n - 1)
    return SocleCheck(k, beta, len(socle_monomials(J)), I.times_m(k).mu)


# -- report ------------------------------------------------------------------

@dataclass
class DaoReport:
    d1: Optional[int] = None
    d2: Optional[int] = None
    d3: Optional[int] = None
    d2_certified: Optional[bool] = None
    d1_verified: Optional[bool] = None
    dao_table: Optional[DaoModuleTable] = None
    bounds: Optional[Bounds] = None
    ci_closed_form: object = None
    lower_bound: Optional[LowerBoundCheck] = None
    trials: int = 3
    seed: int = 0
    field: str = "QQ"
    timings: dict = dc_field(default_factory=dict)
    incomplete: list = dc_field(default_factory=list)
