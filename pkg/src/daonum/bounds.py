"""Combinatorial upper bounds for the Dao numbers of a monomial ideal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .betti import QQ, FieldConfig, regularity
from .ideal import MonomialIdeal, require_proper, structure_report, support
from .orders import (
    DEFAULT_EXHAUSTIVE_CAP,
    GeneratorOrder,
    heuristic_orders,
    lambda_profile,
    min_max_lambda,
)


@dataclass(frozen=True)
class LinQuotBound:
    value: int
    order: GeneratorOrder
    exhaustive: bool  # False: min over heuristic orders only (still a valid bound)


def lin_quot_bound(I: MonomialIdeal, strategy: str = "auto", cap: int = DEFAULT_EXHAUSTIVE_CAP) -> LinQuotBound:
    """min over orders of max_u lambda(I, O, u).

    ``auto`` and ``exhaustive`` search every order when mu(I) <= cap and fall
    back to heuristic orders otherwise; ``heuristic`` never searches.
    """
    require_proper(I, "linear-quotient bound")
    if strategy not in ("auto", "exhaustive", "heuristic"):
        raise ValueError(f"unknown order strategy {strategy!r}")
    if strategy != "heuristic" and I.mu <= cap:
        value, order = min_max_lambda(I, cap)
        return LinQuotBound(value, order, True)
    scored = [(lambda_profile(I, o).max, o) for o in heuristic_orders(I)]
    value, order = min(scored, key=lambda s: s[0])
    return LinQuotBound(value, order, False)


def degree_sum_bound(I: MonomialIdeal) -> int:
    """(sum of generator degrees) + 1 - mu(I) - omega(I)."""
    require_proper(I, "degree-sum bound")
    return sum(map(sum, I.gens)) + 1 - I.mu - I.omega


def multidegree_bound(I: MonomialIdeal) -> int:
    """max(|deg(I)| - n, 0) for the bounding multidegree deg(I)."""
    require_proper(I, "multidegree bound")
    return max(structure_report(I).degree_excess, 0)


def equigenerated_reg_bound(I: MonomialIdeal, field: FieldConfig = QQ) -> Optional[int]:
    """reg(I) - alpha(I) when I is generated in one degree, else None."""
    require_proper(I, "regularity bound")
    if I.alpha != I.omega:
        return None
    return regularity(I, field).reg - I.alpha


@dataclass(frozen=True)
class CIClosedForm:
    case: str  # "a", "b" or "c"
    d1: int
    d2: Optional[int]  # unknown in case (b)
    d3: int


def ci_dao_closed_form(I: MonomialIdeal) -> Optional[CIClosedForm]:
    """Dao numbers of a monomial complete intersection, or None for non-CIs.

    (a) generators miss a variable: all zero.
    (b) pure powers x_i^{a_i} of every variable, a_1 <= ... <= a_n:
        d1 = d3 = a_1 + ... + a_{n-1} - (n - 1); d2 is not determined.
    (c) every variable used and some generator is not a pure power: all zero.
    """
    require_proper(I, "complete-intersection closed form")
    info = structure_report(I)
    if not info.complete_intersection:
        return None
    n = I.ring.n
    if len(info.support) != n:
        return CIClosedForm("a", 0, 0, 0)
    if all(len(support(u)) == 1 for u in I.gens):
        exps = sorted(max(u) for u in I.gens)
        d = sum(exps[:-1]) - (n - 1)
        return CIClosedForm("b", d, None, d)
    return CIClosedForm("c", 0, 0, 0)


@dataclass(frozen=True)
class Bounds:
    lin_quot: LinQuotBound
    degree_sum: int
    multidegree: int
    equigenerated_reg: Optional[int]

    @property
    def value(self) -> int:
        vals = [self.lin_quot.value, self.degree_sum, self.multidegree]
        if self.equigenerated_reg is not None:
            vals.append(self.equigenerated_reg)
        return max(min(vals), 0)

    def as_dict(self) -> dict:
        return {
            "lin_quot": self.lin_quot.value,
            "lin_quot_exhaustive": self.lin_quot.exhaustive,
            "degree_sum": self.degree_sum,
            "multidegree": self.multidegree,
            "equigenerated_reg": self.equigenerated_reg,
            "certified": self.value,
        }


def all_bounds(I: MonomialIdeal, use_reg: bool = True, field: FieldConfig = QQ,
               strategy: str = "auto", cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Bounds:
    return Bounds(
        lin_quot=lin_quot_bound(I, strategy, cap),
        degree_sum=degree_sum_bound(I),
        multidegree=multidegree_bound(I),
        equigenerated_reg=equigenerated_reg_bound(I, field) if use_reg else None,
    )
