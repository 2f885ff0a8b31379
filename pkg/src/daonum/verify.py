"""Canned instances with known Dao numbers and bounds, checked end to end."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .betti import QQ, FieldConfig
from .bounds import ci_dao_closed_form, degree_sum_bound, lin_quot_bound, multidegree_bound
from .dao import d2_randomized, d3_exact, is_full_randomized, is_m_full_randomized, socle_check
from .ideal import MonomialIdeal, Ring, m_power


@dataclass(frozen=True)
class CheckRow:
    group: str
    instance: str
    quantity: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


def pure_powers(ring: Ring, exps) -> MonomialIdeal:
    return MonomialIdeal(ring, [tuple(e if i == t else 0 for i in range(ring.n)) for t, e in enumerate(exps)])


def example_b() -> MonomialIdeal:
    """x1x2x3, x1x2x4, x1x2x5, x1x3x4, x1x3x5, x1x4x5 in five variables."""
    ring = Ring.of(5)
    supports = [(0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 4), (0, 3, 4)]
    return MonomialIdeal(ring, [tuple(int(i in s) for i in range(5)) for s in supports])


def _dao_rows(group, I, expected, trials, seed, field):
    d3, _ = d3_exact(I, field=field)
    d2 = d2_randomized(I, d3, trials, seed, field)
    rows = [
        CheckRow(group, str(I), "d1 (= d3)", expected, d3),
        CheckRow(group, str(I), "d3", expected, d3),
        CheckRow(group, str(I), "d2", expected, d2.d2),
        CheckRow(group, str(I), "full verdicts certified", True, all(v.certified for _, v in d2.scan if v.value)),
    ]
    return rows


def verify_paper(trials: int = 3, seed: int = 0, field: FieldConfig = QQ, corrupt: bool = False) -> list:
    """Every row compares an expected value with a computed one.

    ``corrupt`` deliberately perturbs one expected value so that the harness
    can be seen to fail.
    """
    rows = []

    R2 = Ring.of(2)
    for a in range(1, 7):
        I = pure_powers(R2, (a, a))
        g = "examples-a"
        rows += _dao_rows(g, I, a - 1, trials, seed, field)
        rows.append(CheckRow(g, str(I), "degree-sum bound", a - 1, degree_sum_bound(I)))
        rows.append(CheckRow(g, str(I), "multidegree bound", 2 * a - 2, multidegree_bound(I)))
        rows.append(CheckRow(g, str(I), "linear-quotient bound", a - 1, lin_quot_bound(I).value))

    I = example_b()
    g = "examples-b"
    rows += _dao_rows(g, I, 0, trials, seed, field)
    rows.append(CheckRow(g, str(I), "multidegree bound", 0, multidegree_bound(I)))
    rows.append(CheckRow(g, str(I), "degree-sum bound", 11 if corrupt else 10, degree_sum_bound(I)))

    for n in (2, 3, 4):
        ring = Ring.of(n)
        for d in range(1, 5):
            I = m_power(ring, d)
            g = "examples-c"
            rows += _dao_rows(g, I, 0, trials, seed, field)
            c = comb(n + d - 1, d)
            # printed value; it omits the -omega = -d term of the formula itself
            rows.append(CheckRow(g, f"m^{d}, n={n}", "degree-sum bound (printed)", (d - 1) * c + 1,
                                 degree_sum_bound(I)))
            rows.append(CheckRow(g, f"m^{d}, n={n}", "degree-sum bound (d*C+1-C-d)", d * c + 1 - c - d,
                                 degree_sum_bound(I)))
            rows.append(CheckRow(g, f"m^{d}, n={n}", "multidegree bound", (d - 1) * n, multidegree_bound(I)))
            if n <= 3:
                rows.append(CheckRow(g, f"m^{d}, n={n}", "full (certified)", (True, True),
                                     tuple(is_full_randomized(I, trials, seed, field))))
                rows.append(CheckRow(g, f"m^{d}, n={n}", "m-full (certified)", (True, True),
                                     tuple(is_m_full_randomized(I, trials, seed, field))))

    R3 = Ring.of(3)
    ci_cases = [
        (MonomialIdeal(R2, [(2, 0)]), "a", 0),
        (MonomialIdeal(R3, [(2, 1, 0), (0, 0, 3)]), "c", 0),
        (MonomialIdeal(R3, [(1, 1, 0), (0, 0, 2)]), "c", 0),
        (pure_powers(R2, (2, 3)), "b", 1),
        (pure_powers(R3, (2, 3, 4)), "b", 3),
        (pure_powers(R3, (4, 2, 3)), "b", 3),
        (pure_powers(Ring.of(4), (1, 2, 2, 3)), "b", 2),
    ]
    for I, case, value in ci_cases:
        g = "complete-intersections"
        cf = ci_dao_closed_form(I)
        rows.append(CheckRow(g, str(I), "closed-form case", case, cf.case if cf else None))
        d3, _ = d3_exact(I, field=field)
        rows.append(CheckRow(g, str(I), "d1 = d3", value, d3))
        if case != "b":
            rows.append(CheckRow(g, str(I), "d2", 0, d2_randomized(I, d3, trials, seed, field).d2))

    socle_cases = [pure_powers(R2, (3, 3)), MonomialIdeal(R3, [(2, 1, 0), (0, 1, 2)]), example_b(),
                   MonomialIdeal(R3, [(1, 1, 0), (0, 2, 1), (2, 0, 1)])]
    for I in socle_cases:
        k0 = max(sum(I.bounding_multidegree) - I.ring.n, 0)
        for k in (k0, k0 + 1):
            c = socle_check(I, k, field)
            g = "socle-corollary"
            rows.append(CheckRow(g, f"{I}, k={k}", "beta_{n-1}(I m^{k+1}) = mu(I m^k)", c.mu, c.betti))
            rows.append(CheckRow(g, f"{I}, k={k}", "socle size = mu(I m^k)", c.mu, c.socle))
    return rows


def render_rows(rows) -> str:
    lines = [f"{'result':<6} {'group':<22} {'instance':<40} {'quantity':<36} {'expected':>12} {'computed':>12}"]
    for r in rows:
        inst = r.instance if len(r.instance) <= 40 else r.instance[:37] + "..."
        lines.append(f"{'PASS' if r.passed else 'FAIL':<6} {r.group:<22} {inst:<40} {r.quantity:<36} "
                     f"{str(r.expected):>12} {str(r.computed):>12}")
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    return "\n".join(lines)


def rows_to_json(rows) -> list:
    return [{"group": r.group, "instance": r.instance, "quantity": r.quantity,
             "expected": r.expected, "computed": r.computed, "passed": r.passed} for r in rows]
