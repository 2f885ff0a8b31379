"""Generator orders, their lambda profiles, and linear-quotient searches.

For an order u_1 < ... < u_m of G(I), the colon (u_1..u_{i-1}) : u_i is
generated by the monomials u_j : u_i.  Its lambda value is the sum of
(deg w - 1) over the minimal generators w; an order has linear quotients
exactly when every lambda value is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import CapExceededError
from .ideal import MonomialIdeal, _canonical, _minimal_rows, grlex_key, multiply_by_m_power
from .limits import check_deadline

DEFAULT_EXHAUSTIVE_CAP = 8


@dataclass(frozen=True)
class GeneratorOrder:
    """A permutation of G(I), listed from smallest to largest."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(tuple(u) for u in self.order))

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)

    def validate(self, I: MonomialIdeal) -> None:
        if sorted(self.order) != sorted(I.gens) or len(set(self.order)) != len(self.order):
            raise ValueError("order is not a permutation of the minimal generators")


@dataclass(frozen=True)
class LambdaProfile:
    values: tuple  # lambda of each generator, in order position
    witnesses: tuple  # minimal colon generators per position

    @property
    def max(self) -> int:
        return max(self.values, default=0)

    @property
    def linear_quotients(self) -> bool:
        return not any(self.values)


def colon_generators(prefix, u) -> tuple:
    """Minimal generators of (prefix) : u."""
    if not prefix:
        return ()
    n = len(u)
    rows = np.maximum(np.asarray(prefix, dtype=np.int64).reshape(-1, n) - np.asarray(u, dtype=np.int64), 0)
    return _canonical(_minimal_rows(rows, n))


def lambda_value(prefix, u) -> int:
    return sum(sum(w) - 1 for w in colon_generators(prefix, u))


def lambda_profile(I: MonomialIdeal, order: GeneratorOrder) -> LambdaProfile:
    order.validate(I)
    values, witnesses = [], []
    for i, u in enumerate(order.order):
        ws = colon_generators(order.order[:i], u)
        witnesses.append(ws)
        values.append(sum(sum(w) - 1 for w in ws))
    return LambdaProfile(tuple(values), tuple(witnesses))


def lift_order(I: MonomialIdeal, order: GeneratorOrder):
    """Order G(I m) by the key (i, j) of the product x_j u_i.

    Non-minimal products are dropped and a repeated product keeps its first
    key.  Returns ``(I*m, lifted_order)``.
    """
    order.validate(I)
    Im = multiply_by_m_power(I, 1)
    minimal = set(Im.gens)
    seen = set()
    lifted = []
    for u in order.order:
        for j in range(I.ring.n):
            c = tuple(e + (t == j) for t, e in enumerate(u))
            if c in minimal and c not in seen:
                seen.add(c)
                lifted.append(c)
    return Im, GeneratorOrder(tuple(lifted))


def lifted_parents(order: GeneratorOrder, lifted: GeneratorOrder, n: int) -> dict:
    """For each element of the lifted order, every position i with x_j u_i equal to it."""
    pos = {c: k for k, c in enumerate(lifted.order)}
    parents = {c: [] for c in lifted.order}
    for i, u in enumerate(order.order):
        for j in range(n):
            c = tuple(e + (t == j) for t, e in enumerate(u))
            if c in pos:
                parents[c].append(i)
    return parents


# -- heuristic orders --------------------------------------------------------

def degree_lex_order(I: MonomialIdeal) -> GeneratorOrder:
    return GeneratorOrder(I.gens)


def degree_revlex_order(I: MonomialIdeal) -> GeneratorOrder:
    return GeneratorOrder(sorted(I.gens, key=lambda u: (sum(u), tuple(reversed(u)))))


def greedy_order(I: MonomialIdeal) -> GeneratorOrder:
    """Repeatedly append the generator with the smallest lambda so far."""
    remaining = list(I.gens)
    chosen = []
    while remaining:
        check_deadline()
        best = min(remaining, key=lambda u: (lambda_value(chosen, u), grlex_key(u)))
        chosen.append(best)
        remaining.remove(best)
    return GeneratorOrder(tuple(chosen))


def heuristic_orders(I: MonomialIdeal) -> list:
    seen, out = set(), []
    for o in (degree_lex_order(I), degree_revlex_order(I), greedy_order(I)):
        if o.order not in seen:
            seen.add(o.order)
            out.append(o)
    return out


# -- exact searches ----------------------------------------------------------

def min_max_lambda(I: MonomialIdeal, cap: int = DEFAULT_EXHAUSTIVE_CAP):
    """Minimum over all orders of the maximal lambda value.

    lambda of u_i depends only on the *set* of earlier generators, so the
    search runs over subsets rather than permutations.  Returns the value and
    the lexicographically smallest (in graded-lex generator index) order
    attaining it.
    """
    gens = I.gens
    m = len(gens)
    if m > cap:
        raise CapExceededError(f"exhaustive order search needs mu(I) <= {cap}, got {m}")
    full = (1 << m) - 1

    @lru_cache(maxsize=None)
    def lam(mask, i):
        return lambda_value([gens[j] for j in range(m) if mask >> j & 1], gens[i])

    @lru_cache(maxsize=None)
    def rest(mask):
        # best achievable max lambda over the generators outside mask
        if mask == full:
            return 0
        check_deadline()
        return min(max(lam(mask, i), rest(mask | 1 << i)) for i in range(m) if not mask >> i & 1)

    best = rest(0)
    mask, order = 0, []
    while mask != full:
        for i in range(m):
            if not mask >> i & 1 and max(lam(mask, i), rest(mask | 1 << i)) <= best:
                order.append(gens[i])
                mask |= 1 << i
                break
    return best, GeneratorOrder(tuple(order))


def brute_force_min_max_lambda(I: MonomialIdeal) -> int:
    """Every permutation, evaluated independently; small inputs only."""
    from itertools import permutations

    if factorial(I.mu) > 50_000:
        raise CapExceededError("too many permutations for brute force")
    return min(lambda_profile(I, GeneratorOrder(p)).max for p in permutations(I.gens))


def find_linear_quotient_order(I: MonomialIdeal, strategy: str = "exhaustive", cap: int = 16):
    """An order with linear quotients, or None.

    ``exhaustive`` is a depth-first search over prefix sets and is decisive;
    ``greedy`` commits to the first admissible generator at each step.
    """
    gens = I.gens
    m = len(gens)

    def admissible(prefix, u):
        return all(sum(w) == 1 for w in colon_generators(prefix, u))

    if strategy == "greedy":
        for start in gens:
            chosen = [start]
            remaining = [g for g in gens if g != start]
            while remaining:
                nxt = next((u for u in remaining if admissible(chosen, u)), None)
                if nxt is None:
                    break
                chosen.append(nxt)
                remaining.remove(nxt)
            if not remaining:
                return GeneratorOrder(tuple(chosen))
        return None
    if strategy != "exhaustive":
        raise ValueError(f"unknown strategy {strategy!r}")
    if m > cap:
        raise CapExceededError(f"exhaustive linear-quotient search needs mu(I) <= {cap}, got {m}")

    dead = set()
    full = (1 << m) - 1

    def dfs(mask, chosen):
        if mask == full:
            return list(chosen)
        if mask in dead:
            return None
        check_deadline()
        for i in range(m):
            if not mask >> i & 1 and admissible(chosen, gens[i]):
                chosen.append(gens[i])
                found = dfs(mask | 1 << i, chosen)
                if found is not None:
                    return found
                chosen.pop()
        dead.add(mask)
        return None

    found = dfs(0, [])
    return None if found is None else GeneratorOrder(tuple(found))
