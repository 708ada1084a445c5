"""Exact discharging with the two fixed rules.

Every vertex starts with charge equal to its degree. Under R1 each 3-vertex
sends 1/4 to each adjacent 2-vertex; under R2 it sends 1/5. Transfers are kept
one by one so a ledger reads as a proof trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .density import average_degree, mad_exact
from .errors import InputError
from .graph import Graph, require_subcubic
from .reducibility import detect_reducible

RULES = {"R1": Fraction(1, 4), "R2": Fraction(1, 5)}
BOUNDS = {5: Fraction(9, 4), 6: Fraction(12, 5)}
RULE_FOR_K = {5: "R1", 6: "R2"}


@dataclass(frozen=True)
class ChargeLedger:
    rule: str
    initial: tuple[Fraction, ...]
    transfers: tuple[tuple[int, int, Fraction], ...]
    final: tuple[Fraction, ...]

    def conserved(self) -> bool:
        return sum(self.final, Fraction(0)) == sum(self.initial, Fraction(0))


def discharge(g: Graph, rule: str) -> ChargeLedger:
    if rule not in RULES:
        raise InputError(f"unknown rule {rule!r}; expected R1 or R2")
    require_subcubic(g)
    low = [v for v in range(g.n) if g.degree(v) < 2]
    if low:
        raise InputError(f"rules are defined only for minimum degree >= 2; vertex {low[0]} has degree {g.degree(low[0])}")
    amount = RULES[rule]
    initial = [Fraction(g.degree(v)) for v in range(g.n)]
    final = list(initial)
    transfers = []
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        for w in g.adj[v]:
            if g.degree(w) == 2:
                transfers.append((v, w, amount))
                final[v] -= amount
                final[w] += amount
    return ChargeLedger(rule, tuple(initial), tuple(transfers), tuple(final))


def min_final_charge(ledger: ChargeLedger) -> Fraction:
    if not ledger.final:
        return Fraction(0)
    return min(ledger.final)


@dataclass
class TheoremAudit:
    k: int
    applicable: bool
    reason: str
    min_charge: Fraction | None = None
    bound: Fraction | None = None
    mad: Fraction | None = None

    @property
    def bound_holds(self) -> bool:
        return not self.applicable or (self.min_charge is not None and self.min_charge >= self.bound)

    @property
    def consistent(self) -> bool:
        """The counting step agrees: a configuration-free graph cannot have mad below the bound."""
        if not self.applicable:
            return True
        return self.bound_holds and self.mad >= self.min_charge and not self.mad < self.bound


def audit_theorem(g: Graph, k: int) -> TheoremAudit:
    if k not in BOUNDS:
        raise InputError("audit is defined for k = 5 and k = 6")
    require_subcubic(g)
    bound = BOUNDS[k]
    if detect_reducible(g, k):
        return TheoremAudit(k, False, "not applicable: reducible configuration present", bound=bound)
    ledger = discharge(g, RULE_FOR_K[k])
    low = min_final_charge(ledger)
    mad = mad_exact(g)
    assert low <= average_degree(g) <= mad
    reason = "configuration-free"
    return TheoremAudit(k, True, reason, low, bound, mad)
