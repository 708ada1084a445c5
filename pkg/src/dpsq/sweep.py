"""Small-instance sweeps of the two main statements, and the sharpness probe.

``theorem_sweep`` checks DP-k-colourability of G^2 for every connected
subcubic graph G with n <= max_n and exact mad below the k-bound.
``tightness_report`` looks for a graph with mad exactly 9/4 whose square is
not DP-5-colourable, starting from the theta graph with three 2-threads,
under an explicitly declared cover budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .budget import Budget
from .density import mad_exact
from .discharging import BOUNDS
from .dp import clique_number, is_dp_k_colorable
from .enumeration import enumerate_subcubic
from .errors import BudgetError, InputError
from .formats import format_cover, format_graph
from .generators import theta
from .graph import Graph, square
from .oracles import chromatic_oracle


@dataclass
class SweepReport:
    k: int
    max_n: int
    bound: Fraction
    per_n: dict[int, tuple[int, int]] = field(default_factory=dict)
    counterexamples: list[Graph] = field(default_factory=list)
    budget_errors: list[Graph] = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(c for _, c in self.per_n.values())

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.budget_errors

    def lines(self) -> list[str]:
        out = [f"n={n} graphs={total} checked={c}" for n, (total, c) in sorted(self.per_n.items())]
        for g in self.counterexamples:
            out.append("COUNTEREXAMPLE " + format_graph(g).replace("\n", " ").strip())
        status = "OK" if self.ok else "FAIL"
        out.append(f"SWEEP k={self.k} max_n={self.max_n} mad<{self.bound} checked={self.checked} "
                   f"counterexamples={len(self.counterexamples)} budget_errors={len(self.budget_errors)} {status}")
        return out


def theorem_sweep(k: int, max_n: int, budget: Budget | None = None, limit: int = 10) -> SweepReport:
    if k not in BOUNDS:
        raise InputError("sweeps are defined for k = 5 and k = 6")
    bound = BOUNDS[k]
    report = SweepReport(k, max_n, bound)
    for n in range(1, max_n + 1):
        total = checked = 0
        for g in enumerate_subcubic(n, limit):
            total += 1
            if mad_exact(g) >= bound:
                continue
            checked += 1
            try:
                if not is_dp_k_colorable(square(g), k, budget):
                    report.counterexamples.append(g)
            except BudgetError:
                report.budget_errors.append(g)
        report.per_n[n] = (total, checked)
    return report


@dataclass
class TightnessReport:
    declared_covers: int
    scan_n: int
    k6_scan_n: int
    lines: list[str]
    witness: str | None
    exhausted: bool

    @property
    def complete(self) -> bool:
        return bool(self.lines) and self.lines[-1].startswith("OUTCOME ")


def tightness_report(scan_n: int = 10, k6_scan_n: int = 10, covers: int = 10**7) -> TightnessReport:
    """Search for a mad = 9/4 graph whose square is not DP-5-colourable.

    One cover budget is shared by every DP check in the report; spending it
    all is recorded as an outcome rather than raised.
    """
    if covers > 10**7:
        raise InputError("declared budget must stay at or below 10^7 covers")
    target = BOUNDS[5]
    remaining = covers
    lines = [f"DECLARED covers={covers}"]
    witness = None
    exhausted = False

    def check(g: Graph) -> bool | None:
        nonlocal remaining, exhausted, witness
        if remaining <= 0:
            exhausted = True
            return None
        try:
            verdict = is_dp_k_colorable(square(g), 5, Budget(covers=remaining))
        except BudgetError as exc:
            remaining -= exc.covered
            exhausted = True
            return None
        remaining -= verdict.covers_checked
        if not verdict.colorable and witness is None:
            witness = format_graph(g) + format_cover(verdict.witness)
        return verdict.colorable

    t = theta(2, 2, 2)
    sq = square(t)
    lines.append(f"THETA222 n={t.n} m={t.m} mad={mad_exact(t)} square_m={sq.m} "
                 f"square_clique={clique_number(sq)} square_chi={chromatic_oracle(sq)}")
    ok = check(t)
    lines.append(f"THETA222 dp5={'UNKNOWN' if ok is None else 'yes' if ok else 'NO'}")

    at_bound = colourable = 0
    for n in range(1, scan_n + 1):
        for g in enumerate_subcubic(n, max(scan_n, 10)):
            if mad_exact(g) != target:
                continue
            at_bound += 1
            if check(g):
                colourable += 1
    lines.append(f"SCAN mad=9/4 n<={scan_n} graphs={at_bound} dp5_colourable={colourable} "
                 f"covers_used={covers - remaining}")

    # smallest density seen among graphs whose square contains K6
    least = None
    for n in range(6, k6_scan_n + 1):
        for g in enumerate_subcubic(n, max(k6_scan_n, 10)):
            if clique_number(square(g)) >= 6:
                m = mad_exact(g)
                least = m if least is None or m < least else least
    lines.append(f"K6SCAN n<={k6_scan_n} least_mad_with_K6_in_square={least}")

    if witness is not None:
        outcome = "witness found"
    elif exhausted:
        outcome = "budget exhausted without witness"
    else:
        outcome = f"no witness with n<={scan_n}; budget not exhausted"
    lines.append(f"OUTCOME {outcome}")
    return TightnessReport(covers, scan_n, k6_scan_n, lines, witness, exhausted)
