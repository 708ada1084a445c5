"""Machine checks for the reducible configurations.

A configuration is a small graph R with some vertices marked as boundary
(attachments to the rest of a host graph G). To bound how many colours of an
internal vertex v survive once G - R is coloured, R is embedded in a
worst-case host: every boundary vertex becomes a 3-vertex whose missing
neighbours are fresh external vertices. Then

    ext2(v) = #{ w outside R's internal part : dist_host(v, w) <= 2 }
    s(v)    = max(0, k - ext2(v))

and R is reducible when every cover of the internal square with fibre sizes
s admits a transversal. That is certified either by a greedy order (each
vertex has fewer earlier square-neighbours than colours) or by the
adversarial search in ``dp``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .budget import Budget
from .dp import Cover, all_covers_have_transversal
from .errors import BudgetError, InputError
from .generators import Marked, complete, face, lemma5, lemma6, pendant
from .graph import Graph, build_graph, find_threads, require_subcubic, square, y_profile
from .iso import is_isomorphic

SUBCUBIC_SQUARE_DEGREE = 9


@dataclass(frozen=True)
class Configuration:
    r: Graph
    internal: tuple[int, ...]
    ext2: tuple[int, ...]
    k: int
    internal_square: Graph = field(repr=False)

    def residual_sizes(self) -> tuple[int, ...]:
        return residual_sizes(self)


def worst_case_host(marked: Marked) -> Graph:
    """Pad each boundary vertex up to degree 3 with fresh external leaves."""
    g = marked.graph
    edges = g.edges()
    n = g.n
    for b in sorted(marked.boundary):
        for _ in range(3 - g.degree(b)):
            edges.append((b, n))
            n += 1
    return build_graph(n, edges)


def merge_boundary(marked: Marked) -> Marked | None:
    """Identify all boundary vertices into one, if that stays simple and subcubic."""
    boundary = sorted(marked.boundary)
    if len(boundary) < 2:
        return None
    g = marked.graph
    hub = boundary[0]
    attach = [w for b in boundary for w in g.adj[b]]
    if len(set(attach)) != len(attach) or len(attach) > 3 or set(attach) & set(boundary):
        return None
    keep = [v for v in range(g.n) if v not in boundary[1:]]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[hub if v in boundary else v]) for v in boundary for u in g.adj[v]]
    edges += [(index[u], index[v]) for u, v in g.edges() if u not in boundary and v not in boundary]
    return Marked(build_graph(len(keep), edges), frozenset({index[hub]}))


def make_configuration(marked: Marked, k: int, ext2_override: Mapping[int, int] | None = None) -> Configuration:
    host = worst_case_host(marked)
    host_sq = square(host)
    internal = marked.internal
    inside = set(internal)
    ext2 = [sum(1 for w in host_sq.adj[v] if w not in inside) for v in internal]
    if ext2_override:
        for pos, v in enumerate(internal):
            if v in ext2_override:
                ext2[pos] = ext2_override[v]
    internal_sq = host_sq.induced(internal)
    for pos, v in enumerate(internal):
        if ext2[pos] < 0 or ext2[pos] + internal_sq.degree(pos) > SUBCUBIC_SQUARE_DEGREE:
            raise InputError(f"ext2 value {ext2[pos]} impossible for internal vertex {v}")
    return Configuration(marked.graph, internal, tuple(ext2), k, internal_sq)


def residual_sizes(cfg: Configuration) -> tuple[int, ...]:
    return tuple(max(0, cfg.k - e) for e in cfg.ext2)


def order_is_greedy(square_r: Graph, sizes: Sequence[int], order: Sequence[int]) -> bool:
    if sorted(order) != list(range(square_r.n)):
        return False
    placed = 0
    for v in order:
        if sizes[v] <= (square_r.masks[v] & placed).bit_count():
            return False
        placed |= 1 << v
    return True


def greedy_order_exists(square_r: Graph, sizes: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically first order in which greedy colouring cannot get stuck.

    Depth-first over prefixes, memoising prefix sets already known to be
    dead ends. Soundness: with s(v) above the number of earlier neighbours,
    v always has a colour left whatever the matchings are.
    """
    n = square_r.n
    full = (1 << n) - 1
    dead: set[int] = set()
    order: list[int] = []

    def rec(placed: int) -> bool:
        if placed == full:
            return True
        if placed in dead:
            return False
        for v in range(n):
            if placed >> v & 1:
                continue
            if sizes[v] > (square_r.masks[v] & placed).bit_count():
                order.append(v)
                if rec(placed | 1 << v):
                    return True
                order.pop()
        dead.add(placed)
        return False

    return tuple(order) if rec(0) else None


@dataclass
class CaseReport:
    name: str
    sizes: tuple[int, ...]
    status: str
    method: str
    order: tuple[int, ...] | None = None
    n_covers: int = 0
    witness: Cover | None = None
    stated_sizes_ok: bool | None = None
    stated_order_ok: bool | None = None


@dataclass
class LemmaReport:
    lemma_id: str
    status: str
    cases: list[CaseReport]
    iso: str | None = None
    labels: tuple[str, ...] = ()

    @property
    def n_covers(self) -> int:
        return sum(c.n_covers for c in self.cases)

    def certificate(self) -> str:
        parts = []
        for c in self.cases:
            if c.order is not None and c.method == "greedy":
                names = ",".join(self.labels[v] for v in c.order)
                parts.append(f"{c.name}:greedy[{names}]")
            else:
                parts.append(f"{c.name}:{c.method}")
        return ";".join(parts)

    def line(self) -> str:
        text = f"LEMMA {self.lemma_id} {self.status} n_covers={self.n_covers} certificate={self.certificate()}"
        if self.iso:
            text += f" iso={self.iso}"
        return text


def verify_reducible_exhaustive(cfg: Configuration, budget: Budget | None = None,
                                use_peel: bool = False, prune: bool = False) -> CaseReport:
    """Decide the configuration over all covers of its internal square.

    Peeling and the robust-colouring prune are off by default so the verdict
    does not lean on the same counting argument as the greedy certificate.
    """
    sizes = residual_sizes(cfg)
    try:
        verdict = all_covers_have_transversal(cfg.internal_square, sizes, budget,
                                              use_peel=use_peel, prune=prune)
    except BudgetError as exc:
        return CaseReport("exhaustive", sizes, "BUDGET", "exhaustive", n_covers=exc.covered)
    status = "VERIFIED" if verdict.colorable else "REFUTED"
    return CaseReport("exhaustive", sizes, status, "exhaustive", n_covers=verdict.covers_checked,
                      witness=verdict.witness)


@dataclass(frozen=True)
class LemmaSpec:
    k: int
    variants: tuple[tuple[str, Marked], ...]
    labels: tuple[str, ...]
    stated_order: tuple[str, ...] = ()
    stated_sizes: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    iso: tuple[str, Graph] | None = None
    exhaust: bool = False


def _with_merged(marked: Marked) -> tuple[tuple[str, Marked], ...]:
    variants = [("separate", marked)]
    merged = merge_boundary(marked)
    if merged is not None:
        variants.append(("shared", merged))
    return tuple(variants)


def lemma_ids(max_face: int = 8) -> list[str]:
    ids = ["mindeg"]
    ids += [f"face:{m}:{k}" for k in (5, 6) for m in range(3, max_face + 1)]
    ids += [f"5red:{i}" for i in range(1, 7)]
    ids += [f"6red:{i}" for i in range(1, 4)]
    return ids


def lemma_spec(lemma_id: str) -> LemmaSpec | list[LemmaSpec]:
    if lemma_id == "mindeg":
        return [LemmaSpec(k, (("k=%d" % k, pendant()),), ("v",)) for k in (5, 6)]
    if lemma_id.startswith("face:"):
        try:
            _, m_txt, k_txt = lemma_id.split(":")
            m, k = int(m_txt), int(k_txt)
        except ValueError:
            raise InputError(f"face lemma ids look like face:<m>:<k>, got {lemma_id!r}") from None
        if m < 3 or k < 1:
            raise InputError("face lemma needs m >= 3 and k >= 1")
        labels = tuple(f"v{i}" for i in range(1, m + 1))
        order = ("v1", "v2", f"v{m}") + tuple(f"v{i}" for i in range(3, m))
        return LemmaSpec(k, (("face", face(m)),), labels, order)
    specs = {
        "5red:1": LemmaSpec(5, _with_merged(lemma5(1)), ("v1", "v2", "v3"), ("v1", "v3", "v2"),
                            {"separate": (2, 3, 2), "shared": (3, 4, 3)}),
        "5red:2": LemmaSpec(5, _with_merged(lemma5(2)), ("v1", "v2", "v3", "v1'", "v2'"),
                            ("v1'", "v2'", "v1", "v2", "v3"), {"separate": (4, 4, 5, 2, 2)}),
        "5red:3": LemmaSpec(5, _with_merged(lemma5(3)), ("v1", "v2", "v3", "v4", "v1'", "v2'"),
                            ("v2'", "v1'", "v1", "v2", "v3", "v4"), {"separate": (4, 4, 5, 5, 2, 2)}),
        "5red:4": LemmaSpec(5, (("closed", lemma5(4)),), ("u", "v", "w1", "w2"),
                            iso=("K4", complete(4)), exhaust=True),
        "5red:5": LemmaSpec(5, (("closed", lemma5(5)),), tuple(f"v{i}" for i in range(1, 7)),
                            tuple(f"v{i}" for i in range(1, 7)), {"closed": (5,) * 6}),
        "5red:6": LemmaSpec(5, (("closed", lemma5(6)),), tuple(f"v{i}" for i in range(1, 6)),
                            iso=("K5", complete(5)), exhaust=True),
        "6red:1": LemmaSpec(6, _with_merged(lemma6(1)), ("v1", "v2"), ("v1", "v2"),
                            {"separate": (2, 2), "shared": (4, 4)}),
        "6red:2": LemmaSpec(6, _with_merged(lemma6(2)), ("v1", "v2", "v3", "v4"), ("v1", "v2"),
                            {"separate": (3, 4, 3, 4)}),
        "6red:3": LemmaSpec(6, (("closed", lemma6(3)),), ("v1", "v2", "u1", "u2", "u3"),
                            iso=("K5", complete(5)), exhaust=True),
    }
    if lemma_id not in specs:
        raise InputError(f"unknown lemma id {lemma_id!r}")
    return specs[lemma_id]


def _run_case(name: str, cfg: Configuration, spec: LemmaSpec, budget: Budget | None,
              exhaustive: bool) -> CaseReport:
    sizes = residual_sizes(cfg)
    order = greedy_order_exists(cfg.internal_square, sizes)
    stated_sizes = spec.stated_sizes.get(name)
    sizes_ok = None if stated_sizes is None else all(a >= b for a, b in zip(sizes, stated_sizes))
    stated_order_ok = None
    if spec.stated_order:
        where = {label: i for i, label in enumerate(spec.labels)}
        stated = [where[x] for x in spec.stated_order]
        stated_order_ok = order_is_greedy(cfg.internal_square, sizes, stated)
        if stated_order_ok:
            order = tuple(stated)
    if order is not None and not (spec.exhaust or exhaustive):
        case = CaseReport(name, sizes, "VERIFIED", "greedy", order)
    else:
        case = verify_reducible_exhaustive(cfg, budget)
        case.name = name
        case.order = order
        if order is not None and case.status == "VERIFIED":
            case.method = "greedy+exhaustive"
    case.stated_sizes_ok = sizes_ok
    case.stated_order_ok = stated_order_ok
    return case


def verify_lemma(lemma_id: str, budget: Budget | None = None,
                 ext2_override: Mapping[int, int] | None = None,
                 exhaustive: bool = False) -> LemmaReport:
    """Check one lemma in every host variant.

    Greedy certificates are tried first; the exhaustive search runs when no
    greedy order exists, for the isomorphism items, or when ``exhaustive``.
    """
    specs = lemma_spec(lemma_id)
    if not isinstance(specs, list):
        specs = [specs]
    cases = []
    iso_name = None
    for spec in specs:
        for name, marked in spec.variants:
            cfg = make_configuration(marked, spec.k, ext2_override)
            if spec.iso is not None:
                label, target = spec.iso
                if not is_isomorphic(cfg.internal_square, target):
                    cases.append(CaseReport(name, residual_sizes(cfg), "REFUTED", f"not-{label}"))
                    continue
                iso_name = label
            cases.append(_run_case(name, cfg, spec, budget, exhaustive))
    statuses = {c.status for c in cases}
    status = "REFUTED" if "REFUTED" in statuses else "BUDGET" if "BUDGET" in statuses else "VERIFIED"
    return LemmaReport(lemma_id, status, cases, iso_name, specs[0].labels)


# -- detection ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Occurrence:
    kind: str
    vertices: tuple[int, ...]


def _pattern(marked: Marked) -> tuple[Graph, list[int]]:
    """Internal part of a configuration plus each vertex's degree in the host."""
    internal = marked.internal
    return marked.graph.induced(internal), [marked.graph.degree(v) for v in internal]


def find_pattern(g: Graph, pattern: Graph, degrees: Sequence[int]) -> list[tuple[int, ...]]:
    """Induced embeddings of ``pattern`` whose images have the given g-degrees.

    Degree equality plus inducedness forces every remaining neighbour of an
    image vertex to lie outside the image, matching the boundary stubs.
    Results are deduplicated by vertex set.
    """
    order: list[int] = []
    for start in range(pattern.n):
        if start in order:
            continue
        order.append(start)
        i = len(order) - 1
        while i < len(order):
            for w in pattern.adj[order[i]]:
                if w not in order:
                    order.append(w)
            i += 1
    found: dict[frozenset[int], tuple[int, ...]] = {}
    image = [-1] * pattern.n
    used: set[int] = set()

    def rec(pos: int) -> None:
        if pos == len(order):
            found.setdefault(frozenset(image), tuple(image))
            return
        p = order[pos]
        for x in range(g.n):
            if x in used or g.degree(x) != degrees[p]:
                continue
            ok = True
            for q in order[:pos]:
                if pattern.has_edge(p, q) != g.has_edge(x, image[q]):
                    ok = False
                    break
            if ok:
                image[p] = x
                used.add(x)
                rec(pos + 1)
                used.discard(x)
                image[p] = -1

    rec(0)
    return sorted(found.values())


_PATTERNS = {
    5: [("5red:2", lemma5(2)), ("5red:3", lemma5(3)), ("5red:4", lemma5(4)),
        ("5red:5", lemma5(5)), ("5red:6", lemma5(6))],
    6: [("6red:2", lemma6(2)), ("6red:3", lemma6(3))],
}


def detect_reducible(g: Graph, k: int) -> list[Occurrence]:
    """All occurrences of the k-reducible configurations in g.

    Kinds: ``mindeg`` (degree <= 1), ``thread`` (3 consecutive 2-vertices
    for k=5, 2 for k=6), ``face`` (cycle through a single 3-vertex),
    ``2-regular`` (a cycle component, reducible since its square has maximum
    degree 4) and the lemma patterns by id.
    """
    if k not in (5, 6):
        raise InputError("detection is defined for k = 5 and k = 6")
    require_subcubic(g)
    found: list[Occurrence] = []
    for v in range(g.n):
        if g.degree(v) <= 1:
            found.append(Occurrence("mindeg", (v,)))
    window = 3 if k == 5 else 2
    for t in find_threads(g):
        verts = t.vertices
        if t.cyclic:
            found.append(Occurrence("2-regular", verts))
            if len(verts) > window:
                for i in range(len(verts)):
                    found.append(Occurrence(f"{window}-thread", tuple(verts[(i + j) % len(verts)] for j in range(window))))
            continue
        for i in range(len(verts) - window + 1):
            found.append(Occurrence(f"{window}-thread", verts[i:i + window]))
        if t.ends[0] == t.ends[1]:
            found.append(Occurrence("face", (t.ends[0],) + verts))
    for name, marked in _PATTERNS[k]:
        pattern, degrees = _pattern(marked)
        for image in find_pattern(g, pattern, degrees):
            found.append(Occurrence(name, image))
    return sorted(set(found))


# -- structure audit -----------------------------------------------------------


@dataclass
class StructureReport:
    k: int
    applicable: bool
    occurrences: int
    profiles: dict[int, tuple[int, int, int]]
    violations: list[tuple[int, tuple[int, int, int]]]

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_minimal_structure(g: Graph, k: int) -> StructureReport:
    occ = detect_reducible(g, k)
    if occ:
        return StructureReport(k, False, len(occ), {}, [])
    profiles = {v: y_profile(g, v).lengths for v in range(g.n) if g.degree(v) == 3}
    violations = []
    for v, prof in profiles.items():
        if k == 5:
            has_3_nbr = any(g.degree(w) == 3 for w in g.adj[v])
            if has_3_nbr:
                ok = prof[0] == 0 and prof[2] <= 2
                ok = ok and all(profiles[w][0] == 0 and profiles[w][2] <= 2
                                for w in g.adj[v] if g.degree(w) == 3)
            else:
                ok = prof[2] <= 2
        else:
            ok = prof == (1, 1, 1) or (prof[0] == 0 and prof[2] <= 1)
        if not ok:
            violations.append((v, prof))
    return StructureReport(k, True, 0, profiles, violations)
