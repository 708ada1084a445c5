"""Correspondence (DP) colouring: covers, transversals, adversarial checks.

A cover assigns each vertex ``v`` a fibre of local colours ``0..size(v)-1``
and each edge ``uv`` a partial matching between the two fibres. A transversal
picks one colour per vertex so that no chosen pair is matched.

Deciding DP-k-colourability means showing that *every* cover with fibres of
size k has a transversal. Two engines are provided:

* ``enumerate`` walks all full matchings (identity on a spanning forest) in
  lexicographic order, aborting at the first transversal-free cover;
* ``guided`` (the default) grows covers pair by pair. Given a transversal T
  of the current partial cover, any completion that kills T must add a pair
  ``(T(u), T(v))`` on some still-open edge, so the search branches on which
  edge does it first. A leaf where no edge can kill T is safe for every
  completion; a partial cover without a transversal is a witness, since
  adding pairs only removes transversals. Branches are also closed early when
  a partial colouring exists that no completion of the branch can break and
  whose uncoloured remainder peels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .budget import Budget
from .errors import BudgetError, InvalidCoverError
from .graph import Graph

Pair = tuple[int, int]
Transversal = tuple[int, ...]

# effort cap for the robust-colouring prune; hitting it just means no prune
ROBUST_NODE_CAP = 400
ROBUST_MIN_CAP = 16


@dataclass(frozen=True)
class Cover:
    base: Graph
    sizes: tuple[int, ...]
    matchings: Mapping[tuple[int, int], frozenset[Pair]] = field(repr=False)

    def pairs(self, u: int, v: int) -> frozenset[Pair]:
        if u < v:
            return self.matchings.get((u, v), frozenset())
        return frozenset((j, i) for i, j in self.matchings.get((v, u), frozenset()))

    def is_transversal(self, choice: Sequence[int]) -> bool:
        if len(choice) != self.base.n:
            return False
        if any(not 0 <= c < s for c, s in zip(choice, self.sizes)):
            return False
        return all((choice[u], choice[v]) not in pairs for (u, v), pairs in self.matchings.items())

    def with_pairs_removed(self, removals: Mapping[tuple[int, int], Iterable[Pair]]) -> Cover:
        matchings = dict(self.matchings)
        for key, drop in removals.items():
            matchings[key] = matchings[key] - frozenset(drop)
        return Cover(self.base, self.sizes, matchings)


def build_cover(base: Graph, sizes: Sequence[int],
                matchings: Mapping[tuple[int, int], Iterable[Pair]]) -> Cover:
    if len(sizes) != base.n:
        raise InvalidCoverError(f"expected {base.n} list sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise InvalidCoverError("list sizes must be non-negative")
    normal: dict[tuple[int, int], frozenset[Pair]] = {}
    for (u, v), raw in matchings.items():
        if not (0 <= u < base.n and 0 <= v < base.n) or not base.has_edge(u, v):
            raise InvalidCoverError(f"matching given on non-edge ({u}, {v})")
        pairs = [(i, j) if u < v else (j, i) for i, j in raw]
        a, b = min(u, v), max(u, v)
        for i, j in pairs:
            if not (0 <= i < sizes[a] and 0 <= j < sizes[b]):
                raise InvalidCoverError(f"pair {i}:{j} out of range on edge ({a}, {b})")
        merged = set(normal.get((a, b), ())) | set(pairs)
        lefts = [i for i, _ in merged]
        rights = [j for _, j in merged]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise InvalidCoverError(f"pairs on edge ({a}, {b}) are not a matching")
        normal[(a, b)] = frozenset(merged)
    for e in base.edges():
        normal.setdefault(e, frozenset())
    return Cover(base, tuple(sizes), normal)


def identity_cover(base: Graph, lists: Sequence[Iterable[int]]) -> tuple[Cover, list[list[int]]]:
    """Cover whose transversals are exactly the proper list colourings.

    Local index ``i`` of vertex ``v`` stands for the i-th smallest colour of
    its list; the returned palettes translate indices back to colours.
    """
    palettes = [sorted(set(lst)) for lst in lists]
    matchings = {}
    for u, v in base.edges():
        where = {c: j for j, c in enumerate(palettes[v])}
        matchings[(u, v)] = [(i, where[c]) for i, c in enumerate(palettes[u]) if c in where]
    return build_cover(base, [len(p) for p in palettes], matchings), palettes


def _links(cover: Cover) -> list[list[tuple[int, list[int]]]]:
    links: list[list[tuple[int, list[int]]]] = [[] for _ in range(cover.base.n)]
    for (u, v), pairs in cover.matchings.items():
        fwd = [-1] * cover.sizes[u]
        bwd = [-1] * cover.sizes[v]
        for i, j in pairs:
            fwd[i] = j
            bwd[j] = i
        links[u].append((v, fwd))
        links[v].append((u, bwd))
    return links


def _search(sizes: Sequence[int], links: list[list[tuple[int, list[int]]]],
            node_cap: int) -> list[int] | None:
    """Backtracking transversal search over precomputed link arrays.

    Most-constrained vertex first (ties to the lowest index), colours in
    ascending order. Whenever every open vertex has more free colours than
    open neighbours, the rest is finished greedily, which cannot fail.
    """
    n = len(sizes)
    avail = [(1 << s) - 1 for s in sizes]
    if any(a == 0 for a in avail):
        return None
    choice = [-1] * n
    nodes = 0

    def greedy_safe() -> bool:
        for v in range(n):
            if choice[v] < 0:
                open_nbrs = sum(1 for w, _ in links[v] if choice[w] < 0)
                if avail[v].bit_count() <= open_nbrs:
                    return False
        return True

    def finish() -> None:
        for v in range(n):
            if choice[v] >= 0:
                continue
            a = avail[v]
            c = (a & -a).bit_length() - 1
            choice[v] = c
            for w, m in links[v]:
                if choice[w] < 0 and m[c] >= 0:
                    avail[w] &= ~(1 << m[c])

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise BudgetError(f"transversal search exceeded {node_cap} nodes", covered=nodes)
        v, best = -1, 1 << 30
        for u in range(n):
            if choice[u] < 0:
                cnt = avail[u].bit_count()
                if cnt < best:
                    v, best = u, cnt
        if v < 0:
            return True
        if greedy_safe():
            finish()
            return True
        a = avail[v]
        while a:
            c = (a & -a).bit_length() - 1
            a &= a - 1
            choice[v] = c
            changes = []
            dead = False
            for w, m in links[v]:
                if choice[w] < 0:
                    j = m[c]
                    if j >= 0 and avail[w] >> j & 1:
                        avail[w] &= ~(1 << j)
                        changes.append((w, j))
                        if not avail[w]:
                            dead = True
                            break
            if not dead and rec():
                return True
            for w, j in changes:
                avail[w] |= 1 << j
            choice[v] = -1
        return False

    return choice if rec() else None


def find_transversal(cover: Cover, node_cap: int | None = None) -> Transversal | None:
    cap = Budget.from_env().nodes if node_cap is None else node_cap
    found = _search(cover.sizes, _links(cover), cap)
    return None if found is None else tuple(found)


# -- adversarial search -----------------------------------------------------


def spanning_forest(g: Graph, sizes: Sequence[int], within: Iterable[int] | None = None) -> list[tuple[int, int]]:
    """BFS forest as (parent, child) pairs, each tree rooted at a smallest fibre."""
    allowed = set(range(g.n) if within is None else within)
    seen: set[int] = set()
    tree = []
    for root in sorted(allowed, key=lambda v: (sizes[v], v)):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    tree.append((u, w))
                    queue.append(w)
    return tree


def normalized_tree_edges(g: Graph, sizes: Sequence[int], within: Iterable[int] | None = None) -> dict[tuple[int, int], list[Pair]]:
    """Tree edges that may be fixed to the identity by relabelling the child.

    Only edges whose child fibre is at least as large as the parent's
    qualify: then a maximal matching saturates the parent fibre and the
    child's colours can be renamed to match it index for index.
    """
    fixed = {}
    for p, c in spanning_forest(g, sizes, within):
        if sizes[c] >= sizes[p]:
            key = (min(p, c), max(p, c))
            fixed[key] = [(i, i) for i in range(sizes[p])]
    return fixed


def peel(g: Graph, sizes: Sequence[int]) -> list[int]:
    """Vertices left after repeatedly removing any v with size(v) > degree.

    A removed vertex can always be coloured last, whatever the cover, so the
    whole graph is colourable for every cover iff the remainder is.
    """
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if sizes[v] > deg[v]:
                alive.remove(v)
                for w in g.adj[v]:
                    if w in alive:
                        deg[w] -= 1
                changed = True
    return sorted(alive)


def complete_matchings(base: Graph, sizes: Sequence[int],
                       partial: Mapping[tuple[int, int], Iterable[Pair]]) -> Cover:
    """Extend each edge's pairs to a maximal matching (lowest free indices first)."""
    full = {}
    for u, v in base.edges():
        pairs = set(partial.get((u, v), ()))
        used_l = {i for i, _ in pairs}
        used_r = {j for _, j in pairs}
        free_l = [i for i in range(sizes[u]) if i not in used_l]
        free_r = [j for j in range(sizes[v]) if j not in used_r]
        pairs.update(zip(free_l, free_r))
        full[(u, v)] = pairs
    return build_cover(base, sizes, full)


@dataclass
class SearchStats:
    covers: int = 0
    nodes: int = 0


@dataclass(frozen=True)
class DPVerdict:
    colorable: bool
    witness: Cover | None
    covers_checked: int
    core: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.colorable


class _Guided:
    def __init__(self, g: Graph, sizes: Sequence[int], vertices: Sequence[int],
                 budget: Budget, normalize: bool, prune: bool = True):
        self.g = g
        self.prune = prune
        self.sizes = list(sizes)
        self.vertices = list(vertices)
        self.budget = budget
        self.stats = SearchStats()
        inside = set(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.edges = [(u, v) for u, v in g.edges() if u in inside and v in inside]
        self.fwd = {e: [-1] * self.sizes[e[0]] for e in self.edges}
        self.bwd = {e: [-1] * self.sizes[e[1]] for e in self.edges}
        self.forbidden: dict[tuple[int, int], set[Pair]] = {e: set() for e in self.edges}
        self.links: list[list[tuple[int, list[int]]]] = [[] for _ in self.vertices]
        for e in self.edges:
            u, v = e
            self.links[self.index[u]].append((self.index[v], self.fwd[e]))
            self.links[self.index[v]].append((self.index[u], self.bwd[e]))
        self.local_sizes = [self.sizes[v] for v in self.vertices]
        # the prune halves its effort after each miss and resets on a hit
        self.robust_cap = ROBUST_NODE_CAP
        if normalize:
            for e, pairs in normalized_tree_edges(g, sizes, vertices).items():
                for i, j in pairs:
                    self._force(e, i, j)

    def _force(self, e: tuple[int, int], i: int, j: int) -> None:
        self.fwd[e][i] = j
        self.bwd[e][j] = i

    def _release(self, e: tuple[int, int], i: int, j: int) -> None:
        self.fwd[e][i] = -1
        self.bwd[e][j] = -1

    def _could_pair(self, e: tuple[int, int], i: int, j: int) -> bool:
        """Can some completion in this branch contain the pair (i, j) on e?"""
        f = self.fwd[e][i]
        if f >= 0:
            return f == j
        return self.bwd[e][j] < 0 and (i, j) not in self.forbidden[e]

    def robust(self) -> bool:
        """Look for a partial colouring that survives every completion.

        Chosen colours must be unpairable across their edges. An uncoloured
        vertex loses each colour forced onto it, plus one colour per open
        edge to a coloured neighbour (the adversary's best case). If the
        uncoloured rest then peels, every completion has a transversal.
        """
        n = len(self.vertices)
        nbrs = [[w for w, _ in self.links[i]] for i in range(n)]
        edge_of = {}
        for e in self.edges:
            a, b = self.index[e[0]], self.index[e[1]]
            edge_of[(a, b)] = (e, False)
            edge_of[(b, a)] = (e, True)
        color = [-1] * n
        nodes = 0

        def conflicts(a: int, ca: int, b: int, cb: int) -> bool:
            e, flipped = edge_of[(a, b)]
            return self._could_pair(e, cb, ca) if flipped else self._could_pair(e, ca, cb)

        def residual(v: int) -> int:
            lost = set()
            open_hits = 0
            for w in nbrs[v]:
                if color[w] < 0:
                    continue
                e, flipped = edge_of[(w, v)]
                m = self.bwd[e] if flipped else self.fwd[e]
                j = m[color[w]]
                if j >= 0:
                    lost.add(j)
                else:
                    open_hits += 1
            return self.local_sizes[v] - len(lost) - open_hits

        def peels() -> bool:
            alive = {v for v in range(n) if color[v] < 0}
            res = {v: residual(v) for v in alive}
            deg = {v: sum(1 for w in nbrs[v] if w in alive) for v in alive}
            progress = True
            while progress and alive:
                progress = False
                for v in sorted(alive):
                    if res[v] > deg[v]:
                        alive.discard(v)
                        for w in nbrs[v]:
                            if w in alive:
                                deg[w] -= 1
                        progress = True
            return not alive

        def rec() -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > cap:
                return False
            if peels():
                return True
            open_v = [v for v in range(n) if color[v] < 0]
            v = max(open_v, key=lambda u: (sum(1 for w in nbrs[u] if color[w] < 0), -u))
            for c in range(self.local_sizes[v]):
                if any(color[w] >= 0 and conflicts(w, color[w], v, c) for w in nbrs[v]):
                    continue
                color[v] = c
                if rec():
                    return True
                color[v] = -1
                if nodes > cap:
                    return False
            return False

        cap = self.robust_cap
        hit = rec()
        self.robust_cap = ROBUST_NODE_CAP if hit else max(ROBUST_MIN_CAP, cap // 2)
        return hit

    def partial_pairs(self) -> dict[tuple[int, int], list[Pair]]:
        return {e: [(i, j) for i, j in enumerate(self.fwd[e]) if j >= 0] for e in self.edges}

    def run(self) -> dict[tuple[int, int], list[Pair]] | None:
        self.stats.covers += 1
        if self.stats.covers > self.budget.covers:
            raise BudgetError(f"adversarial search exceeded {self.budget.covers} covers",
                              covered=self.stats.covers - 1)
        local = _search(self.local_sizes, self.links, self.budget.nodes)
        if local is None:
            return self.partial_pairs()
        if self.prune and self.robust():
            return None
        t = {v: local[self.index[v]] for v in self.vertices}
        hits = []
        for e in self.edges:
            u, v = e
            i, j = t[u], t[v]
            if self.fwd[e][i] < 0 and self.bwd[e][j] < 0 and (i, j) not in self.forbidden[e]:
                hits.append((e, i, j))
        blocked = []
        try:
            for e, i, j in hits:
                self._force(e, i, j)
                try:
                    found = self.run()
                finally:
                    self._release(e, i, j)
                if found is not None:
                    return found
                self.forbidden[e].add((i, j))
                blocked.append((e, i, j))
        finally:
            for e, i, j in blocked:
                self.forbidden[e].discard((i, j))
        return None


def all_covers_have_transversal(g: Graph, sizes: Sequence[int], budget: Budget | None = None,
                                method: str = "guided", normalize: bool = True,
                                use_peel: bool = True, prune: bool = True) -> DPVerdict:
    """Does every cover of ``g`` with these fibre sizes admit a transversal?"""
    budget = Budget.from_env() if budget is None else budget
    sizes = list(sizes)
    core = peel(g, sizes) if use_peel else list(range(g.n))
    if not core:
        return DPVerdict(True, None, 0, ())
    if method == "guided":
        search = _Guided(g, sizes, core, budget, normalize, prune)
        try:
            witness = search.run()
        except BudgetError as exc:
            exc.covered = search.stats.covers
            raise
        if witness is None:
            return DPVerdict(True, None, search.stats.covers, tuple(core))
        return DPVerdict(False, complete_matchings(g, sizes, witness), search.stats.covers, tuple(core))
    if method == "enumerate":
        checked = 0
        for cover in enumerate_covers(g, sizes, normalize, within=core):
            checked += 1
            if checked > budget.covers:
                raise BudgetError(f"cover enumeration exceeded {budget.covers} covers", covered=checked - 1)
            sub = _restrict(cover, core)
            if _search(sub.sizes, _links(sub), budget.nodes) is None:
                return DPVerdict(False, cover, checked, tuple(core))
        return DPVerdict(True, None, checked, tuple(core))
    raise ValueError(f"unknown method {method!r}")


def _restrict(cover: Cover, vertices: Sequence[int]) -> Cover:
    if len(vertices) == cover.base.n:
        return cover
    index = {v: i for i, v in enumerate(vertices)}
    sub = cover.base.induced(vertices)
    matchings = {(index[u], index[v]): pairs for (u, v), pairs in cover.matchings.items()
                 if u in index and v in index}
    return Cover(sub, tuple(cover.sizes[v] for v in vertices), matchings)


def _edge_options(a: int, b: int) -> list[frozenset[Pair]]:
    """All maximal matchings between fibres of sizes a and b."""
    if a <= b:
        return [frozenset(enumerate(img)) for img in permutations(range(b), a)]
    return [frozenset((i, j) for j, i in enumerate(img)) for img in permutations(range(a), b)]


def enumerate_covers(g: Graph, sizes: Sequence[int], normalize: bool = True,
                     within: Sequence[int] | None = None) -> Iterator[Cover]:
    """Every cover with maximal matchings on all edges, lexicographically.

    With ``normalize`` the qualifying spanning-forest edges are pinned to the
    identity. Edges leaving ``within`` get the identity matching.
    """
    inside = set(range(g.n) if within is None else within)
    fixed = normalized_tree_edges(g, sizes, inside) if normalize else {}
    edges = g.edges()
    options = []
    for u, v in edges:
        if u not in inside or v not in inside:
            options.append([frozenset((i, i) for i in range(min(sizes[u], sizes[v])))])
        elif (u, v) in fixed:
            options.append([frozenset(fixed[(u, v)])])
        else:
            options.append(_edge_options(sizes[u], sizes[v]))
    for combo in product(*options):
        yield Cover(g, tuple(sizes), dict(zip(edges, combo)))


def clique_number(g: Graph) -> int:
    best = 0

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            grow(size + 1, candidates & g.masks[v])

    grow(0, (1 << g.n) - 1)
    return best


def is_dp_k_colorable(g: Graph, k: int, budget: Budget | None = None,
                      method: str = "guided") -> DPVerdict:
    if g.n == 0:
        return DPVerdict(True, None, 0)
    if k <= 0:
        return DPVerdict(False, build_cover(g, [0] * g.n, {}), 0)
    if clique_number(g) > k:
        # the identity cover is ordinary k-colouring, impossible here
        cover, _ = identity_cover(g, [range(k)] * g.n)
        return DPVerdict(False, cover, 1)
    return all_covers_have_transversal(g, [k] * g.n, budget, method)


def dp_chromatic(g: Graph, budget: Budget | None = None) -> int:
    if g.n == 0:
        return 0
    lo = max(1, clique_number(g))
    hi = g.max_degree() + 1
    for k in range(lo, hi):
        try:
            if is_dp_k_colorable(g, k, budget):
                return k
        except BudgetError as exc:
            raise BudgetError(f"budget exhausted deciding k={k}; value lies in [{k}, {hi}]",
                              covered=exc.covered, bracket=(k, hi)) from exc
    return hi
