"""Carry-pair graphs: existence, minimal length, enumeration, isomorphism.

A palintiple with k + 1 digits is read from both ends at once.  Step j of a
walk moves from node (c_j, c_{k+1-j}) to (c_{j+1}, c_{k-j}) and fixes the
digit pair (d_j, d_{k-j}).  The two column equations at positions j and k - j

    b*a' - a = n*e - d
    b*s  - s' = n*d - e

determine the label uniquely:

    e = (b*s - s' + n*b*a' - n*a) / (n^2 - 1),   d = n*e - b*a' + a.

Walks start at (0, 0) and their first edge must have d >= 1 and e >= 1.
A walk of m steps spells a 2m-digit palintiple when it stops on a diagonal
node, and a (2m + 1)-digit one when the middle column closes, i.e. when
(b*s - a) / (n - 1) is a digit.

Only nodes reachable from the start are ever materialised unless the full
lattice is asked for explicitly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .digits import DigitString, PalintipleRecord, check_parameters, verify_palintiple


class Node(NamedTuple):
    a: int
    s: int

    def __str__(self) -> str:
        return f"{self.a},{self.s}"


class EdgeLabel(NamedTuple):
    d: int
    e: int

    def __str__(self) -> str:
        return f"{self.d}|{self.e}"


START = Node(0, 0)


def edge_digits(n: int, b: int, src: Node, dst: Node) -> EdgeLabel | None:
    a, s = src
    a2, s2 = dst
    num = b * s - s2 + n * b * a2 - n * a
    e, rem = divmod(num, n * n - 1)
    if rem or not 0 <= e < b:
        return None
    d = n * e - b * a2 + a
    if not 0 <= d < b:
        return None
    return EdgeLabel(d, e)


def _successors(n: int, b: int, node: Node) -> tuple[tuple[Node, EdgeLabel], ...]:
    # For each a', s' is the unique residue of b*s - n*a + n*b*a' mod n^2 - 1.
    m = n * n - 1
    a, s = node
    base = b * s - n * a
    step = n * b
    out = []
    for a2 in range(n):
        t = base + step * a2
        s2 = t % m
        if s2 >= n:
            continue
        e = (t - s2) // m
        if not 0 <= e < b:
            continue
        d = n * e - b * a2 + a
        if 0 <= d < b:
            out.append((Node(a2, s2), EdgeLabel(d, e)))
    return tuple(out)


def accept_odd(node: Node, n: int, b: int) -> int | None:
    """Middle digit closing an odd-length palintiple at ``node``, if any."""
    a, s = node
    mid, rem = divmod(b * s - a, n - 1)
    if rem or not 0 <= mid < b:
        return None
    return mid


def _is_first_label(label: EdgeLabel) -> bool:
    return label.d >= 1 and label.e >= 1


class CarryPairGraph:
    """Directed graph on carry pairs with digit-pair edge labels.

    Built from (n, b) alone the graph is the full n x n lattice and its
    successor lists are computed on demand.  Subgraphs (see ``trim_graph``)
    carry an explicit node set and adjacency.
    """

    def __init__(self, n: int, b: int, nodes=None, adjacency=None):
        check_parameters(n, b)
        self.n = n
        self.b = b
        self._nodes = None if nodes is None else tuple(sorted(nodes))
        self._adj: dict[Node, tuple[tuple[Node, EdgeLabel], ...]] = dict(adjacency or {})
        self._frozen = nodes is not None

    @property
    def start(self) -> Node:
        return START

    @property
    def nodes(self) -> tuple[Node, ...]:
        if self._nodes is None:
            return tuple(Node(a, s) for a in range(self.n) for s in range(self.n))
        return self._nodes

    def __contains__(self, node) -> bool:
        if self._nodes is None:
            return 0 <= node[0] < self.n and 0 <= node[1] < self.n
        return Node(*node) in set(self._nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def successors(self, node: Node) -> tuple[tuple[Node, EdgeLabel], ...]:
        node = Node(*node)
        try:
            return self._adj[node]
        except KeyError:
            if self._frozen:
                return ()
        out = _successors(self.n, self.b, node)
        self._adj[node] = out
        return out

    def edges(self) -> Iterator[tuple[Node, Node, EdgeLabel]]:
        for u in self.nodes:
            for v, label in self.successors(u):
                yield u, v, label

    def is_accepting_even(self, node: Node) -> bool:
        return node.a == node.s

    def middle_digit(self, node: Node) -> int | None:
        return accept_odd(node, self.n, self.b)

    def first_steps(self) -> list[tuple[Node, EdgeLabel]]:
        return [(v, lab) for v, lab in self.successors(START) if _is_first_label(lab)]

    def to_dot(self) -> str:
        lines = [f'digraph "Y({self.n},{self.b})" {{']
        for u in self.nodes:
            shape = "doublecircle" if u.a == u.s else "circle"
            lines.append(f'  "{u}" [label="{u}", shape={shape}];')
        for u, v, label in self.edges():
            lines.append(f'  "{u}" -> "{v}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "nodes": [list(u) for u in self.nodes],
            "edges": [
                {"from": list(u), "to": list(v), "d": lab.d, "e": lab.e}
                for u, v, lab in self.edges()
            ],
        }


def build_graph(n: int, b: int, materialize: bool = False) -> CarryPairGraph:
    g = CarryPairGraph(n, b)
    if materialize:
        for u in g.nodes:
            g.successors(u)
    return g


def _graph(n: int, b: int, graph: CarryPairGraph | None) -> CarryPairGraph:
    return graph if graph is not None else CarryPairGraph(n, b)


def forward_distances(g: CarryPairGraph) -> dict[Node, int]:
    """Shortest number of steps (>= 1) from the start to every reachable node."""
    dist: dict[Node, int] = {}
    queue = deque()
    for v, _ in g.first_steps():
        if v not in dist:
            dist[v] = 1
            queue.append(v)
    while queue:
        u = queue.popleft()
        for v, _ in g.successors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def min_digits(n: int, b: int, graph: CarryPairGraph | None = None) -> int | None:
    """Least digit count of any (n, b)-palintiple, or None if there is none."""
    g = _graph(n, b, graph)
    best = None
    for node, t in forward_distances(g).items():
        if node.a == node.s:
            cand = 2 * t
            if best is None or cand < best:
                best = cand
        if g.middle_digit(node) is not None:
            cand = 2 * t + 1
            if best is None or cand < best:
                best = cand
    return best


def palintiples_exist(n: int, b: int, graph: CarryPairGraph | None = None) -> bool:
    return min_digits(n, b, graph) is not None


def _layers(g: CarryPairGraph, steps: int) -> list[set[Node]]:
    layers = [{START}, {v for v, _ in g.first_steps()}]
    for _ in range(steps - 1):
        layers.append({v for u in layers[-1] for v, _ in g.successors(u)})
    return layers


def enumerate_palintiples(
    n: int, b: int, digit_count: int, graph: CarryPairGraph | None = None
) -> list[PalintipleRecord]:
    """All (n, b)-palintiples with exactly ``digit_count`` digits, sorted.

    Walks are pruned to nodes that can still reach an accepting node in the
    remaining number of steps; every result is re-verified digit by digit.
    """
    if digit_count < 2:
        raise ValueError("digit count must be at least 2")
    g = _graph(n, b, graph)
    steps, odd = divmod(digit_count, 2)
    layers = _layers(g, steps)

    if odd:
        final = {u for u in layers[steps] if g.middle_digit(u) is not None}
    else:
        final = {u for u in layers[steps] if u.a == u.s}
    alive = [set() for _ in range(steps + 1)]
    alive[steps] = final
    for t in range(steps - 1, -1, -1):
        nxt = alive[t + 1]
        edges = g.first_steps() if t == 0 else None
        for u in layers[t]:
            succ = edges if t == 0 else g.successors(u)
            if any(v in nxt for v, _ in succ):
                alive[t].add(u)

    k = digit_count - 1
    results = []
    low = [0] * (k + 1)

    def walk(u: Node, t: int) -> None:
        if t == steps:
            if odd:
                low[steps] = g.middle_digit(u)
            results.append(tuple(low))
            return
        succ = g.first_steps() if t == 0 else g.successors(u)
        for v, (d, e) in sorted(succ):
            if v in alive[t + 1]:
                low[t] = d
                low[k - t] = e
                walk(v, t + 1)

    if START in alive[0]:
        walk(START, 0)

    records = [verify_palintiple(DigitString(b, digits), n) for digits in results]
    records.sort(key=lambda r: r.digits.msd_first())
    return records


def trim_graph(n: int, b: int, graph: CarryPairGraph | None = None) -> CarryPairGraph:
    """Subgraph of nodes and edges lying on some accepting walk.

    A walk is accepting at any length >= 1; the start node's outgoing edges
    count as initial only when their labels have no zero digit, but the same
    edge may also occur later in a walk that revisits the start.
    """
    g = _graph(n, b, graph)
    reached = set(forward_distances(g))
    accepting = {u for u in reached if u.a == u.s or g.middle_digit(u) is not None}

    preds: dict[Node, list[Node]] = {u: [] for u in reached}
    for u in reached:
        for v, _ in g.successors(u):
            preds[v].append(u)
    useful = set(accepting)
    queue = deque(accepting)
    while queue:
        v = queue.popleft()
        for u in preds[v]:
            if u not in useful:
                useful.add(u)
                queue.append(u)

    adjacency: dict[Node, list[tuple[Node, EdgeLabel]]] = {}
    for v, label in g.first_steps():
        if v in useful:
            adjacency.setdefault(START, []).append((v, label))
    for u in useful:
        for v, label in g.successors(u):
            if v in useful and (v, label) not in adjacency.get(u, ()):
                adjacency.setdefault(u, []).append((v, label))
    nodes = set(useful)
    if START in adjacency:
        nodes.add(START)
    else:
        nodes = set()
        adjacency = {}
    return CarryPairGraph(
        n, b, nodes=nodes, adjacency={u: tuple(sorted(vs)) for u, vs in adjacency.items()}
    )


def _degree_signature(adj: dict, nodes: Iterable) -> dict:
    indeg = {u: 0 for u in nodes}
    for u in nodes:
        for v in adj[u]:
            indeg[v] += 1
    return {u: (len(adj[u]), indeg[u], u in adj[u]) for u in nodes}


def digraph_isomorphic(g: CarryPairGraph, h: CarryPairGraph) -> bool:
    """Unlabelled digraph isomorphism by backtracking with degree pruning."""
    gn, hn = list(g.nodes), list(h.nodes)
    if len(gn) != len(hn):
        return False
    gadj = {u: {v for v, _ in g.successors(u)} for u in gn}
    hadj = {u: {v for v, _ in h.successors(u)} for u in hn}
    if sum(map(len, gadj.values())) != sum(map(len, hadj.values())):
        return False
    gsig = _degree_signature(gadj, gn)
    hsig = _degree_signature(hadj, hn)
    if sorted(gsig.values()) != sorted(hsig.values()):
        return False
    gpred = {u: set() for u in gn}
    for u in gn:
        for v in gadj[u]:
            gpred[v].add(u)

    # Most constrained first: rarest signature, then highest degree.
    counts: dict = {}
    for sig in gsig.values():
        counts[sig] = counts.get(sig, 0) + 1
    order = sorted(gn, key=lambda u: (counts[gsig[u]], -gsig[u][0] - gsig[u][1], u))

    mapping: dict[Node, Node] = {}
    used: set[Node] = set()

    def consistent(u, x) -> bool:
        for v in gadj[u]:
            if v in mapping and mapping[v] not in hadj[x]:
                return False
        for v in gpred[u]:
            if v in mapping and x not in hadj[mapping[v]]:
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        for x in hn:
            if x in used or hsig[x] != gsig[u] or not consistent(u, x):
                continue
            mapping[u] = x
            used.add(x)
            if extend(i + 1):
                return True
            del mapping[u]
            used.discard(x)
        return False

    # Edge counts match and every mapped edge is present, so the bijection
    # preserves non-edges as well.
    return extend(0)


def is_1089_type(n: int, b: int) -> bool:
    """Whether the trimmed graph of (n, b) is isomorphic to that of (9, 10)."""
    return digraph_isomorphic(trim_graph(n, b), trim_graph(9, 10))
