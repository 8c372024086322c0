"""Edge-domination and incidence matrices, and the two polynomial deciders.

check_cc_equals_n decides CC(G) = n for connected graphs without a full
vertex: it holds exactly when every vertex has an incident edge whose two
closed neighborhoods cover the whole graph (a full row of the edge-domination
matrix).  check_cc_equals_n_minus_1 decides CC(G) = n-1 through a search over
vertex pairs (u, v); it ships in two variants because the plain rule admits
edge cases.  The "paper" variant is the rule as stated; the "strict" variant
additionally requires that {u, v} is not itself a connected dominating set
and that the CC = n test already failed.  The verification harness measures
how the variants and the exact oracle relate instead of assuming it.
"""

from dataclasses import dataclass, field

from .domination import mask_is_cds, mask_is_dominating
from .errors import PreconditionError
from .graphs import full_vertices, induced_connected, is_connected

VARIANTS = ("paper", "strict")


@dataclass(frozen=True)
class Decision:
    """A yes/no answer plus either a checkable witness or a refutation reason."""

    answer: bool
    witness: object = None
    reason: str | None = None
    variant: str | None = None

    def as_dict(self):
        return {
            "answer": self.answer,
            "witness": _jsonable(self.witness),
            "reason": self.reason,
            "variant": self.variant,
        }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    return value


@dataclass(frozen=True)
class EdgeDominationMatrix:
    """Rows indexed by edges in sorted order, columns by vertices.

    entry(i, x) is 1 exactly when vertex x lies in the union of the closed
    neighborhoods of row i's endpoints.  Row masks keep the matrix compact;
    to_text renders the byte-exact dump format.
    """

    n: int
    edges: tuple
    row_masks: tuple = field(repr=False)

    def entry(self, i, x):
        return self.row_masks[i] >> x & 1

    def row(self, i):
        return tuple(self.row_masks[i] >> x & 1 for x in range(self.n))

    def row_sum(self, i):
        return self.row_masks[i].bit_count()

    def to_text(self):
        lines = [f"{len(self.edges)} {self.n}"]
        for mask in self.row_masks:
            lines.append(" ".join(str(mask >> x & 1) for x in range(self.n)))
        return "\n".join(lines)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Rows indexed by vertices, columns by edges in sorted order."""

    n: int
    edges: tuple

    def entry(self, x, j):
        return 1 if x in self.edges[j] else 0

    def row_sum(self, x):
        return sum(1 for e in self.edges if x in e)

    def column_sum(self, j):
        return 2


def edge_domination_matrix(g):
    """The edge-domination matrix of a graph with at least one edge."""
    if g.m == 0:
        raise PreconditionError("edge-domination matrix needs a graph with at least one edge")
    closed = g.closed_masks
    rows = tuple(closed[p] | closed[q] for p, q in g.edges)
    return EdgeDominationMatrix(g.n, g.edges, rows)


def incidence_matrix(g):
    if g.m == 0:
        raise PreconditionError("incidence matrix needs a graph with at least one edge")
    return IncidenceMatrix(g.n, g.edges)


def three_vertex_dominates(g, a, b, c, x):
    """True iff x lies in the union of the closed neighborhoods of a, b, c.

    The triple must be distinct.  This is the single-entry view of the
    three-vertex-domination table; the full table is never materialized.
    """
    if a == b or a == c or b == c:
        raise PreconditionError(f"three-vertex domination needs distinct vertices, got ({a}, {b}, {c})")
    closed = g.closed_masks
    return bool((closed[a] | closed[b] | closed[c]) >> x & 1)


def _check_preconditions(g, op, minimum_order):
    if g.n < minimum_order:
        raise PreconditionError(f"{op} needs a graph of order >= {minimum_order}, got {g.n}")
    if not is_connected(g):
        raise PreconditionError(f"{op} needs a connected graph")
    fulls = full_vertices(g)
    if fulls:
        raise PreconditionError(f"{op} requires no full vertex; vertex {min(fulls)} is full")


def check_cc_equals_n(g):
    """Decide CC(G) = n for a connected graph of order >= 2 with no full vertex.

    Answer yes iff every vertex has an incident edge whose edge-domination
    row sums to n.  The witness maps each vertex to the lowest such edge in
    sorted order; a no carries the first vertex with no qualifying edge.
    """
    _check_preconditions(g, "the CC = n check", 2)
    n = g.n
    closed = g.closed_masks
    full = g.full_mask
    witness = {}
    for x in range(n):
        found = None
        for y in sorted(g.neighbors(x)):
            p, q = (x, y) if x < y else (y, x)
            if closed[p] | closed[q] == full:
                cand = (p, q)
                if found is None or cand < found:
                    found = cand
        if found is None:
            return Decision(
                False,
                reason=f"vertex {x} has no incident edge whose row sums to {n}",
            )
        witness[x] = found
    return Decision(True, witness)


def check_cc_equals_n_minus_1(g, variant="strict"):
    """Decide CC(G) = n-1 via the pair search, in the requested variant.

    A pair (u, v) qualifies when every other vertex x either sits on an edge
    avoiding u and v whose row sums to n (condition 1) or makes {x, u, v} a
    connected dominating triple (condition 2), and some y outside the pair
    makes {y, u, v} a connected dominating triple.  The strict variant also
    requires that {u, v} itself is not a CDS and that the CC = n check fails.
    Pairs are scanned in ascending order and the first qualifying one is the
    witness.
    """
    if variant not in VARIANTS:
        raise PreconditionError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    _check_preconditions(g, "the CC = n-1 check", 3)
    n = g.n
    closed = g.closed_masks
    full = g.full_mask
    full_row_edges = [e for e in g.edges if closed[e[0]] | closed[e[1]] == full]
    if variant == "strict":
        if check_cc_equals_n(g).answer:
            return Decision(
                False,
                reason="the CC = n check already succeeds, which rules out CC = n-1",
                variant=variant,
            )

    def triple_cds(a, b, c):
        mask = (1 << a) | (1 << b) | (1 << c)
        return induced_connected(g, mask) and mask_is_dominating(g, mask)

    for u in range(n):
        for v in range(u + 1, n):
            if variant == "strict" and mask_is_cds(g, (1 << u) | (1 << v)):
                continue
            justification = {}
            ok = True
            for x in range(n):
                if x == u or x == v:
                    continue
                reason = None
                for p, q in full_row_edges:
                    if (x == p or x == q) and u != p and u != q and v != p and v != q:
                        reason = ("edge", (p, q))
                        break
                if reason is None and triple_cds(x, u, v):
                    reason = ("triple", (x, u, v))
                if reason is None:
                    ok = False
                    break
                justification[x] = reason
            if not ok:
                continue
            y = next((y for y in range(n) if y != u and y != v and triple_cds(y, u, v)), None)
            if y is None:
                continue
            witness = {"u": u, "v": v, "y": y, "justification": justification}
            return Decision(True, witness, variant=variant)
    return Decision(False, reason="no qualifying vertex pair (u, v)", variant=variant)
