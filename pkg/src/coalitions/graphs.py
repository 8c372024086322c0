"""Immutable bitmask-backed graphs plus construction, serialization, and enumeration.

Vertices of a graph of order n are the integers 0..n-1.  Vertex sets travel
through the public API as frozensets of ids; the search kernels in the other
modules work on integer bitmasks, so the packing helpers and the induced
connectivity test live here where every module can share them.
"""

from .errors import GraphFormatError, GuardExceededError, PreconditionError

GRAPH6_MAX_N = 62
ENUMERATION_GUARD = 7
ENUMERATION_GUARD_RAISED = 8

GENERATOR_FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "star", "friendship")


def mask_from_set(vertices):
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_from_mask(mask):
    """Unpack a bitmask into a frozenset of vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def iter_mask(mask):
    """Yield the vertex ids set in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable.  ``adj`` presents per-vertex neighbor sets as
    frozensets; ``nbr_masks`` and ``closed_masks`` expose the same adjacency
    as bitmasks for the exhaustive-search kernels.  Equality is vertex-by-
    vertex (same order, same adjacency), not isomorphism.
    """

    __slots__ = ("n", "_nbr", "_edges")

    def __init__(self, n, edges):
        if n < 0:
            raise PreconditionError(f"vertex count must be nonnegative, got {n}")
        nbr = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"self-loop ({u}, {v}) is not allowed")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.n = n
        self._nbr = tuple(nbr)
        self._edges = None

    @classmethod
    def from_neighbor_masks(cls, n, nbr):
        """Trusted constructor for internal callers that already hold symmetric masks."""
        g = object.__new__(cls)
        g.n = n
        g._nbr = tuple(nbr)
        g._edges = None
        return g

    @property
    def nbr_masks(self):
        return self._nbr

    @property
    def closed_masks(self):
        return tuple(m | (1 << v) for v, m in enumerate(self._nbr))

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def adj(self):
        """Neighbor sets, indexed by vertex id."""
        return tuple(set_from_mask(m) for m in self._nbr)

    @property
    def edges(self):
        """All edges as (u, v) pairs with u < v, sorted."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                rest = self._nbr[u] >> (u + 1)
                for k in iter_mask(rest):
                    out.append((u, u + 1 + k))
            self._edges = tuple(out)
        return self._edges

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return self._nbr[v].bit_count()

    def neighbors(self, v):
        return set_from_mask(self._nbr[v])

    def has_edge(self, u, v):
        return bool(self._nbr[u] >> v & 1)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._nbr == other._nbr

    def __hash__(self):
        return hash((self.n, self._nbr))

    def __repr__(self):
        shown = list(self.edges[:12])
        tail = ", ..." if self.m > 12 else ""
        return f"Graph(n={self.n}, edges={shown}{tail})"


def build_graph(n, edges):
    """Build a simple graph from a vertex count and an edge list.

    Duplicate edges are tolerated and deduplicated.  Out-of-range ids and
    self-loops raise a PreconditionError naming the offending pair.
    """
    return Graph(n, edges)


def induced_component(g, start_bit, within):
    """Bitmask of the component of ``start_bit`` inside the induced subgraph on ``within``."""
    nbr = g._nbr
    comp = start_bit
    frontier = start_bit
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= nbr[low.bit_length() - 1]
            m ^= low
        frontier = reach & within & ~comp
        comp |= frontier
    return comp


def induced_connected(g, mask):
    """True iff the subgraph induced on the nonempty vertex mask is connected."""
    if mask == 0:
        return False
    return induced_component(g, mask & -mask, mask) == mask


def is_connected(g):
    """Whole-graph connectivity; the empty graph counts as disconnected, K_1 as connected."""
    if g.n == 0:
        return False
    return induced_connected(g, g.full_mask)


def induced_subgraph(g, vertices):
    """Induced subgraph on a vertex subset, relabeled 0..k-1 in ascending id order.

    Returns (subgraph, mapping) where mapping sends each original id to its
    new id.
    """
    keep = sorted(set(vertices))
    if keep and not (0 <= keep[0] and keep[-1] < g.n):
        raise PreconditionError(f"vertex set {sorted(vertices)} not within 0..{g.n - 1}")
    mapping = {orig: new for new, orig in enumerate(keep)}
    keep_mask = mask_from_set(keep)
    nbr = []
    for orig in keep:
        m = g._nbr[orig] & keep_mask
        packed = 0
        for w in iter_mask(m):
            packed |= 1 << mapping[w]
        nbr.append(packed)
    return Graph.from_neighbor_masks(len(keep), nbr), mapping


def full_vertices(g):
    """The set of vertices adjacent to every other vertex (degree n-1).

    For n=1 the single vertex counts as full: its degree 0 equals n-1.
    """
    return set_from_mask(full_vertex_mask(g))


def full_vertex_mask(g):
    want = g.n - 1
    m = 0
    for v, nb in enumerate(g._nbr):
        if nb.bit_count() == want:
            m |= 1 << v
    return m


def join(g, h):
    """Disjoint union of g and h plus every cross edge; h's ids are shifted by g.n."""
    gn = g.n
    cross_g = ((1 << h.n) - 1) << gn
    cross_h = (1 << gn) - 1
    nbr = [m | cross_g for m in g._nbr]
    nbr += [(m << gn) | cross_h for m in h._nbr]
    return Graph.from_neighbor_masks(gn + h.n, nbr)


def corona(g, h):
    """Corona product: one copy of g, g.n copies of h, vertex i joined to copy i.

    Layout is deterministic: g keeps ids 0..g.n-1, copy i occupies the next
    h.n ids in order.
    """
    if g.n == 0:
        raise PreconditionError("corona requires a nonempty first factor")
    gn, hn = g.n, h.n
    n = gn + gn * hn
    nbr = [m for m in g._nbr] + [0] * (gn * hn)
    for i in range(gn):
        base = gn + i * hn
        copy_mask = ((1 << hn) - 1) << base
        nbr[i] |= copy_mask
        for v in range(hn):
            nbr[base + v] |= (h._nbr[v] << base) | (1 << i)
    return Graph.from_neighbor_masks(n, nbr)


def _gen_path(n):
    if n < 1:
        raise PreconditionError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def _gen_cycle(n):
    if n < 3:
        raise PreconditionError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _gen_complete(n):
    if n < 1:
        raise PreconditionError(f"complete needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _gen_complete_bipartite(r, s):
    if r < 1 or s < 1:
        raise PreconditionError(f"complete_bipartite needs r, s >= 1, got r={r}, s={s}")
    return Graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def _gen_star(leaves):
    if leaves < 1:
        raise PreconditionError(f"star needs at least 1 leaf, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _gen_friendship(t):
    # t triangles sharing the hub vertex 0
    if t < 1:
        raise PreconditionError(f"friendship needs t >= 1 triangles, got {t}")
    edges = []
    for i in range(t):
        a, b = 1 + 2 * i, 2 + 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * t + 1, edges)


def generate(family, params):
    """Build a standard graph family member with canonical vertex numbering.

    Families: path n; cycle n (n >= 3); complete n; complete_bipartite r s
    (part A first); star leaves (hub 0); friendship t (hub 0).
    """
    builders = {
        "path": (_gen_path, 1),
        "cycle": (_gen_cycle, 1),
        "complete": (_gen_complete, 1),
        "complete_bipartite": (_gen_complete_bipartite, 2),
        "star": (_gen_star, 1),
        "friendship": (_gen_friendship, 1),
    }
    if family not in builders:
        raise PreconditionError(
            f"unknown family {family!r}; expected one of {', '.join(GENERATOR_FAMILIES)}"
        )
    fn, arity = builders[family]
    if len(params) != arity:
        raise PreconditionError(f"family {family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def _pair_order(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def emit_graph6(g):
    """Encode a graph of order <= 62 as a one-line graph6 string."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise PreconditionError(f"graph6 supports n <= {GRAPH6_MAX_N}, got {n}")
    chars = [chr(63 + n)]
    buf = 0
    nbits = 0
    nbr = g._nbr
    # upper triangle in column-major order: column j lists bits (0,j)..(j-1,j)
    for j in range(1, n):
        col = nbr[j]
        for i in range(j):
            buf = (buf << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        chars.append(chr(63 + (buf << (6 - nbits))))
    return "".join(chars)


def parse_graph6(text):
    """Decode a single graph6 line into a Graph.

    Accepts an optional ">>graph6<<" prefix.  Malformed bytes, a truncated
    bit payload, and trailing garbage all raise GraphFormatError.
    """
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise GraphFormatError("empty graph6 line")
    codes = [ord(c) for c in line]
    for c in codes:
        if not (63 <= c <= 126):
            raise GraphFormatError(f"graph6 byte {c} outside the printable range [63, 126]")
    n = codes[0] - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 header encodes n={n}; only n <= {GRAPH6_MAX_N} is supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = codes[1:]
    if len(payload) < need:
        raise GraphFormatError(
            f"graph6 payload truncated: need {need} bytes for n={n}, got {len(payload)}"
        )
    if len(payload) > need:
        raise GraphFormatError(
            f"trailing garbage after graph6 payload: expected {need} bytes, got {len(payload)}"
        )
    nbr = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
            k += 1
    return Graph.from_neighbor_masks(n, nbr)


def iter_graph6_lines(text):
    """Parse every graph in a graph6 text blob, skipping blanks and '>' header lines."""
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith(">"):
            continue
        yield parse_graph6(stripped)


def parse_edgelist(text):
    """Parse the edge-list text format.

    First non-comment line is the order n; each further line is "u v".
    Lines starting with '#' and blank lines are ignored; duplicate edges are
    deduplicated.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphFormatError(f"line {lineno}: expected the vertex count, got {line!r}")
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count {fields[0]!r} is not an integer")
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("edge-list input contains no vertex count line")
    try:
        return build_graph(n, edges)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc))


def emit_edgelist(g):
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines)


def enumerate_labeled_graphs(n, connected_only=False, raise_guard=False):
    """Yield every labeled graph on n vertices exactly once.

    Order is ascending adjacency bitmask, where bit k of the mask is the k-th
    vertex pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).  The
    guard stops at n=7 because the count is 2^(n(n-1)/2); pass
    raise_guard=True to allow n=8.
    """
    limit = ENUMERATION_GUARD_RAISED if raise_guard else ENUMERATION_GUARD
    if not (1 <= n <= limit):
        raise GuardExceededError(
            f"labeled enumeration supports 1 <= n <= {limit}"
            f"{' (raise_guard=True)' if raise_guard else ''}, got {n}"
        )
    pairs = _pair_order(n)
    for mask in range(1 << len(pairs)):
        nbr = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
            m ^= low
        g = Graph.from_neighbor_masks(n, nbr)
        if connected_only and not is_connected(g):
            continue
        yield g


def is_tree(g):
    """True iff g is connected with exactly n-1 edges."""
    return g.n >= 1 and is_connected(g) and g.m == g.n - 1


def is_corona_of_k1(g):
    """Recognize graphs of the form H corona K_1 with H connected and nonempty.

    Such a graph has even order 2h: exactly h pendant vertices, each non-
    pendant supporting exactly one of them, and the non-pendants inducing a
    connected subgraph.  Labeling does not matter.
    """
    n = g.n
    if n < 2 or n % 2:
        return False
    if n == 2:
        return g.m == 1
    leaves = [v for v in range(n) if g.degree(v) == 1]
    if len(leaves) != n // 2:
        return False
    leaf_mask = mask_from_set(leaves)
    core_mask = g.full_mask ^ leaf_mask
    pendants_per_support = {}
    for leaf in leaves:
        s = g._nbr[leaf].bit_length() - 1
        if leaf_mask >> s & 1:
            return False
        pendants_per_support[s] = pendants_per_support.get(s, 0) + 1
    if len(pendants_per_support) != n // 2:
        return False
    if any(c != 1 for c in pendants_per_support.values()):
        return False
    return induced_connected(g, core_mask)
