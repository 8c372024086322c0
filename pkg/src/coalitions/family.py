"""Membership test for the peel family: the graphs whose coalition number is zero.

The family is built bottom-up from all disconnected graphs of order at least
two by repeatedly joining one new universal vertex.  Membership is decided
top-down by peeling full vertices.  The peel choice cannot change the verdict
because any two full vertices have the same closed neighborhood (all of V),
so swapping them is an automorphism; the lowest id is peeled for determinism
and a property test compares other choices.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .graphs import full_vertices, induced_subgraph, is_connected

TERMINAL_DISCONNECTED = "disconnected_ge2"
TERMINAL_NO_FULL = "connected_no_full"
TERMINAL_K1 = "reached_k1"


@dataclass(frozen=True)
class PeelTrace:
    """Checkable record of a membership decision.

    steps holds (peeled original vertex id, remaining order) pairs in peel
    order; terminal is the state that ended the peel.  Membership is
    equivalent to terminal == "disconnected_ge2".
    """

    steps: tuple
    terminal: str

    @property
    def member(self):
        return self.terminal == TERMINAL_DISCONNECTED


def in_family_f(g, _pick=min):
    """Decide membership in the peel family, returning (member, trace).

    Repeatedly removes a full vertex.  Reaching a disconnected graph of
    order >= 2 proves membership; running out of full vertices while still
    connected, or peeling all the way down to a single vertex, disproves it
    (the one-vertex graph is not a member: its coalition number is 1).

    _pick selects among several full vertices and exists only so tests can
    confirm the choice is irrelevant; the default peels the lowest id.
    """
    if g.n < 1:
        raise PreconditionError("family membership needs a graph of order >= 1")
    current = g
    original = list(range(g.n))
    steps = []
    while True:
        if current.n == 1:
            return False, PeelTrace(tuple(steps), TERMINAL_K1)
        if not is_connected(current):
            return True, PeelTrace(tuple(steps), TERMINAL_DISCONNECTED)
        fulls = full_vertices(current)
        if not fulls:
            return False, PeelTrace(tuple(steps), TERMINAL_NO_FULL)
        peel = _pick(fulls)
        keep = [v for v in range(current.n) if v != peel]
        steps.append((original[peel], current.n - 1))
        current, mapping = induced_subgraph(current, keep)
        original = [original[v] for v in keep]


def replay_peel_trace(g, trace):
    """Re-run a peel trace against g, checking every step.

    Returns True when each recorded vertex was full at its step, the
    remaining orders match, and the terminal state is reproduced.
    """
    current = g
    original = list(range(g.n))
    for orig_id, remaining in trace.steps:
        if current.n <= 1 or orig_id not in original:
            return False
        local = original.index(orig_id)
        if local not in full_vertices(current):
            return False
        keep = [v for v in range(current.n) if v != local]
        current, _ = induced_subgraph(current, keep)
        original = [original[v] for v in keep]
        if current.n != remaining:
            return False
    if current.n == 1:
        terminal = TERMINAL_K1
    elif not is_connected(current):
        terminal = TERMINAL_DISCONNECTED
    elif not full_vertices(current):
        terminal = TERMINAL_NO_FULL
    else:
        return False  # trace stopped while a full vertex was still available
    return terminal == trace.terminal
