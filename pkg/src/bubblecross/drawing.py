"""Arc-count bookkeeping for the recursive drawing construction.

Every sector vertex of generation n carries a state (l, r): how many of
its n - 1 edges leave the axis to the left and to the right.  Replacing
the vertex by an (n+1)-path under one of three structures produces the
n + 1 child states of generation n + 1.  Only the multiset of states
feeds the bounds, and the multiset does not depend on which child loses
which bunch, so that assignment is a pluggable policy.
"""

from __future__ import annotations

import csv
import enum
import io
import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import NamedTuple

from .config import DEFAULT_SEED
from .errors import DimensionGuardError, StateInvariantError
from .perms import Perm, expand_vertex, in_bprime


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


class StructureKind(enum.Enum):
    ELEVEN = "11"     # path edges alternate left, right, left, ...
    TWO_ZERO = "20"   # every path edge drawn left
    ZERO_TWO = "02"   # every path edge drawn right


class VertexState(NamedTuple):
    l: int
    r: int

    @property
    def diff(self) -> int:
        return self.l - self.r


def allowed_diffs(n: int) -> frozenset[int]:
    """Arc-imbalance values a generation-n state may take."""
    return frozenset({1, -1}) if n % 2 == 0 else frozenset({0, 2, -2})


def in_parity_class(n: int, s: VertexState) -> bool:
    l, r = s
    return l >= 0 and r >= 0 and l + r == n - 1 and (l - r) in allowed_diffs(n)


def choose_structure(n: int, s: VertexState) -> StructureKind:
    """Structure choice of the balanced construction, by parity and imbalance."""
    if not in_parity_class(n, s):
        raise StateInvariantError(f"state {tuple(s)} is not a legal generation-{n} state")
    d = s.l - s.r
    if n % 2 == 0 or d == 0:
        return StructureKind.ELEVEN
    return StructureKind.TWO_ZERO if d == -2 else StructureKind.ZERO_TWO


@dataclass(frozen=True)
class ReplacementPlan:
    """Structure plus the side each interior child's lost bunch sits on.

    Children 1 and n+1 lose nothing; child i in 2..n is the lost anchor
    of exactly one bunch.  A plan for state (l, r) must hand out exactly
    l left losses and r right losses.
    """

    structure: StructureKind
    lost_side: dict[int, Side]


def _path_edge_side(structure: StructureKind, j: int) -> Side:
    if structure is StructureKind.TWO_ZERO:
        return Side.LEFT
    if structure is StructureKind.ZERO_TWO:
        return Side.RIGHT
    return Side.LEFT if j % 2 == 1 else Side.RIGHT


def replace_vertex(n: int, s: VertexState, plan: ReplacementPlan) -> list[VertexState]:
    """Child states by child index 1..n+1.

    Each child keeps the parent's bunch arcs minus its own lost one, then
    gains one arc per incident path edge, so l + r = n for every child.
    """
    expected = choose_structure(n, s)
    if plan.structure is not expected:
        raise StateInvariantError(
            f"plan structure {plan.structure.value} but state {tuple(s)} needs {expected.value}"
        )
    if set(plan.lost_side) != set(range(2, n + 1)):
        raise StateInvariantError("plan must assign lost bunches to children 2..n exactly")
    sides = list(plan.lost_side.values())
    if sides.count(Side.LEFT) != s.l or sides.count(Side.RIGHT) != s.r:
        raise StateInvariantError(
            f"plan hands out {sides.count(Side.LEFT)} left / "
            f"{sides.count(Side.RIGHT)} right losses, state is {tuple(s)}"
        )
    children = []
    for i in range(1, n + 2):
        cl, cr = s.l, s.r
        if 2 <= i <= n:
            if plan.lost_side[i] is Side.LEFT:
                cl -= 1
            else:
                cr -= 1
        for j in (i - 1, i):
            if 1 <= j <= n:
                if _path_edge_side(plan.structure, j) is Side.LEFT:
                    cl += 1
                else:
                    cr += 1
        children.append(VertexState(cl, cr))
    return children


class Policy:
    """Produces one replacement plan per parent; subclasses vary the order."""

    name = "base"

    def __init__(self, seed: int = DEFAULT_SEED):
        self._seed = seed
        self._ordinal = 0

    def _sides(self, n: int, s: VertexState) -> list[Side]:
        raise NotImplementedError

    def plan(self, n: int, s: VertexState) -> ReplacementPlan:
        sides = self._sides(n, s)
        self._ordinal += 1
        return ReplacementPlan(
            structure=choose_structure(n, s),
            lost_side=dict(zip(range(2, n + 1), sides)),
        )


class FixedPolicy(Policy):
    name = "fixed"

    def _sides(self, n, s):
        return [Side.LEFT] * s.l + [Side.RIGHT] * s.r


class RoundRobinPolicy(Policy):
    name = "roundrobin"

    def _sides(self, n, s):
        base = [Side.LEFT] * s.l + [Side.RIGHT] * s.r
        k = self._ordinal % len(base)
        return base[k:] + base[:k]


class RandomPolicy(Policy):
    name = "random"

    def __init__(self, seed: int = DEFAULT_SEED):
        super().__init__(seed)
        self._rng = random.Random(seed)

    def _sides(self, n, s):
        base = [Side.LEFT] * s.l + [Side.RIGHT] * s.r
        self._rng.shuffle(base)
        return base


POLICIES = {"fixed": FixedPolicy, "roundrobin": RoundRobinPolicy, "random": RandomPolicy}


def make_policy(name: str, seed: int = DEFAULT_SEED) -> Policy:
    if name not in POLICIES:
        raise ValueError(f"unknown policy {name!r}, pick one of {sorted(POLICIES)}")
    return POLICIES[name](seed)


@dataclass
class GenerationState:
    """Multiset of arc-count states over the sector core at dimension n."""

    n: int
    states: Counter

    @property
    def total(self) -> int:
        return sum(self.states.values())

    def validate(self) -> None:
        expected = factorial(self.n) // 6
        if self.total != expected:
            raise StateInvariantError(
                f"generation {self.n} holds {self.total} states, expected {expected}"
            )
        for s, mult in self.states.items():
            if mult < 0 or not in_parity_class(self.n, VertexState(*s)):
                raise StateInvariantError(
                    f"generation {self.n} contains illegal state {tuple(s)}"
                )

    def diff_multiset(self) -> Counter:
        out: Counter = Counter()
        for s, mult in self.states.items():
            out[abs(s[0] - s[1])] += mult
        return out


SEED_SPLITS = ("alternating", "all-23", "all-32")


def seed_d6(split: str = "alternating") -> GenerationState:
    """The 120 base states at n = 6, all with |l - r| = 1.

    The base drawing fixes each vertex's split, but nothing downstream
    depends on more than the imbalance, so the split is a convention;
    the even mix and both extremes are offered.
    """
    if split == "alternating":
        states = Counter({VertexState(2, 3): 60, VertexState(3, 2): 60})
    elif split == "all-23":
        states = Counter({VertexState(2, 3): 120})
    elif split == "all-32":
        states = Counter({VertexState(3, 2): 120})
    else:
        raise ValueError(f"unknown seed split {split!r}, pick one of {SEED_SPLITS}")
    g = GenerationState(6, states)
    g.validate()
    return g


def step_generation(g: GenerationState, policy: Policy) -> GenerationState:
    """Replace every vertex of generation n, checking the arc invariants.

    Raises StateInvariantError naming the offending parent state when a
    replacement breaks the imbalance classes, the even-parent child
    counts, or arc conservation.
    """
    n = g.n
    out: Counter = Counter()
    for s in sorted(g.states):
        state = VertexState(*s)
        if not in_parity_class(n, state):
            raise StateInvariantError(f"parent {tuple(state)} illegal at generation {n}")
        for _ in range(g.states[s]):
            children = replace_vertex(n, state, policy.plan(n, state))
            if sum(c.l + c.r for c in children) != n * (n + 1):
                raise StateInvariantError(
                    f"arc conservation failed for parent {tuple(state)} at generation {n}"
                )
            bad = [tuple(c) for c in children if not in_parity_class(n + 1, c)]
            if bad:
                raise StateInvariantError(
                    f"children {bad} of parent {tuple(state)} break the "
                    f"generation-{n + 1} classes"
                )
            if n % 2 == 0:
                zeros = sum(1 for c in children if c.diff == 0)
                twos = sum(1 for c in children if abs(c.diff) == 2)
                if zeros != n // 2 + 1 or twos != n // 2:
                    raise StateInvariantError(
                        f"child counts ({zeros} balanced, {twos} offset) wrong for "
                        f"parent {tuple(state)} at even generation {n}"
                    )
            out.update(children)
    nxt = GenerationState(n + 1, out)
    nxt.validate()
    return nxt


def run_generations(to_n: int, policy: Policy, split: str = "alternating") -> list[GenerationState]:
    """Generations 6..to_n inclusive, starting from the base seed."""
    if to_n < 6:
        raise ValueError(f"target generation must be >= 6, got {to_n}")
    if to_n > 12:
        raise DimensionGuardError(
            f"target generation {to_n} walks more than 11!/6 parents; refusing"
        )
    gens = [seed_d6(split)]
    while gens[-1].n < to_n:
        gens.append(step_generation(gens[-1], policy))
    return gens


def seed_labeled(split: str = "alternating") -> dict[Perm, VertexState]:
    """Per-vertex variant of the base seed, keyed by the actual core labels."""
    out = {}
    idx = 0
    for p in itertools.permutations(range(1, 7)):
        if not in_bprime(p):
            continue
        if split == "alternating":
            s = VertexState(2, 3) if idx % 2 == 0 else VertexState(3, 2)
        elif split == "all-23":
            s = VertexState(2, 3)
        elif split == "all-32":
            s = VertexState(3, 2)
        else:
            raise ValueError(f"unknown seed split {split!r}, pick one of {SEED_SPLITS}")
        out[p] = s
        idx += 1
    return out


def step_labeled(assignment: dict[Perm, VertexState], policy: Policy) -> dict[Perm, VertexState]:
    """Per-vertex replacement: children are the actual expansions of each label.

    Keeping labels ties the multiset machine back to the graphs it
    abstracts; the children of the core at n cover exactly the core at
    n + 1.  Meant for small n (the map grows like n!/6).
    """
    if not assignment:
        raise ValueError("empty assignment")
    n = len(next(iter(assignment)))
    out: dict[Perm, VertexState] = {}
    for v in sorted(assignment):
        children = replace_vertex(n, assignment[v], policy.plan(n, assignment[v]))
        for child_label, child_state in zip(expand_vertex(v), children):
            out[child_label] = child_state
    return out


def trace_csv(gens) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["n", "l", "r", "multiplicity"])
    for g in gens:
        for s in sorted(g.states):
            w.writerow([g.n, s[0], s[1], g.states[s]])
    return buf.getvalue()


def snapshot_json(g: GenerationState) -> str:
    payload = {"n": g.n, "states": [[s[0], s[1], g.states[s]] for s in sorted(g.states)]}
    return json.dumps(payload, sort_keys=True) + "\n"


def load_snapshot(text: str) -> GenerationState:
    d = json.loads(text)
    states: Counter = Counter()
    for l, r, mult in d["states"]:
        states[VertexState(int(l), int(r))] += int(mult)
    g = GenerationState(int(d["n"]), states)
    g.validate()
    return g
