"""Named verification suites behind the command line's verify subcommand.

Each suite runs one family of checks at its documented scale and reports
the case count; a suite stops at its first counterexample.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import factorial

from . import drawing, graphs, mesh
from .config import DEFAULT_SEED
from .errors import StateInvariantError
from .perms import inversions


@dataclass
class Report:
    suite: str
    passed: bool
    cases: int
    lines: list[str] = field(default_factory=list)


def random_spec(rng: random.Random, n: int) -> mesh.MeshSpec:
    ks = list(range(2, n))
    rng.shuffle(ks)
    return mesh.MeshSpec(n, rng.randint(0, n - 2), tuple(ks))


def suite_lemma1(seed: int = DEFAULT_SEED) -> Report:
    """Formula count equals the geometric oracle: exhaustive at n=6,
    seeded random for n = 7..10."""
    lines = []
    cases = 0
    for a in range(0, 5):
        for P in itertools.permutations(range(2, 6)):
            spec = mesh.MeshSpec(6, a, P)
            cases += 1
            if mesh.total_crossings(spec) != mesh.oracle_crossings(spec):
                lines.append(f"lemma1: FAIL counterexample {spec}")
                return Report("lemma1", False, cases, lines)
    lines.append(f"lemma1: exhaustive n=6 checked {cases} specs")
    rng = random.Random(seed)
    for n in range(7, 11):
        for _ in range(100):
            spec = random_spec(rng, n)
            cases += 1
            if mesh.total_crossings(spec) != mesh.oracle_crossings(spec):
                lines.append(f"lemma1: FAIL counterexample {spec}")
                return Report("lemma1", False, cases, lines)
        lines.append(f"lemma1: random n={n} checked 100 specs")
    lines.append(f"lemma1: PASS ({cases} specs, formula == oracle throughout)")
    return Report("lemma1", True, cases, lines)


def suite_lemma2() -> Report:
    """Sorting each side never lowers the total, one odd positive step at
    a time: exhaustive over n = 6 and n = 7."""
    lines = []
    cases = 0
    swaps = 0
    for n in (6, 7):
        for a in range(0, n - 1):
            for P in itertools.permutations(range(2, n)):
                spec = mesh.MeshSpec(n, a, P)
                cases += 1
                before = mesh.total_crossings(spec)
                sorted_spec, steps = mesh.sort_spec(spec)
                after = mesh.total_crossings(sorted_spec)
                ok = (
                    after >= before
                    and after - before == sum(st.delta for st in steps)
                    and len(steps) == inversions(spec.left) + inversions(spec.right)
                    and all(st.delta == 2 * (st.hi - st.lo) - 1 and st.delta > 0
                            for st in steps)
                    and sorted_spec.left == tuple(sorted(spec.left))
                    and sorted_spec.right == tuple(sorted(spec.right))
                )
                swaps += len(steps)
                if not ok:
                    lines.append(f"lemma2: FAIL counterexample {spec}")
                    return Report("lemma2", False, cases, lines)
        lines.append(f"lemma2: exhaustive n={n} done")
    lines.append(f"lemma2: PASS ({cases} specs, {swaps} swap deltas checked)")
    return Report("lemma2", True, cases, lines)


LEMMA3_EXPECTED = {
    (7, 2): 70, (7, 3): 70,
    (8, 2): 166, (8, 3): 142, (8, 4): 166,
    (9, 3): 280, (9, 4): 280,
}
LEMMA3_RUNTIME = [(10, 3), (10, 4), (10, 5)]


def suite_lemma3() -> Report:
    """Exhaustive maxima match the closed worst-case forms."""
    lines = []
    cases = 0
    for (n, a), expected in sorted(LEMMA3_EXPECTED.items()):
        closed = mesh.mesh_max(n, a)
        best, witness = mesh.exhaustive_max(n, a)
        cases += 1
        if not (closed == best == expected and mesh.total_crossings(witness) == best):
            lines.append(
                f"lemma3: FAIL (n={n}, a={a}): closed={closed} "
                f"exhaustive={best} expected={expected}"
            )
            return Report("lemma3", False, cases, lines)
        lines.append(f"lemma3: (n={n}, a={a}) max={best} matches the closed form")
    for n, a in LEMMA3_RUNTIME:
        closed = mesh.mesh_max(n, a)
        best, witness = mesh.exhaustive_max(n, a)
        cases += 1
        if closed != best or mesh.total_crossings(witness) != best:
            lines.append(f"lemma3: FAIL (n={n}, a={a}): closed={closed} exhaustive={best}")
            return Report("lemma3", False, cases, lines)
        lines.append(f"lemma3: (n={n}, a={a}) max={best} matches the closed form")
    lines.append(f"lemma3: PASS ({cases} splits)")
    return Report("lemma3", True, cases, lines)


def suite_lemma45(seed: int = DEFAULT_SEED) -> Report:
    """Replacement invariants to n = 10 under three lost-side policies.

    step_generation already enforces the per-parent checks (imbalance
    classes, balanced/offset child counts, arc conservation); the suite
    adds policy and seed-split independence of the imbalance profile.
    """
    lines = []
    cases = 0
    runs = {}
    try:
        for name in ("fixed", "roundrobin", "random"):
            gens = drawing.run_generations(10, drawing.make_policy(name, seed))
            runs[name] = [g.diff_multiset() for g in gens]
            checked = sum(g.total for g in gens[:-1])
            cases += checked
            lines.append(f"lemma45: policy {name} traced to n=10 ({checked} replacements)")
        base = runs["fixed"]
        for name, profile in runs.items():
            if profile != base:
                lines.append(f"lemma45: FAIL imbalance profile diverges for policy {name}")
                return Report("lemma45", False, cases, lines)
        for split in ("all-23", "all-32"):
            gens = drawing.run_generations(8, drawing.make_policy("fixed", seed), split=split)
            cases += sum(g.total for g in gens[:-1])
            if [g.diff_multiset() for g in gens] != base[:3]:
                lines.append(f"lemma45: FAIL seed split {split} changes the imbalance profile")
                return Report("lemma45", False, cases, lines)
    except StateInvariantError as exc:
        lines.append(f"lemma45: FAIL {exc}")
        return Report("lemma45", False, cases, lines)
    lines.append(f"lemma45: PASS ({cases} replacements; policy and split independent)")
    return Report("lemma45", True, cases, lines)


def suite_symmetry() -> Report:
    """Six equal classes whose sectors are isomorphic under relabeling."""
    lines = []
    for n in (5, 6):
        res = graphs.symmetry_classes(n)
        sizes = {len(c) for c in res.classes.values()}
        if len(res.classes) != 6 or sizes != {factorial(n) // 6} or not res.all_isomorphic:
            lines.append(f"symmetry: FAIL at n={n} (sizes {sorted(sizes)})")
            return Report("symmetry", False, 1, lines)
        lines.append(
            f"symmetry: n={n} splits into 6 classes of {factorial(n) // 6}, "
            f"all sectors isomorphic"
        )
    lines.append("symmetry: PASS")
    return Report("symmetry", True, 2, lines)


def suite_planarity() -> Report:
    """Planarity of the small graphs plus the classic sanity cases."""
    lines = []
    expected = {2: True, 3: True, 4: True, 5: False}
    for n, want in expected.items():
        got = graphs.is_planar(graphs.build_bn(n))
        if got != want:
            lines.append(f"planarity: FAIL B_{n} reported {'planar' if got else 'non-planar'}")
            return Report("planarity", False, n - 1, lines)
        lines.append(f"planarity: B_{n} {'planar' if got else 'non-planar'}")
    k5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    k33 = [(i, 3 + j) for i in range(3) for j in range(3)]
    if graphs.edges_planar(k5) or graphs.edges_planar(k33):
        lines.append("planarity: FAIL complete-graph sanity check")
        return Report("planarity", False, 6, lines)
    lines.append("planarity: K5 and K3,3 rejected")
    lines.append("planarity: PASS")
    return Report("planarity", True, 6, lines)


SUITES = {
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "lemma45": suite_lemma45,
    "symmetry": suite_symmetry,
    "planarity": suite_planarity,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> Report:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, pick one of {sorted(SUITES)}")
    fn = SUITES[name]
    if name in ("lemma1", "lemma45"):
        return fn(seed)
    return fn()
