"""Exhaustive and sampled sweeps comparing collection with the closed forms.

Each sweep splits its argument tuples by the first coordinate so the pieces
can run in separate processes; results are merged in a fixed order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from nestedroots.algebra.fields import PrimeField, f2_identity, f8_t4
from nestedroots.polygon import hexagon as hx
from nestedroots.polygon import octagon as oc
from nestedroots.report import parallel_map

__all__ = ["SweepResult", "octagon_Ba", "octagon_Bb", "hexagon_A", "OCTAGON_FIELDS"]

OCTAGON_FIELDS = {"F2": f2_identity, "F8": f8_t4}
MAX_EXAMPLES = 5


@dataclass
class SweepResult:
    name: str
    field: str
    cases: int = 0
    mismatches: int = 0
    examples: list = field(default_factory=list)
    coordinates: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.cases > 0 and self.mismatches == 0

    def merge(self, other: "SweepResult"):
        self.cases += other.cases
        self.mismatches += other.mismatches
        room = MAX_EXAMPLES - len(self.examples)
        self.examples.extend(other.examples[: max(room, 0)])
        for k, v in other.coordinates.items():
            self.coordinates[k] = self.coordinates.get(k, 0) + v

    def as_dict(self) -> dict:
        return {
            "identity": self.name,
            "field": self.field,
            "cases": self.cases,
            "mismatches": self.mismatches,
            "mismatched_coordinates": dict(sorted(self.coordinates.items())),
            "examples": self.examples,
        }


def _record(res: SweepResult, args, got, exp):
    res.cases += 1
    if got != exp:
        res.mismatches += 1
        for name, a, b in zip(got._fields, got, exp):
            if a != b:
                res.coordinates[name] = res.coordinates.get(name, 0) + 1
        if len(res.examples) < MAX_EXAMPLES:
            res.examples.append({"args": list(args), "collected": list(got), "closed_form": list(exp)})


def _ba_chunk(job):
    fname, t, corrected = job
    F = OCTAGON_FIELDS[fname]()
    E = oc.OctagonEngine(F)
    res = SweepResult("octagon-Ba", fname)
    for u1, u2 in itertools.product(F.elements(), repeat=2):
        got = oc.octagon_commutator(t, u1, u2, engine=E)
        exp = oc.octagon_commutator_closed(t, u1, u2, F, corrected=corrected)
        _record(res, (t, u1, u2), got, exp)
    return res


def octagon_Ba(fname: str, corrected: bool = False) -> SweepResult:
    """All (t, u1, u2) over the field."""
    F = OCTAGON_FIELDS[fname]()
    out = SweepResult("octagon-Ba" + ("-corrected" if corrected else ""), fname)
    for part in parallel_map(_ba_chunk, [(fname, t, corrected) for t in F.elements()]):
        out.merge(part)
    return out


def _bb_chunk(job):
    fname, tuples, corrected = job
    F = OCTAGON_FIELDS[fname]()
    E = oc.OctagonEngine(F)
    res = SweepResult("octagon-Bb", fname)
    for args in tuples:
        got = oc.octagon_product_formula(*args, engine=E)
        exp = oc.octagon_product_closed(*args, F, corrected=corrected)
        _record(res, args, got, exp)
    return res


def octagon_Bb(fname: str, samples: int = 1000, seed: int = 0, corrected: bool = False) -> SweepResult:
    """Exhaustive over F2 (64 tuples); ``samples`` seeded random tuples otherwise."""
    F = OCTAGON_FIELDS[fname]()
    if F.cardinality ** 6 <= max(samples, 64):
        tuples = list(itertools.product(F.elements(), repeat=6))
    else:
        rng = random.Random(seed)
        tuples = [tuple(F.random(rng) for _ in range(6)) for _ in range(samples)]
    chunks = [tuples[i : i + 250] for i in range(0, len(tuples), 250)]
    out = SweepResult("octagon-Bb" + ("-corrected" if corrected else ""), fname)
    for part in parallel_map(_bb_chunk, [(fname, c, corrected) for c in chunks]):
        out.merge(part)
    return out


def _hex_chunk(job):
    p, which, a1 = job
    K = PrimeField(p)
    E = hx.HexagonEngine(K)
    res = SweepResult(which, f"F{p}")
    if which == "lemma":
        for t1, a2, t2 in itertools.product(range(p), repeat=3):
            _record(
                res, (a1, t1, a2, t2), hx.hexagon_product_formula(a1, t1, a2, t2, K, E), hx.hexagon_product_closed(a1, t1, a2, t2, K)
            )
    elif which == "remark-a":
        if a1:
            got, exp = hx.remark_a(a1, K, E)
            _record(res, (a1,), got, exp)
    elif which == "remark-b":
        for k in range(p):
            got, exp = hx.remark_b(a1, k, K, E)
            _record(res, (a1, k), got, exp)
    elif which == "remark-c":
        for k in range(p):
            got, exp = hx.remark_c(a1, k, K, E)
            _record(res, (a1, k), got, exp)
    elif which == "sharp-preimage":
        if a1:
            got, exp = hx.sharp_preimage_check(a1, K)
            _record(res, (a1,), got, exp)
    elif which == "sharp-preimage-published":
        if a1:
            got, exp = hx.sharp_preimage_check(a1, K, use_published=True)
            _record(res, (a1,), got, exp)
    else:
        raise ValueError(which)
    return res


HEXAGON_IDENTITIES = ("lemma", "remark-a", "remark-b", "remark-c", "sharp-preimage")


def hexagon_A(p: int, which: str) -> SweepResult:
    """One hexagon identity, exhaustively over F_p."""
    if p in (2, 3):
        raise ValueError("the hexagon identities are checked in characteristic other than 2 and 3")
    out = SweepResult(which, f"F{p}")
    for part in parallel_map(_hex_chunk, [(p, which, a) for a in range(p)]):
        out.merge(part)
    return out
