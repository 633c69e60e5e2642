"""Bounded empirical checks of the carry conjectures.

Each check enumerates every palintiple up to a digit bound through the carry
graph (every record is re-verified digit by digit on the way out) and
collects counterexamples as data.  Nothing here asserts that a conjecture
holds; a clean report only says no counterexample exists within its bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .digits import PalintipleClass, PalintipleRecord
from .errors import CarryNotMultiple, InvalidRSequence
from .graph import CarryPairGraph, enumerate_palintiples, is_1089_type
from .theory import (
    congruence_solutions,
    enumerate_r_sequences,
    generate_symmetric,
    recover_r_sequence,
)

NO_COUNTEREXAMPLE = "no-counterexample"
COUNTEREXAMPLE_FOUND = "counterexample-found"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class Counterexample:
    n: int
    b: int
    digits: str
    carries: tuple[int, ...]
    failing_index: int | None = None
    detail: str = ""

    @classmethod
    def of(cls, p: PalintipleRecord, index=None, detail="") -> "Counterexample":
        return cls(p.n, p.base, str(p.digits), p.carries.carries, index, detail)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "digits": self.digits,
            "carries": list(self.carries),
            "failing_index": self.failing_index,
            "detail": self.detail,
        }


@dataclass
class ConjectureReport:
    conjecture: str
    bounds: dict
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return COUNTEREXAMPLE_FOUND if self.counterexamples else NO_COUNTEREXAMPLE

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "bounds": dict(self.bounds),
            "checked": self.checked,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def palintiples_upto(n: int, b: int, d_max: int) -> Iterator[PalintipleRecord]:
    """Every (n, b)-palintiple with 2 .. d_max digits, shortest first."""
    g = CarryPairGraph(n, b)
    for m in range(2, d_max + 1):
        yield from enumerate_palintiples(n, b, m, graph=g)


def _pairs(b_max: int, b_min: int = 3) -> Iterator[tuple[int, int]]:
    for b in range(b_min, b_max + 1):
        for n in range(2, b):
            yield n, b


def _bounds(b_max: int, d_max: int, b_min: int = 3) -> dict:
    return {"b_min": b_min, "b_max": b_max, "d_max": d_max}


def check_conjecture1(b_max: int, d_max: int, b_min: int = 3) -> ConjectureReport:
    """Symmetric palintiples have every carry divisible by n - 1."""
    report = ConjectureReport("conjecture1", _bounds(b_max, d_max, b_min))
    for n, b in _pairs(b_max, b_min):
        for p in palintiples_upto(n, b, d_max):
            if p.cls is not PalintipleClass.SYMMETRIC:
                continue
            report.checked += 1
            bad = next((j for j, c in enumerate(p.carries.carries) if c % (n - 1)), None)
            if bad is not None:
                report.counterexamples.append(
                    Counterexample.of(p, bad, f"c_{bad} not divisible by {n - 1}")
                )
    return report


def check_corollary2(b_max: int, d_max: int, b_min: int = 3) -> ConjectureReport:
    """Symmetric exactly when (n + 1) divides b."""
    report = ConjectureReport("corollary2", _bounds(b_max, d_max, b_min))
    for n, b in _pairs(b_max, b_min):
        divides = b % (n + 1) == 0
        for p in palintiples_upto(n, b, d_max):
            report.checked += 1
            symmetric = p.cls is PalintipleClass.SYMMETRIC
            if symmetric != divides:
                report.counterexamples.append(
                    Counterexample.of(p, None, f"class {p.cls}, (n+1) | b is {divides}")
                )
    return report


def check_pal_type(b_max: int, d_max: int, b_min: int = 3) -> ConjectureReport:
    """All palintiples of one (n, b) pair share a single class."""
    report = ConjectureReport("pal-type", _bounds(b_max, d_max, b_min))
    for n, b in _pairs(b_max, b_min):
        first = None
        for p in palintiples_upto(n, b, d_max):
            report.checked += 1
            if first is None:
                first = p
            elif p.cls is not first.cls:
                report.counterexamples.append(
                    Counterexample.of(p, None, f"class {p.cls}; {first.digits} is {first.cls}")
                )
    return report


def check_shifted_constant_carries(b_max: int, d_max: int, b_min: int = 3) -> ConjectureReport:
    """Shifted-symmetric palintiples have constant interior carries c_1 = ... = c_k,
    and that constant solves the pair's congruence."""
    report = ConjectureReport("shifted-constant", _bounds(b_max, d_max, b_min))
    for n, b in _pairs(b_max, b_min):
        solutions = None
        for p in palintiples_upto(n, b, d_max):
            if p.cls is not PalintipleClass.SHIFTED_SYMMETRIC:
                continue
            report.checked += 1
            cs = p.carries.carries
            inner = cs[1 : p.k + 1]
            bad = next((j + 1 for j, c in enumerate(inner) if c != inner[0]), None)
            if bad is not None:
                report.counterexamples.append(Counterexample.of(p, bad, "interior carry varies"))
                continue
            if solutions is None:
                solutions = congruence_solutions(n, b)
            if inner[0] not in solutions:
                report.counterexamples.append(
                    Counterexample.of(p, 1, f"carry {inner[0]} not in {solutions}")
                )
    return report


def check_shifted_carry_congruence(b_max: int, d_max: int, b_min: int = 3) -> ConjectureReport:
    """Every carry of a shifted-symmetric palintiple is 0 or solves
    (b - n)c = 0 mod (n^2 - 1).

    Unlike ``check_shifted_constant_carries`` this allows the carry to drop
    back to 0 and to switch between solutions, as concatenations do.
    """
    report = ConjectureReport("shifted-congruence", _bounds(b_max, d_max, b_min))
    for n, b in _pairs(b_max, b_min):
        solutions = None
        for p in palintiples_upto(n, b, d_max):
            if p.cls is not PalintipleClass.SHIFTED_SYMMETRIC:
                continue
            report.checked += 1
            if solutions is None:
                solutions = set(congruence_solutions(n, b))
            cs = p.carries.carries
            bad = next((j for j, c in enumerate(cs) if c and c not in solutions), None)
            if bad is not None:
                report.counterexamples.append(
                    Counterexample.of(p, bad, f"carry {cs[bad]} not in {sorted(solutions)}")
                )
    return report


def check_reg1_generator(n: int, b: int, d_max: int) -> ConjectureReport:
    """Generated and enumerated symmetric palintiples coincide, per length."""
    report = ConjectureReport("reg1", {"n": n, "b": b, "d_max": d_max})
    g = CarryPairGraph(n, b)
    for m in range(2, d_max + 1):
        found = {
            p.digits: p
            for p in enumerate_palintiples(n, b, m, graph=g)
            if p.cls is PalintipleClass.SYMMETRIC
        }
        made = {}
        for r in enumerate_r_sequences(m - 1):
            p = generate_symmetric(n, b, r)
            made[p.digits] = p
        report.checked += len(found.keys() | made.keys())
        for key in sorted(made.keys() - found.keys(), key=lambda d: d.msd_first()):
            report.counterexamples.append(Counterexample.of(made[key], None, "generated, not enumerated"))
        for key in sorted(found.keys() - made.keys(), key=lambda d: d.msd_first()):
            report.counterexamples.append(Counterexample.of(found[key], None, "enumerated, not generated"))
        for key in sorted(found, key=lambda d: d.msd_first()):
            p = found[key]
            try:
                r = recover_r_sequence(p)
            except (CarryNotMultiple, InvalidRSequence) as exc:
                report.counterexamples.append(Counterexample.of(p, exc.index, str(exc)))
                continue
            if generate_symmetric(n, b, r).digits != p.digits:
                report.counterexamples.append(Counterexample.of(p, None, "round trip differs"))
    return report


@dataclass
class EquivalenceReport:
    """Values of the four candidate-equivalent conditions for one pair.

    Conditions 1 and 3 quantify over palintiples; they are ``"vacuous"`` when
    none exist within the bound, and condition 3 is also vacuous for n = 2
    where every integer is divisible by n - 1.
    """

    n: int
    b: int
    d_max: int
    count: int
    all_symmetric: bool | str
    is_1089_type: bool
    carries_divisible: bool | str
    n_plus_one_divides_b: bool

    @property
    def values(self) -> tuple:
        return (
            self.all_symmetric,
            self.is_1089_type,
            self.carries_divisible,
            self.n_plus_one_divides_b,
        )

    @property
    def consistent(self) -> bool:
        decided = {v for v in self.values if v != VACUOUS}
        return len(decided) <= 1

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "b": self.b,
            "d_max": self.d_max,
            "palintiples_checked": self.count,
            "conditions": {
                "symmetric": self.all_symmetric,
                "graph_1089_type": self.is_1089_type,
                "carries_divisible": self.carries_divisible,
                "n_plus_one_divides_b": self.n_plus_one_divides_b,
            },
            "consistent": self.consistent,
            "verdict": NO_COUNTEREXAMPLE if self.consistent else COUNTEREXAMPLE_FOUND,
        }


def check_equivalences(n: int, b: int, d_max: int) -> EquivalenceReport:
    pals = list(palintiples_upto(n, b, d_max))
    if pals:
        sym = all(p.cls is PalintipleClass.SYMMETRIC for p in pals)
        div = all(c % (n - 1) == 0 for p in pals for c in p.carries.carries)
    else:
        sym = div = VACUOUS
    if n == 2:
        div = VACUOUS
    return EquivalenceReport(
        n, b, d_max, len(pals), sym, is_1089_type(n, b), div, b % (n + 1) == 0
    )


CHECKS = {
    "conjecture1": check_conjecture1,
    "corollary2": check_corollary2,
    "pal-type": check_pal_type,
    "shifted-constant": check_shifted_constant_carries,
    "shifted-congruence": check_shifted_carry_congruence,
}
