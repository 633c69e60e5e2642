"""Base classification and range scans.

A base is *symmetric* when no (n, b) pair admits an asymmetric palintiple,
and *strongly symmetric* when every palintiple in it is symmetric.  Existence
is always decided exactly by carry-graph reachability.  Which class the
palintiples of a pair have comes either from the pair's arithmetic class
(mode ``congruence``) or from classifying every palintiple up to a digit
bound (mode ``enumerate-to-depth:D``), falling back to the arithmetic class
for pairs whose palintiples are all longer than the bound.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .digits import PalintipleClass
from .errors import BadParameters, CheckpointCorrupt
from .graph import CarryPairGraph, enumerate_palintiples, min_digits
from .theory import PairClass, pair_class

log = logging.getLogger(__name__)

CONGRUENCE = "congruence"
ENUMERATE_PREFIX = "enumerate-to-depth:"

# Status of small bases as recorded in the literature; the scanner reports
# these next to its own verdicts and never uses them to decide anything.
LITERATURE_STATUS = {
    **{b: "no asymmetric palintiples (proved)" for b in (3, 4, 6)},
    **{b: "no asymmetric palintiples (conditional on carry conjecture)" for b in (5, 7, 9, 13)},
    **{b: "only symmetric palintiples (conjectured)" for b in (10, 12, 16)},
    **{b: "asymmetric palintiples known" for b in (8, 11, 14, 15, 17, 18, 19, 20)},
}


def parse_mode(mode: str) -> int | None:
    """Return the enumeration depth of ``mode``, or None for congruence mode."""
    if mode == CONGRUENCE:
        return None
    if mode.startswith(ENUMERATE_PREFIX):
        depth = int(mode[len(ENUMERATE_PREFIX):])
        if depth < 2:
            raise BadParameters("enumeration depth must be at least 2")
        return depth
    raise BadParameters(f"unknown mode {mode!r}")


def enumerate_mode(depth: int) -> str:
    return f"{ENUMERATE_PREFIX}{depth}"


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass
class PairRow:
    n: int
    pair_class: PairClass
    exists: bool
    min_digits: int | None
    observed: tuple[PalintipleClass, ...] | None = None
    observed_count: int | None = None

    @property
    def effective_classes(self) -> tuple[PalintipleClass, ...]:
        if not self.exists:
            return ()
        if self.observed:
            return self.observed
        return (self.pair_class.palintiple_class,)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "pair_class": self.pair_class.value,
            "exists": self.exists,
            "min_digits": self.min_digits,
        }
        if self.observed is not None:
            out["observed"] = [c.value for c in self.observed]
            out["observed_count"] = self.observed_count
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "PairRow":
        observed = d.get("observed")
        return cls(
            d["n"],
            PairClass(d["pair_class"]),
            d["exists"],
            d["min_digits"],
            None if observed is None else tuple(PalintipleClass(c) for c in observed),
            d.get("observed_count"),
        )


@dataclass
class BaseReport:
    base: int
    mode: str
    rows: list[PairRow]
    complete: bool = True
    disagreements: list[dict] = field(default_factory=list)

    def _with(self, cls: PalintipleClass) -> list[PairRow]:
        return [r for r in self.rows if cls in r.effective_classes]

    @property
    def is_symmetric_base(self) -> bool:
        return not self._with(PalintipleClass.ASYMMETRIC)

    @property
    def is_strongly_symmetric(self) -> bool:
        return self.is_symmetric_base and not self._with(PalintipleClass.SHIFTED_SYMMETRIC)

    @property
    def witness(self) -> PairRow | None:
        """First pair admitting asymmetric palintiples."""
        rows = self._with(PalintipleClass.ASYMMETRIC)
        return rows[0] if rows else None

    @property
    def literature_status(self) -> str | None:
        return LITERATURE_STATUS.get(self.base)

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "base": self.base,
            "mode": self.mode,
            "complete": self.complete,
            "is_symmetric_base": self.is_symmetric_base,
            "is_strongly_symmetric": self.is_strongly_symmetric,
            "witness_n": None if w is None else w.n,
            "witness_min_digits": None if w is None else w.min_digits,
            "literature_status": self.literature_status,
            "rows": [r.to_dict() for r in self.rows],
            "disagreements": list(self.disagreements),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BaseReport":
        return cls(
            d["base"],
            d["mode"],
            [PairRow.from_dict(r) for r in d["rows"]],
            d.get("complete", True),
            list(d.get("disagreements", [])),
        )


def base_report(b: int, mode: str = CONGRUENCE, early_exit: bool = False) -> BaseReport:
    """Classify every multiplier of base ``b``.

    With ``early_exit`` the report stops at the first pair that admits an
    asymmetric palintiple; ``complete`` is then False when rows were cut.
    """
    if b < 3:
        raise BadParameters(f"base must be at least 3, got {b}")
    depth = parse_mode(mode)
    report = BaseReport(b, mode, [])
    for n in range(2, b):
        g = CarryPairGraph(n, b)
        pc = pair_class(n, b)
        md = min_digits(n, b, graph=g)
        row = PairRow(n, pc, md is not None, md)
        if depth is not None:
            seen = []
            count = 0
            if md is not None:
                for m in range(md, depth + 1):
                    for p in enumerate_palintiples(n, b, m, graph=g):
                        count += 1
                        if p.cls not in seen:
                            seen.append(p.cls)
                        if p.cls is not pc.palintiple_class:
                            report.disagreements.append(
                                {
                                    "n": n,
                                    "digits": str(p.digits),
                                    "carry_class": p.cls.value,
                                    "pair_class": pc.value,
                                }
                            )
            row.observed = tuple(sorted(seen, key=list(PalintipleClass).index))
            row.observed_count = count
        report.rows.append(row)
        if early_exit and PalintipleClass.ASYMMETRIC in row.effective_classes:
            report.complete = n == b - 1
            break
    return report


# ---------------------------------------------------------------------------
# Checkpointed range scans
# ---------------------------------------------------------------------------


def load_checkpoint(path, mode: str | None = None) -> dict[int, BaseReport]:
    """Read a JSON-lines checkpoint.

    A final line without a newline is the trace of an interrupted write: it
    is dropped and the file truncated to the last complete line.
    """
    path = Path(path)
    if not path.exists():
        return {}
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise CheckpointCorrupt(f"cannot read {path}: {exc}") from exc
    if raw and not raw.endswith(b"\n"):
        cut = raw.rfind(b"\n") + 1
        log.warning("dropping partial trailing line in %s", path)
        with open(path, "r+b") as fh:
            fh.truncate(cut)
        raw = raw[:cut]
    out = {}
    for lineno, line in enumerate(raw.decode("utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rep = BaseReport.from_dict(json.loads(line))
        except (ValueError, KeyError, TypeError) as exc:
            raise CheckpointCorrupt(f"{path}:{lineno}: {exc}") from exc
        if mode is not None and rep.mode != mode:
            raise CheckpointCorrupt(
                f"{path}:{lineno}: mode {rep.mode!r} does not match {mode!r}"
            )
        out[rep.base] = rep
    return out


def _append(fh, report: BaseReport) -> None:
    fh.write(json.dumps(report.to_dict(), sort_keys=True) + "\n")
    fh.flush()
    os.fsync(fh.fileno())


def _task(args):
    b, mode, early_exit = args
    return base_report(b, mode, early_exit)


@dataclass
class ScanSummary:
    b_from: int
    b_to: int
    mode: str
    reports: list[BaseReport]

    @property
    def symmetric_bases(self) -> list[int]:
        return [r.base for r in self.reports if r.is_symmetric_base]

    @property
    def strongly_symmetric_bases(self) -> list[int]:
        return [r.base for r in self.reports if r.is_strongly_symmetric]

    @property
    def asymmetric_bases(self) -> list[int]:
        return [r.base for r in self.reports if not r.is_symmetric_base]

    @property
    def theorem6_violations(self) -> list[int]:
        """Strongly symmetric bases b > 3 with b + 1 composite (must be empty)."""
        return [b for b in self.strongly_symmetric_bases if b > 3 and not is_prime(b + 1)]

    @property
    def notes(self) -> list[str]:
        out = []
        for r in self.reports:
            status = r.literature_status
            if status and "conjectured" in status and r.is_strongly_symmetric:
                out.append(
                    f"base {r.base}: strongly symmetric by exhaustive carry-graph "
                    f"reachability; literature status: {status}"
                )
        return out

    def to_dict(self) -> dict:
        return {
            "from": self.b_from,
            "to": self.b_to,
            "mode": self.mode,
            "symmetric_bases": self.symmetric_bases,
            "strongly_symmetric_bases": self.strongly_symmetric_bases,
            "theorem6_violations": self.theorem6_violations,
            "notes": self.notes,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["base", "is_symmetric", "is_strongly_symmetric", "witness_n", "witness_min_digits"])
        for r in self.reports:
            wit = r.witness
            w.writerow(
                [
                    r.base,
                    str(r.is_symmetric_base).lower(),
                    str(r.is_strongly_symmetric).lower(),
                    "" if wit is None else wit.n,
                    "" if wit is None or wit.min_digits is None else wit.min_digits,
                ]
            )
        return buf.getvalue()


def scan_bases(
    b_from: int,
    b_to: int,
    mode: str = CONGRUENCE,
    parallelism: int = 1,
    checkpoint_path=None,
    early_exit: bool = True,
) -> ScanSummary:
    """Report every base in [b_from, b_to], resuming from ``checkpoint_path``.

    Bases already in the checkpoint are not recomputed.  New reports are
    appended in base order, one fsynced line each.
    """
    if not 3 <= b_from <= b_to:
        raise BadParameters(f"need 3 <= from <= to, got [{b_from}, {b_to}]")
    parse_mode(mode)
    done = load_checkpoint(checkpoint_path, mode) if checkpoint_path else {}
    todo = [b for b in range(b_from, b_to + 1) if b not in done]
    tasks = [(b, mode, early_exit) for b in todo]

    fh = open(checkpoint_path, "a", encoding="utf-8") if checkpoint_path else None
    try:
        if parallelism > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=parallelism) as pool:
                for rep in pool.map(_task, tasks, chunksize=max(1, len(tasks) // (8 * parallelism))):
                    done[rep.base] = rep
                    if fh:
                        _append(fh, rep)
        else:
            for t in tasks:
                rep = _task(t)
                done[rep.base] = rep
                if fh:
                    _append(fh, rep)
    finally:
        if fh:
            fh.close()

    summary = ScanSummary(b_from, b_to, mode, [done[b] for b in range(b_from, b_to + 1)])
    if summary.theorem6_violations:
        log.error("strongly symmetric bases with composite b+1: %s", summary.theorem6_violations)
    return summary


# ---------------------------------------------------------------------------
# Minimal-palintiple dataset
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalPalintipleRow:
    base: int
    n: int
    digit_count: int
    d0: int
    dk: int
    digits: str
    ck: int

    def to_csv_row(self) -> list:
        return [self.base, self.n, self.digit_count, self.d0, self.dk, self.digits]


FIGURE1_COLUMNS = ["base", "n", "digit_count", "d0", "dk", "digits"]


def figure1_dataset(b_from: int = 3, b_to: int = 100) -> list[MinimalPalintipleRow]:
    """All palintiples of minimal length, for every pair with b in range."""
    rows = []
    for b in range(max(3, b_from), b_to + 1):
        for n in range(2, b):
            g = CarryPairGraph(n, b)
            md = min_digits(n, b, graph=g)
            if md is None:
                continue
            for p in enumerate_palintiples(n, b, md, graph=g):
                ds = p.digits.digits
                rows.append(
                    MinimalPalintipleRow(b, n, md, ds[0], ds[-1], str(p.digits), p.carries[p.k])
                )
    return rows


def figure1_csv(rows: list[MinimalPalintipleRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIGURE1_COLUMNS)
    for r in rows:
        w.writerow(r.to_csv_row())
    return buf.getvalue()
