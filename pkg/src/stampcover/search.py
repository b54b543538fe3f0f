"""Exhaustive desk-scale searches over whole boxes of bases.

Three layers: enumerators that stream bases in lexicographic order,
a conjecture scan that turns each basis into a report (optionally on a
process pool, preserving order), and an append-only JSONL writer whose
runs can be interrupted and resumed without changing the final bytes.
The extremal search maximises the cover over every basis of a given
size, deriving a sound top-element ceiling when none is supplied.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .analysis import BasisReport, analyze, symmetrize_even, symmetrize_odd
from .core import Basis, cover, parse_basis
from .errors import StampError, TooLargeError

# Refuse extremal searches beyond this many candidate bases.
DEFAULT_EXTREMAL_CEILING = 100_000

_SCAN_CHUNK = 16  # bases per process-pool work item


# ---------- enumeration ----------


def enumerate_all_bases(k: int, ak_max: int) -> Iterator[Basis]:
    """Every basis with k elements and top at most ak_max, lexicographic."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if ak_max < k:
        raise ValueError(f"ak_max {ak_max} cannot fit {k} increasing elements")
    if k == 1:
        yield Basis((1,))
        return
    for rest in itertools.combinations(range(2, ak_max + 1), k - 1):
        yield Basis((1,) + rest)


def enumerate_symmetric(k: int, ak_max: int) -> Iterator[Basis]:
    """Every symmetric basis with k elements and top at most ak_max.

    A symmetric basis is determined by its lower half, so the stream
    walks the halves in lexicographic order (which matches lexicographic
    order of the full bases) and mirrors each one.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if ak_max < k:
        raise ValueError(f"ak_max {ak_max} cannot fit {k} increasing elements")
    if k == 1:
        yield Basis((1,))
        return
    if k % 2:
        m = (k + 1) // 2
        for mid in itertools.combinations(range(2, ak_max), m - 1):
            half = (1,) + mid
            if half[-1] + half[-2] > ak_max:
                continue
            yield symmetrize_odd(Basis(half))
    else:
        m = k // 2
        for mid in itertools.combinations(range(2, ak_max // 2 + 1), m - 1):
            half = (1,) + mid
            yield symmetrize_even(Basis(half))


# ---------- conjecture scan ----------


@dataclass(frozen=True)
class ScanSpec:
    """One scan box: basis size, top-element cap, h1 cap, enumeration mode."""

    k: int
    ak_max: int
    h_cap: int | None = None
    mode: str = "symmetric"

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if self.ak_max < self.k:
            raise ValueError(
                f"ak_max {self.ak_max} cannot fit {self.k} increasing elements"
            )
        if self.mode not in ("symmetric", "all"):
            raise ValueError(f"mode must be 'symmetric' or 'all', got {self.mode!r}")
        if self.h_cap is not None and self.h_cap < 1:
            raise ValueError(f"h_cap must be at least 1, got {self.h_cap}")


@dataclass(frozen=True)
class ScanFailure:
    """A basis the scan could not analyze; the scan itself continues."""

    basis: Basis
    error: str

    def to_json_dict(self) -> dict:
        return {
            "basis": str(self.basis),
            "k": self.basis.k,
            "error": self.error,
        }


@dataclass(frozen=True)
class ScanSummary:
    scanned: int
    counterexamples: int


def _candidates(spec: ScanSpec) -> Iterator[Basis]:
    if spec.mode == "symmetric":
        return enumerate_symmetric(spec.k, spec.ak_max)
    return enumerate_all_bases(spec.k, spec.ak_max)


def _evaluate(job: tuple[tuple[int, ...], int | None]) -> BasisReport | ScanFailure:
    """Analyze one basis; must stay top-level so worker processes can load it."""
    elements, h_cap = job
    basis = Basis(elements)
    try:
        return analyze(basis, cap=h_cap)
    except (StampError, ValueError) as exc:
        return ScanFailure(basis, f"{type(exc).__name__}: {exc}")


def scan_conjecture(
    spec: ScanSpec,
    *,
    threads: int = 1,
    start_after: Basis | None = None,
) -> Iterator[BasisReport | ScanFailure]:
    """Reports for every basis in the box, in enumeration order.

    ``start_after`` skips every basis up to and including the given one,
    which is how resumed scans continue.  With ``threads`` > 1 the work
    runs on a process pool but results are still yielded in enumeration
    order, so the output stream does not depend on the worker count.
    """
    if threads < 1:
        raise ValueError(f"threads must be at least 1, got {threads}")
    bases = _candidates(spec)
    if start_after is not None:
        skip = start_after.elements
        bases = itertools.dropwhile(lambda b: b.elements <= skip, bases)
    jobs = ((basis.elements, spec.h_cap) for basis in bases)
    if threads == 1:
        yield from map(_evaluate, jobs)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(_evaluate, jobs, chunksize=_SCAN_CHUNK)


# ---------- persistence ----------


def _dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"))


@dataclass(frozen=True)
class _ResumeState:
    offset: int  # byte length of the complete-line prefix
    scanned: int
    counterexamples: int
    last_basis: str | None
    summary: dict | None


def checkpoint_path(out_path: str) -> str:
    """Sidecar file recording the last basis whose line hit the output."""
    return out_path + ".checkpoint"


def _write_checkpoint(path: str, basis_text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(basis_text + "\n")
    os.replace(tmp, path)


def _read_resume_state(out_path: str) -> _ResumeState:
    """Replay the complete JSONL lines already on disk.

    Anything after the last complete, parseable line (a torn final line
    from an interrupted run) is treated as garbage to truncate.  The
    output file itself is the authority; the checkpoint sidecar is only
    a convenience for humans watching a long scan.
    """
    with open(out_path, "rb") as fh:
        raw = fh.read()
    offset = 0
    scanned = 0
    counterexamples = 0
    last_basis = None
    summary = None
    for line in raw.split(b"\n"):
        end = offset + len(line) + 1
        if end > len(raw):
            break  # no trailing newline: torn line
        try:
            obj = json.loads(line.decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            break
        if not isinstance(obj, dict):
            break
        if "summary" in obj:
            summary = obj["summary"]
            offset = end
            break
        if "basis" not in obj:
            break
        scanned += 1
        if obj.get("counterexample") is True:
            counterexamples += 1
        last_basis = obj["basis"]
        offset = end
    return _ResumeState(offset, scanned, counterexamples, last_basis, summary)


def run_scan(
    spec: ScanSpec,
    out_path: str,
    *,
    resume: bool = False,
    threads: int = 1,
) -> ScanSummary:
    """Scan the box, appending one JSON line per basis to ``out_path``.

    The final line is ``{"summary": {"scanned": N, "counterexamples": M}}``.
    With ``resume=True`` an interrupted output file is truncated to its
    last complete line and the scan continues after the last recorded
    basis; a file that already ends in a summary is left untouched.  The
    bytes produced by run-to-completion and by any interrupt/resume
    sequence are identical.
    """
    scanned = 0
    counterexamples = 0
    start_after = None
    mode = "w"
    if resume and os.path.exists(out_path):
        state = _read_resume_state(out_path)
        if state.summary is not None:
            return ScanSummary(
                int(state.summary["scanned"]),
                int(state.summary["counterexamples"]),
            )
        with open(out_path, "r+b") as fh:
            fh.truncate(state.offset)
        scanned = state.scanned
        counterexamples = state.counterexamples
        if state.last_basis is not None:
            start_after = parse_basis(state.last_basis)
        mode = "a"
    ckpt = checkpoint_path(out_path)
    with open(out_path, mode, encoding="utf-8", newline="\n") as fh:
        for item in scan_conjecture(spec, threads=threads, start_after=start_after):
            fh.write(_dumps(item.to_json_dict()) + "\n")
            fh.flush()
            scanned += 1
            if isinstance(item, BasisReport) and item.counterexample:
                counterexamples += 1
            _write_checkpoint(ckpt, str(item.basis))
        summary = ScanSummary(scanned, counterexamples)
        fh.write(
            _dumps(
                {
                    "summary": {
                        "scanned": summary.scanned,
                        "counterexamples": summary.counterexamples,
                    }
                }
            )
            + "\n"
        )
    try:
        os.remove(ckpt)
    except FileNotFoundError:
        pass
    return summary


# ---------- extremal search ----------


@dataclass(frozen=True)
class ExtremalResult:
    """Best cover over every basis with k elements and top <= ak_ceiling."""

    h: int
    k: int
    ak_ceiling: int
    n_star: int
    witnesses: tuple[Basis, ...]


def search_extremal(
    h: int,
    k: int,
    ak_ceiling: int | None = None,
    *,
    max_candidates: int = DEFAULT_EXTREMAL_CEILING,
) -> ExtremalResult:
    """Exhaustive maximum of cover(h) over k-element bases, with witnesses.

    When ``ak_ceiling`` is omitted it is derived as one more than the
    extremal cover for k - 1 elements: any basis whose top exceeds that
    has a value below its top that even the remaining k - 1 elements
    cannot cover, so it can never beat the k - 1 optimum and is safe to
    skip.  Raises TooLargeError before any covers are computed when the
    candidate count C(ak_ceiling - 1, k - 1) exceeds ``max_candidates``.
    """
    if h < 1:
        raise ValueError(f"h must be at least 1, got {h}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if ak_ceiling is None:
        if k == 1:
            ak_ceiling = 1
        else:
            previous = search_extremal(h, k - 1, max_candidates=max_candidates)
            ak_ceiling = previous.n_star + 1
    if ak_ceiling < k:
        raise ValueError(
            f"ak_ceiling {ak_ceiling} cannot fit {k} increasing elements"
        )
    count = math.comb(ak_ceiling - 1, k - 1)
    if count > max_candidates:
        raise TooLargeError(
            f"h={h}, k={k}: {count} candidate bases exceed the ceiling "
            f"{max_candidates}"
        )
    best = -1
    witnesses: list[Basis] = []
    for basis in enumerate_all_bases(k, ak_ceiling):
        n = cover(basis, h)
        if n > best:
            best = n
            witnesses = [basis]
        elif n == best:
            witnesses.append(basis)
    return ExtremalResult(h, k, ak_ceiling, best, tuple(witnesses))
