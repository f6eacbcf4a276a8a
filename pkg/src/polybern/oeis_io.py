"""OEIS b-files: parse, serialize, fetch with an on-disk cache, compare.

Bundled fixtures under ``data/`` make every comparison work offline.
"""
from __future__ import annotations

import os
import tempfile
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from .sequences import Seq, value

__all__ = [
    "BFile",
    "BFileParseError",
    "Unavailable",
    "OEISConfig",
    "parse_bfile",
    "serialize_bfile",
    "load_fixture",
    "fetch_bfile",
    "antidiagonal_flatten",
    "local_terms",
    "ComparisonReport",
    "compare_sequence",
    "KNOWN",
]

KNOWN = ("A099594", "A098830", "A136127")

ENV_BASE_URL = "POLYBERN_OEIS_URL"
ENV_CACHE_DIR = "POLYBERN_CACHE_DIR"

Transport = Callable[[str, float], str]


class BFileParseError(ValueError):
    def __init__(self, line_no: int, line: str):
        super().__init__(f"line {line_no}: cannot parse {line!r}")
        self.line_no = line_no


class Unavailable(RuntimeError):
    pass


@dataclass(frozen=True)
class BFile:
    anum: str
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        idx = [i for i, _ in self.terms]
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError("b-file indices must be strictly increasing")

    @property
    def values(self) -> list[int]:
        return [v for _, v in self.terms]

    @property
    def indices(self) -> list[int]:
        return [i for i, _ in self.terms]


def normalize_anum(anum: str) -> str:
    a = anum.strip().upper()
    if a.startswith("B"):
        a = "A" + a[1:]
    if not a.startswith("A"):
        a = "A" + a
    digits = a[1:]
    if not digits.isdigit():
        raise ValueError(f"bad A-number {anum!r}")
    return "A" + digits.zfill(6)


def parse_bfile(text: str, anum: str = "") -> BFile:
    terms = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(no, raw)
        try:
            terms.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise BFileParseError(no, raw) from None
    try:
        return BFile(anum, tuple(terms))
    except ValueError as e:
        raise BFileParseError(len(text.splitlines()), str(e)) from None


def serialize_bfile(b: BFile) -> str:
    return "".join(f"{i} {v}\n" for i, v in b.terms)


def _fixture_name(anum: str) -> str:
    return "b" + normalize_anum(anum)[1:] + ".txt"


def load_fixture(anum: str) -> BFile:
    anum = normalize_anum(anum)
    try:
        text = resources.files("polybern").joinpath("data").joinpath(_fixture_name(anum)).read_text()
    except FileNotFoundError:
        raise Unavailable(f"no bundled fixture for {anum}") from None
    return parse_bfile(text, anum)


def _default_transport(url: str, timeout: float) -> str:
    with urllib.request.urlopen(url, timeout=timeout) as r:
        return r.read().decode("utf-8")


@dataclass
class OEISConfig:
    base_url: str = field(default_factory=lambda: os.environ.get(ENV_BASE_URL, "https://oeis.org"))
    cache_dir: Path = field(default_factory=lambda: Path(
        os.environ.get(ENV_CACHE_DIR, Path.home() / ".cache" / "polybern")))
    offline: bool = False
    timeout: float = 20.0


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fetch_bfile(anum: str, config: OEISConfig | None = None, transport: Transport | None = None) -> BFile:
    """Cache first, then the network (unless offline), then the bundled fixture when offline."""
    config = config or OEISConfig()
    anum = normalize_anum(anum)
    cached = Path(config.cache_dir) / _fixture_name(anum)
    if cached.exists():
        return parse_bfile(cached.read_text(), anum)
    if config.offline:
        return load_fixture(anum)
    url = f"{config.base_url.rstrip('/')}/{anum}/{_fixture_name(anum)}"
    try:
        text = (transport or _default_transport)(url, config.timeout)
    except Exception as e:
        raise Unavailable(f"could not fetch {url}: {e}") from e
    b = parse_bfile(text, anum)  # validate before caching
    _atomic_write(cached, text)
    return b


# local side -------------------------------------------------------------------

def antidiagonal_flatten(f: Callable[[int, int], int], n_terms: int) -> list[int]:
    """f(0,0), f(0,1), f(1,0), f(0,2), f(1,1), ...: within a diagonal n runs upward."""
    out: list[int] = []
    N = 0
    while len(out) < n_terms:
        for n in range(N + 1):
            if len(out) == n_terms:
                break
            out.append(f(n, N - n))
        N += 1
    return out


def local_terms(anum: str, indices: Sequence[int]) -> list[int]:
    from .diagonal import diagonal_sum

    anum = normalize_anum(anum)
    if anum == "A098830":
        return [diagonal_sum(Seq.B, i) for i in indices]
    if anum == "A136127":
        return [diagonal_sum(Seq.C, i) for i in indices]
    if anum == "A099594":
        flat = antidiagonal_flatten(lambda n, k: value(Seq.B, n, k), max(indices, default=-1) + 1)
        return [flat[i] for i in indices]
    raise ValueError(f"no local model for {anum}")


@dataclass
class ComparisonReport:
    anum: str
    rows: list[tuple[int, int, int]]  # (index, oeis value, local value)

    @property
    def mismatches(self) -> list[tuple[int, int, int]]:
        return [r for r in self.rows if r[1] != r[2]]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {"anum": self.anum, "ok": self.ok, "compared": len(self.rows),
                "mismatches": [{"index": i, "oeis": str(a), "local": str(b)} for i, a, b in self.mismatches]}


def compare_sequence(anum: str, local: Sequence[int] | None = None, offset: int | None = None,
                     bfile: BFile | None = None, config: OEISConfig | None = None) -> ComparisonReport:
    """Compare a b-file to local values.

    ``local[j]`` is matched to index ``offset + j`` (offset defaults to the
    b-file's first index).  Without ``local`` the package computes its own terms.
    """
    anum = normalize_anum(anum)
    b = bfile or fetch_bfile(anum, config)
    if local is None:
        mine = dict(zip(b.indices, local_terms(anum, b.indices)))
    else:
        start = b.indices[0] if offset is None and b.terms else (offset or 0)
        mine = {start + j: v for j, v in enumerate(local)}
    rows = [(i, v, mine[i]) for i, v in b.terms if i in mine]
    if b.terms and mine and not rows:
        raise ValueError("local values do not overlap the b-file indices")
    return ComparisonReport(anum, rows)
