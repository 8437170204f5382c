"""OEIS b-file access with a local cache and bundled offline fixtures."""
from __future__ import annotations

import logging
import os
import re
import sys
import tempfile
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from .verify import FAIL, INCONCLUSIVE, PASS, VerificationReport

log = logging.getLogger(__name__)

KNOWN_IDS = ("A000079", "A001045", "A055099", "A256959", "A256960", "A059319", "A000302")
CACHE_ENV = "RHOMBUS_OEIS_CACHE"
URL = "https://oeis.org/{id}/b{digits}.txt"

# OEIS index of the first computed value, per sequence. The package's tables
# start at n = 0 except row counts, which start at row 1.
OFFSETS = {
    "A000079": 0,  # A_n = 2^n
    "A001045": 2,  # B_0 = 1 is a(2) of the Jacobsthal numbers 0, 1, 1, 3, ...
    "A055099": 0,  # C_n
    "A256959": 0,  # D_n
    "A256960": 0,  # E_n
    "A059319": 1,  # ones in row m, m >= 1
    "A000302": 0,  # F_n = 4^n
}

Transport = Callable[[str], str]


class BFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BFile:
    id: str
    entries: tuple[tuple[int, int], ...]
    source: str
    warning: str | None = None

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def values(self) -> list[int]:
        return [v for _, v in self.entries]


def check_id(seq_id: str) -> str:
    if not re.fullmatch(r"A\d{6}", seq_id):
        raise ValueError(f"malformed OEIS id {seq_id!r}")
    if seq_id not in KNOWN_IDS:
        raise ValueError(f"{seq_id} is not one of the recognised sequences {', '.join(KNOWN_IDS)}")
    return seq_id


def parse_bfile(text: str, seq_id: str = "", source: str = "fixture") -> BFile:
    entries: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise BFileError(f"malformed b-file line {line!r}", lineno)
        index, value = int(parts[0]), int(parts[1])
        if entries and index <= entries[-1][0]:
            raise BFileError(f"index {index} does not increase", lineno)
        entries.append((index, value))
    return BFile(seq_id, tuple(entries), source)


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    if sys.platform == "win32":
        base = Path(os.environ.get("LOCALAPPDATA", Path.home() / "AppData" / "Local"))
    elif sys.platform == "darwin":
        base = Path.home() / "Library" / "Caches"
    else:
        base = Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache"))
    return base / "rhombus" / "oeis"


def _cache_path(seq_id: str, root: Path | None) -> Path:
    return (root or cache_dir()) / f"b{seq_id[1:]}.txt"


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _http_get(url: str) -> str:
    with urllib.request.urlopen(url, timeout=30) as resp:
        return resp.read().decode("utf-8")


def fixture_text(seq_id: str) -> str:
    return resources.files("rhombus.data").joinpath(f"b{seq_id[1:]}.txt").read_text(encoding="utf-8")


def fetch_bfile(seq_id: str, mode: str = "offline", *, cache: Path | None = None,
                transport: Transport | None = None) -> BFile:
    """Load a b-file.

    ``online`` downloads and caches, falling back to the cache and then the
    fixture on network failure. ``offline`` reads the cache or the fixture
    and never touches ``transport``.
    """
    check_id(seq_id)
    if mode not in ("online", "offline"):
        raise ValueError(f"mode must be online or offline, not {mode!r}")
    path = _cache_path(seq_id, cache)
    warning = None
    if mode == "online":
        get = transport or _http_get
        url = URL.format(id=seq_id, digits=seq_id[1:])
        try:
            text = get(url)
        except OSError as exc:
            warning = f"download of {url} failed: {exc}"
            log.warning(warning)
        else:
            bfile = parse_bfile(text, seq_id, "network")
            _write_atomic(path, text)
            return bfile
    if path.is_file():
        bfile = parse_bfile(path.read_text(encoding="utf-8"), seq_id, "cache")
        return BFile(bfile.id, bfile.entries, bfile.source, warning)
    bfile = parse_bfile(fixture_text(seq_id), seq_id, "fixture")
    return BFile(bfile.id, bfile.entries, bfile.source, warning)


def compare(seq_id: str, computed: Sequence[int], offset: int | None = None,
            bfile: BFile | None = None, **fetch_kw) -> VerificationReport:
    """Element-wise check of ``computed[i]`` against b-file index ``i + offset``."""
    check_id(seq_id)
    if offset is None:
        offset = OFFSETS[seq_id]
    if bfile is None:
        bfile = fetch_bfile(seq_id, **fetch_kw)
    table = bfile.as_dict()
    params = {"id": seq_id, "offset": offset, "terms": len(computed), "source": bfile.source}
    missing = [i + offset for i in range(len(computed)) if i + offset not in table]
    if missing or not computed:
        return VerificationReport("oeis", params, INCONCLUSIVE, None, None,
                                  {"missing_index": missing[0]} if missing else None, 0)
    for i, value in enumerate(computed):
        want = table[i + offset]
        if value != want:
            return VerificationReport("oeis", params, FAIL, want, value, {"index": i + offset}, i + 1)
    return VerificationReport("oeis", params, PASS, computed[-1], computed[-1], None, len(computed))


def computed_terms(seq_id: str, terms: int) -> list[int]:
    """This package's own values for a recognised id, aligned with :data:`OFFSETS`."""
    from .grid import generate
    from .sequences import sequence

    check_id(seq_id)
    if terms < 1:
        raise ValueError("need at least one term")
    if seq_id == "A059319":
        grid = generate(terms)
        return [grid.rows[m].bit_count() for m in range(1, terms + 1)]
    name = {"A000079": "A", "A001045": "B", "A055099": "C", "A256959": "D",
            "A256960": "E", "A000302": "F"}[seq_id]
    return list(sequence(name, terms - 1).values)
