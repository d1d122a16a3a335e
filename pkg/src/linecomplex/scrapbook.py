"""Representative complexes for every label, exported as figures and text.

Representatives are the first complexes of a class in colex rank order.  Each
one is written three ways: Graphviz DOT, a TikZ picture, and the ``.cplx``
text format::

    points: 8
    line: 0 1
    ...            (one line per member, ascending LineId)
    label: CYCLE_8

All exports are byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

from .checker import is_admissible_graph
from .enumerator import label_codes
from .geometry import N_POINTS, Complex, InvalidComplexError, rank_complex, unrank_complex
from .taxonomy import TaxonomyLabel, classify, label_from_name

DEFAULT_LAYOUT: tuple[tuple[float, float], ...] = tuple(
    (2 * (p % 4), 2 * (p // 4)) for p in range(N_POINTS)
)


class InsufficientPopulationError(LookupError):
    def __init__(self, label: TaxonomyLabel, requested: int, population: int):
        self.label = label
        self.requested = requested
        self.population = population
        super().__init__(f"{label.name} has only {population} complexes, {requested} requested")


class CplxParseError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class ScrapbookEntry:
    label: TaxonomyLabel
    complex: Complex
    layout_hint: Optional[tuple[tuple[float, float], ...]] = None
    caption: str = ""

    def __post_init__(self):
        if self.layout_hint is not None and len(self.layout_hint) != N_POINTS:
            raise ValueError(f"layout_hint needs {N_POINTS} coordinates")
        if classify(self.complex) is not self.label:
            raise ValueError(f"{self.complex!r} is not labelled {self.label.name}")

    @property
    def rank(self) -> int:
        return rank_complex(self.complex)


@lru_cache(maxsize=None)
def _codes() -> bytes:
    return bytes(label_codes())


def population(label: TaxonomyLabel) -> int:
    return _codes().count(label.value.to_bytes(1, "little"))


def _caption(label: TaxonomyLabel, c: Complex) -> str:
    return f"{label.name}, colex rank {rank_complex(c)}, {is_admissible_graph(c).diagnosis()}"


def representative(label: TaxonomyLabel, k: int) -> list[ScrapbookEntry]:
    """The ``k`` lowest-ranked complexes carrying ``label``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    codes = _codes()
    needle = label.value.to_bytes(1, "little")
    ranks = []
    pos = codes.find(needle)
    while pos >= 0 and len(ranks) < k:
        ranks.append(pos)
        pos = codes.find(needle, pos + 1)
    if len(ranks) < k:
        raise InsufficientPopulationError(label, k, population(label))
    out = []
    for r in ranks:
        c = unrank_complex(r)
        out.append(ScrapbookEntry(label, c, caption=_caption(label, c)))
    return out


def _num(x: float) -> str:
    if isinstance(x, int) or float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def export_dot(e: ScrapbookEntry) -> str:
    lines = [
        f"// label: {e.label.name}",
        f"// rank: {e.rank}",
    ]
    if e.caption:
        lines.append(f"// {e.caption}")
    lines.append(f"graph complex_{e.rank} {{")
    lines.append("  node [shape=circle, label=\"\", style=filled, fillcolor=gray70, width=0.25];")
    if e.layout_hint is not None:
        for p, (x, y) in enumerate(e.layout_hint):
            lines.append(f"  p{p} [pos=\"{_num(x)},{_num(y)}!\"];")
    else:
        lines.append("  " + " ".join(f"p{p};" for p in range(N_POINTS)))
    for a, b in e.complex.pairs:
        lines.append(f"  p{a} -- p{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tikz(e: ScrapbookEntry) -> str:
    coords = e.layout_hint if e.layout_hint is not None else DEFAULT_LAYOUT
    lines = [
        f"% label: {e.label.name}",
        f"% rank: {e.rank}",
    ]
    if e.caption:
        lines.append(f"% {e.caption}")
    lines.append("\\begin{tikzpicture}")
    for p, (x, y) in enumerate(coords):
        lines.append(
            f"  \\node[circle, shading=ball, ball color=gray!60, inner sep=2.5pt]"
            f" (p{p}) at ({_num(x)}, {_num(y)}) {{}};"
        )
    for a, b in e.complex.pairs:
        lines.append(f"  \\draw (p{a}) -- (p{b});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def export_cplx(c: Complex, label: Optional[TaxonomyLabel] = None) -> str:
    lines = [f"points: {N_POINTS}"]
    lines += [f"line: {a} {b}" for a, b in c.pairs]
    if label is not None:
        lines.append(f"label: {label.name}")
    return "\n".join(lines) + "\n"


def parse_cplx(text: str) -> tuple[Complex, Optional[TaxonomyLabel]]:
    """Read the ``.cplx`` format; blank lines and ``#`` comments are skipped."""
    points = None
    pairs: list[tuple[int, int]] = []
    label = None
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise CplxParseError(f"expected 'key: value', got {raw.strip()!r}", lineno)
        key, value = key.strip(), value.strip()
        if key == "points":
            if points is not None:
                raise CplxParseError("repeated 'points' entry", lineno)
            if value != str(N_POINTS):
                raise CplxParseError(f"only {N_POINTS}-point complexes are supported", lineno)
            points = N_POINTS
        elif key == "line":
            parts = value.split()
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise CplxParseError(f"a line is two point numbers, got {value!r}", lineno)
            a, b = int(parts[0]), int(parts[1])
            if a >= N_POINTS or b >= N_POINTS:
                raise CplxParseError(f"point out of range 0..{N_POINTS - 1} in {value!r}", lineno)
            if a == b:
                raise CplxParseError(f"degenerate line {value!r}", lineno)
            if (min(a, b), max(a, b)) in pairs:
                raise CplxParseError(f"duplicate line {value!r}", lineno)
            pairs.append((min(a, b), max(a, b)))
        elif key == "label":
            if label is not None:
                raise CplxParseError("repeated 'label' entry", lineno)
            try:
                label = label_from_name(value)
            except ValueError as exc:
                raise CplxParseError(str(exc), lineno) from None
        else:
            raise CplxParseError(f"unknown key {key!r}", lineno)
    if points is None:
        raise CplxParseError("missing 'points: 8' entry", last or None)
    try:
        c = Complex.from_pairs(pairs)
    except InvalidComplexError as exc:
        raise CplxParseError(str(exc), last) from None
    return c, label


def parse_inline(text: str) -> Complex:
    """Comma-separated endpoint pairs, e.g. ``"0 1,1 2,2 3,3 4,4 5,5 6,6 7,0 7"``."""
    pairs = []
    for chunk in text.split(","):
        parts = chunk.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InvalidComplexError(f"expected two point numbers, got {chunk.strip()!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Complex.from_pairs(pairs)


def build_scrapbook(k_per_label: int, out_dir: str | Path,
                    labels: Optional[Sequence[TaxonomyLabel]] = None) -> list[Path]:
    """Write ``<label>/<rank>.{dot,tex,cplx}`` per representative and ``index.tsv``.

    Classes smaller than ``k_per_label`` are written in full and noted in the
    index rather than raising.
    """
    if k_per_label < 1:
        raise ValueError("k_per_label must be >= 1")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    index = ["label\tpopulation\temitted"]
    notes = []
    for label in labels or list(TaxonomyLabel):
        pop = population(label)
        try:
            entries = representative(label, k_per_label)
        except InsufficientPopulationError as exc:
            entries = representative(label, exc.population) if exc.population else []
            notes.append(f"# note: {label.name} truncated to {exc.population} of {k_per_label} requested")
        d = out / label.name
        d.mkdir(exist_ok=True)
        for e in entries:
            for suffix, text in ((".dot", export_dot(e)), (".tex", export_tikz(e)),
                                 (".cplx", export_cplx(e.complex, e.label))):
                path = d / f"{e.rank}{suffix}"
                path.write_text(text, encoding="utf-8", newline="\n")
                written.append(path)
        index.append(f"{label.name}\t{pop}\t{len(entries)}")
    path = out / "index.tsv"
    path.write_text("\n".join(index + notes) + "\n", encoding="utf-8", newline="\n")
    written.append(path)
    return written
