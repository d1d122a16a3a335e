import re
from pathlib import Path

import pytest

from linecomplex.geometry import Complex
from linecomplex.scrapbook import (
    CplxParseError,
    InsufficientPopulationError,
    ScrapbookEntry,
    build_scrapbook,
    export_cplx,
    export_dot,
    export_tikz,
    parse_cplx,
    population,
    representative,
)
from linecomplex.taxonomy import PAPER_VALUES, TaxonomyLabel as T, classify

GOLDEN = Path(__file__).parent / "golden"
TWO_TRIANGLES = Complex.from_pairs([(0, 1), (1, 2), (0, 2), (2, 3), (4, 5), (5, 6), (4, 6), (6, 7)])
HINT = ((0, 0), (2, 0), (1, 1.5), (1, 3), (4, 0), (6, 0), (5, 1.5), (5, 3))


def golden_entry():
    return ScrapbookEntry(T.ADMISSIBLE, TWO_TRIANGLES, HINT, "two triangles with pendants")


@pytest.mark.parametrize("suffix,render", [
    ("dot", export_dot),
    ("tex", export_tikz),
    ("cplx", lambda e: export_cplx(e.complex, e.label)),
])
def test_golden_files(suffix, render):
    expected = (GOLDEN / f"two_triangles.{suffix}").read_text(encoding="utf-8")
    assert render(golden_entry()) == expected


def test_dot_has_one_edge_per_line():
    (e,) = representative(T.CYCLE_8, 1)
    text = export_dot(e)
    edges = re.findall(r"^  p(\d) -- p(\d);$", text, re.M)
    assert [(int(a), int(b)) for a, b in edges] == list(e.complex.pairs)
    assert text.startswith("// label: CYCLE_8\n")
    assert export_dot(e) == text


def test_tikz_echoes_layout_hint():
    text = export_tikz(golden_entry())
    assert "(p2) at (1, 1.5)" in text and "(p7) at (5, 3)" in text
    assert len(re.findall(r"\\draw \(p\d\) -- \(p\d\);", text)) == 8


def test_tikz_default_layout():
    text = export_tikz(ScrapbookEntry(T.ADMISSIBLE, TWO_TRIANGLES))
    assert "(p5) at (2, 2)" in text


def test_entry_rejects_wrong_label_and_bad_hint():
    with pytest.raises(ValueError):
        ScrapbookEntry(T.CYCLE_8, TWO_TRIANGLES)
    with pytest.raises(ValueError):
        ScrapbookEntry(T.ADMISSIBLE, TWO_TRIANGLES, ((0, 0),))


@pytest.mark.parametrize("label", list(T), ids=lambda l: l.name)
def test_representatives_reclassify(label):
    entries = representative(label, 3)
    ranks = [e.rank for e in entries]
    assert ranks == sorted(set(ranks))
    assert all(classify(e.complex) is label for e in entries)


def test_insufficient_population():
    with pytest.raises(InsufficientPopulationError) as info:
        representative(T.TWO_4CYCLES, 400)
    assert info.value.population == 315 == population(T.TWO_4CYCLES)


def test_cplx_round_trip():
    for e in representative(T.UNIQUE_4CYCLE_CONNECTED_2, 5):
        assert parse_cplx(export_cplx(e.complex, e.label)) == (e.complex, e.label)
    assert parse_cplx(export_cplx(TWO_TRIANGLES)) == (TWO_TRIANGLES, None)


@pytest.mark.parametrize("text,lineno,fragment", [
    ("points: 8\nline: 0 1\nline: 1 0\n", 3, "duplicate"),
    ("points: 8\nline: 0 8\n", 2, "out of range"),
    ("points: 8\n\nline: 3 3\n", 3, "degenerate"),
    ("points: 7\n", 1, "8-point"),
    ("points: 8\nline 0 1\n", 2, "key: value"),
    ("points: 8\nline: 0 1\nlabel: PENTAGON\n", 3, "PENTAGON"),
    ("line: 0 1\n", 1, "missing"),
    ("points: 8\nline: 0 1\nline: 0 2\n", 3, "8 lines"),
])
def test_cplx_parse_errors(text, lineno, fragment):
    with pytest.raises(CplxParseError) as info:
        parse_cplx(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_cplx_comments_and_blank_lines():
    text = "# hand written\npoints: 8\n\n" + "".join(
        f"line: {a} {b}  # edge\n" for a, b in TWO_TRIANGLES.pairs)
    assert parse_cplx(text) == (TWO_TRIANGLES, None)


def test_build_scrapbook_truncates_small_classes(tmp_path):
    build_scrapbook(400, tmp_path, labels=[T.TWO_4CYCLES])
    index = (tmp_path / "index.tsv").read_text().splitlines()
    assert index[1] == "TWO_4CYCLES\t315\t315"
    assert index[2].startswith("# note: TWO_4CYCLES truncated to 315")
    assert len(list((tmp_path / "TWO_4CYCLES").glob("*.cplx"))) == 315


def test_build_scrapbook_layout(tmp_path):
    written = build_scrapbook(1, tmp_path)
    assert len(written) == 15 * 3 + 1
    dirs = sorted(p.name for p in tmp_path.iterdir() if p.is_dir())
    assert dirs == sorted(l.name for l in T)
    rows = dict(line.split("\t")[:2] for line in (tmp_path / "index.tsv").read_text().splitlines()[1:])
    assert int(rows["CYCLE_6"]) == PAPER_VALUES["L6.2"]
