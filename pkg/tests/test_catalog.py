import pytest

from src.catalog.builtin import Catalog, bichar_parameters, derive_glq2_rmatrix
from src.catalog.config import SessionConfig
from src.errors import ConfigError, FieldMismatch, ParseError, UnknownName
from src.scalar.field import FieldContext
from tests.helpers import poly

CYCLIC_GROUP = """\
[meta]
name = cyclic2
kind = hopf
field = any

[generators]
g

[relations]
g*g = 1

[coproduct]
g = g%g

[counit]
g = 1

[antipode]
g = g
"""


def test_catalog_names(catalog):
    assert catalog.names() == [
        "aq2", "bglq2", "braided_line", "colour_heisenberg", "glq2", "superline", "z2prime",
    ]


def test_describe_lists_hosts(catalog):
    rows = {row["name"]: row for row in catalog.describe()}
    assert rows["aq2"]["host"] == "glq2"
    assert rows["glq2"]["host"] == "-"
    assert rows["braided_line"]["field"] == "cyclotomic:3"


def test_loads_are_cached(catalog, aq2):
    assert catalog.load("aq2") is aq2
    assert aq2.host is catalog.load("glq2")


def test_unknown_name(catalog):
    with pytest.raises(UnknownName):
        catalog.load("sl2")
    with pytest.raises(KeyError):
        catalog.load("sl2")


def test_field_mismatch(catalog):
    with pytest.raises(FieldMismatch):
        catalog.load("braided_line", FieldContext.transcendental())


def test_any_field_entries_load_in_a_root_of_unity(catalog):
    ctx = FieldContext.cyclotomic(5)
    plane = catalog.load("aq2", ctx)
    assert plane.ctx == ctx
    assert plane.host.ctx == ctx


def test_anyonic_family(catalog):
    host = catalog.load("anyonic(3)")
    assert host.ctx == FieldContext.cyclotomic(3)
    assert host.R.entry("g", "g") == host.ctx.q
    assert len(host.hopf.basis()) == 3


def test_bichar_names_ignore_whitespace(catalog):
    assert catalog.load("group_bichar(3, 2, [[0,1],[2,0]])") is catalog.load("group_bichar(3,2,[[0,1],[2,0]])")


def test_bichar_parameters():
    assert bichar_parameters("group_bichar(3,2,[[0,1],[2,0]])") == (3, 2, [[0, 1], [2, 0]])
    assert bichar_parameters("group_bichar(2,1,1)") == (2, 1, [[1]])
    assert bichar_parameters("anyonic(3)") is None
    with pytest.raises(UnknownName):
        bichar_parameters("group_bichar(3,2,[[0,1],)")


def test_derived_rmatrix_matches_the_host(catalog, glq2):
    derived = derive_glq2_rmatrix(catalog)
    for left in ("alpha", "beta", "gamma", "delta"):
        for right in ("alpha", "beta", "gamma", "delta"):
            assert derived.entry(left, right) == glq2.R.entry(left, right)


def test_glq2_passes_its_load_time_checks():
    catalog = Catalog(SessionConfig().with_degrees(2, 2))
    glq2 = catalog.load("glq2")
    assert catalog.reports[("glq2", FieldContext.transcendental())].ok
    C = glq2.pres.gen("C")
    assert glq2.R.evaluate((C,), (C,)) == glq2.ctx.q ** 6


def test_plane_loads_with_its_checks():
    catalog = Catalog(SessionConfig().with_degrees(3, 2))
    aq2 = catalog.load("aq2")
    report = catalog.reports[("aq2", FieldContext.transcendental())]
    assert report.ok, report.to_text()
    assert aq2.braided.antipode_word((aq2.pres.gen("x"),)) == poly(aq2.pres, "-x").terms


def test_verifying_catalog_keeps_reports():
    catalog = Catalog(SessionConfig().with_degrees(2, 2))
    catalog.load("superline")
    report = catalog.reports[("superline", FieldContext.transcendental())]
    assert report.ok
    assert ("z2prime", FieldContext.transcendental()) in catalog.reports


def test_load_path(tmp_path):
    path = tmp_path / "cyclic2.pres"
    path.write_text(CYCLIC_GROUP, encoding="utf-8")
    catalog = Catalog(SessionConfig().with_degrees(2, 2))
    bundle = catalog.load_path(path)
    assert bundle.name == "cyclic2"
    assert bundle.kind == "hopf"
    assert catalog.reports[("cyclic2", FieldContext.transcendental())].ok


def test_load_path_reports_unknown_generators(tmp_path):
    path = tmp_path / "broken.pres"
    path.write_text(CYCLIC_GROUP.replace("g*g = 1", "g*h = 1"), encoding="utf-8")
    with pytest.raises(ParseError):
        Catalog(verify=False).load_path(path)


def test_load_path_rejects_unknown_kinds(tmp_path):
    path = tmp_path / "monoid.pres"
    path.write_text(CYCLIC_GROUP.replace("kind = hopf", "kind = monoid"), encoding="utf-8")
    with pytest.raises(ParseError):
        Catalog(verify=False).load_path(path)


def test_session_config_validates_degrees():
    with pytest.raises(ConfigError):
        SessionConfig(verify_degree=-1)
    config = SessionConfig().with_degrees(2)
    assert config.verify_degree == 2
    assert config.dqs_degree == 2
