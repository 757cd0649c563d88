import io

import pytest

from conftest import FIXTURES
from tilepump import formats
from tilepump.cli import main
from tilepump.errors import FormatError

PARSERS = {
    "tiles": (formats.parse_tile_system, formats.serialize_tile_system),
    "assembly": (formats.parse_assembly, formats.serialize_assembly),
    "shape": (formats.parse_shape, formats.serialize_shape),
    "curves": (formats.parse_curves, formats.serialize_curves),
}
ALL_FIXTURES = sorted(p.name for p in FIXTURES.iterdir())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_canonical_round_trip(name):
    text = (FIXTURES / name).read_text()
    parse, serialize = PARSERS[formats.sniff(text)]
    canonical = serialize(parse(text))
    assert serialize(parse(canonical)) == canonical
    assert parse(canonical) == parse(text)


def test_tile_system_defaults_and_comments():
    sys_ = formats.parse_tile_system("temperature 2  # hot\nglue a 2\ntile t E=a\n")
    t = sys_.by_name["t"]
    assert (t.north, t.east, t.south, t.west) == ("null", "a", "null", "null")
    assert sys_.strength("a", "a") == 2


@pytest.mark.parametrize("text,line", [
    ("temperature 1\nglue a 1\nstrength a a 2\ntile t\n", 3),
    ("temperature 1\ntile t Q=a\n", 2),
    ("temperature x\n", 1),
    ("temperature 1\ntile t\ntile t\n", 3),
    ("temperature 1\nstrength a null 1\ntile t\n", 2),
    ("temperature 1\nfoo\n", 2),
])
def test_tile_system_errors_name_the_line(text, line):
    with pytest.raises(FormatError, match=f"line {line}:"):
        formats.parse_tile_system(text)


def test_assembly_and_shape_errors():
    with pytest.raises(FormatError, match="line 2"):
        formats.parse_assembly("place 0 0 t\nplace 0 0 u\n")
    with pytest.raises(FormatError, match="connected"):
        formats.parse_assembly("place 0 0 t\nplace 2 0 u\n")
    with pytest.raises(FormatError, match="line 1"):
        formats.parse_shape("cell 0\n")


def test_curve_errors():
    with pytest.raises(FormatError, match="line 2"):
        formats.parse_curves("curve a\nv 0 zero\n")
    with pytest.raises(FormatError, match="line 4"):
        formats.parse_curves("curve a\nv 0 0\nv 1 0\nsystem\nmember a 0 0 1\n")
    with pytest.raises(FormatError, match="unknown curve"):
        formats.parse_curves("curve a\nv 0 0\nv 1 0\nsystem\nvector 1 0\nmember b 0 0 1\n")


def test_cli_stable_negative_result():
    code, out, _ = run("stable", "--system", FIXTURES / "two_weak.tiles",
                       "--assembly", FIXTURES / "two_weak.asm")
    assert code == 1 and "min cut 1 < τ=2" in out


def test_cli_pump_row():
    code, out, _ = run("pump", "--system", FIXTURES / "row.tiles", "--assembly",
                       FIXTURES / "row_start.asm", "--vec", "1,0", "--iters", 10,
                       "--certify-bound", 8)
    sizes = [int(line.split()[3]) for line in out.splitlines() if line.startswith("iter")]
    assert code == 0 and sizes == list(range(3, 13))


def test_cli_enumerate_writes_files(tmp_path):
    code, out, _ = run("enumerate", "--system", FIXTURES / "square.tiles",
                       "--max-size", 4, "--out", tmp_path)
    assert code == 0 and out.splitlines()[-1] == "count 7"
    assert len(list(tmp_path.iterdir())) == 7


def test_cli_repetitions():
    code, out, _ = run("repetitions", "--assembly", FIXTURES / "corner_start.asm")
    assert code == 0 and out.strip() == "v 1,-1 overlap 1"
    code, _, _ = run("repetitions", "--assembly", FIXTURES / "two_weak.asm")
    assert code == 1


def test_cli_shapes():
    code, out, _ = run("shape-component", "--shape", FIXTURES / "u_shape.shape", "--vec", "1,0")
    assert code == 0 and out.strip() == "component (4,0) (4,1)"
    code, out, _ = run("shape-walk", "--shape", FIXTURES / "u_shape.shape", "--vec", "1,0")
    assert out.splitlines() == ["step 0 anchor (2,1) n 2 component (2,1)", "final (4,0) (4,1)"]


def test_cli_curve_example_then_check(tmp_path):
    code, out, _ = run("curves", "example", "--x", "18/5", "--eps", "1/10")
    assert code == 0
    path = tmp_path / "ex.curves"
    path.write_text(out)
    code, report, _ = run("curves", "check", "--file", path)
    assert code == 0 and "condition 2: holds" in report


def test_cli_curve_check_and_violate():
    code, out, _ = run("curves", "check", "--file", FIXTURES / "three_curve.curves")
    assert code == 1 and "condition 2: fails" in out
    for mode in ("direct", "reduce"):
        code, out, _ = run("curves", "violate", "--file", FIXTURES / "three_curve.curves",
                           "--mode", mode)
        assert code == 0 and "self-translation" in out
    code, out, _ = run("curves", "violate", "--file", FIXTURES / "noninteger4.curves")
    assert code == 1


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["stable", "--system", "x"],
    ["pump", "--vec", "1"],
    ["enumerate", "--system", "missing.tiles", "--max-size", "3"],
    ["enumerate", "--system", FIXTURES / "row.tiles", "--max-size", "3", "--frobnicate"],
    ["shape-walk", "--shape", FIXTURES / "u_shape.shape", "--vec", "0,0"],
])
def test_cli_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 2 and err.startswith("error:")


def test_cli_parse_error_names_line(tmp_path):
    bad = tmp_path / "bad.tiles"
    bad.write_text("temperature 2\nglue a 1\nstrength a a 2\ntile t\n")
    code, _, err = run("enumerate", "--system", bad, "--max-size", 2)
    assert code == 2 and "line 3" in err


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_render_is_deterministic(tmp_path, name):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    extra = ["--system", FIXTURES / "corner.tiles"] if name == "corner_start.asm" else []
    assert run("render", "--in", FIXTURES / name, "--svg", first, *extra)[0] == 0
    assert run("render", "--in", FIXTURES / name, "--svg", second, *extra)[0] == 0
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text().startswith("<?xml")
