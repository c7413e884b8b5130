from importlib import resources

from groupoids import cli, cyclic_group, groupoid_from_group, parse_text
from groupoids import render_entities
from groupoids.corpus import named_actions


def _data(name):
    return str(resources.files("groupoids").joinpath("data", name))


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_semidirect_verb(capsys):
    code, out, _err = _run(capsys, "semidirect", _data("tree_swap.act"))
    assert code == 0
    assert "semidirect product segxZ2-gpd: 2 objects, 8 arrows" in out
    assert "projection is a fibration" in out
    assert "projection is a quotient morphism" in out


def test_orbit_verb_on_a_groupoid_action(capsys):
    code, out, _err = _run(capsys, "orbit", _data("zmod4_inversion.act"))
    assert code == 0
    assert "orbit groupoid Z4-space//Z2-gpd: 1 objects, 2 arrows" in out
    assert "object group at orbit(pt): order 2" in out
    assert "orbit morphism is a fibration" in out
    assert "orbit morphism is a quotient morphism" in out


def test_orbit_verb_on_a_graph_action(capsys):
    code, out, _err = _run(capsys, "orbit", _data("circle_reflection.act"))
    assert code == 0
    assert "vertex group at orbit(1): trivial" in out
    assert "vertex group at orbit(-1): trivial" in out


def test_presentation_verb_with_base(capsys):
    code, out, _err = _run(capsys, "presentation",
                           _data("circle_reflection.act"), "--base=-i")
    assert code == 0
    assert "orbit graph of circle-reflection: 3 vertices, 2 edges, 0 relators" \
        in out
    assert out.count("vertex group") == 1
    assert "vertex group at orbit(i): trivial" in out
    code, _out, err = _run(capsys, "presentation",
                           _data("circle_reflection.act"), "--base", "zzz")
    assert code == 3
    assert "unknown vertex zzz" in err


def test_quotient_and_normal_closure_verbs(tmp_path, capsys):
    z4 = tmp_path / "z4.gpd"
    z4.write_text(render_entities(
        [groupoid_from_group(cyclic_group(4), name="z4")]), encoding="utf-8")
    code, out, _err = _run(capsys, "quotient", str(z4), "--arrows", "2")
    assert code == 0
    assert "normal closure of 1 arrows: 2 arrows" in out
    assert "quotient z4/N2: 1 objects, 2 arrows" in out

    code, out, _err = _run(capsys, "normal-closure", str(z4), "--arrows", "1")
    assert code == 0
    assert "normal closure of 1 arrows in z4: 4 arrows" in out
    assert "arrows: id_pt 1 2 3" in out

    code, _out, err = _run(capsys, "quotient", str(z4), "--arrows", "nope")
    assert code == 3
    assert "z4: unknown arrow nope" in err


def test_abelianize_verb(capsys):
    code, out, _err = _run(capsys, "abelianize", _data("s3.pres"))
    assert code == 0
    assert "abelian invariants of s3: rank 0, torsion 2" in out


def test_symmetric_square_verb(capsys):
    code, out, _err = _run(capsys, "symmetric-square", _data("f2.pres"))
    assert code == 0
    assert "symmetric square f2-sym2: 4 generators, 6 relators" in out
    assert "abelian invariants: rank 2" in out
    assert "agreement: yes" in out


def test_check_regular_cover_verb(capsys):
    code, out, _err = _run(capsys, "check-regular-cover",
                           _data("folding_cover.gpd"))
    assert code == 0
    assert "orbit groupoid of the deck action matches the target" in out


def test_check_regular_cover_failure_exits_1(tmp_path, capsys):
    # a trivial deck group passes the preconditions but cannot identify the
    # two-object cover with the one-object base
    with open(_data("folding_cover.gpd"), encoding="utf-8") as handle:
        text = handle.read()
    text += "\ngroupoid one\nobjects pt\n\naction lazy on seg by one\n"
    bad = tmp_path / "lazy.gpd"
    bad.write_text(text, encoding="utf-8")
    code, out, _err = _run(capsys, "check-regular-cover", str(bad),
                           "--action", "lazy")
    assert code == 1
    assert out.strip()


def test_restrict_orbit_verb(tmp_path, capsys):
    act = dict(named_actions())["path-reflection-fixed"]
    path = tmp_path / "reflect.act"
    path.write_text(render_entities([act]), encoding="utf-8")
    code, out, _err = _run(capsys, "restrict-orbit", str(path),
                           "--objects", "b")
    assert code == 0
    assert "hypothesis holds" in out

    code, out, _err = _run(capsys, "restrict-orbit", str(path),
                           "--objects", "a,c")
    assert code == 1
    assert "misses a fixed component" in out

    code, _out, err = _run(capsys, "restrict-orbit", str(path),
                           "--objects", "a")
    assert code == 3
    assert "not invariant" in err


def test_parse_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.gpd"
    bad.write_text("groupoid g\nobjects x\narrow a : x -> z\n",
                   encoding="utf-8")
    code, out, err = _run(capsys, "orbit", str(bad))
    assert code == 2
    assert not out
    assert f"{bad}:3:1: unknown object z" in err


def test_emit_to_stdout_is_stable_and_replaces_the_report(capsys):
    code, out1, _err = _run(capsys, "orbit", _data("zmod4_inversion.act"),
                            "--emit", "-")
    assert code == 0
    assert "orbit groupoid" not in out1.splitlines()[0]
    parsed = parse_text(out1)
    assert parsed.of_kind("morphism")
    _code, out2, _err = _run(capsys, "orbit", _data("zmod4_inversion.act"),
                             "--emit", "-")
    assert out1 == out2


def test_emit_to_file_reparses(tmp_path, capsys):
    target = tmp_path / "out.gpd"
    code, out, _err = _run(capsys, "semidirect", _data("tree_swap.act"),
                           "--emit", str(target))
    assert code == 0
    assert "semidirect product" in out
    parsed = parse_text(target.read_text(encoding="utf-8"))
    assert "segxZ2-gpd" in parsed.of_kind("groupoid")
    assert parsed.of_kind("morphism") == ["proj-segxZ2-gpd"]


def test_verify_verb(tmp_path, capsys):
    targets = tmp_path / "targets.gpd"
    targets.write_text(render_entities(
        [groupoid_from_group(cyclic_group(2), name="t-z2")]),
        encoding="utf-8")
    code, out, _err = _run(capsys, "verify", "--targets", str(targets),
                           "--max-arrows", "8")
    assert code == 0
    lines = [line for line in out.splitlines() if line]
    assert len(lines) >= 10
    assert all(line.startswith("PASS") for line in lines)

    empty = tmp_path / "none.pres"
    empty.write_text("presentation p\ngenerators a\n", encoding="utf-8")
    code, _out, err = _run(capsys, "verify", "--targets", str(empty))
    assert code == 3
    assert "no groupoids defined" in err
