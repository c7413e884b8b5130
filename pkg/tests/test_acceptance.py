"""Acceptance gate: one reported line per headline behavior.

Each test prints PASS or FAIL with its label to the real stdout so the
report survives pytest's capture; the assertions carry the actual checks.
"""

import sys
from contextlib import contextmanager
from importlib import resources

from groupoids import (AbelianInvariants, GroupPresentation,
                       abelian_invariants, alternating_group, cli,
                       cyclic_group, dihedral_group, direct_product_group,
                       quaternion_group, suite, symmetric_group,
                       symmetric_square_presentation)
from groupoids.corpus import (named_actions, random_actions,
                              random_orbit_instances,
                              random_quotient_instances)
from groupoids.oracle import (abelian_group_invariants, brute_abelianization,
                              finite_quotient)


@contextmanager
def criterion(label):
    notes = []
    try:
        yield notes
    except BaseException:
        print(f"FAIL {label}", file=sys.__stdout__, flush=True)
        raise
    detail = f": {notes[0]}" if notes else ""
    print(f"PASS {label}{detail}", file=sys.__stdout__, flush=True)


def _data(name):
    return str(resources.files("groupoids").joinpath("data", name))


def _capture(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def test_circle_mod_reflection(capsys):
    with criterion("circle-mod-reflection") as notes:
        for verb in ("orbit", "presentation"):
            code, out = _capture(capsys,
                                 [verb, _data("circle_reflection.act")])
            assert code == 0
            assert "vertex group at orbit(1): trivial" in out
            assert "vertex group at orbit(-1): trivial" in out
        notes.append("trivial vertex groups at orbit(1) and orbit(-1), "
                     "via both verbs")


def test_symmetric_square_of_wedges():
    with criterion("symmetric-square-wedges") as notes:
        for n in range(1, 5):
            gens = tuple(chr(ord("a") + i) for i in range(n))
            wedge = GroupPresentation(gens, (), name=f"wedge{n}")
            got = abelian_invariants(symmetric_square_presentation(wedge))
            assert got == AbelianInvariants(n, ()), (n, got)
        notes.append("ranks 1-4 with no torsion")


def test_abelianization_routes_agree():
    cases = (
        ("Z4", cyclic_group(4), (4,)),
        ("S3", symmetric_group(3), (2,)),
        ("D4", dihedral_group(4), (2, 2)),
        ("Q8", quaternion_group(), (2, 2)),
        ("A4", alternating_group(4), (3,)),
    )
    with criterion("abelianization-routes") as notes:
        for label, gt, frozen in cases:
            square = direct_product_group(gt, gt, name=f"{label}^2")
            skew = [f"({h},{gt.inv[h]})" for h in gt.elements]
            via_square = abelian_group_invariants(
                finite_quotient(square, skew))
            direct = brute_abelianization(gt)
            assert via_square == direct == frozen, (label, via_square, direct)
        notes.append("skew-diagonal quotient matches the commutator "
                     "quotient on Z4, S3, D4, Q8, A4")


def test_projection_trichotomy():
    with criterion("projection-trichotomy") as notes:
        pool = random_actions()
        assert len(pool) >= 50
        assert all(len(act.space.arrows) <= 12 for act in pool)
        result = suite.check_trichotomy()
        assert result.ok, result.detail
        notes.append(f"{len(pool)} random actions plus the named ones, "
                     "zero counterexamples")


def test_first_isomorphism():
    with criterion("first-isomorphism") as notes:
        pool = random_quotient_instances()
        assert len(pool) >= 20
        result = suite.check_first_isomorphism()
        assert result.ok, result.detail
        notes.append(result.detail)


def test_orbit_kernel_clauses():
    with criterion("orbit-kernel-clauses") as notes:
        result = suite.check_orbit_kernel()
        assert result.ok, result.detail
        trees = suite.check_tree_orbit_groups()
        assert trees.ok, trees.detail
        notes.append(result.detail)


def test_orbit_universal_property():
    with criterion("orbit-universal-property") as notes:
        small = [act for act in list(dict(named_actions()).values())
                 + random_orbit_instances()
                 if len(act.space.arrows) <= 8]
        assert small
        result = suite.check_universal_property()
        assert result.ok, result.detail
        notes.append(result.detail)


def test_regular_covers():
    with criterion("regular-covers") as notes:
        result = suite.check_regular_covers()
        assert result.ok, result.detail
        notes.append(result.detail)


def test_normal_closure_oracle_agreement():
    with criterion("normal-closure-oracle-agreement") as notes:
        result = suite.check_normal_closure_minimal()
        assert result.ok, result.detail
        notes.append(result.detail)


def test_round_trip_and_determinism(capsys):
    with criterion("round-trip-determinism") as notes:
        result = suite.check_round_trip()
        assert result.ok, result.detail
        first = [r.line() for r in suite.run_all()]
        second = [r.line() for r in suite.run_all()]
        assert first == second
        assert all(line.startswith("PASS") for line in first)
        reports = [_capture(capsys, ["orbit", _data("zmod4_inversion.act"),
                                     "--emit", "-"]) for _ in range(2)]
        assert reports[0] == reports[1]
        notes.append(f"{result.detail}; repeated runs are byte-identical")
