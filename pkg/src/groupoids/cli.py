"""Command line interface.

Each verb reads definitions from a text file, runs one construction or
check, prints a short report, and can emit the result in the same text
format with --emit (a path, or "-" for stdout, which suppresses the
report).

Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 invalid
hypotheses or selections.
"""

from __future__ import annotations

import argparse
import sys

from . import suite
from .actions import GroupoidAction
from .constructions import (normal_closure, orbit_groupoid, quotient_groupoid,
                            regular_cover_orbit_check,
                            restrict_orbit_full_subgroupoid,
                            semidirect_product)
from .core import is_covering, is_quotient_morphism, object_group
from .fileformat import ParseError, parse_input, render_entities
from .presented import (GraphAction, abelian_invariants, describe_vertex_group,
                        orbit_presentation, symmetric_square_presentation)


def _split_list(text):
    return [part for part in (piece.strip() for piece in text.split(","))
            if part]


def _orbit_label(class_name):
    if class_name.startswith("[") and class_name.endswith("]"):
        return f"orbit({class_name[1:-1]})"
    return class_name


def _groupoid_action(parsed, name):
    act = parsed.pick("action", name)
    if not isinstance(act, GroupoidAction):
        raise ValueError(f"{act.name}: acts on a graph; "
                         f"use the presentation verb")
    return act


def _graph_action(parsed, name):
    act = parsed.pick("action", name)
    if not isinstance(act, GraphAction):
        raise ValueError(f"{act.name}: acts on a groupoid; "
                         f"use the orbit verb")
    return act


def _cmd_semidirect(args):
    parsed = parse_input(args.file)
    act = _groupoid_action(parsed, args.action)
    sd = semidirect_product(act)
    lines = [f"semidirect product {sd.groupoid.name}: "
             f"{len(sd.groupoid.objects)} objects, "
             f"{len(sd.groupoid.arrows)} arrows",
             "projection is a fibration"]
    if is_quotient_morphism(sd.projection):
        lines.append("projection is a quotient morphism")
    if is_covering(sd.projection):
        lines.append("projection is a covering")
    return lines, 0, [sd.groupoid, sd.projection]


def _cmd_orbit(args):
    parsed = parse_input(args.file)
    act = parsed.pick("action", args.action)
    if isinstance(act, GraphAction):
        return _presentation_report(act, base=None)
    orb = orbit_groupoid(act)
    lines = [f"orbit groupoid {orb.groupoid.name}: "
             f"{len(orb.groupoid.objects)} objects, "
             f"{len(orb.groupoid.arrows)} arrows"]
    for x in orb.groupoid.objects:
        lines.append(f"object group at {_orbit_label(x)}: "
                     f"order {object_group(orb.groupoid, x).order}")
    lines.append("orbit morphism is a fibration")
    if is_quotient_morphism(orb.morphism):
        lines.append("orbit morphism is a quotient morphism")
    if is_covering(orb.morphism):
        lines.append("orbit morphism is a covering")
    return lines, 0, [orb.groupoid, orb.morphism]


def _pick_arrows(gpd, names):
    for a in names:
        if a not in gpd.arrow_index:
            raise ValueError(f"{gpd.name}: unknown arrow {a}")
    return names


def _cmd_quotient(args):
    parsed = parse_input(args.file)
    gpd = parsed.pick("groupoid", args.groupoid)
    gens = _pick_arrows(gpd, _split_list(args.arrows))
    n = normal_closure(gpd, gens)
    quot = quotient_groupoid(gpd, n)
    lines = [f"normal closure of {len(gens)} arrows: {len(n.arrows)} arrows",
             f"quotient {quot.groupoid.name}: "
             f"{len(quot.groupoid.objects)} objects, "
             f"{len(quot.groupoid.arrows)} arrows"]
    return lines, 0, [quot.groupoid, quot.morphism]


def _cmd_normal_closure(args):
    parsed = parse_input(args.file)
    gpd = parsed.pick("groupoid", args.groupoid)
    gens = _pick_arrows(gpd, _split_list(args.arrows))
    n = normal_closure(gpd, gens)
    lines = [f"normal closure of {len(gens)} arrows in {gpd.name}: "
             f"{len(n.arrows)} arrows",
             "arrows: " + " ".join(n.arrows)]
    return lines, 0, [n.as_groupoid()]


def _presentation_report(act, base):
    pres, _elabel, vlabel = orbit_presentation(act)
    lines = [f"orbit graph of {act.name}: "
             f"{len(pres.graph.vertices)} vertices, "
             f"{len(pres.graph.edges)} edges, "
             f"{len(pres.relators)} relators"]
    if base is not None:
        if base not in vlabel:
            raise ValueError(f"{act.graph.name}: unknown vertex {base}")
        targets = [vlabel[base]]
    else:
        targets = list(pres.graph.vertices)
    for v in targets:
        lines.append(f"vertex group at {_orbit_label(v)}: "
                     f"{describe_vertex_group(pres, v)}")
    return lines, 0, [pres]


def _cmd_presentation(args):
    parsed = parse_input(args.file)
    act = _graph_action(parsed, args.action)
    return _presentation_report(act, args.base)


def _cmd_abelianize(args):
    parsed = parse_input(args.file)
    pres = parsed.pick("presentation", args.presentation)
    lines = [f"abelian invariants of {pres.name}: {abelian_invariants(pres)}"]
    return lines, 0, None


def _cmd_symmetric_square(args):
    parsed = parse_input(args.file)
    pres = parsed.pick("presentation", args.presentation)
    square = symmetric_square_presentation(pres)
    got = abelian_invariants(square)
    want = abelian_invariants(pres)
    lines = [f"symmetric square {square.name}: "
             f"{len(square.generators)} generators, "
             f"{len(square.relators)} relators",
             f"abelian invariants: {got}",
             f"abelian invariants of {pres.name}: {want}",
             f"agreement: {'yes' if got == want else 'no'}"]
    return lines, 0 if got == want else 1, [square]


def _cmd_check_regular_cover(args):
    parsed = parse_input(args.file)
    p = parsed.pick("morphism", args.morphism)
    deck = _groupoid_action(parsed, args.action)
    report = regular_cover_orbit_check(p, deck)
    return list(report.details), 0 if report.ok else 1, None


def _cmd_restrict_orbit(args):
    parsed = parse_input(args.file)
    act = _groupoid_action(parsed, args.action)
    report = restrict_orbit_full_subgroupoid(act, _split_list(args.objects))
    lines = []
    if report.hypothesis_ok:
        lines.append("hypothesis holds: the object set meets every fixed "
                     "component")
    else:
        lines.extend(report.hypothesis_failures)
    lines.extend(report.details)
    return lines, 0 if report.ok else 1, None


def _cmd_verify(args):
    targets = None
    if args.targets is not None:
        parsed = parse_input(args.targets)
        names = parsed.of_kind("groupoid")
        if not names:
            raise ValueError(f"{args.targets}: no groupoids defined")
        targets = [parsed.entities[n] for n in names]
    results = suite.run_all(targets=targets, max_arrows=args.max_arrows)
    lines = [r.line() for r in results]
    return lines, 0 if all(r.ok for r in results) else 1, None


def _add_common(sub, emit=True):
    sub.add_argument("file", help="input definitions file")
    if emit:
        sub.add_argument("--emit", metavar="PATH",
                         help="write the result in the text format "
                              "(- for stdout, suppressing the report)")


def _parser():
    parser = argparse.ArgumentParser(
        prog="groupoids",
        description="groupoid constructions on finite presentations")
    subs = parser.add_subparsers(dest="verb", required=True)

    sub = subs.add_parser("semidirect",
                          help="semidirect product of an action")
    _add_common(sub)
    sub.add_argument("--action", help="action name (default: the only one)")
    sub.set_defaults(handler=_cmd_semidirect)

    sub = subs.add_parser("orbit", help="orbit groupoid of an action")
    _add_common(sub)
    sub.add_argument("--action", help="action name (default: the only one)")
    sub.set_defaults(handler=_cmd_orbit)

    sub = subs.add_parser("quotient",
                          help="quotient by the normal closure of arrows")
    _add_common(sub)
    sub.add_argument("--groupoid",
                     help="groupoid name (default: the only one)")
    sub.add_argument("--arrows", required=True,
                     help="comma separated arrow names")
    sub.set_defaults(handler=_cmd_quotient)

    sub = subs.add_parser("normal-closure",
                          help="normal closure of a set of arrows")
    _add_common(sub)
    sub.add_argument("--groupoid",
                     help="groupoid name (default: the only one)")
    sub.add_argument("--arrows", required=True,
                     help="comma separated arrow names")
    sub.set_defaults(handler=_cmd_normal_closure)

    sub = subs.add_parser("presentation",
                          help="presented orbit groupoid of a graph action")
    _add_common(sub)
    sub.add_argument("--action", help="action name (default: the only one)")
    sub.add_argument("--base", metavar="VERTEX",
                     help="report only the vertex group at this vertex")
    sub.set_defaults(handler=_cmd_presentation)

    sub = subs.add_parser("abelianize",
                          help="abelian invariants of a presentation")
    _add_common(sub, emit=False)
    sub.add_argument("--presentation",
                     help="presentation name (default: the only one)")
    sub.set_defaults(handler=_cmd_abelianize)

    sub = subs.add_parser("symmetric-square",
                          help="symmetric square of a presentation")
    _add_common(sub)
    sub.add_argument("--presentation",
                     help="presentation name (default: the only one)")
    sub.set_defaults(handler=_cmd_symmetric_square)

    sub = subs.add_parser("check-regular-cover",
                          help="check a covering against its deck action")
    _add_common(sub, emit=False)
    sub.add_argument("--morphism",
                     help="covering morphism name (default: the only one)")
    sub.add_argument("--action",
                     help="deck action name (default: the only one)")
    sub.set_defaults(handler=_cmd_check_regular_cover)

    sub = subs.add_parser("restrict-orbit",
                          help="restrict the orbit groupoid to an invariant "
                               "object set")
    _add_common(sub, emit=False)
    sub.add_argument("--action", help="action name (default: the only one)")
    sub.add_argument("--objects", required=True,
                     help="comma separated object names")
    sub.set_defaults(handler=_cmd_restrict_orbit)

    sub = subs.add_parser("verify", help="run the built-in check suite")
    sub.add_argument("--targets", metavar="FILE",
                     help="groupoids file for the universal property targets")
    sub.add_argument("--max-arrows", type=int, default=None,
                     help="skip corpus instances with more arrows")
    sub.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        lines, code, entities = args.handler(args)
    except ParseError as err:
        print(err, file=sys.stderr)
        return 2
    except ValueError as err:
        print(err, file=sys.stderr)
        return 3
    emit_to = getattr(args, "emit", None)
    if entities is not None and emit_to is not None:
        text = render_entities(entities)
        if emit_to == "-":
            sys.stdout.write(text)
            return code
        with open(emit_to, "w", encoding="utf-8") as handle:
            handle.write(text)
    for line in lines:
        print(line)
    return code


def console_main():
    sys.exit(main())
