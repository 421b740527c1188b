"""Command-line front end.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
All JSON output is canonical (stable key order, 12-significant-digit reals,
rationals as "p/q"), so identical inputs give byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys

from .coloring import (
    MultiColoring,
    borsuk_sequence,
    chi_k,
    fractional_chromatic,
)
from .errors import MultiborsukError
from .graphs import Graph, odd_cycles_pairwise_intersect
from .pointsets import (
    PointSet,
    diameter_graph,
    mirror_odd_cycle_check,
    regular_tetrahedron,
    tetrahedral_generators,
    tetrahedral_theorem_check,
    vazsonyi_check,
)
from .realizations import dihedral_theorem_check, mycielskian_pointset
from .reuleaux import (
    cover_from_json_dict,
    cover_to_json_dict,
    disk_cover,
    regular_reuleaux,
    reuleaux_cover,
    reuleaux_from_angles,
    verify_cover,
)
from .serialize import canonical_json, load_json, save_text
from .spheres import ball_borsuk, gale_vectors, min_cover_fold, shrink_caps
from .svg import render_cover_svg, render_great_circles_svg, render_pointset_svg
from . import graphs as graphs_mod
from . import coloring as coloring_mod


def _load_graph(path: str) -> Graph:
    return Graph.from_json_dict(load_json(path))


def _load_points(path: str, eps: float | None) -> PointSet:
    data = load_json(path)
    if eps is not None:
        data["eps"] = eps
    return PointSet.from_json_dict(data)


def _cmd_diamgraph(args) -> int:
    s = _load_points(args.points, args.eps)
    g = diameter_graph(s)
    sys.stdout.write(canonical_json(g.to_json_dict()))
    if args.svg:
        save_text(args.svg, render_pointset_svg(s))
    return 0


def _cmd_chromatic(args) -> int:
    g = _load_graph(args.graph)
    m, witness = chi_k(g, args.k)
    print(m)
    if args.out:
        save_text(args.out, canonical_json(witness.to_json_dict()))
    return 0


def _cmd_fractional(args) -> int:
    g = _load_graph(args.graph)
    value = fractional_chromatic(g)
    print(f"{value.numerator}/{value.denominator}")
    return 0


def _cmd_borsuk(args) -> int:
    g = _load_graph(args.graph)
    report = borsuk_sequence(g, args.kmax)
    payload = {
        "a": list(report.a_values),
        "fractional": report.fractional,
        "lower_bound_2k_ok": report.lower_bound_2k_ok,
        "subadditive_ok": report.subadditive_ok,
        "dichotomy_ok": report.dichotomy_ok,
    }
    sys.stdout.write(canonical_json(payload))
    return 0


def _cmd_reuleaux(args) -> int:
    if args.sides < 3 or args.sides % 2 == 0:
        raise MultiborsukError("--sides must be odd and >= 3")
    s = (args.sides - 1) // 2
    if args.angles:
        angles = [float(a) for a in args.angles.split(",")]
        poly = reuleaux_from_angles(angles, args.width)
    else:
        poly = regular_reuleaux(s, args.width)
    cover = reuleaux_cover(poly, args.k)
    report = verify_cover(cover)
    payload = cover_to_json_dict(cover)
    payload["report"] = {
        "patch_count": report.patch_count,
        "min_fold": report.min_fold,
        "max_patch_diameter": report.max_patch_diameter,
    }
    sys.stdout.write(canonical_json(payload))
    if args.svg:
        save_text(args.svg, render_cover_svg(cover))
    return 0


def _cmd_disk_cover(args) -> int:
    cover = disk_cover(args.k)
    report = verify_cover(cover)
    payload = cover_to_json_dict(cover)
    payload["report"] = {
        "patch_count": report.patch_count,
        "min_fold": report.min_fold,
        "max_patch_diameter": report.max_patch_diameter,
    }
    sys.stdout.write(canonical_json(payload))
    if args.svg:
        save_text(args.svg, render_cover_svg(cover))
    return 0


def _cmd_sphere_cover(args) -> int:
    family = gale_vectors(args.n, args.k)
    fold = min_cover_fold(family)
    payload = family.to_json_dict()
    payload["k"] = args.k
    payload["min_fold"] = fold.fold
    payload["mode"] = fold.mode
    if args.shrink:
        caps = shrink_caps(family, args.k)
        payload["rho"] = caps.rho
    payload["ball_borsuk"] = ball_borsuk(args.n, args.k).value
    sys.stdout.write(canonical_json(payload))
    if args.svg:
        save_text(args.svg, render_great_circles_svg(family))
    return 0


def _cmd_mycielski(args) -> int:
    g = graphs_mod.mycielskian(Graph.cycle(2 * args.k + 1), args.p)
    payload: dict = {"graph": g.to_json_dict()}
    if args.realize:
        s, _construction = mycielskian_pointset(args.k, args.p)
        payload["points"] = s.to_json_dict()
        if args.svg:
            save_text(args.svg, render_pointset_svg(s))
    sys.stdout.write(canonical_json(payload))
    return 0


def _cmd_verify(args) -> int:
    kind = args.kind
    if kind == "vazsonyi":
        s = _load_points(args.file, args.eps)
        r = vazsonyi_check(s)
        payload = {
            "n_points": r.n_points,
            "n_edges": r.n_edges,
            "bound": r.bound,
            "within_bound": r.within_bound,
            "critical": r.critical,
            "asserted": r.asserted,
        }
    elif kind == "odd-cycles":
        g = _load_graph(args.file)
        ok, witness = odd_cycles_pairwise_intersect(g)
        payload = {"pairwise_intersect": ok}
        if witness:
            payload["disjoint_pair"] = [list(witness[0].vertices), list(witness[1].vertices)]
    elif kind == "mirror":
        s = _load_points(args.file, args.eps)
        if not args.normal:
            raise MultiborsukError("mirror verification needs --normal x,y,z")
        normal = tuple(float(x) for x in args.normal.split(","))
        payload = {
            "odd_cycles_touch_plane": mirror_odd_cycle_check(s, normal, args.offset)
        }
    elif kind == "cover":
        cover = cover_from_json_dict(load_json(args.file))
        r = verify_cover(cover)
        payload = {
            "patch_count": r.patch_count,
            "min_fold": r.min_fold,
            "max_patch_diameter": r.max_patch_diameter,
            "is_borsuk_cover": r.is_borsuk_cover,
            "k": cover.k,
            "fold_ok": r.min_fold >= cover.k,
        }
    elif kind == "tetrahedral":
        s = _load_points(args.file, args.eps)
        tetra = (
            _load_points(args.tetra, None).points
            if args.tetra
            else regular_tetrahedron().points
        )
        gens = tetrahedral_generators(tetra)
        r = tetrahedral_theorem_check(s, gens)
        payload = {
            "hypothesis_symmetry": r.hypothesis_symmetry,
            "hypothesis_girth3": r.hypothesis_girth3,
            "conclusion_k4": r.conclusion_k4,
            "theorem_consistent": r.theorem_consistent,
        }
    elif kind == "dihedral":
        s = _load_points(args.file, args.eps)
        if args.m is None:
            raise MultiborsukError("dihedral verification needs --m")
        r = dihedral_theorem_check(s, args.m)
        payload = {
            "m": r.m,
            "hypothesis_symmetry": r.hypothesis_symmetry,
            "hypothesis_borsuk4": r.hypothesis_borsuk4,
            "hypothesis_girth3": r.hypothesis_girth3,
            "conclusion_wheel": r.conclusion_wheel,
            "theorem_consistent": r.theorem_consistent,
            "note": r.note,
        }
    else:  # pragma: no cover - argparse restricts choices
        raise MultiborsukError(f"unknown verification kind {kind!r}")
    sys.stdout.write(canonical_json(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="multiborsuk",
        description="k-fold Borsuk numbers, multifold colourings and covers",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("diamgraph", help="diameter graph of a point set")
    p.add_argument("points")
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--svg")
    p.set_defaults(fn=_cmd_diamgraph)

    p = sub.add_parser("chromatic", help="exact k-fold chromatic number")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write the witness colouring JSON here")
    p.set_defaults(fn=_cmd_chromatic)

    p = sub.add_parser("fractional", help="exact fractional chromatic number")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_fractional)

    p = sub.add_parser("borsuk", help="a_k table with verified properties")
    p.add_argument("graph")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(fn=_cmd_borsuk)

    p = sub.add_parser("reuleaux", help="k-fold Reuleaux boundary cover")
    p.add_argument("--sides", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--angles", help="comma-separated side angles (radians)")
    p.add_argument("--width", type=float, default=1.0)
    p.add_argument("--svg")
    p.set_defaults(fn=_cmd_reuleaux)

    p = sub.add_parser("disk-cover", help="k-fold cover of the unit-diameter circle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--svg")
    p.set_defaults(fn=_cmd_disk_cover)

    p = sub.add_parser("sphere-cover", help="Gale hemisphere family for S^{n-1}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shrink", action="store_true")
    p.add_argument("--svg")
    p.set_defaults(fn=_cmd_sphere_cover)

    p = sub.add_parser("mycielski", help="mu_p(C_{2k+1}) and its 3D realization")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--realize", action="store_true")
    p.add_argument("--svg")
    p.set_defaults(fn=_cmd_mycielski)

    p = sub.add_parser("verify", help="run a structural checker")
    p.add_argument(
        "kind",
        choices=["vazsonyi", "odd-cycles", "mirror", "cover", "tetrahedral", "dihedral"],
    )
    p.add_argument("file")
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--normal", help="mirror plane normal, comma separated")
    p.add_argument("--offset", type=float, default=0.0)
    p.add_argument("--m", type=int, default=None, help="dihedral parameter")
    p.add_argument("--tetra", help="points file with the reference tetrahedron")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (MultiborsukError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: malformed input file, missing field {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
