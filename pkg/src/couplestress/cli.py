"""Command-line front end.

    couplestress verify   [--seed N] [--trials N] [--max-degree N] [--out FILE]
    couplestress analyze  FIELD.json [--x0 a,b,c] [--lc L] [--out FILE]
    couplestress scenario {torsion,trace-free,yang-cantilever,yang-surface,conformal} ...

Exit status: 0 when every check passes, 1 when an identity fails, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import __version__
from .cube import Cube
from .fieldio import FieldDocumentError, load_field_document, serialize_field_document
from .models import ConformalMapParams, IsotropicMaterial, ModelKind
from .polarity import analyze
from .reports import RunReport, check_equal, digest
from .scenarios import (
    TorsionParams,
    TraceFreeFamilyParams,
    conformal_scenario,
    torsion_scenario,
    trace_free_scenario,
    yang_cantilever_scenario,
    yang_surface_scenario,
)
from .tensor_core import vec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEED_ENV = "POLARITY_SEED"


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(f"write rationals as p/q, not decimals: {text!r}")
    return value


def vector(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated rationals: {text!r}")
    return tuple(rational(p) for p in parts)  # type: ignore[return-value]


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _emit(report: RunReport, out: str | None) -> int:
    text = report.to_json()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.to_dict()["summary"]
    print(f"{report.command}: {s['passed']}/{s['checks']} checks passed", file=sys.stderr)
    for c in report.failures:
        print(f"  FAIL {c.id}: {c.detail}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


# -- verify --------------------------------------------------------------------------


def cmd_verify(args) -> int:
    from .verify import run_verify

    seed = args.seed if args.seed is not None else _default_seed()
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    return _emit(run_verify(seed, args.trials, args.max_degree, args.only), args.out)


# -- analyze -------------------------------------------------------------------------


def _analysis_report(sigma, x0, L, f, c, merge_psi: bool, source_digest: str) -> RunReport:
    from . import cube as _cube
    from .polarity import couple_stress_from_gradients, expand, pieces, rotational_invariance_faces

    rep = analyze(sigma, x0, L, f, c, merge_psi=merge_psi)
    t = expand(sigma, x0, L)
    cube = t.cube
    parts = pieces(t)
    total = parts["sigma0"]
    for name in ("np", "p1", "p2", "b1", "b2", "q"):
        total = total + parts[name]
    m = couple_stress_from_gradients(t)
    p2_cols = np.empty((3, 3), dtype=object)
    for i in range(3):
        p2_cols[:, i] = _cube.face_couple_about_face_center(parts["p2"], cube, _cube.FACES[i])
    anchor = "Taylor split of stress on the cube"

    report = RunReport(
        "analyze",
        digest({"sigma": source_digest, "x0": x0, "L_c": L, "f": f, "c": c, "merge_psi": merge_psi}),
    )
    report.truncation_error = rep.truncation_error
    zero = vec(0, 0, 0)
    report.data = {
        "x0": rep.x0,
        "L_c": rep.L_c,
        "pieces": {
            p.name: {
                "nominal_class": p.nominal,
                "computed_class": p.computed,
                "face_couples": {str(i + 1): fc for i, fc in enumerate(p.face_couples)},
                "moment_about_center": p.cube_moment,
            }
            for p in rep.pieces
        },
        "m": rep.m,
        "m_torsion": rep.m_torsion,
        "m_bending": rep.m_bending,
        "chi": rep.chi,
        "psi": rep.psi,
        "psi_at_x0": rep.psi_at_x0,
        "residuals": {
            "linear": rep.linear_residual,
            "angular": rep.angular_residual,
            "linear_satisfied": all(v == 0 for v in rep.linear_residual),
            "angular_satisfied": all(v == 0 for v in rep.angular_residual),
        },
        "symmetry_conditions": rep.symmetry_conditions,
        "rotational_invariance": rep.rotational_invariance,
        "rotational_invariance_by_face": list(rotational_invariance_faces(sigma, rep.x0)),
        "merge_psi": merge_psi,
    }
    if merge_psi:
        report.data["m_merged"] = rep.m_merged
    report.extend(
        [
            check_equal("analyze.pieces_sum_to_truncation", anchor, total, t.reconstruct()),
            check_equal("analyze.m_columns_are_p2_couples", anchor, p2_cols, m * cube.face_area),
            check_equal("analyze.linear_residual_two_paths", anchor,
                        rep.linear_residual, rep.linear_residual_from_faces),
            check_equal("analyze.angular_residual_two_paths", anchor,
                        rep.angular_residual, rep.angular_residual_from_faces),
            check_equal("analyze.p2_angular_neutral", anchor,
                        next(p.cube_moment for p in rep.pieces if p.name == "p2"), zero),
        ]
    )
    return report


def cmd_analyze(args) -> int:
    try:
        doc = load_field_document(args.field_file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.field_file}: {exc.strerror}") from None
    except FieldDocumentError as exc:
        raise UsageError(f"{args.field_file}: {exc}") from None
    name = args.name
    if name not in doc:
        raise UsageError(f"{args.field_file}: no entry named {name!r}")
    if doc.entries[name].rank != "tensor":
        raise UsageError(f"{args.field_file}: entry {name!r} must be a tensor")
    if args.lc <= 0:
        raise UsageError("--lc must be positive")
    source = digest(serialize_field_document(doc))
    report = _analysis_report(doc[name], args.x0, args.lc, args.f, args.c, args.merge_psi, source)
    return _emit(report, args.out)


# -- scenario -------------------------------------------------------------------------


def _positive(value: Fraction, flag: str) -> Fraction:
    if value <= 0:
        raise UsageError(f"{flag} must be positive")
    return value


def cmd_scenario(args) -> int:
    name = args.name
    if name == "torsion":
        if args.alpha_bar < 0:
            raise UsageError("--alpha-bar must be non-negative")
        report = torsion_scenario(
            TorsionParams(
                args.alpha_bar, _positive(args.mu, "--mu"), _positive(args.lc, "--lc"),
                _positive(args.alpha1, "--alpha1"), _positive(args.dx, "--dx"), args.lam,
            )
        )
    elif name == "trace-free":
        report = trace_free_scenario(
            TraceFreeFamilyParams(args.a, args.b, args.c, _positive(args.lc, "--lc"))
        )
    elif name == "yang-cantilever":
        report = yang_cantilever_scenario(args.length, args.couple)
    elif name == "yang-surface":
        m = None
        if args.field:
            try:
                doc = load_field_document(args.field)
            except (OSError, FieldDocumentError) as exc:
                raise UsageError(f"{args.field}: {exc}") from None
            if "m" not in doc or doc.entries["m"].rank != "tensor":
                raise UsageError(f"{args.field}: needs a tensor entry named 'm'")
            m = doc["m"]
        report = yang_surface_scenario(m, Cube(args.x0, _positive(args.edge, "--edge")))
    elif name == "conformal":
        params = ConformalMapParams.from_vectors(w=args.w, a=args.a_hat, p=args.p, b=args.b_hat)
        mat = IsotropicMaterial(
            _positive(args.mu, "--mu"), args.lam, _positive(args.lc, "--lc"),
            args.alpha1, args.alpha2,
        )
        try:
            kind = ModelKind.parse(args.model)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if kind is ModelKind.GHIBA:
            raise UsageError("the conformal scenario supports indeterminate, modified and skew")
        report = conformal_scenario(params, mat, kind)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown scenario {name!r}")
    return _emit(report, args.out)


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="couplestress",
        description="Exact verification of couple-stress identities on polynomial fields.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the seeded identity suites")
    v.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_ENV} or 42")
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--max-degree", type=int, default=4)
    v.add_argument("--only", default=None, help="run only checks whose id starts with this")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("analyze", help="decompose a stress field on a cube")
    a.add_argument("field_file")
    a.add_argument("--name", default="sigma", help="tensor entry to analyze")
    a.add_argument("--x0", type=vector, default=(Fraction(0),) * 3)
    a.add_argument("--lc", type=rational, default=Fraction(1))
    a.add_argument("--f", type=vector, default=(Fraction(0),) * 3, help="body force")
    a.add_argument("--c", type=vector, default=(Fraction(0),) * 3, help="body couple")
    a.add_argument("--merge-psi", action="store_true", help="also report m + psi(x0)")
    a.add_argument("--out", default=None)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("scenario", help="run a worked example")
    ss = s.add_subparsers(dest="name", required=True)

    def scen(name, help):
        q = ss.add_parser(name, help=help)
        q.add_argument("--out", default=None)
        q.set_defaults(func=cmd_scenario)
        return q

    t = scen("torsion", "linearised torsion of a beam")
    t.add_argument("--alpha-bar", type=rational, default=Fraction(1, 100))
    t.add_argument("--mu", type=rational, default=Fraction(1))
    t.add_argument("--lam", type=rational, default=Fraction(0))
    t.add_argument("--lc", type=rational, default=Fraction(1))
    t.add_argument("--alpha1", type=rational, default=Fraction(1, 12))
    t.add_argument("--dx", type=rational, default=Fraction(1))

    tf = scen("trace-free", "symmetric stress family a B_a + b B_b + c B_c")
    tf.add_argument("--a", type=rational, default=Fraction(1))
    tf.add_argument("--b", type=rational, default=Fraction(0))
    tf.add_argument("--c", type=rational, default=Fraction(0))
    tf.add_argument("--lc", type=rational, default=Fraction(1))

    yc = scen("yang-cantilever", "couples on a rigid cantilever")
    yc.add_argument("--length", type=rational, default=Fraction(1))
    yc.add_argument("--couple", type=rational, default=Fraction(1))

    ys = scen("yang-surface", "surface moment of a couple-stress field")
    ys.add_argument("--field", default=None, help="field document with a tensor entry 'm'")
    ys.add_argument("--x0", type=vector, default=(Fraction(1), Fraction(0), Fraction(1, 2)))
    ys.add_argument("--edge", type=rational, default=Fraction(2))

    cf = scen("conformal", "infinitesimal conformal map")
    cf.add_argument("--w", type=vector, default=(Fraction(0), Fraction(0), Fraction(1)))
    cf.add_argument("--a-hat", type=vector, default=(Fraction(0),) * 3, help="axial vector of A")
    cf.add_argument("--p", type=rational, default=Fraction(0))
    cf.add_argument("--b-hat", type=vector, default=(Fraction(0),) * 3)
    cf.add_argument("--model", default="modified", help="indeterminate|modified|skew")
    cf.add_argument("--mu", type=rational, default=Fraction(1))
    cf.add_argument("--lam", type=rational, default=Fraction(1))
    cf.add_argument("--lc", type=rational, default=Fraction(1))
    cf.add_argument("--alpha1", type=rational, default=Fraction(1))
    cf.add_argument("--alpha2", type=rational, default=Fraction(1))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"couplestress: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
