"""Command-line front end.

Exit status: 0 success, 1 a check failed, 2 input could not be parsed,
3 an engine rejected the input (the error class name is printed).
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import schema
from .errors import ParseError, StringyError
from .grp import (
    DEFAULT_BOUND, abelian_to_toric, blowup_identity_check, conjugacy_classes,
    eigen_alphas, mckay_table, orbifold_E, physicists_euler,
)
from .strata import ClosedStrataData, members, open_from_closed, stringy_E, stringy_euler
from .subdivide import smooth_subdivide
from .syntax import render_expr, render_poly
from .toric import (
    flip_volume_compare, shed_volume, strata_from_subdivision, stringy_E_toric,
)
from .verify import verify_flip, verify_group, verify_strata, verify_toric

CSV_HELP = """\
CSV columns by command:
  stringy        n, num_components, e_st, E_st
  toric-stringy  n, num_rays, e_st, vol, E_st
  shed-vol       n, num_rays, e_st, vol
  toric-strata   subset, E   (subset = space-separated ray indices)
  flip-compare   vol, vol_plus, ordering
  orbifold-e     order, num_classes, E_orb
  mckay          weight, count
  euler          order, num_classes, euler
  abelian-bridge order, n, match, E_toric, E_orb
  blowup-check   element, alphas, holds
  verify         check, result, detail
Rationals are printed as p/q; polynomials in the u, v text syntax."""

COMMANDS = {
    "stringy": "stringy E-function and Euler number of strata data",
    "toric-stringy": "closed-form stringy E-function of a toric pair",
    "shed-vol": "normalized volume of the shed of a toric pair",
    "toric-strata": "strata of a smooth subdivision of a toric pair",
    "flip-compare": "shed volumes on both sides of a toric flip",
    "orbifold-e": "orbifold E-function of a linear group action",
    "mckay": "McKay table (class counts by weight) of a group in SL(n)",
    "euler": "physicists' orbifold Euler number",
    "abelian-bridge": "toric pair of a diagonal abelian quotient, compared with E_orb",
    "blowup-check": "blow-up identity for each class representative",
    "verify": "run every applicable identity on one input",
}


class Failed(Exception):
    """Some requested check did not hold."""


def _rat(x):
    return str(Fraction(x))


class Report:
    def __init__(self, fmt, max_exponent=None):
        self.fmt = fmt
        self.max_exponent = max_exponent
        self.lines = []
        self.fields = {}
        self.header = None
        self.rows = []

    def text(self, line):
        self.lines.append(line)

    def table(self, header, rows):
        self.header = header
        self.rows = [list(map(str, r)) for r in rows]

    def render(self):
        if self.fmt == "json":
            return json.dumps(self.fields, indent=2)
        if self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows(self.rows)
            return buf.getvalue().rstrip("\n")
        return "\n".join(self.lines)

    def expr(self, key, E):
        self.fields[key] = render_expr(E)
        self.text(f"{key} = {render_expr(E)}")
        if self.max_exponent is not None:
            series = E.expand_series(self.max_exponent)
            self.fields[f"{key}_series"] = render_poly(series)
            self.text(f"{key} series to level {self.max_exponent} = {render_poly(series)}")


def _load(args):
    if args.json is not None:
        text = args.json
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return text, schema.load(text)


def _toric(data, text):
    return schema.parse_toric(data, text)


def cmd_stringy(data, text, args, rep):
    sd = schema.parse_strata(data, text)
    if isinstance(sd, ClosedStrataData):
        sd = open_from_closed(sd)
    E = stringy_E(sd)
    e = stringy_euler(sd, check=args.check)
    rep.expr("E_st", E)
    rep.fields["e_st"] = _rat(e)
    rep.text(f"e_st = {_rat(e)}")
    rep.table(["n", "num_components", "e_st", "E_st"],
              [[sd.n, len(sd.components), _rat(e), render_expr(E)]])
    for note in sd.consistency_warnings():
        print(f"warning: {note}", file=sys.stderr)


def _toric_summary(phi):
    E = stringy_E_toric(phi)
    return E, E.limit_at_one(), shed_volume(phi)


def _cross_check(rep, checks):
    failed = [c for c in checks if not c.ok]
    for c in checks:
        rep.text(c.line())
    rep.fields["checks"] = [{"check": c.name, "ok": c.ok, "detail": c.detail} for c in checks]
    if failed:
        raise Failed(f"{len(failed)} check(s) failed")


def cmd_toric_stringy(data, text, args, rep):
    phi = _toric(data, text)
    E, e, vol = _toric_summary(phi)
    rep.expr("E_st", E)
    rep.fields.update(e_st=_rat(e), vol=_rat(vol))
    rep.text(f"e_st = {_rat(e)}")
    rep.text(f"vol = {_rat(vol)}")
    rep.table(["n", "num_rays", "e_st", "vol", "E_st"],
              [[phi.fan.n, len(phi.fan.rays), _rat(e), _rat(vol), render_expr(E)]])
    if args.check:
        _cross_check(rep, verify_toric(phi))


def cmd_shed_vol(data, text, args, rep):
    phi = _toric(data, text)
    vol = shed_volume(phi)
    e = stringy_E_toric(phi).limit_at_one()
    rep.fields.update(vol=_rat(vol), e_st=_rat(e))
    rep.text(f"vol = {_rat(vol)}")
    rep.table(["n", "num_rays", "e_st", "vol"], [[phi.fan.n, len(phi.fan.rays), _rat(e), _rat(vol)]])
    if args.check and e != vol:
        rep.text(f"FAIL e_st {e} differs from vol {vol}")
        raise Failed("e_st differs from vol")


def cmd_toric_strata(data, text, args, rep):
    phi = _toric(data, text)
    fine = schema.parse_subdivision(data, phi, text) or smooth_subdivide(phi)
    sd = strata_from_subdivision(phi, fine)
    comps = [{"label": lab, "log_discrepancy": _rat(a)} for lab, a in sd.components]
    strata = [{"subset": members(J), "E": render_poly(E)}
              for J, E in sorted(sd.open_strata.items(), key=lambda kv: (bin(kv[0]).count("1"), kv[0]))]
    rep.fields.update(n=sd.n, components=comps, open_strata=strata)
    for (lab, a), r in zip(sd.components, fine.rays):
        rep.text(f"{lab} ray ({', '.join(map(_rat, r))}) log discrepancy {_rat(a)}")
    for s in strata:
        rep.text(f"{{{', '.join(map(str, s['subset']))}}}: {s['E']}")
    rep.table(["subset", "E"], [[" ".join(map(str, s["subset"])), s["E"]] for s in strata])
    if args.check:
        ok = stringy_E(sd) == stringy_E_toric(phi)
        rep.text(("PASS" if ok else "FAIL") + " strata route equals the closed form")
        if not ok:
            raise Failed("strata route differs")


def cmd_flip_compare(data, text, args, rep):
    phi, phi_plus = schema.parse_flip(data, text)
    cmp = flip_volume_compare(phi, phi_plus)
    rep.fields.update(vol=_rat(cmp.volume), vol_plus=_rat(cmp.volume_plus), ordering=cmp.ordering)
    rep.text(f"vol = {_rat(cmp.volume)}")
    rep.text(f"vol_plus = {_rat(cmp.volume_plus)}")
    rep.text(f"vol {cmp.ordering} vol_plus")
    rep.table(["vol", "vol_plus", "ordering"], [[_rat(cmp.volume), _rat(cmp.volume_plus), cmp.ordering]])
    if args.check:
        _cross_check(rep, verify_flip(phi, phi_plus))


def _group(data, text, args):
    return schema.parse_group(data, text, args.bound)


def cmd_orbifold_e(data, text, args, rep):
    G = _group(data, text, args)
    E = orbifold_E(G)
    classes = conjugacy_classes(G)
    rep.expr("E_orb", E)
    rep.table(["order", "num_classes", "E_orb"], [[G.order, len(classes), render_expr(E)]])
    if args.check:
        _cross_check(rep, verify_group(G))


def cmd_mckay(data, text, args, rep):
    G = _group(data, text, args)
    table = mckay_table(G)
    euler = sum(table.values())
    rep.fields.update(table={str(k): v for k, v in table.items()}, euler=euler)
    for k, v in table.items():
        rep.text(f"{k},{v}")
    rep.text(f"Euler {euler}")
    rep.table(["weight", "count"], sorted(table.items()))
    if args.check and euler != physicists_euler(G):
        raise Failed("McKay Euler number differs from the orbifold Euler number")


def cmd_euler(data, text, args, rep):
    G = _group(data, text, args)
    e = physicists_euler(G)
    rep.fields.update(order=G.order, num_classes=len(conjugacy_classes(G)), euler=e)
    rep.text(f"euler = {e}")
    rep.table(["order", "num_classes", "euler"], [[G.order, len(conjugacy_classes(G)), e]])


def cmd_abelian_bridge(data, text, args, rep):
    G = _group(data, text, args)
    phi = abelian_to_toric(G)
    Et, Eo = stringy_E_toric(phi), orbifold_E(G)
    fan = phi.fan
    # rays as given (the standard basis) with phi = 1, so the output is toric input
    rep.fields.update(
        lattice_basis=[[_rat(x) for x in r] for r in fan.lattice.basis],
        rays=[[int(i == j) for j in range(fan.n)] for i in range(fan.n)],
        cones=[list(c) for c in fan.maximal_cones],
        phi=[1] * fan.n,
        E_toric=render_expr(Et), E_orb=render_expr(Eo), match=Et == Eo,
    )
    rep.text("lattice basis: " + "; ".join(" ".join(map(_rat, r)) for r in fan.lattice.basis))
    rep.text("phi on primitive rays: " + " ".join(map(_rat, phi.values)))
    rep.text(f"E_toric = {render_expr(Et)}")
    rep.text(f"E_orb = {render_expr(Eo)}")
    rep.text(("PASS" if Et == Eo else "FAIL") + " toric closed form equals E_orb")
    rep.table(["order", "n", "match", "E_toric", "E_orb"],
              [[G.order, G.n, Et == Eo, render_expr(Et), render_expr(Eo)]])
    if Et != Eo:
        raise Failed("bridge identity failed")


def cmd_blowup_check(data, text, args, rep):
    G = _group(data, text, args)
    rows, results, bad = [], [], 0
    for cls in conjugacy_classes(G):
        g = G.elements[cls.representative]
        holds, lhs, rhs = blowup_identity_check(g)
        alphas = " ".join(map(_rat, eigen_alphas(g).alphas))
        bad += not holds
        rep.text(f"{'PASS' if holds else 'FAIL'} element {cls.representative} alphas [{alphas}]: "
                 f"{render_expr(lhs)} = {render_expr(rhs)}")
        rows.append([cls.representative, alphas, holds])
        results.append({"element": cls.representative, "alphas": alphas, "holds": holds,
                        "lhs": render_expr(lhs), "rhs": render_expr(rhs)})
    rep.fields["results"] = results
    rep.table(["element", "alphas", "holds"], rows)
    if bad:
        raise Failed(f"{bad} element(s) violate the identity")


def cmd_verify(data, text, args, rep):
    kind = schema.detect_kind(data)
    if kind == "group":
        checks = verify_group(_group(data, text, args))
    elif kind == "toric":
        checks = verify_toric(_toric(data, text))
    elif kind == "flip":
        checks = verify_flip(*schema.parse_flip(data, text))
    elif kind == "strata":
        checks = verify_strata(schema.parse_strata(data, text))
    else:
        raise ParseError("cannot tell what kind of input this is", text, 0)
    rep.fields["kind"] = kind
    rep.table(["check", "result", "detail"], [[c.name, "PASS" if c.ok else "FAIL", c.detail] for c in checks])
    _cross_check(rep, checks)


HANDLERS = {
    "stringy": cmd_stringy, "toric-stringy": cmd_toric_stringy, "shed-vol": cmd_shed_vol,
    "toric-strata": cmd_toric_strata, "flip-compare": cmd_flip_compare,
    "orbifold-e": cmd_orbifold_e, "mckay": cmd_mckay, "euler": cmd_euler,
    "abelian-bridge": cmd_abelian_bridge, "blowup-check": cmd_blowup_check, "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stringy", description="Exact stringy E-functions from strata, fans and group actions.",
        epilog=CSV_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, help_text in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=CSV_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="PATH", help="JSON input file ('-' for stdin)")
        src.add_argument("--json", metavar="TEXT", help="inline JSON input")
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.add_argument("--check", action="store_true", help="enable cross-oracles")
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="group closure bound")
        p.add_argument("--max-exponent", type=Fraction, default=None, metavar="RAT",
                       help="also print the series expansion up to this level of uv")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    rep = Report(args.format, args.max_exponent)
    rep.fields["command"] = args.command
    status = 0
    try:
        text, data = _load(args)
        HANDLERS[args.command](data, text, args, rep)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ParseError: cannot read input: {exc}", file=sys.stderr)
        return 2
    except StringyError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (Failed, AssertionError) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        status = 1
    out = rep.render()
    if out:
        print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
