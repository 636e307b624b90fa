"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .algebra import AlgebraError, UnknownPreset, load_ring, make_field, ring_to_json
from .corpus import UnknownModule, cyclic_dual_sequence, load_module, residue_sequence
from .homalg import (
    NotExact,
    ShortExactSequence,
    betti_numbers,
    ext_dim,
    horseshoe_les,
    is_exact,
    minimal_free_resolution,
    tor_dims,
)
from .module import InvalidModule, ModuleHom, NotAHom, RingMismatch, module_from_json
from .purity import NotInjective, is_pure_submodule, pure_fc_pd_check
from .relative import (
    NotHomCExact,
    NotTensorCExact,
    CrossCheckMismatch,
    fc_pd,
    normalize_flavor,
    pc_pd,
    rel_tor_dims,
    rel_tor_les,
)
from .semidualizing import in_auslander_class, in_bass_class, is_semidualizing
from .verify import SQUARE_ZERO, run_verification

INPUT_ERRORS = (
    AlgebraError,
    UnknownPreset,
    UnknownModule,
    InvalidModule,
    RingMismatch,
    NotAHom,
    NotInjective,
    NotExact,
    json.JSONDecodeError,
    FileNotFoundError,
    ValueError,
)


def _global_options() -> argparse.ArgumentParser:
    g = argparse.ArgumentParser(add_help=False)
    g.add_argument("--ring", default=argparse.SUPPRESS, help="preset name or ring JSON file (default square_zero_2vars)")
    g.add_argument("--p", type=int, default=argparse.SUPPRESS, help="characteristic for --field Fp (default 5)")
    g.add_argument("--field", choices=["Fp", "Q"], default=argparse.SUPPRESS)
    g.add_argument("--out", default=argparse.SUPPRESS, help="write a JSON result here")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return g


GLOBAL_DEFAULTS = {"ring": SQUARE_ZERO, "p": 5, "field": "Fp", "out": None, "seed": 0}


def build_parser() -> argparse.ArgumentParser:
    g = _global_options()
    ap = argparse.ArgumentParser(prog="reltor", description="Relative homological algebra over finite local algebras.", parents=[g])
    sub = ap.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", parents=[g], help="ring utilities")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    rv = ring_sub.add_parser("validate", parents=[g], help="check the ring axioms")
    rv.add_argument("source", help="preset name or JSON file")

    for name in ("resolve", "betti"):
        s = sub.add_parser(name, parents=[g])
        s.add_argument("module")
        s.add_argument("--length", type=int, default=4)

    for name in ("tor", "ext"):
        s = sub.add_parser(name, parents=[g])
        s.add_argument("M")
        s.add_argument("N")
        s.add_argument("--degree", type=int, default=0)

    s = sub.add_parser("reltor", parents=[g], help="relative Tor dimensions")
    s.add_argument("M")
    s.add_argument("N")
    s.add_argument("--with", dest="C", default="preset:omega")
    s.add_argument("--flavor", default="fc-m", choices=["fc-m", "pc-m", "m-fc", "m-pc"])
    s.add_argument("--degree", type=int, default=0)
    s.add_argument("--strategy", default="cross-check", choices=["direct", "formula", "cross-check"])

    s = sub.add_parser("semidualizing", parents=[g])
    s.add_argument("C")
    s.add_argument("--bound", type=int, default=6)

    for name in ("classes", "fcpd"):
        s = sub.add_parser(name, parents=[g])
        s.add_argument("M")
        s.add_argument("--with", dest="C", default="preset:omega")
        s.add_argument("--bound", type=int, default=6)

    s = sub.add_parser("les", parents=[g], help="long exact sequence of a short exact sequence")
    s.add_argument("ses", help="JSON file, or preset:residue / preset:cyclic_dual")
    s.add_argument("N")
    s.add_argument("--length", type=int, default=4)
    s.add_argument("--relative", choices=["first", "second"], help="relative Tor LES with --with C")
    s.add_argument("--with", dest="C", default="preset:omega")

    s = sub.add_parser("purity", parents=[g])
    s.add_argument("inclusion", help="JSON file with source, target and matrix")
    s.add_argument("--with", dest="C", default=None, help="also check the F_C-pd inequality")
    s.add_argument("--bound", type=int, default=6)

    s = sub.add_parser("verify-paper", parents=[g], help="recompute the reference values")
    s.add_argument("--preset", default=SQUARE_ZERO)
    s.add_argument("--bound", type=int, default=6)
    return ap


# -- helpers ---------------------------------------------------------------------------


def _field(args):
    return make_field(args.field, args.p)


def _ring(args):
    return load_ring(args.ring, _field(args))


def _emit(args, text: str, doc) -> None:
    print(text)
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2, default=str) + "\n")


def _matrix(F, rows):
    return F.array(np.array(rows, dtype=object)) if len(rows) else None


def _module_ref(ref, R):
    if isinstance(ref, str):
        return load_module(ref, R)
    return module_from_json(ref, ring=R, field=R.field)


def _load_ses(path: str, R) -> ShortExactSequence:
    name = path.removeprefix("preset:")
    if name == "residue":
        return residue_sequence(R)
    if name == "cyclic_dual":
        return cyclic_dual_sequence(R)
    doc = json.loads(Path(path).read_text())
    A, B, Cm = (_module_ref(doc[k], R) for k in ("left", "middle", "right"))
    F = R.field
    f = ModuleHom(A, B, _matrix(F, doc["f"]) if A.dim else F.zeros((B.dim, 0)))
    g = ModuleHom(B, Cm, _matrix(F, doc["g"]) if Cm.dim else F.zeros((0, B.dim)))
    ses = ShortExactSequence(f, g)
    ses.check()
    return ses


def _load_inclusion(path: str, R) -> ModuleHom:
    doc = json.loads(Path(path).read_text())
    S, T = _module_ref(doc["source"], R), _module_ref(doc["target"], R)
    F = R.field
    mat = _matrix(F, doc["matrix"]) if S.dim and T.dim else F.zeros((T.dim, S.dim))
    f = ModuleHom(S, T, mat)
    if not f.is_valid():
        raise NotAHom("matrix does not commute with the ring action")
    return f


# -- commands --------------------------------------------------------------------------


def cmd_ring(args):
    R = load_ring(args.source, _field(args))
    text = f"ring {R.name}: dim {R.dim}, loewy length {R.loewy_length()}, valid"
    _emit(args, text, {"valid": True, "ring": ring_to_json(R)})
    return 0


def cmd_resolve(args):
    R = _ring(args)
    M = load_module(args.module, R)
    res = minimal_free_resolution(M, args.length)
    betti = [res.betti[i] if i < len(res.betti) else 0 for i in range(args.length + 1)]
    F = R.field
    doc = {
        "betti": betti,
        "differentials": {
            str(i): [[[F.to_json(x) for x in row] for row in D] for D in res.ring_diff(i)] for i in range(1, args.length + 1)
        },
    }
    _emit(args, f"betti {betti}", doc)
    return 0


def cmd_betti(args):
    R = _ring(args)
    b = betti_numbers(load_module(args.module, R), args.length)
    _emit(args, json.dumps(b), {"betti": b})
    return 0


def cmd_tor(args):
    R = _ring(args)
    M, N = load_module(args.M, R), load_module(args.N, R)
    d = tor_dims(M, N, args.degree)[args.degree]
    _emit(args, f"dim Tor_{args.degree} = {d}", {"degree": args.degree, "dim": d})
    return 0


def cmd_ext(args):
    R = _ring(args)
    M, N = load_module(args.M, R), load_module(args.N, R)
    d = ext_dim(M, N, args.degree)
    _emit(args, f"dim Ext^{args.degree} = {d}", {"degree": args.degree, "dim": d})
    return 0


def cmd_reltor(args):
    R = _ring(args)
    C, M, N = (load_module(x, R) for x in (args.C, args.M, args.N))
    flavor = normalize_flavor(args.flavor)
    try:
        dims = rel_tor_dims(flavor, C, M, N, args.degree, args.strategy)
    except CrossCheckMismatch as e:
        print(f"strategies disagree: {e}")
        return 1
    d = dims[args.degree]
    doc = {"flavor": flavor, "degree": args.degree, "dim": d, "dims": dims, "strategy": args.strategy}
    _emit(args, f"dim Tor^{flavor}_{args.degree} = {d}   (degrees 0..{args.degree}: {dims})", doc)
    return 0


def cmd_semidualizing(args):
    R = _ring(args)
    res = is_semidualizing(load_module(args.C, R), args.bound)
    if res:
        _emit(args, f"semidualizing: homothety bijective, Ext^i(C,C) = 0 for 1 <= i <= {args.bound}", {"semidualizing": True, "bound": args.bound})
        return 0
    _emit(args, f"not semidualizing ({res.axiom}): {res.witness}", {"semidualizing": False, "axiom": res.axiom, "witness": res.witness, "degree": res.degree})
    return 1


def cmd_classes(args):
    R = _ring(args)
    C, M = load_module(args.C, R), load_module(args.M, R)
    a, b = in_auslander_class(C, M, args.bound), in_bass_class(C, M, args.bound)
    lines = []
    doc = {}
    for label, v in (("Auslander", a), ("Bass", b)):
        why = v.failed_check or v.certificate or "all checks pass to the bound"
        lines.append(f"{label:9s} {v.status:18s} {why}")
        doc[label] = {"status": v.status, "failed_check": v.failed_check, "certificate": v.certificate, "checks": v.checks}
    _emit(args, "\n".join(lines), doc)
    return 0


def cmd_fcpd(args):
    R = _ring(args)
    C, M = load_module(args.C, R), load_module(args.M, R)
    fc, pc = fc_pd(C, M, args.bound), pc_pd(C, M, args.bound)
    doc = {"fc_pd": fc.to_json(), "pc_pd": pc.to_json()}
    _emit(args, f"fc_pd = {fc}  ({fc.witness})\npc_pd = {pc}  ({pc.witness})", doc)
    return 0 if fc == pc else 1


def cmd_les(args):
    R = _ring(args)
    ses = _load_ses(args.ses, R)
    N = load_module(args.N, R)
    if args.relative:
        C = load_module(args.C, R)
        try:
            X = rel_tor_les(C, ses, N, args.length, variable=args.relative)
        except (NotHomCExact, NotTensorCExact) as e:
            _emit(args, f"precondition fails: {e}", {"skipped": str(e)})
            return 0
    else:
        X = horseshoe_les(ses, N, args.length)
    v = is_exact(X)
    doc = {"exact": v.exact, "first_failure": v.first_failure, "homology": v.homology_dims}
    text = "exact" if v.exact else f"not exact at position {v.first_failure}"
    _emit(args, f"long exact sequence through degree {args.length}: {text}", doc)
    return 0 if v.exact else 1


def cmd_purity(args):
    R = _ring(args)
    inc = _load_inclusion(args.inclusion, R)
    cert = is_pure_submodule(inc)
    if not cert:
        _emit(args, f"not pure: {cert.reason}", {"pure": False, "reason": cert.reason})
        return 0
    doc = {"pure": True, "verified": cert.verify(), "retraction": cert.retraction.matrix.tolist()}
    text = "pure (split): retraction found and verified"
    if args.C:
        rep = pure_fc_pd_check(load_module(args.C, R), cert, args.bound)
        doc["inequality"] = {"sub": rep.fc_pd_sub.to_json(), "whole": rep.fc_pd_whole.to_json(), "holds": rep.holds, "strict": rep.strict}
        text += f"\nfc_pd(M) = {rep.fc_pd_whole} >= {rep.lower_bound}: {rep.holds}"
        if not rep.holds:
            _emit(args, text, doc)
            return 1
    _emit(args, text, json.loads(json.dumps(doc, default=str)))
    return 0


def cmd_verify(args):
    report = run_verification(args.preset, args.p, args.bound, args.seed, args.field)
    width = max(len(c["id"]) for c in report["checks"])
    lines = [f"{report['ring']} over {report['field']}, bound {report['bound']}"]
    for c in report["checks"]:
        lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {c['id']:{width}s}  {c['runtime_ms']:>6d} ms")
    _emit(args, "\n".join(lines), report)
    return 0 if report["all_pass"] else 1


COMMANDS = {
    "ring": cmd_ring,
    "resolve": cmd_resolve,
    "betti": cmd_betti,
    "tor": cmd_tor,
    "ext": cmd_ext,
    "reltor": cmd_reltor,
    "semidualizing": cmd_semidualizing,
    "classes": cmd_classes,
    "fcpd": cmd_fcpd,
    "les": cmd_les,
    "purity": cmd_purity,
    "verify-paper": cmd_verify,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    for k, v in GLOBAL_DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    try:
        return COMMANDS[args.command](args)
    except AlgebraError as e:
        print(f"error: {e.axiom} fails: {e} (witness {e.witness})", file=sys.stderr)
        return 2
    except INPUT_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except KeyError as e:
        print(f"error: missing or unknown key {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
