"""Command line front end. Every subcommand parses, calls the library and
prints; nothing here decides anything mathematical.

Exit codes: 0 ok, 2 classification says no, 3 unknown / budget,
4 input error, 5 invariant violation.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field

from . import __version__
from .errors import InputError, MonomialxError

OK, NEGATIVE, UNKNOWN, BAD_INPUT, VIOLATION = 0, 2, 3, 4, 5


@dataclass
class Outcome:
    result: dict
    pretty: str = ""
    code: int = OK
    warnings: list = field(default_factory=list)


@dataclass
class RunReport:
    command: list
    input_digest: str
    result: dict
    timing: float | None
    warnings: list
    exit_code: int
    fmt: str = "pretty"

    def to_json(self):
        return {"command": self.command, "input_digest": self.input_digest,
                "exit_code": self.exit_code, "result": self.result,
                "timing": self.timing, "warnings": self.warnings}


# ---- input helpers ---------------------------------------------------------------

def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}", field=path) from None


def _load_json(path):
    text = _read(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON in {path}: {e.msg} at line {e.lineno} column {e.colno}",
                         field="$") from None


def _split(s):
    return [t.strip() for t in s.split(",") if t.strip()]


def _ideal(args, which=""):
    from .ideal import MonomialIdeal, ideal_from_json
    path = getattr(args, "in" + which, None)
    gens = getattr(args, "gens" + which, None)
    if path:
        return ideal_from_json(_load_json(path), "$")
    if not which and getattr(args, "named", None):
        from .named import IDEALS, named_ideal
        if args.named not in IDEALS:
            raise InputError(f"unknown ideal {args.named!r}; known: {', '.join(IDEALS)}")
        return named_ideal(args.named)
    if gens is None or args.n is None:
        raise InputError(f"give --in{which} FILE or --n N --gens{which} 'u,v,...'")
    gl = _split(gens)
    if not gl:
        raise InputError("empty generator list", field="gens")
    return MonomialIdeal.parse(gl, args.n)


def _complex(args):
    from .simplicial import complex_from_json
    if getattr(args, "named", None):
        from .named import NAMES, complex
        if args.named not in NAMES:
            raise InputError(f"unknown complex {args.named!r}; known: {', '.join(NAMES)}")
        return complex(args.named)
    if not args.input:
        raise InputError("give --in FILE or --named NAME")
    return complex_from_json(_load_json(args.input), "$")


def _mon(s, n, name):
    from .monomial import parse_monomial
    try:
        return parse_monomial(s, n)
    except InputError as e:
        raise InputError(str(e), field=name) from None


def _grid(table):
    return table.grid()


# ---- ideal -------------------------------------------------------------------------

def cmd_ideal(args) -> Outcome:
    from .betti import betti_numbers, depth_and_projdim, field_name
    from .ideal import colon_ideal, intersect, krull_dim, minimal_primes
    from .linquot import check_order, find_order, is_stable, QuotientCertificate
    from .resolution import stable_hilbert_series
    I = _ideal(args)
    act = args.action
    if act == "betti":
        ob = betti_numbers(I, args.char, args.method)
        return Outcome({"ideal": I.to_json(), "betti": ob.to_json()},
                       f"Betti table of I over {ob.field} ({ob.method})\n{_grid(ob.table)}")
    if act == "quotients":
        if args.order:
            order = [_mon(s, I.n, "order") for s in _split(args.order)]
            res = check_order(I, order)
            if isinstance(res, QuotientCertificate):
                return Outcome({"status": "found", "certificate": res.to_json()},
                               _quot_pretty(res))
            return Outcome({"status": "fails", "failure": res.to_json()},
                           f"order fails at position {res.i}: colon = ({', '.join(res.to_json()['colon'])})",
                           NEGATIVE)
        fr = find_order(I, args.budget)
        out = {"status": fr.status, "nodes": fr.nodes}
        if fr.found:
            out["certificate"] = fr.certificate.to_json()
            return Outcome(out, _quot_pretty(fr.certificate))
        code = NEGATIVE if fr.status == "none" else UNKNOWN
        return Outcome(out, f"linear quotients: {fr.status}", code)
    if act == "stable":
        st = is_stable(I)
        out = {"stable": st}
        text = f"stable: {st}"
        if st:
            h = stable_hilbert_series(I)
            out["hilbert_series_of_I"] = h.to_json()
            text += f"\nHilbert series of I: {h}"
        return Outcome(out, text, OK if st else NEGATIVE)
    if act == "intersect":
        J = _ideal(args, "2")
        K = intersect(I, J)
        return Outcome({"intersection": K.to_json()}, str(K))
    if act == "colon":
        if not args.u:
            raise InputError("colon needs --u")
        u = _mon(args.u, I.n, "u")
        K = colon_ideal(I, u)
        if K is None:
            return Outcome({"colon": "unit"}, "(1)")
        return Outcome({"colon": K.to_json()}, str(K))
    if act == "dim-depth":
        dim = krull_dim(I)
        depth, pd = depth_and_projdim(I, args.char)
        out = {"dim": dim, "depth": depth, "projdim_S_mod_I": pd,
               "cohen_macaulay": dim == depth, "field": field_name(args.char),
               "minimal_primes": minimal_primes(I).as_lists()}
        return Outcome(out, f"dim S/I = {dim}\ndepth S/I = {depth}\nprojdim S/I = {pd}\n"
                            f"Cohen-Macaulay: {dim == depth}")
    raise InputError(f"unknown action {act}")


def _quot_pretty(cert):
    lines = ["linear quotients order:"]
    for u, s in zip(cert.order, cert.sets):
        q = "(" + ", ".join(f"x{i}" for i in sorted(s)) + ")" if s else "(0)"
        lines.append(f"  {u}  quotient {q}")
    return "\n".join(lines)


# ---- lexsegment ----------------------------------------------------------------------

def _segment(args):
    from .lexseg import build_segment
    for k in ("n", "d", "u", "v"):
        if getattr(args, k) is None:
            raise InputError(f"lexsegment needs --{k}", field=k)
    return build_segment(args.n, args.d, _mon(args.u, args.n, "u"), _mon(args.v, args.n, "v"))


def cmd_lexsegment(args) -> Outcome:
    from .lexseg import (classify, depth_formula, describe, is_cohen_macaulay,
                         krull_dim_formula, quotient_order)
    from .resolution import mapping_cone_resolution
    seg = _segment(args)
    warnings = []
    if args.action == "classify":
        out = describe(seg)
        if seg.d >= 2:
            cls = classify(seg)
            out["classification"] = cls.to_json()
            warnings += cls.notes
        else:
            out["classification"] = None
            warnings.append("d = 1: generated by variables, classification not applied")
        dim, dep, cm = krull_dim_formula(seg), depth_formula(seg), is_cohen_macaulay(seg)
        out["dim"], out["depth"], out["cohen_macaulay"] = dim.to_json(), dep.to_json(), cm.to_json()
        warnings += dim.notes + dep.notes
        lines = [str(seg), "generators: " + ", ".join(out["gens"])]
        if out["classification"]:
            c = out["classification"]
            lines.append(f"completely lexsegment: {str(c['completely']).lower()} ({c['completely_tag']})")
            lines.append(f"linear resolution: {str(c['linear_resolution']).lower()} ({c['linear_tag']})")
        lines.append(f"dim S/I = {dim.value} [{dim.tag}], depth S/I = {dep.value} [{dep.tag}], "
                     f"Cohen-Macaulay: {cm.cohen_macaulay} [{cm.case}]")
        return Outcome(out, "\n".join(lines), OK, warnings)
    if args.action == "order":
        cert = quotient_order(seg)
        return Outcome({"certificate": cert.to_json()}, _quot_pretty(cert))
    if args.action == "resolution":
        cert = quotient_order(seg)
        R = mapping_cone_resolution(cert)
        return Outcome({"certificate": cert.to_json(), "resolution": R.to_json()}, _res_pretty(R))
    raise InputError(f"unknown action {args.action}")


# ---- resolution ------------------------------------------------------------------------

def _res_pretty(R):
    out = [R.shape()]
    for i in range(len(R.diffs)):
        src = "F_%d" % i
        tgt = "S" if i == 0 else "F_%d" % (i - 1)
        out.append(f"\ndiff[{i}] : {src} -> {tgt}")
        out.append("  basis: " + ", ".join(str(lab) for lab in R.modules[i]))
        out.append(R.pretty(i))
    return "\n".join(out)


def cmd_resolution(args) -> Outcome:
    from .linquot import QuotientCertificate, check_order, find_order
    from .resolution import ek_resolution, koszul, mapping_cone_resolution, verify_complex
    act = args.action
    if act == "koszul":
        if not args.seq or args.n is None:
            raise InputError("koszul needs --n and --seq 'f1,f2,...'")
        seq = [_mon(s, args.n, "seq") for s in _split(args.seq)]
        R = koszul(seq)
    else:
        I = _ideal(args)
        if act == "ek":
            R = ek_resolution(I)
        elif act in ("cone", "verify"):
            if args.order:
                cert = check_order(I, [_mon(s, I.n, "order") for s in _split(args.order)])
                if not isinstance(cert, QuotientCertificate):
                    return Outcome({"status": "fails", "failure": cert.to_json()},
                                   f"order is not a linear-quotients order (position {cert.i})", NEGATIVE)
            else:
                fr = find_order(I, args.budget)
                if not fr.found:
                    return Outcome({"status": fr.status}, f"linear quotients: {fr.status}",
                                   NEGATIVE if fr.status == "none" else UNKNOWN)
                cert = fr.certificate
            R = mapping_cone_resolution(cert)
        else:
            raise InputError(f"unknown action {act}")
    if act == "verify":
        from .betti import betti_numbers
        rep = verify_complex(R)
        ob = betti_numbers(R.ideal, args.char)
        same = rep.betti == ob.table
        out = {"report": rep.to_json(), "oracle": ob.to_json(), "betti_match": same}
        ok = rep.dd_zero and rep.minimal and rep.degrees_ok and same
        text = (f"d*d = 0: {rep.dd_zero}\nminimal: {rep.minimal}\ndegrees: {rep.degrees_ok}\n"
                f"Betti table matches oracle: {same}\n{_grid(rep.betti)}")
        return Outcome(out, text, OK if ok else VIOLATION)
    return Outcome({"resolution": R.to_json(), "betti": R.betti().to_json()}, _res_pretty(R))


# ---- complex ------------------------------------------------------------------------------

def cmd_complex(args) -> Outcome:
    from .errors import BudgetError, UnsupportedError
    from .simplicial import (alexander_dual, dual_sr_ideal, homology, is_cohen_macaulay,
                             is_shellable, is_shifted, is_vertex_decomposable, sr_ideal)
    D = _complex(args)
    act = args.action
    warnings = []
    if D.missing_vertices():
        warnings.append(f"vertices {D.missing_vertices()} are not faces")
    if act == "dual":
        Dv = alexander_dual(D)
        out = {"complex": D.to_json(), "dual": Dv.to_json()}
        return Outcome(out, f"dual: {Dv}", OK, warnings)
    if act == "shelling":
        res = is_shellable(D, args.budget)
        text = f"shellable: {res.status}"
        if res.shellable:
            text += "\norder: " + ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in res.order)
        code = {"shellable": OK, "not-shellable": NEGATIVE}.get(res.status, UNKNOWN)
        return Outcome(res.to_json(), text, code, warnings)
    if act == "cm":
        rep = is_cohen_macaulay(D, args.char)
        return Outcome(rep.to_json(), f"Cohen-Macaulay over {rep.to_json()['field']}: {rep.cohen_macaulay}",
                       OK if rep else NEGATIVE, warnings)
    if act == "analyze":
        out = {"complex": D.to_json(), "dim": D.dim, "pure": D.is_pure(), "f_vector": D.f_vector()}
        I = sr_ideal(D) if not D.is_void() else None
        out["sr_ideal"] = I.to_json() if I is not None else None
        try:
            out["dual_sr_ideal"] = dual_sr_ideal(D).to_json()
        except UnsupportedError as e:
            out["dual_sr_ideal"] = None
            warnings.append(str(e))
        out["homology"] = homology(D, args.char).to_json()
        cm = is_cohen_macaulay(D, args.char)
        out["cohen_macaulay"] = cm.to_json()
        if D.is_pure() and not D.is_void():
            sh = is_shellable(D, args.budget)
            out["shellable"] = sh.to_json()
            out["vertex_decomposable"] = is_vertex_decomposable(D)
            try:
                lab = is_shifted(D)
                out["shifted"] = {"shifted": lab is not None, "labelling": lab}
            except BudgetError as e:
                out["shifted"] = None
                warnings.append(str(e))
        else:
            warnings.append("not pure: shellability predicates skipped")
        lines = [f"complex: {D}", f"dim {D.dim}, pure: {D.is_pure()}, f-vector {D.f_vector()}",
                 f"I_Delta = {I}" if I is not None else "I_Delta = 0",
                 f"reduced homology: {out['homology']['reduced_betti']}",
                 f"Cohen-Macaulay: {cm.cohen_macaulay}"]
        if "shellable" in out:
            lines.append(f"shellable: {out['shellable']['status']}, vertex-decomposable: "
                         f"{out['vertex_decomposable']}, shifted: "
                         f"{out['shifted']['shifted'] if out['shifted'] else 'unknown'}")
        return Outcome(out, "\n".join(lines), OK, warnings)
    raise InputError(f"unknown action {act}")


# ---- constructible -----------------------------------------------------------------------

def cmd_constructible(args) -> Outcome:
    from .constructible import certificate_from_json, polarize, search_constructible, verify_certificate
    I = _ideal(args)
    act = args.action
    if act == "verify":
        if not args.cert:
            raise InputError("verify needs --cert FILE")
        cert = certificate_from_json(_load_json(args.cert), I.n)
        vr = verify_certificate(I, cert)
        text = "certificate valid" if vr else f"certificate invalid at {vr.path}: {vr.reason}"
        return Outcome(vr.to_json(), text, OK if vr else NEGATIVE)
    if act == "search":
        res = search_constructible(I, args.budget)
        code = {"found": OK, "not-constructible": NEGATIVE}.get(res.status, UNKNOWN)
        return Outcome(res.to_json(), f"constructible: {res.status} ({res.via}, {res.nodes} nodes)", code)
    if act == "polarize":
        pol = polarize(I)
        return Outcome(pol.to_json(), str(pol.ideal))
    raise InputError(f"unknown action {act}")


# ---- subword ---------------------------------------------------------------------------------

def cmd_subword(args) -> Outcome:
    from .coxeter import analyze, kpoly_bruteforce, parse_perm, parse_word, sphere_or_ball, subword_counts
    if args.m is None or not args.word or not args.pi:
        raise InputError("subword needs --m, --word and --pi")
    pi_text = args.pi if not args.oneline else "oneline:" + args.pi
    pi = parse_perm(pi_text, args.m)
    word = parse_word(args.word, args.m)
    act = args.action
    if act == "analyze":
        A = analyze(args.m, word, pi)
        out = A.to_json()
        rep = A.report
        lines = [f"pi = {out['pi_cycles']} (one-line {list(pi)}), length {rep.ell}, |Q| = {rep.n}"]
        if rep.empty:
            lines.append("Q does not contain pi: the subword complex is empty")
            return Outcome(out, "\n".join(lines), NEGATIVE, rep.flags)
        lines.append("facets: " + ", ".join("{" + ",".join(map(str, f)) + "}" for f in rep.facets()))
        lines.append("dual generators: " + ", ".join(out["dual_generators"]))
        if A.quotients:
            q = A.quotients.to_json()
            lines.append("quotients: " + ", ".join(
                "(" + ", ".join(f"x{i}" for i in s) + ")" if s else "(0)" for s in q["sets"]))
            lines.append(f"d = {tuple(q['d'])}")
            lines.append("shelling: " + ", ".join("{" + ",".join(map(str, f)) + "}" for f in q["shelling"]))
        lines.append(f"{A.sphere}")
        if A.special:
            s = A.special
            lines.append(f"special class: r = {s.r}, l = {s.l}, betti {list(s.betti.values())}, "
                         f"K-polynomial agrees: {s.kpoly_agree}")
            lines.append("I_Delta = (" + ", ".join(str(g) for g in s.ci_generators) + ")")
        return Outcome(out, "\n".join(lines), OK, rep.flags + (A.special.flags if A.special else []))
    if act == "kpoly":
        kp = kpoly_bruteforce(args.m, word, pi)
        counts = subword_counts(args.m, word, pi)
        text = " ".join(f"{c:+d}*t^{k}" for k, c in sorted(kp.items())) or "0"
        return Outcome({"kpoly": {str(k): v for k, v in sorted(kp.items())},
                        "counts": {str(k): v for k, v in sorted(counts.items())}}, text)
    if act == "sphere":
        v = sphere_or_ball(args.m, word, pi)
        return Outcome({"verdict": v}, v)
    raise InputError(f"unknown action {act}")


# ---- sweeps ------------------------------------------------------------------------------------

def cmd_sweep(args) -> Outcome:
    from . import sweeps
    act = args.action
    if act == "lexsegment":
        res = sweeps.lexsegment_sweep(args.max_n, args.max_d, 32003 if args.char == 0 else args.char)
    else:
        cx = sweeps.random_complexes(args.count, args.seed, args.max_n)
        if act == "hierarchy":
            res = sweeps.hierarchy_sweep(cx, args.char)
        elif act == "eagon-reiner":
            res = sweeps.eagon_reiner_sweep(cx, args.char, args.threads)
        else:
            raise InputError(f"unknown action {act}")
    text = f"{res.name}: {res.checked} checked, {res.nfail} failures"
    if res.counts:
        text += "\n" + ", ".join(f"{k}: {v}" for k, v in sorted(res.counts.items()))
    return Outcome(res.to_json(), text, OK if res.ok else VIOLATION)


# ---- parser ---------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "pretty"], default=None)
    common.add_argument("--json", action="store_true", help="same as --format json")
    common.add_argument("--char", type=int, default=0, help="0 for QQ, else a prime")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--timing", action="store_true", help="record wall time (breaks byte-identity)")
    common.add_argument("--budget", type=int, default=None)

    p = argparse.ArgumentParser(prog="monomialx", description="monomial ideal toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="group", required=True)

    def ideal_args(sp, second=False):
        sp.add_argument("--in", dest="in", metavar="FILE")
        sp.add_argument("--n", type=int)
        sp.add_argument("--gens")
        sp.add_argument("--named", help="a built-in ideal, e.g. nonsqfree")
        if second:
            sp.add_argument("--in2", metavar="FILE")
            sp.add_argument("--gens2")

    g = sub.add_parser("ideal", parents=[common])
    g.add_argument("action", choices=["betti", "quotients", "stable", "intersect", "colon", "dim-depth"])
    ideal_args(g, True)
    g.add_argument("--order")
    g.add_argument("--u")
    g.add_argument("--method", default="auto", choices=["auto", "taylor", "koszul"])

    g = sub.add_parser("lexsegment", parents=[common])
    g.add_argument("action", choices=["classify", "order", "resolution"])
    for k in ("n", "d"):
        g.add_argument(f"--{k}", type=int)
    g.add_argument("--u")
    g.add_argument("--v")

    g = sub.add_parser("resolution", parents=[common])
    g.add_argument("action", choices=["koszul", "ek", "cone", "verify"])
    ideal_args(g)
    g.add_argument("--seq")
    g.add_argument("--order")

    g = sub.add_parser("complex", parents=[common])
    g.add_argument("action", choices=["analyze", "dual", "shelling", "cm"])
    g.add_argument("--in", dest="input", metavar="FILE")
    g.add_argument("--named")

    g = sub.add_parser("constructible", parents=[common])
    g.add_argument("action", choices=["verify", "search", "polarize"])
    ideal_args(g)
    g.add_argument("--cert", metavar="FILE")

    g = sub.add_parser("subword", parents=[common])
    g.add_argument("action", choices=["analyze", "kpoly", "sphere"])
    g.add_argument("--m", type=int)
    g.add_argument("--word")
    g.add_argument("--pi")
    g.add_argument("--oneline", action="store_true", help="--pi is one-line notation")

    g = sub.add_parser("sweep", parents=[common])
    g.add_argument("action", choices=["hierarchy", "lexsegment", "eagon-reiner"])
    g.add_argument("--max-n", type=int, default=None)
    g.add_argument("--max-d", type=int, default=3)
    g.add_argument("--count", type=int, default=100)
    return p


HANDLERS = {"ideal": cmd_ideal, "lexsegment": cmd_lexsegment, "resolution": cmd_resolution,
            "complex": cmd_complex, "constructible": cmd_constructible, "subword": cmd_subword,
            "sweep": cmd_sweep}

_DEFAULT_BUDGET = {"ideal": 10**6, "resolution": 10**6, "complex": 10**6, "constructible": 200_000}
_DEFAULT_MAX_N = {"lexsegment": 4, "hierarchy": 6, "eagon-reiner": 6}


def _digest(args) -> str:
    """sha256 over the normalized arguments and the bytes of every input file."""
    skip = {"format", "json", "timing", "threads"}
    h = hashlib.sha256()
    items = sorted((k, v) for k, v in vars(args).items() if k not in skip)
    h.update(json.dumps(items, default=str).encode())
    for k in ("in", "in2", "input", "cert"):
        path = getattr(args, k, None)
        if path and path != "-":
            try:
                with open(path, "rb") as fh:
                    h.update(fh.read())
            except OSError:
                pass
    return h.hexdigest()


def run(argv=None):
    """Returns (exit code, RunReport, pretty text)."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = BAD_INPUT if e.code not in (0, None) else OK
        return code, None, ""
    if args.budget is None:
        args.budget = _DEFAULT_BUDGET.get(args.group, 10**6)
    if getattr(args, "max_n", "x") is None:
        args.max_n = _DEFAULT_MAX_N.get(args.action, 5)
    t0 = time.perf_counter()
    try:
        oc = HANDLERS[args.group](args)
    except MonomialxError as e:
        err = {"type": type(e).__name__, "message": str(e)}
        if getattr(e, "field", None):
            err["field"] = e.field
        oc = Outcome({"error": err}, f"error ({type(e).__name__}): {e}"
                     + (f" [at {e.field}]" if getattr(e, "field", None) else ""), e.exit_code)
    elapsed = time.perf_counter() - t0 if args.timing else None
    fmt = "json" if args.json else (args.format or "pretty")
    rep = RunReport(argv, _digest(args), oc.result, elapsed, oc.warnings, oc.code, fmt)
    return oc.code, rep, oc.pretty


def main(argv=None):
    code, rep, pretty = run(argv)
    if rep is None:
        return code
    if rep.fmt == "json":
        sys.stdout.write(json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(pretty + "\n")
        for w in rep.warnings:
            sys.stdout.write(f"warning: {w}\n")
        if rep.timing is not None:
            sys.stdout.write(f"time: {rep.timing:.3f}s\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
