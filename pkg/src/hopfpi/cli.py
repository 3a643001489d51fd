"""Command line: ``hopfpi validate | construct | enumerate-rb | ybe``.

Exit codes: 0 pass, 1 mathematical failure (a check fails or a construction
hypothesis does not hold), 2 input or resource error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import io
from .errors import AxiomError, InputError, PreconditionError, VerificationError
from .linalg import Field, Matrix

WORKERS_ENV = "HOPFPI_WORKERS"


class Report:
    """Command echo, named check reports, timing and exit status."""

    def __init__(self, argv):
        self.argv = list(argv)
        self.sections = []  # (name, CheckReport)
        self.messages = []
        self.data = {}
        self.error = None
        self.status = 0
        self.start = time.perf_counter()

    def add(self, name, rep):
        self.sections.append((name, rep))
        if not rep.passed:
            self.status = max(self.status, 1)
        return rep

    def fail(self, status, message):
        self.status = max(self.status, status)
        self.error = message

    def to_dict(self):
        return {
            "command": self.argv,
            "pass": self.status == 0,
            "exit_status": self.status,
            "checks": {name: rep.to_dict() for name, rep in self.sections},
            "messages": self.messages,
            "data": self.data,
            "error": self.error,
            "seconds": round(time.perf_counter() - self.start, 4),
        }

    def render(self):
        lines = ["$ hopfpi " + " ".join(self.argv)]
        for name, rep in self.sections:
            lines.append(f"[{name}] " + rep.summary().replace("\n", "\n" + " " * 2))
        lines.extend(self.messages)
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"verdict: {'PASS' if self.status == 0 else 'FAIL'} (exit {self.status}, "
                     f"{time.perf_counter() - self.start:.3f}s)")
        return "\n".join(lines)


# validation per kind ------------------------------------------------------

def validate_payload(kind, obj, rep: Report):
    from .brace import check_brace, check_brace_lemma, check_module_bialgebra, check_module_properties
    from .hopf import check_antipode_identities, check_hopf_pi_algebra, is_cocommutative
    from .matched_pair import check_matched_pair
    from .post_hopf import PostHopfStructure, check_post_hopf, check_post_hopf_derived, check_subadjacent
    from .rota_baxter import check_factorization, check_rb, descendent_hopf, factorization_rb, RotaBaxterOperator
    if kind == "group":
        G, gradings = obj
        rep.messages.append(f"group of order {G.size}; gradings: {', '.join(gradings) or 'none'}")
    elif kind == "hopf_pi_algebra":
        rep.add("hopf", check_hopf_pi_algebra(obj))
        if obj.antipode is not None:
            rep.add("antipode_identities", check_antipode_identities(obj))
    elif kind == "brace":
        rep.add("brace", check_brace(obj))
        if rep.status == 0:
            rep.add("brace_lemma", check_brace_lemma(obj))
            rep.add("module_properties", check_module_properties(obj))
    elif kind == "matched_pair":
        rep.add("matched_pair", check_matched_pair(obj))
    elif kind == "post_hopf":
        r, psi = check_post_hopf(obj.base, obj.triangle)
        rep.add("post_hopf", r)
        if psi is not None:
            rep.add("post_hopf_derived", check_post_hopf_derived(obj.base, obj.triangle, psi))
            if is_cocommutative(obj.base) and rep.status == 0:
                rep.add("subadjacent", check_subadjacent(PostHopfStructure(obj.base, obj.triangle, psi)))
    elif kind == "rota_baxter":
        r = rep.add("rota_baxter", check_rb(obj.carrier, obj.B))
        if r.passed and obj.carrier.group.is_abelian:
            rep.add("descendent", descendent_hopf(obj)[1])
    elif kind == "factorization":
        H, Fz = obj
        r = rep.add("factorization", check_factorization(H, Fz))
        if r.passed:
            R = factorization_rb(H, Fz)
            rep.add("rota_baxter", check_rb(H, R.B))
            assert isinstance(R, RotaBaxterOperator)
    elif kind == "action":
        K, H, act = obj
        rep.add("module_bialgebra", check_module_bialgebra(K, H, act))


# construct subcommands ---------------------------------------------------

def _payload(path, kind):
    doc = io.load(path)
    if doc.kind != kind:
        raise InputError(f"{path}: expected a {kind} document, got {doc.kind}")
    return doc


def _parse_rows(text, F):
    try:
        rows = [[F.parse(tok.strip()) if not F.mod else F.parse(int(tok)) for tok in r.split(",")]
                for r in text.split(";")]
    except ValueError:
        raise InputError(f"malformed matrix {text!r}") from None
    if len({len(r) for r in rows}) != 1:
        raise InputError(f"ragged matrix {text!r}")
    return Matrix.from_rows(F, rows)


def _named_matrices(items, F):
    out = []
    for item in items or []:
        name, sep, rows = item.partition("=")
        if not sep:
            raise InputError(f"expected NAME=ROWS, got {item!r}")
        out.append((name, _parse_rows(rows, F)))
    return out


def _post_hopf(path):
    from .post_hopf import post_hopf
    P = _payload(path, "post_hopf").payload
    return post_hopf(P.base, P.triangle)


def _rb(path):
    from .rota_baxter import rota_baxter
    R = _payload(path, "rota_baxter").payload
    return rota_baxter(R.carrier, R.B)


def construct(args):
    from . import brace, matched_pair as mp, post_hopf as ph, rota_baxter as rb
    from .hopf import GradedLinearMap, group_algebra
    sub = args.sub
    if sub == "group-algebra":
        doc = _payload(args.group, "group")
        G, gradings = doc.payload
        if args.deg not in gradings:
            raise InputError(f"no grading {args.deg!r}; available: {', '.join(gradings)}")
        return "hopf_pi_algebra", group_algebra(gradings[args.deg], Field.from_descriptor(args.field))
    if sub in ("smash-pimod", "smash-modlike"):
        K, H, act = _payload(args.action, "action").payload
        if sub == "smash-pimod":
            return "brace", brace.smash_brace_pimod(H, K, act)
        return "brace", brace.smash_brace_modlike(K, H, act)
    if sub == "aut-brace":
        B = _payload(args.brace, "brace").payload
        autos = _named_matrices(args.auto, B.field)
        return "brace", brace.aut_indexed_brace(B, [m for _, m in autos], [n for n, _ in autos])
    if sub == "bicrossed":
        return "hopf_pi_algebra", mp.bicrossed_product(_payload(args.mp, "matched_pair").payload)
    if sub == "brace-to-mp":
        return "matched_pair", mp.brace_to_matched_pair(_payload(args.brace, "brace").payload)
    if sub == "mp-to-brace":
        return "brace", mp.matched_pair_to_brace(_payload(args.mp, "matched_pair").payload)
    if sub == "post-hopf-from-brace":
        return "post_hopf", ph.post_hopf_from_brace(_payload(args.brace, "brace").payload)
    if sub == "brace-from-post-hopf":
        return "brace", ph.brace_from_post_hopf(_post_hopf(args.post_hopf))
    if sub == "subadjacent":
        return "hopf_pi_algebra", ph.subadjacent(_post_hopf(args.post_hopf))
    if sub == "antipode-rb":
        return "rota_baxter", rb.antipode_rb(_payload(args.algebra, "hopf_pi_algebra").payload)
    if sub == "twist-rb":
        R = _rb(args.rb)
        H = R.carrier
        blocks = {int(n): m for n, m in _named_matrices(args.phi, H.field)}
        phi = GradedLinearMap(H.space, H.space, range(H.group.size), blocks)
        return "rota_baxter", rb.twist_rb(R, phi)
    if sub == "factorization-rb":
        H, Fz = _payload(args.factorization, "factorization").payload
        return "rota_baxter", rb.factorization_rb(H, Fz)
    if sub == "aut-rb":
        R = _rb(args.rb)
        autos = _named_matrices(args.auto, R.field)
        return "rota_baxter", rb.aut_indexed_rb(R, [m for _, m in autos], [n for n, _ in autos])
    if sub == "descendent":
        return "hopf_pi_algebra", rb.descendent_hopf(_rb(args.rb))[0]
    if sub == "brace-from-rb":
        return "brace", rb.brace_from_rb(_rb(args.rb))
    raise InputError(f"unknown construct subcommand {sub!r}")


CONSTRUCT_INPUTS = {
    "group-algebra": [("--group", "group document"), ("--deg", "grading name")],
    "smash-pimod": [("--action", "action document (acting algebra trivially graded)")],
    "smash-modlike": [("--action", "action document")],
    "aut-brace": [("--brace", "brace over the trivial group")],
    "bicrossed": [("--mp", "matched pair document")],
    "brace-to-mp": [("--brace", "brace document")],
    "mp-to-brace": [("--mp", "matched pair document with K = H")],
    "post-hopf-from-brace": [("--brace", "brace document")],
    "brace-from-post-hopf": [("--post-hopf", "post-Hopf document")],
    "subadjacent": [("--post-hopf", "post-Hopf document")],
    "antipode-rb": [("--algebra", "Hopf pi-algebra document")],
    "twist-rb": [("--rb", "Rota-Baxter document")],
    "factorization-rb": [("--factorization", "factorization document")],
    "aut-rb": [("--rb", "Rota-Baxter document over the trivial group")],
    "descendent": [("--rb", "Rota-Baxter document")],
    "brace-from-rb": [("--rb", "Rota-Baxter document")],
}


# commands --------------------------------------------------------------

def cmd_validate(args, rep):
    doc = io.load(args.file)
    rep.messages.append(f"{doc.kind} over {doc.field.descriptor}")
    validate_payload(doc.kind, doc.payload, rep)


def cmd_construct(args, rep):
    kind, obj = construct(args)
    text = io.dump(kind, obj)
    # always re-validate the written form
    validate_payload(kind, io.parse_document(text).payload, rep)
    if rep.status:
        rep.messages.append("constructed document failed re-validation; not written")
        return
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
        rep.messages.append(f"wrote {kind} document to {args.output}")


def cmd_enumerate_rb(args, rep):
    from .rota_baxter import check_rb, enumerate_group_rb, linearize_group_rb, rb_search_size
    from .hopf import group_algebra
    G, gradings = _payload(args.group, "group").payload
    if args.deg not in gradings:
        raise InputError(f"no grading {args.deg!r}; available: {', '.join(gradings)}")
    gr = gradings[args.deg]
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    results = enumerate_group_rb(gr, bound=args.bound, workers=workers)
    rep.data["search_size"] = rb_search_size(gr)
    rep.data["count"] = len(results)
    if args.oracle:
        naive = enumerate_group_rb(gr, bound=args.bound, oracle=True)
        rep.data["oracle_count"] = len(naive)
        from .report import CheckReport
        r = CheckReport()
        r.touch("oracle_agrees", "pruned search == naive search")
        if naive != results:
            r.fail("oracle_agrees")
        rep.add("oracle", r)
    if args.verify:
        H = group_algebra(gr)
        from .report import CheckReport
        r = CheckReport()
        r.touch("linearized_check_rb")
        for f in results:
            if not check_rb(H, linearize_group_rb(gr, f, H=H).B).passed:
                r.fail("linearized_check_rb", basis=f)
        rep.add("verify", r)
    names = G.names
    rep.messages.append(f"{len(results)} group-like Rota-Baxter operators")
    for f in results:
        rep.messages.append("  " + " ".join(f"{names[g]}->{names[f[g]]}" for g in range(G.size)))
    if args.output:
        body = {"format_version": io.FORMAT_VERSION, "kind": "rb_enumeration", "grading": args.deg,
                "elements": list(names), "count": len(results), "maps": [list(f) for f in results]}
        with open(args.output, "w") as fh:
            fh.write(json.dumps(body, sort_keys=True, indent=1) + "\n")


def cmd_ybe(args, rep):
    from .brace import BraidFamily, braid_intertwiner_check, braiding_c, check_braid_equation, sigma
    B = _payload(args.file, "brace").payload
    fams = [("c", braiding_c(B)), ("sigma", sigma(B))]
    if args.perturb:
        name, fam = fams[0]
        a = B.space.grades()[0]
        M = fam.matrix(a, a)
        fams[0] = (name, fam.with_entry(a, a, 0, 0, B.field.add(M[0, 0], 1)))
    for name, fam in fams:
        assert isinstance(fam, BraidFamily)
        rep.add(f"braid_{name}", check_braid_equation(fam, B.dot))
    r, found = braid_intertwiner_check(B, args.n)
    rep.data["orientations"] = {str(k): v for k, v in found.items()}
    rep.messages.append(f"intertwiner orientations for n={args.n}: {found}")
    rep.add("intertwiner", r)


# argument parsing --------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="hopfpi", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="structured report on stdout")
    sp = p.add_subparsers(dest="command", required=True)
    v = sp.add_parser("validate", help="run the checker suite for a document")
    v.add_argument("file")
    c = sp.add_parser("construct", help="build a structure and write its document")
    csp = c.add_subparsers(dest="sub", required=True)
    for sub, inputs in CONSTRUCT_INPUTS.items():
        s = csp.add_parser(sub)
        for flag, help_ in inputs:
            s.add_argument(flag, required=True, help=help_)
        if sub == "group-algebra":
            s.add_argument("--field", default="QQ", help="QQ or GF(p)")
        if sub in ("aut-brace", "aut-rb"):
            s.add_argument("--auto", action="append", required=True,
                           help="NAME=ROWS, rows ';'-separated and entries ','-separated; repeat per element")
        if sub == "twist-rb":
            s.add_argument("--phi", action="append", required=True, help="GRADE=ROWS, one per grade")
        s.add_argument("-o", "--output", required=True, help="output file, '-' for stdout")
    e = sp.add_parser("enumerate-rb", help="brute-force group-like Rota-Baxter operators")
    e.add_argument("--group", required=True)
    e.add_argument("--deg", default="trivial")
    e.add_argument("--bound", type=int, default=10 ** 8)
    e.add_argument("--oracle", action="store_true", help="also run the naive search and compare")
    e.add_argument("--verify", action="store_true", help="run check_rb on every result")
    e.add_argument("-o", "--output")
    y = sp.add_parser("ybe", help="braid equation for c and sigma of a brace")
    y.add_argument("file")
    y.add_argument("--n", type=int, default=2, choices=(2, 3))
    y.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    return p


COMMANDS = {"validate": cmd_validate, "construct": cmd_construct, "enumerate-rb": cmd_enumerate_rb,
            "ybe": cmd_ybe}


def run(argv):
    """Returns ``(exit status, Report, parsed args or None)``; never raises for library errors.

    The report is None only after ``--help``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if not exc.code:
            return 0, None, None  # --help already printed
        rep = Report(argv)
        rep.fail(2, "bad arguments")
        return rep.status, rep, None
    rep = Report(argv)
    try:
        COMMANDS[args.command](args, rep)
    except AxiomError as exc:
        # input that parses but fails an axiom is a mathematical failure
        if exc.report is not None:
            rep.add("gate", exc.report)
        rep.fail(1, str(exc))
    except InputError as exc:
        rep.fail(2, str(exc))
    except VerificationError as exc:
        if exc.report is not None:
            rep.add("gate", exc.report)
        rep.fail(1, str(exc))
    except PreconditionError as exc:
        rep.fail(1, str(exc))
    return rep.status, rep, args


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    status, rep, args = run(argv)
    if rep is None:
        return status
    if args is not None and args.json:
        print(json.dumps(rep.to_dict(), indent=1, sort_keys=True))
    elif args is not None and getattr(args, "output", None) == "-":
        print(rep.render(), file=sys.stderr)
    else:
        print(rep.render())
    return status


if __name__ == "__main__":
    sys.exit(main())
