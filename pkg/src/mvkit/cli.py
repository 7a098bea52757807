"""Command-line front end.

Usage::

    mvkit <command> [args] --file SPEC [--json | --pretty] [--seed N]
          [--samples N] [--cap N] [--surrogate-depth K]

Exit status is 0 on success, 1 when a verification fails (the JSON report
then carries the witness) and 2 for usage, parse and precondition errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import dsl, represent, spectra
from .errors import DSLError, MVKitError, VerificationError
from .groups import OrderedGroup, fmt_number, fmt_value
from .mvcore import ExplicitIdeal, MVAlgebra, Sampled, check_axioms, eval_term, term_vars

PREVIEW = 8


class UsageError(Exception):
    pass


@dataclass
class Context:
    env: dsl.Environment | None
    seed: int
    samples: int
    cap: int
    depth: int

    def lookup(self, name, kinds=("algebra",)):
        if self.env is None:
            raise UsageError("this command needs --file")
        for kind in kinds:
            table = {"algebra": self.env.algebras, "group": self.env.groups}[kind]
            if name in table:
                return table[name]
        raise UsageError(f"no {' or '.join(kinds)} named {name!r} in the spec file")

    def algebra(self, name) -> MVAlgebra:
        return self.lookup(name, ("algebra",))

    def group(self, name) -> OrderedGroup:
        return self.lookup(name, ("group",))

    def element(self, A, text):
        elements = self.env.elements if self.env else {}
        try:
            lit = dsl.parse_literal(text, elements)
        except DSLError as exc:
            raise UsageError(f"bad element {text!r}: {exc}") from exc
        return A.coerce(dsl.literal_value(lit, elements))

    def verification(self, strategy, **extra):
        out = {"strategy": strategy, "samples": self.samples, "seed": self.seed, "cap": self.cap}
        out.update(extra)
        return out


# ---------------------------------------------------------------------------
# JSON helpers

def jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return "inf" if math.isinf(v) else fmt_number(Fraction(v))
    if isinstance(v, Fraction):
        return fmt_number(v)
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    return repr(v)


def fmt_ideal(A, I):
    if isinstance(I, ExplicitIdeal):
        return "{" + ", ".join(A.fmt(e) for e in sorted(I.elements)) + "}"
    return repr(I)


def fmt_order(n):
    return "inf" if n == spectra.INFINITE else int(n)


def _preview(A, ctx):
    if A.is_finite:
        return list(A.elements())[:PREVIEW]
    xs, _ = represent._test_elements(A, 4 * PREVIEW, ctx.seed)
    return list(dict.fromkeys(xs))[:PREVIEW]


def _mode(A):
    return "exhaustive" if A.is_finite else "sampled"


# ---------------------------------------------------------------------------
# commands

def cmd_classify(ctx, name):
    A = ctx.algebra(name)
    c = spectra.classify(A, ctx.cap, ctx.samples, ctx.seed)
    results = {
        "algebra": repr(A),
        "is_chain": c.is_chain, "is_simple": c.is_simple, "is_semisimple": c.is_semisimple,
        "is_local": c.is_local, "is_perfect": c.is_perfect,
        "maximal_ideal_count": c.maximal_ideal_count,
        "radical": fmt_ideal(A, c.radical),
        "maximal_ideals": [fmt_ideal(A, M) for M in c.maximal_ideals],
        "ord_criterion": c.ord_criterion,
        "witnesses": c.witnesses,
    }
    return results, ctx.verification(c.mode, checked=c.checked)


def cmd_ideals(ctx, name):
    A = ctx.algebra(name)
    rows = []
    for I in spectra.ideals(A, ctx.cap):
        p = spectra.ideal_predicates(A, I, ctx.cap, ctx.samples, ctx.seed)
        rows.append({"ideal": fmt_ideal(A, I), "prime": p.is_prime, "maximal": p.is_maximal,
                     "proper": spectra.is_proper(A, I)})
    results = {"algebra": repr(A), "count": len(rows),
               "maximal_count": sum(r["maximal"] for r in rows),
               "prime_count": sum(r["prime"] for r in rows), "ideals": rows}
    return results, ctx.verification("exhaustive" if A.is_finite else "symbolic")


def cmd_spec(ctx, name):
    A = ctx.algebra(name)
    primes = spectra.spec(A, ctx.cap)
    return ({"algebra": repr(A), "count": len(primes),
             "primes": [fmt_ideal(A, P) for P in primes]},
            ctx.verification("exhaustive" if A.is_finite else "symbolic"))


def cmd_radical(ctx, name):
    A = ctx.algebra(name)
    R = spectra.radical(A, ctx.cap)
    results = {"algebra": repr(A), "radical": fmt_ideal(A, R),
               "trivial": spectra.is_zero_ideal(A, R)}
    if A.is_finite:
        results["size"] = len(spectra.to_explicit(A, R))
    return results, ctx.verification("exhaustive" if A.is_finite else "symbolic")


def cmd_quotient(ctx, name, ideal_text):
    A = ctx.algebra(name)
    if ctx.env is not None and ideal_text in ctx.env.ideals:
        node = dsl.Ref(ideal_text)
    else:
        p = dsl._Parser(ideal_text)
        p.scope = {}
        node = p.ideal()
        if p.tok.kind != "eof":
            p.fail("end of ideal")
    I = dsl.resolve_ideal(node, A, ctx.env)
    Q, proj = spectra.quotient(A, I, ctx.cap)
    images = [{"x": A.fmt(x), "image": Q.fmt(proj(x))} for x in _preview(A, ctx)]
    results = {"algebra": repr(A), "ideal": fmt_ideal(A, I), "quotient": repr(Q),
               "is_chain": spectra.classify(Q, ctx.cap, ctx.samples, ctx.seed).is_chain,
               "projection": images}
    if Q.is_finite:
        results["size"] = Q.size
    return results, ctx.verification(_mode(A))


def cmd_ord(ctx, name, elem):
    A = ctx.algebra(name)
    x = ctx.element(A, elem)
    return ({"algebra": repr(A), "x": A.fmt(x), "ord": fmt_order(spectra.order(A, x)),
             "ord_neg": fmt_order(spectra.order(A, A.neg(x))),
             "infinitesimal": spectra.is_infinitesimal(A, x)},
            ctx.verification("closed_form"))


def cmd_eval(ctx, name, term_text, *bindings):
    A = ctx.algebra(name)
    terms = ctx.env.terms
    t = terms[term_text] if term_text in terms else dsl.parse_term(term_text, terms)
    env = {}
    for b in bindings:
        var, sep, lit = b.partition("=")
        if not sep:
            raise UsageError(f"binding {b!r} is not of the form var=value")
        env[var.strip()] = ctx.element(A, lit.strip())
    missing = sorted(term_vars(t) - set(env))
    if missing:
        raise UsageError("unbound variables: " + ", ".join(missing))
    value = eval_term(A, t, env)
    return ({"algebra": repr(A), "term": dsl.format_term(t),
             "bindings": {k: A.fmt(v) for k, v in sorted(env.items())},
             "value": A.fmt(value)},
            ctx.verification("exact"))


def cmd_axioms(ctx, name):
    A = ctx.algebra(name)
    strategy = None if A.is_finite else Sampled(ctx.samples, ctx.seed)
    rep = check_axioms(A, strategy)
    rows = [{"axiom": r.axiom, "statement": r.statement, "passed": r.passed,
             "checked": r.checked, "witness": r.witness} for r in rep.results]
    results = {"algebra": rep.algebra, "passed": rep.passed, "axioms": rows}
    if not rep.passed:
        raise VerificationError("axiom check failed", results)
    return results, ctx.verification(str(rep.strategy))


def _embedding_report(ctx, emb, A):
    images = [{"x": A.fmt(x), "image": emb.target.fmt(emb(x))} for x in _preview(A, ctx)]
    results = {"source": repr(emb.source), "target": repr(emb.target),
               "index": [fmt_ideal(A, P) for P in emb.index], "images": images}
    ver = ctx.verification(emb.hom_checked.strategy,
                           homomorphism_checked=emb.hom_checked.checked,
                           injectivity_checked=emb.injectivity_checked.checked)
    return results, ver


def cmd_embed_chang(ctx, name):
    A = ctx.algebra(name)
    emb = represent.chang_embedding(A, ctx.cap, ctx.samples, ctx.seed)
    results, ver = _embedding_report(ctx, emb, A)
    results["coordinates_are_chains"] = True
    return results, ver


def cmd_dfunctor(ctx, name):
    A = ctx.algebra(name)
    res = represent.d_functor(A, ctx.samples, ctx.seed)
    D = res.group
    rows = []
    for x in _preview(A, ctx):
        if spectra.in_radical(A, x):
            d = D.canon(x, A.zero())
            row = {"x": A.fmt(x), "class": D.fmt(d)}
            if res.iso is not None:
                row["tail"] = res.tail_group.fmt(res.iso(d))
            rows.append(row)
    results = {"algebra": repr(A), "group": repr(D),
               "tail_group": repr(res.tail_group) if res.tail_group is not None else None,
               "radical_classes": rows}
    return results, ctx.verification("sampled", checked=res.checked)


def cmd_gfunctor(ctx, name):
    G = ctx.group(name)
    B = represent.g_functor(G)
    c = spectra.classify(B, ctx.cap, ctx.samples, ctx.seed)
    return ({"group": repr(G), "algebra": repr(B), "is_perfect": c.is_perfect,
             "is_local": c.is_local},
            ctx.verification(c.mode, checked=c.checked))


def cmd_roundtrip(ctx, name):
    X = ctx.lookup(name, ("group", "algebra"))
    rep = represent.roundtrip_check(X, ctx.samples, ctx.seed)
    return ({"kind": rep.kind, "source": rep.source, "via": rep.via, "passed": True},
            ctx.verification("sampled", checked=rep.checked))


def cmd_qc_member(ctx, name, func):
    U = ctx.algebra(name)
    elements = ctx.env.elements if ctx.env else {}
    lit = dsl.parse_literal(func, elements)
    value = dsl.literal_value(lit, elements)
    if not isinstance(value, tuple) or not value:
        raise UsageError("expected a function literal [v1, ..., vk]")
    f = tuple(U.coerce(v) for v in value)
    w = represent.is_quasi_constant(U, f)
    results = {"algebra": repr(U), "f": "[" + ", ".join(U.fmt(v) for v in f) + "]",
               "member": w.member, "anchor": U.fmt(w.anchor), "anchor_class": fmt_value(w.anchor_class),
               "evidence": [{"site": i, "dist": U.fmt(d), "in_radical": ok}
                            for i, d, ok in w.evidence],
               "failing_site": w.failing_site}
    return results, ctx.verification("exact")


def _rational(text):
    try:
        v = dsl.literal_value(dsl.parse_literal(text))
    except DSLError as exc:
        raise UsageError(f"bad rational {text!r}: {exc}") from exc
    if not isinstance(v, Fraction):
        raise UsageError(f"expected a rational, got {text!r}")
    return v


def cmd_separate(ctx, xs, ys):
    x, y = _rational(xs), _rational(ys)
    stages = represent.separating_stages(x, y)
    t = represent.separating_term(x, y)
    from .mvcore import UnitIntervalQ
    U = UnitIntervalQ()
    fx, fy = eval_term(U, t, {"x": x}), eval_term(U, t, {"x": y})
    return ({"x": fmt_number(x), "y": fmt_number(y), "stages": stages,
             "stage_count": len(stages), "stage_bound": represent.stage_bound(x, y),
             "term": dsl.format_term(t),
             "evaluations": f"phi({fmt_number(x)})={fmt_number(fx)}, "
                            f"phi({fmt_number(y)})={fmt_number(fy)}"},
            ctx.verification("exact"))


def cmd_local_rep(ctx, name):
    A = ctx.algebra(name)
    emb = represent.local_representation(A, ctx.depth, ctx.samples, ctx.seed, ctx.cap)
    results, ver = _embedding_report(ctx, emb, A)
    results["quasi_constant_checked"] = emb.extra["anchor_checked"]
    return results, ver, emb.notes


def cmd_perfect_rep(ctx, name):
    A = ctx.algebra(name)
    emb = represent.perfect_representation(A, ctx.depth, ctx.samples, ctx.seed, ctx.cap)
    results, ver = _embedding_report(ctx, emb, A)
    return results, ver, emb.notes


def cmd_group_rep(ctx, name, unit):
    G = ctx.group(name)
    elements = ctx.env.elements if ctx.env else {}
    u = G.coerce(dsl.literal_value(dsl.parse_literal(unit, elements), elements))
    emb = represent.group_qc_representation(G, u, ctx.depth, ctx.samples, ctx.seed, ctx.cap)
    target, tu = emb.target
    rng_items = [G.zero(), u]
    images = [{"x": G.fmt(x), "image": fmt_value(emb(x))} for x in rng_items]
    results = {"group": repr(G), "unit": G.fmt(u), "target": repr(target),
               "target_unit": fmt_value(tu), "sites": len(emb.index), "images": images}
    ver = ctx.verification("sampled", homomorphism_checked=emb.hom_checked.checked,
                           injectivity_checked=emb.injectivity_checked.checked)
    return results, ver, emb.notes


def cmd_prop_spec(ctx, name):
    A = ctx.algebra(name)
    if spectra.classify(A, ctx.cap, ctx.samples, ctx.seed).is_local:
        rep = represent.verify_prop_spec(A, ctx.samples, ctx.seed, ctx.cap)
        return ({"algebra": repr(A), "local": True, "holds": True,
                 "primes": [fmt_ideal(A, P) for P in rep.primes]},
                ctx.verification(rep.strategy, checked=rep.checked))
    cx = represent.prop_spec_counterexample(A, ctx.samples, ctx.seed, ctx.cap)
    results = {"algebra": repr(A), "local": False, "holds": False, "counterexample": None}
    if cx is not None:
        results["counterexample"] = {
            "x": A.fmt(cx.x), "P": fmt_ideal(A, cx.P), "Q": fmt_ideal(A, cx.Q),
            "r": fmt_number(cx.r), "s": fmt_number(cx.s), "term": dsl.format_term(cx.term),
            "phi_x": A.fmt(cx.phi_x), "ord_phi_x": fmt_order(cx.ord_phi_x),
            "ord_neg_phi_x": fmt_order(cx.ord_neg_phi_x)}
    return results, ctx.verification(_mode(A))


COMMANDS: dict[str, tuple[Callable, tuple, bool]] = {
    # name: (handler, argument names, needs a spec file)
    "classify": (cmd_classify, ("algebra",), True),
    "ideals": (cmd_ideals, ("algebra",), True),
    "spec": (cmd_spec, ("algebra",), True),
    "radical": (cmd_radical, ("algebra",), True),
    "quotient": (cmd_quotient, ("algebra", "ideal"), True),
    "ord": (cmd_ord, ("algebra", "element"), True),
    "eval": (cmd_eval, ("algebra", "term", "var=value..."), True),
    "axioms": (cmd_axioms, ("algebra",), True),
    "embed-chang": (cmd_embed_chang, ("algebra",), True),
    "dfunctor": (cmd_dfunctor, ("algebra",), True),
    "gfunctor": (cmd_gfunctor, ("group",), True),
    "roundtrip": (cmd_roundtrip, ("group-or-algebra",), True),
    "qc-member": (cmd_qc_member, ("algebra", "function"), True),
    "separate": (cmd_separate, ("x", "y"), False),
    "local-rep": (cmd_local_rep, ("algebra",), True),
    "perfect-rep": (cmd_perfect_rep, ("algebra",), True),
    "group-rep": (cmd_group_rep, ("group", "unit"), True),
    "prop-spec": (cmd_prop_spec, ("algebra",), True),
}


def _parser():
    p = argparse.ArgumentParser(prog="mvkit", description="MV-algebra and unital l-group toolkit")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("args", nargs="*")
    p.add_argument("--file", "-f")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false")
    out.add_argument("--pretty", dest="pretty", action="store_true")
    p.set_defaults(pretty=False)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--cap", type=int, default=spectra.DEFAULT_CAP)
    p.add_argument("--surrogate-depth", dest="depth", type=int, default=2)
    return p


def _pretty(report, indent=0) -> str:
    lines = []
    pad = "  " * indent
    for k, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_pretty(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(pad + "  - " + "  ".join(f"{a}={b}" for a, b in item.items()))
        elif isinstance(v, list):
            lines.append(f"{pad}{k}: " + ", ".join(map(str, v)))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def render(report, pretty=False) -> str:
    if pretty:
        return _pretty(report) + "\n"
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run_command(command, args, text=None, *, seed=1, samples=1000, cap=spectra.DEFAULT_CAP,
                depth=2, file=None):
    """Run one command and return ``(exit_code, report_or_None, diagnostic)``."""
    handler, names, needs_file = COMMANDS[command]
    variadic = names and names[-1].endswith("...")
    fixed = len(names) - (1 if variadic else 0)
    if len(args) < fixed or (not variadic and len(args) > fixed):
        return 2, None, f"usage: mvkit {command} {' '.join(names)}"
    if needs_file and text is None:
        return 2, None, f"mvkit {command}: --file is required"
    try:
        env = dsl.load_spec(text) if text is not None else None
    except DSLError as exc:
        return 2, None, f"{file or '<spec>'}:{exc}"
    ctx = Context(env, seed, samples, cap, depth)
    report = {"command": command, "args": list(args),
              "inputs": {"file": file, "declarations": env.spec.names() if env else []},
              "surrogate": None}
    try:
        out = handler(ctx, *args)
    except VerificationError as exc:
        report.update(results=None, verification=ctx.verification("failed"),
                      error={"message": str(exc), "witness": jsonable(exc.witness)})
        return 1, report, f"verification failed: {exc}"
    except (UsageError, MVKitError, DSLError) as exc:
        return 2, None, f"mvkit {command}: {type(exc).__name__}: {exc}"
    results, ver = out[0], out[1]
    if len(out) > 2 and out[2]:
        report["surrogate"] = {"depth": depth, "note": " ".join(out[2])}
    report["results"] = jsonable(results)
    report["verification"] = jsonable(ver)
    return 0, report, ""


def main(argv=None) -> int:
    ns = _parser().parse_args(argv)
    text = None
    if ns.file is not None:
        try:
            with open(ns.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"mvkit: cannot read {ns.file}: {exc}", file=sys.stderr)
            return 2
    code, report, diag = run_command(ns.command, ns.args, text, seed=ns.seed, samples=ns.samples,
                                     cap=ns.cap, depth=ns.depth, file=ns.file)
    if diag:
        print(diag, file=sys.stderr)
    if report is not None:
        sys.stdout.write(render(report, ns.pretty))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
