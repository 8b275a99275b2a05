"""Command line front end: JSON job in, canonical JSON out.

    topcoh <command> --job <file|-> [--seed N] [--out <file>]

Exit codes: 0 success, 1 other input error, 2 parse error,
3 hypothesis not met (H^d_a(M) = 0), 4 theorem-violation diagnostic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Optional

from . import cd
from .errors import HypothesisNotMet, ParseError, TheoremViolation, TopcohError
from .groebner import Ideal, krull_dim
from .hochster import stanley_reisner, top_local_cohomology_ranks
from .parser import identifiers, parse_ideal
from .primdec import ideal_key, minimal_primes
from .ring import GREVLEX, LEX, Ring, format_polynomial
from .verify import VerifyConfig, format_report, verify

COMMANDS = ("gb", "dim", "primdec", "att-top", "ann-top", "filtration", "hochster", "verify")
EXIT_CODES = {ParseError: 2, HypothesisNotMet: 3, TheoremViolation: 4}


@dataclass
class JobDescription:
    command: str
    ring: Ring
    ideal: Optional[Ideal] = None
    a: Optional[Ideal] = None
    decomposition: Optional[list] = None  # [(component, prime)] supplied by the user
    cd_table: Optional[list] = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: dict, command: Optional[str] = None) -> "JobDescription":
        command = command or data.get("command")
        if command not in COMMANDS:
            raise ParseError(f"unknown command {command!r}")
        texts = list(data.get("ideal", [])) + list(data.get("a", []))
        for pair in data.get("decomposition") or []:
            if not isinstance(pair, dict) or "component" not in pair or "prime" not in pair:
                raise ParseError("decomposition entries need 'component' and 'prime'")
            texts += list(pair["component"]) + list(pair["prime"])
        ring_spec = data.get("ring") or {}
        variables = ring_spec.get("variables") or identifiers(texts)
        if not variables:
            raise ParseError("cannot determine the ring: no variables given or used")
        try:
            ring = Ring(tuple(variables), int(ring_spec.get("characteristic", 0)))
        except TopcohError as exc:
            raise ParseError(str(exc)) from None
        ideal = parse_ideal(data["ideal"], ring) if "ideal" in data else None
        a = parse_ideal(data["a"], ring) if "a" in data else None
        decomposition = None
        if data.get("decomposition") is not None:
            decomposition = [
                (parse_ideal(p["component"], ring), parse_ideal(p["prime"], ring))
                for p in data["decomposition"]
            ]
        return cls(
            command=command,
            ring=ring,
            ideal=ideal,
            a=a,
            decomposition=decomposition,
            cd_table=data.get("cd_table"),
            options=dict(data.get("options") or {}),
        )


# -- serialization ---------------------------------------------------------

def ideal_strings(I: Ideal) -> list:
    return [format_polynomial(g) for g in I.gb()]


def prime_list(primes) -> list:
    return [ideal_strings(p) for p in sorted(primes, key=ideal_key)]


def _need(job: JobDescription, *names):
    for name in names:
        if getattr(job, name) is None:
            raise ParseError(f"command {job.command!r} needs {name!r}")


def _module(job: JobDescription):
    _need(job, "ideal")
    M = cd.CyclicModule(job.ideal)
    dec = cd.decompose(job.ideal, job.decomposition)
    return M, dec


def _a(job: JobDescription) -> Ideal:
    return job.a if job.a is not None else Ideal.maximal(job.ring)


def cmd_gb(job):
    _need(job, "ideal")
    order = {"grevlex": GREVLEX, "lex": LEX}.get(job.options.get("order", "grevlex"))
    if order is None:
        raise ParseError(f"unknown order {job.options.get('order')!r}")
    return {
        "order": order.kind,
        "gb": [format_polynomial(g, order) for g in job.ideal.gb(order)],
    }


def cmd_dim(job):
    _need(job, "ideal")
    return {"dim": krull_dim(job.ideal)}


def cmd_primdec(job):
    M, dec = _module(job)
    comps = sorted(dec.components, key=lambda c: (ideal_key(c.prime), ideal_key(c.component)))
    out = {
        "components": [
            {"component": ideal_strings(c.component), "prime": ideal_strings(c.prime), "dim": krull_dim(c.prime)}
            for c in comps
        ],
        "associated_primes": prime_list(dec.primes()),
    }
    if job.ideal.is_zero() or job.ideal.is_monomial():
        out["minimal_primes"] = prime_list(minimal_primes(job.ideal))
    return out


def cmd_att_top(job):
    M, dec = _module(job)
    attached = cd.attached_top(M, _a(job), dec)
    return {"d": M.d, "nonvanishing": bool(attached), "attached": prime_list(attached)}


def cmd_ann_top(job):
    M, dec = _module(job)
    a = _a(job)
    report = cd.ann_top(M, a, dec)
    if not report.nonvanishing:
        raise HypothesisNotMet(f"H^{M.d}_a(R/I) = 0, so there is no annihilator to report")
    return {
        "d": report.d,
        "nonvanishing": True,
        "attached": prime_list(report.attached),
        "t_ideal": ideal_strings(report.t_ideal),
        "annihilator": ideal_strings(report.annihilator),
        "radical_ann": ideal_strings(report.radical_ann),
        "supp_bound": prime_list(report.supp_bound),
    }


def cmd_filtration(job):
    M, dec = _module(job)
    a = _a(job)
    if job.cd_table is not None:
        table = cd.cd_table(M, a, dec, oracle="user", values=job.cd_table)
    else:
        table = cd.cd_table(M, a, dec, oracle="dim")
    F = cd.filtration(M, a, table)
    ass = cd.ass_filtration_report(F)
    levels = []
    for i, K in enumerate(F.levels):
        levels.append(
            {
                "i": i,
                "ideal": ideal_strings(K),
                "saturation": ideal_strings(F.saturation_forms[i]),
                "intersection": ideal_strings(F.intersection_forms[i]),
                "a_product": ideal_strings(F.a_products[i]),
                "ass_sub": prime_list(ass[i].ass_sub),
                "ass_quotient": prime_list(ass[i].ass_quotient),
                "ass_layer": prime_list(ass[i].ass_layer),
            }
        )
    return {
        "c": F.c,
        "d": M.d,
        "cd_table": [
            {"prime": ideal_strings(c.prime), "component": ideal_strings(c.component), "cd": v}
            for c, v in zip(dec.components, table.values)
        ],
        "levels": levels,
    }


def cmd_hochster(job):
    _need(job, "ideal")
    n = job.ring.n
    bound = job.options.get("degree_box")
    degrees = None
    if bound is not None:
        degrees = [tuple(-e for e in t) for t in cartesian(range(int(bound) + 1), repeat=n)]
    result = top_local_cohomology_ranks(job.ideal, degrees)
    complex_ = stanley_reisner(job.ideal)
    facets = sorted(sorted(f, key=job.ring.variables.index) for f in complex_.facets)
    return {
        "d": result.d,
        "nonvanishing": result.nonvanishing,
        "facets": facets,
        "ranks": [{"degree": list(deg), "rank": r} for deg, r in sorted(result.ranks.items(), reverse=True)],
    }


HANDLERS = {
    "gb": cmd_gb,
    "dim": cmd_dim,
    "primdec": cmd_primdec,
    "att-top": cmd_att_top,
    "ann-top": cmd_ann_top,
    "filtration": cmd_filtration,
    "hochster": cmd_hochster,
}


def run(job: JobDescription) -> dict:
    """Execute a parsed job and return its JSON-ready result."""
    return {"command": job.command, **HANDLERS[job.command](job)}


def run_document(data, command: Optional[str] = None, seed: Optional[int] = None):
    """(exit code, JSON document) for a raw job; errors become structured objects."""
    try:
        if not isinstance(data, dict):
            raise ParseError("a job must be a JSON object")
        if (command or data.get("command")) == "verify":
            options = dict(data.get("options") or {})
            if seed is not None:
                options["seed"] = seed
            try:
                cfg = VerifyConfig.from_dict(options)
            except (TypeError, ValueError) as exc:
                raise ParseError(str(exc)) from None
            report = verify(cfg)
            report["summary"] = format_report(report).splitlines()
            return (0 if report["all_passed"] else 4), report
        job = JobDescription.from_dict(data, command)
        return 0, run(job)
    except TopcohError as exc:
        error = {"kind": exc.kind, "message": str(exc)}
        if isinstance(exc, ParseError) and exc.position is not None:
            error["position"] = exc.position
        code = next((c for cls, c in EXIT_CODES.items() if isinstance(exc, cls)), 1)
        return code, {"error": error}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="topcoh", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--job", help="job JSON file, or - for standard input")
    parser.add_argument("--seed", type=int, help="seed for verify")
    parser.add_argument("--out", help="write the JSON result here instead of standard output")
    args = parser.parse_args(argv)

    if args.job is None and args.command != "verify":
        parser.error("--job is required")
    data = {}
    if args.job is not None:
        try:
            if args.job == "-":
                data = json.load(sys.stdin)
            else:
                with open(args.job, encoding="utf-8") as fh:
                    data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            code, doc = 2, {"error": {"kind": "parse-error", "message": str(exc)}}
            _emit(doc, args.out)
            return code
    code, doc = run_document(data, args.command, args.seed)
    _emit(doc, args.out)
    return code


def _emit(doc, out):
    text = dumps(doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
