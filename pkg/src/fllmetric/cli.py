"""Command-line interface: ``fll <command> ...``.

Exit status is 0 on success, 1 when a verification check finds a mismatch,
and 2 on a usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Sequence

from . import average, extremal, metric, setcodes
from .errors import DomainError, ResourceGuardError
from .sweep import SweepSummary, default_workers, sweep
from .words import Word, alternating_profile

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# options that may come from a --config file; flags given on the command line win
CONFIG_KEYS = {
    "q": int,
    "workers": int,
    "witness_cap": int,
    "guard": int,
    "format": str,
    "output": str,
    "oracle": str,
    "diameter": int,
}
BUILTIN_DEFAULTS = {
    "q": 2,
    "workers": None,
    "witness_cap": 64,
    "guard": None,
    "format": "text",
    "output": None,
    "oracle": "formula",
    "diameter": 1,
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any]
    workers: int
    output_path: Optional[str]
    output_format: str
    witness_cap: int

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("worker count must be >= 1")
        if self.output_format not in ("text", "json", "csv"):
            raise UsageError(f"unknown output format {self.output_format!r}")


def read_config(path: str) -> dict[str, Any]:
    """Parse a flat ``key = value`` file; '#' starts a comment."""
    out: dict[str, Any] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="alphabet size (default 2)")
    common.add_argument("--config", help="flat key=value file with default options")
    common.add_argument("--format", choices=["text", "json", "csv"], help="output format")
    common.add_argument("--output", "-o", help="write the report to this path")

    p = _Parser(prog="fll", description="Fixed-length Levenshtein metric toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dist", parents=[common], help="FLL, Levenshtein and Hamming distances")
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("ball", parents=[common], help="FLL ball around a word")
    s.add_argument("x")
    s.add_argument("t", type=int)
    s.add_argument("--members", action="store_true", help="list every ball member")

    s = sub.add_parser("sphere", parents=[common], help="deletion or insertion sphere")
    s.add_argument("x")
    s.add_argument("t", type=int)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--del", dest="kind", action="store_const", const="del")
    g.add_argument("--ins", dest="kind", action="store_const", const="ins")
    s.add_argument("--members", action="store_true")

    s = sub.add_parser("formula", parents=[common], help="radius-1 ball size from runs and segments")
    s.add_argument("x")

    s = sub.add_parser("extremal", parents=[common], help="smallest or largest ball size")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--min", dest="kind", action="store_const", const="min")
    g.add_argument("--max", dest="kind", action="store_const", const="max")
    s.add_argument("n", type=int)
    s.add_argument("qq", metavar="q", type=int)
    s.add_argument("t", type=int, nargs="?", default=1)

    s = sub.add_parser("avg", parents=[common], help="average radius-1 ball size")
    s.add_argument("n", type=int)
    s.add_argument("qq", metavar="q", type=int)

    s = sub.add_parser("sweep", parents=[common], help="exhaustive sweep over Z_q^n")
    s.add_argument("n", type=int)
    s.add_argument("qq", metavar="q", type=int)
    s.add_argument("t", type=int)
    s.add_argument("--oracle", choices=["formula", "enumeration", "both"])
    s.add_argument("--workers", type=int)
    s.add_argument("--witness-cap", dest="witness_cap", type=int)
    s.add_argument("--guard", type=int, help="largest word space to sweep")

    s = sub.add_parser("anticode", parents=[common], help="maximal anticodes of small diameter")
    s.add_argument("n", type=int)
    s.add_argument("qq", metavar="q", type=int)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--search", dest="kind", action="store_const", const="search")
    g.add_argument("--construct", dest="kind", action="store_const", const="construct")
    s.add_argument("--diameter", type=int)

    s = sub.add_parser("code-check", parents=[common], help="check equivalent correction criteria")
    s.add_argument("file")
    s.add_argument("t1", type=int)
    s.add_argument("t2", type=int)
    return p


def _resolve(ns: argparse.Namespace) -> dict[str, Any]:
    opts = dict(BUILTIN_DEFAULTS)
    if getattr(ns, "config", None):
        opts.update(read_config(ns.config))
    for key in CONFIG_KEYS:
        val = getattr(ns, key, None)
        if val is not None:
            opts[key] = val
    return opts


# --- command handlers: each returns (payload dict, text lines, exit code) ----

def _word(text: str, q: int) -> Word:
    return Word.parse(text, q)


def cmd_dist(ns, o):
    x, y = _word(ns.x, o["q"]), _word(ns.y, o["q"])
    d = {"fll": metric.fll_distance(x, y), "levenshtein": metric.levenshtein_distance(x, y),
         "hamming": metric.hamming_distance(x, y), "lcs": metric.lcs_length(x, y)}
    return d, [f"{k}={v}" for k, v in d.items()], EXIT_OK


def cmd_ball(ns, o):
    w = _word(ns.x, o["q"])
    rep = metric.fll_ball(w, ns.t, "compose", with_members=ns.members)
    ok = rep.formula_size is None or rep.formula_size == rep.enumerated_size
    d = {"center": str(w), "radius": ns.t, "size": rep.enumerated_size, "formula": rep.formula_size}
    lines = [f"size={rep.enumerated_size}"]
    if rep.formula_size is not None:
        lines.append(f"formula={rep.formula_size} ({'agrees' if ok else 'MISMATCH'})")
    if rep.members is not None:
        d["members"] = [str(m) for m in rep.members]
        lines += d["members"]
    return d, lines, EXIT_OK if ok else EXIT_MISMATCH


def cmd_sphere(ns, o):
    w = _word(ns.x, o["q"])
    if ns.kind == "del":
        sph = metric.deletion_sphere(w, ns.t)
        d = {"kind": "deletion", "size": len(sph), "bound_max": metric.max_deletion_sphere_size(len(w), w.q, ns.t)}
        ok = len(sph) <= d["bound_max"]
    else:
        sph = metric.insertion_sphere(w, ns.t)
        d = {"kind": "insertion", "size": len(sph), "formula": metric.insertion_sphere_size(len(w), w.q, ns.t)}
        ok = len(sph) == d["formula"]
    lines = [f"{k}={v}" for k, v in d.items()]
    if ns.members:
        d["members"] = [str(m) for m in sorted(sph)]
        lines += d["members"]
    return d, lines, EXIT_OK if ok else EXIT_MISMATCH


def cmd_formula(ns, o):
    w = _word(ns.x, o["q"])
    prof = alternating_profile(w)
    n, q = len(w), w.q
    run_term = prof.runs * (n * (q - 1) - 1)
    penalty = sum((s - 1) * (s - 2) for s in prof.segment_lengths) // 2
    size = extremal.l1_size_formula(w)
    enumerated = metric.fll_ball(w, 1, "kernel").enumerated_size if n else None
    d = {"word": str(w), "q": q, "runs": prof.runs, "profile": list(prof.segment_lengths),
         "segments": prof.A, "run_term": run_term, "constant": 2, "segment_penalty": penalty,
         "size": size, "enumerated": enumerated}
    lines = [
        f"rho={prof.runs}",
        f"profile=({','.join(map(str, prof.segment_lengths))})",
        f"terms: {prof.runs}*({n}*{q - 1}-1) + 2 - {penalty} = {size}",
        f"size={size}",
        f"enumerated={enumerated}",
    ]
    return d, lines, EXIT_OK if size == enumerated else EXIT_MISMATCH


def cmd_extremal(ns, o):
    n, q, t = ns.n, ns.qq, ns.t
    if ns.kind == "min":
        r = extremal.min_ball_size(n, q, t)
    else:
        if t != 1:
            raise UsageError("--max is defined for radius 1 only")
        r = extremal.max_ball_binary(n) if q == 2 else extremal.max_ball_nonbinary(n, q)
    d = {"n": n, "q": q, "t": t, "kind": ns.kind, "size": r.size}
    lines = [f"{ns.kind} |L_{t}| over Z_{q}^{n} = {r.size}"]
    if r.alpha_set:
        d["alpha"] = sorted(r.alpha_set)
        d["k"] = {str(a): k for a, k in sorted(r.k.items())}
        lines.append(f"alpha={d['alpha']} k={d['k']}")
    wit = [str(w) for w in r.iter_witnesses()][: o["witness_cap"]]
    d["witnesses"] = wit
    lines.append("witnesses: " + " ".join(wit))
    return d, lines, EXIT_OK


def cmd_avg(ns, o):
    n, q = ns.n, ns.qq
    st = average.expected_stats(n, q)
    closed, exact = average.average_ball_size(n, q)
    ok = exact == st.avg_ball_exact
    d = {"n": n, "q": q, "exact": str(exact), "decomposed": str(st.avg_ball_exact),
         "closed_form": str(closed), "closed_minus_exact": str(closed - exact)}
    lines = [f"exact={exact}", f"decomposed={st.avg_ball_exact}", f"closed_form={closed}",
             f"closed-exact={closed - exact}"]
    if not ok:
        lines.append("MISMATCH between exact paths")
    return d, lines, EXIT_OK if ok else EXIT_MISMATCH


def cmd_sweep(ns, o):
    cfg = RunConfig("sweep", {"n": ns.n, "q": ns.qq, "t": ns.t},
                    o["workers"] or default_workers(), o["output"], o["format"], o["witness_cap"])
    s = sweep(ns.n, ns.qq, ns.t, o["oracle"], cfg.workers, cfg.witness_cap, o["guard"])
    lines = [
        f"count={s.count} min={s.min_size} max={s.max_size} sum={s.sum_size} avg={s.avg_size}",
        f"argmin ({s.argmin_count}): " + " ".join(s.argmin),
        f"argmax ({s.argmax_count}): " + " ".join(s.argmax),
        f"mismatches={len(s.mismatches)}",
    ]
    lines += [f"  {w}: formula={f} enumerated={e}" for w, f, e in s.mismatches]
    return s, lines, EXIT_OK if s.passed else EXIT_MISMATCH


def cmd_anticode(ns, o):
    n, q, D = ns.n, ns.qq, o["diameter"]
    if ns.kind == "construct":
        if q != 2 or D != 1:
            raise UsageError("--construct builds binary diameter-1 anticodes only")
        sets = setcodes.extremal_anticodes(n)
        d = {"n": n, "q": q, "sets": [[str(w) for w in s] for s in sets],
             "sizes": [len(s) for s in sets], "maximal": True}
        lines = [f"size {len(s)}: " + " ".join(str(w) for w in s) for s in sets]
        return d, lines, EXIT_OK
    r = setcodes.search_maximal_anticodes(n, q, D)
    bad = [s for s in r.all_maximal if not setcodes.is_maximal_anticode(s, D)]
    d = {"n": n, "q": q, "diameter": D, "total_maximal": r.total_maximal,
         "max_size": r.max_size, "min_size": r.min_size,
         "anticodes": [[str(w) for w in s] for s in r.all_maximal]}
    lines = [f"{r.total_maximal} maximal anticodes, max {r.max_size}, min {r.min_size}"]
    lines += ["  {" + ", ".join(str(w) for w in s) + "}" for s in r.all_maximal]
    if bad:
        lines.append(f"{len(bad)} cliques failed the direct maximality check")
    return d, lines, EXIT_MISMATCH if bad else EXIT_OK


def cmd_code_check(ns, o):
    try:
        text = Path(ns.file).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {ns.file}: {exc}") from None
    code = setcodes.WordSet.parse(text)
    rep = setcodes.equivalence_harness(code, ns.t1, ns.t2)
    d = {"size": len(code), "t1": ns.t1, "t2": ns.t2, "statements": rep.statements,
         "agree": rep.agree, "min_distance": setcodes.min_distance(code)}
    lines = [f"{k}: {v}" for k, v in rep.statements.items()]
    lines.append("all statements agree" if rep.agree else "statements DISAGREE")
    return d, lines, EXIT_OK if rep.agree else EXIT_MISMATCH


HANDLERS = {
    "dist": cmd_dist,
    "ball": cmd_ball,
    "sphere": cmd_sphere,
    "formula": cmd_formula,
    "extremal": cmd_extremal,
    "avg": cmd_avg,
    "sweep": cmd_sweep,
    "anticode": cmd_anticode,
    "code-check": cmd_code_check,
}


def _render(payload, lines: list[str], fmt: str) -> str:
    if isinstance(payload, SweepSummary):
        if fmt == "json":
            return payload.to_json() + "\n"
        if fmt == "csv":
            return payload.to_csv()
    elif fmt == "json":
        return json.dumps(payload, sort_keys=True) + "\n"
    elif fmt == "csv":
        raise UsageError("csv output is only available for sweep")
    return "\n".join(lines) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        opts = _resolve(ns)
        payload, lines, code = HANDLERS[ns.command](ns, opts)
        out = _render(payload, lines, opts["format"])
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ResourceGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if opts["output"]:
        Path(opts["output"]).write_text(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
