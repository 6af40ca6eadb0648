"""Command-line front end: `stringcrystal <verb> [flags]`."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .atoms import conjecture_atom
from .crystal import StringCrystal, graph_dot, graph_json
from .embed import FIRST, LAST, check_morphism, project, z_vector
from .polytope import cone_inequalities, string_polytope
from .typea import ReducedWord, lex_least_reduced_word

EXIT_OK, EXIT_FALSE, EXIT_ERROR, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 64, 70

VERBS = ("cone", "polytope", "points", "crystal-graph", "z", "embed-check",
         "project", "atom-check", "oracle-compare")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stringcrystal",
                description="String polytopes, GP-path crystals and weight-zero embeddings.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--n", type=int, help="rank parameter (sl_n)")
    p.add_argument("--word", type=_int_list,
                   help="reduced word of w_0 (default: lexicographically least)")
    p.add_argument("--lambda", dest="lam", type=_int_list, help="dominant weight")
    p.add_argument("--k", type=int, default=1, help="multiple of theta for atom-check")
    p.add_argument("--i", type=int, help="index i for atom-check (default: all)")
    p.add_argument("--j", type=int, help="index j for z / embed-check (default: all)")
    p.add_argument("--x", type=_int_list, help="point for project")
    p.add_argument("--which", choices=(FIRST, LAST), default=FIRST, help="wire to remove")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


def _word(args) -> ReducedWord:
    if args.word:
        n = args.n if args.n is not None else max(args.word) + 1
        return ReducedWord(n, args.word)
    if args.n is None:
        raise UsageError("give --n or --word")
    return ReducedWord(args.n, lex_least_reduced_word(args.n))


def _lam(args, word) -> tuple[int, ...]:
    if args.lam is None:
        raise UsageError("--lambda is required for this verb")
    if len(args.lam) != word.n - 1:
        raise UsageError(f"--lambda needs {word.n - 1} entries")
    return args.lam


def _indices(value, n):
    if value is None:
        return list(range(1, n))
    if not 1 <= value <= n - 1:
        raise UsageError(f"index {value} out of range [1, {n - 1}]")
    return [value]


def _fan_out(fn, items, jobs):
    """Ordered map, optionally across processes."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(*it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *it) for it in items]
        return [f.result() for f in futures]


def _text_rows(rows) -> str:
    return "".join(" ".join(map(str, r)) + "\n" for r in rows)


def _inequality_text(system) -> str:
    return "".join(f"{list(v)} . x <= {c}\n" for v, c in zip(system.normals, system.bounds))


def _oracle_compare(word, lam):
    c = StringCrystal(word, lam)
    table = {oracle.adapted_string(t, word): t for t in oracle.crystal_elements(lam)}
    problems = []
    if sorted(table) != list(c.points):
        problems.append({"kind": "points"})
    else:
        for x, t in table.items():
            if c.weight(x) != t.weight():
                problems.append({"kind": "weight", "x": list(x)})
            for a in range(1, word.n):
                y, u = c.f(x, a), oracle.tableau_f(t, a)
                if (y is None) != (u is None) or (u is not None and table.get(y) != u):
                    problems.append({"kind": "edge", "x": list(x), "i": a})
    return {"word": list(word.letters), "lambda": list(lam), "points": len(table),
            "problems": problems, "status": "pass" if not problems else "fail"}


def dispatch(args) -> tuple[str, int]:
    word = _word(args)
    fmt = args.format
    if fmt == "dot" and args.verb != "crystal-graph":
        raise UsageError("--format dot is only available for crystal-graph")
    doc, code = None, EXIT_OK

    if args.verb == "cone":
        system = cone_inequalities(word)
        if fmt == "text":
            return _inequality_text(system), code
        doc = {"word": list(word.letters), "inequalities": system.rows()}

    elif args.verb == "polytope":
        p = string_polytope(word, _lam(args, word))
        if fmt == "text":
            return _inequality_text(p.system), code
        doc = {"word": list(word.letters), "lambda": list(p.lam),
               "inequalities": p.system.rows()}

    elif args.verb == "points":
        p = string_polytope(word, _lam(args, word))
        if fmt == "text":
            return _text_rows(p.points), code
        doc = {"word": list(word.letters), "lambda": list(p.lam),
               "count": len(p.points), "points": [list(x) for x in p.points]}

    elif args.verb == "crystal-graph":
        lam = _lam(args, word)
        if fmt == "dot":
            return graph_dot(word, lam), code
        if fmt == "text":
            edges = StringCrystal(word, lam).edges()
            return "".join(f"{list(x)} -{a}-> {list(y)}\n" for x, a, y in edges), code
        return graph_json(word, lam) + "\n", code

    elif args.verb == "z":
        js = _indices(args.j, word.n)
        zs = {j: z_vector(word, j).coords for j in js}
        if fmt == "text":
            return _text_rows(zs.values()), code
        doc = {"word": list(word.letters), "z": {str(j): list(v) for j, v in zs.items()}}
        if len(js) == 1:
            doc = {"word": list(word.letters), "j": js[0], "coords": list(zs[js[0]])}

    elif args.verb == "embed-check":
        lam = _lam(args, word)
        js = _indices(args.j, word.n)
        reports = _fan_out(check_morphism, [(word, lam, j) for j in js], args.jobs)
        code = EXIT_OK if all(r["status"] == "pass" for r in reports) else EXIT_FALSE
        doc = reports[0] if len(reports) == 1 else reports

    elif args.verb == "project":
        if args.x is None:
            raise UsageError("--x is required for project")
        w2, x2 = project(word, args.x, args.which)
        doc = {"word": list(w2.letters), "n": w2.n, "x": list(x2)}

    elif args.verb == "atom-check":
        ids = _indices(args.i, word.n)
        reports = _fan_out(conjecture_atom, [(word, args.k, i) for i in ids], args.jobs)
        code = EXIT_OK if all(r["big_atom"] for r in reports) else EXIT_FALSE
        doc = reports[0] if len(reports) == 1 else reports

    elif args.verb == "oracle-compare":
        doc = _oracle_compare(word, _lam(args, word))
        code = EXIT_OK if doc["status"] == "pass" else EXIT_FALSE

    if fmt == "text":
        return json.dumps(doc, sort_keys=True, indent=1) + "\n", code
    return json.dumps(doc, sort_keys=True) + "\n", code


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out, code = dispatch(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        diag = getattr(exc, "diagnostics", {"message": str(exc)})
        print(json.dumps({"internal_error": diag}, sort_keys=True), file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
