"""Command-line front end: ``sqtop <command> ...``.

Exit codes: 0 success, 1 usage error, 2 invalid input (or a construction
that does not apply), 3 vertex cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from .cohomology import Cochain, betti, cohomology_basis, cup
from .complex import SimplicialComplex, random_complex
from .errors import InvalidInput, SqtopError, VerificationFailed, VertexCapExceeded
from .io import (
    complex_from_dict,
    complex_to_dict,
    format_cochain,
    format_simplex,
    load_complex,
    load_cochain,
    named,
)
from .moment_angle import hochster_table, za_betti, za_sq_profile
from .polyjoin import (
    LABELINGS,
    extend_cocycle_substitution,
    polyhedral_join,
    predicted_betti_substitution,
    predicted_sq_profile_substitution,
    substitution,
)
from .stanley_reisner import (
    a_ideal_counterexample,
    monomial_basis,
    render_monomial,
    sq_graded_matrix,
)
from .steenrod import sq1_cochain_special, sq_cochain, sq_matrix, sq_profile

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _betti_line(b: dict[int, int]) -> str:
    return " ".join(f"{k}:{v}" for k, v in sorted(b.items())) or "(all zero)"


def _jsonable_betti(b: dict[int, int]) -> dict[str, int]:
    return {str(k): v for k, v in sorted(b.items())}


def _profile_rows(profile) -> list[list[int]]:
    return [list(e) for e in sorted(profile)]


def _profile_lines(profile) -> list[str]:
    return [f"Sq^{e.n}: H^{e.degree} -> H^{e.degree + e.n}  rank {e.rank}" for e in sorted(profile)]


def _complex_list(arg: str) -> list[SimplicialComplex]:
    return [load_complex(part) for part in arg.split(",") if part.strip()]


# -- commands ------------------------------------------------------------------


def cmd_info(a) -> None:
    K = load_complex(a.complex)
    data = {
        "vertices": K.m,
        "ghost_vertices": list(K.ghost_vertices),
        "dimension": K.dimension(),
        "f_vector": list(K.f_vector()),
        "euler_characteristic": K.euler_characteristic(),
        "connected": K.is_connected(),
        "facets": [list(f) for f in K.facets],
    }
    if a.json:
        _emit(data)
        return
    print(f"vertices {K.m}")
    print("ghost vertices " + (" ".join(map(str, K.ghost_vertices)) or "none"))
    print(f"dimension {K.dimension()}")
    print("f-vector " + " ".join(map(str, K.f_vector())))
    print(f"euler characteristic {K.euler_characteristic()}")
    print(f"connected {'yes' if K.is_connected() else 'no'}")
    for f in K.facets:
        print("facet " + format_simplex(f))


def cmd_cohomology(a) -> None:
    K = load_complex(a.complex)
    reduced = not a.unreduced
    b = betti(K, reduced)
    basis = cohomology_basis(K, reduced)
    reps = {j: [c.simplices() for c in basis.representatives(j)] for j in sorted(b)}
    if a.json:
        _emit({
            "reduced": reduced,
            "betti": _jsonable_betti(b),
            "representatives": {str(j): [[list(s) for s in r] for r in v] for j, v in reps.items()},
        })
        return
    print(("reduced " if reduced else "") + "betti " + _betti_line(b))
    for j, rs in reps.items():
        for k, r in enumerate(rs, start=1):
            body = " + ".join(format_simplex(s) + "*" for s in r) or "[]*"
            print(f"H^{j} generator {k}: {body}")


def cmd_cup(a) -> None:
    K = load_complex(a.complex)
    x = load_cochain(a.left, K)
    y = load_cochain(a.right, K)
    c = cup(K, x, y)
    if a.json:
        _emit({"degree": c.degree, "simplices": [list(s) for s in c.simplices()]})
    else:
        print(format_cochain(c))


def cmd_sq(a) -> None:
    K = load_complex(a.complex)
    if a.cochain:
        if a.n is None:
            raise UsageError("--cochain needs --n")
        c = load_cochain(a.cochain, K)
        if a.special:
            if a.n != 1:
                raise UsageError("--special only applies to --n 1")
            img = sq1_cochain_special(K, c)
        else:
            img = sq_cochain(K, a.n, c)
        if a.json:
            _emit({"n": a.n, "degree": img.degree, "simplices": [list(s) for s in img.simplices()]})
        else:
            print(format_cochain(img))
        return
    if a.degree is not None:
        if a.n is None:
            raise UsageError("--degree needs --n")
        sm = sq_matrix(K, a.n, a.degree)
        rows = sm.matrix.to_lists()
        if a.json:
            _emit({"n": a.n, "degree": a.degree, "rank": sm.rank,
                   "shape": [sm.matrix.rows, sm.matrix.cols], "rows": rows})
        else:
            print(f"Sq^{a.n}: H^{a.degree} -> H^{a.degree + a.n}  "
                  f"{sm.matrix.rows}x{sm.matrix.cols}  rank {sm.rank}")
            for r in rows:
                print(" ".join(map(str, r)))
        return
    prof = sq_profile(K)
    if a.json:
        _emit({"profile": _profile_rows(prof)})
    else:
        print("\n".join(_profile_lines(prof)) or "no nontrivial Steenrod squares")


def cmd_sr(a) -> None:
    K = load_complex(a.complex)
    d = a.d
    if a.n is not None:
        if a.degree is None:
            raise UsageError("--n needs --degree")
        M = sq_graded_matrix(K, a.n, a.degree, d)
        src = [render_monomial(m) for m in monomial_basis(K, a.degree // d)]
        tgt = [render_monomial(m) for m in monomial_basis(K, (a.degree + a.n) // d)] if M.rows else []
        if a.json:
            _emit({"n": a.n, "degree": a.degree, "d": d, "source": src, "target": tgt, "rows": M.to_lists()})
        else:
            print(f"Sq^{a.n}: degree {a.degree} -> {a.degree + a.n}  {M.rows}x{M.cols}")
            print("source " + " ".join(src))
            print("target " + " ".join(tgt))
            for r in M.to_lists():
                print(" ".join(map(str, r)))
        return
    dims = {D: len(monomial_basis(K, D // d)) for D in range(0, a.max_degree + 1, d)}
    result = {"d": d, "dimensions": {str(D): v for D, v in dims.items()}}
    if a.verify:
        bad = a_ideal_counterexample(K, d, a.max_degree)
        result["a_ideal"] = bad is None
        if bad is not None:
            g, mono, n, img = bad
            result["counterexample"] = {"multiple": render_monomial(mono), "n": n, "term": render_monomial(img)}
    if a.json:
        _emit(result)
        return
    for D, v in dims.items():
        print(f"degree {D}: {v}")
    if a.verify:
        if result["a_ideal"]:
            print(f"Sq preserves the face ideal up to degree {a.max_degree}")
        else:
            c = result["counterexample"]
            print(f"counterexample: Sq^{c['n']}({c['multiple']}) contains {c['term']}")


def cmd_hochster(a) -> None:
    K = load_complex(a.complex)
    table = hochster_table(K, a.max_vertices, a.jobs)
    if a.json:
        _emit({"entries": [{"J": list(J), "betti": _jsonable_betti(b)} for J, b in table.entries.items()]})
        return
    for J, b in table.entries.items():
        print("J=" + format_simplex(J) + f" |J|={len(J)} betti " + _betti_line(b))


def cmd_za(a) -> None:
    K = load_complex(a.complex)
    table = hochster_table(K, a.max_vertices, a.jobs)
    b = za_betti(K, table=table)
    prof = za_sq_profile(K, a.max_vertices, a.jobs).profile if a.profile else None
    if a.json:
        out = {
            "hochster": [{"J": list(J), "betti": _jsonable_betti(x)} for J, x in table.entries.items()],
            "betti": _jsonable_betti(b),
        }
        if prof is not None:
            out["profile"] = _profile_rows(prof)
        _emit(out)
        return
    print("betti " + _betti_line(b))
    if prof is not None:
        print("\n".join(_profile_lines(prof)) or "no nontrivial Steenrod squares")


def cmd_join(a) -> None:
    try:
        with open(a.spec, encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {a.spec}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad JSON in {a.spec}: {exc}") from None

    def as_complex(x):
        if isinstance(x, str):
            return load_complex(x)
        return complex_from_dict(x)

    if not isinstance(spec, dict) or "K" not in spec or "pairs" not in spec:
        raise InvalidInput('join spec needs "K" and "pairs"')
    K = as_complex(spec["K"])
    pairs = []
    for item in spec["pairs"]:
        if not isinstance(item, list) or len(item) != 2:
            raise InvalidInput("each pair must be a two-element list")
        pairs.append((as_complex(item[0]), as_complex(item[1])))
    S = polyhedral_join(K, pairs, a.labeling or spec.get("labeling", "inplace"))
    _print_complex(S, a.json)


def _print_complex(S: SimplicialComplex, as_json: bool) -> None:
    if as_json:
        _emit(complex_to_dict(S))
        return
    print(f"vertices {S.m}")
    for f in S.facets:
        print("facet " + " ".join(map(str, f)))


def cmd_substitute(a) -> None:
    K = load_complex(a.complex)
    parts = _complex_list(a.factors)
    S = substitution(K, parts, a.labeling)
    if not a.predict:
        _print_complex(S, a.json)
        return
    direct = betti(S)
    pred = predicted_betti_substitution(K, parts)
    prof = sq_profile(S)
    pprof = predicted_sq_profile_substitution(K, parts)
    if a.json:
        out = complex_to_dict(S)
        out.update({"betti": _jsonable_betti(direct), "predicted_betti": _jsonable_betti(pred),
                    "profile": _profile_rows(prof), "predicted_profile": _profile_rows(pprof)})
        _emit(out)
        return
    _print_complex(S, False)
    print("betti " + _betti_line(direct))
    print("predicted betti " + _betti_line(pred))
    for line in _profile_lines(prof):
        print(line)
    print("profile matches prediction" if prof == pprof else "profile differs from prediction")


def cmd_extend(a) -> None:
    K = load_complex(a.complex)
    parts = _complex_list(a.factors)
    x = load_cochain(a.cochain, K)
    y = extend_cocycle_substitution(K, parts, x, a.labeling)
    S = y.complex
    img = sq_cochain(S, a.n, y) if a.n is not None else None
    if a.json:
        out = {"degree": y.degree, "simplices": [list(s) for s in y.simplices()]}
        if img is not None:
            out["sq"] = {"n": a.n, "simplices": [list(s) for s in img.simplices()]}
        _emit(out)
        return
    print(format_cochain(y))
    if img is not None:
        print(f"Sq^{a.n}:")
        print(format_cochain(img))


def cmd_scan(a) -> None:
    from .enumeration import scan

    n = a.max_vertices
    start = time.perf_counter()
    report = scan(n, full_sq=a.full_sq, jobs=a.jobs, long_running=a.allow_long)
    elapsed = time.perf_counter() - start
    print(f"elapsed {elapsed:.2f}s", file=sys.stderr)
    what = "Sq^k" if a.full_sq else "Sq^1"
    if a.json:
        _emit({
            "n": n, "complexes": report.count, "examined": report.examined,
            "hits": [{"vertices": K.m, "facets": [list(f) for f in K.facets], "profile": _profile_rows(p)}
                     for K, p in report.hits],
        })
        return
    print(f"enumerated {report.count} complexes on {n} vertices (ghost vertices allowed)")
    print(f"examined {report.examined} with the Steenrod matrix")
    for K, p in report.hits:
        print(" ".join(format_simplex(f) for f in K.facets) + "  " + "; ".join(_profile_lines(p)))
    print(f"{len(report.hits)} complexes with nontrivial {what}")


def cmd_check(a) -> None:
    """Seeded spot checks of the splitting theorem and Sq^1 formulas."""
    rng = random.Random(a.seed)
    bases = ["cycle:3", "cycle:4", "cycle:5", "P26", "boundary:2", "boundary:3"]
    parts = ["points:1", "points:2", "cycle:3", "simplex:1"]
    ok = failures = 0
    for _ in range(a.instances):
        K = named(rng.choice(bases))
        factors = [named(rng.choice(parts)) if rng.random() < 0.3 else named("point") for _ in range(K.m)]
        if betti(substitution(K, factors)) == predicted_betti_substitution(K, factors):
            ok += 1
        else:
            failures += 1
        R = random_complex(rng.randint(3, 6), rng)
        for j in range(0, R.dimension()):
            faces = len(R.face_masks(j))
            c = Cochain(R, j, rng.getrandbits(faces) if faces else 0)
            if sq_cochain(R, 1, c) == sq1_cochain_special(R, c):
                ok += 1
            else:
                failures += 1
    if a.json:
        _emit({"seed": a.seed, "passed": ok, "failed": failures})
    else:
        print(f"seed {a.seed}: {ok} checks passed, {failures} failed")
    if failures:
        raise VerificationFailed("check", f"{failures} checks failed")


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = _Parser(prog="sqtop", description="Steenrod squares on simplicial complexes and moment-angle complexes.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("info", cmd_info, "basic combinatorics")
    sp.add_argument("complex")

    sp = add("cohomology", cmd_cohomology, "Betti numbers and generators")
    sp.add_argument("complex")
    sp.add_argument("--unreduced", action="store_true")

    sp = add("cup", cmd_cup, "cup product of two cochains")
    sp.add_argument("complex")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = add("sq", cmd_sq, "Steenrod squares: cochain, matrix or profile")
    sp.add_argument("complex")
    sp.add_argument("--n", type=int)
    sp.add_argument("--cochain")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--special", action="store_true", help="use the dedicated Sq^1 formula")
    sp.add_argument("--profile", action="store_true", help="print the profile (default)")

    sp = add("sr", cmd_sr, "Stanley-Reisner ring")
    sp.add_argument("complex")
    sp.add_argument("--d", type=int, default=2, choices=(1, 2), help="generator degree")
    sp.add_argument("--max-degree", type=int, default=6)
    sp.add_argument("--n", type=int)
    sp.add_argument("--degree", type=int)
    sp.add_argument("--verify", action="store_true", help="check Sq preserves the face ideal")

    for name, func, help in (("za", cmd_za, "cohomology of the moment-angle complex"),
                             ("hochster", cmd_hochster, "full-subcomplex Betti table")):
        sp = add(name, func, help)
        sp.add_argument("complex")
        sp.add_argument("--max-vertices", type=int, help="vertex cap (default 16 or SQTOP_VERTEX_CAP)")
        sp.add_argument("--jobs", type=int, default=1)
        if name == "za":
            sp.add_argument("--profile", action="store_true")

    sp = add("join", cmd_join, "polyhedral join from a JSON spec file")
    sp.add_argument("spec")
    sp.add_argument("--labeling", choices=LABELINGS)

    sp = add("substitute", cmd_substitute, "substitution complex K<K1,...,Km>")
    sp.add_argument("complex")
    sp.add_argument("factors", help="comma-separated complexes, one per vertex of K")
    sp.add_argument("--labeling", choices=LABELINGS, default="inplace")
    sp.add_argument("--predict", action="store_true", help="compare with the splitting prediction")

    sp = add("extend-cocycle", cmd_extend, "extend a cocycle to a substitution complex")
    sp.add_argument("complex")
    sp.add_argument("factors")
    sp.add_argument("--cochain", required=True)
    sp.add_argument("--n", type=int, help="also print Sq^n of the extension")
    sp.add_argument("--labeling", choices=LABELINGS, default="inplace")

    sp = add("scan", cmd_scan, "search all complexes on n vertices for Sq^1")
    sp.add_argument("--max-vertices", type=int, required=True)
    sp.add_argument("--full-sq", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--allow-long", action="store_true", help="permit the n = 6 run")

    sp = add("check", cmd_check, "seeded random self-checks")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--instances", type=int, default=20)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing command")
        args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except VertexCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InvalidInput, VerificationFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SqtopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
