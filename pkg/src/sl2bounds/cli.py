"""Command-line surface and golden-table reproduction harness.

Exit codes: 0 success, 1 usage error, 2 golden mismatch, 3 numeric
overflow / certification failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

from . import bounds, semigroup
from .character import CharacterError, Character, dominant_character, full_weight_values
from .rootsys import (RootSystem, RootSystemError, SimpleComponent, Weight,
                      build, weyl_dimension)
from .sl2branch import (BranchingError, Sl2Embedding, invariant_dim, g0,
                        principal_embedding, root_embedding, sl2_decompose)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GOLDEN_MISMATCH = 2
EXIT_NUMERIC = 3

CACHE_ENV = "SL2BOUNDS_CACHE_DIR"
CACHE_VERSION = "1"


class UsageError(ValueError):
    pass


def _load_fixture(name: str):
    with resources.files("sl2bounds.data").joinpath(name).open() as f:
        return json.load(f)


def _parse_type(type_str: str, rank: int) -> RootSystem:
    try:
        return build([SimpleComponent(type_str.upper(), rank)])
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc


def _parse_embedding(rs: RootSystem, spec: str) -> Sl2Embedding:
    if spec == "principal":
        return principal_embedding(rs)
    if spec.startswith("root="):
        coords = tuple(int(x) for x in spec[5:].split(","))
        return root_embedding(rs, coords)
    if spec.startswith("marks="):
        marks = tuple(int(x) for x in spec[6:].split(","))
        if len(marks) != rs.rank:
            raise UsageError(f"marks must have length {rs.rank}")
        return Sl2Embedding(marks=marks)
    raise UsageError(
        "embedding must be 'principal', 'root=c1,..,cr' or 'marks=m1,..,mr'")


# ---------------------------------------------------------------------------
# character disk cache


def _cache_dir(args):
    return args.cache_dir or os.environ.get(CACHE_ENV)


def _cache_key(rs: RootSystem, lam: Weight) -> str:
    blob = json.dumps([rs.fingerprint, rs.rank, list(lam.coords),
                       CACHE_VERSION])
    return hashlib.sha256(blob.encode()).hexdigest()


def _character_json_bytes(ch: Character) -> bytes:
    return json.dumps({"version": CACHE_VERSION, **ch.to_json_dict()},
                      sort_keys=True).encode()


def cached_character(rs: RootSystem, lam: Weight, cache_dir=None,
                     verify=False) -> Character:
    """Character with optional persistent JSON cache (atomic writes)."""
    if cache_dir is None:
        return dominant_character(rs, lam)
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, _cache_key(rs, lam) + ".json")
    if os.path.exists(path):
        with open(path, "rb") as f:
            raw = f.read()
        ch = Character.from_json_dict(json.loads(raw))
        if verify:
            fresh = dominant_character(rs, lam)
            if _character_json_bytes(fresh) != raw:
                raise CharacterError(
                    f"cache entry {path} differs from recomputation")
        return ch
    ch = dominant_character(rs, lam)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(_character_json_bytes(ch))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return ch


# ---------------------------------------------------------------------------
# output helpers


def _emit_table(args, rows, header):
    """rows: list of lists; header: list of column names."""
    if args.format == "json":
        print(json.dumps({"header": header, "rows": rows}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows))
                  for i, h in enumerate(header)]
        print("  ".join(str(h).rjust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))


def _emit_obj(args, obj, text_fn):
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        text_fn()


def _fill_grid(fn, max_i, max_j, jobs):
    cells = [(i, j) for i in range(max_i + 1) for j in range(max_j + 1)]
    grid = [[0] * (max_j + 1) for _ in range(max_i + 1)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            for (i, j), v in zip(cells, ex.map(lambda c: fn(*c), cells)):
                grid[i][j] = v
    else:
        for i, j in cells:
            grid[i][j] = fn(i, j)
    return grid


def _golden_diff(grid, gold, label):
    """Return mismatch descriptions against an embedded golden table."""
    diffs = []
    for i, row in enumerate(grid):
        for j, v in enumerate(row):
            if v != gold[i][j]:
                diffs.append(f"{label}[{i}][{j}]: got {v}, expected {gold[i][j]}")
    return diffs


# ---------------------------------------------------------------------------
# commands


def cmd_describe(args):
    rs = _parse_type(args.type, args.rank)
    s = rs.summary()
    _emit_obj(args, s, lambda: print(
        f"{s['type']}: rank {s['rank']}, {s['num_positive_roots']} positive "
        f"roots, dim {s['dim']}\nCartan matrix: {s['cartan']}\n"
        f"symmetrizers: {s['symmetrizers']}"))
    return EXIT_OK


def cmd_character(args):
    rs = _parse_type(args.type, args.rank)
    lam = Weight(args.coords)
    if len(lam) != rs.rank or not lam.is_dominant:
        raise UsageError(f"expected {rs.rank} nonnegative coordinates")
    ch = cached_character(rs, lam, _cache_dir(args), args.verify_cache)
    dim = weyl_dimension(rs, lam)

    def text():
        print(f"L{lam} of {rs.fingerprint}: dimension {dim}")
        for mu, m in sorted(ch.mults.items(), key=lambda kv: kv[0].coords):
            print(f"  {mu}: {m}")

    _emit_obj(args, {**ch.to_json_dict(), "dimension": dim}, text)
    return EXIT_OK


def cmd_branch(args):
    rs = _parse_type(args.type, args.rank)
    lam = Weight(args.coords)
    if len(lam) != rs.rank or not lam.is_dominant:
        raise UsageError(f"expected {rs.rank} nonnegative coordinates")
    emb = _parse_embedding(rs, args.embedding)
    N = full_weight_values(rs, lam, emb.marks)
    dec = sl2_decompose(rs, lam, emb)
    obj = {
        "lambda": list(lam.coords),
        "embedding": list(emb.marks),
        "weight_values": {str(k): v for k, v in sorted(N.items())},
        "decomposition": dec.to_json_dict(),
        "invariant_dim": dec.mults.get(0, 0),
        "g0": min(dec.mults) + 1,
    }

    def text():
        print(f"L{lam} restricted to sl2 marks {list(emb.marks)}:")
        print("  N:", {k: N[k] for k in sorted(N)})
        print("  decomposition:", {f"V({k})": m for k, m in sorted(dec.mults.items())})
        print(f"  invariant dim: {obj['invariant_dim']}, g0: {obj['g0']}")

    _emit_obj(args, obj, text)
    return EXIT_OK


def _table_cmd(args, entry_fn, fixture, label):
    rs = build([SimpleComponent("G", 2)])
    emb = principal_embedding(rs)
    grid = _fill_grid(lambda i, j: entry_fn(rs, Weight((i, j)), emb),
                      args.max_i, args.max_j, args.jobs)
    header = ["i\\j"] + list(range(args.max_j + 1))
    rows = [[i] + grid[i] for i in range(args.max_i + 1)]
    _emit_table(args, rows, header)
    if args.golden:
        gold = _load_fixture(fixture)["table"]
        if args.max_i > 19 or args.max_j > 19:
            raise UsageError("golden table covers 0..19 only")
        diffs = _golden_diff(grid, gold, label)
        if diffs:
            for d in diffs:
                print(d, file=sys.stderr)
            return EXIT_GOLDEN_MISMATCH
        print(f"golden check passed: {label} matches the embedded table",
              file=sys.stderr)
    return EXIT_OK


def cmd_table1(args):
    return _table_cmd(args, invariant_dim, "g2_invariant_dims.json", "dim^K")


def cmd_table2(args):
    return _table_cmd(args, g0, "g2_g0.json", "g0")


def cmd_exceptions(args):
    rs = build([SimpleComponent("G", 2)])
    emb = principal_embedding(rs)
    gens = semigroup.GeneratorSet(
        2, _load_fixture("g2_semigroup_complement9.json")["generators"])
    comp = semigroup.complement(gens, args.box_bound)
    if not comp.certified:
        print("complement certification failed; increase --box-bound",
              file=sys.stderr)
        return EXIT_NUMERIC
    zero = sorted(v for v in comp.points
                  if invariant_dim(rs, Weight(v), emb) == 0)
    gold = [tuple(p) for p in _load_fixture("g2_exceptions.json")["weights"]]
    _emit_obj(args, {"exceptions": [list(v) for v in zero]},
              lambda: print("\n".join(f"[{a}, {b}]" for a, b in zero)))
    if zero != gold:
        print("exception list differs from the embedded 26-pair list",
              file=sys.stderr)
        return EXIT_GOLDEN_MISMATCH
    return EXIT_OK


def cmd_complement(args):
    if args.generators_file:
        gens = json.load(open(args.generators_file))
    else:
        gens = [tuple(int(x) for x in g.split(",")) for g in args.gen]
    if not gens:
        raise UsageError("no generators given (use --gen or --generators-file)")
    r = len(gens[0])
    try:
        gs = semigroup.GeneratorSet(r, gens)
        comp = semigroup.complement(gs, args.box_bound)
    except semigroup.SemigroupError as exc:
        raise UsageError(str(exc)) from exc
    obj = {"points": [list(p) for p in comp.points],
           "certified": comp.certified, "box_bound": comp.box_bound}
    _emit_obj(args, obj, lambda: print(
        f"{len(comp.points)} non-members (certified={comp.certified}):\n" +
        json.dumps(obj["points"])))
    if not comp.certified:
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_bound(args):
    rs = _parse_type(args.type, args.rank)
    emb = _parse_embedding(rs, args.embedding)
    try:
        res = bounds.b_bound(rs, emb, args.cap)
    except bounds.BoundsError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NUMERIC
    obj = {"b": res.b, "m_values": list(res.m_values.values),
           "c0_box": list(res.m_values.values),
           "max_g0": res.box_max_g0,
           "argmax": list(res.box_max_weight.coords)}
    _emit_obj(args, obj, lambda: print(
        f"b = {res.b}  (m = {list(res.m_values.values)}, C0 = box "
        f"{'x'.join(str(m) for m in res.m_values.values)}, max g0 = "
        f"{res.box_max_g0} at {res.box_max_weight})"))
    return EXIT_OK


def cmd_parabolic_table(args):
    comp = SimpleComponent(args.type.upper(), args.rank)
    rows = bounds.parabolic_table(comp)
    data = [[r.node, "".join(str(c) for c in r.levi_ss_components) or "-",
             r.dim_g_mod_lss, r.dim_X] for r in rows]
    _emit_table(args, data, ["node", "levi_ss", "dim_g_mod_lss", "dim_X"])
    return EXIT_OK


def cmd_e_table(args):
    types = [SimpleComponent(t[0], int(t[1:]))
             for t in args.types] if args.types else \
        list(bounds._all_simple_types(args.rank_cap))
    data = [[str(t), bounds.e_value(t)] for t in types]
    _emit_table(args, data, ["type", "e"])
    return EXIT_OK


def cmd_exclusion_set(args):
    try:
        es = bounds.E_set(args.dim_k, args.rank_cap)
    except bounds.BoundsError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NUMERIC
    _emit_obj(args, {"dim_k": args.dim_k, "types": [str(c) for c in es]},
              lambda: print(" ".join(str(c) for c in es)))
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"),
                        default="text")
    common.add_argument("--cache-dir", default=None,
                        help=f"character cache directory (or ${CACHE_ENV})")
    common.add_argument("--verify-cache", action="store_true",
                        help="recompute on cache hits and compare bytes")
    common.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for table fill")
    p = argparse.ArgumentParser(
        prog="sl2bounds", parents=[common],
        description="sl2-branching tables, invariant dimensions and "
                    "uniform branching bounds for semisimple Lie algebras")
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=lambda **kw: argparse.ArgumentParser(
                               parents=[common], **kw))

    q = sub.add_parser("describe", help="root-system summary")
    q.add_argument("type")
    q.add_argument("rank", type=int)
    q.set_defaults(fn=cmd_describe)

    q = sub.add_parser("character", help="dominant character and dimension")
    q.add_argument("type")
    q.add_argument("rank", type=int)
    q.add_argument("coords", type=int, nargs="+")
    q.set_defaults(fn=cmd_character)

    q = sub.add_parser("branch", help="restrict to an sl2-subalgebra")
    q.add_argument("type")
    q.add_argument("rank", type=int)
    q.add_argument("coords", type=int, nargs="+")
    q.add_argument("--embedding", default="principal")
    q.set_defaults(fn=cmd_branch)

    for name, fn, hlp in (
            ("table1", cmd_table1, "G2 principal invariant dimensions"),
            ("table2", cmd_table2, "G2 principal g0 values")):
        q = sub.add_parser(name, help=hlp)
        q.add_argument("--max-i", type=int, default=19)
        q.add_argument("--max-j", type=int, default=19)
        q.add_argument("--golden", action="store_true",
                       help="diff against the embedded table")
        q.set_defaults(fn=fn)

    q = sub.add_parser("exceptions",
                       help="dominant G2 weights with no principal invariant")
    q.add_argument("--box-bound", type=int, default=64)
    q.set_defaults(fn=cmd_exceptions)

    q = sub.add_parser("complement", help="certified semigroup complement")
    q.add_argument("--gen", action="append", default=[],
                   help="generator as comma-separated integers (repeatable)")
    q.add_argument("--generators-file", default=None,
                   help="JSON file with a list of generators")
    q.add_argument("--box-bound", type=int, default=64)
    q.set_defaults(fn=cmd_complement)

    q = sub.add_parser("bound", help="uniform bound b and m-values")
    q.add_argument("type")
    q.add_argument("rank", type=int)
    q.add_argument("--embedding", default="principal")
    q.add_argument("--cap", type=int, default=bounds.DEFAULT_M_CAP)
    q.set_defaults(fn=cmd_bound)

    q = sub.add_parser("parabolic-table",
                       help="dim g/l_ss and dim X per Dynkin node")
    q.add_argument("type")
    q.add_argument("rank", type=int)
    q.set_defaults(fn=cmd_parabolic_table)

    q = sub.add_parser("e-table", help="e-values of simple types")
    q.add_argument("types", nargs="*",
                   help="types like G2 B4 (default: all up to --rank-cap)")
    q.add_argument("--rank-cap", type=int, default=8)
    q.set_defaults(fn=cmd_e_table)

    q = sub.add_parser("exclusion-set",
                       help="simple types with e-value at most dim_k")
    q.add_argument("dim_k", type=int)
    q.add_argument("--rank-cap", type=int, default=10)
    q.set_defaults(fn=cmd_exclusion_set)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (UsageError, RootSystemError, semigroup.SemigroupError,
            bounds.BoundsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CharacterError, BranchingError, OverflowError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
