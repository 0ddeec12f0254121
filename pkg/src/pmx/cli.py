"""The ``pmx`` command line tool.

Exit status: 0 on success, 1 when an input fails validation (or a check
such as ``iso`` comes out negative), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import catalog
from .io import PmxFormatError, PmxValidationError, atomic_write, export_dot, load, save, write_pmx
from .premaniplex import Premaniplex, components, face_counts, find_isomorphism, is_maniplex
from .symmetry import automorphisms, distinguished_generators, quotient
from .voltage import (
    FinVoltagePremaniplex,
    VoltageOperator,
    apply,
    apply_rooted,
    compose,
    derived_graph,
    mix,
)


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _load(path, want=None):
    if not os.path.exists(path):
        raise UsageError(f"no such file: {path}")
    obj = load(path)
    if want is not None and not isinstance(obj, want):
        raise UsageError(f"{path}: expected a {want.__name__}, found a {type(obj).__name__}")
    return obj


def _parse_param(text):
    if text is None:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        pass
    if "," in text:
        return tuple(int(a) for a in text.split(","))
    return text


def _premaniplex_param(value):
    if isinstance(value, str):
        if os.path.exists(value):
            return _load(value, Premaniplex)
        name, _, arg = value.partition(":")
        try:
            return catalog.sample_premaniplex(name, int(arg) if arg else None)
        except KeyError:
            raise UsageError(f"unknown premaniplex {value!r}") from None
    raise UsageError("this operator needs a premaniplex file or sample name as --param")


def _operator(spec, rank=None, param=None):
    """Resolve ``spec`` as a catalog name first, then as a file."""
    if spec in catalog.OperatorName.__members__:
        if spec in ("mix_with", "hat2"):
            param = _premaniplex_param(param)
        elif spec == "two_orbit" and param is not None:
            param = tuple(param) if isinstance(param, (list, tuple)) else (int(param),)
        try:
            return catalog.classical_operator(spec, rank, param)
        except (TypeError, ValueError) as e:
            raise UsageError(str(e)) from None
    if os.path.exists(spec):
        return _load(spec, VoltageOperator)
    raise UsageError(f"{spec!r} is neither a catalog operator nor a file")


def _gens(spec, X):
    if spec in (None, "all"):
        return list(automorphisms(X).elements)
    if spec == "rho":
        return distinguished_generators(X)
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        try:
            data = json.loads(spec)
        except json.JSONDecodeError:
            raise UsageError(f"cannot read generators from {spec!r}") from None
    if not isinstance(data, list) or not all(isinstance(g, list) for g in data):
        raise UsageError("generators must be a list of permutations")
    return [np.asarray(g, dtype=np.int64) for g in data]


def _summary(X):
    return f"rank {X.rank}, {X.vertex_count} vertices"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_validate(a):
    obj = _load(a.file)
    if isinstance(obj, Premaniplex):
        extra = ", maniplex" if is_maniplex(obj) else ""
        print(f"ok: premaniplex, {_summary(obj)}{extra}")
    elif isinstance(obj, VoltageOperator):
        print(f"ok: ({obj.in_rank}, {obj.out_rank})-operator on {obj.Y.vertex_count} vertices")
    else:
        print(f"ok: voltage premaniplex, {_summary(obj.X)}, degree {obj.degree}")


def cmd_apply(a):
    X = _load(a.input, Premaniplex)
    op = _operator(a.op, X.rank, _parse_param(a.param))
    if op.in_rank != X.rank:
        raise UsageError(f"operator expects rank {op.in_rank}, input has rank {X.rank}")
    if a.root:
        try:
            x, y = (int(t) for t in a.root.split(","))
        except ValueError:
            raise UsageError("--root takes X_VERTEX,Y_VERTEX") from None
        out = apply_rooted(X, op, y=y, x=x).premaniplex
    else:
        out = apply(X, op)
    save(out, a.out)
    print(f"wrote {a.out}: {_summary(out)}")


def cmd_compose(a):
    first = _operator(a.first, a.rank, _parse_param(a.param))
    second = _operator(a.second, first.out_rank)
    try:
        op = compose(first, second)
    except ValueError as e:
        raise UsageError(str(e)) from None
    save(op, a.out)
    print(f"wrote {a.out}: ({op.in_rank}, {op.out_rank})-operator on {op.Y.vertex_count} vertices")


def cmd_mix(a):
    X, Y = _load(a.a, Premaniplex), _load(a.b, Premaniplex)
    if X.rank != Y.rank:
        raise UsageError("mix needs premaniplexes of equal rank")
    out = mix(X, Y)
    save(out, a.out)
    print(f"wrote {a.out}: {_summary(out)}")


def cmd_components(a):
    X = _load(a.file, Premaniplex)
    comps = components(X)
    print(f"{len(comps)} component(s)")
    for k, c in enumerate(comps):
        print(f"  {k}: {len(c)} vertices, smallest {c[0]}")


def cmd_iso(a):
    X, Y = _load(a.a, Premaniplex), _load(a.b, Premaniplex)
    f = find_isomorphism(X, Y)
    if f is None:
        print("not isomorphic")
        raise CheckFailed
    print("isomorphic")
    if a.show:
        print(json.dumps([int(v) for v in f]))


def cmd_aut(a):
    X = _load(a.file, Premaniplex)
    G = automorphisms(X)
    print(f"order {G.order}")
    print(f"flag orbits {len(G.orbits)}")
    if is_maniplex(X):
        print("face counts " + " ".join(map(str, face_counts(X))))


def cmd_stg(a):
    X = _load(a.file, Premaniplex)
    T = quotient(X, _gens(a.gens, X))
    if a.out:
        save(T, a.out)
        print(f"wrote {a.out}: {_summary(T)}")
    else:
        sys.stdout.write(write_pmx(T))


def cmd_quotient(a):
    X = _load(a.file, Premaniplex)
    T = quotient(X, _gens(a.gens, X))
    save(T, a.out)
    print(f"wrote {a.out}: {_summary(T)}")


def cmd_derived(a):
    xp = _load(a.file, FinVoltagePremaniplex)
    D = derived_graph(xp, bound=a.bound)
    save(D, a.out)
    print(f"wrote {a.out}: {_summary(D)}")


def cmd_catalog(a):
    if a.action == "list":
        if a.name is not None:
            raise UsageError("catalog list takes no name")
        print("operators:")
        for name in catalog.OperatorName.__members__:
            print(f"  {name}")
        print("samples:")
        for name in catalog.SAMPLES:
            print(f"  {name}")
        return
    if a.name is None or a.out is None:
        raise UsageError("catalog get needs NAME and --out")
    param = _parse_param(a.param)
    if a.name in catalog.OperatorName.__members__:
        obj = _operator(a.name, a.rank, param)
    else:
        if a.name == "one_vertex" and a.rank is not None:
            param = a.rank
        try:
            obj = catalog.sample_premaniplex(a.name, param)
        except KeyError:
            raise UsageError(f"unknown catalog entry {a.name!r}") from None
    save(obj, a.out)
    print(f"wrote {a.out}")


def cmd_export_dot(a):
    obj = _load(a.file)
    atomic_write(a.out, export_dot(obj))
    print(f"wrote {a.out}")


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="pmx", description="Voltage operations on premaniplexes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a PMX file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("apply", help="product of a premaniplex with an operator")
    s.add_argument("--op", required=True, help="catalog name or operator file")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--root", help="X_VERTEX,Y_VERTEX: keep only that component")
    s.add_argument("--param")
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("compose", help="operator for 'first, then second'")
    s.add_argument("--first", required=True)
    s.add_argument("--second", required=True)
    s.add_argument("--rank", type=int)
    s.add_argument("--param")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("mix", help="mix of two premaniplexes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_mix)

    s = sub.add_parser("components", help="connected components")
    s.add_argument("file")
    s.set_defaults(func=cmd_components)

    s = sub.add_parser("iso", help="isomorphism test")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--show", action="store_true", help="print the vertex map")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("aut", help="automorphism group summary")
    s.add_argument("file")
    s.set_defaults(func=cmd_aut)

    gens_help = "all | rho | @FILE | inline JSON list of permutations"
    s = sub.add_parser("stg", help="symmetry type graph")
    s.add_argument("file")
    s.add_argument("--gens", help=gens_help)
    s.add_argument("--out")
    s.set_defaults(func=cmd_stg)

    s = sub.add_parser("quotient", help="quotient by a group of automorphisms")
    s.add_argument("file")
    s.add_argument("--gens", required=True, help=gens_help)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("derived", help="derived graph of a voltage premaniplex")
    s.add_argument("file")
    s.add_argument("--out", required=True)
    s.add_argument("--bound", type=int, default=10**6)
    s.set_defaults(func=cmd_derived)

    s = sub.add_parser("catalog", help="list or fetch catalog entries")
    s.add_argument("action", choices=("list", "get"))
    s.add_argument("name", nargs="?")
    s.add_argument("--rank", type=int)
    s.add_argument("--param")
    s.add_argument("--out")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("export-dot", help="Graphviz rendering")
    s.add_argument("file")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as e:
        print(f"pmx: error: {e}", file=sys.stderr)
        return 2
    except (PmxFormatError, PmxValidationError) as e:
        print(f"pmx: invalid input: {e}", file=sys.stderr)
        return 1
    except CheckFailed:
        return 1
    except (ValueError, OverflowError) as e:
        print(f"pmx: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
