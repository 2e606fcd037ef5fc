"""Command-line front end.

Subcommands: eval, basis, convert, decompose, apply, verify, table.  Exit
codes: 0 on success, 1 when a verification check fails, 2 on usage or parse
errors.  All output is UTF-8; --ascii switches the tensor symbol to "(x)".
"""

from __future__ import annotations

import argparse
import json
import sys

from .ring import ring_to_str
from .loop import LoopElem, loop_from_json, loop_to_json, loop_to_str
from .symmetry import GEN_PERMS, Perm, apply_perm
from .likeness import decompose_canonical, decompose_onsager
from .bases import BasisId, BasisVector, OCoords, basis_elem, basis_elem_recursive
from .transitions import transition
from .verify import SUITES, run_checks
from . import expressions as ex


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _tensor(args) -> str:
    return "(x)" if args.ascii else "⊗"


def _element_arg(text: str) -> LoopElem:
    """Accept either a bracket expression in A, B or a JSON loop element."""
    if text.lstrip().startswith("{"):
        try:
            return loop_from_json(json.loads(text))
        except (json.JSONDecodeError, KeyError, ValueError) as err:
            raise CliError(f"bad JSON element: {err}")
    try:
        return ex.evaluate(ex.parse(text))
    except ex.ExprParseError as err:
        raise CliError(f"bad expression: {err}")


def _parse_basis(text: str) -> BasisId:
    try:
        return BasisId.parse(text)
    except ValueError as err:
        raise CliError(str(err))


def _parse_vector(basis: BasisId, family: str, index: int) -> BasisVector:
    try:
        return BasisVector(basis, family, index)
    except ValueError as err:
        raise CliError(str(err))


def _emit(args, text_value: str, json_value) -> None:
    if args.format == "json":
        print(json.dumps(json_value, ensure_ascii=False, indent=2))
    else:
        print(text_value)


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> int:
    try:
        tree = ex.parse(args.expr)
    except ex.ExprParseError as err:
        raise CliError(f"bad expression: {err}")
    value = ex.evaluate(tree)
    _emit(args, loop_to_str(value, _tensor(args)), loop_to_json(value))
    return 0


def cmd_basis(args) -> int:
    v = _parse_vector(_parse_basis(args.basis), args.family, args.index)
    if args.form == "recursive":
        tree = basis_elem_recursive(v)
        _emit(args, ex.render(tree), ex.expr_to_json(tree))
    else:
        value = basis_elem(v)
        _emit(args, loop_to_str(value, _tensor(args)), loop_to_json(value))
    return 0


def cmd_convert(args) -> int:
    src = _parse_basis(args.src)
    dst = _parse_basis(args.dst)
    v = _parse_vector(src, args.family, args.index)
    tv = transition(src, dst, v)
    _emit(args, str(tv), tv.to_json())
    return 0


def cmd_decompose(args) -> int:
    u = _element_arg(args.expr)
    if args.label.strip().lower() in ("canonical", "full"):
        parts = decompose_canonical(u)
    else:
        try:
            parts = decompose_onsager(_parse_basis(args.label), u)
        except ValueError as err:
            raise CliError(str(err), code=1)
    k, h, i, j = parts.label.path
    tensor = _tensor(args)
    lines = [
        f"x_{k}{h}-like: {loop_to_str(parts.kh, tensor)}",
        f"x_{h}{i}-like: {loop_to_str(parts.hi, tensor)}",
        f"x_{i}{j}-like: {loop_to_str(parts.ij, tensor)}",
    ]
    _emit(args, "\n".join(lines), parts.to_json())
    return 0


def cmd_apply(args) -> int:
    name = args.perm.strip().lower()
    if name in GEN_PERMS:
        p = GEN_PERMS[name]
    else:
        try:
            p = Perm.parse(args.perm)
        except ValueError as err:
            raise CliError(str(err))
    value = apply_perm(p, _element_arg(args.expr))
    _emit(args, loop_to_str(value, _tensor(args)), loop_to_json(value))
    return 0


def cmd_verify(args) -> int:
    try:
        results = run_checks(args.suite, max_index=args.max_index, seed=args.seed,
                             quick=args.quick)
    except ValueError as err:
        raise CliError(str(err))
    total_p = sum(r.passed for r in results)
    total_f = sum(r.failed for r in results)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "max_index": args.max_index,
            "seed": args.seed,
            "results": [
                {"suite": r.suite, "name": r.name, "passed": r.passed,
                 "failed": r.failed, "messages": r.messages}
                for r in results
            ],
            "total_passed": total_p,
            "total_failed": total_f,
            "ok": total_f == 0,
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        for r in results:
            mark = "PASS" if r.is_pass else "FAIL"
            tail = f"{r.passed} ok" if r.is_pass else f"{r.passed} ok, {r.failed} failed"
            print(f"{mark} [{r.suite}] {r.name} ({tail})")
            for m in r.messages:
                print(f"     {m}")
        print(f"{len(results)} checks, {total_p + total_f} assertions, "
              f"{total_f} failures")
    return 0 if total_f == 0 else 1


# symbolic rows of the summary table; {T} is the tensor symbol and the center
# power runs over i = 0, 1, 2, ...
_TABLE_ROWS = {
    BasisId.UU: (
        ("B_i", "(y{T}t + z{T}(t-1)) (t-1)^i"),
        ("psi_(i+1)", "z{T}(t-1)^(i+1)"),
        ("A_i", "x{T}(t-1)^i"),
    ),
    BasisId.DD: (
        ("B_i", "(-y{T}t - z{T}(t-1)) (t-1)^i"),
        ("psi_(i+1)", "(-x{T}1 - y{T}t) (t-1)^i"),
        ("A_i", "-x{T}(t-1)^i"),
    ),
    BasisId.DU: (
        ("B_i", "(y{T}t + z{T}(t-1)) (-t)^i"),
        ("psi_(i+1)", "-y{T}(-t)^(i+1)"),
        ("A_i", "-x{T}(-t)^i"),
    ),
    BasisId.UD: (
        ("B_i", "(-y{T}t - z{T}(t-1)) (-t)^i"),
        ("psi_(i+1)", "(x{T}1 - z{T}(t-1)) (-t)^i"),
        ("A_i", "x{T}(-t)^i"),
    ),
}

# the standard generators as signed seed vectors, one column per basis
_GEN_ROWS = {
    "A": {BasisId.UU: 1, BasisId.DD: -1, BasisId.DU: -1, BasisId.UD: 1},
    "B": {BasisId.UU: 1, BasisId.DD: -1, BasisId.DU: 1, BasisId.UD: -1},
}


def _table_bases(args) -> None:
    tensor = _tensor(args)
    if args.format == "json":
        top = args.max_index
        payload = {"max_index": top, "bases": {}}
        for b in BasisId:
            fams = {}
            for family, (lo, hi) in (("B", (0, top)), ("psi", (1, top + 1)),
                                     ("A", (0, top))):
                fams[family] = {
                    "slot": list(b.slots[family]),
                    "elements": {
                        str(n): loop_to_json(basis_elem(BasisVector(b, family, n)))
                        for n in range(lo, hi + 1)
                    },
                }
            payload["bases"][b.arrows] = {"path": b.value, "families": fams}
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return
    order = ("B", "psi", "A")
    for b in BasisId:
        print(f"[{b.value}]  ({b.arrows})")
        for (label, template), family in zip(_TABLE_ROWS[b], order):
            k, h = b.slots[family]
            form = template.replace("{T}", tensor)
            print(f"  {label:<10} {form:<34} x_{k}{h}-like in O")
    print("index i runs over 0, 1, 2, ...")


def _table_generators(args) -> None:
    rows = {
        gen: {b: OCoords(b, {(gen, 0): sign}) for b, sign in by_basis.items()}
        for gen, by_basis in _GEN_ROWS.items()
    }
    if args.format == "json":
        payload = {
            "generators": {
                gen: {b.arrows: c.to_json() for b, c in by_basis.items()}
                for gen, by_basis in rows.items()
            }
        }
        print(json.dumps(payload, ensure_ascii=False, indent=2))
        return
    width = 14
    header = "gen  " + "".join(f"[{b.value}]".ljust(width) for b in BasisId)
    print(header)
    for gen in ("A", "B"):
        cells = "".join(str(rows[gen][b]).ljust(width) for b in BasisId)
        print(f"{gen}    {cells}")


def cmd_table(args) -> int:
    if args.which == "bases":
        _table_bases(args)
    else:
        _table_generators(args)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text",
                   help="output format (default text)")
    p.add_argument("--ascii", action="store_true",
                   help='write the tensor symbol as "(x)"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onsager",
        description="Exact computations in the Onsager subalgebra of the "
                    "three-point sl2 loop algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a bracket expression in A and B")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("basis", help="print one basis element")
    p.add_argument("basis", help="uu/dd/du/ud or 0312/3021/0321/3012")
    p.add_argument("family", choices=("A", "B", "psi"))
    p.add_argument("index", type=int)
    p.add_argument("--form", choices=("closed", "recursive"), default="closed")
    _add_common(p)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("convert", help="expand a basis vector in another basis")
    p.add_argument("--from", dest="src", required=True, metavar="SRC")
    p.add_argument("--to", dest="dst", required=True, metavar="DST")
    p.add_argument("family", choices=("A", "B", "psi"))
    p.add_argument("index", type=int)
    _add_common(p)
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("decompose",
                       help="split an element into its three path summands")
    p.add_argument("label", help="uu/dd/du/ud for the subalgebra, or canonical")
    p.add_argument("expr", help="bracket expression, or a JSON loop element")
    _add_common(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("apply", help="apply a point permutation to an element")
    p.add_argument("perm", help="rho/tau/mu/phi or cycles such as (03)(12)")
    p.add_argument("expr", help="bracket expression, or a JSON loop element")
    _add_common(p)
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("verify", help="run the verification checks")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-index", type=int, default=8, dest="max_index")
    p.add_argument("--seed", type=int, default=20240815)
    p.add_argument("--quick", action="store_true",
                   help="smaller random samples for a fast pass")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("table", help="print the basis summary tables")
    p.add_argument("which", choices=("bases", "generators"))
    p.add_argument("--max-index", type=int, default=3, dest="max_index",
                   help="largest A/B index in the JSON form")
    _add_common(p)
    p.set_defaults(fn=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
