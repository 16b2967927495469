"""Command-line front end.

    immaculata expand S:2,3 --to H
    immaculata product S:2,3 H:3 --out S
    immaculata tableaux --shape 4,2,3 --content 3,1,2,3
    immaculata pair S:2,3 Sstar:2,3
    immaculata verify pieri --max-n 6

Exit status: 0 on success, 1 when a verification suite fails, 2 on usage,
parse or conversion errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from . import nsym, qsym, sym, tableaux, verify
from ._combination import LinearCombination
from .compositions import Composition, format_index, is_partition, parse_index

NSYM_BASES = set(nsym.NSymElement.BASES)
QSYM_BASES = set(qsym.QSymElement.BASES)
SYM_BASES = {"s", "h"}
INPUT_BASES = NSYM_BASES | QSYM_BASES | SYM_BASES
TARGET_BASES = NSYM_BASES | QSYM_BASES | set(sym.SymElement.BASES)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class ExpansionReport:
    command: str
    inputs: dict[str, Any]
    result: Any = None
    rule: Optional[str] = None
    elapsed_ms: float = 0.0
    suites: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        obj: dict[str, Any] = {"command": self.command, "inputs": self.inputs}
        if self.rule is not None:
            obj["rule"] = self.rule
        if self.result is not None:
            obj["result"] = self.result
        if self.command == "verify":
            obj["suites"] = self.suites
            obj["failures"] = self.failures
        obj["elapsed_ms"] = round(self.elapsed_ms, 3)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def parse_element(text: str) -> LinearCombination:
    """Parse ``"B:a,b,c"`` into the basis element B_{a,b,c}."""
    basis, sep, index_text = text.partition(":")
    if not sep:
        raise UsageError(f"expected <Basis>:<index>, got {text!r}")
    if basis not in INPUT_BASES:
        raise UsageError(f"unknown basis {basis!r}; expected one of {', '.join(sorted(INPUT_BASES))}")
    try:
        index = parse_index(index_text)
        if basis in NSYM_BASES:
            return nsym.NSymElement.basis_element(basis, index)
        if basis in QSYM_BASES:
            return qsym.QSymElement.basis_element(basis, index)
        if basis == "s":
            straight = sym.schur_straighten(index)
            if straight is None:
                return sym.SymElement("s")
            sign, lam = straight
            return sym.SymElement("s", {lam: sign})
        return sym.h(*index)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def convert(element: LinearCombination, target: str) -> LinearCombination:
    if target not in TARGET_BASES:
        raise UsageError(f"unknown target basis {target!r}")
    try:
        if isinstance(element, nsym.NSymElement):
            if target in NSYM_BASES:
                return nsym.change_basis(element, target)
            if target == "h":
                return sym.forgetful(element)
        elif isinstance(element, qsym.QSymElement):
            if target in QSYM_BASES:
                return qsym.change_basis(element, target)
        elif isinstance(element, sym.SymElement):
            return _convert_sym(element, target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"no conversion path from {element.basis} to {target}")


def _convert_sym(element: sym.SymElement, target: str) -> LinearCombination:
    if target == element.basis:
        return element
    if target in QSYM_BASES:
        return qsym.change_basis(qsym.embed_symmetric(element), target)
    h = sym.s_to_h(element) if element.basis == "s" else element
    if h.basis != "h":
        raise UsageError(f"no conversion path from {element.basis} to {target}")
    if target == "h":
        return h
    if target == "p":
        return sym.h_to_p(h)
    if target == "m":
        return sym.h_to_m(h)
    raise UsageError(f"no conversion path from {element.basis} to {target}")


def _single(element: LinearCombination) -> tuple[int, ...]:
    (index,) = element.terms
    return index


def multiply(left: LinearCombination, right: LinearCombination, normalize: bool = True) -> tuple[LinearCombination, str, Optional[str]]:
    """Product of two basis elements with the best applicable rule.

    Returns (product, rule name, warning or None).
    """
    if isinstance(left, nsym.NSymElement) and isinstance(right, nsym.NSymElement):
        a, b = _single(left), _single(right)
        if left.basis == "S" and left.is_composition_indexed():
            if right.basis == "H" and len(b) == 1:
                return nsym.pieri_multiply(a, b[0]), "pieri", None
            if right.basis == "S" and b and is_partition(b):
                return nsym.lr_multiply(a, b), "littlewood-richardson", None
            if right.basis == "Psi" and len(b) == 1:
                return nsym.mn_multiply(a, b[0], normalize=normalize), "murnaghan-nakayama", None
        product = nsym.h_multiply(nsym.change_basis(left, "H"), nsym.change_basis(right, "H"))
        if left.basis == right.basis == "H":
            return product, "h-concatenation", None
        return product, "h-basis", "warning: no positive product rule applies; computed through the H basis"
    if isinstance(left, qsym.QSymElement) and isinstance(right, qsym.QSymElement):
        if left.basis == right.basis == "M":
            return left * right, "quasi-shuffle", None
        raise UsageError("QSym products are only supported between M basis elements")
    raise UsageError(f"unsupported product of {left.basis} and {right.basis}")


def render(element: LinearCombination, fmt: str) -> str:
    if fmt == "latex":
        return element.to_latex()
    return element.to_text()


# commands

def cmd_expand(args) -> int:
    start = time.perf_counter()
    element = parse_element(args.expr)
    target = args.to or element.basis
    result = convert(element, target)
    report = ExpansionReport("expand", {"expr": args.expr, "to": target}, result.to_json_obj())
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    _emit(args.format, report, lambda: render(result, args.format))
    return EXIT_OK


def cmd_product(args) -> int:
    start = time.perf_counter()
    left, right = parse_element(args.left), parse_element(args.right)
    product, rule, warning = multiply(left, right, normalize=not args.no_normalize)
    if args.out and not (args.out == "S" and product.basis == "S"):
        product = convert(product, args.out)
    if warning:
        print(warning, file=sys.stderr)
    inputs = {"left": args.left, "right": args.right, "out": product.basis, "normalize": not args.no_normalize}
    report = ExpansionReport("product", inputs, product.to_json_obj(), rule)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    if args.format == "text":
        print(f"rule: {rule}", file=sys.stderr)
    _emit(args.format, report, lambda: render(product, args.format))
    return EXIT_OK


def cmd_pair(args) -> int:
    start = time.perf_counter()
    left, right = parse_element(args.left), parse_element(args.right)
    if not isinstance(left, nsym.NSymElement) or not isinstance(right, qsym.QSymElement):
        raise UsageError("pair takes an NSym element then a QSym element")
    value = qsym.pairing(left, right)
    report = ExpansionReport("pair", {"left": args.left, "right": args.right}, str(value))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    _emit(args.format, report, lambda: str(value))
    return EXIT_OK


def cmd_tableaux(args) -> int:
    start = time.perf_counter()
    try:
        shape = Composition(parse_index(args.shape))
        if args.standard:
            content = (1,) * shape.size
        elif args.content is not None:
            content = parse_index(args.content)
        else:
            raise UsageError("give --content or --standard")
        found = tableaux.enumerate_immaculate_tableaux(shape, content)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    descents = None
    if args.descents:
        if not args.standard:
            raise UsageError("--descents needs --standard")
        descents = [tableaux.descent_composition(t) for t in found]
    result = {"tableaux": [t.to_json_obj() for t in found], "count": len(found)}
    if descents is not None:
        result["descents"] = [list(d) for d in descents]
    report = ExpansionReport("tableaux", {"shape": list(shape), "content": list(content)}, result)
    report.elapsed_ms = (time.perf_counter() - start) * 1000

    def text() -> str:
        blocks = []
        for i, t in enumerate(found):
            block = _latex_tableau(t) if args.format == "latex" else t.render()
            if descents is not None:
                block += f"\ndescent composition: [{format_index(descents[i])}]"
            blocks.append(block)
        blocks.append(f"count: {len(found)}")
        return "\n\n".join(blocks)

    _emit(args.format, report, text)
    return EXIT_OK


def _latex_tableau(t: tableaux.ImmaculateTableau) -> str:
    rows = [" & ".join(str(x) for x in r) for r in t.rows]
    width = max(len(r) for r in t.rows) if t.rows else 1
    return "\\begin{array}{" + "l" * width + "}\n" + " \\\\\n".join(rows) + "\n\\end{array}"


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(list(verify.SUITES) + ['all'])}")
    max_n = args.max_n if args.max_n is not None else verify.default_max_n()
    start = time.perf_counter()
    results = verify.run(args.suite, max_n)
    failures = [f for r in results for f in r.failures][: verify.MAX_REPORTED]
    report = ExpansionReport("verify", {"suite": args.suite, "max_n": max_n})
    report.suites = [r.to_json_obj() for r in results]
    report.failures = failures
    report.elapsed_ms = (time.perf_counter() - start) * 1000

    def text() -> str:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name}: {status} ({r.instances} instances, max n {r.max_n}, {r.elapsed_ms:.0f} ms)")
        for f in failures:
            lines.append(f"  counterexample: {f}")
        return "\n".join(lines)

    _emit("text" if args.format == "latex" else args.format, report, text)
    return EXIT_OK if not failures else EXIT_FAIL


def _emit(fmt: str, report: ExpansionReport, text) -> None:
    if fmt == "json":
        print(report.to_json())
    else:
        print(text())


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "latex"], default="text")

    parser = _Parser(prog="immaculata", description="Immaculate basis computations in NSym and QSym.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="expand a basis element in another basis")
    p.add_argument("expr", help="basis element, e.g. S:2,3 (bases: H R Psi S M F Sstar s h)")
    p.add_argument("--to", help="target basis")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("product", parents=[common], help="multiply two basis elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out", help="basis of the result")
    p.add_argument("--no-normalize", action="store_true", help="keep zero-padded indices from the Murnaghan-Nakayama rule")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("pair", parents=[common], help="evaluate the pairing of an NSym and a QSym element")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("tableaux", parents=[common], help="list immaculate tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--content")
    p.add_argument("--standard", action="store_true")
    p.add_argument("--descents", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", help=f"one of {', '.join(list(verify.SUITES) + ['all'])}")
    p.add_argument("--max-n", type=int, default=None, help="degree bound (default 6, or $IMMACULATA_MAX_N)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"immaculata: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"immaculata: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
