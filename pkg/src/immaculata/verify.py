"""Exhaustive verification suites, each comparing a combinatorial rule
against an independent algebraic computation up to a degree bound."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import nsym, qsym, sym, tableaux
from .compositions import (
    composition_of_subset,
    compositions_of,
    descent_set,
    partitions_of,
)

DEFAULT_MAX_N = 6
MAX_REPORTED = 10

Check = tuple[str, bool]


@dataclass
class SuiteResult:
    name: str
    max_n: int
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "suite": self.name,
            "max_n": self.max_n,
            "instances": self.instances,
            "failures": self.failures[:MAX_REPORTED],
            "failure_count": len(self.failures),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def default_max_n() -> int:
    value = os.environ.get("IMMACULATA_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def _h_product_in_s(left, right) -> nsym.NSymElement:
    """Reference product: multiply H expansions, then rewrite in S."""
    return nsym.h_to_s(nsym.h_multiply(left, right))


def _label(*parts) -> str:
    return " ".join(str(list(p)) if isinstance(p, tuple) else str(p) for p in parts)


# suites

def check_pieri(max_n: int) -> Iterator[Check]:
    for total in range(1, max_n + 1):
        for s in range(1, total + 1):
            for alpha in compositions_of(total - s):
                rule = nsym.pieri_multiply(alpha, s)
                oracle = _h_product_in_s(nsym.immaculate_to_h(alpha), nsym.H(s))
                yield _label("pieri", tuple(alpha), "s=", s), rule == oracle


def check_jacobi_trudi(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for alpha in compositions_of(n):
            yield _label("jacobi-trudi", tuple(alpha)), nsym.immaculate_to_h(alpha) == nsym.jacobi_trudi_h(alpha)


def check_kostka(max_n: int) -> Iterator[Check]:
    """Positivity, unitriangularity in lex order, agreement of the two
    counting routes, and the H -> S -> H round trip."""
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        for beta in comps:
            column = tableaux.kostka_by_shape(beta)
            for alpha in comps:
                k = tableaux.kostka_immaculate(alpha, beta)
                ok = k >= 0 and k == column.get(alpha, 0)
                if alpha == beta:
                    ok = ok and k == 1
                elif alpha < beta:
                    ok = ok and k == 0
                yield _label("kostka", tuple(alpha), tuple(beta)), ok
        for alpha in comps:
            back = nsym.h_to_s(nsym.immaculate_to_h(alpha))
            yield _label("kostka round-trip", tuple(alpha)), back == nsym.S(*alpha)


def check_ribbon(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        for beta in comps:
            rule = nsym.ribbon_to_immaculate(beta)
            oracle = nsym.h_to_s(nsym.ribbon_to_h(beta))
            ok = rule == oracle and all(c > 0 for c in rule.terms.values())
            yield _label("ribbon", tuple(beta)), ok
        for alpha in comps:
            total = sum(c for (shape, _), c in tableaux.descent_table(n).items() if shape == alpha)
            yield _label("ribbon SIT total", tuple(alpha)), total == len(tableaux.standard_immaculate_tableaux(alpha))


def check_duality(max_n: int) -> Iterator[Check]:
    """<S_a, S*_b> = delta through the H/M route, the F expansion of S*,
    and the signed decomposition of Schur functions."""
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        for alpha in comps:
            f = nsym.S(*alpha)
            for beta in comps:
                value = qsym.pairing(f, qsym.Sstar(*beta))
                yield _label("duality", tuple(alpha), tuple(beta)), value == (1 if alpha == beta else 0)
            via_f = qsym.change_basis(qsym.dual_immaculate_to_fundamental(alpha), "M")
            yield _label("dual fundamental", tuple(alpha)), via_f == qsym.dual_immaculate_to_monomial(alpha)
        for lam in partitions_of(n):
            signed = qsym.change_basis(qsym.schur_to_dual_immaculate(lam), "M")
            oracle = qsym.embed_symmetric(sym.schur_to_h(lam))
            yield _label("schur decomposition", tuple(lam)), signed == oracle


def check_lr(max_n: int) -> Iterator[Check]:
    for total in range(1, max_n + 1):
        for size in range(1, total + 1):
            for lam in partitions_of(size):
                right = nsym.immaculate_to_h(lam)
                for alpha in compositions_of(total - size):
                    rule = nsym.lr_multiply(alpha, lam)
                    oracle = _h_product_in_s(nsym.immaculate_to_h(alpha), right)
                    ok = rule == oracle and all(c > 0 for c in rule.terms.values())
                    yield _label("lr", tuple(alpha), tuple(lam)), ok


def check_mn(max_n: int) -> Iterator[Check]:
    for total in range(1, max_n + 1):
        for k in range(1, total + 1):
            for alpha in compositions_of(total - k):
                rule = nsym.mn_multiply(alpha, k, normalize=True)
                oracle = _h_product_in_s(nsym.immaculate_to_h(alpha), nsym.psi_to_h(k))
                yield _label("mn", tuple(alpha), "k=", k), rule == oracle


def check_projection(max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        for alpha in compositions_of(n):
            yield _label("projection", tuple(alpha)), sym.forgetful(nsym.S(*alpha)) == sym.schur_to_h(alpha)
    for n in range(1, max_n + 2):
        yield _label("power sum", n), sym.h_to_p(sym.forgetful(nsym.Psi(n))) == sym.p(n)


def check_counts(max_n: int) -> Iterator[Check]:
    """Standard tableaux against Bell numbers; compositions against 2^(n-1)
    and the descent-set bijection."""
    for n in range(max_n + 1):
        yield _label("bell", n), len(tableaux.standard_tableaux_of_size(n)) == bell_number(n)
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        ok = len(comps) == 2 ** (n - 1) and all(composition_of_subset(descent_set(a), n) == a for a in comps)
        yield _label("compositions", n), ok


def bell_number(n: int) -> int:
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


SUITES: dict[str, Callable[[int], Iterator[Check]]] = {
    "pieri": check_pieri,
    "jacobi-trudi": check_jacobi_trudi,
    "kostka": check_kostka,
    "ribbon": check_ribbon,
    "duality": check_duality,
    "lr": check_lr,
    "mn": check_mn,
    "projection": check_projection,
}


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    max_n = default_max_n() if max_n is None else max_n
    result = SuiteResult(name, max_n)
    start = time.perf_counter()
    for label, ok in SUITES[name](max_n):
        result.instances += 1
        if not ok:
            result.failures.append(label)
    result.elapsed_ms = (time.perf_counter() - start) * 1000
    return result


def run(name: str, max_n: int | None = None) -> list[SuiteResult]:
    """Run one suite, or every suite in a fixed order for ``"all"``."""
    names = list(SUITES) if name == "all" else [name]
    return [run_suite(n, max_n) for n in names]
