"""Desk-scale verification harness.

Each check here takes a finite range, compares an identity or uniqueness
claim against exact computation, and returns a `VerificationReport` whose
counterexample payloads carry enough data (partitions, graph6 records,
full coefficient vectors) to reproduce any failure independently.

The headline check is cycle uniqueness: among disjoint unions of cycles
(the 2-regular graphs), only the one-part partition {n} reproduces
D(C_n, x); and over a complete small-order corpus, no graph at all shares
a cycle's polynomial. The ten-case table check replays the elimination
of three-part partitions at the level of first and second derivative
evaluations at -1.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from random import Random
from typing import Iterable, Iterator

from .cycles import (
    alpha,
    alpha_by_recurrence,
    a_value,
    b_value,
    b_value_by_factoring,
    beta,
    beta_by_recurrence,
    cycle_polynomial,
    ord3_classification,
    theta,
    theta_by_recurrence,
)
from .errors import Graph6FormatError, Graph6ParseError, ParameterDomainError, SizeGuardError
from .graphs import Graph, cycle, disjoint_union, parse_graph6, path, wheel
from .oracle import DEFAULT_GUARD, domination_number, domination_polynomial
from .polynomials import IntPolynomial, ord_p

__all__ = [
    "LEMMA_IDS",
    "LEMMA_DESCRIPTIONS",
    "VerificationReport",
    "EquivalenceClassReport",
    "CorpusClassification",
    "enumerate_partitions",
    "partition_polynomial",
    "verify_union_product",
    "verify_cycle_recurrence",
    "verify_gamma_additivity_and_ceiling",
    "verify_alpha",
    "verify_beta",
    "verify_theta",
    "verify_ord3_table",
    "verify_remark",
    "verify_cycle_uniqueness",
    "verify_cycle_uniqueness_range",
    "verify_ten_case_table",
    "classify_corpus",
    "verify_wheel_uniqueness",
    "verify_path_class",
    "run_all",
]

DEFAULT_CORPUS_GUARD = 9

LEMMA_IDS = (
    "L2-union",
    "L3-cycle",
    "L4-gamma",
    "L5-alpha",
    "L6-ord3",
    "R1-remark",
    "REL2-beta",
    "REL3-theta",
    "T5-partitions",
    "T5-ten-cases",
    "COR-wheel",
    "P-path-class",
)

LEMMA_DESCRIPTIONS = {
    "L2-union": "domination polynomial of a disjoint union equals the product over components",
    "L3-cycle": "three-term cycle recurrence reproduces the brute-force cycle polynomial",
    "L4-gamma": "gamma(C_n) = ceil(n/3), and gamma adds over cycle partitions",
    "L5-alpha": "D(C_n,-1) closed form (3 when 4|n, else -1)",
    "L6-ord3": "ord_3 of D(C_n,-3) follows the ceil(n/3) table; 9 never divides b_n",
    "R1-remark": "mod-27 residues {4,13,22} pin down the ambiguous ord_3 branch; b mod 9 has period 27",
    "REL2-beta": "D'(C_n,-1) closed form (-n, n, 0, 0 by n mod 4)",
    "REL3-theta": "D''(C_n,-1) closed form by n mod 4",
    "T5-partitions": "only the trivial cycle partition reproduces D(C_n,x)",
    "T5-ten-cases": "every alpha-compatible part triple falls in the 10-case table and is eliminated",
    "COR-wheel": "the wheel's polynomial-equivalence class over a complete corpus is a singleton",
    "P-path-class": "the path's class has exactly two members; the companion construction realizes it",
}


@dataclass
class VerificationReport:
    lemma_id: str
    range_checked: tuple[int, int]
    status: str
    counterexamples: list[dict]
    timing_ms: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out = {
            "lemma_id": self.lemma_id,
            "range": list(self.range_checked),
            "status": self.status,
            "counterexamples": self.counterexamples,
            "timing_ms": self.timing_ms,
        }
        if self.details:
            out["details"] = self.details
        return out


def _report(lemma_id, lo, hi, counterexamples, t0, details=None) -> VerificationReport:
    return VerificationReport(
        lemma_id=lemma_id,
        range_checked=(lo, hi),
        status="pass" if not counterexamples else "fail",
        counterexamples=counterexamples,
        timing_ms=int((time.perf_counter() - t0) * 1000),
        details=details or {},
    )


def _poly_json(p: IntPolynomial) -> list[str]:
    return p.coefficient_strings()


# ---------------------------------------------------------------------------
# Cycle partitions
# ---------------------------------------------------------------------------

def enumerate_partitions(n: int, min_part: int = 3) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts >= min_part, non-increasing,
    in decreasing lexicographic order. min_part is 3 (cycle components of
    a simple 2-regular graph) or 1 (the C_1=K_1, C_2=K_2 convention)."""
    if min_part not in (1, 3):
        raise ParameterDomainError(f"min_part must be 1 or 3, got {min_part}")
    if n < 1:
        raise ParameterDomainError(f"partition target must be >= 1, got {n}")

    def rec(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), min_part - 1, -1):
            rest = remaining - first
            if rest and rest < min_part:
                continue
            for tail in rec(rest, first):
                yield (first,) + tail

    return rec(n, n)


def partition_polynomial(parts: Iterable[int]) -> IntPolynomial:
    """Product of cycle polynomials over the parts (1 for no parts)."""
    result = IntPolynomial.one()
    for p in parts:
        result = result * cycle_polynomial(p)
    return result


# ---------------------------------------------------------------------------
# Identity checks over the cycle family
# ---------------------------------------------------------------------------

def _random_graph(rng: Random, max_order: int) -> Graph:
    n = rng.randint(1, max_order)
    p = rng.choice((0.15, 0.3, 0.5, 0.7, 0.85))
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def verify_union_product(
    pairs: int = 200, max_order: int = 8, seed: int = 20250810, guard: int = DEFAULT_GUARD
) -> VerificationReport:
    """D(G + H) == D(G) * D(H) on random pairs, both sides brute force."""
    t0 = time.perf_counter()
    rng = Random(seed)
    bad = []
    for i in range(pairs):
        g = _random_graph(rng, max_order)
        h = _random_graph(rng, max_order)
        combined = domination_polynomial(disjoint_union(g, h), guard=guard)
        product = domination_polynomial(g, guard=guard) * domination_polynomial(h, guard=guard)
        if combined != product:
            bad.append({
                "pair_index": i,
                "g_edges": g.edges(), "g_order": g.n,
                "h_edges": h.edges(), "h_order": h.n,
                "union_polynomial": _poly_json(combined),
                "product_polynomial": _poly_json(product),
            })
    return _report("L2-union", 1, max_order, bad, t0, {"pairs": pairs, "seed": seed})


def verify_cycle_recurrence(n_max: int = 15) -> VerificationReport:
    """Recurrence D(C_n) against the subset-enumeration oracle."""
    t0 = time.perf_counter()
    bad = []
    for n in range(1, n_max + 1):
        by_recurrence = cycle_polynomial(n)
        by_oracle = domination_polynomial(cycle(n))
        if by_recurrence != by_oracle:
            bad.append({
                "n": n,
                "recurrence": _poly_json(by_recurrence),
                "oracle": _poly_json(by_oracle),
            })
    return _report("L3-cycle", 1, n_max, bad, t0)


def verify_gamma_additivity_and_ceiling(n_max: int = 15) -> VerificationReport:
    """gamma(C_n) = ceil(n/3) by oracle, plus additivity over partitions.

    Three sub-checks: the oracle value for n <= min(n_max, 15); the ceiling
    identity on any partition whose polynomial matches D(C_n) (only the
    trivial one ever does); and, for every cycle partition of n <= 20, the
    lowest nonzero coefficient index of the partition polynomial equals
    the sum of per-part ceilings.
    """
    t0 = time.perf_counter()
    bad = []
    for n in range(1, min(n_max, 15) + 1):
        got = domination_number(cycle(n))
        if got != (n + 2) // 3:
            bad.append({"check": "oracle-gamma", "n": n, "gamma": got})
    for n in range(3, n_max + 1):
        target = cycle_polynomial(n)
        for parts in enumerate_partitions(n, 3):
            if partition_polynomial(parts) == target:
                ceilings = sum((p + 2) // 3 for p in parts)
                if ceilings != (n + 2) // 3:
                    bad.append({
                        "check": "ceiling-identity", "n": n, "partition": list(parts),
                    })
    for n in range(3, min(n_max, 20) + 1):
        for parts in enumerate_partitions(n, 3):
            poly = partition_polynomial(parts)
            lowest = next(i for i, c in enumerate(poly) if c != 0)
            if lowest != sum((p + 2) // 3 for p in parts):
                bad.append({
                    "check": "partition-gamma", "n": n, "partition": list(parts),
                    "lowest_index": lowest,
                    "polynomial": _poly_json(poly),
                })
    return _report("L4-gamma", 1, n_max, bad, t0)


def _scalar_identity_report(lemma_id, n_max, closed_form, by_recurrence, derivative_order):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, n_max + 1):
        p = cycle_polynomial(n)
        for _ in range(derivative_order):
            p = p.derivative()
        evaluated = p.eval_at(-1)
        cf = closed_form(n)
        rec = by_recurrence(n)
        if not (cf == rec == evaluated):
            bad.append({
                "n": n, "closed_form": str(cf), "recurrence": str(rec),
                "evaluation": str(evaluated),
            })
    return _report(lemma_id, 1, n_max, bad, t0)


def verify_alpha(n_max: int = 200) -> VerificationReport:
    return _scalar_identity_report("L5-alpha", n_max, alpha, alpha_by_recurrence, 0)


def verify_beta(n_max: int = 200) -> VerificationReport:
    return _scalar_identity_report("REL2-beta", n_max, beta, beta_by_recurrence, 1)


def verify_theta(n_max: int = 200) -> VerificationReport:
    return _scalar_identity_report("REL3-theta", n_max, theta, theta_by_recurrence, 2)


# First 30 values of b_n mod 9; the golden vector the b recurrence must hit.
_B_MOD9_FIRST_30 = (
    1, 1, 3, 3, 7, 6, 2, 7, 3, 7, 7, 3, 3, 4, 6,
    5, 4, 3, 4, 4, 3, 3, 1, 6, 8, 1, 3, 1, 1, 3,
)


def verify_ord3_table(n_max: int = 1000) -> VerificationReport:
    """ord_3(a_n) stays within the three-branch table; b_n basics.

    Checks, for every n in range: ord_3(a_n) is ceil(n/3)+1 when 3 | n,
    ceil(n/3) when n = 3k+2, and one of the two when n = 3k+1; b_n from
    the recurrence equals b_n from factoring a_n; 9 does not divide b_n;
    and the first 30 values of b_n mod 9 equal the golden vector.
    """
    t0 = time.perf_counter()
    bad = []
    for n in range(1, n_max + 1):
        base = (n + 2) // 3
        got = ord_p(a_value(n), 3)
        allowed = {0: {base + 1}, 1: {base, base + 1}, 2: {base}}[n % 3]
        if got not in allowed:
            bad.append({"check": "ord3-bound", "n": n, "ord3": got, "allowed": sorted(allowed)})
        b_rec = b_value(n)
        b_fac = b_value_by_factoring(n)
        if b_rec != b_fac:
            bad.append({"check": "b-routes", "n": n, "recurrence": str(b_rec), "factoring": str(b_fac)})
        if b_rec % 9 == 0:
            bad.append({"check": "nine-divides-b", "n": n, "b": str(b_rec)})
    for n in range(1, min(n_max, 30) + 1):
        if b_value(n) % 9 != _B_MOD9_FIRST_30[n - 1]:
            bad.append({
                "check": "golden-vector", "n": n,
                "b_mod_9": b_value(n) % 9, "expected": _B_MOD9_FIRST_30[n - 1],
            })
    return _report("L6-ord3", 1, n_max, bad, t0)


def verify_remark(n_max: int = 1000) -> VerificationReport:
    """The exact ord_3 classification and the mod-9 period of b.

    b_{t+27} == b_t (mod 9) for all t with t+27 in range, and
    ord_3(a_n) equals the predicted value, where the n = 3k+1 branch is
    resolved by n mod 27 in {4, 13, 22}.
    """
    t0 = time.perf_counter()
    bad = []
    for t in range(1, n_max - 27 + 1):
        if (b_value(t + 27) - b_value(t)) % 9 != 0:
            bad.append({"check": "period-27", "t": t,
                        "b_t_mod_9": b_value(t) % 9, "b_t27_mod_9": b_value(t + 27) % 9})
    for n in range(1, n_max + 1):
        predicted = ord3_classification(n).predicted_ord
        got = ord_p(a_value(n), 3)
        if got != predicted:
            bad.append({"check": "exact-ord3", "n": n, "ord3": got, "predicted": predicted})
    return _report("R1-remark", 1, n_max, bad, t0)


# ---------------------------------------------------------------------------
# Uniqueness among unions of cycles
# ---------------------------------------------------------------------------

def verify_cycle_uniqueness(n: int, min_part: int = 3) -> VerificationReport:
    """Exactly one partition of n (the trivial {n}) reproduces D(C_n,x)."""
    if n < 3:
        raise ParameterDomainError(f"cycle uniqueness check needs n >= 3, got {n}")
    t0 = time.perf_counter()
    target = cycle_polynomial(n)
    matches = []
    total = 0
    for parts in enumerate_partitions(n, min_part):
        total += 1
        if partition_polynomial(parts) == target:
            matches.append(parts)
    bad = [
        {
            "n": n,
            "partition": list(parts),
            "partition_polynomial": _poly_json(partition_polynomial(parts)),
            "cycle_polynomial": _poly_json(target),
        }
        for parts in matches
        if parts != (n,)
    ]
    if (n,) not in matches:
        bad.append({"n": n, "error": "trivial partition did not match itself"})
    return _report(
        "T5-partitions", n, n, bad, t0,
        {"partitions_checked": total, "min_part": min_part},
    )


def verify_cycle_uniqueness_range(
    n_min: int = 3, n_max: int = 40, min_part: int = 3
) -> VerificationReport:
    t0 = time.perf_counter()
    bad = []
    total = 0
    for n in range(n_min, n_max + 1):
        rep = verify_cycle_uniqueness(n, min_part)
        bad.extend(rep.counterexamples)
        total += rep.details["partitions_checked"]
    return _report(
        "T5-partitions", n_min, n_max, bad, t0,
        {"partitions_checked": total, "min_part": min_part},
    )


# The ten admissible residue patterns for n = n1+n2+n3 (everything mod 4),
# keyed by (n mod 4, sorted part residues). A triple is alpha-compatible
# exactly when its pattern is one of these.
TEN_CASES = {
    (0, (0, 1, 3)): 1,
    (0, (0, 2, 2)): 2,
    (1, (1, 1, 3)): 3,
    (1, (1, 2, 2)): 4,
    (1, (3, 3, 3)): 5,
    (2, (1, 2, 3)): 6,
    (2, (2, 2, 2)): 7,
    (3, (1, 1, 1)): 8,
    (3, (1, 3, 3)): 9,
    (3, (2, 2, 3)): 10,
}

# Cases eliminated at the first-derivative level; the remaining two (7 and
# 10) have identically-zero betas on both sides and fall only at the
# second derivative.
_BETA_ELIMINATED = frozenset({1, 2, 3, 4, 5, 6, 8, 9})


def _triples(n_max: int) -> Iterator[tuple[int, int, int]]:
    for n1 in range(3, n_max - 5 + 1):
        for n2 in range(3, n1 + 1):
            for n3 in range(3, n2 + 1):
                if n1 + n2 + n3 <= n_max:
                    yield (n1, n2, n3)


def verify_ten_case_table(n_max: int = 60) -> VerificationReport:
    """Three-part partitions: table completeness and case elimination.

    For every triple of parts >= 3 with sum <= n_max: the product
    polynomial never equals D(C_n,x); every alpha-compatible triple's
    residue pattern is one of the ten cases; triples in cases 1-6, 8, 9
    mismatch at the first-derivative (Leibniz) evaluation at -1, and
    triples in cases 7 and 10 pass that but mismatch at the second
    derivative.
    """
    t0 = time.perf_counter()
    bad = []
    case_counts = {k: 0 for k in range(1, 11)}
    compatible = 0
    total = 0
    for n1, n2, n3 in _triples(n_max):
        total += 1
        n = n1 + n2 + n3
        if partition_polynomial((n1, n2, n3)) == cycle_polynomial(n):
            bad.append({
                "check": "product-equals-cycle", "n": n, "partition": [n1, n2, n3],
            })
        a1, a2, a3 = alpha(n1), alpha(n2), alpha(n3)
        if alpha(n) != a1 * a2 * a3:
            continue
        compatible += 1
        pattern = (n % 4, tuple(sorted((n1 % 4, n2 % 4, n3 % 4))))
        case = TEN_CASES.get(pattern)
        if case is None:
            bad.append({
                "check": "pattern-outside-table", "n": n,
                "partition": [n1, n2, n3], "pattern": [pattern[0], list(pattern[1])],
            })
            continue
        case_counts[case] += 1
        b1, b2, b3 = beta(n1), beta(n2), beta(n3)
        beta_product = b1 * a2 * a3 + a1 * b2 * a3 + a1 * a2 * b3
        beta_matches = beta_product == beta(n)
        if case in _BETA_ELIMINATED:
            if beta_matches:
                bad.append({
                    "check": "beta-unexpectedly-matches", "n": n, "case": case,
                    "partition": [n1, n2, n3], "beta_product": str(beta_product),
                })
            continue
        # Cases 7 and 10: betas vanish on both sides, so the first
        # derivative cannot separate; the second one must.
        if not beta_matches:
            bad.append({
                "check": "beta-unexpectedly-differs", "n": n, "case": case,
                "partition": [n1, n2, n3], "beta_product": str(beta_product),
            })
            continue
        theta_product = (
            theta(n1) * a2 * a3 + a1 * theta(n2) * a3 + a1 * a2 * theta(n3)
            + 2 * (b1 * b2 * a3 + b1 * b3 * a2 + b2 * b3 * a1)
        )
        if theta_product == theta(n):
            bad.append({
                "check": "theta-matches", "n": n, "case": case,
                "partition": [n1, n2, n3],
                "theta_product": str(theta_product), "theta_n": str(theta(n)),
            })
    return _report(
        "T5-ten-cases", 9, n_max, bad, t0,
        {
            "triples_checked": total,
            "alpha_compatible": compatible,
            "case_counts": {str(k): v for k, v in case_counts.items()},
        },
    )


# ---------------------------------------------------------------------------
# Corpus classification
# ---------------------------------------------------------------------------

@dataclass
class EquivalenceClassReport:
    key_polynomial: IntPolynomial
    members: list[str]

    @property
    def class_size(self) -> int:
        return len(self.members)

    def to_json_dict(self) -> dict:
        return {
            "key_polynomial": _poly_json(self.key_polynomial),
            "class_size": self.class_size,
            "members": self.members,
        }


@dataclass
class CorpusClassification:
    classes: list[EquivalenceClassReport]
    parse_errors: list[dict]

    def class_of(self, poly: IntPolynomial) -> EquivalenceClassReport | None:
        for cls in self.classes:
            if cls.key_polynomial == poly:
                return cls
        return None

    def to_json_dict(self) -> dict:
        return {
            "classes": [c.to_json_dict() for c in self.classes],
            "parse_errors": self.parse_errors,
        }


def _record_text(record: bytes | str) -> str:
    if isinstance(record, bytes):
        return record.decode("ascii", errors="replace")
    return record


def _poly_key(job) -> tuple[int, ...]:
    g, guard = job
    return domination_polynomial(g, guard=guard).coeffs


def classify_corpus(
    records: Iterable[bytes | str],
    *,
    threads: int = 1,
    corpus_guard: int = DEFAULT_CORPUS_GUARD,
    guard: int = DEFAULT_GUARD,
) -> CorpusClassification:
    """Group graph6 records into exact polynomial-equivalence classes.

    Per-record parse failures are collected, not fatal. An order above
    `corpus_guard` (default 9; a full order-10 corpus is ~12M graphs) is
    fatal, since it means the whole file is at the wrong scale.

    Classes come back sorted by descending size, then by key polynomial
    (degree, then coefficients); members are sorted strings, so output is
    deterministic regardless of input order or worker count.
    """
    parsed: list[tuple[str, Graph]] = []
    errors: list[dict] = []
    for idx, rec in enumerate(records):
        try:
            g = parse_graph6(rec)
        except (Graph6ParseError, Graph6FormatError) as exc:
            errors.append({
                "index": idx,
                "record": _record_text(rec),
                "error": str(exc),
            })
            continue
        if g.n > corpus_guard:
            raise SizeGuardError(
                f"corpus record {idx} has order {g.n} above the corpus guard "
                f"({corpus_guard}); raise it via corpus_guard (CLI: --guard-override)"
            )
        parsed.append((_record_text(rec), g))

    jobs = [(g, guard) for _, g in parsed]
    if threads > 1 and len(jobs) > 256:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            keys = list(pool.map(_poly_key, jobs, chunksize=256))
    else:
        keys = [_poly_key(job) for job in jobs]

    groups: dict[tuple[int, ...], list[str]] = {}
    for (text, _), key in zip(parsed, keys):
        groups.setdefault(key, []).append(text)

    classes = [
        EquivalenceClassReport(IntPolynomial(key), sorted(members))
        for key, members in groups.items()
    ]
    classes.sort(key=lambda c: (-c.class_size, c.key_polynomial.degree, c.key_polynomial.coeffs))
    return CorpusClassification(classes, errors)


def verify_wheel_uniqueness(
    n: int,
    records: Iterable[bytes | str],
    *,
    threads: int = 1,
    corpus_guard: int = DEFAULT_CORPUS_GUARD,
) -> VerificationReport:
    """Over a complete order-n corpus, W_n's class must be a singleton."""
    if n < 4:
        raise ParameterDomainError(f"wheel uniqueness needs n >= 4, got {n}")
    t0 = time.perf_counter()
    target = domination_polynomial(wheel(n))
    result = classify_corpus(records, threads=threads, corpus_guard=corpus_guard)
    cls = result.class_of(target)
    bad = []
    if cls is None:
        bad.append({"n": n, "error": "corpus contains no graph with the wheel polynomial",
                    "wheel_polynomial": _poly_json(target)})
    elif cls.class_size != 1:
        bad.append({
            "n": n, "class_size": cls.class_size, "members": cls.members,
            "wheel_polynomial": _poly_json(target),
        })
    details = {"corpus_size": sum(c.class_size for c in result.classes),
               "parse_errors": len(result.parse_errors)}
    return _report("COR-wheel", n, n, bad, t0, details)


def path_companion(n: int, variant: str) -> Graph:
    """The order-n companion candidates: a cycle of order n-2 plus two new
    vertices attached to two adjacent cycle vertices.

    variant "one-each": each new vertex is joined to one of the two
    adjacent cycle vertices. variant "both-to-both": both new vertices
    are joined to both.
    """
    if n < 6:
        raise ParameterDomainError(f"companion construction needs n >= 6, got {n}")
    base = cycle(n - 2)
    extra = {
        "one-each": [(n - 2, 0), (n - 1, 1)],
        "both-to-both": [(n - 2, 0), (n - 2, 1), (n - 1, 0), (n - 1, 1)],
    }[variant]
    return Graph.from_edges(n, base.edges() + extra)


def verify_path_class(
    n: int,
    records: Iterable[bytes | str],
    *,
    threads: int = 1,
    corpus_guard: int = DEFAULT_CORPUS_GUARD,
) -> VerificationReport:
    """P_n (for 3 | n) has a class of exactly two members over the corpus.

    Both companion constructions are built and compared against D(P_n) by
    brute force; the report records which variant (if either) matches, so
    the construction is decided by computation rather than assumption.
    """
    if n % 3 != 0 or n < 6:
        raise ParameterDomainError(
            f"path class check needs n >= 6 with 3 | n, got {n}"
        )
    t0 = time.perf_counter()
    target = domination_polynomial(path(n))
    variant_matches = {}
    for variant in ("one-each", "both-to-both"):
        companion = path_companion(n, variant)
        variant_matches[variant] = domination_polynomial(companion) == target

    result = classify_corpus(records, threads=threads, corpus_guard=corpus_guard)
    cls = result.class_of(target)
    bad = []
    size = 0 if cls is None else cls.class_size
    if size != 2:
        bad.append({
            "n": n,
            "class_size": size,
            "members": [] if cls is None else cls.members,
            "path_polynomial": _poly_json(target),
        })
    if not any(variant_matches.values()):
        bad.append({
            "n": n,
            "error": "neither companion construction matches the path polynomial",
            "path_polynomial": _poly_json(target),
        })
    return _report(
        "P-path-class", n, n, bad, t0,
        {"companion_variant_matches": variant_matches},
    )


# ---------------------------------------------------------------------------
# Full suite
# ---------------------------------------------------------------------------

def run_all(
    *,
    corpora: dict[int, list[bytes]] | None = None,
    threads: int = 1,
) -> list[VerificationReport]:
    """Run every check at its default range.

    `corpora` maps graph order to graph6 records of the complete corpus
    of that order; the corpus-backed checks (COR-wheel, P-path-class) run
    for the orders provided and are omitted otherwise.
    """
    reports = [
        verify_union_product(),
        verify_cycle_recurrence(),
        verify_gamma_additivity_and_ceiling(),
        verify_alpha(),
        verify_beta(),
        verify_theta(),
        verify_ord3_table(),
        verify_remark(),
        verify_cycle_uniqueness_range(),
        verify_ten_case_table(),
    ]
    if corpora:
        for n in sorted(corpora):
            if n >= 4:
                reports.append(
                    verify_wheel_uniqueness(n, corpora[n], threads=threads)
                )
        for n in sorted(corpora):
            if n >= 6 and n % 3 == 0:
                reports.append(
                    verify_path_class(n, corpora[n], threads=threads)
                )
    return reports
