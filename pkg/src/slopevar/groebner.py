"""Wheel generators and exact checks of the Gröbner, degree and Hilbert claims."""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import List, Optional

from .complex import (contains_forbidden_path, facet_count_formula, facets,
                      minimal_forbidden_edge_sets)
from .errors import (CompletionBudgetExceeded, ReductionFailure, ScaleLimit,
                     VerificationFailure)
from .graph import Wheel, complete_graph, wheels_in_complete_graph
from .polynomial import (Polynomial, TermOrder, is_squarefree, mono_coprime,
                         mono_degree, mono_divides, mono_edges, mono_from_edges,
                         mono_lcm, normalize_sign, pseudo_remainder, reduce,
                         s_polynomial)
from .shelling import h_vector
from .treepoly import leading_tree, tree_polynomial, wheel_polynomial


@dataclass
class GeneratorSet:
    """Sign-normalised wheel polynomials, one per wheel edge set."""

    wheels: List[Wheel]
    polynomials: List[Polynomial]
    order: TermOrder

    def __len__(self):
        return len(self.polynomials)

    def leading_monomials(self) -> list:
        return [p.leading_monomial(self.order) for p in self.polynomials]

    def check(self) -> None:
        for p in self.polynomials:
            lm, lc = p.leading_term(self.order)
            if not p.is_homogeneous() or lc != 1 or not is_squarefree(lm):
                raise VerificationFailure("generator invariant broken", witness=p.to_text())


def wheel_generators(n: int, order: Optional[TermOrder] = None) -> GeneratorSet:
    order = order or TermOrder(n=n)
    wheels = wheels_in_complete_graph(n)
    polys = [normalize_sign(wheel_polynomial(W), order) for W in wheels]
    return GeneratorSet(wheels, polys, order)


def fingerprint(p: Polynomial, order: TermOrder) -> str:
    return hashlib.sha256(p.to_text(order).encode()).hexdigest()[:16]


def _pair_schedule(polys, order):
    """Pairs by increasing lcm degree, then increasing lcm in the term order."""
    leads = [p.leading_monomial(order) for p in polys]
    pairs = []
    for i, j in combinations(range(len(polys)), 2):
        lcm = mono_lcm(leads[i], leads[j])
        pairs.append((mono_degree(lcm), order.key(lcm), i, j))
    pairs.sort()
    return [(i, j) for _, _, i, j in pairs], leads


def _reduce_pair(args):
    i, j, f, g, basis, order = args
    s = s_polynomial(f, g, order)
    stats = {}
    _, r = reduce(s, basis, order, stats)
    return i, j, len(s), stats["steps"], stats["max_terms"], r.to_text(order) if r else ""


def certify_groebner(n: int, order: Optional[TermOrder] = None, allow_slow: bool = False,
                     jobs: int = 1) -> dict:
    """Reduce every S-polynomial of the wheel generators; all remainders must vanish."""
    if n < 4:
        raise ScaleLimit("need n >= 4")
    if n > 5 and not allow_slow:
        raise ScaleLimit("n > 5 needs allow_slow")
    order = order or TermOrder(n=n)
    gens = wheel_generators(n, order)
    gens.check()
    polys = gens.polynomials
    schedule, leads = _pair_schedule(polys, order)
    outcomes = []
    skipped = 0
    work = []
    for i, j in schedule:
        if mono_coprime(leads[i], leads[j]):
            skipped += 1
            outcomes.append({"pair": [i, j], "outcome": "coprime-skip"})
            continue
        work.append((i, j, polys[i], polys[j], polys, order))
    if jobs > 1 and work:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_reduce_pair, work, chunksize=8))
    else:
        results = [_reduce_pair(w) for w in work]
    max_terms = 0
    for i, j, s_terms, steps, peak, rem in results:
        max_terms = max(max_terms, s_terms, peak)
        if rem:
            raise ReductionFailure(f"S-polynomial of generators {i} and {j} leaves {rem}",
                                   witness={"pair": [i, j], "remainder": rem})
        outcomes.append({"pair": [i, j], "outcome": "zero", "steps": steps})
    outcomes.sort(key=lambda o: tuple(o["pair"]))
    return {
        "n": n,
        "order": order.kind,
        "generators": len(polys),
        "generator_hashes": [fingerprint(p, order) for p in polys],
        "pairs": len(schedule),
        "coprime_skipped": skipped,
        "reduced_to_zero": len(results),
        "max_intermediate_terms": max_terms,
        "pair_outcomes": outcomes,
        "verified": True,
    }


def minimal_sets(sets) -> set:
    sets = sorted(set(sets), key=len)
    out = []
    for s in sets:
        if not any(t <= s for t in out):
            out.append(s)
    return set(out)


def leading_ideal_matches_forbidden_paths(n: int, order: Optional[TermOrder] = None) -> bool:
    """Minimal leading monomials of the generators are exactly the minimal forbidden paths."""
    order = order or TermOrder(n=n)
    gens = wheel_generators(n, order)
    lead_sets = [mono_edges(m) for m in gens.leading_monomials()]
    return minimal_sets(lead_sets) == minimal_forbidden_edge_sets(n, order.kind)


def leading_trees_match(n: int, order: Optional[TermOrder] = None) -> int:
    """Check the combinatorial leading tree of every wheel; returns the number checked."""
    order = order or TermOrder(n=n)
    count = 0
    for W in wheels_in_complete_graph(n):
        p = wheel_polynomial(W)
        if mono_from_edges(leading_tree(W, order)) != p.leading_monomial(order):
            raise VerificationFailure(f"leading tree mismatch for {W}", witness=str(W))
        count += 1
    return count


def standard_monomial_degree(n: int) -> int:
    """Number of facets, which is the degree of the leading-term ideal."""
    if n > 8:
        raise ScaleLimit("facet enumeration supports n <= 8")
    count = len(facets(n))
    if count != facet_count_formula(n):
        raise VerificationFailure(f"facet count {count} disagrees with the closed form")
    return count


def standard_monomial_counts(n: int, max_degree: int, order: Optional[TermOrder] = None) -> list:
    """Monomials of each degree divisible by no generator leading monomial."""
    order = order or TermOrder(n=n)
    leads = wheel_generators(n, order).leading_monomials()
    variables = sorted(complete_graph(n))
    out = []
    for d in range(max_degree + 1):
        count = 0
        for combo in combinations_with_replacement(variables, d):
            exps = {}
            for e in combo:
                exps[e] = exps.get(e, 0) + 1
            m = tuple(sorted(exps.items()))
            if not any(mono_divides(lm, m) for lm in leads):
                count += 1
        out.append(count)
    return out


def hilbert_function_from_h(h: list, dim: int, max_degree: int) -> list:
    """Coefficients of ``sum h_k t^k / (1-t)^dim`` up to ``t^max_degree``."""
    return [sum(hk * comb(d - k + dim - 1, dim - 1) for k, hk in enumerate(h) if k <= d)
            for d in range(max_degree + 1)]


def hilbert_consistency(n: int, max_degree: int = 4) -> bool:
    counts = standard_monomial_counts(n, max_degree)
    expected = hilbert_function_from_h(h_vector(n, "shelling"), 2 * n - 3, max_degree)
    return counts == expected


def slope_configuration(n: int, rng: random.Random, bound: int = 50) -> dict:
    """Slopes of lines through ``n`` random integer points with distinct x-coordinates."""
    xs = rng.sample(range(-bound, bound + 1), n)
    ys = [rng.randint(-bound, bound) for _ in range(n)]
    return {(i + 1, j + 1): Fraction(ys[j] - ys[i], xs[j] - xs[i])
            for i in range(n) for j in range(i + 1, n)}


def vanishes_on_slope_locus(polys, n: int, samples: int = 100, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(samples):
        point = slope_configuration(n, rng)
        for p in polys:
            if p.evaluate(point) != 0:
                return False
    return True


def k4_polynomials(n: int, order: Optional[TermOrder] = None) -> list:
    order = order or TermOrder(n=n)
    out = []
    for quad in combinations(range(1, n + 1), 4):
        C = complete_graph(quad)
        out.append(normalize_sign(tree_polynomial(C), order).primitive(order))
    return out


def k4_generation_probe(n: int, max_pairs: int = 4000, max_basis: int = 200,
                        max_terms: int = 2000, order: Optional[TermOrder] = None) -> dict:
    """Complete the K4 polynomials to a Gröbner basis and reduce every wheel polynomial.

    Works over the rationals with fraction-free arithmetic.  Raises
    :class:`CompletionBudgetExceeded` when a budget is exhausted.
    """
    if n < 4:
        raise ScaleLimit("need n >= 4")
    order = order or TermOrder(n=n)
    basis = k4_polynomials(n, order)
    start = len(basis)
    leads = [g.leading_monomial(order) for g in basis]
    pairs = [(i, j) for i, j in combinations(range(len(basis)), 2)]
    processed = skipped = 0
    while pairs:
        pairs.sort(key=lambda ij: (mono_degree(mono_lcm(leads[ij[0]], leads[ij[1]])),
                                   order.key(mono_lcm(leads[ij[0]], leads[ij[1]]))),
                   reverse=True)
        i, j = pairs.pop()
        if mono_coprime(leads[i], leads[j]):
            skipped += 1
            continue
        # chain criterion: some other leading monomial divides the lcm and
        # both companion pairs are already gone
        lcm = mono_lcm(leads[i], leads[j])
        pending = set(pairs)
        if any(k not in (i, j) and mono_divides(leads[k], lcm)
               and (min(i, k), max(i, k)) not in pending
               and (min(j, k), max(j, k)) not in pending
               for k in range(len(basis))):
            skipped += 1
            continue
        processed += 1
        if processed > max_pairs:
            raise CompletionBudgetExceeded(f"more than {max_pairs} pairs")
        r, _ = pseudo_remainder(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r:
            continue
        r = r.primitive(order)
        if len(r) > max_terms:
            raise CompletionBudgetExceeded(f"intermediate polynomial with {len(r)} terms")
        basis.append(r)
        leads.append(r.leading_monomial(order))
        if len(basis) > max_basis:
            raise CompletionBudgetExceeded(f"basis grew past {max_basis}")
        new = len(basis) - 1
        pairs.extend((k, new) for k in range(new))
    wheels = wheel_generators(n, order)
    nonzero = []
    for W, p in zip(wheels.wheels, wheels.polynomials):
        r, _ = pseudo_remainder(p, basis, order)
        if r:
            nonzero.append(str(W))
    return {
        "n": n,
        "order": order.kind,
        "k4_generators": start,
        "basis_size": len(basis),
        "pairs_processed": processed,
        "pairs_skipped": skipped,
        "wheels": len(wheels),
        "nonzero_remainders": nonzero,
        "all_zero": not nonzero,
    }


def is_forbidden_monomial(m) -> bool:
    """True when a monomial lies in the ideal generated by forbidden-path monomials."""
    return contains_forbidden_path(mono_edges(m)) is not None
