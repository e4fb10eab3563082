"""Division, Buchberger's algorithm, elimination, and initial ideals.

All computations are exact.  Buchberger uses the normal selection strategy
(smallest lcm degree first) with the coprimality and chain criteria, a hard
cap on processed S-pairs, and a guard on coefficient size; hitting either cap
raises ``BudgetExceededError`` instead of returning a truncated basis.
"""

from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, DomainError, RingMismatchError
from .orders import Block, GrevLex, TermOrder, Weighted
from .polyring import (Polynomial, mono_deg, mono_div, mono_divides,
                       mono_gcd_is_one, mono_lcm)

DEFAULT_SPAIR_CAP = 10**6
DEFAULT_COEFF_BITS = 1_000_000


def default_spair_cap():
    raw = os.environ.get("VERONESE_GB_BUDGET")
    return int(raw) if raw else DEFAULT_SPAIR_CAP


@dataclass
class Budget:
    """Resource caps; counters survive across the calls sharing the budget."""

    spair_cap: int = None
    coeff_bits: int = DEFAULT_COEFF_BITS
    spairs: int = 0

    def __post_init__(self):
        if self.spair_cap is None:
            self.spair_cap = default_spair_cap()

    def charge_spair(self):
        self.spairs += 1
        if self.spairs > self.spair_cap:
            raise BudgetExceededError(
                f"S-pair budget of {self.spair_cap} exhausted")

    def check_coeff(self, c):
        if c.numerator.bit_length() + c.denominator.bit_length() > self.coeff_bits:
            raise BudgetExceededError("coefficient size cap exceeded")


def _support_mask(exps):
    mask = 0
    for i, x in enumerate(exps):
        if x:
            mask |= 1 << i
    return mask


class _DivisorIndex:
    """Picks, for a monomial, the dividing basis element with least leading term.

    Entries live in buckets named by the smallest position in their leading
    term's support and carry a support bitmask, so a lookup scans only the
    buckets of the target's support and drops most candidates with a single
    integer test.
    """

    def __init__(self, order):
        self.order = order
        self.buckets = {}
        self.entries = []  # (lt_key, seq, lt_exps, poly, support_mask)

    def add(self, poly):
        lt, _ = poly.leading_term(self.order)
        seq = len(self.entries)
        entry = (self.order.key(lt), seq, lt, poly, _support_mask(lt))
        self.entries.append(entry)
        slot = next((i for i, x in enumerate(lt) if x), -1)
        self.buckets.setdefault(slot, []).append(entry)

    def find(self, exps):
        best = None
        const = self.buckets.get(-1)
        if const:
            best = const[0]
        outside = ~_support_mask(exps)
        for i, x in enumerate(exps):
            if not x:
                continue
            for entry in self.buckets.get(i, ()):
                if not entry[4] & outside and \
                        (best is None or entry[:2] < best[:2]) and \
                        mono_divides(entry[2], exps):
                    best = entry
        return best

    def iter_divisor_seqs(self, exps):
        """Sequence numbers of entries whose leading term divides, lazily."""
        const = self.buckets.get(-1)
        if const:
            for entry in const:
                yield entry[1]
        outside = ~_support_mask(exps)
        for i, x in enumerate(exps):
            if not x:
                continue
            for entry in self.buckets.get(i, ()):
                if not entry[4] & outside and mono_divides(entry[2], exps):
                    yield entry[1]


def _content_scale(values):
    """The positive scalar turning the values into coprime integers."""
    num = den = 0
    for c in values:
        num = math.gcd(num, c.numerator)
        den = math.lcm(den, c.denominator) if den else c.denominator
    if not num:
        return Fraction(1)
    return Fraction(den, num)


def _rescale_content(p, r):
    """Divide both halves by their joint content (overall positive scalar)."""
    scale = _content_scale(list(p.values()) + list(r.values()))
    if scale == 1:
        return p, r
    return ({e: c * scale for e, c in p.items()},
            {e: c * scale for e, c in r.items()})


def _primitive(poly, order):
    """Content-free integer scalar multiple with a positive leading coefficient."""
    scale = _content_scale(poly.terms.values())
    if poly.leading_term(order)[1] < 0:
        scale = -scale
    return poly * scale if scale != 1 else poly


def _reduce_terms(terms, index, order, budget=None, scale_ok=False):
    """Remainder of the term dict against the indexed divisors.

    With ``scale_ok`` the result is only guaranteed up to a positive scalar:
    long division chains get their content stripped periodically, which keeps
    coefficient growth additive instead of compounding (the basis elements
    are monic, so their fractional tails would otherwise pile up).
    """
    p = dict(terms)
    r = {}
    key = order.key
    steps = 0
    while p:
        u = max(p, key=key)
        c = p.pop(u)
        hit = index.find(u)
        if hit is None:
            r[u] = c
            continue
        lt, g = hit[2], hit[3]
        shift = mono_div(u, lt)
        factor = c / g.terms[lt]
        if budget is not None:
            budget.check_coeff(factor)
        for e, ce in g.terms.items():
            if e == lt:
                continue
            m = tuple(a + b for a, b in zip(e, shift))
            v = p.get(m, 0) - factor * ce
            if v:
                p[m] = v
            else:
                p.pop(m, None)
        if scale_ok:
            steps += 1
            if steps % 16 == 0:
                p, r = _rescale_content(p, r)
    return r


def normal_form(f, divisors, order, budget=None):
    """Remainder of f on division by the divisor list.

    No remainder term is divisible by any divisor's leading term; when the
    divisors form a Gröbner basis the result is the canonical normal form.
    The divisor picked at each step is the dividing element with the least
    leading term, so the remainder is deterministic.
    """
    index = _DivisorIndex(order)
    for g in sorted(divisors, key=lambda g: order.key(g.leading_term(order)[0])):
        if g.ring != f.ring:
            raise RingMismatchError("divisor lives in a different ring")
        if not g:
            raise DomainError("zero polynomial among divisors")
        index.add(g)
    return Polynomial(f.ring, _reduce_terms(f.terms, index, order, budget),
                      _clean=True)


def s_polynomial(f, g, order):
    """lcm(lt f, lt g)/lt(f) * f - lcm/lt(g) * g with monic multipliers."""
    if f.ring != g.ring:
        raise RingMismatchError("S-polynomial of polynomials in different rings")
    if not f or not g:
        raise DomainError("S-polynomial of the zero polynomial")
    ltf, cf = f.leading_term(order)
    ltg, cg = g.leading_term(order)
    lcm = mono_lcm(ltf, ltg)
    return f.mul_term(Fraction(1) / cf, mono_div(lcm, ltf)) \
        - g.mul_term(Fraction(1) / cg, mono_div(lcm, ltg))


@dataclass
class GBStats:
    spairs: int = 0
    skipped_coprime: int = 0
    skipped_chain: int = 0
    basis_peak: int = 0


def buchberger(generators, order, *, budget=None, seed_gb=None, stats=None):
    """Reduced Gröbner basis of the generated ideal, ascending by leading term.

    ``seed_gb`` may carry a list already known to be a Gröbner basis under
    ``order``; its internal S-pairs are then skipped.
    """
    if budget is None:
        budget = Budget()
    if stats is None:
        stats = GBStats()
    generators = list(generators)
    ring = generators[0].ring if generators else None
    if seed_gb:
        ring = seed_gb[0].ring

    basis = []            # (poly, lt_exps, lt_key)
    index = None
    done = set()
    # Selection: smallest lcm under the order (what the tie-sensitive plain
    # lex case needs), except that elimination blocks go degree-first inside
    # the queue, which empirically keeps the joint-ring runs shallow.
    if isinstance(order, Block):
        def selection_key(lcm):
            return (mono_deg(lcm), order.key(lcm))
    else:
        def selection_key(lcm):
            return (order.key(lcm), mono_deg(lcm))
    queue = []            # heap of (selection_key(lcm), i, j)

    def push_pairs(j):
        ltj = basis[j][1]
        for i in range(j):
            lti = basis[i][1]
            if mono_gcd_is_one(lti, ltj):
                stats.skipped_coprime += 1
                done.add((i, j))
                continue
            lcm = mono_lcm(lti, ltj)
            heapq.heappush(queue, (selection_key(lcm), i, j))

    def append(poly):
        lt, _ = poly.leading_term(order)
        basis.append((poly, lt, order.key(lt)))
        index.add(poly)
        push_pairs(len(basis) - 1)
        stats.basis_peak = max(stats.basis_peak, len(basis))

    if ring is None:
        return ()
    index = _DivisorIndex(order)
    if seed_gb:
        for g in seed_gb:
            lt, _ = g.leading_term(order)
            basis.append((g, lt, order.key(lt)))
            index.add(g)
        m = len(basis)
        done.update((i, j) for j in range(m) for i in range(j))
    for f in generators:
        if f.ring != ring:
            raise RingMismatchError("generators live in different rings")
        if not f:
            continue
        r = Polynomial(ring,
                       _reduce_terms(f.terms, index, order, budget,
                                     scale_ok=True),
                       _clean=True)
        if r:
            append(_primitive(r, order))

    while queue:
        _, i, j = heapq.heappop(queue)
        if (i, j) in done:
            continue
        done.add((i, j))
        lcm = mono_lcm(basis[i][1], basis[j][1])
        chained = False
        for k in index.iter_divisor_seqs(lcm):
            if k != i and k != j and \
                    (min(i, k), max(i, k)) in done and \
                    (min(j, k), max(j, k)) in done:
                chained = True
                break
        if chained:
            stats.skipped_chain += 1
            continue
        budget.charge_spair()
        stats.spairs += 1
        s = s_polynomial(basis[i][0], basis[j][0], order)
        r = Polynomial(ring,
                       _reduce_terms(s.terms, index, order, budget,
                                     scale_ok=True),
                       _clean=True)
        if r:
            append(_primitive(r, order))

    return _reduce_basis([b[0] for b in basis], order)


def _reduce_basis(polys, order):
    """Minimalize and tail-reduce a Gröbner basis; output is monic, ascending."""
    entries = sorted(((order.key(p.leading_term(order)[0]),
                       p.leading_term(order)[0], p) for p in polys if p),
                     key=lambda t: t[0])
    kept = []
    for key_, lt, p in entries:
        if any(mono_divides(klt, lt) for _, klt in kept):
            continue
        kept.append((p, lt))
    out = []
    for i, (p, lt) in enumerate(kept):
        others = [q for j, (q, _) in enumerate(kept) if j != i]
        r = normal_form(p, others, order) if others else p
        out.append(r.monic(order))
    out.sort(key=lambda p: order.key(p.leading_term(order)[0]))
    return tuple(out)


@dataclass
class GBCheck:
    """Outcome of an S-pair closure check."""

    ok: bool
    spairs: int
    pair: tuple = None
    remainder: Polynomial = None


def is_groebner_basis(polys, order, *, budget=None, skip_coprime=True):
    """True when every S-pair reduces to zero; returns the witness otherwise."""
    polys = [p for p in polys if p]
    if budget is None:
        budget = Budget()
    count = 0
    for j in range(len(polys)):
        ltj, _ = polys[j].leading_term(order)
        for i in range(j):
            lti, _ = polys[i].leading_term(order)
            if skip_coprime and mono_gcd_is_one(lti, ltj):
                continue
            budget.charge_spair()
            count += 1
            r = normal_form(s_polynomial(polys[i], polys[j], order), polys, order,
                            budget)
            if r:
                return GBCheck(False, count, (polys[i], polys[j]), r)
    return GBCheck(True, count)


def eliminate(generators, front, back_ring, back_order, *, budget=None,
              seed_gb=None, stats=None):
    """Intersect the ideal with the subring on the trailing variables.

    The generators live in a ring whose first ``front`` positions are the
    variables to remove.  Returns the reduced Gröbner basis of the
    intersection under ``back_order``, re-indexed into ``back_ring``.
    """
    generators = list(generators)
    if generators and back_ring.nvars + front != generators[0].ring.nvars:
        raise DomainError("front block plus back ring must span the joint ring")
    order = Block(front, GrevLex(front), back_order)
    gb = buchberger(generators, order, budget=budget, seed_gb=seed_gb, stats=stats)
    position_map = [-1] * front + list(range(back_ring.nvars))
    out = []
    for g in gb:
        if all(all(x == 0 for x in e[:front]) for e in g.terms):
            out.append(g.map_positions(back_ring, position_map))
    return tuple(out)


# ---------------------------------------------------------------------------
# monomial ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal held by its minimal generators (a divisibility antichain)."""

    ring: object
    gens: tuple

    @classmethod
    def from_exponents(cls, ring, exps_iter):
        cands = sorted({tuple(e) for e in exps_iter},
                       key=lambda e: (mono_deg(e), e))
        kept = []
        for e in cands:
            if not any(mono_divides(g, e) for g in kept):
                kept.append(e)
        return cls(ring, tuple(kept))

    @property
    def is_zero(self):
        return not self.gens

    def contains(self, exps):
        return any(mono_divides(g, exps) for g in self.gens)

    def max_total_degree(self):
        """Largest total degree among the minimal generators."""
        if self.is_zero:
            raise DomainError("undefined for the zero ideal")
        return max(mono_deg(g) for g in self.gens)

    def max_exponent(self):
        """Largest single exponent appearing in any minimal generator."""
        if self.is_zero:
            raise DomainError("undefined for the zero ideal")
        return max(max(g) for g in self.gens)

    def polynomials(self):
        return tuple(self.ring.monomial(g) for g in self.gens)

    def __contains__(self, exps):
        return self.contains(exps)


# ---------------------------------------------------------------------------
# ideals with cached reduced bases


class Ideal:
    """Generator list plus a cache of reduced Gröbner bases keyed by order."""

    __slots__ = ("ring", "generators", "_cache")

    def __init__(self, ring, generators=()):
        object.__setattr__(self, "ring", ring)
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator outside the ideal's ring")
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Ideal is immutable")

    def groebner_basis(self, order, budget=None, seed_gb=None):
        gb = self._cache.get(order)
        if gb is None:
            gb = buchberger(self.generators, order, budget=budget, seed_gb=seed_gb)
            self._cache[order] = gb
        return gb

    def normal_form(self, f, order, budget=None):
        return normal_form(f, self.groebner_basis(order, budget), order)

    def contains(self, f, order=None, budget=None):
        if order is None:
            order = self.ring.default_order()
        return not self.normal_form(f, order, budget)

    def initial_ideal(self, order, budget=None):
        gb = self.groebner_basis(order, budget)
        return MonomialIdeal.from_exponents(
            self.ring, (g.leading_term(order)[0] for g in gb))

    def initial_forms(self, weights, tie=None, budget=None):
        """Ideal spanned by the top-weight forms of a weighted-order basis.

        Returns (ideal, flag); the flag reports whether every form is a single
        term, i.e. whether the weight initial ideal is monomial.
        """
        if tie is None:
            tie = self.ring.default_order()
        worder = Weighted(tuple(weights), tie)
        gb = self.groebner_basis(worder, budget)
        forms = [g.initial_form(weights) for g in gb]
        monomial = all(f.is_monomial() for f in forms)
        return Ideal(self.ring, forms), monomial

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(repr(g) for g in self.generators)


def initial_ideal(ideal, order_or_weights, budget=None):
    """Initial ideal for a term order, or initial-form ideal for a weight vector."""
    if isinstance(order_or_weights, TermOrder):
        return ideal.initial_ideal(order_or_weights, budget)
    return ideal.initial_forms(tuple(order_or_weights), budget=budget)


# ---------------------------------------------------------------------------
# weight vector synthesis (exact Fourier-Motzkin)


def _fm_feasible_point(rows, n):
    """A rational point with coeffs . x >= rhs for every row, or None."""
    systems = [None] * (n + 1)
    systems[n] = [(tuple(Fraction(c) for c in cs), Fraction(r)) for cs, r in rows]
    for k in range(n - 1, -1, -1):
        cur = systems[k + 1]
        nxt = []
        pos = [r for r in cur if r[0][k] > 0]
        neg = [r for r in cur if r[0][k] < 0]
        nxt.extend(r for r in cur if r[0][k] == 0)
        for cp, rp in pos:
            for cm, rm in neg:
                a, b = -cm[k], cp[k]
                coeffs = tuple(a * x + b * y for x, y in zip(cp, cm))
                nxt.append((coeffs, a * rp + b * rm))
        systems[k] = nxt
    for coeffs, rhs in systems[0]:
        if rhs > 0:
            return None
    point = []
    for k in range(n):
        lo, hi = None, None
        for coeffs, rhs in systems[k + 1]:
            ck = coeffs[k]
            if ck == 0:
                continue
            rest = sum(c * v for c, v in zip(coeffs[:k], point))
            bound = (rhs - rest) / ck
            if ck > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is None:
            v = Fraction(0) if hi is None or hi >= 0 else hi
        else:
            v = Fraction(math.ceil(lo))
            if hi is not None and v > hi:
                v = (lo + hi) / 2
        point.append(v)
    return tuple(point)


def find_weight_vector(ideal, order, budget=None):
    """A positive integer weight vector reproducing the order's initial terms.

    For every element of the reduced basis under ``order``, the returned
    vector puts the leading monomial strictly on top; the choice is made by
    Fourier-Motzkin elimination and verified before returning.
    """
    gb = ideal.groebner_basis(order, budget)
    n = ideal.ring.nvars
    rows = set()
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        rows.add((unit, 1))
    for g in gb:
        lt, _ = g.leading_term(order)
        for e in g.terms:
            if e != lt:
                rows.add((tuple(a - b for a, b in zip(lt, e)), 1))
    point = _fm_feasible_point(sorted(rows), n)
    if point is None:
        raise RuntimeError("weight system unexpectedly infeasible")
    scale = math.lcm(*[Fraction(v).denominator for v in point])
    omega = tuple(int(v * scale) for v in point)
    for g in gb:
        lt, _ = g.leading_term(order)
        form = g.initial_form(omega)
        if list(form.terms) != [lt]:
            raise RuntimeError("weight vector failed post-hoc verification")
    return omega
