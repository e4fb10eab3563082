"""Veronese rings: the degree-d monomial substitution and ideal pullbacks.

The degree-d ring has one variable per multi-index of total degree d; the
substitution sends each variable to the matching base-ring monomial, so the
preimage of an ideal presents the degree-d piece of the base quotient.  The
substitution kernel carries an explicit quadratic binomial basis under the
chain revlex order, which this module constructs, certifies against an
elimination oracle, and extends to pullbacks of monomial and of general
homogeneous ideals, with the degree bound that keeps everything quadratic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import DomainError, NonMonomialInitialError, RingMismatchError
from .groebner import (Budget, Ideal, MonomialIdeal, _reduce_basis, buchberger,
                       eliminate, is_groebner_basis, normal_form)
from .orders import Block, GammaRevLex, GrevLex, Weighted, multi_indices
from .polyring import (Polynomial, base_ring, joint_ring, mono_divides,
                       veronese_ring)


@dataclass(frozen=True)
class VeroneseMap:
    """The substitution sending each degree-d variable to its base monomial."""

    s: int
    d: int

    def __post_init__(self):
        if self.s < 1 or self.d < 1:
            raise DomainError(f"need s >= 1 and d >= 1, got s={self.s}, d={self.d}")
        object.__setattr__(self, "ring", veronese_ring(self.s, self.d))
        object.__setattr__(self, "base", base_ring(self.s))
        object.__setattr__(self, "order", GammaRevLex(self.s, self.d))

    def image_exps(self, u):
        """Exponent vector of the image monomial in the base ring."""
        c = [0] * self.s
        for pos, mult in enumerate(u):
            if mult:
                a = self.ring.indices[pos]
                for j in range(self.s):
                    c[j] += mult * a[j]
        return tuple(c)

    def image(self, poly):
        if poly.ring != self.ring:
            raise RingMismatchError("polynomial is not in the Veronese ring")
        out = self.base.zero
        for e, coeff in poly.terms.items():
            out = out + self.base.monomial(self.image_exps(e), coeff)
        return out

    def min_divisor_variable(self, u, order=None):
        """Least variable whose image divides the image of the monomial u."""
        if not any(u):
            raise DomainError("the constant monomial has no dividing variable")
        c = self.image_exps(u)
        return self.min_divisor_of_image(c, order)

    def min_divisor_of_image(self, c, order=None):
        """Least variable whose image divides the base monomial c."""
        positions = range(self.ring.nvars)
        if order is not None and order != self.order:
            units = [tuple(1 if j == i else 0 for j in range(self.ring.nvars))
                     for i in positions]
            positions = sorted(positions, key=lambda i: order.key(units[i]))
        for i in positions:
            if mono_divides(self.ring.indices[i], c):
                return self.ring.indices[i]
        raise DomainError("no variable image divides the given monomial")

    def min_preimage(self, c):
        """The chain-least monomial of the Veronese ring mapping onto c.

        Peels off the least dividing variable one factor at a time, which for
        a revlex order is exactly the minimum preimage.
        """
        total = sum(c)
        if total % self.d:
            raise DomainError("degree must be a multiple of d to lift")
        rem = list(c)
        exps = [0] * self.ring.nvars
        pos_of = self.ring.position
        for _ in range(total // self.d):
            a = self.min_divisor_of_image(tuple(rem))
            exps[pos_of["x[%s]" % ",".join(map(str, a))]] += 1
            for j in range(self.s):
                rem[j] -= a[j]
        return tuple(exps)

    def lift(self, poly):
        """Termwise minimum preimage of a base polynomial of d-divisible degrees."""
        terms = {}
        for e, coeff in poly.terms.items():
            u = self.min_preimage(e)
            terms[u] = terms.get(u, 0) + coeff
        return Polynomial(self.ring, terms)


@lru_cache(maxsize=None)
def exchange_binomials(s, d):
    """All nonzero quadratic exchange binomials, deduplicated and oriented.

    For every pair of degree-(d-1) indices and positions i < j, the product
    of the two bumped variables equals the cross-bumped product in the base
    ring; the difference is normalized so its leading term has coefficient +1
    under the chain revlex order.
    """
    vmap = VeroneseMap(s, d)
    ring, order = vmap.ring, vmap.order
    pos_of = ring.position

    def bump(a, i):
        b = list(a)
        b[i] += 1
        return pos_of["x[%s]" % ",".join(map(str, b))]

    def pair_exps(p, q):
        e = [0] * ring.nvars
        e[p] += 1
        e[q] += 1
        return tuple(e)

    seen = set()
    out = []
    lower = multi_indices(s, d - 1) if d > 1 else ((0,) * s,)
    for a in lower:
        for b in lower:
            for i in range(s):
                for j in range(i + 1, s):
                    u = pair_exps(bump(a, i), bump(b, j))
                    v = pair_exps(bump(a, j), bump(b, i))
                    if u == v:
                        continue
                    mark = (u, v) if u < v else (v, u)
                    if mark in seen:
                        continue
                    seen.add(mark)
                    if order.key(u) < order.key(v):
                        u, v = v, u
                    out.append(Polynomial(ring, {u: Fraction(1), v: Fraction(-1)}))
    out.sort(key=lambda g: (order.key(g.leading_term(order)[0]),
                            sorted(g.terms)))
    return tuple(out)


@lru_cache(maxsize=None)
def kernel_groebner_basis(s, d):
    """Reduced basis of the substitution kernel under the chain revlex order.

    Interreduces the exchange binomials; that they form a Gröbner basis is
    certified separately by :func:`verify_exchange_basis`.
    """
    vmap = VeroneseMap(s, d)
    return _reduce_basis(list(exchange_binomials(s, d)), vmap.order)


@lru_cache(maxsize=None)
def kernel_initial(s, d):
    """Leading-term ideal of the kernel under the chain revlex order."""
    vmap = VeroneseMap(s, d)
    gb = kernel_groebner_basis(s, d)
    return MonomialIdeal.from_exponents(
        vmap.ring, (g.leading_term(vmap.order)[0] for g in gb))


# ---------------------------------------------------------------------------
# elimination oracle


def _graph_generators(vmap):
    """Generators tying each Veronese variable to its image, in the joint ring."""
    joint = joint_ring(vmap.base, vmap.ring)
    s = vmap.s
    gens = []
    for i, a in enumerate(vmap.ring.indices):
        e_x = [0] * joint.nvars
        e_x[s + i] = 1
        e_y = tuple(a) + (0,) * vmap.ring.nvars
        gens.append(Polynomial(joint, {tuple(e_x): Fraction(1),
                                       e_y: Fraction(-1)}))
    return joint, gens


@lru_cache(maxsize=None)
def _joint_graph_gb(s, d):
    """Reduced basis of the graph ideal under the elimination block order."""
    vmap = VeroneseMap(s, d)
    joint, gens = _graph_generators(vmap)
    order = Block(s, GrevLex(s), vmap.order)
    return buchberger(gens, order)


@lru_cache(maxsize=None)
def kernel_oracle_basis(s, d):
    """Kernel reduced basis recomputed by elimination, independent of the
    constructive route."""
    vmap = VeroneseMap(s, d)
    gb = _joint_graph_gb(s, d)
    position_map = [-1] * s + list(range(vmap.ring.nvars))
    out = []
    for g in gb:
        if all(all(x == 0 for x in e[:s]) for e in g.terms):
            out.append(g.map_positions(vmap.ring, position_map))
    return tuple(sorted(out, key=lambda g: vmap.order.key(
        g.leading_term(vmap.order)[0])))


def preimage_oracle(ideal, vmap, order=None, budget=None):
    """Reduced basis of the full preimage of an ideal, computed by elimination.

    Joins the base ideal's generators to the substitution graph, eliminates
    the base variables, and (for a non-default target order) recomputes the
    reduced basis inside the Veronese ring.
    """
    if ideal.ring != vmap.base:
        raise RingMismatchError("ideal must live in the base ring")
    joint, gens = _graph_generators(vmap)
    position_map = list(range(vmap.s)) + [-1] * vmap.ring.nvars
    embedded = [g.map_positions(joint, position_map) for g in ideal.generators]
    gb = eliminate(embedded + gens, vmap.s, vmap.ring, vmap.order,
                   budget=budget, seed_gb=list(_joint_graph_gb(vmap.s, vmap.d)))
    if order is None or order == vmap.order:
        return gb
    return buchberger(gb, order, budget=budget,
                      seed_gb=list(kernel_groebner_basis(vmap.s, vmap.d)))


# ---------------------------------------------------------------------------
# kernel certification


@dataclass
class KernelCertificate:
    s: int
    d: int
    basis_size: int
    reduced_size: int
    in_kernel: bool
    is_groebner: bool
    matches_oracle: bool
    spairs: int

    @property
    def ok(self):
        return self.in_kernel and self.is_groebner and self.matches_oracle


def verify_exchange_basis(s, d, budget=None):
    """Certify the exchange binomials: kernel membership, S-pair closure,
    and agreement with the elimination oracle."""
    vmap = VeroneseMap(s, d)
    basis = exchange_binomials(s, d)
    in_kernel = all(not vmap.image(g) for g in basis)
    check = is_groebner_basis(basis, vmap.order, budget=budget,
                              skip_coprime=False)
    reduced = kernel_groebner_basis(s, d)
    matches = tuple(reduced) == tuple(kernel_oracle_basis(s, d))
    return KernelCertificate(s, d, len(basis), len(reduced), in_kernel,
                             check.ok, matches, check.spairs)


# ---------------------------------------------------------------------------
# standard monomials and monomial-ideal pullbacks


def standard_monomials(s, d, degree, order=None):
    """Monomials of the Veronese ring of the given degree outside the kernel's
    leading-term ideal, in ascending position order."""
    init = _kernel_initial_for(s, d, order)
    n = VeroneseMap(s, d).ring.nvars
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        e = tuple(e)
        if not init.contains(e):
            yield e


@lru_cache(maxsize=None)
def _kernel_initial_for(s, d, order=None):
    if order is None or order == GammaRevLex(s, d):
        return kernel_initial(s, d)
    vmap = VeroneseMap(s, d)
    gb = buchberger(exchange_binomials(s, d), order)
    return MonomialIdeal.from_exponents(
        vmap.ring, (g.leading_term(order)[0] for g in gb))


def quadratic_pullback_bound(s, a):
    """Least d certified to give a quadratic pullback basis: ceil(s(a+1)/2)."""
    return math.ceil(Fraction(s * (a + 1), 2))


def monomial_pullback_generators(ideal, d, order=None, degree_cap=2,
                                 budget=None):
    """Minimal generators, up to the degree cap, of the ideal of standard
    monomials whose image lands in the given monomial ideal.

    Returns (generators, complete).  The result is complete when the chain
    revlex order is in force and d meets the quadratic bound, in which case
    a cap of 2 suffices; otherwise the caller owns choosing a sufficient cap.
    """
    if ideal.is_zero:
        raise DomainError("the zero ideal has no pullback generators")
    if degree_cap < 1:
        raise DomainError("degree cap must be at least 1")
    s = ideal.ring.s
    vmap = VeroneseMap(s, d)
    accepted = []
    for degree in range(1, degree_cap + 1):
        for e in standard_monomials(s, d, degree, order):
            if any(mono_divides(g, e) for g in accepted):
                continue
            if ideal.contains(vmap.image_exps(e)):
                accepted.append(e)
    gamma_order = order is None or order == vmap.order
    bound = quadratic_pullback_bound(s, ideal.max_exponent())
    complete = gamma_order and d >= bound and degree_cap >= 2
    return tuple(accepted), complete


@dataclass
class PullbackResult:
    """A Gröbner basis of a pullback ideal plus the checks behind it."""

    s: int
    d: int
    order: object
    groebner_basis: tuple
    reduced: tuple
    max_degree: int
    method: str
    certificate: dict


def pullback_monomial_ideal(ideal, d, degree_cap=2, verify=False, budget=None,
                            use_oracle=True):
    """Pullback of a monomial ideal: exchange binomials plus the standard
    monomial generators form a Gröbner basis under the chain revlex order.

    Below the quadratic bound the degree cap is raised to the oracle's
    maximal generator degree so the construction stays complete; with
    ``use_oracle`` off the result is flagged partial instead.
    """
    ring = ideal.ring
    s = ring.s
    vmap = VeroneseMap(s, d)
    order = vmap.order
    kernel = exchange_binomials(s, d)
    cert = {"method_note": "exchange binomials plus standard-monomial generators"}
    oracle_gb = None
    if ideal.is_zero:
        basis = tuple(kernel)
        reduced = kernel_groebner_basis(s, d)
        cert.update(bound=None, meets_bound=True, complete=True)
    else:
        bound = quadratic_pullback_bound(s, ideal.max_exponent())
        cap = degree_cap
        if d < bound and use_oracle:
            oracle_gb = preimage_oracle(Ideal(ring, ideal.polynomials()), vmap,
                                        budget=budget)
            cap = max(cap, max((g.total_degree() for g in oracle_gb), default=1))
        gens, complete = monomial_pullback_generators(ideal, d, degree_cap=cap,
                                                      budget=budget)
        complete = complete or oracle_gb is not None
        basis = tuple(kernel) + tuple(vmap.ring.monomial(e) for e in gens)
        reduced = _reduce_basis(list(basis), order)
        cert.update(bound=bound, meets_bound=d >= bound, complete=complete,
                    degree_cap=cap)
    if ideal.is_zero:
        cert["members_in_target"] = all(not vmap.image(g) for g in basis)
    else:
        cert["members_in_target"] = all(_maps_into_monomial(vmap, g, ideal)
                                        for g in basis)
    if verify:
        check = is_groebner_basis(basis, order, budget=budget)
        cert["is_groebner"] = check.ok
        cert["spairs_checked"] = check.spairs
    if oracle_gb is not None:
        cert["matches_oracle"] = tuple(reduced) == tuple(oracle_gb)
    return PullbackResult(s, d, order, basis, reduced,
                          max((g.total_degree() for g in basis), default=0),
                          "constructive", cert)


def _maps_into_monomial(vmap, g, ideal):
    image = vmap.image(g)
    if not image:
        return True
    return all(ideal.contains(e) for e in image.terms)


def weight_pullback(omega, vmap):
    """Weights on the Veronese variables induced by base weights."""
    if len(omega) != vmap.s:
        raise DomainError("weight vector length must match the base ring")
    return tuple(sum(w * a for w, a in zip(omega, idx))
                 for idx in vmap.ring.indices)


def pullback_order(vmap, omega):
    """Weighted order on the Veronese ring with the chain revlex tiebreak."""
    return Weighted(weight_pullback(tuple(omega), vmap), vmap.order)


def homogeneous_pullback_generators(ideal, vmap, omega=None, budget=None):
    """A generating set of the preimage ideal: the exchange binomials plus
    lifts of padded generator multiples.

    Every generator of degree e, multiplied by all monomials filling it up to
    the next multiple of d, lands in the image subring; lifting those
    multiples termwise and adding the kernel generators yields the preimage
    (the substitution is onto the subring spanned by d-divisible degrees).
    """
    if not ideal.is_homogeneous():
        raise DomainError("generators must be homogeneous")
    base = ideal.ring
    if omega is None:
        source = ideal.generators
    else:
        source = ideal.groebner_basis(Weighted(tuple(omega), base.default_order()),
                                      budget)
    lifts = []
    d = vmap.d
    for f in source:
        e = f.total_degree()
        pad = d * math.ceil(Fraction(e, d)) - e
        if pad == 0:
            lifts.append(vmap.lift(f))
            continue
        for combo in combinations_with_replacement(range(base.nvars), pad):
            m = [0] * base.nvars
            for i in combo:
                m[i] += 1
            lifts.append(vmap.lift(f.mul_term(1, tuple(m))))
    return list(exchange_binomials(vmap.s, vmap.d)) + lifts


def pullback_homogeneous_ideal(ideal, d, omega, method="constructive",
                               budget=None, check_initial=True):
    """Pullback of a homogeneous ideal under a weight vector whose initial
    ideal is monomial, with the weighted chain revlex order.

    The certificate records the quadratic bound for the weight initial ideal
    and, when ``check_initial`` is set, that the pullback's leading-term
    ideal agrees with the pullback of the weight initial ideal.
    """
    if budget is None:
        budget = Budget()
    base = ideal.ring
    s = base.s
    if s is None:
        raise DomainError("pullbacks need a base ring y1..ys")
    if not ideal.is_homogeneous():
        raise DomainError("ideal must be homogeneous in the standard grading")
    omega = tuple(int(w) for w in omega)
    if len(omega) != s or any(w < 0 for w in omega):
        raise DomainError("weight vector must be nonnegative of length s")
    vmap = VeroneseMap(s, d)

    forms_ideal, monomial = ideal.initial_forms(omega, budget=budget)
    if not monomial:
        raise NonMonomialInitialError(
            "the weight initial ideal is not monomial; derive the weights "
            "with find_weight_vector first")
    init = MonomialIdeal.from_exponents(
        base, (next(iter(f.terms)) for f in forms_ideal.generators))

    order = pullback_order(vmap, omega)
    seed = list(kernel_groebner_basis(s, d))

    reduced_c = reduced_o = None
    if method in ("constructive", "both"):
        gens = homogeneous_pullback_generators(ideal, vmap, omega, budget)
        reduced_c = buchberger(gens, order, budget=budget, seed_gb=seed)
    if method in ("oracle", "both"):
        reduced_o = preimage_oracle(ideal, vmap, order, budget=budget)
    if method == "both" and tuple(reduced_c) != tuple(reduced_o):
        raise RuntimeError("constructive and oracle pullbacks disagree")
    reduced = reduced_c if reduced_c is not None else reduced_o

    cert = {}
    if init.is_zero:
        cert.update(bound=None, meets_bound=True)
    else:
        bound = quadratic_pullback_bound(s, init.max_exponent())
        cert.update(bound=bound, meets_bound=d >= bound)
    if check_initial:
        mono_res = pullback_monomial_ideal(init, d, budget=budget) \
            if not init.is_zero else None
        lhs = MonomialIdeal.from_exponents(
            vmap.ring, (g.leading_term(order)[0] for g in reduced))
        if mono_res is None:
            rhs = MonomialIdeal.from_exponents(
                vmap.ring, (g.leading_term(vmap.order)[0]
                            for g in kernel_groebner_basis(s, d)))
        else:
            rhs = MonomialIdeal.from_exponents(
                vmap.ring, (g.leading_term(vmap.order)[0]
                            for g in mono_res.reduced))
        cert["initial_matches_monomial_pullback"] = lhs == rhs
    gb_of_base = ideal.groebner_basis(base.default_order(), budget)
    cert["members_in_target"] = all(
        not normal_form(vmap.image(g), gb_of_base, base.default_order())
        if gb_of_base else not vmap.image(g)
        for g in reduced)
    basis = reduced
    return PullbackResult(s, d, order, basis, reduced,
                          max((g.total_degree() for g in reduced), default=0),
                          method, cert)


# ---------------------------------------------------------------------------
# degree bounds


@dataclass
class BoundsReport:
    """The quadratic-pullback degree bound next to the two rival bounds."""

    s: int
    max_exponent: int
    delta: int
    bound: int
    bound_raw: Fraction
    rival_rough: Fraction
    rival_stated: int

    @property
    def below_rough(self):
        return self.bound_raw < self.rival_rough

    @property
    def threshold(self):
        """The rough comparison flips exactly where max_exponent + 2 <= delta."""
        return self.max_exponent + 2 <= self.delta

    @property
    def verdicts(self):
        v = {"below_rough": self.below_rough,
             "threshold_condition": self.threshold}
        if self.delta % 2:
            v["odd_delta_not_above_stated"] = self.bound_raw <= self.rival_stated
        else:
            v["even_delta_above_stated_needs_max_ge_delta"] = (
                self.bound_raw <= self.rival_stated
                or self.max_exponent >= self.delta)
        return v


def degree_bounds(ideal, s=None):
    """Bounds for a monomial ideal: ours, the rough rival (s*delta - s + 1)/2,
    and the stated rival s*ceil(delta/2)."""
    if ideal.is_zero:
        raise DomainError("bounds are undefined for the zero ideal")
    if s is None:
        s = ideal.ring.s if ideal.ring.s else ideal.ring.nvars
    a = ideal.max_exponent()
    delta = ideal.max_total_degree()
    raw = Fraction(s * (a + 1), 2)
    return BoundsReport(
        s, a, delta, math.ceil(raw), raw,
        Fraction(s * delta - s + 1, 2), s * math.ceil(Fraction(delta, 2)))
