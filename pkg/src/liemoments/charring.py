"""Exact character-ring route to moments of traces.

A product of traces  prod_j Tr(rho(g^j))^{a_j} * prod_j conj(Tr(rho(g^j)))^{b_j}
is the character of a (virtual) representation built from Adams operations,
duals and tensor products; its Haar integral is the multiplicity of the
trivial representation, extracted by alternating reflection of shifted
weights.  Everything here is exact integer arithmetic on weight systems.
"""

from __future__ import annotations

import heapq
import itertools
import math
import re
from dataclasses import dataclass

from . import rootsys
from .repweights import WeightSystem, check_dominant_integral, weight_system


class SupportCapExceeded(RuntimeError):
    """Raised when a convolution would exceed the configured support cap."""


@dataclass(frozen=True)
class CycleType:
    """Exponent vector (a_1, a_2, ...): a_j copies of the j-th power trace.

    Trailing zeros are not significant; ``CycleType((2,))`` equals
    ``CycleType((2, 0))``.
    """
    exps: tuple

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise rootsys.ConfigurationError(
                f"cycle exponents must be >= 0, got {exps}")
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        object.__setattr__(self, "exps", exps)

    @staticmethod
    def parse(text):
        """Parse ``"2"`` or ``"0,1"`` (a_1, a_2, ... comma separated)."""
        text = text.strip()
        if not text:
            return CycleType(())
        if not re.fullmatch(r"\d+(\s*,\s*\d+)*", text):
            raise rootsys.ConfigurationError(f"bad cycle type {text!r}")
        return CycleType(tuple(int(t) for t in text.split(",")))

    @property
    def size(self):
        """Number of trace factors, sum a_j."""
        return sum(self.exps)

    @property
    def weight(self):
        """Total power of the group element, sum j a_j."""
        return sum(j * a for j, a in enumerate(self.exps, start=1))

    @property
    def quad(self):
        """Quadratic weight sum j^2 a_j (controls the Laplace scale)."""
        return sum(j * j * a for j, a in enumerate(self.exps, start=1))

    @property
    def gcd_support(self):
        """gcd of the j with a_j > 0 (0 for the empty type)."""
        g = 0
        for j, a in enumerate(self.exps, start=1):
            if a:
                g = math.gcd(g, j)
        return g

    def scaled(self, n):
        """The type with every exponent multiplied by n."""
        return CycleType(tuple(n * a for a in self.exps))

    def support(self):
        return tuple(j for j, a in enumerate(self.exps, start=1) if a)


def adams(ws, j):
    """Adams operation: dilate every weight by j.

    For j >= 2 the result is in general only a virtual character, and is
    flagged as such.
    """
    if j < 1:
        raise ValueError(f"Adams degree must be >= 1, got {j}")
    if j == 1:
        return ws
    return WeightSystem({tuple(j * c for c in w): m
                         for w, m in ws.entries.items()},
                        is_virtual=True)


def dual(ws):
    """Weight system of the dual: negate every weight."""
    return WeightSystem({tuple(-c for c in w): m
                         for w, m in ws.entries.items()},
                        is_virtual=ws.is_virtual)


def product(ws1, ws2, support_cap=10 ** 7):
    """Convolution of weight systems (character of the tensor product)."""
    a, b = ws1.entries, ws2.entries
    if len(a) > len(b):
        a, b = b, a
    if len(a) * len(b) > support_cap:
        raise SupportCapExceeded(
            f"convolution support may reach {len(a) * len(b)}, "
            f"cap is {support_cap}")
    out = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            v = out.get(w, 0) + m1 * m2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    if len(out) > support_cap:
        raise SupportCapExceeded(
            f"convolution support {len(out)} exceeds cap {support_cap}")
    return WeightSystem(out, is_virtual=ws1.is_virtual or ws2.is_virtual)


def product_all(factors, rank, support_cap=10 ** 7):
    """Convolve many weight systems, smallest supports first (heap order)."""
    heap = [(ws.support_size, i, ws) for i, ws in enumerate(factors)]
    heapq.heapify(heap)
    counter = len(heap)
    if not heap:
        return WeightSystem.trivial(rank)
    while len(heap) > 1:
        _, _, w1 = heapq.heappop(heap)
        _, _, w2 = heapq.heappop(heap)
        w = product(w1, w2, support_cap=support_cap)
        heapq.heappush(heap, (w.support_size, counter, w))
        counter += 1
    return heap[0][2]


def trivial_multiplicity(rs, ws):
    """Multiplicity of the trivial representation in a virtual character.

    Shift by rho, reflect to the dominant chamber with sign, drop weights
    whose shift lands on a chamber wall, and collect the signed count at rho.
    """
    acc = 0
    rho = rs.rho
    for mu, c in ws.entries.items():
        shifted = tuple(m + 1 for m in mu)
        dom, sign = rootsys.dominant_representative(rs, shifted)
        if 0 in dom:
            continue
        if dom == rho:
            acc += sign * c
    return acc


def decompose(rs, ws):
    """Full decomposition of a virtual character into irreducibles.

    Returns a dict mapping highest weights to signed multiplicities.
    """
    acc = {}
    for mu, c in ws.entries.items():
        shifted = tuple(m + 1 for m in mu)
        dom, sign = rootsys.dominant_representative(rs, shifted)
        if 0 in dom:
            continue
        hw = tuple(d - 1 for d in dom)
        v = acc.get(hw, 0) + sign * c
        if v:
            acc[hw] = v
        else:
            acc.pop(hw, None)
    return acc


def greedy_decompose(rs, ws):
    """Decompose a genuine character by peeling highest weights.

    Independent of :func:`decompose`: repeatedly take the weight of maximal
    height (then lexicographically largest), which for a genuine character is
    a dominant highest weight, and subtract that irreducible's full weight
    system.  Raises ValueError if the input turns out not to be a genuine
    character.
    """
    remaining = dict(ws.entries)
    rho_cov = rs.rho_covector

    def height(w):
        return sum(c * x for c, x in zip(w, rho_cov))

    out = {}
    while remaining:
        mu = max(remaining, key=lambda w: (height(w), w))
        c = remaining[mu]
        if c < 0 or any(x < 0 for x in mu):
            raise ValueError("not the character of a genuine representation")
        out[mu] = c
        for nu, m in weight_system(rs, mu).entries.items():
            v = remaining.get(nu, 0) - c * m
            if v:
                remaining[nu] = v
            else:
                remaining.pop(nu, None)
    return out


def moment_weight_system(rs, lam, a, b=CycleType(()), support_cap=10 ** 7):
    """Weight system of prod_j Tr(g^j)^{a_j} * conj(Tr(g^j))^{b_j}."""
    ws = weight_system(rs, lam)
    factors = []
    for j, aj in enumerate(a.exps, start=1):
        factors.extend([adams(ws, j)] * aj)
    if b.exps:
        dws = dual(ws)
        for j, bj in enumerate(b.exps, start=1):
            factors.extend([adams(dws, j)] * bj)
    return product_all(factors, rs.rank, support_cap=support_cap)


def exact_moment(rs, lam, a, b=CycleType(()), support_cap=10 ** 7):
    """Haar integral of the trace monomial, as an exact integer."""
    lam = check_dominant_integral(rs, lam)
    return trivial_multiplicity(
        rs, moment_weight_system(rs, lam, a, b, support_cap=support_cap))


def invariant_dimension(rs, lam, n):
    """Dimension of the invariant subspace of the n-th tensor power.

    Iterates the one-step decomposition rule (add one weight system, shift by
    rho, reflect, unshift) on the multiset of constituents, which stays small,
    so this handles much larger n than convolving the full weight system.
    """
    lam = check_dominant_integral(rs, lam)
    ws = weight_system(rs, lam)
    rank = rs.rank
    state = {(0,) * rank: 1}
    for _ in range(n):
        nxt = {}
        for mu, mult in state.items():
            for w, c in ws.entries.items():
                shifted = tuple(m + x + 1 for m, x in zip(mu, w))
                dom, sign = rootsys.dominant_representative(rs, shifted)
                if 0 in dom:
                    continue
                hw = tuple(d - 1 for d in dom)
                v = nxt.get(hw, 0) + sign * mult * c
                if v:
                    nxt[hw] = v
                else:
                    nxt.pop(hw, None)
        state = nxt
        assert all(v > 0 for v in state.values())
    return state.get((0,) * rank, 0)


def canonical_permutation(a):
    """A permutation of {0..k-1} with cycle type ``a``: cycles in increasing
    length, filled with consecutive indices.  Returned as the image array."""
    k = a.weight
    perm = list(range(k))
    pos = 0
    for j, aj in enumerate(a.exps, start=1):
        for _ in range(aj):
            block = list(range(pos, pos + j))
            for idx, src in enumerate(block):
                perm[src] = block[(idx + 1) % j]
            pos += j
    return perm


def permutation_trace_bruteforce(matrix, a, cap=10 ** 5):
    """Trace of (B tensor ... tensor B) composed with a cycle-type permutation.

    Brute force over all d^k tensor basis states; refuses when d^k exceeds
    ``cap``.  The permutation operator sends basis slot i to slot sigma(i)
    (slot i of the output holds the input slot sigma^{-1}(i)).
    """
    d = len(matrix)
    k = a.weight
    if k == 0:
        return 1.0 + 0.0j
    if d ** k > cap:
        raise ValueError(f"d^k = {d ** k} exceeds brute-force cap {cap}")
    perm = canonical_permutation(a)
    inv = [0] * k
    for i, p in enumerate(perm):
        inv[p] = i
    total = 0.0 + 0.0j
    for phi in itertools.product(range(d), repeat=k):
        term = 1.0 + 0.0j
        for i in range(k):
            term *= matrix[phi[i]][phi[inv[i]]]
            if term == 0:
                break
        total += term
    return total
