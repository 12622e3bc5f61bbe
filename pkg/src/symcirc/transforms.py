"""Circuit-to-circuit transformations.

* THR lowering into weighted symmetric gates (direct weight absorption),
* the AND-of-symmetric collapse via base-B digit encoding,
* gate-wise probabilistic polynomials over F2,
* the randomized OR -> XOR combiner,
* bit-extractor banks and prefix copy expansion for split counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .circuit import (Circuit, Gate, WireRef, gate_depths, kind_sym_table,
                      normalize_not_gates, restrict)
from .config import DEFAULT_CAPS, Caps
from .errors import (MonomialCapExceeded, ShapeError, SizeCapExceeded,
                     ValidationError, WeightCapExceeded)
from . import rng as rng_mod

_INT64_SAFE = 1 << 62


# -- predicates on weighted sums ---------------------------------------------

class SumPredicate:
    """Map from achievable weighted-sum values in [0, bound] to {0,1}."""

    bound: int

    def accepts(self, v: int) -> bool:
        raise NotImplementedError

    def accepts_many(self, values) -> np.ndarray:
        return np.fromiter((self.accepts(int(v)) for v in values), dtype=bool,
                           count=len(values))

    def accepted_set(self) -> frozenset[int]:
        """Sparse accepted-sum set; only for enumerable domains."""
        if self.bound > (1 << 22):
            raise ValidationError("predicate domain too large to enumerate")
        return frozenset(v for v in range(self.bound + 1) if self.accepts(v))

    def complement(self) -> "SumPredicate":
        return _Complement(self)


@dataclass(frozen=True)
class SetPredicate(SumPredicate):
    accepted: frozenset[int]
    bound: int

    def accepts(self, v: int) -> bool:
        return v in self.accepted

    def accepted_set(self) -> frozenset[int]:
        return self.accepted


@dataclass(frozen=True)
class ThresholdPredicate(SumPredicate):
    threshold: int
    bound: int

    def accepts(self, v: int) -> bool:
        return v >= self.threshold

    def accepts_many(self, values) -> np.ndarray:
        arr = np.asarray(values)
        if arr.dtype != object:
            return arr >= self.threshold
        return super().accepts_many(values)


@dataclass(frozen=True)
class TablePredicate(SumPredicate):
    table: tuple[int, ...]  # length bound + 1

    @property
    def bound(self) -> int:  # type: ignore[override]
        return len(self.table) - 1

    def accepts(self, v: int) -> bool:
        return bool(self.table[v])

    def accepts_many(self, values) -> np.ndarray:
        arr = np.asarray(values)
        if arr.dtype != object:
            return np.asarray(self.table, dtype=bool)[arr]
        return super().accepts_many(values)


@dataclass(frozen=True)
class DigitPredicate(SumPredicate):
    """Accepts v iff every base-B digit block is accepted by its part."""

    base: int
    parts: tuple[SumPredicate, ...]
    bound: int

    def accepts(self, v: int) -> bool:
        for part in self.parts:
            if not part.accepts(v % self.base):
                return False
            v //= self.base
        return v == 0


@dataclass(frozen=True)
class _Complement(SumPredicate):
    inner: SumPredicate

    @property
    def bound(self) -> int:  # type: ignore[override]
        return self.inner.bound

    def accepts(self, v: int) -> bool:
        return not self.inner.accepts(v)

    def accepts_many(self, values) -> np.ndarray:
        return ~self.inner.accepts_many(values)


# -- generalized symmetric gate -----------------------------------------------

@dataclass(frozen=True)
class GeneralizedSymGate:
    """Weighted symmetric gate over circuit inputs.

    Output on x is predicate(sum_j weights_j * lit_j(x)) where lit_j honors
    the wire's negation flag.  Weights are nonnegative; a weight-w wire is
    semantically w parallel wires but never materialized.
    """

    wires: tuple[WireRef, ...]
    weights: tuple[int, ...]
    predicate: SumPredicate

    def __post_init__(self):
        if len(self.wires) != len(self.weights):
            raise ValidationError("one weight per wire")
        if any(w < 0 for w in self.weights):
            raise ValidationError("weights must be nonnegative")

    @property
    def bound(self) -> int:
        return sum(self.weights)

    def value_on(self, x) -> int:
        s = 0
        for w, wt in zip(self.wires, self.weights):
            v = x[w.source - 1]
            s += wt * ((1 - v) if w.negated else v)
        return int(self.predicate.accepts(s))

    def sums_over(self, bits: np.ndarray) -> np.ndarray:
        """Weighted sums over a (N, n) bit matrix (columns are x_1..x_n)."""
        n_rows = bits.shape[0]
        fits = sum(self.weights) < _INT64_SAFE
        acc = np.zeros(n_rows, dtype=np.int64 if fits else object)
        for w, wt in zip(self.wires, self.weights):
            col = bits[:, w.source - 1].astype(np.int64)
            lit = 1 - col if w.negated else col
            acc = acc + (lit if fits else lit.astype(object)) * wt
        return acc

    def complemented(self) -> "GeneralizedSymGate":
        return GeneralizedSymGate(self.wires, self.weights, self.predicate.complement())


def normalize_thr_to_sym(g: Gate, caps: Caps = DEFAULT_CAPS) -> GeneralizedSymGate:
    """Lower a THR gate over circuit inputs to a GeneralizedSymGate.

    Negative weights are eliminated by negating the wire and shifting the
    threshold (x = 1 - ~x); duplicate literals on the same input merge.
    """
    if g.kind != "THR":
        raise ShapeError(f"gate {g.gid} is not THR")
    if any(not w.is_input() for w in g.inputs):
        raise ShapeError(f"gate {g.gid}: THR lowering needs input-only wires")
    coef: dict[int, int] = {}
    t = g.thr_threshold
    for w, wt in zip(g.inputs, g.thr_weights):
        eff = wt * w.multiplicity
        if w.negated:
            # wt * (1 - x) = wt - wt * x
            t -= eff
            coef[w.source] = coef.get(w.source, 0) - eff
        else:
            coef[w.source] = coef.get(w.source, 0) + eff
    wires: list[WireRef] = []
    weights: list[int] = []
    for src in sorted(coef):
        c = coef[src]
        if c == 0:
            continue
        if c > 0:
            wires.append(WireRef(src))
            weights.append(c)
        else:
            # c*x = -|c| + |c|*(1-x)
            t += -c
            wires.append(WireRef(src, negated=True))
            weights.append(-c)
    bound = sum(weights)
    if bound > caps.weight_magnitude:
        raise WeightCapExceeded(
            f"gate {g.gid}: total weight {bound} exceeds cap {caps.weight_magnitude}")
    return GeneralizedSymGate(tuple(wires), tuple(weights),
                              ThresholdPredicate(t, bound))


def lower_gate(g: Gate, caps: Caps = DEFAULT_CAPS) -> GeneralizedSymGate:
    """Lower any input-reading bottom gate to a GeneralizedSymGate."""
    if any(not w.is_input() for w in g.inputs):
        raise ShapeError(f"gate {g.gid} does not read only inputs")
    if g.kind == "THR":
        return normalize_thr_to_sym(g, caps)
    table = tuple(kind_sym_table(g))
    wires = tuple(WireRef(w.source, w.negated) for w in g.inputs)
    weights = tuple(w.multiplicity for w in g.inputs)
    return GeneralizedSymGate(wires, weights, TablePredicate(table))


def input_identity_gate(wire: WireRef) -> GeneralizedSymGate:
    """A direct input wire viewed as a one-wire bottom gate."""
    return GeneralizedSymGate((WireRef(wire.source, wire.negated),), (1,),
                              SetPredicate(frozenset({1}), 1))


def collapse_and_of_sym(gates: Sequence[GeneralizedSymGate]) -> GeneralizedSymGate:
    """Collapse an AND of weighted symmetric gates into one gate.

    Weighted sums are packed into disjoint base-B digit blocks,
    B = 1 + max_i(sum_j weights_ij), so digit i of the combined sum equals
    gate i's sum; the predicate accepts iff every digit is accepted.
    """
    gates = list(gates)
    if not gates:
        raise ValidationError("collapse needs at least one gate")
    if len(gates) == 1:
        return gates[0]
    base = 1 + max(g.bound for g in gates)
    combined: dict[tuple[int, bool], int] = {}
    for i, g in enumerate(gates):
        scale = base ** i
        for w, wt in zip(g.wires, g.weights):
            key = (w.source, w.negated)
            combined[key] = combined.get(key, 0) + scale * wt
    lits = sorted(combined)
    wires = tuple(WireRef(src, neg) for src, neg in lits)
    weights = tuple(combined[k] for k in lits)
    bound = sum(weights)
    pred = DigitPredicate(base, tuple(g.predicate for g in gates), bound)
    return GeneralizedSymGate(wires, weights, pred)


# -- F2 polynomials ------------------------------------------------------------

Monomial = frozenset  # of 0-based variable indices; empty = the constant 1


@dataclass(frozen=True)
class F2Polynomial:
    """Multilinear polynomial over F2, canonical monomial-set form."""

    num_vars: int
    monomials: frozenset

    def degree(self) -> int:
        return max((len(m) for m in self.monomials), default=0)

    def eval(self, bits) -> int:
        acc = 0
        for m in self.monomials:
            acc ^= int(all(bits[i] for i in m))
        return acc

    def eval_columns(self, cols: Sequence[np.ndarray]) -> np.ndarray:
        """Evaluate on many assignments; cols[i] is variable i's bool vector."""
        if not self.monomials:
            return np.zeros(len(cols[0]) if cols else 1, dtype=bool)
        n_rows = len(cols[0]) if cols else 1
        acc = np.zeros(n_rows, dtype=bool)
        for m in self.monomials:
            term = np.ones(n_rows, dtype=bool)
            for i in m:
                term &= cols[i]
            acc ^= term
        return acc


def f2_zero(n: int) -> F2Polynomial:
    return F2Polynomial(n, frozenset())


def f2_one(n: int) -> F2Polynomial:
    return F2Polynomial(n, frozenset({frozenset()}))


def f2_var(n: int, i: int) -> F2Polynomial:
    return F2Polynomial(n, frozenset({frozenset({i})}))


def f2_add(p: F2Polynomial, q: F2Polynomial) -> F2Polynomial:
    return F2Polynomial(p.num_vars, p.monomials ^ q.monomials)


def f2_mul(p: F2Polynomial, q: F2Polynomial, cap: int | None = None) -> F2Polynomial:
    counts: dict[frozenset, int] = {}
    for a in p.monomials:
        for b in q.monomials:
            m = a | b
            counts[m] = counts.get(m, 0) ^ 1
    monos = frozenset(m for m, c in counts.items() if c)
    if cap is not None and len(monos) > cap:
        raise MonomialCapExceeded(f"{len(monos)} monomials exceed cap {cap}")
    return F2Polynomial(p.num_vars, monos)


@dataclass
class ProbPolyParams:
    eps: Fraction | float
    seed: int = 0
    degree_budget: int | None = None


def _ceil_log2_ratio(num: int, den: int) -> int:
    """Smallest ell with 2**ell >= num/den."""
    t = -(-num // den)
    return max(0, (t - 1).bit_length())


def subset_count_for(eps, s: int) -> int:
    """Random subsets per gate: ell = ceil(log2(s/eps))."""
    frac = Fraction(eps)
    return max(1, _ceil_log2_ratio(s * frac.denominator, frac.numerator))


def sample_and_subsets(rng, fanin: int, ell: int) -> np.ndarray:
    """The ell random subsets used by one AND (or OR) gate, as a bool matrix."""
    return rng.integers(0, 2, size=(ell, fanin), dtype=np.int8).astype(bool)


def _and_factor_poly(inputs: list[F2Polynomial], subset: np.ndarray,
                     n: int) -> F2Polynomial:
    """1 + sum_{i in S} (1 + p_i), expanded."""
    acc = f2_one(n)
    for i in np.flatnonzero(subset):
        acc = f2_add(acc, f2_add(f2_one(n), inputs[i]))
    return acc


def _or_factor_poly(inputs: list[F2Polynomial], subset: np.ndarray,
                    n: int) -> F2Polynomial:
    """1 + sum_{i in S} p_i."""
    acc = f2_one(n)
    for i in np.flatnonzero(subset):
        acc = f2_add(acc, inputs[i])
    return acc


def sample_prob_poly(c: Circuit, params: ProbPolyParams, rng=None,
                     caps: Caps = DEFAULT_CAPS) -> F2Polynomial:
    """Sample a probabilistic polynomial for an AND/OR/NOT circuit.

    Gate-wise construction with per-gate error eps/s: each gate is replaced
    by a product of ell = ceil(log2(s/eps)) random affine factors, so the
    realized degree is at most ell**depth and, for every fixed assignment,
    Pr[p(x) = c(x)] >= 1 - eps.  One-sided: an AND never errs on the all-true
    side, an OR never errs on the all-false side.
    """
    frac = Fraction(params.eps)
    if not (0 < frac < 1):
        raise ValidationError("eps must be in (0, 1)")
    if rng is None:
        rng = rng_mod.stream(params.seed, "prob-poly")
    c = normalize_not_gates(c)
    bad = [g.gid for g in c.gates if g.kind not in ("AND", "OR")]
    if bad:
        raise ShapeError(f"prob-poly circuits allow only AND/OR/NOT gates: {bad}")
    m = c.n
    cap = min(1 << m, caps.monomials)
    s = max(1, len(c.gates))
    d = max(1, gate_depths(c)[c.output] if c.gates else 1)
    ell = subset_count_for(frac, s)
    budget = params.degree_budget if params.degree_budget is not None else ell ** d

    def wire_poly(w: WireRef, values) -> F2Polynomial:
        p = values[w.source] if not w.is_input() else f2_var(m, w.source - 1)
        return f2_add(f2_one(m), p) if w.negated else p

    values: dict[str, F2Polynomial] = {}
    for g in c.gates:
        inputs = [wire_poly(w, values) for w in g.inputs]
        subsets = sample_and_subsets(rng, len(inputs), ell)
        factor = _and_factor_poly if g.kind == "AND" else _or_factor_poly
        acc = f2_one(m)
        for r in range(ell):
            acc = f2_mul(acc, factor(inputs, subsets[r], m, cap), cap)
        values[g.gid] = acc if g.kind == "AND" else f2_add(f2_one(m), acc)
    if c.gates:
        out = values[c.output]
    else:
        raise ShapeError("circuit has no gates")
    if out.degree() > budget:
        raise ValidationError(f"degree {out.degree()} exceeds budget {budget}")
    return out


def sample_prob_poly_for_wire(c: Circuit, params: ProbPolyParams, rng=None,
                              caps: Caps = DEFAULT_CAPS) -> F2Polynomial:
    """Like sample_prob_poly but tolerates the gateless passthrough circuit."""
    c = normalize_not_gates(c)
    if c.gates:
        return sample_prob_poly(c, params, rng, caps)
    raise ShapeError("circuit has no gates")


# -- OR -> XOR randomization ----------------------------------------------------

@dataclass
class RandomCombiner:
    """C'' = S1 + S2 + S1*S2 over F2 with S_b = sum_i r_{b,i} C_i."""

    r1: np.ndarray  # bool vectors, one entry per combined subcircuit
    r2: np.ndarray

    def combine_values(self, values: np.ndarray) -> np.ndarray:
        """values: bool array with subcircuit axis first; returns OR(S1,S2)."""
        v = np.asarray(values, dtype=bool)
        s1 = np.bitwise_xor.reduce(v[self.r1], axis=0) if self.r1.any() else \
            np.zeros(v.shape[1:], dtype=bool)
        s2 = np.bitwise_xor.reduce(v[self.r2], axis=0) if self.r2.any() else \
            np.zeros(v.shape[1:], dtype=bool)
        return s1 | s2  # == s1 + s2 + s1*s2 mod 2

    def combine_polys(self, polys: list[F2Polynomial],
                      cap: int | None = None) -> F2Polynomial:
        n = polys[0].num_vars
        s1 = f2_zero(n)
        s2 = f2_zero(n)
        for take, p in zip(self.r1, polys):
            if take:
                s1 = f2_add(s1, p)
        for take, p in zip(self.r2, polys):
            if take:
                s2 = f2_add(s2, p)
        return f2_add(f2_add(s1, s2), f2_mul(s1, s2, cap))


def or_to_xor_randomized(subcircuits, rng) -> RandomCombiner:
    """Draw the r_{1,i}, r_{2,i} coins for an OR of the given subcircuits.

    For fixed subcircuit values: all zero -> combined value 0 surely; some
    one -> combined value 1 with probability >= 3/4 over the coins.
    """
    count = len(subcircuits)
    if count == 0:
        raise ValidationError("need at least one subcircuit")
    r = rng.integers(0, 2, size=(2, count), dtype=np.int8).astype(bool)
    return RandomCombiner(r[0], r[1])


# -- copy expansion and bit-extractor banks --------------------------------------

def rename_gates(c: Circuit, prefix: str) -> Circuit:
    mapping = {g.gid: f"{prefix}{g.gid}" for g in c.gates}
    gates = []
    for g in c.gates:
        wires = tuple(WireRef(w.source if w.is_input() else mapping[w.source],
                              w.negated, w.multiplicity) for w in g.inputs)
        gates.append(Gate(mapping[g.gid], g.kind, wires, g.modulus,
                          g.thr_weights, g.thr_threshold, g.sym_table))
    return Circuit(c.n, gates, mapping[c.output])


def expand_copies(c: Circuit, k: int, caps: Caps = DEFAULT_CAPS) -> list[Circuit]:
    """2**k copies of c with the first k inputs fixed to each k-bit string.

    Copy j fixes input b+1 to bit b of j (little-endian).  The OR of the
    copies is satisfiable iff c is.
    """
    if k < 0 or k >= c.n:
        raise ValidationError(f"need 0 <= k < n, got k={k}, n={c.n}")
    if (1 << k) > caps.size:
        raise SizeCapExceeded(f"2**{k} copies exceed size cap {caps.size}")
    if k == 0:
        return [c]
    return [restrict(c, {b + 1: (j >> b) & 1 for b in range(k)})
            for j in range(1 << k)]


def suffix_copies(c: Circuit, ell: int, caps: Caps = DEFAULT_CAPS) -> list[Circuit]:
    """2**(2*ell) copies with the last 2*ell inputs fixed to each string."""
    width = 2 * ell
    if ell < 1 or width >= c.n:
        raise ValidationError(f"need 1 <= ell and 2*ell < n, got ell={ell}, n={c.n}")
    if (1 << width) > caps.size:
        raise SizeCapExceeded(f"2**{width} copies exceed size cap {caps.size}")
    base = c.n - width
    return [restrict(c, {base + 1 + b: (j >> b) & 1 for b in range(width)})
            for j in range(1 << width)]


def build_bit_extractor_bank(c: Circuit, ell: int,
                             caps: Caps = DEFAULT_CAPS) -> list[Circuit]:
    """The 2*ell circuits B_i; B_i(x) = bit i of #{A : c(x, A) = 1}.

    Each B_i is a symmetric top gate over the 2**(2*ell) suffix-restricted
    copies of c; the copies' gate lists are shared between the banks.
    """
    copies = suffix_copies(c, ell, caps)
    width = 2 * ell
    shared: list[Gate] = []
    tops: list[WireRef] = []
    for j, copy in enumerate(copies):
        renamed = rename_gates(copy, f"c{j}_")
        shared.extend(renamed.gates)
        tops.append(WireRef(renamed.output))
    total = len(copies)
    bank = []
    for i in range(1, width + 1):
        table = "".join(str((v >> (i - 1)) & 1) for v in range(total + 1))
        top = Gate(f"bit{i}", "SYM", tuple(tops), sym_table=table)
        bank.append(Circuit(c.n - width, shared + [top], top.gid))
    return bank
