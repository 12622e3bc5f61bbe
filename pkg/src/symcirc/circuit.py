"""Circuit intermediate representation, netlist parsing, reference semantics.

Gate kinds: AND, OR, NOT, XOR, MOD (with modulus m >= 2), MAJ, THR, SYM.
Negation lives on wires (free NOT convention); explicit NOT gates are
normalized into wire flags when a circuit is parsed.  Wire multiplicity
``*k`` stands for k parallel copies of the wire, which matters for the
counting gates (SYM/XOR/MOD/MAJ) and scales THR weights.

Truth-table index convention: assignment (x_1..x_n) maps to index
sum x_i * 2**(i-1), i.e. x_1 is the least significant bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import CircuitParseError, OracleLimitExceeded, ValidationError

KINDS = ("AND", "OR", "NOT", "XOR", "MOD", "MAJ", "THR", "SYM")

# kinds whose output depends only on the (multiplicity-weighted) count of
# true input wires; THR is excluded because of its arbitrary weights
SYMMETRIC_KINDS = frozenset({"SYM", "MAJ", "XOR", "MOD", "AND", "OR"})
THRESHOLD_KINDS = frozenset({"THR", "MAJ"})

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class WireRef:
    source: int | str  # 1-based input index, or gate id
    negated: bool = False
    multiplicity: int = 1

    def is_input(self) -> bool:
        return isinstance(self.source, int)

    def token(self) -> str:
        name = f"x{self.source}" if self.is_input() else str(self.source)
        neg = "~" if self.negated else ""
        mult = f"*{self.multiplicity}" if self.multiplicity != 1 else ""
        return f"{neg}{name}{mult}"


@dataclass(frozen=True)
class Gate:
    gid: str
    kind: str
    inputs: tuple[WireRef, ...]
    modulus: int | None = None
    thr_weights: tuple[int, ...] | None = None
    thr_threshold: int | None = None
    sym_table: str | None = None

    @property
    def total_multiplicity(self) -> int:
        return sum(w.multiplicity for w in self.inputs)


class Circuit:
    """Immutable DAG of gates over n Boolean inputs."""

    def __init__(self, n: int, gates: Iterable[Gate], output: str):
        self.n = int(n)
        self.gates = tuple(gates)
        self.output = output
        self._by_id = {g.gid: g for g in self.gates}
        self._validate()

    def gate(self, gid: str) -> Gate:
        return self._by_id[gid]

    @property
    def output_gate(self) -> Gate:
        return self._by_id[self.output]

    def _validate(self) -> None:
        if self.n < 0:
            raise ValidationError("negative input count")
        if len(self._by_id) != len(self.gates):
            raise ValidationError("duplicate gate id")
        seen: set[str] = set()
        for g in self.gates:
            if g.kind not in KINDS:
                raise ValidationError(f"gate {g.gid}: unknown kind {g.kind!r}")
            if re.fullmatch(r"x\d+", g.gid):
                raise ValidationError(f"gate id {g.gid!r} is reserved for inputs")
            for w in g.inputs:
                if w.multiplicity < 1:
                    raise ValidationError(f"gate {g.gid}: multiplicity must be >= 1")
                if w.is_input():
                    if not (1 <= w.source <= self.n):
                        raise ValidationError(f"gate {g.gid}: input x{w.source} out of range")
                elif w.source not in seen:
                    raise ValidationError(f"gate {g.gid}: reference to {w.source!r} "
                                          "is dangling or not in DAG order")
            if g.kind == "NOT" and len(g.inputs) != 1:
                raise ValidationError(f"gate {g.gid}: NOT takes exactly one input")
            if g.kind in ("AND", "OR", "XOR", "MAJ") and not g.inputs:
                raise ValidationError(f"gate {g.gid}: {g.kind} needs at least one input")
            if g.kind == "MOD":
                if g.modulus is None or g.modulus < 2:
                    raise ValidationError(f"gate {g.gid}: MOD needs modulus >= 2")
                if not g.inputs:
                    raise ValidationError(f"gate {g.gid}: MOD needs at least one input")
            if g.kind == "THR":
                if g.thr_weights is None or g.thr_threshold is None:
                    raise ValidationError(f"gate {g.gid}: THR needs weights and threshold")
                if len(g.thr_weights) != len(g.inputs):
                    raise ValidationError(f"gate {g.gid}: THR carries one weight per wire")
            if g.kind == "SYM":
                if g.sym_table is None or set(g.sym_table) - {"0", "1"}:
                    raise ValidationError(f"gate {g.gid}: SYM needs a 0/1 table")
                if len(g.sym_table) != g.total_multiplicity + 1:
                    raise ValidationError(
                        f"gate {g.gid}: SYM table length {len(g.sym_table)} != "
                        f"{g.total_multiplicity + 1} (1 + total wire multiplicity)")
            seen.add(g.gid)
        if self.output not in self._by_id:
            raise ValidationError(f"output gate {self.output!r} does not exist")

    # -- size / depth -----------------------------------------------------

    def wire_count(self) -> int:
        return sum(g.total_multiplicity for g in self.gates)

    def __repr__(self) -> str:
        return f"Circuit(n={self.n}, gates={len(self.gates)}, output={self.output!r})"


@dataclass
class TruthTableBitmap:
    """Bit-packed length-2**n evaluation result.

    Bit for assignment index idx lives at byte idx>>3, bit position idx&7
    (LSB first).
    """

    n: int
    bits: np.ndarray  # uint8, length ceil(2**n / 8)

    @classmethod
    def from_bools(cls, n: int, values: np.ndarray) -> "TruthTableBitmap":
        if values.shape != (1 << n,):
            raise ValidationError("value vector has wrong length")
        return cls(n, np.packbits(values.astype(np.uint8), bitorder="little"))

    def get(self, idx: int) -> int:
        return int(self.bits[idx >> 3] >> (idx & 7)) & 1

    def to_bools(self) -> np.ndarray:
        return np.unpackbits(self.bits, count=1 << self.n, bitorder="little").astype(bool)

    def popcount(self) -> int:
        return int(np.unpackbits(self.bits, count=1 << self.n, bitorder="little").sum())

    def to_bytes(self) -> bytes:
        want = ((1 << self.n) + 7) >> 3
        return self.bits.tobytes()[:want]

    @classmethod
    def from_bytes(cls, n: int, raw: bytes) -> "TruthTableBitmap":
        want = ((1 << n) + 7) >> 3
        if len(raw) != want:
            raise ValidationError(f"expected {want} bytes for n={n}, got {len(raw)}")
        return cls(n, np.frombuffer(raw, dtype=np.uint8).copy())

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruthTableBitmap) and self.n == other.n
                and self.to_bytes() == other.to_bytes())


@dataclass
class ShapeReport:
    depth: int
    wire_count: int
    tags: frozenset[str]


# -- parsing ---------------------------------------------------------------

_WIRE_RE = re.compile(r"^(~?)([A-Za-z_][A-Za-z0-9_]*)(?:\*(\d+))?$")
_INT_RE = re.compile(r"^-?\d+$")


def _parse_wire(tok: str, lineno: int) -> WireRef:
    m = _WIRE_RE.match(tok)
    if not m:
        raise CircuitParseError(lineno, f"bad wire token {tok!r}")
    neg, name, mult = m.group(1) == "~", m.group(2), int(m.group(3) or 1)
    if mult < 1:
        raise CircuitParseError(lineno, f"multiplicity must be >= 1 in {tok!r}")
    xm = re.fullmatch(r"x(\d+)", name)
    source: int | str = int(xm.group(1)) if xm else name
    return WireRef(source, neg, mult)


def parse_circuit(text: str) -> Circuit:
    """Parse a .ckt netlist; returns a validated, NOT-normalized circuit."""
    n = None
    gates: list[Gate] = []
    output = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        head = toks[0]
        if head == "inputs":
            if n is not None:
                raise CircuitParseError(lineno, "duplicate inputs line")
            if len(toks) != 2 or not toks[1].isdigit():
                raise CircuitParseError(lineno, "expected: inputs <n>")
            n = int(toks[1])
        elif head == "gate":
            if n is None:
                raise CircuitParseError(lineno, "gate before inputs line")
            if len(toks) < 3:
                raise CircuitParseError(lineno, "expected: gate <id> <KIND> <args>")
            gid, kind, args = toks[1], toks[2], toks[3:]
            if kind not in KINDS:
                raise CircuitParseError(lineno, f"unknown gate kind {kind!r}")
            try:
                gates.append(_parse_gate(gid, kind, args, lineno))
            except ValidationError as e:
                raise CircuitParseError(lineno, str(e)) from None
        elif head == "output":
            if len(toks) != 2:
                raise CircuitParseError(lineno, "expected: output <id>")
            if output is not None:
                raise CircuitParseError(lineno, "duplicate output line")
            output = toks[1]
        else:
            raise CircuitParseError(lineno, f"unknown directive {head!r}")
    if n is None:
        raise CircuitParseError(0, "missing inputs line")
    if output is None:
        raise CircuitParseError(0, "missing output line")
    try:
        circ = Circuit(n, gates, output)
    except ValidationError as e:
        raise CircuitParseError(0, str(e)) from None
    return normalize_not_gates(circ)


def _parse_gate(gid: str, kind: str, args: list[str], lineno: int) -> Gate:
    if kind == "THR":
        if not args or not _INT_RE.match(args[0]):
            raise CircuitParseError(lineno, "THR needs a decimal threshold first")
        threshold = int(args[0])
        wires, weights = [], []
        for tok in args[1:]:
            if "@" not in tok:
                raise CircuitParseError(lineno, f"THR wire {tok!r} must look like <w>@<wire>")
            wtok, wiretok = tok.split("@", 1)
            if not _INT_RE.match(wtok):
                raise CircuitParseError(lineno, f"bad THR weight {wtok!r}")
            wires.append(_parse_wire(wiretok, lineno))
            weights.append(int(wtok))
        return Gate(gid, "THR", tuple(wires), thr_weights=tuple(weights),
                    thr_threshold=threshold)
    if kind == "SYM":
        if not args:
            raise CircuitParseError(lineno, "SYM needs a table bitstring")
        table = args[0]
        wires = tuple(_parse_wire(t, lineno) for t in args[1:])
        return Gate(gid, "SYM", wires, sym_table=table)
    if kind == "MOD":
        if not args or not args[0].isdigit():
            raise CircuitParseError(lineno, "MOD needs a modulus first")
        wires = tuple(_parse_wire(t, lineno) for t in args[1:])
        return Gate(gid, "MOD", wires, modulus=int(args[0]))
    wires = tuple(_parse_wire(t, lineno) for t in args)
    return Gate(gid, kind, wires)


def serialize_circuit(c: Circuit) -> str:
    lines = [f"inputs {c.n}"]
    for g in c.gates:
        if g.kind == "THR":
            parts = [f"{w}@{wire.token()}" for w, wire in zip(g.thr_weights, g.inputs)]
            lines.append(f"gate {g.gid} THR {g.thr_threshold} " + " ".join(parts))
        elif g.kind == "SYM":
            lines.append(f"gate {g.gid} SYM {g.sym_table} "
                         + " ".join(w.token() for w in g.inputs))
        elif g.kind == "MOD":
            lines.append(f"gate {g.gid} MOD {g.modulus} "
                         + " ".join(w.token() for w in g.inputs))
        else:
            lines.append(f"gate {g.gid} {g.kind} " + " ".join(w.token() for w in g.inputs))
    lines.append(f"output {c.output}")
    return "\n".join(lines).rstrip() + "\n"


# -- NOT normalization ------------------------------------------------------

def normalize_not_gates(c: Circuit) -> Circuit:
    """Fold explicit NOT gates into negated-wire flags (free NOT convention)."""
    if not any(g.kind == "NOT" for g in c.gates):
        return c
    # NOT gates resolve to (ultimate source, negation relative to it)
    alias: dict[str, tuple[int | str, bool]] = {}

    def resolve(source, negated: bool) -> tuple[int | str, bool]:
        if isinstance(source, str) and source in alias:
            src0, neg0 = alias[source]
            return src0, neg0 ^ negated
        return source, negated

    gates: list[Gate] = []
    for g in c.gates:
        if g.kind == "NOT":
            w = g.inputs[0]
            alias[g.gid] = resolve(w.source, not w.negated)
            continue
        new_wires = tuple(WireRef(*resolve(w.source, w.negated), w.multiplicity)
                          for w in g.inputs)
        gates.append(Gate(g.gid, g.kind, new_wires, g.modulus,
                          g.thr_weights, g.thr_threshold, g.sym_table))
    output = c.output
    if output in alias:
        # output chain ended in a NOT: materialize it as a 1-wire SYM gate
        src, neg = alias[output]
        gates.append(Gate(output, "SYM", (WireRef(src, False, 1),),
                          sym_table="10" if neg else "01"))
    return Circuit(c.n, gates, output)


# -- reference (per-assignment) semantics -----------------------------------

def _gate_value(g: Gate, wire_val) -> int:
    """wire_val: callable WireRef -> 0/1 already including negation."""
    vals = [wire_val(w) for w in g.inputs]
    if g.kind == "NOT":
        return 1 - vals[0]
    if g.kind == "AND":
        return int(all(vals))
    if g.kind == "OR":
        return int(any(vals))
    count = sum(v * w.multiplicity for v, w in zip(vals, g.inputs))
    if g.kind == "XOR":
        return count & 1
    if g.kind == "MOD":
        return int(count % g.modulus == 0)
    if g.kind == "MAJ":
        return int(2 * count > g.total_multiplicity)
    if g.kind == "SYM":
        return int(g.sym_table[count])
    if g.kind == "THR":
        s = sum(v * w.multiplicity * wt for v, w, wt in zip(vals, g.inputs, g.thr_weights))
        return int(s >= g.thr_threshold)
    raise ValidationError(f"unknown kind {g.kind}")


def eval_on_assignment(c: Circuit, x) -> int:
    """Evaluate the output gate on one assignment (sequence of 0/1, length n)."""
    if len(x) != c.n:
        raise ValidationError(f"assignment length {len(x)} != n={c.n}")
    values: dict[str, int] = {}

    def wire_val(w: WireRef) -> int:
        v = x[w.source - 1] if w.is_input() else values[w.source]
        return (1 - v) if w.negated else v

    for g in c.gates:
        values[g.gid] = _gate_value(g, wire_val)
    return values[c.output]


# -- vectorized all-assignment evaluation ------------------------------------

def _thr_fits_int64(g: Gate) -> bool:
    bound = sum(abs(w) * wire.multiplicity for w, wire in zip(g.thr_weights, g.inputs))
    bound += abs(g.thr_threshold)
    return bound < _INT64_SAFE


def _gate_values_block(g: Gate, val_of, n_rows: int) -> np.ndarray:
    """Vectorized gate semantics over a block of assignments."""
    wires = g.inputs

    def wv(w: WireRef) -> np.ndarray:
        v = val_of(w.source)
        return ~v if w.negated else v

    if g.kind == "NOT":
        return wv(wires[0])
    if g.kind == "AND":
        out = np.ones(n_rows, dtype=bool)
        for w in wires:
            out &= wv(w)
        return out
    if g.kind == "OR":
        out = np.zeros(n_rows, dtype=bool)
        for w in wires:
            out |= wv(w)
        return out
    if g.kind == "THR":
        if _thr_fits_int64(g):
            acc = np.zeros(n_rows, dtype=np.int64)
            for w, wt in zip(wires, g.thr_weights):
                eff = wt * w.multiplicity
                if eff:
                    acc += wv(w).astype(np.int64) * eff
            return acc >= g.thr_threshold
        acc = np.zeros(n_rows, dtype=object)
        for w, wt in zip(wires, g.thr_weights):
            eff = wt * w.multiplicity
            if eff:
                acc = acc + wv(w).astype(object) * eff
        return np.frompyfunc(lambda s: s >= g.thr_threshold, 1, 1)(acc).astype(bool)
    count = np.zeros(n_rows, dtype=np.int64)
    for w in wires:
        count += wv(w).astype(np.int64) * w.multiplicity
    if g.kind == "XOR":
        return (count & 1).astype(bool)
    if g.kind == "MOD":
        return count % g.modulus == 0
    if g.kind == "MAJ":
        return 2 * count > g.total_multiplicity
    if g.kind == "SYM":
        table = np.frombuffer(g.sym_table.encode(), dtype=np.uint8) - ord("0")
        return table[count].astype(bool)
    raise ValidationError(f"unknown kind {g.kind}")


def eval_all_assignments(c: Circuit, block: int = 1 << 20) -> np.ndarray:
    """Output value on every assignment, as a bool vector of length 2**n."""
    size = 1 << c.n
    out = np.empty(size, dtype=bool)
    # gates no longer needed after their last consumer can be dropped early
    last_use: dict[str, int] = {}
    for pos, g in enumerate(c.gates):
        for w in g.inputs:
            if not w.is_input():
                last_use[w.source] = pos
    last_use[c.output] = len(c.gates)
    for lo in range(0, size, block):
        hi = min(lo + block, size)
        idx = np.arange(lo, hi, dtype=np.uint64)
        inputs = {i: ((idx >> np.uint64(i - 1)) & np.uint64(1)).astype(bool)
                  for i in range(1, c.n + 1)}
        values: dict[str, np.ndarray] = {}

        def val_of(src):
            return inputs[src] if isinstance(src, int) else values[src]

        for pos, g in enumerate(c.gates):
            values[g.gid] = _gate_values_block(g, val_of, hi - lo)
            for w in g.inputs:
                if not w.is_input() and last_use.get(w.source) == pos and w.source != c.output:
                    values.pop(w.source, None)
        out[lo:hi] = values[c.output]
    return out


def brute_force_truth_table(c: Circuit, caps: Caps = DEFAULT_CAPS) -> TruthTableBitmap:
    if c.n > caps.oracle_n:
        raise OracleLimitExceeded(f"n={c.n} exceeds oracle limit {caps.oracle_n}")
    return TruthTableBitmap.from_bools(c.n, eval_all_assignments(c))


def brute_force_count_sat(c: Circuit, caps: Caps = DEFAULT_CAPS) -> int:
    return brute_force_truth_table(c, caps).popcount()


# -- shape classification -----------------------------------------------------

def _reachable(c: Circuit) -> set[str]:
    seen = {c.output}
    stack = [c.output]
    while stack:
        g = c.gate(stack.pop())
        for w in g.inputs:
            if not w.is_input() and w.source not in seen:
                seen.add(w.source)
                stack.append(w.source)
    return seen


def gate_depths(c: Circuit) -> dict[str, int]:
    depth: dict[str, int] = {}
    for g in c.gates:
        d = 0
        for w in g.inputs:
            d = max(d, depth[w.source] if not w.is_input() else 0)
        # free NOT gates do not add depth
        depth[g.gid] = d if g.kind == "NOT" else d + 1
    return depth


def classify_shape(c: Circuit) -> ShapeReport:
    c = normalize_not_gates(c)
    reach = _reachable(c)
    depths = gate_depths(c)
    depth = depths[c.output]
    tags: set[str] = set()
    top = c.output_gate
    lower = [c.gate(gid) for gid in reach if gid != c.output]
    bottoms_only_inputs = all(all(w.is_input() for w in g.inputs) for g in lower)
    top_reads_gates = any(not w.is_input() for w in top.inputs)
    if depth == 2 and bottoms_only_inputs and top_reads_gates:
        bot_kinds = {g.kind for g in lower}
        if top.kind in SYMMETRIC_KINDS and bot_kinds <= SYMMETRIC_KINDS:
            tags.add("SYM∘SYM")
        if top.kind in THRESHOLD_KINDS and bot_kinds <= THRESHOLD_KINDS:
            tags.add("THR∘THR")
        if top.kind == "AND" and bot_kinds <= THRESHOLD_KINDS:
            tags.add("AND∘THR")
        if top.kind in SYMMETRIC_KINDS and bot_kinds <= THRESHOLD_KINDS:
            tags.add("SYM∘THR")
    if depth >= 2:
        bottom_gates = [g for g in (c.gate(gid) for gid in reach)
                        if all(w.is_input() for w in g.inputs)]
        upper_gates = [g for g in (c.gate(gid) for gid in reach)
                       if any(not w.is_input() for w in g.inputs)]
        ac02 = all(g.kind in ("AND", "OR", "XOR") or (g.kind == "MOD" and g.modulus == 2)
                   for g in upper_gates)
        if upper_gates and ac02 and all(g.kind in SYMMETRIC_KINDS for g in bottom_gates):
            tags.add("AC0[2]∘SYM")
    if not tags:
        tags.add("generic")
    return ShapeReport(depth=depth, wire_count=c.wire_count(), tags=frozenset(tags))


# -- restriction --------------------------------------------------------------

def _const_gate(gid: str, value: int) -> Gate:
    return Gate(gid, "SYM", (), sym_table="1" if value else "0")


def restrict(c: Circuit, assignment: Mapping[int, int]) -> Circuit:
    """Plug fixed values into some inputs; remaining inputs are re-indexed
    preserving order.  The result agrees with c on every completion."""
    for i in assignment:
        if not (1 <= i <= c.n):
            raise ValidationError(f"assigned index x{i} out of range")
    c = normalize_not_gates(c)
    keep = [i for i in range(1, c.n + 1) if i not in assignment]
    remap = {old: new + 1 for new, old in enumerate(keep)}
    const: dict[str, int] = {}
    gates: list[Gate] = []

    for g in c.gates:
        live: list[WireRef] = []        # rewired surviving wires
        live_pos: list[int] = []        # their positions in g.inputs
        fixed_vals: list[int] = []      # values (negation applied)
        fixed_pos: list[int] = []
        for pos, w in enumerate(g.inputs):
            if w.is_input() and w.source in assignment:
                v = assignment[w.source]
            elif not w.is_input() and w.source in const:
                v = const[w.source]
            else:
                src = remap[w.source] if w.is_input() else w.source
                live.append(WireRef(src, w.negated, w.multiplicity))
                live_pos.append(pos)
                continue
            fixed_vals.append(v ^ (1 if w.negated else 0))
            fixed_pos.append(pos)
        ng = _restrict_gate(g, live, live_pos, fixed_vals, fixed_pos)
        if isinstance(ng, int):
            const[g.gid] = ng
        else:
            gates.append(ng)

    if c.output in const:
        gates.append(_const_gate(c.output, const[c.output]))
    return Circuit(len(keep), gates, c.output)


def _restrict_gate(g: Gate, live, live_pos, fixed_vals, fixed_pos) -> Gate | int:
    true_mult = sum(g.inputs[p].multiplicity
                    for p, v in zip(fixed_pos, fixed_vals) if v)
    if g.kind == "AND":
        if any(v == 0 for v in fixed_vals):
            return 0
        return Gate(g.gid, "AND", tuple(live)) if live else 1
    if g.kind == "OR":
        if any(v == 1 for v in fixed_vals):
            return 1
        return Gate(g.gid, "OR", tuple(live)) if live else 0
    if g.kind == "THR":
        t = g.thr_threshold - sum(g.thr_weights[p] * g.inputs[p].multiplicity * v
                                  for p, v in zip(fixed_pos, fixed_vals))
        if not live:
            return int(0 >= t)
        weights = tuple(g.thr_weights[p] for p in live_pos)
        return Gate(g.gid, "THR", tuple(live), thr_weights=weights, thr_threshold=t)
    # counting kinds reduce to a shifted SYM table
    total_live = sum(w.multiplicity for w in live)
    table = kind_sym_table(g)
    shifted = table[true_mult:true_mult + total_live + 1]
    if not live:
        return int(shifted[0])
    if g.kind == "XOR" and true_mult % 2 == 0:
        return Gate(g.gid, "XOR", tuple(live))
    if g.kind == "MOD" and true_mult % g.modulus == 0:
        return Gate(g.gid, "MOD", tuple(live), modulus=g.modulus)
    return Gate(g.gid, "SYM", tuple(live), sym_table="".join(map(str, shifted)))


def kind_sym_table(g: Gate) -> list[int]:
    """The SYM table (over v = number of true wires with multiplicity) that
    realizes a symmetric-kind gate.  THR is not symmetric and is rejected."""
    t = g.total_multiplicity
    if g.kind == "AND":
        return [int(v == t) for v in range(t + 1)]
    if g.kind == "OR":
        return [int(v >= 1) for v in range(t + 1)]
    if g.kind == "XOR":
        return [v & 1 for v in range(t + 1)]
    if g.kind == "MOD":
        return [int(v % g.modulus == 0) for v in range(t + 1)]
    if g.kind == "MAJ":
        return [int(2 * v > t) for v in range(t + 1)]
    if g.kind == "SYM":
        return [int(ch) for ch in g.sym_table]
    raise ValidationError(f"gate kind {g.kind} is not symmetric")


def as_sym_gate(g: Gate) -> Gate:
    """Convert a symmetric-kind gate to an equivalent explicit SYM gate."""
    table = "".join(map(str, kind_sym_table(g)))
    return Gate(g.gid, "SYM", g.inputs, sym_table=table)
