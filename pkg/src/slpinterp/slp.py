"""Straight-line programs: data model, text format, probe engine, generators.

Text format::

    slp 1
    inputs 1
    ring zmod 2305843009213693951
    c0 = mul in0 in0
    c1 = const 3
    c2 = add c0 c1

Operands are ``in<j>`` (an input) or ``c<k>`` for an earlier instruction.
The last instruction is the output. ``#`` starts a comment. The ``slp 1`` and
``ring`` lines are optional on input (default ring: Z/(2^61 - 1)) and always
written on output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .ledger import ProbeLedger
from .ring import DEFAULT_RING, CyclicPoly, RingSpec, cyclic_add, cyclic_mul, cyclic_sub
from .sparsepoly import SparsePoly

BINOPS = ("add", "sub", "mul")


class Ref(NamedTuple):
    kind: str  # "in" or "c"
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class Instruction:
    op: str
    value: int | None = None
    left: Ref | None = None
    right: Ref | None = None

    @classmethod
    def const(cls, value: int) -> Instruction:
        return cls("const", value=value)

    @classmethod
    def binop(cls, op: str, left: Ref, right: Ref) -> Instruction:
        if op not in BINOPS:
            raise ValueError(f"unknown operation {op!r}")
        return cls(op, left=Ref(*left), right=Ref(*right))

    def __str__(self):
        if self.op == "const":
            return f"const {self.value}"
        return f"{self.op} {self.left} {self.right}"


class SlpError(ValueError):
    """Malformed program, with an optional 1-based source position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Slp:
    num_inputs: int
    instructions: tuple[Instruction, ...]
    ring: RingSpec = DEFAULT_RING

    def __post_init__(self):
        object.__setattr__(self, "instructions", tuple(self.instructions))
        if self.num_inputs < 1:
            raise SlpError(f"need at least one input, got {self.num_inputs}")
        if not self.instructions:
            raise SlpError("program has no instructions")
        for i, ins in enumerate(self.instructions):
            if ins.op == "const":
                if not isinstance(ins.value, int):
                    raise SlpError(f"c{i}: constant must be an integer")
                continue
            if ins.op not in BINOPS:
                raise SlpError(f"c{i}: unknown operation {ins.op!r}")
            for ref in (ins.left, ins.right):
                if ref.kind == "in" and not 0 <= ref.index < self.num_inputs:
                    raise SlpError(f"c{i}: input {ref} out of range")
                if ref.kind == "c" and not 0 <= ref.index < i:
                    raise SlpError(f"c{i}: {ref} is not an earlier instruction")
                if ref.kind not in ("in", "c"):
                    raise SlpError(f"c{i}: bad operand {ref!r}")

    def __len__(self):
        return len(self.instructions)

    def to_text(self) -> str:
        return format_slp(self)


# parsing --------------------------------------------------------------------

_INT = r"[+-]?\d+"
_REF = re.compile(r"(in|c)(\d+)$")


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-split tokens with their 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_slp(text: str | bytes) -> Slp:
    """Parse and validate a program; raises :class:`SlpError` with a position."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SlpError(f"input is not UTF-8 ({exc.reason})", 1, 1) from None
    num_inputs = None
    ring = DEFAULT_RING
    instructions: list[Instruction] = []
    seen_header = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        head, col = toks[0]

        def fail(msg, column=col):
            raise SlpError(msg, lineno, column)

        if head == "slp":
            if seen_header or num_inputs is not None or instructions:
                fail("'slp' header must come first")
            if len(toks) != 2 or toks[1][0] != "1":
                fail("unsupported header; expected 'slp 1'")
            seen_header = True
        elif head == "inputs":
            if num_inputs is not None:
                fail("duplicate 'inputs' line")
            if instructions:
                fail("'inputs' must precede instructions")
            if len(toks) != 2 or not re.fullmatch(r"\d+", toks[1][0]):
                fail("expected 'inputs <N>'")
            num_inputs = int(toks[1][0])
            if num_inputs < 1:
                fail("need at least one input", toks[1][1])
        elif head == "ring":
            if instructions:
                fail("'ring' must precede instructions")
            try:
                ring = RingSpec.parse(" ".join(t for t, _ in toks[1:]))
            except ValueError as exc:
                fail(str(exc))
        else:
            if num_inputs is None:
                fail("missing 'inputs <N>' before first instruction")
            instructions.append(_parse_instruction(toks, len(instructions), num_inputs, lineno))

    if num_inputs is None:
        raise SlpError("missing 'inputs <N>' line", 1, 1)
    if not instructions:
        raise SlpError("program has no instructions", 1, 1)
    return Slp(num_inputs, tuple(instructions), ring)


def _parse_instruction(toks, i, num_inputs, lineno) -> Instruction:
    def fail(msg, column):
        raise SlpError(msg, lineno, column)

    name, col = toks[0]
    if not re.fullmatch(r"c\d+", name):
        fail(f"expected instruction name 'c{i}', got {name!r}", col)
    if int(name[1:]) != i:
        fail(f"instruction indices must be dense: expected 'c{i}', got {name!r}", col)
    if len(toks) < 3 or toks[1][0] != "=":
        fail("expected '='", toks[1][1] if len(toks) > 1 else col + len(name))
    op, opcol = toks[2]
    args = toks[3:]
    if op == "const":
        if len(args) != 1:
            fail("expected 'const <int>'", opcol)
        if not re.fullmatch(_INT, args[0][0]):
            fail(f"constant {args[0][0]!r} is not an integer", args[0][1])
        return Instruction.const(int(args[0][0]))
    if op not in BINOPS:
        fail(f"unknown operation {op!r}", opcol)
    if len(args) != 2:
        fail(f"'{op}' takes two operands", opcol)
    refs = []
    for tok, tcol in args:
        m = _REF.match(tok)
        if not m:
            fail(f"bad operand {tok!r}", tcol)
        ref = Ref(m.group(1), int(m.group(2)))
        if ref.kind == "in" and ref.index >= num_inputs:
            fail(f"input index out of range: {tok} (program has {num_inputs} inputs)", tcol)
        if ref.kind == "c" and ref.index >= i:
            fail(f"forward reference to {tok} from c{i}", tcol)
        refs.append(ref)
    return Instruction.binop(op, *refs)


def format_slp(slp: Slp) -> str:
    lines = ["slp 1", f"inputs {slp.num_inputs}",
             f"ring zmod {slp.ring.modulus}" if slp.ring.kind == "zmod" else "ring int"]
    lines += [f"c{i} = {ins}" for i, ins in enumerate(slp.instructions)]
    return "\n".join(lines) + "\n"


# evaluation -----------------------------------------------------------------

_CYCLIC_OPS = {"add": cyclic_add, "sub": cyclic_sub, "mul": cyclic_mul}


def _input_exponents(slp: Slp, input_exponents) -> list[int]:
    if input_exponents is None:
        if slp.num_inputs != 1:
            raise ValueError("multivariate program: input exponents are required")
        return [1]
    exps = [int(k) for k in input_exponents]
    if len(exps) != slp.num_inputs:
        raise ValueError(f"expected {slp.num_inputs} input exponents, got {len(exps)}")
    return exps


def probe(slp: Slp, order: int, input_exponents: Sequence[int] | None = None,
          ledger: ProbeLedger | None = None) -> CyclicPoly:
    """Run the program in R[z]/(z^order - 1) with input j set to z^(k_j).

    Univariate programs default to the single input z. Records one probe of
    degree ``order`` in ``ledger``.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"probe degree must be a positive integer, got {order!r}")
    exps = _input_exponents(slp, input_exponents)
    ring = slp.ring
    inputs = [CyclicPoly.monomial(ring, order, k) for k in exps]
    vals: list[CyclicPoly] = []
    for ins in slp.instructions:
        if ins.op == "const":
            vals.append(CyclicPoly.constant(ring, order, ins.value))
            continue
        a = inputs[ins.left.index] if ins.left.kind == "in" else vals[ins.left.index]
        b = inputs[ins.right.index] if ins.right.kind == "in" else vals[ins.right.index]
        vals.append(_CYCLIC_OPS[ins.op](a, b))
    if ledger is not None:
        ledger.record(order)
    return vals[-1]


def probe_diff(slp: Slp, fstar: SparsePoly, order: int,
               input_exponents: Sequence[int] | None = None,
               ledger: ProbeLedger | None = None) -> CyclicPoly:
    """(f - fstar) mod (z^order - 1), where f is computed by ``slp``."""
    if fstar.ring != slp.ring:
        raise ValueError(f"ring mismatch: {fstar.ring} != {slp.ring}")
    image = probe(slp, order, input_exponents, ledger)
    if fstar.is_zero():
        return image
    return cyclic_sub(image, fstar.reduce_mod_cyclic(order))


def _vector_dtype(ring: RingSpec):
    # int64 is exact when products of two residues stay below 2^63.
    if ring.kind == "zmod" and ring.modulus < (1 << 31):
        return np.int64
    return object


def eval_points(slp: Slp, points: Iterable[int], ledger: ProbeLedger | None = None) -> list[int]:
    """f(x) for each point x, replaying the program in the base ring.

    Vectorised across points. Each point counts as one probe of degree 1.
    """
    if slp.num_inputs != 1:
        raise ValueError(f"point evaluation needs a univariate program, got {slp.num_inputs} inputs")
    ring = slp.ring
    q = ring.modulus
    pts = [ring.reduce(int(x)) for x in points]
    if not pts:
        return []
    dtype = _vector_dtype(ring)
    x = np.array(pts, dtype=dtype)
    vals = []
    for ins in slp.instructions:
        if ins.op == "const":
            v = np.full(len(pts), ring.reduce(ins.value), dtype=dtype)
        else:
            a = x if ins.left.kind == "in" else vals[ins.left.index]
            b = x if ins.right.kind == "in" else vals[ins.right.index]
            if ins.op == "add":
                v = a + b
            elif ins.op == "sub":
                v = a - b
            else:
                v = a * b
            if q is not None:
                v %= q
        vals.append(v)
    if ledger is not None:
        for _ in pts:
            ledger.record(1)
    return [int(v) for v in vals[-1]]


# instance generation --------------------------------------------------------

def slp_from_monomials(ring: RingSpec, num_inputs: int,
                       terms: Iterable[tuple[Sequence[int], int]]) -> Slp:
    """Square-and-multiply program for sum of c * prod(z_j^a_j).

    Repeated squarings of each input are shared between terms, so the length
    is O(t log d) for t terms of partial degree at most d.
    """
    code: list[Instruction] = []
    powers = [[Ref("in", j)] for j in range(num_inputs)]

    def emit(ins):
        code.append(ins)
        return Ref("c", len(code) - 1)

    def power_of_two(j, bit):
        chain = powers[j]
        while len(chain) <= bit:
            chain.append(emit(Instruction.binop("mul", chain[-1], chain[-1])))
        return chain[bit]

    total = None
    for exps, c in terms:
        c = ring.reduce(int(c))
        if not c:
            continue
        if len(exps) != num_inputs:
            raise ValueError(f"exponent vector {exps!r} has wrong length")
        factors = []
        for j, e in enumerate(exps):
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            for bit in range(int(e).bit_length()):
                if e >> bit & 1:
                    factors.append(power_of_two(j, bit))
        term = None
        for ref in factors:
            term = ref if term is None else emit(Instruction.binop("mul", term, ref))
        if term is None:
            term = emit(Instruction.const(c))
        elif c != 1:
            term = emit(Instruction.binop("mul", emit(Instruction.const(c)), term))
        total = term if total is None else emit(Instruction.binop("add", total, term))

    if total is None:
        code = [Instruction.const(0)]
    elif total != Ref("c", len(code) - 1):
        # the output must be the last instruction; a bare input needs a wrapper
        one = emit(Instruction.const(1))
        emit(Instruction.binop("mul", total, one))
    return Slp(num_inputs, tuple(code), ring)


def slp_from_sparse(f: SparsePoly) -> Slp:
    """A univariate program computing exactly f."""
    return slp_from_monomials(f.ring, 1, (((e,), c) for e, c in f.terms))


def _randbelow(rng: np.random.Generator, n: int) -> int:
    if n < (1 << 62):
        return int(rng.integers(n))
    nbytes = (n.bit_length() + 7) // 8 + 1
    limit = (256 ** nbytes // n) * n
    while True:
        r = int.from_bytes(rng.bytes(nbytes), "little")
        if r < limit:
            return r % n


def random_coefficient(rng: np.random.Generator, ring: RingSpec, int_bound: int = 1 << 16) -> int:
    """Uniform nonzero element; for Z, uniform on [-int_bound, int_bound] minus 0."""
    if ring.kind == "zmod":
        return 1 + _randbelow(rng, ring.modulus - 1)
    c = _randbelow(rng, 2 * int_bound) - int_bound
    return c if c < 0 else c + 1


def random_sparse(rng: np.random.Generator, terms: int, degree: int,
                  ring: RingSpec = DEFAULT_RING) -> SparsePoly:
    """Random polynomial with exactly ``terms`` distinct exponents in [0, degree]."""
    if terms < 0 or degree < 0 and terms > 0:
        raise ValueError("terms must be >= 0 and degree >= 0")
    if terms > degree + 1:
        raise ValueError(f"cannot place {terms} distinct exponents in [0, {degree}]")
    if 2 * terms > degree + 1:
        exps = [int(e) for e in rng.choice(degree + 1, size=terms, replace=False)]
    else:
        seen: set[int] = set()
        exps = []
        while len(exps) < terms:
            e = _randbelow(rng, degree + 1)
            if e not in seen:
                seen.add(e)
                exps.append(e)
    return SparsePoly.from_terms(ring, [(e, random_coefficient(rng, ring)) for e in exps])
