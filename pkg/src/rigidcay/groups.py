"""Concrete small finite groups: cyclic groups, direct products and SL(n, p).

Elements are dense integer ids in ``range(order)``.  Each group also knows a
structured form of its elements (a residue, a pair, or a matrix as a tuple of
row tuples) so that ids can be printed and parsed.  Left-multiplication rows
``s * x`` for all ``x`` are computed with numpy and cached while the group is
small enough for a full table.
"""

from __future__ import annotations

import ast
import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CapacityExceeded, InvalidGenerator, InvalidParameter

DEFAULT_CAPACITY = 10**6
TABLE_CAP = 10**4
# Largest number of candidate matrices scanned when enumerating SL(n, p).
ENUMERATION_CAP = 10**8
CAPACITY_ENV = "RIGIDCAY_CAPACITY"


def resolve_capacity(capacity: int | None = None, default: int = DEFAULT_CAPACITY) -> int:
    if capacity is not None:
        return int(capacity)
    env = os.environ.get(CAPACITY_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameter(f"{CAPACITY_ENV} must be an integer, got {env!r}") from None
    return default


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def sl_order(n: int, p: int) -> int:
    """Closed-form order of SL(n, p): prod(p^n - p^k) / (p - 1)."""
    total = 1
    for k in range(n):
        total *= p**n - p**k
    return total // (p - 1)


class FiniteGroup:
    """Abstract finite group over integer element ids."""

    order: int
    identity: int

    def __init__(self) -> None:
        self._rows: dict[int, np.ndarray] = {}

    # -- structure -------------------------------------------------------
    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    def element(self, g: int):
        """Structured form of element ``g``."""
        raise NotImplementedError

    def index(self, value) -> int:
        """Element id of a structured value."""
        raise NotImplementedError

    def label(self, g: int) -> str:
        raise NotImplementedError

    def parse_element(self, text: str) -> int:
        """Parse an element written either as an id or as a structured literal."""
        text = text.strip()
        if re.fullmatch(r"-?\d+", text):
            g = int(text)
            self._check(g)
            return g
        try:
            value = ast.literal_eval(text)
        except (ValueError, SyntaxError):
            raise InvalidParameter(f"cannot parse group element {text!r}") from None
        return self.index(_freeze(value))

    # -- arithmetic ------------------------------------------------------
    def _mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _row(self, a: int) -> np.ndarray:
        raise NotImplementedError

    def _inv(self, a: int) -> int:
        raise NotImplementedError

    def left_row(self, a: int) -> np.ndarray:
        """Array ``r`` with ``r[x] == a * x`` for every element ``x``."""
        row = self._rows.get(a)
        if row is None:
            row = self._row(a)
            row.setflags(write=False)
            if self.order <= TABLE_CAP:
                self._rows[a] = row
        return row

    def multiply(self, a: int, b: int) -> int:
        if not (0 <= a < self.order and 0 <= b < self.order):
            raise InvalidParameter(f"element ids ({a}, {b}) outside [0, {self.order})")
        if a in self._rows:
            return int(self._rows[a][b])
        return self._mul(a, b)

    def invert(self, a: int) -> int:
        self._check(a)
        return self._inv(a)

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.multiply(a, out)
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.multiply(a, x)
            k += 1
        return k

    @property
    def elements(self) -> range:
        return range(self.order)

    def _check(self, g: int) -> None:
        if not 0 <= g < self.order:
            raise InvalidParameter(f"element id {g} outside [0, {self.order})")

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.descriptor} order={self.order}>"


class CyclicGroup(FiniteGroup):
    def __init__(self, n: int):
        super().__init__()
        self.n = n
        self.order = n
        self.identity = 0

    @property
    def descriptor(self) -> str:
        return f"cyclic:{self.n}"

    def element(self, g: int) -> int:
        self._check(g)
        return g

    def label(self, g: int) -> str:
        self._check(g)
        return str(g)

    def index(self, value) -> int:
        if not isinstance(value, int):
            raise InvalidParameter(f"{value!r} is not a residue")
        return value % self.n

    def _mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def _row(self, a: int) -> np.ndarray:
        return (np.arange(self.n, dtype=np.int64) + a) % self.n

    def _inv(self, a: int) -> int:
        return (-a) % self.n


class ProductGroup(FiniteGroup):
    """Direct product; id of (a, b) is ``a * |second| + b``."""

    def __init__(self, first: FiniteGroup, second: FiniteGroup):
        super().__init__()
        self.first = first
        self.second = second
        self.order = first.order * second.order
        self.identity = self.pair_id(first.identity, second.identity)

    @property
    def descriptor(self) -> str:
        return f"product:({self.first.descriptor},{self.second.descriptor})"

    def pair_id(self, a: int, b: int) -> int:
        return a * self.second.order + b

    def split(self, g: int) -> tuple[int, int]:
        return divmod(g, self.second.order)

    def element(self, g: int):
        self._check(g)
        a, b = self.split(g)
        return (self.first.element(a), self.second.element(b))

    def label(self, g: int) -> str:
        self._check(g)
        a, b = self.split(g)
        return f"({self.first.label(a)},{self.second.label(b)})"

    def index(self, value) -> int:
        if not (isinstance(value, tuple) and len(value) == 2):
            raise InvalidParameter(f"{value!r} is not a pair")
        return self.pair_id(self.first.index(value[0]), self.second.index(value[1]))

    def _mul(self, a: int, b: int) -> int:
        a1, a2 = self.split(a)
        b1, b2 = self.split(b)
        return self.pair_id(self.first.multiply(a1, b1), self.second.multiply(a2, b2))

    def _row(self, a: int) -> np.ndarray:
        a1, a2 = self.split(a)
        r1 = self.first.left_row(a1)
        r2 = self.second.left_row(a2)
        return (r1[:, None] * self.second.order + r2[None, :]).ravel()

    def _inv(self, a: int) -> int:
        a1, a2 = self.split(a)
        return self.pair_id(self.first.invert(a1), self.second.invert(a2))


class SpecialLinearGroup(FiniteGroup):
    """SL(n, p) with ids in lexicographic order of row-major entries."""

    def __init__(self, n: int, p: int, matrices: np.ndarray):
        super().__init__()
        self.n = n
        self.p = p
        self.matrices = matrices
        self.matrices.setflags(write=False)
        self.order = len(matrices)
        self._weights = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
        self._codes = matrices.reshape(self.order, n * n) @ self._weights
        self.identity = self.index(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def descriptor(self) -> str:
        return f"sl:{self.n}:{self.p}"

    def element(self, g: int):
        self._check(g)
        return tuple(tuple(int(x) for x in row) for row in self.matrices[g])

    def label(self, g: int) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.element(g)) + "]"

    def matrix(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def _ids_of(self, mats: np.ndarray) -> np.ndarray:
        codes = mats.reshape(len(mats), self.n * self.n) @ self._weights
        ids = np.searchsorted(self._codes, codes)
        ok = (ids < self.order) & (self._codes[np.minimum(ids, self.order - 1)] == codes)
        if not ok.all():
            raise InvalidParameter("matrix is not in SL(n, p)")
        return ids

    def index(self, value) -> int:
        mat = np.asarray(value, dtype=np.int64)
        if mat.shape != (self.n, self.n):
            raise InvalidParameter(f"expected a {self.n}x{self.n} matrix, got {value!r}")
        return int(self._ids_of((mat % self.p)[None])[0])

    def _mul(self, a: int, b: int) -> int:
        prod = (self.matrices[a] @ self.matrices[b]) % self.p
        return int(self._ids_of(prod[None])[0])

    def _row(self, a: int) -> np.ndarray:
        prod = np.einsum("ij,bjk->bik", self.matrices[a], self.matrices) % self.p
        return self._ids_of(prod)

    def _inv(self, a: int) -> int:
        inv = _matrix_inverse_mod(self.matrices[a], self.p)
        return int(self._ids_of(inv[None])[0])


def _matrix_inverse_mod(mat: np.ndarray, p: int) -> np.ndarray:
    n = mat.shape[0]
    aug = np.concatenate([mat.astype(np.int64) % p, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r, col] % p)
        aug[[col, pivot]] = aug[[pivot, col]]
        aug[col] = (aug[col] * pow(int(aug[col, col]), -1, p)) % p
        for r in range(n):
            if r != col and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[col]) % p
    return aug[:, n:]


def _det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a batch of square matrices (Leibniz expansion)."""
    n = mats.shape[1]
    det = np.zeros(len(mats), dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = np.ones(len(mats), dtype=np.int64)
        for i, j in enumerate(perm):
            term = (term * mats[:, i, j]) % p
        det = (det - term) % p if inversions % 2 else (det + term) % p
    return det


# -- constructors ------------------------------------------------------------

def make_cyclic(n: int, capacity: int | None = None) -> CyclicGroup:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameter(f"cyclic group order must be >= 1, got {n!r}")
    cap = resolve_capacity(capacity)
    if n > cap:
        raise CapacityExceeded(f"cyclic:{n} exceeds capacity {cap}")
    return CyclicGroup(int(n))


def direct_product(g1: FiniteGroup, g2: FiniteGroup, capacity: int | None = None) -> ProductGroup:
    cap = resolve_capacity(capacity)
    if g1.order * g2.order > cap:
        raise CapacityExceeded(f"product order {g1.order * g2.order} exceeds capacity {cap}")
    return ProductGroup(g1, g2)


def make_sl(n: int, p: int, capacity: int | None = None) -> SpecialLinearGroup:
    """Enumerate SL(n, p) by scanning all n x n matrices over F_p."""
    if n < 2:
        raise InvalidParameter(f"SL(n, p) needs n >= 2, got {n}")
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    cap = resolve_capacity(capacity)
    expected = sl_order(n, p)
    if expected > cap:
        raise CapacityExceeded(f"|SL({n},{p})| = {expected} exceeds capacity {cap}")
    total = p ** (n * n)
    if total > ENUMERATION_CAP:
        raise CapacityExceeded(f"enumerating {total} matrices for SL({n},{p}) is too large")

    found = []
    chunk = 1 << 20
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((len(codes), n * n), dtype=np.int64)
        rest = codes
        for pos in range(n * n - 1, -1, -1):
            digits[:, pos] = rest % p
            rest = rest // p
        mats = digits.reshape(-1, n, n)
        found.append(mats[_det_mod(mats, p) == 1])
    matrices = np.concatenate(found)
    if len(matrices) != expected:
        raise AssertionError(f"enumerated {len(matrices)} elements of SL({n},{p}), formula gives {expected}")
    return SpecialLinearGroup(n, p, matrices)


def elementary_matrix(n: int, p: int, i: int, j: int) -> tuple:
    """E_{i,j} = I + e_{i,j} with 1-based indices."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise InvalidParameter(f"bad elementary position ({i},{j}) for n={n}")
    return tuple(tuple(int(r == c or (r == i - 1 and c == j - 1)) % p for c in range(n)) for r in range(n))


# -- descriptors -------------------------------------------------------------

def parse_descriptor(text: str, capacity: int | None = None) -> FiniteGroup:
    """Build a group from ``cyclic:6``, ``sl:2:3`` or ``product:(A,B[,...])``."""
    text = text.strip()
    if text.startswith("cyclic:"):
        return make_cyclic(_int(text[7:], text), capacity)
    if text.startswith("sl:"):
        parts = text[3:].split(":")
        if len(parts) != 2:
            raise InvalidParameter(f"bad SL descriptor {text!r}")
        return make_sl(_int(parts[0], text), _int(parts[1], text), capacity)
    if text.startswith("product:(") and text.endswith(")"):
        parts = _split_top(text[9:-1])
        if len(parts) < 2:
            raise InvalidParameter(f"product needs at least two factors: {text!r}")
        group = parse_descriptor(parts[0], capacity)
        for part in parts[1:]:
            group = direct_product(group, parse_descriptor(part, capacity), capacity)
        return group
    raise InvalidParameter(f"unknown group descriptor {text!r}")


def _int(s: str, ctx: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise InvalidParameter(f"bad integer {s!r} in descriptor {ctx!r}") from None


def _split_top(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _freeze(value):
    if isinstance(value, (list, tuple)):
        return tuple(_freeze(v) for v in value)
    return value


# -- subgroups and generating sets ------------------------------------------

def subgroup_closure(group: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing ``seed`` (worklist closure under left multiplication)."""
    gens = set(seed)
    for g in gens:
        group._check(g)
    gens |= {group.invert(g) for g in gens}
    gens.discard(group.identity)
    reached = np.zeros(group.order, dtype=bool)
    reached[group.identity] = True
    frontier = np.array([group.identity], dtype=np.int64)
    rows = [group.left_row(g) for g in sorted(gens)]
    while len(frontier):
        step = np.unique(np.concatenate([row[frontier] for row in rows])) if rows else frontier[:0]
        new = step[~reached[step]]
        reached[new] = True
        frontier = new
    return frozenset(np.flatnonzero(reached).tolist())


@dataclass(frozen=True)
class GeneratorSet:
    group: FiniteGroup
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(int(g) for g in self.elements))
        for g in self.elements:
            self.group._check(g)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    @property
    def is_symmetric(self) -> bool:
        return all(self.group.invert(g) in self.elements for g in self.elements)


def symmetric_closure(gens: GeneratorSet) -> GeneratorSet:
    group = gens.group
    if group.identity in gens.elements:
        raise InvalidGenerator("identity element in generating set")
    return GeneratorSet(group, gens.elements | {group.invert(g) for g in gens.elements})


def is_generating(gens: GeneratorSet) -> bool:
    return len(subgroup_closure(gens.group, gens.elements)) == gens.group.order


def elementary_generators(n: int, p: int, capacity: int | None = None,
                          group: SpecialLinearGroup | None = None) -> GeneratorSet:
    """{E_{i,i+1}, E_{i+1,i} : 1 <= i < n} in SL(n, p)."""
    group = group or make_sl(n, p, capacity)
    mats = [elementary_matrix(n, p, i, i + 1) for i in range(1, n)]
    mats += [elementary_matrix(n, p, i + 1, i) for i in range(1, n)]
    return GeneratorSet(group, {group.index(m) for m in mats})


def triangular_generators(n: int, p: int, side: str = "upper", capacity: int | None = None,
                          group: SpecialLinearGroup | None = None) -> frozenset[int]:
    """All unipotent upper (or lower) triangular matrices except the identity."""
    if side not in ("upper", "lower"):
        raise InvalidParameter(f"side must be 'upper' or 'lower', got {side!r}")
    group = group or make_sl(n, p, capacity)
    mats = group.matrices
    diag_ok = (np.diagonal(mats, axis1=1, axis2=2) == 1).all(axis=1)
    mask = np.tril(np.ones((n, n), dtype=bool), -1) if side == "upper" else np.triu(np.ones((n, n), dtype=bool), 1)
    zero_ok = (mats[:, mask] == 0).all(axis=1)
    ids = np.flatnonzero(diag_ok & zero_ok)
    return frozenset(int(i) for i in ids if i != group.identity)
