"""Finite groups as multiplication tables, with conjugacy-class structure.

Composition convention, fixed repo-wide: products read left to right.  For
permutations ``compose(p, q)`` applies ``p`` first and ``q`` second, and
``mul[g, h]`` is "g then h".  All derived values in the test suite are
computed under this convention.

Groups are immutable after validated construction; the tables are marked
read-only so they can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import GroupValidationError

CLOSURE_BOUND = 10_000
_EXHAUSTIVE_ASSOC_BOUND = 24
_ASSOC_SAMPLES = 4096


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    __slots__ = ("name", "order", "element_names", "mul", "inv", "identity")

    def __init__(
        self,
        mul: np.ndarray,
        name: str = "G",
        element_names: Sequence[str] | None = None,
    ):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int64))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise GroupValidationError(f"multiplication table must be square, got {mul.shape}")
        n = mul.shape[0]
        if n == 0:
            raise GroupValidationError("a group has at least one element")
        if mul.min() < 0 or mul.max() >= n:
            raise GroupValidationError("table entries must be element indices")

        rng = np.arange(n)
        # every row and column is a permutation of the elements
        for g in range(n):
            if len(set(mul[g].tolist())) != n:
                raise GroupValidationError(f"row {g} is not a permutation")
            if len(set(mul[:, g].tolist())) != n:
                raise GroupValidationError(f"column {g} is not a permutation")

        identity = None
        for e in range(n):
            if np.array_equal(mul[e], rng) and np.array_equal(mul[:, e], rng):
                identity = e
                break
        if identity is None:
            raise GroupValidationError("no identity element")

        inv = np.empty(n, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero(mul[g] == identity)
            if len(hits) != 1 or mul[hits[0], g] != identity:
                raise GroupValidationError(f"element {g} has no two-sided inverse")
            inv[g] = hits[0]

        if n <= _EXHAUSTIVE_ASSOC_BOUND:
            left = mul[mul]            # left[a,b,c] = (a*b)*c
            right = mul[:, mul]        # right[a,b,c] = a*(b*c)
            if not np.array_equal(left, right):
                raise GroupValidationError("multiplication is not associative")
        else:
            sampler = np.random.default_rng(0)
            triples = sampler.integers(0, n, size=(_ASSOC_SAMPLES, 3))
            for a, b, c in triples:
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    raise GroupValidationError("multiplication is not associative")

        if element_names is None:
            element_names = tuple(
                "e" if g == identity else f"g{g}" for g in range(n)
            )
        else:
            element_names = tuple(element_names)
            if len(element_names) != n:
                raise GroupValidationError("one name per element required")

        mul.setflags(write=False)
        inv.setflags(write=False)
        self.name = name
        self.order = n
        self.element_names = element_names
        self.mul = mul
        self.inv = inv
        self.identity = int(identity)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyClasses:
    """Orbit partition of a group under conjugation."""

    group: FiniteGroup
    class_of: np.ndarray            # element index -> class index
    representatives: tuple[int, ...]  # smallest element index per class
    sizes: tuple[int, ...]
    centralizer_sizes: tuple[int, ...]
    power_class_map: tuple[int, ...]  # class of rep**2 per class

    def __len__(self) -> int:
        return len(self.representatives)

    @property
    def identity_class(self) -> int:
        return int(self.class_of[self.group.identity])


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClasses:
    n = group.order
    mul, inv = group.mul, group.inv
    elems = np.arange(n)
    class_of = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    for g in range(n):
        if class_of[g] >= 0:
            continue
        orbit = mul[mul[elems, g], inv[elems]]  # h * g * h^-1 over all h
        class_of[orbit] = len(reps)
        reps.append(g)
    sizes = tuple(int((class_of == c).sum()) for c in range(len(reps)))
    if sum(sizes) != n or any(n % s for s in sizes):
        raise GroupValidationError("conjugacy class sizes are inconsistent")
    centralizers = tuple(n // s for s in sizes)
    power_map = tuple(int(class_of[mul[r, r]]) for r in reps)
    class_of.setflags(write=False)
    return ConjugacyClasses(
        group=group,
        class_of=class_of,
        representatives=tuple(reps),
        sizes=sizes,
        centralizer_sizes=centralizers,
        power_class_map=power_map,
    )


# ---------------------------------------------------------------------------
# construction from generators

def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Left-to-right composition: apply p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def perm_from_cycles(npoints: int, cycles: Iterable[Sequence[int]]) -> tuple[int, ...]:
    """Build a permutation of {0..npoints-1} from 1-based disjoint cycles."""
    images = list(range(npoints))
    for cycle in cycles:
        pts = [c - 1 for c in cycle]
        if any(not 0 <= p < npoints for p in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle {tuple(cycle)} on {npoints} points")
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
    return tuple(images)


def cycle_notation(perm: Sequence[int]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "e"


def _closure(
    generators: Sequence,
    product: Callable,
    identity,
    bound: int,
) -> list:
    """Breadth-first closure under right multiplication by the generators.

    Deterministic element order: discovery order, identity first.
    """
    elements = [identity]
    index = {identity: 0}
    cursor = 0
    while cursor < len(elements):
        current = elements[cursor]
        cursor += 1
        for g in generators:
            nxt = product(current, g)
            if nxt not in index:
                if len(elements) >= bound:
                    raise GroupValidationError(
                        f"closure exceeds the configured bound of {bound} elements"
                    )
                index[nxt] = len(elements)
                elements.append(nxt)
    return elements


def group_from_mul_function(
    generators: Sequence,
    product: Callable,
    identity,
    name: str = "G",
    label: Callable | None = None,
    bound: int = CLOSURE_BOUND,
) -> FiniteGroup:
    """Close hashable abstract elements under an associative product."""
    elements = _closure(generators, product, identity, bound)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            mul[i, j] = index[product(a, b)]
    names = tuple(label(e) for e in elements) if label else None
    return FiniteGroup(mul, name=name, element_names=names)


def group_from_generators(
    perms: Sequence[Sequence[int]],
    name: str = "G",
    bound: int = CLOSURE_BOUND,
) -> FiniteGroup:
    """Closure of permutations (0-based image tuples) under composition."""
    if not perms:
        raise GroupValidationError("at least one generator is required")
    npoints = len(perms[0])
    cleaned = []
    for p in perms:
        p = tuple(int(i) for i in p)
        if len(p) != npoints or sorted(p) != list(range(npoints)):
            raise GroupValidationError(f"not a permutation of {npoints} points: {p}")
        cleaned.append(p)
    identity = tuple(range(npoints))
    return group_from_mul_function(
        cleaned, compose, identity, name=name, label=cycle_notation, bound=bound
    )


# ---------------------------------------------------------------------------
# file format: "group <name> order <N>" then N rows of N element indices

def save_group(group: FiniteGroup, path) -> None:
    lines = [f"group {group.name} order {group.order}"]
    for row in group.mul:
        lines.append(" ".join(str(int(x)) for x in row))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _load_group_text(text: str, source: str) -> FiniteGroup:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GroupValidationError(f"{source}: empty group file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "group" or header[2] != "order":
        raise GroupValidationError(f"{source}: bad header {lines[0]!r}")
    name = header[1]
    try:
        order = int(header[3])
    except ValueError:
        raise GroupValidationError(f"{source}: bad order {header[3]!r}") from None
    if len(lines) - 1 != order:
        raise GroupValidationError(
            f"{source}: expected {order} table rows, found {len(lines) - 1}"
        )
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise GroupValidationError(f"{source}: non-integer table entry") from None
        if len(row) != order:
            raise GroupValidationError(f"{source}: row of length {len(row)} != {order}")
        rows.append(row)
    return FiniteGroup(np.array(rows, dtype=np.int64), name=name)


def load_group(path) -> FiniteGroup:
    with open(path, "r", encoding="ascii") as fh:
        return _load_group_text(fh.read(), str(path))


# ---------------------------------------------------------------------------
# built-in groups

def _quaternion_product(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    # elements (sign, axis) with axes 0=1, 1=i, 2=j, 3=k
    sa, xa = a
    sb, xb = b
    if xa == 0:
        return (sa * sb, xb)
    if xb == 0:
        return (sa * sb, xa)
    if xa == xb:
        return (-sa * sb, 0)
    # i*j=k, j*k=i, k*i=j and the reversed products carry a minus sign
    axis = ({1, 2, 3} - {xa, xb}).pop()
    sign = 1 if (xa, xb) in ((1, 2), (2, 3), (3, 1)) else -1
    return (sign * sa * sb, axis)


def _quaternion_label(element: tuple[int, int]) -> str:
    sign, axis = element
    body = "1ijk"[axis]
    return body if sign > 0 else f"-{body}"


def _build_cyclic(n: int) -> FiniteGroup:
    shift = tuple((i + 1) % n for i in range(n))
    return group_from_generators([shift], name=f"Z{n}")


def _build_q8() -> FiniteGroup:
    return group_from_mul_function(
        [(1, 1), (1, 2)],
        _quaternion_product,
        (1, 0),
        name="Q8",
        label=_quaternion_label,
    )


def _builtin_builders() -> dict[str, Callable[[], FiniteGroup]]:
    builders: dict[str, Callable[[], FiniteGroup]] = {
        f"Z{n}": (lambda n=n: _build_cyclic(n)) for n in range(1, 13)
    }
    builders["S3"] = lambda: group_from_generators(
        [perm_from_cycles(3, [(1, 2)]), perm_from_cycles(3, [(1, 2, 3)])], name="S3"
    )
    builders["S4"] = lambda: group_from_generators(
        [perm_from_cycles(4, [(1, 2)]), perm_from_cycles(4, [(1, 2, 3, 4)])], name="S4"
    )
    builders["D4"] = lambda: group_from_generators(
        [perm_from_cycles(4, [(1, 2, 3, 4)]), perm_from_cycles(4, [(1, 3)])], name="D4"
    )
    builders["D5"] = lambda: group_from_generators(
        [perm_from_cycles(5, [(1, 2, 3, 4, 5)]), perm_from_cycles(5, [(2, 5), (3, 4)])],
        name="D5",
    )
    builders["A4"] = lambda: group_from_generators(
        [perm_from_cycles(4, [(1, 2, 3)]), perm_from_cycles(4, [(1, 2), (3, 4)])],
        name="A4",
    )
    builders["Q8"] = _build_q8
    return builders


_BUILDERS = _builtin_builders()


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILDERS, key=lambda s: (s[0], len(s), s)))


def build_builtin(name: str) -> FiniteGroup:
    """Construct a built-in group from scratch (used to generate the data assets)."""
    key = _canonical_name(name)
    return _BUILDERS[key]()


def _canonical_name(name: str) -> str:
    for key in _BUILDERS:
        if key.lower() == name.lower():
            return key
    raise KeyError(f"unknown built-in group {name!r}; choose from {builtin_names()}")


def _data_root():
    return resources.files("wordfourier").joinpath("data")


def builtin_group(name: str) -> FiniteGroup:
    """Load a built-in group from the shipped data assets."""
    key = _canonical_name(name)
    text = _data_root().joinpath("groups", f"{key}.grp").read_text(encoding="ascii")
    return _load_group_text(text, f"builtin:{key}")
