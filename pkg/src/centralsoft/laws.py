"""Exhaustive and sampled verification of the algebraic laws.

Every law is a predicate over an *instance*, a tuple whose items are
central soft sets, families (lists) of them, or parameter masks.  A law
knows how to list all of its instances over an enumerated context and how
to draw random ones, so :func:`check_law` runs unchanged in both modes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import product
from typing import Any, Callable, Iterator, Sequence

from .algebra import (
    CentralSoftSet,
    complement,
    difference,
    family_union,
    intersection,
    leq,
    project,
    union,
)
from .context import Context
from .errors import EnumerationTooLarge, NoUpperBound, UnknownLaw
from .workspace import css_to_doc

ENUMERATION_LIMIT = 1 << 16
LUB_ORACLE_LIMIT = 1 << 10
MAX_COUNTEREXAMPLES = 10
MAX_FAMILY = 3


def small_context(n_objects: int, n_params: int) -> Context:
    return Context(
        [f"o{i + 1}" for i in range(n_objects)], [f"e{i + 1}" for i in range(n_params)]
    )


def _subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, starting with ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def enumeration_size(context: Context) -> int:
    n, m = context.n_params, context.n_objects
    return 2**n * 2 ** (m * n)


def enumerate_css(context: Context, limit: int = ENUMERATION_LIMIT) -> list[CentralSoftSet]:
    """Every central soft set over ``context`` exactly once.

    Order: central mask ascending, then images as a little-endian counter.
    """
    size = enumeration_size(context)
    if size > limit:
        raise EnumerationTooLarge(f"{size} central soft sets exceed the limit {limit}")
    n, m = context.n_params, context.n_objects
    obj_range = range(1 << m)
    out = []
    for central in range(1 << n):
        for images in product(obj_range, repeat=n):
            out.append(CentralSoftSet._trusted(context, central, tuple(reversed(images))))
    return out


class _Lattice:
    """All sets over a context with their up-sets as bitmasks.

    Indices follow a linear extension of the order (central size, then total
    image size), so the least element of any up-closed family of indices is
    its lowest set bit.
    """

    def __init__(self, context: Context) -> None:
        sets = enumerate_css(context, LUB_ORACLE_LIMIT)
        sets.sort(key=lambda s: (bin(s.central).count("1"), sum(bin(x).count("1") for x in s.images)))
        self.sets = sets
        self.index = {s: i for i, s in enumerate(sets)}
        up = []
        for s in sets:
            mask = 0
            for j, t in enumerate(sets):
                if leq(s, t):
                    mask |= 1 << j
            up.append(mask)
        self.up = up
        self.everything = (1 << len(sets)) - 1


@lru_cache(maxsize=8)
def _lattice(context: Context) -> _Lattice:
    return _Lattice(context)


def lub_oracle(family: Sequence[CentralSoftSet], context: Context) -> CentralSoftSet:
    """Least upper bound found by searching every set over ``context``."""
    lat = _lattice(context)
    bounds = lat.everything
    for member in family:
        bounds &= lat.up[lat.index[member]]
    if not bounds:
        raise NoUpperBound("family has no upper bound")
    least = (bounds & -bounds).bit_length() - 1
    if bounds & ~lat.up[least]:
        raise NoUpperBound("upper bounds have no least element")
    return lat.sets[least]


# -- law predicates ---------------------------------------------------------


def _demorgan(a, b):
    return complement(intersection(a, b)) == union(complement(a), complement(b)) and complement(
        union(a, b)
    ) == intersection(complement(a), complement(b))


def _assoc(a, b, c):
    return intersection(a, intersection(b, c)) == intersection(
        intersection(a, b), c
    ) and union(a, union(b, c)) == union(union(a, b), c)


def _distrib(a, b, c):
    return intersection(a, union(b, c)) == union(
        intersection(a, b), intersection(a, c)
    ) and union(a, intersection(b, c)) == intersection(union(a, b), union(a, c))


def _diff_chain(a, b, c):
    return difference(difference(a, b), c) == difference(a, union(b, c))


def _diff_shrink(a, b):
    return leq(difference(a, b), a)


def _order_partial(a, b, c):
    if not leq(a, a):
        return False
    if leq(a, b) and leq(b, a) and a != b:
        return False
    if leq(a, b) and leq(b, c) and not leq(a, c):
        return False
    return True


def _order_equiv(a, b):
    return leq(a, b) == (union(a, b) == b) == (intersection(a, b) == a)


def _family_lub(family, context, bounds=None):
    joined = family_union(family, context)
    if not all(leq(m, joined) for m in family):
        return False
    if family and joined != reduce(union, family):
        return False
    if bounds is None:
        return joined == lub_oracle(family, context)
    # sampled mode: context too large to enumerate, so compare against
    # upper bounds built straight from the order's pointwise condition
    tightest, others = bounds[0], bounds[1:]
    if joined != tightest:
        return False
    for g in others:
        if not all(leq(m, g) for m in family) or not leq(joined, g):
            return False
    return True


def _inf_distrib(a, family):
    ctx = a.context
    lhs = intersection(a, family_union(family, ctx))
    return lhs == family_union([intersection(a, s) for s in family], ctx)


def _proj_union(a, b, s):
    A, B = a.central, b.central
    lhs = project(union(a, b), s)
    rhs = union(project(a, s & A), project(b, s & B))
    if not leq(lhs, rhs):
        return False
    # equality whenever the removed part (A | B) - s lies in A & B
    if (A | B) & ~s & ~(A & B) == 0 and lhs != rhs:
        return False
    return True


def _proj_inter(a, b, s):
    return leq(intersection(project(a, s), project(b, s)), project(intersection(a, b), s))


# -- instance generators ----------------------------------------------------


def _random_css(ctx: Context, rng: random.Random) -> CentralSoftSet:
    n, m = ctx.n_params, ctx.n_objects
    central = rng.getrandbits(n) if n else 0
    images = tuple(rng.getrandbits(m) if m else 0 for _ in range(n))
    return CentralSoftSet._trusted(ctx, central, images)


def _random_family(ctx: Context, rng: random.Random) -> list[CentralSoftSet]:
    return [_random_css(ctx, rng) for _ in range(rng.randint(0, MAX_FAMILY))]


def _tuples(k):
    def exhaustive(ctx, sets):
        return product(sets, repeat=k)

    def sampled(ctx, rng):
        return tuple(_random_css(ctx, rng) for _ in range(k))

    return exhaustive, sampled


def _chain_sample(k):
    # half the draws are chains built with union so that the order's
    # implications are not vacuous
    def sampled(ctx, rng):
        items = [_random_css(ctx, rng)]
        chained = rng.random() < 0.5
        for _ in range(k - 1):
            nxt = _random_css(ctx, rng)
            items.append(union(items[-1], nxt) if chained else nxt)
        return tuple(items)

    return sampled


def _family_instances(ctx, sets):
    for size in range(MAX_FAMILY + 1):
        for fam in product(sets, repeat=size):
            yield (list(fam), ctx)


def _upper_bound(family, ctx, central, extra):
    """Smallest map making (map, central) an upper bound of ``family``
    with the given central set, enlarged by ``extra`` images."""
    images = []
    for i in range(ctx.n_params):
        bit = 1 << i
        img = extra[i]
        for m in family:
            # m <= g needs m(e) <= g(e) unless e lies in central - m.central
            if not central & bit or m.central & bit:
                img |= m.images[i]
        images.append(img)
    return CentralSoftSet._trusted(ctx, central, tuple(images))


def _family_sample(ctx, rng):
    family = _random_family(ctx, rng)
    n, m = ctx.n_params, ctx.n_objects
    covered = 0
    for member in family:
        covered |= member.central
    bounds = [_upper_bound(family, ctx, covered, (0,) * n)]
    for _ in range(3):
        central = covered | (rng.getrandbits(n) if n else 0)
        extra = tuple(rng.getrandbits(m) & rng.getrandbits(m) if m else 0 for _ in range(n))
        bounds.append(_upper_bound(family, ctx, central, extra))
    return (family, ctx, bounds)


def _inf_distrib_instances(ctx, sets):
    # families up to size 2; larger ones follow from associativity
    for a in sets:
        for size in range(3):
            for fam in product(sets, repeat=size):
                yield (a, list(fam))


def _inf_distrib_sample(ctx, rng):
    return (_random_css(ctx, rng), _random_family(ctx, rng))


def _proj_union_instances(ctx, sets):
    for a, b in product(sets, repeat=2):
        for s in _subsets(a.central | b.central):
            yield (a, b, s)


def _proj_union_sample(ctx, rng):
    a, b = _random_css(ctx, rng), _random_css(ctx, rng)
    both = a.central | b.central
    if rng.random() < 0.5:
        s = both & rng.getrandbits(max(ctx.n_params, 1))
    else:
        removed = a.central & b.central & rng.getrandbits(max(ctx.n_params, 1))
        s = both & ~removed
    return (a, b, s)


def _proj_inter_instances(ctx, sets):
    for a, b in product(sets, repeat=2):
        for s in _subsets(a.central & b.central):
            yield (a, b, s)


def _proj_inter_sample(ctx, rng):
    a, b = _random_css(ctx, rng), _random_css(ctx, rng)
    return (a, b, a.central & b.central & rng.getrandbits(max(ctx.n_params, 1)))


@dataclass(frozen=True)
class Law:
    id: str
    summary: str
    predicate: Callable[..., bool]
    exhaustive: Callable[[Context, list], Any]
    sampled: Callable[[Context, random.Random], tuple]


LAWS: dict[str, Law] = {
    law.id: law
    for law in [
        Law("demorgan", "complement swaps union and intersection", _demorgan, *_tuples(2)),
        Law("assoc", "union and intersection are associative", _assoc, *_tuples(3)),
        Law("distrib", "each of union/intersection distributes over the other", _distrib, *_tuples(3)),
        Law("diff_chain", "(a - b) - c == a - (b union c)", _diff_chain, *_tuples(3)),
        Law("diff_shrink", "a - b <= a", _diff_shrink, *_tuples(2)),
        Law("order_partial", "<= is reflexive, antisymmetric, transitive", _order_partial, _tuples(3)[0], _chain_sample(3)),
        Law("order_equiv", "a <= b iff a union b == b iff a meet b == a", _order_equiv, _tuples(2)[0], _chain_sample(2)),
        Law("family_lub", "family union is the least upper bound", _family_lub, _family_instances, _family_sample),
        Law("inf_distrib", "intersection distributes over family union", _inf_distrib, _inf_distrib_instances, _inf_distrib_sample),
        Law("proj_union", "projection of a union vs union of projections", _proj_union, _proj_union_instances, _proj_union_sample),
        Law("proj_inter", "meet of projections <= projection of the meet", _proj_inter, _proj_inter_instances, _proj_inter_sample),
    ]
}


@dataclass(frozen=True)
class LawReport:
    law: str
    mode: str
    count: int
    universe_size: int
    params_size: int
    seed: int | None = None
    failures: int = 0
    counterexamples: tuple[dict, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "mode": self.mode,
            "seed": self.seed,
            "universe": self.universe_size,
            "params": self.params_size,
            "count": self.count,
            "failures": self.failures,
            "passed": self.passed,
            "counterexamples": list(self.counterexamples),
        }


def serialize_instance(instance: tuple, context: Context) -> dict[str, Any]:
    """Instance as a workspace document plus the argument layout.

    Sets are named ``x0, x1, ...``; ``args`` lists, per argument, a set
    name, a list of names (families) or a list of parameters (masks).
    """
    sets: dict[str, Any] = {}
    args: list[Any] = []
    for item in instance:
        if isinstance(item, CentralSoftSet):
            name = f"x{len(sets)}"
            sets[name] = css_to_doc(item)
            args.append(name)
        elif isinstance(item, list):
            names = []
            for member in item:
                name = f"x{len(sets)}"
                sets[name] = css_to_doc(member)
                names.append(name)
            args.append(names)
        elif isinstance(item, int):
            args.append(list(context.params(item)))
    workspace = {
        "universe": list(context.universe),
        "parameters": list(context.parameters),
        "sets": sets,
    }
    return {"workspace": workspace, "args": args}


def check_law(
    law: str,
    context: Context,
    mode: str = "exhaustive",
    count: int = 10_000,
    seed: int = 0,
) -> LawReport:
    """Check ``law`` over ``context``.

    ``mode="exhaustive"`` walks every instance built from
    :func:`enumerate_css`; ``mode="sampled"`` draws ``count`` random
    instances from a generator seeded with ``seed``.
    """
    try:
        spec = LAWS[law]
    except KeyError:
        raise UnknownLaw(f"unknown law {law!r}; known: {sorted(LAWS)}") from None
    if mode == "exhaustive":
        instances = spec.exhaustive(context, enumerate_css(context))
        used_seed = None
    elif mode == "sampled":
        rng = random.Random(seed)
        instances = (spec.sampled(context, rng) for _ in range(count))
        used_seed = seed
    else:
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', not {mode!r}")

    predicate = spec.predicate
    checked = failures = 0
    found: list[dict] = []
    for inst in instances:
        checked += 1
        if not predicate(*inst):
            failures += 1
            if len(found) < MAX_COUNTEREXAMPLES:
                found.append(serialize_instance(inst, context))
    return LawReport(
        law=law,
        mode=mode,
        count=checked,
        universe_size=context.n_objects,
        params_size=context.n_params,
        seed=used_seed,
        failures=failures,
        counterexamples=tuple(found),
    )


def check_all(context: Context, laws: Sequence[str] | None = None, **kwargs: Any) -> list[LawReport]:
    return [check_law(law, context, **kwargs) for law in (laws or list(LAWS))]


def render_reports(reports: Sequence[LawReport]) -> str:
    header = f"{'law':<14} {'mode':<10} {'seed':>6} {'instances':>10} {'failures':>9}  status"
    lines = [header, "-" * len(header)]
    for r in reports:
        seed = "-" if r.seed is None else str(r.seed)
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.law:<14} {r.mode:<10} {seed:>6} {r.count:>10} {r.failures:>9}  {status}")
    return "\n".join(lines) + "\n"


__all__ = [
    "LAWS",
    "Law",
    "LawReport",
    "check_law",
    "check_all",
    "enumerate_css",
    "enumeration_size",
    "lub_oracle",
    "render_reports",
    "serialize_instance",
    "small_context",
]
