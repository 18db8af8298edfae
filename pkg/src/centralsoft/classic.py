"""Classic soft sets and the operations recovered from central soft sets.

A classic soft set is a map ``F : E -> P(U)`` whose parameter set is its
support ``{e : F(e) != {}}``.  The support is never stored, so it cannot
disagree with the map.  Each classic operation below exists twice: as a
direct case formula and, in :func:`via_central`, as a composition through
the central-set algebra with a chosen central-set policy.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, Sequence

from . import algebra
from .algebra import CentralSoftSet
from .context import Context, ObjectSet, ParamSet
from .errors import ContextMismatch, UnknownObject, UnknownParameter


class Policy(enum.Enum):
    """How a classic soft set picks its central set."""

    SUPPORT = "support"
    FULL_E = "full-e"
    CO_SUPPORT = "co-support"


class ClassicSoftSet:
    __slots__ = ("context", "images")

    def __init__(self, context: Context, images: Sequence[ObjectSet]) -> None:
        images = tuple(images)
        if len(images) != context.n_params:
            raise UnknownParameter(f"expected {context.n_params} images, got {len(images)}")
        full = context.full_objects
        for img in images:
            if img < 0 or img & ~full:
                raise UnknownObject(f"image mask {img:#b} is not a subset of U")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("ClassicSoftSet is immutable")

    @classmethod
    def from_names(cls, context: Context, assignment: Mapping[str, Iterable[str]]) -> "ClassicSoftSet":
        images = [0] * context.n_params
        for param, objs in assignment.items():
            images[context.param_index(param)] = context.object_mask(objs)
        return cls(context, images)

    @property
    def support(self) -> ParamSet:
        mask = 0
        for i, img in enumerate(self.images):
            if img:
                mask |= 1 << i
        return mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassicSoftSet):
            return NotImplemented
        return self.images == other.images and self.context == other.context

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        ctx = self.context
        body = ", ".join(
            f"{p}: {set(ctx.objects(img))}" for p, img in zip(ctx.parameters, self.images) if img
        )
        return f"ClassicSoftSet({{{body}}})"

    def as_dict(self) -> dict[str, tuple[str, ...]]:
        ctx = self.context
        return {p: ctx.objects(img) for p, img in zip(ctx.parameters, self.images)}


def _same_context(F: ClassicSoftSet, G: ClassicSoftSet) -> None:
    if F.context is not G.context and F.context != G.context:
        raise ContextMismatch("operands belong to different contexts")


def from_central(a: CentralSoftSet) -> ClassicSoftSet:
    """Keep the images on the central set and empty everything else.

    This loses information when ``a`` has nonempty images off its central
    set or empty images on it.
    """
    central = a.central
    images = tuple(img if central >> i & 1 else 0 for i, img in enumerate(a.images))
    return ClassicSoftSet(a.context, images)


def forget_central(a: CentralSoftSet) -> ClassicSoftSet:
    """The classic soft set carried by ``a``'s map, ignoring its central set."""
    return ClassicSoftSet(a.context, a.images)


def to_central(F: ClassicSoftSet, policy: Policy = Policy.SUPPORT) -> CentralSoftSet:
    policy = Policy(policy)
    ctx = F.context
    if policy is Policy.SUPPORT:
        central = F.support
    elif policy is Policy.FULL_E:
        central = ctx.full_params
    else:
        central = ctx.full_params & ~F.support
    return CentralSoftSet(ctx, central, F.images)


def _case_formula(F: ClassicSoftSet, G: ClassicSoftSet, on_f_only, on_g_only, elsewhere) -> ClassicSoftSet:
    # on_f_only / on_g_only pick an image on A - B / B - A, where A and B
    # are the supports of F and G.
    _same_context(F, G)
    A, B = F.support, G.support
    out = []
    for i, (x, y) in enumerate(zip(F.images, G.images)):
        bit = 1 << i
        if A & bit and not B & bit:
            out.append(on_f_only(x, y))
        elif B & bit and not A & bit:
            out.append(on_g_only(x, y))
        else:
            out.append(elsewhere(x, y))
    return ClassicSoftSet(F.context, out)


def _first(x, y):
    return x


def _second(x, y):
    return y


def molodtsov_union(F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    """``F`` on ``A - B``, ``G`` on ``B - A``, ``F | G`` elsewhere."""
    return _case_formula(F, G, _first, _second, lambda x, y: x | y)


def natural_union(F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    _same_context(F, G)
    return ClassicSoftSet(F.context, [x | y for x, y in zip(F.images, G.images)])


def natural_intersection(F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    _same_context(F, G)
    return ClassicSoftSet(F.context, [x & y for x, y in zip(F.images, G.images)])


def breve_union(F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    """``G`` on ``A - B``, ``F`` on ``B - A``, ``F | G`` elsewhere.

    For genuine classic inputs the two exclusive regions come out empty,
    so only the overlap of the supports survives.
    """
    return _case_formula(F, G, _second, _first, lambda x, y: x | y)


def hat_intersection(F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    """``F`` on ``A - B``, ``G`` on ``B - A``, ``F & G`` elsewhere."""
    return _case_formula(F, G, _first, _second, lambda x, y: x & y)


OPERATIONS = {
    "molodtsov": molodtsov_union,
    "natural-union": natural_union,
    "natural-intersect": natural_intersection,
    "breve": breve_union,
    "hat": hat_intersection,
}

# operation name -> (central-set policy, central-set operation)
COMPOSITIONS = {
    "molodtsov": (Policy.SUPPORT, algebra.union),
    "natural-union": (Policy.FULL_E, algebra.union),
    "natural-intersect": (Policy.FULL_E, algebra.intersection),
    "breve": (Policy.CO_SUPPORT, algebra.union),
    "hat": (Policy.CO_SUPPORT, algebra.intersection),
}


def via_central(name: str, F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    """Compute a classic operation by lifting both operands to central soft
    sets under the operation's policy, combining them there and reading
    the classic set off the resulting map."""
    policy, op = COMPOSITIONS[name]
    _same_context(F, G)
    return forget_central(op(to_central(F, policy), to_central(G, policy)))


def apply(name: str, F: ClassicSoftSet, G: ClassicSoftSet) -> ClassicSoftSet:
    if name not in OPERATIONS:
        raise ValueError(f"unknown classic operation {name!r}")
    return OPERATIONS[name](F, G)
