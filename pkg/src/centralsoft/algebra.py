"""Central soft sets and their algebra.

A central soft set ``(f, A)`` pairs a total map ``f : E -> P(U)`` with a
central parameter set ``A`` of ``E``.  Values are immutable; every operation
returns a new set.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .context import Context, ObjectSet, ParamSet
from .errors import (
    CentralNotSubsetOfE,
    ContextMismatch,
    TargetNotSubsetOfCentral,
    UnknownObject,
    UnknownParameter,
)

__all__ = [
    "CentralSoftSet",
    "make_css",
    "bottom",
    "top",
    "css_equal",
    "union",
    "intersection",
    "complement",
    "difference",
    "leq",
    "family_union",
    "project",
]


class CentralSoftSet:
    """A central soft set over a :class:`Context`.

    ``central`` is a parameter bitmask and ``images[i]`` is the object
    bitmask assigned to ``context.parameters[i]``.
    """

    __slots__ = ("context", "central", "images")

    def __init__(self, context: Context, central: ParamSet, images: Sequence[ObjectSet]) -> None:
        images = tuple(images)
        if len(images) != context.n_params:
            raise UnknownParameter(
                f"expected {context.n_params} images, got {len(images)}"
            )
        if central < 0 or central & ~context.full_params:
            raise CentralNotSubsetOfE(f"central mask {central:#b} is not a subset of E")
        full = context.full_objects
        for img in images:
            if img < 0 or img & ~full:
                raise UnknownObject(f"image mask {img:#b} is not a subset of U")
        self.context = context
        self.central = central
        self.images = images

    @classmethod
    def _trusted(cls, context: Context, central: ParamSet, images: tuple[ObjectSet, ...]) -> "CentralSoftSet":
        # Skips validation; only for results of operations on valid inputs.
        obj = object.__new__(cls)
        setattr_ = object.__setattr__
        setattr_(obj, "context", context)
        setattr_(obj, "central", central)
        setattr_(obj, "images", images)
        return obj

    def __setattr__(self, name, value):
        if hasattr(self, "images"):
            raise AttributeError("CentralSoftSet is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CentralSoftSet):
            return NotImplemented
        return (
            self.central == other.central
            and self.images == other.images
            and self.context == other.context
        )

    def __hash__(self) -> int:
        return hash((self.central, self.images))

    def __repr__(self) -> str:
        ctx = self.context
        body = ", ".join(
            f"{p}: {set(ctx.objects(img)) or '{}'}" for p, img in zip(ctx.parameters, self.images)
        )
        return f"CentralSoftSet(central={set(ctx.params(self.central)) or '{}'}, map={{{body}}})"

    def image(self, parameter: str) -> tuple[str, ...]:
        """Objects assigned to ``parameter``, in universe order."""
        return self.context.objects(self.images[self.context.param_index(parameter)])

    def central_names(self) -> tuple[str, ...]:
        return self.context.params(self.central)

    def as_dict(self) -> dict[str, tuple[str, ...]]:
        ctx = self.context
        return {p: ctx.objects(img) for p, img in zip(ctx.parameters, self.images)}


def make_css(
    context: Context,
    central: Iterable[str],
    assignment: Mapping[str, Iterable[str]] | None = None,
) -> CentralSoftSet:
    """Build a central soft set from parameter and object names.

    Parameters missing from ``assignment`` are mapped to the empty set.
    """
    central_mask = 0
    for name in central:
        try:
            central_mask |= 1 << context.param_index(name)
        except UnknownParameter:
            raise CentralNotSubsetOfE(f"central parameter {name!r} is not in E") from None
    images = [0] * context.n_params
    for param, objs in (assignment or {}).items():
        images[context.param_index(param)] = context.object_mask(objs)
    return CentralSoftSet._trusted(context, central_mask, tuple(images))


def bottom(context: Context) -> CentralSoftSet:
    """The least element: empty central set, every image empty."""
    return CentralSoftSet._trusted(context, 0, (0,) * context.n_params)


def top(context: Context) -> CentralSoftSet:
    """The greatest element: central set ``E``, every image ``U``."""
    return CentralSoftSet._trusted(
        context, context.full_params, (context.full_objects,) * context.n_params
    )


def _same_context(a: CentralSoftSet, b: CentralSoftSet) -> None:
    if a.context is not b.context and a.context != b.context:
        raise ContextMismatch("operands belong to different contexts")


def css_equal(a: CentralSoftSet, b: CentralSoftSet) -> bool:
    _same_context(a, b)
    return a.central == b.central and a.images == b.images


def union(a: CentralSoftSet, b: CentralSoftSet) -> CentralSoftSet:
    """Union: each operand's image wins on its exclusive central region.

    On ``A - B`` the result takes ``a``'s image, on ``B - A`` it takes
    ``b``'s, and everywhere else (the overlap and outside ``A | B``) the
    two images are joined.
    """
    _same_context(a, b)
    A, B = a.central, b.central
    a_only, b_only = A & ~B, B & ~A
    out = []
    bit = 1
    for x, y in zip(a.images, b.images):
        if a_only & bit:
            out.append(x)
        elif b_only & bit:
            out.append(y)
        else:
            out.append(x | y)
        bit <<= 1
    return CentralSoftSet._trusted(a.context, A | B, tuple(out))


def intersection(a: CentralSoftSet, b: CentralSoftSet) -> CentralSoftSet:
    """Intersection: on ``A - B`` take ``b``'s image, on ``B - A`` take
    ``a``'s, and intersect the images elsewhere."""
    _same_context(a, b)
    A, B = a.central, b.central
    a_only, b_only = A & ~B, B & ~A
    out = []
    bit = 1
    for x, y in zip(a.images, b.images):
        if a_only & bit:
            out.append(y)
        elif b_only & bit:
            out.append(x)
        else:
            out.append(x & y)
        bit <<= 1
    return CentralSoftSet._trusted(a.context, A & B, tuple(out))


def complement(a: CentralSoftSet) -> CentralSoftSet:
    ctx = a.context
    full = ctx.full_objects
    return CentralSoftSet._trusted(
        ctx, ctx.full_params & ~a.central, tuple(full & ~x for x in a.images)
    )


def difference(a: CentralSoftSet, b: CentralSoftSet) -> CentralSoftSet:
    """``a`` minus ``b``, i.e. ``intersection(a, complement(b))``."""
    return intersection(a, complement(b))


def leq(a: CentralSoftSet, b: CentralSoftSet) -> bool:
    """Information order: ``A`` is contained in ``B`` and ``a``'s image is
    contained in ``b``'s at every parameter outside ``B - A``."""
    _same_context(a, b)
    A, B = a.central, b.central
    if A & ~B:
        return False
    b_excl = B & ~A
    bit = 1
    for x, y in zip(a.images, b.images):
        if not b_excl & bit and x & ~y:
            return False
        bit <<= 1
    return True


def family_union(members: Sequence[CentralSoftSet], context: Context | None = None) -> CentralSoftSet:
    """Supremum of a finite family.

    At a parameter ``e`` the image is the union of the images of members
    whose central set contains ``e``; when no member claims ``e`` it is the
    union over all members.  An empty family yields :func:`bottom`, which
    requires ``context``.
    """
    members = list(members)
    if not members:
        if context is None:
            raise ValueError("an empty family needs an explicit context")
        return bottom(context)
    ctx = members[0].context
    if context is not None and context != ctx:
        raise ContextMismatch("family context differs from the given context")
    for m in members[1:]:
        _same_context(members[0], m)
    central = 0
    for m in members:
        central |= m.central
    out = []
    for i in range(ctx.n_params):
        bit = 1 << i
        claimed = 0
        free = 0
        has_claim = False
        for m in members:
            img = m.images[i]
            free |= img
            if m.central & bit:
                claimed |= img
                has_claim = True
        out.append(claimed if has_claim else free)
    return CentralSoftSet._trusted(ctx, central, tuple(out))


def project(a: CentralSoftSet, target: ParamSet | Iterable[str]) -> CentralSoftSet:
    """Restrict the central set of ``a`` to ``target``; the map is unchanged."""
    if not isinstance(target, int):
        target = a.context.param_mask(target)
    if target & ~a.central:
        raise TargetNotSubsetOfCentral(
            f"{a.context.params(target & ~a.central)} not in the central set"
        )
    return CentralSoftSet._trusted(a.context, target, a.images)
