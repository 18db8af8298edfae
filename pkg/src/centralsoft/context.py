"""Universe/parameter context and the bitmask encoding of subsets.

Object sets and parameter sets are plain ``int`` bitmasks: bit ``i`` of an
object set is set when ``context.universe[i]`` is a member, and likewise
for parameter sets against ``context.parameters``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DuplicateName, UnknownObject, UnknownParameter

ObjectSet = int
ParamSet = int


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Context:
    """The shared universe ``U`` and ordered parameter space ``E``.

    Orderings are fixed at construction; they define bit positions and the
    row/column order of incidence matrices.
    """

    __slots__ = ("universe", "parameters", "_obj_index", "_par_index", "_hash")

    def __init__(self, universe: Iterable[str], parameters: Iterable[str]) -> None:
        universe = tuple(universe)
        parameters = tuple(parameters)
        if len(set(universe)) != len(universe):
            raise DuplicateName(f"duplicate object identifiers in {universe!r}")
        if len(set(parameters)) != len(parameters):
            raise DuplicateName(f"duplicate parameter identifiers in {parameters!r}")
        self.universe: tuple[str, ...] = universe
        self.parameters: tuple[str, ...] = parameters
        self._obj_index = {name: i for i, name in enumerate(universe)}
        self._par_index = {name: i for i, name in enumerate(parameters)}
        self._hash = hash((universe, parameters))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Context):
            return NotImplemented
        return self.universe == other.universe and self.parameters == other.parameters

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Context(universe={list(self.universe)}, parameters={list(self.parameters)})"

    @property
    def n_objects(self) -> int:
        return len(self.universe)

    @property
    def n_params(self) -> int:
        return len(self.parameters)

    @property
    def full_objects(self) -> ObjectSet:
        return (1 << len(self.universe)) - 1

    @property
    def full_params(self) -> ParamSet:
        return (1 << len(self.parameters)) - 1

    def object_index(self, name: str) -> int:
        try:
            return self._obj_index[name]
        except (KeyError, TypeError):
            raise UnknownObject(f"unknown object {name!r}") from None

    def param_index(self, name: str) -> int:
        try:
            return self._par_index[name]
        except (KeyError, TypeError):
            raise UnknownParameter(f"unknown parameter {name!r}") from None

    def object_mask(self, names: Iterable[str]) -> ObjectSet:
        mask = 0
        for name in names:
            mask |= 1 << self.object_index(name)
        return mask

    def param_mask(self, names: Iterable[str]) -> ParamSet:
        mask = 0
        for name in names:
            mask |= 1 << self.param_index(name)
        return mask

    def objects(self, mask: ObjectSet) -> tuple[str, ...]:
        """Names of the objects in ``mask``, in universe order."""
        return tuple(self.universe[i] for i in iter_bits(mask))

    def params(self, mask: ParamSet) -> tuple[str, ...]:
        """Names of the parameters in ``mask``, in declaration order."""
        return tuple(self.parameters[i] for i in iter_bits(mask))
