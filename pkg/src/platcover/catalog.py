"""Built-in example plats."""
from __future__ import annotations

import dataclasses

from .plat import PlatPresentation


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    name: str
    strands: int
    word: tuple[int, ...]
    expected_mu: int
    expected_lk: tuple[tuple[int, ...], ...] | None = None
    description: str = ""

    def plat(self) -> PlatPresentation:
        return PlatPresentation.from_ints(self.strands, self.word)


# expected_lk is under the default orientation (lowest top arc of each component forward).
CATALOG: dict[str, CatalogEntry] = {e.name: e for e in [
    CatalogEntry("unlink2", 4, (), 2, ((0, 0), (0, 0)), "two-component unlink"),
    CatalogEntry("hopf", 4, (2, 2), 2, ((0, -1), (-1, 0)), "Hopf link"),
    CatalogEntry("trefoil", 4, (2, 2, 2), 1, ((0,),), "trefoil knot"),
    CatalogEntry("twisted-cap", 4, (1,), 2, ((0, 0), (0, 0)),
                 "unlink with a half-twisted cap; violates the parity condition"),
    CatalogEntry("chain3", 6, (2, 2, 4, 4), 3, ((0, -1, 0), (-1, 0, -1), (0, -1, 0)),
                 "three-component chain of Hopf clasps"),
]}


def get(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}") from None
