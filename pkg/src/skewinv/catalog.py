"""Named groups used by the test battery and the ``examples`` command."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraCtx
from .groups import FiniteMatrixGroup, enumerate_group

SWAP = [[0, 1], [1, 0]]
SIGN_LINE = [[1, 0], [0, -1]]
Z3_COMPANION = [[0, -1], [1, -1]]
TWO_COPIES_SIGN = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
KLEIN_A = [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
KLEIN_B = [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
S3_A = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
S3_B = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
D4_ROT = [[0, -1], [1, 0]]
D4_REF = [[1, 0], [0, -1]]


@dataclass(frozen=True)
class BatteryGroup:
    name: str
    generators: tuple
    names: tuple[str, ...] = ()

    def group(self) -> FiniteMatrixGroup:
        return enumerate_group(self.generators)

    @property
    def n(self) -> int:
        return len(self.generators[0])

    def exterior(self) -> AlgebraCtx:
        return AlgebraCtx.exterior(self.n, self.names)


BATTERY = (
    BatteryGroup("Z2 swap", (SWAP,), ("x", "y")),
    BatteryGroup("Z2 sign", (SIGN_LINE,), ("x", "y")),
    BatteryGroup("Z3 companion", (Z3_COMPANION,), ("x", "y")),
    BatteryGroup("Z2xZ2 diagonal signs", (KLEIN_A, KLEIN_B)),
    BatteryGroup("S3 permutation", (S3_A, S3_B)),
    BatteryGroup("D4 signed permutations", (D4_ROT, D4_REF), ("x", "y")),
)


def battery() -> list[tuple[str, FiniteMatrixGroup, AlgebraCtx]]:
    return [(b.name, b.group(), b.exterior()) for b in BATTERY]
