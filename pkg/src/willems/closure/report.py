"""Signal-space selectors, user hints and the closure report."""
from dataclasses import dataclass, field

from ..groebner import Ideal, Submodule
from ..points import RationalPoint, SearchBounds

BASES = ("torus", "protorus")
FLAVORS = ("smooth", "fin", "poly")
_FLAVOR_ALIASES = {"finite-support": "fin", "finite-support-with-polynomials": "poly",
                   "fin-poly": "poly"}


@dataclass(frozen=True)
class SignalSpaceKind:
    """Base (torus or protorus) and flavor (smooth, fin, poly).

    The torus has integral frequencies, the protorus rational ones.  Smooth
    and fin share one closure computation.
    """

    base: str
    flavor: str

    def __post_init__(self):
        flavor = _FLAVOR_ALIASES.get(self.flavor, self.flavor)
        object.__setattr__(self, "flavor", flavor)
        if self.base not in BASES or flavor not in FLAVORS:
            raise ValueError(f"unknown signal space {self.base}-{self.flavor}")

    @classmethod
    def parse(cls, text):
        base, _, flavor = text.partition("-")
        return cls(base, flavor)

    @property
    def ring(self):
        return "Z" if self.base == "torus" else "Q"

    @property
    def computation(self):
        """The flavor whose algorithm is run ("fin" stands in for "smooth")."""
        return "fin" if self.flavor == "smooth" else self.flavor

    def __str__(self):
        return f"{self.base}-{self.flavor}"


ALL_SPACES = tuple(SignalSpaceKind(b, f) for b in BASES for f in FLAVORS)


@dataclass
class Hints:
    """Extra points per search and claimed decompositions; all re-verified before use."""

    points: list = field(default_factory=list)
    decomposition: list | None = None  # [(Submodule, Ideal)]

    def points_for(self, n):
        return [RationalPoint(p) for p in self.points if len(p) == n]


NO_HINTS = Hints()


@dataclass
class LedgerEntry:
    """What happened to one prime (and its component) during a closure run."""

    prime: Ideal
    fate: str  # kept | dropped | enlarged | closed | conditional
    verdict: str | None = None
    certificate: str | None = None
    component: Submodule | None = None
    result: Submodule | None = None
    points: list = field(default_factory=list)
    depth: int = 0
    note: str = ""

    def key(self):
        return (self.depth, str(self.prime.reduced()),
                str(self.component.reduced()) if self.component is not None else "")


@dataclass
class ClosureReport:
    module: Submodule
    space: SignalSpaceKind
    closure: Submodule
    ledger: list = field(default_factory=list)
    conditional: bool = False
    method: str = ""
    notes: list = field(default_factory=list)
    cross_check: dict | None = None
    bounds: SearchBounds | None = None
    strict: bool = False
    seed: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def is_closed(self):
        return self.closure.equals(self.module)

    def sort_ledger(self):
        self.ledger.sort(key=LedgerEntry.key)
        return self
