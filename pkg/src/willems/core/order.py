"""Monomial and module term orders.

Every order is exposed through a sort key: a larger key means a larger
term.  Module terms are pairs ``(component, exponent_tuple)``.
"""
from dataclasses import dataclass
from functools import lru_cache


def grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m):
    return m


@dataclass(frozen=True)
class TermOrder:
    """A monomial order extended to D^q.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"elim"``.  An elimination order
    compares the exponents of the variables in ``elim`` first (grevlex on
    that block) and breaks ties by grevlex on the remaining variables.
    ``module`` is ``"top"`` (term over position) or ``"pot"`` (position over
    term); in both cases a smaller component index ranks higher.  For an
    elimination order with ``"top"`` the component is compared between the
    two blocks, so the big block together with the position dominates.
    """

    kind: str = "grevlex"
    module: str = "top"
    elim: tuple = ()

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.module not in ("top", "pot"):
            raise ValueError(f"unknown module order {self.module!r}")
        if self.kind == "elim" and not self.elim:
            raise ValueError("elimination order needs a nonempty variable block")

    @classmethod
    def block(cls, k, module="top"):
        """Elimination order with the first ``k`` variables as the big block."""
        return cls("elim", module, tuple(range(k)))

    @classmethod
    def eliminating(cls, variables, module="top"):
        return cls("elim", module, tuple(sorted(variables)))

    def with_module(self, module):
        return TermOrder(self.kind, module, self.elim)

    def mono_key(self, m):
        return _mono_key(self, m)

    def key(self, term):
        return _term_key(self, term)

    def is_degree_compatible(self):
        return self.kind == "grevlex"

    def __str__(self):
        base = self.kind if self.kind != "elim" else f"elim{list(self.elim)}"
        return f"{base}/{self.module}"


@lru_cache(maxsize=1 << 18)
def _mono_key(order, m):
    if order.kind == "grevlex":
        return grevlex_key(m)
    if order.kind == "lex":
        return m
    big = tuple(m[i] for i in order.elim)
    rest = tuple(e for i, e in enumerate(m) if i not in order.elim)
    return (grevlex_key(big), grevlex_key(rest))


@lru_cache(maxsize=1 << 20)
def _term_key(order, term):
    i, m = term
    k = _mono_key(order, m)
    if order.module == "pot":
        return (-i, k)
    if order.kind == "elim":
        # block term-over-position: (big block, component, small block)
        return (k[0], -i, k[1])
    return (k, -i)


GREVLEX = TermOrder()
LEX = TermOrder("lex")
POT = TermOrder("grevlex", "pot")
