"""Problem files and hint files."""
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..closure import Hints
from ..core.poly import ModuleElement, Poly
from ..errors import DimensionMismatch
from ..groebner import Ideal, Submodule
from ..points import SearchBounds, expand_parametrization
from .parse import infer_n, parametrization, parse_generators, parse_point

HEADER_KEYS = ("n", "q", "transcendentals", "space", "ring", "height", "denominator", "degree-bound",
               "budget", "depth-cap", "seed", "strict", "at", "signal", "element", "order")
_HEADER = re.compile(r"^\s*([A-Za-z][A-Za-z-]*)\s*:\s*(.*)$")


@dataclass
class ProblemSpec:
    """A parsed problem: generators of M ⊆ D^q plus options, and the verbatim source."""

    n: int
    q: int
    generators: list
    transcendentals: tuple = ()
    options: dict = field(default_factory=dict)
    text: str = ""

    @property
    def module(self):
        if self.q == 1:
            return Ideal([g.as_poly() if isinstance(g, ModuleElement) else g for g in self.generators], self.n)
        return Submodule(self.generators, self.q, self.n)


def parse_problem(text):
    """Header lines ``key: value`` followed by generators (one per line or ';'-separated)."""
    options, body = {}, []
    for raw in text.split("\n"):
        line = raw.split("#", 1)[0]
        if not line.strip():
            body.append("")
            continue
        m = _HEADER.match(line)
        if m and m.group(1).lower() in HEADER_KEYS + ("generators",):
            key, value = m.group(1).lower(), m.group(2).strip()
            if key == "generators":
                body.append(value)
            else:
                options[key] = value
                body.append("")
            continue
        body.append(line)
    trans = tuple(t for t in re.split(r"[,\s]+", options.pop("transcendentals", "")) if t)
    gen_text = "\n".join(body)
    n = int(options.pop("n")) if "n" in options else infer_n(gen_text)
    gens = parse_generators(gen_text, n, trans)
    q = int(options.pop("q")) if "q" in options else None
    gens = [ModuleElement.from_poly(g) if isinstance(g, Poly) else g for g in gens]
    if q is None:
        q = gens[0].q if gens else 1
    for g in gens:
        if g.q != q:
            raise DimensionMismatch(f"generator {g} has {g.q} components, expected {q}")
    return ProblemSpec(n, q, gens, trans, options, text)


def bounds_from(options, overrides=None):
    o = dict(options)
    o.update({k: v for k, v in (overrides or {}).items() if v is not None})
    deg = o.get("degree-bound")
    return SearchBounds(height=int(o.get("height", 32)), denominator=int(o.get("denominator", 12)),
                        degree=int(deg) if deg not in (None, "", "auto") else None,
                        budget=int(float(o.get("budget", 2e7))))


def load_hints(path_or_data, n, transcendentals=()):
    """Hint file: points, parametrizations and a claimed decomposition (all re-verified on use)."""
    if isinstance(path_or_data, dict):
        data = path_or_data
    else:
        with open(path_or_data, encoding="utf-8") as fh:
            data = json.load(fh)
    points = []
    for p in data.get("points", []):
        pt = tuple(Fraction(str(x)) for x in p) if isinstance(p, (list, tuple)) else parse_point(str(p))
        points.append(pt)
    for par in data.get("parametrizations", []):
        coords = parametrization(par["coordinates"], par.get("parameters", ["t"]))
        ranges = [tuple(r) for r in par.get("ranges", [[-10, 10]] * len(par.get("parameters", ["t"])))]
        points += [tuple(p) for p in expand_parametrization(coords, ranges)]
    decomposition = None
    if data.get("decomposition"):
        decomposition = []
        for item in data["decomposition"]:
            comp = [ModuleElement.from_poly(g) if isinstance(g, Poly) else g
                    for g in parse_generators("\n".join(item["component"]), n, transcendentals)]
            prime = parse_generators("\n".join(item["prime"]), n, transcendentals)
            decomposition.append((Submodule(comp), Ideal(prime, n)))
    return Hints(points=sorted(set(points)), decomposition=decomposition)
