"""Primary decomposition of monomial ideals by repeated splitting."""
from ..core.poly import Poly, mono_divides, mono_lcm
from ..errors import NotMonomial
from ..groebner import Ideal


def _minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(k, m) for k in out):
            out.append(m)
    return out


def monomial_generators(I):
    gens = []
    for p in I.polys():
        if len(p.terms) != 1:
            raise NotMonomial(f"generator {p} is not a monomial")
        gens.append(next(iter(p.terms)))
    return _minimalize(gens)


def _irreducible_components(gens, n):
    """Irreducible monomial ideals (pure powers only) whose intersection is (gens)."""
    stack = [tuple(_minimalize(gens))]
    done = set()
    out = []
    while stack:
        g = stack.pop()
        if g in done:
            continue
        done.add(g)
        mixed = next((m for m in g if sum(1 for e in m if e) > 1), None)
        if mixed is None:
            out.append(g)
            continue
        i = next(k for k, e in enumerate(mixed) if e)
        pure = tuple(mixed[i] if k == i else 0 for k in range(n))
        rest = tuple(0 if k == i else e for k, e in enumerate(mixed))
        stack.append(tuple(_minimalize(g + (pure,))))
        stack.append(tuple(_minimalize(g + (rest,))))
    # drop components containing another one
    def contains(a, b):
        return all(any(mono_divides(x, y) for x in a) for y in b)

    out = sorted(set(out))
    keep = [c for c in out if not any(d != c and contains(c, d) for d in out)]
    return keep


def monomial_intersection(a, b):
    return _minimalize([mono_lcm(x, y) for x in a for y in b])


def monomial_ideal(monos, n):
    return Ideal([Poly(n, {m: 1}) for m in monos], n)


def monomial_primary_decomposition(I):
    """List of (primary monomial ideal, prime) pairs, irredundant."""
    from .primary import PrimaryComponent

    n = I.n
    gens = monomial_generators(I)
    if not gens:
        return [PrimaryComponent(I, Ideal.zero(n), 1)]
    if any(sum(m) == 0 for m in gens):
        return []
    groups = {}
    for comp in _irreducible_components(gens, n):
        support = tuple(sorted(next(k for k, e in enumerate(m) if e) for m in comp))
        groups.setdefault(support, []).append(comp)
    out = []
    for support, comps in sorted(groups.items()):
        acc = list(comps[0])
        for c in comps[1:]:
            acc = monomial_intersection(acc, c)
        prime = Ideal([Poly.var(n, k) for k in support], n)
        pure = [min(m[k] for m in acc if m[k] and sum(m) == m[k]) for k in support]
        power = sum(a - 1 for a in pure) + 1
        out.append(PrimaryComponent(monomial_ideal(acc, n), prime, power))
    return out


def monomial_associated_primes(I):
    return [c.prime for c in monomial_primary_decomposition(I)]
