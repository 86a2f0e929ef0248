"""Text syntax for polynomials, module elements, signals and points.

One grammar feeds several interpreters:

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INT)?          ("**" is accepted for "^")
    atom   := NUMBER | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"
            | "[" expr ("," expr)* "]"

Comments start with "#".  Division is allowed only by constants when
building polynomials.
"""
import re
from fractions import Fraction

from ..core.coefficient import transcendental
from ..core.poly import ModuleElement, Poly
from ..errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()\[\],;]))")
_VAR = re.compile(r"^D(\d+)$")


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col


def tokenize(text):
    toks = []
    for lineno, line in enumerate(text.split("\n"), 1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos:].strip() == "":
                break
            m = _TOKEN.match(line, pos)
            if not m:
                col = len(line) - len(line[pos:].lstrip()) + 1
                raise ParseError(f"unexpected character {line[col - 1]!r}", lineno, col,
                                 ("number", "name", "operator"))
            col = m.start(m.lastindex) + 1
            if m.group(1):
                toks.append(_Tok("num", m.group(1), lineno, col))
            elif m.group(2):
                toks.append(_Tok("name", m.group(2), lineno, col))
            else:
                op = "^" if m.group(3) == "**" else m.group(3)
                toks.append(_Tok("op", op, lineno, col))
            pos = m.end()
    lines = text.split("\n")
    toks.append(_Tok("end", "", len(lines), len(lines[-1]) + 1))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.line, t.col, expected)

    def accept(self, op):
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op):
        if not self.accept(op):
            self.fail((op,))

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            node = ("mul" if op == "*" else "div", node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return ("neg", self.unary())
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.accept("^"):
            if self.tok.kind != "num":
                self.fail(("non-negative integer exponent",))
            node = ("pow", node, int(self.tok.text))
            self.i += 1
        return node

    def _list(self, close):
        items = [self.expr()]
        while self.accept(","):
            items.append(self.expr())
        self.expect(close)
        return items

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return ("num", Fraction(int(t.text)), t)
        if t.kind == "name":
            self.i += 1
            if self.accept("("):
                return ("call", t.text, self._list(")"), t)
            return ("var", t.text, t)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if self.accept("["):
            return ("vec", self._list("]"))
        self.fail(("number", "name", "(", "["))

    def parse_all(self, allow_sequence=False):
        nodes = [self.expr()]
        while allow_sequence and (self.accept(";") or self.accept(",")):
            if self.tok.kind == "end":
                break
            nodes.append(self.expr())
        if self.tok.kind != "end":
            self.fail(("operator", "end of input"))
        return nodes


def parse_ast(text, allow_sequence=False):
    return _Parser(text).parse_all(allow_sequence)


class _PolyBuilder:
    """AST -> Poly / ModuleElement in D_1..D_n with declared transcendentals."""

    def __init__(self, n, transcendentals=()):
        self.n = n
        self.transcendentals = set(transcendentals)

    def build(self, node):
        kind = node[0]
        if kind == "num":
            return Poly.const(self.n, node[1])
        if kind == "var":
            name, tok = node[1], node[2]
            m = _VAR.match(name)
            if m:
                j = int(m.group(1))
                if not 1 <= j <= self.n:
                    raise ParseError(f"variable {name} outside D1..D{self.n}", tok.line, tok.col,
                                     tuple(f"D{k}" for k in range(1, self.n + 1)))
                return Poly.var(self.n, j - 1)
            if name in self.transcendentals:
                return Poly.const(self.n, transcendental(name))
            raise ParseError(f"unknown name {name!r} (declare transcendentals in the header)",
                             tok.line, tok.col, tuple(f"D{k}" for k in range(1, self.n + 1)))
        if kind == "vec":
            raise ParseError("module element where a polynomial was expected", *_pos(node))
        if kind == "call":
            raise ParseError(f"function call {node[1]}(...) in a polynomial", node[3].line, node[3].col)
        if kind == "neg":
            return -self.build(node[1])
        if kind == "pow":
            return self.build(node[1]) ** node[2]
        a, b = self.build(node[1]), self.build(node[2])
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        if not b.is_constant() or not b:
            raise ParseError("division by a non-constant or zero expression", *_pos(node[2]))
        return a / b.constant_term()

    def element(self, node):
        if node[0] == "vec":
            return ModuleElement.from_polys([self.build(x) for x in node[1]], self.n)
        return self.build(node)


def _pos(node):
    while node and isinstance(node, tuple):
        if node[0] in ("num", "var"):
            return node[2].line, node[2].col
        if node[0] == "call":
            return node[3].line, node[3].col
        node = node[1][0] if node[0] == "vec" else node[1]
    return 1, 1


def infer_n(text):
    """Largest D-index used in the text (at least 1)."""
    body = "\n".join(line.split("#", 1)[0] for line in text.split("\n"))
    return max([int(m) for m in re.findall(r"\bD(\d+)\b", body)] + [1])


def parse_poly(text, n=None, transcendentals=()):
    n = n or infer_n(text)
    (node,) = parse_ast(text)
    return _PolyBuilder(n, transcendentals).build(node)


def parse_element(text, n=None, transcendentals=()):
    """A polynomial or a bracketed module element."""
    n = n or infer_n(text)
    (node,) = parse_ast(text)
    return _PolyBuilder(n, transcendentals).element(node)


def parse_generators(text, n=None, transcendentals=()):
    """Generators separated by newlines or semicolons; errors carry absolute line numbers."""
    n = n or infer_n(text)
    b = _PolyBuilder(n, transcendentals)
    out = []
    for lineno, line in enumerate(text.split("\n"), 1):
        offset = 0
        for chunk in line.split("#", 1)[0].split(";"):
            if chunk.strip():
                try:
                    body, shift = _unwrap_tuple(chunk)
                    try:
                        nodes = parse_ast(body, allow_sequence=True)
                    except ParseError as err:
                        raise ParseError(err.message, err.line, err.column + shift, err.expected) from None
                    out += [b.element(node) for node in nodes]
                except ParseError as err:
                    raise ParseError(err.message, lineno, err.column + offset, err.expected) from None
            offset += len(chunk) + 1
    return out


def _unwrap_tuple(chunk):
    """Strip one outer "( ... )" when it wraps a comma-separated list; returns (text, column shift)."""
    start = len(chunk) - len(chunk.lstrip())
    t = chunk.strip()
    if not (t.startswith("(") and t.endswith(")")):
        return chunk, 0
    depth, comma = 0, False
    for k, ch in enumerate(t):
        depth += ch in "(["
        depth -= ch in ")]"
        if depth == 0 and k < len(t) - 1:
            return chunk, 0
        comma |= ch == "," and depth == 1
    return (t[1:-1], start + 1) if comma else (chunk, 0)


def evaluate(node, env):
    """Exact value of an AST with names bound in ``env`` (Fractions)."""
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "var":
        if node[1] not in env:
            raise ParseError(f"unbound name {node[1]!r}", node[2].line, node[2].col, tuple(sorted(env)))
        return Fraction(env[node[1]])
    if kind == "neg":
        return -evaluate(node[1], env)
    if kind == "pow":
        return evaluate(node[1], env) ** node[2]
    if kind in ("vec", "call"):
        raise ParseError("expected a scalar expression", *_pos(node))
    a, b = evaluate(node[1], env), evaluate(node[2], env)
    return {"add": a + b, "sub": a - b, "mul": a * b}[kind] if kind != "div" else a / b


def parse_point(text):
    """"(1, -1/2)" or "1,-1/2" -> tuple of Fractions."""
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    return tuple(evaluate(node, {}) for node in parse_ast(t, allow_sequence=True))


def parametrization(coords, parameters):
    """Callables for coordinate expressions in the named parameters."""
    nodes = [parse_ast(c)[0] for c in coords]

    def make(node):
        return lambda *t: evaluate(node, dict(zip(parameters, t)))

    return [make(nd) for nd in nodes]


# -- signals ------------------------------------------------------------------
def parse_signal(text, n=None, q=None, transcendentals=()):
    """Sum of terms e(a_1, ..., a_n) * [p_1, ..., p_q] with p_j in x1..xn and i² = -1.

    A bare polynomial stands for frequency zero and q = 1.
    """
    from ..signals import GaussianCoefficient, Signal

    nodes = _split_sum(parse_ast(text)[0])
    terms = []
    for sign, node in nodes:
        freq, vec = None, None
        if node[0] == "mul" and node[1][0] == "call" and node[1][1] == "e":
            freq = tuple(evaluate(a, {}) for a in node[1][2])
            vec = node[2]
        elif node[0] == "call" and node[1] == "e":
            freq = tuple(evaluate(a, {}) for a in node[2])
            vec = ("num", Fraction(1), None)
        else:
            vec = node
        entries = vec[1] if vec[0] == "vec" else [vec]
        terms.append((sign, freq, entries))
    if n is None:
        n = max([len(f) for _, f, _ in terms if f is not None] + [_max_x(text)])
    if q is None:
        q = len(terms[0][2])
    b = _PolyBuilder(n, set(transcendentals) | {"i"})
    x_names = {f"x{j + 1}": f"D{j + 1}" for j in range(n)}
    out = Signal.zero(n, q)
    for sign, freq, entries in terms:
        if len(entries) != q:
            raise ParseError(f"coefficient vector of length {len(entries)}, expected {q}", *_pos(entries[0]))
        freq = freq if freq is not None else (Fraction(0),) * n
        if len(freq) != n:
            raise ParseError(f"frequency of length {len(freq)}, expected {n}", *_pos(entries[0]))
        vec = []
        for e in entries:
            p = b.build(_rename(e, x_names))
            vec.append({m: _gaussian(c, GaussianCoefficient) for m, c in p.terms.items()})
        s = Signal(n, q, {freq: tuple(vec)})
        out = out + (s if sign > 0 else s.scale(-1))
    return out


def _split_sum(node, sign=1):
    if node[0] == "add":
        return _split_sum(node[1], sign) + _split_sum(node[2], sign)
    if node[0] == "sub":
        return _split_sum(node[1], sign) + _split_sum(node[2], -sign)
    if node[0] == "neg":
        return _split_sum(node[1], -sign)
    return [(sign, node)]


def _max_x(text):
    return max([int(m) for m in re.findall(r"\bx(\d+)\b", text)] + [1])


def _rename(node, names):
    kind = node[0]
    if kind == "var":
        if node[1] in names:
            return ("var", names[node[1]], node[2])
        if _VAR.match(node[1]):
            raise ParseError(f"signal coefficients use x-variables, not {node[1]}", node[2].line, node[2].col,
                             tuple(names))
        return node
    if kind in ("num",):
        return node
    if kind == "call":
        return node
    if kind == "vec":
        return ("vec", [_rename(x, names) for x in node[1]])
    if kind == "pow":
        return ("pow", _rename(node[1], names), node[2])
    if kind == "neg":
        return ("neg", _rename(node[1], names))
    return (kind, _rename(node[1], names), _rename(node[2], names))


def _gaussian(c, G):
    """Split a coefficient polynomial in the marker 'i' using i² = -1."""
    from ..core.coefficient import Coefficient, make_coefficient

    if not isinstance(c, Coefficient):
        return G(c)
    if any(name == "i" for name, _ in _den_symbols(c)):
        raise ParseError("the imaginary unit may not appear in a denominator", 1, 1)
    parts = [{}, {}, {}, {}]
    for tm, v in c.num.items():
        e = dict(tm).get("i", 0)
        rest = tuple((name, k) for name, k in tm if name != "i")
        parts[e % 4][rest] = parts[e % 4].get(rest, 0) + v
    den = c.den
    re_num = _tp_sub(parts[0], parts[2])
    im_num = _tp_sub(parts[1], parts[3])
    return G(make_coefficient(re_num, den), make_coefficient(im_num, den))


def _den_symbols(c):
    return [x for tm in c.den for x in tm]


def _tp_sub(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return out
