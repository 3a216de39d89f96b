"""Reader and printer for ``.ca`` files.

::

    # comment
    ring R = x y z weights 1 1 2;
    ideal I(R) = x^2 - z, 3/2*x*y + y^2 - 1;

A term is an optional rational coefficient followed by ``*``-separated
factors ``VAR`` or ``VAR^INT``; the coefficient may be juxtaposed (``2 y``)
or starred (``2*y``).  A bare coefficient is a constant term, and a leading
``-`` is allowed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import QQ, Polynomial, PolyRing
from .ideals import Ideal

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<sym>[=;,()+\-*^/])"
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos, line, start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind in ("name", "int", "sym"):
            out.append(Token(kind, m.group(), line, m.start() - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


@dataclass(frozen=True)
class RingDecl:
    name: str
    ring: PolyRing
    span: tuple[int, int] = field(default=(0, 0), compare=False)

    def __str__(self):
        s = f"ring {self.name} = {' '.join(self.ring.variables)}"
        if any(w != 1 for w in self.ring.weights):
            s += " weights " + " ".join(map(str, self.ring.weights))
        return s + ";"


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring_name: str
    generators: tuple[Polynomial, ...]
    span: tuple[int, int] = field(default=(0, 0), compare=False)

    def __str__(self):
        return f"ideal {self.name}({self.ring_name}) = " + ", ".join(map(str, self.generators)) + ";"


@dataclass
class SourceDocument:
    rings: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)

    def ideal(self, name: str | None = None) -> Ideal:
        """The named ideal, or the last one declared."""
        if not self.ideals:
            raise KeyError("document declares no ideal")
        if name is None:
            name = list(self.ideals)[-1]
        if name not in self.ideals:
            raise KeyError(f"unknown ideal {name}")
        decl = self.ideals[name]
        return Ideal(self.rings[decl.ring_name].ring, decl.generators)

    def __str__(self):
        lines = [str(d) for d in self.rings.values()] + [str(d) for d in self.ideals.values()]
        return "\n".join(lines) + "\n"


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.kind == "sym" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not (self.tok.kind == "sym" and self.tok.text == text):
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            self.error(f"expected {what}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    # polynomials

    def coefficient(self):
        num = int(self.advance().text)
        if self.accept("/"):
            den_tok = self.expect_kind("int", "denominator")
            den = int(den_tok.text)
            if den == 0:
                self.error("zero denominator", den_tok)
            return QQ(num) / den
        return QQ(num)

    def factor(self, ring: PolyRing, exps: list):
        t = self.expect_kind("name", "variable")
        if t.text not in ring:
            self.error(f"unknown variable {t.text}", t)
        e = 1
        if self.accept("^"):
            e = int(self.expect_kind("int", "exponent").text)
        exps[ring.index(t.text)] += e

    def term(self, ring: PolyRing, sign: int) -> tuple[tuple, object]:
        coeff = QQ(sign)
        exps = [0] * ring.nvars
        if self.tok.kind == "int":
            coeff *= self.coefficient()
            # "2 y" and "2*y" both attach the coefficient; a lone integer is a constant
            if not self.accept("*") and self.tok.kind != "name":
                return tuple(exps), coeff
        self.factor(ring, exps)
        while self.accept("*"):
            if self.tok.kind == "int":
                coeff *= self.coefficient()
            else:
                self.factor(ring, exps)
        return tuple(exps), coeff

    def polynomial(self, ring: PolyRing) -> Polynomial:
        terms: dict = {}
        sign = -1 if self.accept("-") else 1
        while True:
            e, c = self.term(ring, sign)
            terms[e] = terms.get(e, 0) + c
            if self.accept("+"):
                sign = 1
            elif self.accept("-"):
                sign = -1
            else:
                break
        return Polynomial(ring, {e: c for e, c in terms.items() if c})

    # declarations

    def document(self) -> SourceDocument:
        doc = SourceDocument()
        while self.tok.kind != "eof":
            kw = self.expect_kind("name", "'ring' or 'ideal'")
            if kw.text == "ring":
                self.ring_decl(doc, kw)
            elif kw.text == "ideal":
                self.ideal_decl(doc, kw)
            else:
                self.error(f"expected 'ring' or 'ideal', found {kw.text!r}", kw)
        return doc

    def ring_decl(self, doc: SourceDocument, kw: Token):
        name = self.expect_kind("name", "ring name")
        if name.text in doc.rings:
            self.error(f"duplicate ring {name.text}", name)
        self.expect("=")
        variables, seen = [], set()
        while self.tok.kind == "name" and self.tok.text != "weights":
            v = self.advance()
            if v.text in seen:
                self.error(f"duplicate variable {v.text}", v)
            seen.add(v.text)
            variables.append(v.text)
        if not variables:
            self.error("ring needs at least one variable")
        weights = [1] * len(variables)
        if self.tok.kind == "name":
            self.advance()
            wt = self.tok
            weights = []
            while self.tok.kind == "int":
                weights.append(int(self.advance().text))
            if len(weights) != len(variables):
                self.error(f"expected {len(variables)} weights, found {len(weights)}", wt)
            if any(w < 1 for w in weights):
                self.error("weights must be positive", wt)
        self.expect(";")
        doc.rings[name.text] = RingDecl(name.text, PolyRing(tuple(variables), tuple(weights)), (kw.line, kw.col))

    def ideal_decl(self, doc: SourceDocument, kw: Token):
        name = self.expect_kind("name", "ideal name")
        if name.text in doc.ideals:
            self.error(f"duplicate ideal {name.text}", name)
        self.expect("(")
        rname = self.expect_kind("name", "ring name")
        if rname.text not in doc.rings:
            self.error(f"unknown ring {rname.text}", rname)
        self.expect(")")
        self.expect("=")
        ring = doc.rings[rname.text].ring
        gens = [self.polynomial(ring)]
        while self.accept(","):
            gens.append(self.polynomial(ring))
        self.expect(";")
        doc.ideals[name.text] = IdealDecl(name.text, rname.text, tuple(gens), (kw.line, kw.col))


def parse_source(text: str) -> SourceDocument:
    return _Parser(text).document()


def parse_file(path) -> SourceDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_source(fh.read())


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    p = _Parser(text)
    f = p.polynomial(ring)
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    return f
