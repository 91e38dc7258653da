"""Input language: ring/module declarations, expectation blocks, check
directives.  Hand-rolled LL(1) parser with line/column diagnostics; any
input either parses or raises ParseError, never crashes.

Grammar (shipped in the README):

  file        := item* EOF
  item        := ring-decl | module-decl | expect-block | check-directive
  ring-decl   := "ring" NAME "=" field "[" [names] "]" ["/" "(" polys ")"]
                 ["order" ("degrevlex"|"deglex"|"lex")] ";"
  field       := "GF" "(" INT ")" | "QQ"
  module-decl := "module" NAME "=" module-expr ";"
  module-expr := "coker" ["twists" "(" ints ")"] "[" row (";" row)* "]"
               | "free" INT | "quotient" "(" [polys] ")"
  expect-block:= "expect" NAME "{" (KEY "=" value TAG ";")* "}"
  value       := INT | "infinite" | "true" | "false" | "undetermined"
  check       := "check" body ";"
  body        := "ab" NAME | "cover_ses" NAME | "gmodx" NAME "mod" poly
               | "chg1" NAME "mod" poly | "chg3" NAME "mod" poly
               | "gor_quotient" "mod" poly | "gor_fpid" | "irreducible"
               | "rx_ses" "quotient" "(" [polys] ")" "action" poly
               | "dirlim" INT
  poly        := ["+"|"-"] term (("+"|"-") term)*
  term        := factor ("*" factor)* ; factor := INT | NAME ["^" INT]

Comments run from '#' to end of line.  Exponents use '^', products need an
explicit '*', coefficients are integers (mapped into the field).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import MalformedInputError
from .fields import PrimeField, RationalField
from .orders import MonomialOrder
from .poly import Poly, PolyRing
from .ring import RingPresentation


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)
        loc = f"{line}:{col}"
        if self.expected:
            message = f"{message} (expected one of: {', '.join(self.expected)})"
        super().__init__(f"{loc}: {message}")


# ---------------------------------------------------------------------------
# tokens

_SYMBOLS = set("=()[]{},;/^*+-")


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, TAG, SYM, EOF
    value: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("NAME", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch == "@":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            if j == i + 1:
                raise ParseError("empty provenance tag after '@'", line, start_col)
            tokens.append(Token("TAG", text[i + 1 : j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token("SYM", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# syntax tree


@dataclass
class RingDecl:
    name: str
    field_kind: str  # "GF" or "QQ"
    prime: int | None
    variables: tuple[str, ...]
    ideal: tuple[Poly, ...]
    order: str

    def __eq__(self, other):
        return (
            isinstance(other, RingDecl)
            and (self.name, self.field_kind, self.prime, self.variables, self.order)
            == (other.name, other.field_kind, other.prime, other.variables, other.order)
            and list(self.ideal) == list(other.ideal)
        )


@dataclass
class ModuleDecl:
    name: str
    kind: str  # "coker", "free", "quotient"
    twists: tuple[int, ...] | None
    matrix: tuple[tuple[Poly, ...], ...]  # rows
    rank: int  # for free
    ideal: tuple[Poly, ...]  # for quotient

    def __eq__(self, other):
        return isinstance(other, ModuleDecl) and (
            self.name,
            self.kind,
            self.twists,
            [list(r) for r in self.matrix],
            self.rank,
            list(self.ideal),
        ) == (
            other.name,
            other.kind,
            other.twists,
            [list(r) for r in other.matrix],
            other.rank,
            list(other.ideal),
        )


@dataclass(frozen=True)
class Expectation:
    target: str
    key: str
    value: str  # normalized token: integer string, infinite, true, false, undetermined
    tag: str


@dataclass
class CheckDirective:
    kind: str
    module: str | None = None
    poly: Poly | None = None
    ideal: tuple[Poly, ...] = ()
    count: int = 0

    def __eq__(self, other):
        return isinstance(other, CheckDirective) and (
            self.kind,
            self.module,
            self.poly,
            list(self.ideal),
            self.count,
        ) == (other.kind, other.module, other.poly, list(other.ideal), other.count)


@dataclass
class SourceFile:
    ring: RingDecl
    modules: list[ModuleDecl] = dc_field(default_factory=list)
    expects: list[Expectation] = dc_field(default_factory=list)
    checks: list[CheckDirective] = dc_field(default_factory=list)

    def module_names(self):
        return [m.name for m in self.modules]


EXPECT_KEYS_MODULE = ("depth", "pd", "gdim", "gclass")
EXPECT_KEYS_RING = ("depth", "dim", "cm", "gorenstein", "socle", "irreducible")
CHECK_KINDS = (
    "ab",
    "cover_ses",
    "gmodx",
    "chg1",
    "chg3",
    "gor_quotient",
    "gor_fpid",
    "irreducible",
    "rx_ses",
    "dirlim",
)


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str, field_override=None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.field_override = field_override
        self.ambient: PolyRing | None = None

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, expected=()):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col, expected)

    def expect_sym(self, sym: str) -> Token:
        tok = self.peek()
        if tok.kind != "SYM" or tok.value != sym:
            self.error(f"found {tok.value!r}", expected=[repr(sym)])
        return self.next()

    def expect_name(self, *values) -> Token:
        tok = self.peek()
        if tok.kind != "NAME" or (values and tok.value not in values):
            self.error(f"found {tok.value or tok.kind!r}", expected=values or ["identifier"])
        return self.next()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "INT":
            self.error(f"found {tok.value or tok.kind!r}", expected=["integer"])
        self.next()
        return int(tok.value)

    def accept_sym(self, sym: str) -> bool:
        tok = self.peek()
        if tok.kind == "SYM" and tok.value == sym:
            self.next()
            return True
        return False

    def accept_name(self, value: str) -> bool:
        tok = self.peek()
        if tok.kind == "NAME" and tok.value == value:
            self.next()
            return True
        return False

    # -- polynomials ----------------------------------------------------

    def parse_poly(self) -> Poly:
        if self.ambient is None:
            self.error("polynomial before any ring declaration")
        neg = False
        if self.accept_sym("-"):
            neg = True
        else:
            self.accept_sym("+")
        result = self.parse_term()
        if neg:
            result = -result
        while True:
            if self.accept_sym("+"):
                result = result + self.parse_term()
            elif self.accept_sym("-"):
                result = result - self.parse_term()
            else:
                return result

    def parse_term(self) -> Poly:
        result = self.parse_factor()
        while self.accept_sym("*"):
            result = result * self.parse_factor()
        return result

    def parse_factor(self) -> Poly:
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return self.ambient.const(int(tok.value))
        if tok.kind == "NAME":
            if tok.value not in self.ambient.names:
                self.error(f"unknown variable {tok.value!r}", expected=self.ambient.names)
            self.next()
            var = self.ambient.var(self.ambient.names.index(tok.value))
            if self.accept_sym("^"):
                return var ** self.expect_int()
            return var
        self.error("expected a coefficient or variable", expected=["integer", "variable"])

    def parse_poly_list(self, close: str) -> list[Poly]:
        polys = []
        if self.peek().kind == "SYM" and self.peek().value == close:
            return polys
        polys.append(self.parse_poly())
        while self.accept_sym(","):
            polys.append(self.parse_poly())
        return polys

    # -- declarations -----------------------------------------------------

    def parse_ring_decl(self) -> RingDecl:
        self.expect_name("ring")
        name = self.expect_name().value
        self.expect_sym("=")
        tok = self.expect_name("GF", "QQ")
        prime = None
        if tok.value == "GF":
            self.expect_sym("(")
            prime = self.expect_int()
            try:
                field = PrimeField(prime)
            except ValueError:
                raise ParseError(f"{prime} is not prime", tok.line, tok.col) from None
            self.expect_sym(")")
            kind = "GF"
        else:
            kind = "QQ"
            field = RationalField()
        if self.field_override is not None:
            field = self.field_override
        self.expect_sym("[")
        variables = []
        if self.peek().kind == "NAME":
            variables.append(self.expect_name().value)
            while self.accept_sym(","):
                variables.append(self.expect_name().value)
        self.expect_sym("]")
        order = "degrevlex"
        try:
            self.ambient = PolyRing(field, variables, order=MonomialOrder(order))
        except MalformedInputError as exc:
            tok = self.peek()
            raise ParseError(str(exc), tok.line, tok.col) from None
        ideal: list[Poly] = []
        if self.accept_sym("/"):
            self.expect_sym("(")
            ideal = self.parse_poly_list(")")
            self.expect_sym(")")
        if self.accept_name("order"):
            order = self.expect_name("degrevlex", "deglex", "lex").value
            self.ambient = PolyRing(field, variables, order=MonomialOrder(order))
            ideal = [Poly(self.ambient, dict(g.terms)) for g in ideal]
        self.expect_sym(";")
        return RingDecl(name, kind, prime, tuple(variables), tuple(ideal), order)

    def parse_module_decl(self) -> ModuleDecl:
        self.expect_name("module")
        name = self.expect_name().value
        self.expect_sym("=")
        kind_tok = self.expect_name("coker", "free", "quotient")
        twists = None
        matrix: tuple = ()
        rank = 0
        ideal: tuple = ()
        if kind_tok.value == "coker":
            if self.accept_name("twists"):
                self.expect_sym("(")
                ts = [self.expect_int()]
                while self.accept_sym(","):
                    ts.append(self.expect_int())
                self.expect_sym(")")
                twists = tuple(ts)
            self.expect_sym("[")
            rows = [tuple(self.parse_poly_list_row())]
            while self.accept_sym(";"):
                rows.append(tuple(self.parse_poly_list_row()))
            self.expect_sym("]")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                self.error("ragged presentation matrix")
            matrix = tuple(rows)
            if twists is not None and len(twists) != len(rows):
                self.error("one twist per matrix row is required")
        elif kind_tok.value == "free":
            rank = self.expect_int()
        else:
            self.expect_sym("(")
            ideal = tuple(self.parse_poly_list(")"))
            self.expect_sym(")")
        self.expect_sym(";")
        return ModuleDecl(name, kind_tok.value, twists, matrix, rank, ideal)

    def parse_poly_list_row(self) -> list[Poly]:
        polys = [self.parse_poly()]
        while self.accept_sym(","):
            polys.append(self.parse_poly())
        return polys

    def parse_expect(self, ring_name, known_names) -> list[Expectation]:
        self.expect_name("expect")
        target_tok = self.peek()
        target = self.expect_name().value
        if target not in known_names:
            raise ParseError(
                f"expectation for undeclared name {target!r}", target_tok.line, target_tok.col
            )
        allowed = EXPECT_KEYS_RING if target == ring_name else EXPECT_KEYS_MODULE
        self.expect_sym("{")
        out = []
        while not self.accept_sym("}"):
            key_tok = self.peek()
            key = self.expect_name().value
            if key not in allowed:
                raise ParseError(
                    f"key {key!r} not valid for {'ring' if target == ring_name else 'module'} expectations",
                    key_tok.line,
                    key_tok.col,
                    expected=sorted(allowed),
                )
            self.expect_sym("=")
            tok = self.peek()
            if tok.kind == "INT":
                value = str(self.expect_int())
            else:
                value = self.expect_name("infinite", "true", "false", "undetermined").value
            tag_tok = self.peek()
            if tag_tok.kind != "TAG":
                self.error("every expected value carries a provenance tag", expected=["@tag"])
            self.next()
            self.expect_sym(";")
            out.append(Expectation(target, key, value, tag_tok.value))
        return out

    def parse_check(self, known_modules) -> CheckDirective:
        self.expect_name("check")
        kind = self.expect_name(*CHECK_KINDS).value
        directive = CheckDirective(kind)
        if kind in ("ab", "cover_ses", "gmodx", "chg1", "chg3"):
            tok = self.peek()
            directive.module = self.expect_name().value
            if directive.module not in known_modules:
                raise ParseError(
                    f"check references undeclared module {directive.module!r}",
                    tok.line,
                    tok.col,
                )
        if kind in ("gmodx", "chg1", "chg3", "gor_quotient"):
            self.expect_name("mod")
            directive.poly = self.parse_poly()
        if kind == "rx_ses":
            self.expect_name("quotient")
            self.expect_sym("(")
            directive.ideal = tuple(self.parse_poly_list(")"))
            self.expect_sym(")")
            self.expect_name("action")
            directive.poly = self.parse_poly()
        if kind == "dirlim":
            directive.count = self.expect_int()
        self.expect_sym(";")
        return directive

    def parse_file(self) -> SourceFile:
        ring = None
        modules: list[ModuleDecl] = []
        expects: list[Expectation] = []
        checks: list[CheckDirective] = []
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind != "NAME":
                self.error(
                    f"found {tok.value or tok.kind!r}",
                    expected=["ring", "module", "expect", "check"],
                )
            if tok.value == "ring":
                if ring is not None:
                    raise ParseError("exactly one ring per file", tok.line, tok.col)
                ring = self.parse_ring_decl()
            elif tok.value == "module":
                if ring is None:
                    raise ParseError("module before ring declaration", tok.line, tok.col)
                decl = self.parse_module_decl()
                if decl.name in (m.name for m in modules) or decl.name == ring.name:
                    raise ParseError(f"duplicate name {decl.name!r}", tok.line, tok.col)
                modules.append(decl)
            elif tok.value == "expect":
                if ring is None:
                    raise ParseError("expect before ring declaration", tok.line, tok.col)
                known = [ring.name] + [m.name for m in modules]
                expects.extend(self.parse_expect(ring.name, known))
            elif tok.value == "check":
                if ring is None:
                    raise ParseError("check before ring declaration", tok.line, tok.col)
                checks.append(self.parse_check([m.name for m in modules]))
            else:
                self.error(
                    f"found {tok.value!r}", expected=["ring", "module", "expect", "check"]
                )
        if ring is None:
            tok = self.peek()
            raise ParseError("file declares no ring", tok.line, tok.col)
        return SourceFile(ring, modules, expects, checks)


def parse(text: str, field_override=None) -> SourceFile:
    """Parse source text; raises ParseError with position info on any flaw."""
    return _Parser(text, field_override).parse_file()


def parse_poly_str(ambient: PolyRing, text: str) -> Poly:
    """Parse a single polynomial against an existing ambient ring."""
    p = _Parser("", None)
    p.tokens = tokenize(text)
    p.pos = 0
    p.ambient = ambient
    poly = p.parse_poly()
    if p.peek().kind != "EOF":
        p.error("trailing input after polynomial")
    return poly


# ---------------------------------------------------------------------------
# building and printing


def build_ring(decl: RingDecl, field_override=None) -> RingPresentation:
    if field_override is not None:
        field = field_override
    elif decl.field_kind == "GF":
        field = PrimeField(decl.prime)
    else:
        field = RationalField()
    ambient = PolyRing(field, decl.variables, order=MonomialOrder(decl.order))
    gens = [Poly(ambient, dict(g.terms)) for g in decl.ideal]
    return RingPresentation(ambient, gens)


def build_module(ring: RingPresentation, decl: ModuleDecl):
    from .modules import cyclic_module, free_module, from_matrix

    if decl.kind == "free":
        return free_module(ring, (0,) * decl.rank)
    if decl.kind == "quotient":
        gens = [Poly(ring.ambient, dict(g.terms)) for g in decl.ideal]
        return cyclic_module(ring, gens)
    rows = [[Poly(ring.ambient, dict(p.terms)) for p in row] for row in decl.matrix]
    return from_matrix(ring, rows, decl.twists)


def pretty_print(source: SourceFile) -> str:
    """Canonical text form; reparsing yields a structurally equal SourceFile."""
    r = source.ring
    fieldtxt = f"GF({r.prime})" if r.field_kind == "GF" else "QQ"
    line = f"ring {r.name} = {fieldtxt}[{','.join(r.variables)}]"
    if r.ideal:
        line += "/(" + ", ".join(str(g) for g in r.ideal) + ")"
    line += f" order {r.order};"
    lines = [line]
    for m in source.modules:
        if m.kind == "free":
            lines.append(f"module {m.name} = free {m.rank};")
        elif m.kind == "quotient":
            lines.append(
                f"module {m.name} = quotient (" + ", ".join(str(g) for g in m.ideal) + ");"
            )
        else:
            twists = ""
            if m.twists is not None:
                twists = "twists (" + ", ".join(str(t) for t in m.twists) + ") "
            rows = "; ".join(", ".join(str(p) for p in row) for row in m.matrix)
            lines.append(f"module {m.name} = coker {twists}[{rows}];")
    by_target: dict[str, list[Expectation]] = {}
    for e in source.expects:
        by_target.setdefault(e.target, []).append(e)
    for target, entries in by_target.items():
        body = " ".join(f"{e.key} = {e.value} @{e.tag};" for e in entries)
        lines.append(f"expect {target} {{ {body} }}")
    for c in source.checks:
        if c.kind in ("ab", "cover_ses"):
            lines.append(f"check {c.kind} {c.module};")
        elif c.kind in ("gmodx", "chg1", "chg3"):
            lines.append(f"check {c.kind} {c.module} mod {c.poly};")
        elif c.kind == "gor_quotient":
            lines.append(f"check gor_quotient mod {c.poly};")
        elif c.kind == "rx_ses":
            lines.append(
                "check rx_ses quotient ("
                + ", ".join(str(g) for g in c.ideal)
                + f") action {c.poly};"
            )
        elif c.kind == "dirlim":
            lines.append(f"check dirlim {c.count};")
        else:
            lines.append(f"check {c.kind};")
    return "\n".join(lines) + "\n"
