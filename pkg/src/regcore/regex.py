"""Small regex compiler for the encoding alphabet.

Supported syntax: the literals ``a $ # 1 >``, grouping ``( )``, alternation
``|`` and the postfix repeats ``* + ?``.  Whitespace is ignored.  Compilation
is Thompson-style with epsilon transitions, which are eliminated before the
automaton leaves this module.
"""

from __future__ import annotations

from .automata import Nfa, make_nfa, trim, SIGMA

_LITERALS = set(SIGMA)
EPS = ""


class RegexParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# --- parsing ----------------------------------------------------------------

class _Parser:
    """Recursive descent over: alt := cat ('|' cat)*; cat := rep*;
    rep := atom ('*'|'+'|'?')*; atom := literal | '(' alt ')'."""

    def __init__(self, pattern: str):
        # Keep original indices so error positions refer to the raw pattern.
        self.items = [(ch, i + 1) for i, ch in enumerate(pattern) if not ch.isspace()]
        self.pos = 0
        self.end = len(pattern) + 1

    def peek(self):
        return self.items[self.pos][0] if self.pos < len(self.items) else None

    def where(self) -> int:
        return self.items[self.pos][1] if self.pos < len(self.items) else self.end

    def take(self):
        ch = self.items[self.pos]
        self.pos += 1
        return ch

    def parse(self):
        node = self.alt()
        if self.peek() is not None:
            raise RegexParseError(f"unexpected {self.peek()!r}", self.where())
        return node

    def alt(self):
        branches = [self.cat()]
        while self.peek() == "|":
            self.take()
            branches.append(self.cat())
        return ("alt", branches) if len(branches) > 1 else branches[0]

    def cat(self):
        parts = []
        while self.peek() is not None and self.peek() not in ")|":
            parts.append(self.rep())
        if not parts:
            return ("eps",)
        return ("cat", parts) if len(parts) > 1 else parts[0]

    def rep(self):
        node = self.atom()
        while self.peek() in ("*", "+", "?"):
            op, _ = self.take()
            node = ({"*": "star", "+": "plus", "?": "opt"}[op], node)
        return node

    def atom(self):
        ch = self.peek()
        if ch is None:
            raise RegexParseError("unexpected end of pattern", self.where())
        if ch == "(":
            _, where = self.take()
            node = self.alt()
            if self.peek() != ")":
                raise RegexParseError("unbalanced '('", where)
            self.take()
            return node
        if ch in _LITERALS:
            self.take()
            return ("lit", ch)
        raise RegexParseError(f"unexpected {ch!r}", self.where())


# --- Thompson construction ---------------------------------------------------

class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, str, int]] = []  # sym == EPS for epsilon

    def state(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, src: int, sym: str, dst: int):
        self.edges.append((src, sym, dst))

    def build(self, node) -> tuple[int, int]:
        kind = node[0]
        if kind == "lit":
            s, t = self.state(), self.state()
            self.edge(s, node[1], t)
            return s, t
        if kind == "eps":
            s = self.state()
            return s, s
        if kind == "cat":
            first, last = None, None
            for part in node[1]:
                s, t = self.build(part)
                if first is None:
                    first = s
                else:
                    self.edge(last, EPS, s)
                last = t
            return first, last
        if kind == "alt":
            s, t = self.state(), self.state()
            for part in node[1]:
                ps, pt = self.build(part)
                self.edge(s, EPS, ps)
                self.edge(pt, EPS, t)
            return s, t
        if kind == "star":
            s, t = self.state(), self.state()
            ps, pt = self.build(node[1])
            self.edge(s, EPS, ps)
            self.edge(pt, EPS, t)
            self.edge(s, EPS, t)
            self.edge(pt, EPS, ps)
            return s, t
        if kind == "plus":
            return self.build(("cat", [node[1], ("star", node[1])]))
        if kind == "opt":
            return self.build(("alt", [node[1], ("eps",)]))
        raise AssertionError(kind)


def _eliminate_epsilon(n: int, edges, start: int, final: int) -> Nfa:
    eps_fwd: dict[int, list[int]] = {}
    sym_edges: list[tuple[int, str, int]] = []
    for (s, sym, d) in edges:
        if sym == EPS:
            eps_fwd.setdefault(s, []).append(d)
        else:
            sym_edges.append((s, sym, d))

    closure: dict[int, frozenset[int]] = {}

    def close(q: int) -> frozenset[int]:
        if q in closure:
            return closure[q]
        seen = {q}
        stack = [q]
        while stack:
            x = stack.pop()
            for y in eps_fwd.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        closure[q] = frozenset(seen)
        return closure[q]

    trans = set()
    for q in range(n):
        for mid in close(q):
            for (s, sym, d) in sym_edges:
                if s == mid:
                    trans.add((q, sym, d))
    finals = {q for q in range(n) if final in close(q)}
    return trim(make_nfa(n, start, finals, trans))


def compile_regex(pattern: str) -> Nfa:
    """Compile `pattern` to a trimmed epsilon-free NFA.

    Raises RegexParseError (with a 1-based position) on malformed input.
    """
    node = _Parser(pattern).parse()
    builder = _Builder()
    start, final = builder.build(node)
    return _eliminate_epsilon(builder.n, builder.edges, start, final)
