"""The regular graph encoding, tokenization, and decoding.

A well-formed encoding is one threshold token ``>1^k$`` followed by edge
factors, each a left vertex token ``>a^i#`` and a right vertex token
``>a^j$``.  Decoding yields a simple graph (or a red-blue graph under the
bipartite interpretation) together with the threshold k.

Words are ASCII strings; witness words whose repeated blocks are too long to
materialize are handled as token sequences with integer magnitudes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from . import automata
from .automata import Nfa, contains, intersect, is_empty, sub_automaton, trim
from .graphs import Graph, RedBlueGraph, graph, red_blue_graph
from .regex import compile_regex


class EncodingError(ValueError):
    """Word is not a well-formed instance encoding."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class TokenKind(enum.Enum):
    THRESHOLD = "threshold"
    LEFT = "left_vertex"
    RIGHT = "right_vertex"


_BODY = {TokenKind.THRESHOLD: "1", TokenKind.LEFT: "a", TokenKind.RIGHT: "a"}
_CLOSE = {TokenKind.THRESHOLD: "$", TokenKind.LEFT: "#", TokenKind.RIGHT: "$"}
_KIND_RANK = {TokenKind.THRESHOLD: 0, TokenKind.LEFT: 1, TokenKind.RIGHT: 2}

# Above this magnitude, tokens render in power notation instead of literally.
RENDER_LIMIT = 10_000


@dataclass(frozen=True, order=False)
class Token:
    """One factor of an encoding: >1^k$, >a^i#, or >a^i$."""

    kind: TokenKind
    magnitude: int

    def __post_init__(self):
        if self.magnitude < 0:
            raise EncodingError("token magnitude must be >= 0")

    @property
    def length(self) -> int:
        return self.magnitude + 2

    @property
    def word(self) -> str:
        if self.magnitude > RENDER_LIMIT:
            return f">{_BODY[self.kind]}^{self.magnitude}{_CLOSE[self.kind]}"
        return ">" + _BODY[self.kind] * self.magnitude + _CLOSE[self.kind]

    def sort_key(self) -> tuple:
        # Shortlex on serializations: length, then '1' < 'a' and '#' < '$'.
        return (self.length, _KIND_RANK[self.kind], self.magnitude)

    def __lt__(self, other: "Token") -> bool:
        return self.sort_key() < other.sort_key()


def threshold(k: int) -> Token:
    return Token(TokenKind.THRESHOLD, k)


def left_vertex(i: int) -> Token:
    return Token(TokenKind.LEFT, i)


def right_vertex(i: int) -> Token:
    return Token(TokenKind.RIGHT, i)


def tokenize(w: str) -> list[Token]:
    """Unique factorization into one threshold token and edge-factor tokens.

    Raises EncodingError naming the first offending position (1-based).
    """
    tokens: list[Token] = []
    n = len(w)
    pos = 0

    def expect(kind: TokenKind) -> None:
        nonlocal pos
        if pos >= n or w[pos] != ">":
            raise EncodingError("expected '>'", pos + 1)
        pos += 1
        count = 0
        body = _BODY[kind]
        while pos < n and w[pos] == body:
            count += 1
            pos += 1
        close = _CLOSE[kind]
        if pos >= n or w[pos] != close:
            raise EncodingError(f"expected {close!r}", pos + 1)
        pos += 1
        tokens.append(Token(kind, count))

    expect(TokenKind.THRESHOLD)
    while pos < n:
        expect(TokenKind.LEFT)
        expect(TokenKind.RIGHT)
    return tokens


def validate_tokens(tokens) -> None:
    """Check the threshold-then-edge-factor shape of a token sequence."""
    if not tokens or tokens[0].kind is not TokenKind.THRESHOLD:
        raise EncodingError("encoding must start with a threshold token")
    rest = tokens[1:]
    if len(rest) % 2:
        raise EncodingError("dangling left vertex token")
    for i, tok in enumerate(rest):
        want = TokenKind.LEFT if i % 2 == 0 else TokenKind.RIGHT
        if tok.kind is not want:
            raise EncodingError(f"token {i + 2} should be a {want.value} token")


def render(tokens) -> str:
    """Serialize a token sequence; huge magnitudes use power notation."""
    return "".join(t.word for t in tokens)


def word_length(tokens) -> int:
    return sum(t.length for t in tokens)


def edge_factors(tokens) -> list[tuple[int, int]]:
    """Ordered (left stem, right stem) pairs of a token sequence."""
    validate_tokens(tokens)
    rest = tokens[1:]
    return [(rest[i].magnitude, rest[i + 1].magnitude)
            for i in range(0, len(rest), 2)]


def decode_tokens(tokens) -> tuple[Graph, int]:
    pairs = edge_factors(tokens)
    vertices = set()
    edges = set()
    for (i, j) in pairs:
        vertices.add(i)
        vertices.add(j)
        if i != j:
            edges.add((min(i, j), max(i, j)))
    return Graph(frozenset(vertices), frozenset(edges)), tokens[0].magnitude


def decode(w: str) -> tuple[Graph, int]:
    """Decode an encoding to (simple graph, threshold).

    Vertices are their integer stem indices; duplicate and reversed edge
    factors collapse, and equal-index factors contribute isolated vertices.
    """
    return decode_tokens(tokenize(w))


def decode_red_blue_tokens(tokens) -> tuple[RedBlueGraph, int]:
    pairs = edge_factors(tokens)
    edges = {(f"r{i}", f"b{j}") for (i, j) in pairs}
    return red_blue_graph(edges=edges), tokens[0].magnitude


def decode_red_blue(w: str) -> tuple[RedBlueGraph, int]:
    """Bipartite interpretation: red vertex per left token, blue per right.

    Indices live in separate color spaces, so a factor with equal indices is
    a real edge and no isolated vertices can arise.
    """
    return decode_red_blue_tokens(tokenize(w))


# --- recognizers --------------------------------------------------------------

@lru_cache(maxsize=None)
def enc_nfa() -> Nfa:
    """Recognizer for the language of all instance encodings."""
    return compile_regex(">1*$(>a*#>a*$)*")


@lru_cache(maxsize=None)
def threshold_token_nfa() -> Nfa:
    return compile_regex(">1*$")


@lru_cache(maxsize=None)
def vertex_token_nfa() -> Nfa:
    return compile_regex(">a*(#|$)")


@lru_cache(maxsize=None)
def left_token_nfa() -> Nfa:
    return compile_regex(">a*#")


@lru_cache(maxsize=None)
def right_token_nfa() -> Nfa:
    return compile_regex(">a*$")


def normalize(m: Nfa) -> Nfa:
    """Trimmed product with the encoding recognizer.

    The result accepts L(m) ∩ Enc and its initial state has no incoming
    transitions, which downstream state classification relies on.
    """
    return intersect(m, enc_nfa())


# --- membership for token sequences -------------------------------------------

def _mat_from_symbol(m: Nfa, sym: str) -> list[int]:
    """Transition relation for `sym` as bitmask rows (row q = successors)."""
    rows = [0] * m.n_states
    for (src, s, dst) in m.transitions:
        if s == sym:
            rows[src] |= 1 << dst
    return rows


def _mat_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * len(a)
    for i, row in enumerate(a):
        acc = 0
        r = row
        while r:
            low = r & -r
            acc |= b[low.bit_length() - 1]
            r ^= low
        out[i] = acc
    return out


def _mat_pow(mat: list[int], e: int) -> list[int]:
    n = len(mat)
    result = [1 << i for i in range(n)]  # identity
    base = mat
    while e:
        if e & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        e >>= 1
    return result


def contains_tokens(m: Nfa, tokens) -> bool:
    """Membership of a token sequence, tolerating astronomic magnitudes.

    Repeated blocks are applied via boolean matrix powers, so a token like
    >1^(2^100)$ costs only ~100 squarings.
    """
    states = 1 << m.initial
    arrow = _mat_from_symbol(m, ">")
    mats = {sym: _mat_from_symbol(m, sym) for sym in ("1", "a", "#", "$")}

    def apply(mat: list[int], mask: int) -> int:
        acc = 0
        r = mask
        while r:
            low = r & -r
            acc |= mat[low.bit_length() - 1]
            r ^= low
        return acc

    for tok in tokens:
        states = apply(arrow, states)
        if not states:
            return False
        body = mats[_BODY[tok.kind]]
        if tok.magnitude:
            states = apply(_mat_pow(body, tok.magnitude), states)
        if not states:
            return False
        states = apply(mats[_CLOSE[tok.kind]], states)
        if not states:
            return False
    final_mask = 0
    for q in m.finals:
        final_mask |= 1 << q
    return bool(states & final_mask)


# --- state classification ------------------------------------------------------

@dataclass(frozen=True)
class StateClasses:
    """Partition of the state set by the token kind readable from each state."""

    threshold: frozenset[int]
    left_vertex: frozenset[int]
    right_vertex: frozenset[int]
    empty: frozenset[int]


def _has_incoming(m: Nfa, q: int) -> bool:
    return any(dst == q for (_, _, dst) in m.transitions)


def classify_states(m: Nfa) -> StateClasses:
    """Label each state by the token kind that can start from it.

    Requires a trimmed automaton over the encoding language whose initial
    state has no incoming transition (see normalize()); threshold tokens then
    occur only at the initial state, and final states land in the left-vertex
    class by convention.  Inconsistent automata raise EncodingError.
    """
    if _has_incoming(m, m.initial):
        raise EncodingError("initial state is re-enterable; normalize() first")
    th, lv, rv, emp = set(), set(), set(), set()
    left, right = left_token_nfa(), right_token_nfa()
    thresh = threshold_token_nfa()
    for p in range(m.n_states):
        src = Nfa(m.n_states, p, frozenset(range(m.n_states)), m.transitions)
        can_left = not is_empty(intersect(src, left))
        can_right = not is_empty(intersect(src, right))
        can_thresh = p == m.initial and not is_empty(intersect(src, thresh))
        if can_left and can_right:
            raise EncodingError(f"state {p} starts both token kinds")
        if can_thresh:
            th.add(p)
        elif p in m.finals:
            lv.add(p)
        elif can_left:
            lv.add(p)
        elif can_right:
            rv.add(p)
        else:
            emp.add(p)
    return StateClasses(frozenset(th), frozenset(lv), frozenset(rv), frozenset(emp))


# --- characteristic factorizations ----------------------------------------------

def characteristic_factorization(m: Nfa, w: str) -> tuple[list[str], list[int]]:
    """Token factors of w plus a witnessing accepting state sequence.

    Returns (factors, states) with len(states) == len(factors) + 1 and
    states[0] == m.initial.  Nondeterminism resolves to the lexicographically
    smallest state sequence.
    """
    tokens = tokenize(w)
    factors = [t.word for t in tokens]
    # Forward reachable state sets at token boundaries.
    fwd: list[frozenset[int]] = [frozenset((m.initial,))]
    for f in factors:
        cur = fwd[-1]
        for sym in f:
            cur = m.step(cur, sym)
        fwd.append(cur)
    if not (fwd[-1] & m.finals):
        raise EncodingError("word is not accepted by the automaton")
    # Backward co-reachable sets, then a greedy lex-smallest forward walk.
    back: list[frozenset[int]] = [frozenset(m.finals)]
    for f in reversed(factors):
        target = back[0]
        cur = set()
        for q in range(m.n_states):
            reach = frozenset((q,))
            for sym in f:
                reach = m.step(reach, sym)
                if not reach:
                    break
            if reach & target:
                cur.add(q)
        back.insert(0, frozenset(cur))
    states = [m.initial]
    for i, f in enumerate(factors):
        options = sorted(fwd[i + 1] & back[i + 1])
        chosen = None
        for cand in options:
            reach = frozenset((states[-1],))
            for sym in f:
                reach = m.step(reach, sym)
                if not reach:
                    break
            if cand in reach:
                chosen = cand
                break
        if chosen is None:
            raise EncodingError("internal: no consistent state sequence")
        states.append(chosen)
    return factors, states


def sigma_w(states: list[int], infinite_pairs: set[tuple[int, int]]) -> int:
    """Maximum multiplicity, along a factorization's state sequence, of a
    state pair whose vertex token set is infinite; 0 if none occurs."""
    counts: dict[tuple[int, int], int] = {}
    for i in range(1, len(states)):
        pair = (states[i - 1], states[i])
        if pair in infinite_pairs:
            counts[pair] = counts.get(pair, 0) + 1
    return max(counts.values(), default=0)
