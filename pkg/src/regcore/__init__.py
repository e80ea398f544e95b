"""regcore: decide regular-language intersection emptiness for graph problems.

Given an NFA over the encoding alphabet {a, $, #, 1, >} whose words encode
(graph, threshold) instances, decide whether the language contains a positive
instance of a chosen graph problem, and produce a verifiable witness when it
does.
"""

from .automata import (  # noqa: F401
    Nfa, contains, intersect, is_empty, is_finite, is_subset, make_nfa,
    nfa_from_json, nfa_to_json, shortlex_iter, strip_suffix, sub_automaton,
    trim, words_up_to,
)
from .encoding import (  # noqa: F401
    Token, TokenKind, classify_states, decode, decode_red_blue, enc_nfa,
    normalize, tokenize,
)
from .engine import Decision, choose_rep, decide, verify_witness  # noqa: F401
from .graphs import (  # noqa: F401
    Graph, RedBlueGraph, add_leaf, delete_edge, delete_vertex, graph, merge,
    rb_cleanup_delete, rb_merge, red_blue_graph, rename, separate,
)
from .problems import by_name, registry, solve, solve_red_blue  # noqa: F401
from .regex import RegexParseError, compile_regex  # noqa: F401
from .reps import (  # noqa: F401
    RepFunction, build_condensed, core_length_bound, finite_core, pick_merge,
    pick_separate, pick_threshold, reduce_by_deletion, token_sets, union_reps,
)
