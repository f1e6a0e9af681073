"""Keyword co-occurrence network analysis.

Builds weighted co-occurrence graphs from bibliographic keyword lists,
computes the usual network metrics (degree, strength, weighted clustering,
neighbour degree), and mines frequent keyword combinations into association
rules. The heavy lifting lives in the compiled `_core` extension; the `kcn`
command-line tool drives the full corpus pipeline.
"""

from ._core import (
    Graph,
    build_graph,
    derive_rules,
    mine_itemsets,
    mine_rules,
    normalize_keyword,
    split_keywords,
    stem,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "build_graph",
    "derive_rules",
    "mine_itemsets",
    "mine_rules",
    "normalize_keyword",
    "split_keywords",
    "stem",
]


def normalize_all(fields):
    """Canonical keyword sets for an iterable of raw keyword fields.

    Each field is split on the usual delimiters, every part is normalized,
    and parts that normalize to nothing are dropped.
    """
    out = []
    for field in fields:
        canon = set()
        for raw in split_keywords(field):
            norm = normalize_keyword(raw)
            if norm is not None:
                canon.add(norm)
        out.append(sorted(canon))
    return out
