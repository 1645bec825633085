import sys
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
sys.path.insert(0, str(Path(__file__).parent))

from yoneda_cps.graph import build_marked_graph
from yoneda_cps.monomial import MonomialIdeal
from yoneda_cps.presentation import parse_presentation

_presentations = {}
_graphs = {}


def fixture_path(name):
    return str(FIXTURES / f"{name}.json")


def load(name):
    if name not in _presentations:
        _presentations[name] = parse_presentation((FIXTURES / f"{name}.json").read_text())
    return _presentations[name]


def graph(name):
    if name not in _graphs:
        _graphs[name] = build_marked_graph(MonomialIdeal(load(name)))
    return _graphs[name]


def W(*words):
    """Walk as letter tuples, from display strings of one-char generators."""
    return tuple(tuple(w) for w in words)
