"""Exact partizan game engine: values, rulesets, reductions, realization."""

from ._core import (
    Game,
    ParseError,
    certify,
    down,
    down_multiple,
    down_path,
    down_star_multiple,
    integer,
    normalize_position,
    parse_value,
    position_to_game,
    realize,
    reduce_position,
    render_diagram,
    render_tree,
    render_value,
    selftest,
    star,
    tree_isomorphic,
    up,
    up_multiple,
    up_path,
    up_star_multiple,
    verify_value,
    zero,
)

__all__ = [
    "Game",
    "ParseError",
    "certify",
    "down",
    "down_multiple",
    "down_path",
    "down_star_multiple",
    "integer",
    "normalize_position",
    "parse_value",
    "position_to_game",
    "realize",
    "reduce_position",
    "render_diagram",
    "render_tree",
    "render_value",
    "selftest",
    "star",
    "tree_isomorphic",
    "up",
    "up_multiple",
    "up_path",
    "up_star_multiple",
    "verify_value",
    "zero",
]
