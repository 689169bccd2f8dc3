"""Knot mosaics: tiles, tracing, invariants, moves, census, bounds, Gauss layout."""

from .bounds import audit, max_crossings, max_mosaic_number, min_mosaic_number, virtual_bound_check
from .census import CensusOptions, count, enumerate_mosaics, knot_census, search
from .errors import MosaicError
from .gauss import compile_gauss, invert_lists, is_realizable, layout, parse_gauss, roundtrip_check
from .invariants import jones, kauffman_bracket, span_crossing_bound
from .laurent import LaurentPoly
from .moves import applicable_moves, apply_move, equivalent_bfs, move_catalog, simplify
from .tiles import D4, Kind, Mosaic, grow, is_suitably_connected, parse_mosaic, serialize_mosaic, shrink, transform
from .topology import counts, gauss_code, trace, writhe

__all__ = [
    "CensusOptions", "D4", "Kind", "LaurentPoly", "Mosaic", "MosaicError",
    "applicable_moves", "apply_move", "audit", "compile_gauss", "count", "counts",
    "enumerate_mosaics", "equivalent_bfs", "gauss_code", "grow", "invert_lists",
    "is_realizable", "is_suitably_connected", "jones", "kauffman_bracket",
    "knot_census", "layout", "max_crossings", "max_mosaic_number", "min_mosaic_number",
    "move_catalog", "parse_gauss", "parse_mosaic", "roundtrip_check", "search",
    "serialize_mosaic", "shrink", "simplify", "span_crossing_bound", "trace",
    "transform", "virtual_bound_check", "writhe",
]
