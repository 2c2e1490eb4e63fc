"""Anti-power search: substrings made of k consecutive pairwise-distinct
equal-length blocks, found in O(n^2/k) time and O(n) working space."""

from .naming import NameTable, extend, initial_names
from .oracle import QueryTriple, enumerate_all, is_anti_power
from .search import (
    CallbackSink,
    CollectingSink,
    CountingSink,
    HitSink,
    Metastring,
    SearchOptions,
    build_metastring,
    count_by_anti_period,
    find_all,
    find_all_list,
    map_hit,
)
from .text import AntiPowerHit, Text, from_bytes, from_symbols, to_one_based_coords
from .window import WindowScanner, distinct_k_windows, longest_distinct_substring
from .witness import (
    WitnessParams,
    anti_period_threshold,
    check_unique_dollar_factors,
    lower_bound_value,
    witness_params,
)
from .witness import generate as generate_witness

__version__ = "0.1.0"

__all__ = [
    "AntiPowerHit",
    "CallbackSink",
    "CollectingSink",
    "CountingSink",
    "HitSink",
    "Metastring",
    "NameTable",
    "QueryTriple",
    "SearchOptions",
    "Text",
    "WindowScanner",
    "WitnessParams",
    "anti_period_threshold",
    "build_metastring",
    "check_unique_dollar_factors",
    "count_by_anti_period",
    "distinct_k_windows",
    "enumerate_all",
    "extend",
    "find_all",
    "find_all_list",
    "from_bytes",
    "from_symbols",
    "generate_witness",
    "initial_names",
    "is_anti_power",
    "longest_distinct_substring",
    "lower_bound_value",
    "map_hit",
    "to_one_based_coords",
    "witness_params",
]
