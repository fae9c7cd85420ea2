"""Maximal (delta, gamma)-clique enumeration for weighted temporal networks."""

from .bulk import BulkStats, ResultSink, bulk_phase
from .generate import GeneratorParams, generate_random
from .network import EdgeTimeline, ParseError, TemporalNetwork, ingest, read_network, relabel
from .oracle import Clique, OracleCapError, OracleConfig, is_dominated, oracle_enumerate
from .pipeline import EnumerationResult, find_maximal_cliques
from .stretch import CliqueRecord, StretchStats, StretchStore, stretch_edge, stretch_phase, validate_record

__all__ = [
    "BulkStats",
    "Clique",
    "CliqueRecord",
    "EdgeTimeline",
    "EnumerationResult",
    "GeneratorParams",
    "OracleCapError",
    "OracleConfig",
    "ParseError",
    "ResultSink",
    "StretchStats",
    "StretchStore",
    "TemporalNetwork",
    "bulk_phase",
    "find_maximal_cliques",
    "generate_random",
    "ingest",
    "is_dominated",
    "oracle_enumerate",
    "read_network",
    "relabel",
    "stretch_edge",
    "stretch_phase",
    "validate_record",
]

__version__ = "0.1.0"
