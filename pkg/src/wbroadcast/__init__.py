"""Local cloning of non-maximal W states and analysis of the broadcast pairs."""

from .analysis import AnalysisRecord, ThresholdReport, analyze, sweep, table2, thresholds
from .cloner import BroadcastOutputs, bh_clone, broadcast_pipeline
from .measures import concurrence, eof, linear_entropy
from .separability import SeparabilityVerdict, find_threshold, ppt_verdict, w3_w4
from .states import DensityMatrix, PureState, WParams, density, symmetric_params, w_type_state

__all__ = [
    "AnalysisRecord",
    "BroadcastOutputs",
    "DensityMatrix",
    "PureState",
    "SeparabilityVerdict",
    "ThresholdReport",
    "WParams",
    "analyze",
    "bh_clone",
    "broadcast_pipeline",
    "concurrence",
    "density",
    "eof",
    "find_threshold",
    "linear_entropy",
    "ppt_verdict",
    "sweep",
    "symmetric_params",
    "table2",
    "thresholds",
    "w3_w4",
    "w_type_state",
]
