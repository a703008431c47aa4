"""echosim: deterministic agent-based simulation of opinion dynamics,
echo chambers, and nudge-based mitigation on social graphs."""

__version__ = "0.1.0"

from .backends import BackendError, MockBackend, RemoteChatBackend, mock_backend_rule
from .config import BackendSettings, RunConfig, config_from_dict, default_config, resolve_config
from .errors import ConfigError, OpinionParseError, ParameterError
from .graphs import (
    GraphSpec,
    NetworkGraph,
    clustering_coefficient,
    default_graph_spec,
    degree_sequence,
    from_edge_list_text,
    generate_graph,
    generate_random,
    generate_scale_free,
    generate_small_world,
    is_connected,
    to_edge_list_text,
)
from .interventions import NudgePolicy, active_nudge_content, passive_nudge_feed, select_targets
from .language import AgentState, LlmParams, LlmRunResult, MemoryStore, Transcript, compress_long_term, llm_day, run_llm
from .layout import force_layout
from .metrics import MetricsSnapshot, deltas, global_disagreement, nci, polarization, snapshot
from .numeric import BcmParams, FjParams, bcm_day, fj_day, run_numeric
from .population import Persona, Population, init_population, persona_card
from .prompts import OpinionOutput, build_reflection_prompt, parse_opinion_output
from .recommendation import exposure_set, recommend
from .runner import compare, component_rng, run, sweep

__all__ = [
    "AgentState",
    "BackendError",
    "BackendSettings",
    "BcmParams",
    "ConfigError",
    "FjParams",
    "GraphSpec",
    "LlmParams",
    "LlmRunResult",
    "MemoryStore",
    "MetricsSnapshot",
    "MockBackend",
    "NetworkGraph",
    "NudgePolicy",
    "OpinionOutput",
    "OpinionParseError",
    "ParameterError",
    "Persona",
    "Population",
    "RemoteChatBackend",
    "RunConfig",
    "Transcript",
    "active_nudge_content",
    "bcm_day",
    "build_reflection_prompt",
    "clustering_coefficient",
    "compare",
    "component_rng",
    "compress_long_term",
    "config_from_dict",
    "default_config",
    "default_graph_spec",
    "degree_sequence",
    "deltas",
    "exposure_set",
    "fj_day",
    "force_layout",
    "from_edge_list_text",
    "generate_graph",
    "generate_random",
    "generate_scale_free",
    "generate_small_world",
    "global_disagreement",
    "init_population",
    "is_connected",
    "llm_day",
    "mock_backend_rule",
    "nci",
    "parse_opinion_output",
    "passive_nudge_feed",
    "persona_card",
    "polarization",
    "recommend",
    "resolve_config",
    "run",
    "run_llm",
    "run_numeric",
    "select_targets",
    "snapshot",
    "sweep",
    "to_edge_list_text",
]
