__version__ = "1.0.0"
__author__ = "The GraphInsight Authors"
__license__ = "Apache-2.0"
__description__ = "Importance-based graph description reorganization and graph-question benchmarking for LLMs"


from .graph import (
    GraphError, Edge, Graph, degree, neighbors, PageRankVector, pagerank
)
from .answers import (
    Answer, Boolean, Number, NodeId, NodeSet, PairSet, AnchoredPairSet,
    TripleSet, ScoredPairList, ParseFailure, answer_types, set_types
)
from .oracles import (
    OracleError, Kind, Tasks, instructions, format_param, adjacent,
    distances, k_order, find_edge, nn_walk, first_maximum, Macro, Micro,
    Composite, Steps, run_oracle, macro_oracle, micro_oracle,
    composite_oracle
)
from .description import (
    DescriptionError, clause_template, preamble, structural_header,
    EdgeClause, DescriptionSequence, render_raw, components, dijkstra,
    reorder, render_structural
)
from .bias import BiasModelError, PositionalBiasModel
from .reorganizer import (
    LayoutError, SubgraphBlock, RegionLayout, ImportanceProfile, decompose,
    capacity, reorganize, importance_profile, kl_diagnostic
)
from .ragbase import (
    node_fact, edge_fact, RagBase, Retrieval, build_rag_base,
    extract_entities, retrieve, assemble_prompt
)
from .graphsqa import (
    GenConfigError, BenchmarkFormatError, GenConfig, Task, Benchmark,
    edge_anchored,
    generate_graph, make_task, generate_tasks, generate_benchmark,
    save_benchmark, load_benchmark
)
from .parser import (
    ParsingError, Words, parse_clause, parse_al_line, parse_matrix_row,
    parse_fact, split_blocks, parse_description, last_bracket_list,
    parse_answer
)
from .scoring import (
    ScoringError, score, WilcoxonResult, wilcoxon_signed_rank, TaskScore,
    ScoreReport, aggregate, compare_reports, comparison_table
)
from .simulator import (
    refusal, RecalledGraph, prompt_rng, read_section, read_question,
    recognize, recall_graph, simulate_llm
)
from .llm import TransportError, LlmClient, SimulatedClient, RemoteClient
from .harness import (
    MethodError, MethodSpec, METHODS, get_method, cot_instruction,
    bag_instruction, fewshot_examples, wrap_prompt, GraphContext, prepare,
    build_prompt, StepFailure, Agent, run_agent, TaskResult, run_task,
    MethodRun, run_method, run_evaluation, sweep_params, sweep_methods
)
from .config import ConfigError, Config, load_config
from .cli import main


__all__ = [name for name in globals() if not name.startswith("__")]
