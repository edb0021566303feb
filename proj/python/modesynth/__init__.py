"""Mode synthesizer: learn recurring modes of image streams by frequency."""

from ._core import (
    LossReport,
    ModeDistribution,
    ModeMemory,
    ModeRecord,
    MosError,
    Reconstruction,
    ReconstructionParams,
    RuleConfig,
    RuleKind,
    RunResult,
    Sample,
    SampleStream,
    TransferKind,
    encode_pgm,
    hidden_activation,
    learned_indices,
    load_class,
    mode_select,
    net_sum,
    normalize,
    parse_idx_images,
    parse_idx_labels,
    pool_modes,
    reconstruct,
    reconstruction_loss,
    rule_fires,
    run_generations,
    sample_mass,
    transfer,
)

__version__ = "0.1.0"
