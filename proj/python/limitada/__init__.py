"""Automata toolkit: two-way, 1-limited and common-guess machines."""

from ._limitada import (
    ContractError,
    InputError,
    ResourceError,
    accepts,
    binseq_length,
    bound_report,
    convert,
    convert_ops,
    decide,
    fooling_check,
    full_binary_sequence,
    generate_binseq,
    generate_witness,
    kind,
    m_n_member,
    pipeline_names,
    primorial,
    report,
    states,
)

__all__ = [
    "ContractError",
    "InputError",
    "ResourceError",
    "accepts",
    "binseq_length",
    "bound_report",
    "convert",
    "convert_ops",
    "decide",
    "fooling_check",
    "full_binary_sequence",
    "generate_binseq",
    "generate_witness",
    "kind",
    "m_n_member",
    "pipeline_names",
    "primorial",
    "report",
    "states",
]
