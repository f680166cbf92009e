"""Exception hierarchy shared across the pipeline.

The CLI maps these onto exit codes: InputError/ConfigError mean a bad
config or input file (exit 2), any other PipelineError means a stage
failed on valid inputs (exit 1).
"""


class PipelineError(Exception):
    """A pipeline stage failed."""


class InputError(PipelineError):
    """An input file is missing, unreadable, or violates its format."""


class ConfigError(InputError):
    """The run configuration is invalid."""
