from hampic.configuration.core import (
    OutputConfig,
    RunConfig,
    SpaceConfig,
    TimeConfig,
    apply_override,
    echo_file,
    echo_text,
    list_presets,
    load_preset,
    parse_config,
    parse_config_text,
    parse_value,
    resolve,
    write_echo,
)
from hampic.configuration.errors import ConfigError

__all__ = [
    "ConfigError",
    "OutputConfig",
    "RunConfig",
    "SpaceConfig",
    "TimeConfig",
    "apply_override",
    "echo_file",
    "echo_text",
    "list_presets",
    "load_preset",
    "parse_config",
    "parse_config_text",
    "parse_value",
    "resolve",
    "write_echo",
]
