# -*- coding: utf-8 -*-
"""
Configuration entry point of the package and the few settings lookups that combine it
with the environment.
"""
import os
from pathlib import Path

from pymodaq.utils.config import BaseConfig

from .errors import ConfigurationError

FM_BUDGET_ENV = 'CCX_MAX_FM_CONSTRAINTS'


class Config(BaseConfig):
    """Main class to deal with configuration values for this package"""
    config_template_path = Path(__file__).parent.joinpath('resources/config_template.toml')
    config_name = f"config_{__package__}"


def fm_budget(config: Config) -> int:
    """Maximum number of constraints a Fourier-Motzkin step may produce

    The environment variable wins over the configuration file.

    :param config: the package configuration
    :type config: Config
    :return: the constraint cap
    :rtype: int
    :raises ConfigurationError: the cap is not a positive integer
    """
    value = os.environ.get(FM_BUDGET_ENV)
    if value is not None and value.strip():
        return _positive_int(value.strip(), FM_BUDGET_ENV)
    return _positive_int(config['fm', 'max_constraints'], 'fm.max_constraints')


def _positive_int(value, name: str) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        number = 0
    if isinstance(value, (bool, float)) or number < 1:
        raise ConfigurationError(name, "expected a positive integer, got {!r}".format(value))
    return number
