"""Check bounds and series limits, read from one JSON config file."""

import json
import os
from functools import lru_cache
from importlib import resources

ENV_VAR = "CATSCHETT_CONFIG"


def _defaults() -> dict:
    text = resources.files("catschett").joinpath("config_defaults.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=4)
def _load(path: str | None) -> dict:
    cfg = _defaults()
    if path:
        with open(path, encoding="utf-8") as fh:
            user = json.load(fh)
        if "enumeration_bound" in user:
            cfg["enumeration_bound"] = int(user["enumeration_bound"])
        for name, params in user.get("checks", {}).items():
            merged = dict(cfg["checks"].get(name, {}))
            merged.update(params)
            cfg["checks"][name] = merged
    return cfg


def load_config() -> dict:
    """Active configuration: packaged defaults overlaid with the file named by CATSCHETT_CONFIG."""
    return _load(os.environ.get(ENV_VAR) or None)


def enumeration_bound() -> int:
    """Hard cap on series truncation order and table sizes."""
    return load_config()["enumeration_bound"]


def check_params(name: str) -> dict:
    """Default parameters (n or order) for one registered check."""
    params = load_config()["checks"].get(name)
    if params is None:
        raise KeyError(f"no configured bounds for check: {name}")
    return dict(params)
