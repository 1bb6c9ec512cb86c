from .loader import apply_overrides, load_run_config, parse_run_config

__all__ = ["apply_overrides", "load_run_config", "parse_run_config"]
