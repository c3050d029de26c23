from weingarten.cli.app import build_parser, main
from weingarten.cli.config import RunConfig, build_config

__all__ = ["RunConfig", "build_config", "build_parser", "main"]
