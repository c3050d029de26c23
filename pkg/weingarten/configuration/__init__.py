from weingarten.configuration.settings import DEFAULT_TOLERANCES, Tolerances, configure_logging, load_environment

__all__ = ["DEFAULT_TOLERANCES", "Tolerances", "configure_logging", "load_environment"]
