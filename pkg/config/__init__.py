from .config_parser import ConfigParser
from .config_schema import PRESENTATION_SCHEMA, RUN_CONFIG_SCHEMA, VERIFY_REPORT_SCHEMA
from .run_config import RunConfig

__all__ = ["ConfigParser", "PRESENTATION_SCHEMA", "RUN_CONFIG_SCHEMA", "RunConfig", "VERIFY_REPORT_SCHEMA"]
