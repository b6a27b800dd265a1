import logging
import os
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError as PydanticValidationError, field_validator

from praaf.errors import ConfigurationError
from praaf.models import (
    DEFAULT_ETA_ID,
    DEFAULT_MAX_ARGUMENTS,
    DEFAULT_MAX_ELEMENTS,
    DEFAULT_TOLERANCE,
    SemanticsName,
    WorldMode,
    is_argument_id
)

OutputFormat = Literal["table", "csv", "jsonl"]


class EngineConfig(BaseModel):
    """Settings shared by every CLI command."""
    mode: WorldMode = WorldMode.RAW
    semantics: SemanticsName = SemanticsName.ADMISSIBLE
    tolerance: float = Field(default=DEFAULT_TOLERANCE, gt=0)
    max_elements: int = Field(default=DEFAULT_MAX_ELEMENTS, ge=1)
    max_arguments: int = Field(default=DEFAULT_MAX_ARGUMENTS, ge=1)
    output: OutputFormat = "table"
    eta_id: str = DEFAULT_ETA_ID
    exact: bool = False
    log_level: str = "WARNING"

    @field_validator("eta_id")
    @classmethod
    def _check_eta_id(cls, value: str) -> str:
        if not is_argument_id(value):
            raise ValueError(f"'{value}' is not a valid argument id")
        return value

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level '{value}'")
        return level

    def with_overrides(self, **overrides) -> 'EngineConfig':
        """Return a copy with the given non-None values replaced and re-validated."""
        updates = {key: value for key, value in overrides.items() if value is not None}
        try:
            return EngineConfig.model_validate({**self.model_dump(), **updates})
        except PydanticValidationError as e:
            raise ConfigurationError(f"Invalid configuration: {e}") from e


def _env_flag(value: Optional[str]) -> Optional[bool]:
    if value is None:
        return None
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_config() -> EngineConfig:
    """
    Load configuration from the environment (and a .env file when present).

    Raises:
        ConfigurationError: If a variable holds an invalid value
    """
    load_dotenv()

    env_values = {
        "mode": os.getenv("PRAAF_MODE"),
        "semantics": os.getenv("PRAAF_SEMANTICS"),
        "tolerance": os.getenv("PRAAF_TOLERANCE"),
        "max_elements": os.getenv("PRAAF_MAX_ELEMENTS"),
        "max_arguments": os.getenv("PRAAF_MAX_ARGUMENTS"),
        "output": os.getenv("PRAAF_OUTPUT"),
        "eta_id": os.getenv("PRAAF_ETA"),
        "exact": _env_flag(os.getenv("PRAAF_EXACT")),
        "log_level": os.getenv("PRAAF_LOG_LEVEL")
    }
    return EngineConfig().with_overrides(**env_values)
