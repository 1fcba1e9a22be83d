import os
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from app.utils.errors import InputError

ENV_PREFIX = "HEMIRING_"


class WorkbenchConfig(BaseModel):
    """
    Конфигурация вычислений: сетка значений, лимиты перебора, формат вывода
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    denominator: int = Field(20, ge=1)
    brute_force_cap: int = Field(16, ge=1)
    closure_system_cap: int = Field(32, ge=1)
    generator_cap: int = Field(4, ge=1)
    fuzzy_family_budget: int = Field(100_000, ge=1)
    fuzzy_family_limit: int = Field(50_000, ge=1)
    sample_pairs: int = Field(500, ge=1)
    sample_seed: int = 0
    max_triples: int = Field(20_000, ge=1)
    output_format: Literal["human", "json-lines"] = "human"
    log_level: str = "WARNING"
    log_format: Literal["json", "standard"] = "json"
    log_file: Optional[str] = None

    @classmethod
    def from_env(cls, **overrides: Any) -> "WorkbenchConfig":
        """
        Собирает конфигурацию из переменных окружения HEMIRING_<FIELD>

        Args:
            overrides: Явные значения (например, из опций CLI); None пропускается

        Returns:
            Проверенная конфигурация
        """
        values: Dict[str, Any] = {}
        for name in cls.model_fields:
            raw = os.environ.get(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls.model_validate(values)
        except ValidationError as e:
            raise InputError(f"invalid configuration: {e.errors()[0]['msg']}",
                             {"fields": [err["loc"] for err in e.errors()]})

    def with_updates(self, **changes: Any) -> "WorkbenchConfig":
        merged = self.model_dump()
        merged.update({k: v for k, v in changes.items() if v is not None})
        try:
            return WorkbenchConfig.model_validate(merged)
        except ValidationError as e:
            raise InputError(f"invalid configuration: {e.errors()[0]['msg']}")
