from pathlib import Path
from typing import List, Optional

from app.models import fixtures
from app.models.generator import enumerate_hemirings
from app.models.hemiring import Hemiring
from app.models.schemas import CorpusManifest, parse_document
from app.services.hemiring_service import HemiringService
from app.utils.config import WorkbenchConfig
from app.utils.errors import InputError
from app.utils.logger import get_logger

MANIFEST = "manifest.json"
ANNOTATION_SUFFIX = ".annotation.json"


class CorpusService:
    """
    Корпуса структур на диске: генерация, встроенные примеры, чтение каталога
    """

    def __init__(self, config: Optional[WorkbenchConfig] = None):
        self.logger = get_logger(__name__)
        self.config = config or WorkbenchConfig()
        self.hemirings = HemiringService(self.config)

    def generate(self, order: int, out_dir: Path, strategy: Optional[str] = None) -> CorpusManifest:
        """
        Записывает все полукольца порядка order и манифест с числом структур

        Raises:
            CapacityError: порядок вне диапазона генератора
        """
        out_dir = Path(out_dir)
        self.logger.info("Начало генерации корпуса", order=order, out_dir=str(out_dir), strategy=strategy)
        structures = enumerate_hemirings(order, strategy, self.config.generator_cap)
        manifest = self._read_manifest(out_dir) or CorpusManifest()
        files = [name for name in manifest.files if not name.startswith(f"order{order}_")]
        for hemiring in structures:
            path = self.hemirings.save(hemiring, out_dir / f"{hemiring.name}.json")
            files.append(path.name)
        counts = dict(manifest.counts)
        counts[str(order)] = len(structures)
        manifest = CorpusManifest(counts=counts, files=sorted(files), strategy=strategy)
        (out_dir / MANIFEST).write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
        self.logger.info("Корпус записан", order=order, count=len(structures))
        return manifest

    def _read_manifest(self, directory: Path) -> Optional[CorpusManifest]:
        path = directory / MANIFEST
        if not path.is_file():
            return None
        return parse_document(CorpusManifest, path.read_text(encoding="utf-8"), str(path))

    def load(self, directory: Path, quarantine: bool = True) -> List[Hemiring]:
        """
        Читает структуры каталога: из манифеста, если он есть, иначе все *.json

        Raises:
            InputError: каталог отсутствует или пуст
        """
        directory = Path(directory)
        if not directory.is_dir():
            raise InputError(f"corpus directory {directory} does not exist")
        manifest = self._read_manifest(directory)
        if manifest is not None:
            paths = [directory / name for name in manifest.files]
        else:
            paths = sorted(
                p for p in directory.glob("*.json")
                if p.name != MANIFEST and not p.name.endswith(ANNOTATION_SUFFIX)
            )
        if not paths:
            raise InputError(f"corpus directory {directory} holds no structures")
        corpus = [self.hemirings.load(p, quarantine=quarantine) for p in paths]
        self.logger.info("Корпус прочитан", directory=str(directory), structures=len(corpus))
        return corpus

    def write_fixtures(self, out_dir: Path) -> List[Path]:
        out_dir = Path(out_dir)
        written = [
            self.hemirings.save(fixtures.ex66(), out_dir / f"{fixtures.EX66}.json"),
            self.hemirings.save(fixtures.ex67(), out_dir / f"{fixtures.EX67}.json"),
        ]
        annotation = fixtures.ex67_annotation()
        path = out_dir / f"{fixtures.EX67}{ANNOTATION_SUFFIX}"
        path.write_text(annotation.model_dump_json(indent=2) + "\n", encoding="utf-8")
        written.append(path)
        self.logger.info("Встроенные примеры записаны", out_dir=str(out_dir), files=[p.name for p in written])
        return written
