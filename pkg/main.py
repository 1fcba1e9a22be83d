import sys
from typing import List, Optional

from app.controllers import cli_controller
from app.utils.logger import get_logger


def create_app():
    """Командная оболочка рабочего места; логирование настраивается при запуске команды"""
    return cli_controller.build_parser()


def main(argv: Optional[List[str]] = None) -> int:
    return cli_controller.run(argv)


if __name__ == "__main__":
    logger = get_logger(__name__)
    logger.debug("Запуск hemiring workbench", argv=sys.argv[1:])
    sys.exit(main())
