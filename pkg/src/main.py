import sys

from src.infraestructure.cli.commands import run
from src.infraestructure.config import get_settings
from src.infraestructure.logging_config import configure_logging


def main() -> int:
    settings = get_settings()
    configure_logging(settings.log_level)
    return run(sys.argv[1:], settings=settings)


if __name__ == "__main__":
    sys.exit(main())
