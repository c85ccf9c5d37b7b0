import logging

from .cli import create_cli
from .config import config

# Configure logging
logging.basicConfig(level=config.LOG_LEVEL)
logger = logging.getLogger(__name__)

config.validate()

# Create application
cli = create_cli()


if __name__ == "__main__":
    cli()
