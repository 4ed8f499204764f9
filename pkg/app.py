"""Hecke engine - command-line entry point

The application logic is organized in:
- app/: argument parsing, command handlers, records, serialization
- hecke/: the exact-arithmetic library, job executor and record storage
"""

import asyncio
import sys

from dotenv import load_dotenv

# Load environment variables from .env file before the constants are read
load_dotenv()

from app.bootstrap import run_cli  # noqa: E402
from hecke.constants import EXIT_INTERNAL, logger  # noqa: E402


if __name__ == "__main__":
    try:
        code = asyncio.run(run_cli())
    except KeyboardInterrupt:
        logger.info("Interrupted")
        code = EXIT_INTERNAL
    except Exception as e:
        logger.error(f"Error running command: {e}")
        code = EXIT_INTERNAL
    sys.exit(code)
