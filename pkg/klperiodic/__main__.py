"""klperiodic Main

This specifies the entrypoint of the klperiodic module when run as
executable: `python -m klperiodic` runs the CLI.
"""

import sys

from klperiodic.main_cli import klperiodic_cli as main


if __name__ == "__main__":
    r = main()
    sys.exit(r)
