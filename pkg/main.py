import sys

from components.cli__argparse.app import run_cli

if __name__ == "__main__":
    sys.exit(run_cli())
