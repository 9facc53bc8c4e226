import sys
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from cli import run  # noqa: E402


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
