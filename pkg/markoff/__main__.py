"""Script to start the markoff command line."""

from markoff.cli.main import main

raise SystemExit(main())
