#!/usr/bin/env python3
"""
Entry point for muntz-spectral.
This file is the launcher that puts src on the import path and runs the CLI.
"""

import sys
from pathlib import Path

# Add the src directory to the Python path so we can import from it
project_root = Path(__file__).parent
src_path = project_root / "src"
sys.path.insert(0, str(src_path))

from main import main

if __name__ == '__main__':
    sys.exit(main())
