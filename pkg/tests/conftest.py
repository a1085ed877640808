import sys
from pathlib import Path

# The reference implementations are deliberately import-isolated from the
# package; tests reach them through a plain path entry.
sys.path.insert(0, str(Path(__file__).parent / "reference"))
