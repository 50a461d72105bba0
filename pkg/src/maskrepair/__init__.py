"""maskrepair: template-based program repair via masked fix patterns.

Buggy statements are matched against a closed catalog of fix templates,
rewritten into masked candidate edits, filled by pluggable prediction
backends (local donor retrieval, span infilling, sequential single-token
beam search, chat prompting), and validated by compiling and running the
project's test suite.
"""

__version__ = "0.1.0"

MASK_TOKEN = "<mask>"
