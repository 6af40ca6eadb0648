"""String polytopes of type A, their crystal structure via Gleizer-Postnikov
paths, weight-zero translation embeddings and an atom verifier for B(k theta)."""

__version__ = "0.1.0"
