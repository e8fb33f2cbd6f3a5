"""Structure discovery over finite simplicial sets.

Subpackages cover the ordinal category, truncated simplicial sets with
horns and boundaries, nerves of finite categories, lifting problems and
Kan/quasicategory classification, causal DAG imsets and separoids, PSR
core-test discovery, and integer simplicial homology.
"""

__version__ = "0.1.0"
