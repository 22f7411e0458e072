"""elfkit: dataset distillation and cross-architecture evaluation on a small CPU tensor engine."""

__version__ = "0.1.0"
