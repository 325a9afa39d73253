"""θ_k-graph construction, constructive θ₅ spanning paths, exact stretch
measurement and the lower-bound / routing-adversary instances."""

__version__ = "1.0.0"
