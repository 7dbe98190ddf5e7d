"""chevlab: a computational laboratory for growth, escape, and torus
machinery in classical matrix groups over finite fields."""

__version__ = "0.1.0"
