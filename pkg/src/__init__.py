"""braided-groups - exact computer algebra for Hopf algebras in braided categories."""
__version__ = "0.1.0"
