from .sampling import annulus_grid, random_annulus_samples, shrink

__all__ = ["annulus_grid", "random_annulus_samples", "shrink"]
