from .api import BACKEND, cyclo_mul, tensor_convolve, torus_scan

__all__ = ["BACKEND", "cyclo_mul", "tensor_convolve", "torus_scan"]
