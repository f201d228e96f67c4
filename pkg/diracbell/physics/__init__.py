"""Lorentz kinematics, gamma matrices, spinors and spin observables."""
