'''Quasi-front simulator and analyzer for a square lattice with Voigt bonds.'''
