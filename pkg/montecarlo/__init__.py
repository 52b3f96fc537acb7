# Monte Carlo package
