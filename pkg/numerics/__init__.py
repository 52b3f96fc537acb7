# Numerics package
