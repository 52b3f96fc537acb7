# Mobility package
