# Stages package
