# Templates package

