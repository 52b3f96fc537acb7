# State package

