"""Command-line front end for the surface walks toolkit."""
